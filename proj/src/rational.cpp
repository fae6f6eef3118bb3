#include "genustool/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace genustool {

BigRational::BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("BigRational: zero denominator");
    normalize();
}

void BigRational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = BigInt::divexact(num_, g);
        den_ = BigInt::divexact(den_, g);
    }
}

BigRational BigRational::from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return BigRational(BigInt::from_string(s));
    return BigRational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

const BigInt& BigRational::as_integer() const {
    if (!is_integer()) throw std::logic_error("BigRational: value is not an integer");
    return num_;
}

BigRational BigRational::operator-() const {
    BigRational out = *this;
    out.num_ = -out.num_;
    return out;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering BigRational::operator<=>(const BigRational& rhs) const {
    return num_ * rhs.den_ <=> rhs.num_ * den_;
}

std::string BigRational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.to_string(); }

}  // namespace genustool
