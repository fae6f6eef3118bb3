#pragma once

#include <compare>
#include <string>

#include "genustool/bigint.hpp"

namespace genustool {

// Exact rational number, always normalized: denominator > 0, gcd(|num|, den) = 1.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(long long n) : num_(n), den_(1) {}
    BigRational(int n) : num_(n), den_(1) {}
    BigRational(BigInt n, BigInt d);

    static BigRational from_string(std::string_view s);  // "p" or "p/q"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    const BigInt& as_integer() const;  // throws if not integral

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    bool operator==(const BigRational& rhs) const = default;
    std::strong_ordering operator<=>(const BigRational& rhs) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigRational& v);

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

}  // namespace genustool
