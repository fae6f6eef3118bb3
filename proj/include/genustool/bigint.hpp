#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace genustool {

// Arbitrary-precision signed integer, sign + base-2^32 magnitude.
// Quotients truncate toward zero, so (a/b)*b + a%b == a.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long long v);

    static BigInt from_string(std::string_view s);
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }
    int sign() const { return sign_; }

    bool fits_int64() const;
    long long to_int64() const;  // throws std::overflow_error if out of range

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);
    BigInt& operator%=(const BigInt& rhs);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    // Division that must be exact; throws std::logic_error on a remainder.
    static BigInt divexact(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt lcm(const BigInt& a, const BigInt& b);
    static BigInt pow(const BigInt& base, unsigned long long exp);

    bool operator==(const BigInt& rhs) const = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    int sign_ = 0;                  // -1, 0, +1
    std::vector<uint32_t> mag_;     // little-endian limbs, no leading zeros

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace genustool
