#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lrc {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
///
/// Sized for exact counting at desk scale (permanent coefficients, binomial
/// tables, rational probabilities), not for cryptographic workloads. Division
/// is schoolbook shift-subtract.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);

    bool is_zero() const { return limbs_.empty(); }
    /// -1, 0 or +1.
    int signum() const;
    bool is_negative() const { return neg_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt &operator+=(const BigInt &rhs);
    BigInt &operator-=(const BigInt &rhs);
    BigInt &operator*=(const BigInt &rhs);

    friend BigInt operator+(BigInt a, const BigInt &b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt &b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt &b) { return a *= b; }

    /// Truncated division: quotient rounds toward zero, remainder takes the
    /// dividend's sign. Throws ParamError on division by zero.
    static void divmod(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r);
    BigInt operator/(const BigInt &rhs) const;
    BigInt operator%(const BigInt &rhs) const;

    bool operator==(const BigInt &rhs) const;
    bool operator!=(const BigInt &rhs) const { return !(*this == rhs); }
    bool operator<(const BigInt &rhs) const;
    bool operator<=(const BigInt &rhs) const { return !(rhs < *this); }
    bool operator>(const BigInt &rhs) const { return rhs < *this; }
    bool operator>=(const BigInt &rhs) const { return !(*this < rhs); }

    /// |this| mod m for m >= 1.
    uint32_t mod_u32(uint32_t m) const;

    /// Value as uint64_t; throws TooLarge if negative or out of range.
    uint64_t to_u64() const;

    std::string to_string() const;
    double to_double() const;

  private:
    bool neg_ = false;
    std::vector<uint32_t> limbs_; // little-endian, trimmed; empty == zero

    void trim();
    static int cmp_mag(const BigInt &a, const BigInt &b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b);
    void shl1();
};

BigInt gcd(BigInt a, BigInt b);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(long long n, long long k);

} // namespace lrc
