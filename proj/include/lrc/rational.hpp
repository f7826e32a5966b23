#pragma once

#include "lrc/bigint.hpp"

#include <string>

namespace lrc {

/// Exact rational number. Always stored normalized: positive denominator,
/// gcd(numerator, denominator) == 1, zero as 0/1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt &num() const { return num_; }
    const BigInt &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    Rational operator-() const;
    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);

    bool operator==(const Rational &rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
    bool operator!=(const Rational &rhs) const { return !(*this == rhs); }
    bool operator<(const Rational &rhs) const;
    bool operator<=(const Rational &rhs) const { return *this < rhs || *this == rhs; }
    bool operator>(const Rational &rhs) const { return rhs < *this; }
    bool operator>=(const Rational &rhs) const { return rhs <= *this; }

    /// Exponent must be non-negative.
    Rational pow(unsigned e) const;

    double to_double() const { return num_.to_double() / den_.to_double(); }
    std::string to_string() const; // "num/den", or "num" when den == 1

  private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

} // namespace lrc
