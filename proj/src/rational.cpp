#include "lrc/rational.hpp"

#include "lrc/errors.hpp"

namespace lrc {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void Rational::normalize() {
    if (den_.is_zero()) throw ParamError("rational with zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational &a, const Rational &b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }

Rational operator/(const Rational &a, const Rational &b) {
    if (b.is_zero()) throw ParamError("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool Rational::operator<(const Rational &rhs) const { return num_ * rhs.den_ < rhs.num_ * den_; }

Rational Rational::pow(unsigned e) const {
    Rational out(1);
    Rational base = *this;
    while (e) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

} // namespace lrc
