#include "lrc/bigint.hpp"

#include "lrc/errors.hpp"

#include <utility>

namespace lrc {

BigInt::BigInt(long long v) {
    neg_ = v < 0;
    // avoid UB on LLONG_MIN
    uint64_t mag = neg_ ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    if (mag != 0) limbs_.push_back(static_cast<uint32_t>(mag));
    if (mag >> 32) limbs_.push_back(static_cast<uint32_t>(mag >> 32));
}

int BigInt::signum() const {
    if (limbs_.empty()) return 0;
    return neg_ ? -1 : 1;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.limbs_.empty()) out.neg_ = !out.neg_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.neg_ = false;
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const BigInt &a, const BigInt &b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    const std::vector<uint32_t> &lo = a.size() >= b.size() ? b : a;
    const std::vector<uint32_t> &hi = a.size() >= b.size() ? a : b;
    std::vector<uint32_t> out(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    out[hi.size()] = static_cast<uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt &BigInt::operator+=(const BigInt &rhs) {
    if (neg_ == rhs.neg_) {
        limbs_ = add_mag(limbs_, rhs.limbs_);
    } else {
        int c = cmp_mag(*this, rhs);
        if (c == 0) {
            limbs_.clear();
            neg_ = false;
        } else if (c > 0) {
            limbs_ = sub_mag(limbs_, rhs.limbs_);
        } else {
            limbs_ = sub_mag(rhs.limbs_, limbs_);
            neg_ = rhs.neg_;
        }
    }
    trim();
    return *this;
}

BigInt &BigInt::operator-=(const BigInt &rhs) { return *this += -rhs; }

BigInt &BigInt::operator*=(const BigInt &rhs) {
    if (is_zero() || rhs.is_zero()) {
        limbs_.clear();
        neg_ = false;
        return *this;
    }
    std::vector<uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
            uint64_t cur = out[i + j] + static_cast<uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t pos = i + rhs.limbs_.size();
        while (carry) {
            uint64_t cur = out[pos] + carry;
            out[pos] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++pos;
        }
    }
    limbs_ = std::move(out);
    neg_ = neg_ != rhs.neg_;
    trim();
    return *this;
}

void BigInt::shl1() {
    uint32_t carry = 0;
    for (auto &w : limbs_) {
        uint32_t next = w >> 31;
        w = (w << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

void BigInt::divmod(const BigInt &a, const BigInt &b, BigInt &q, BigInt &r) {
    if (b.is_zero()) throw ParamError("BigInt division by zero");
    BigInt q_out, r_out;
    const size_t bits = a.limbs_.size() * 32;
    q_out.limbs_.assign(a.limbs_.size(), 0);
    for (size_t i = bits; i-- > 0;) {
        r_out.shl1();
        uint32_t bit = (a.limbs_[i / 32] >> (i % 32)) & 1u;
        if (bit) {
            if (r_out.limbs_.empty())
                r_out.limbs_.push_back(1);
            else
                r_out.limbs_[0] |= 1u;
        }
        if (cmp_mag(r_out, b) >= 0) {
            r_out.limbs_ = sub_mag(r_out.limbs_, b.limbs_);
            q_out.limbs_[i / 32] |= 1u << (i % 32);
        }
    }
    q_out.neg_ = a.neg_ != b.neg_;
    r_out.neg_ = a.neg_;
    q_out.trim();
    r_out.trim();
    q = std::move(q_out);
    r = std::move(r_out);
}

BigInt BigInt::operator/(const BigInt &rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt &rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return r;
}

bool BigInt::operator==(const BigInt &rhs) const { return neg_ == rhs.neg_ && limbs_ == rhs.limbs_; }

bool BigInt::operator<(const BigInt &rhs) const {
    if (neg_ != rhs.neg_) return neg_;
    int c = cmp_mag(*this, rhs);
    return neg_ ? c > 0 : c < 0;
}

uint32_t BigInt::mod_u32(uint32_t m) const {
    if (m == 0) throw ParamError("BigInt mod 0");
    uint64_t r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) r = ((r << 32) | limbs_[i]) % m;
    return static_cast<uint32_t>(r);
}

uint64_t BigInt::to_u64() const {
    if (neg_ || limbs_.size() > 2) throw TooLarge("BigInt does not fit in uint64_t");
    uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
        // divide magnitude by 1e9, collect remainder digits
        uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::string chunk = std::to_string(rem);
        if (!work.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
        out = chunk + out;
    }
    return neg_ ? "-" + out : out;
}

double BigInt::to_double() const {
    double v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return neg_ ? -v : v;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt out(1);
    for (long long i = 1; i <= k; ++i) {
        out *= BigInt(n - k + i);
        BigInt q, r;
        BigInt::divmod(out, BigInt(i), q, r); // exact at every step
        out = std::move(q);
    }
    return out;
}

} // namespace lrc
