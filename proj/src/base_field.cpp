#include "lrc/base_field.hpp"

#include "lrc/errors.hpp"

namespace lrc {

namespace {

bool is_prime_u32(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

BaseField::BaseField(FieldKind kind, uint32_t order, uint32_t red_poly)
    : kind_(kind), order_(order), red_poly_(red_poly) {}

BaseField BaseField::prime(uint32_t p) {
    if (!is_prime_u32(p)) throw ParamError("prime field order " + std::to_string(p) + " is not prime");
    return BaseField(FieldKind::Prime, p, 0);
}

BaseField BaseField::gf2(unsigned s) {
    uint32_t poly;
    switch (s) {
    case 4: poly = 0x13; break;
    case 8: poly = 0x11B; break;
    case 16: poly = 0x1100B; break;
    default: throw ParamError("gf2:" + std::to_string(s) + " unsupported (s must be 4, 8 or 16)");
    }
    BaseField f(FieldKind::Binary, 1u << s, poly);
    f.build_tables(s);
    return f;
}

BaseField BaseField::parse(const std::string &descriptor) {
    auto colon = descriptor.find(':');
    if (colon != std::string::npos) {
        const std::string head = descriptor.substr(0, colon);
        const std::string tail = descriptor.substr(colon + 1);
        try {
            if (head == "prime") return prime(static_cast<uint32_t>(std::stoul(tail)));
            if (head == "gf2") return gf2(static_cast<unsigned>(std::stoul(tail)));
        } catch (const std::logic_error &) {
            // fall through to the ParamError below
        }
    }
    throw ParamError("bad field descriptor '" + descriptor + "' (expected prime:<p> or gf2:<s>)");
}

std::string BaseField::descriptor() const {
    if (kind_ == FieldKind::Prime) return "prime:" + std::to_string(order_);
    unsigned s = 0;
    while ((1u << s) != order_) ++s;
    return "gf2:" + std::to_string(s);
}

uint32_t BaseField::clmul_reduce(uint32_t a, uint32_t b, uint32_t poly, unsigned s) {
    uint32_t acc = 0;
    while (b) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1u << s)) a ^= poly;
    }
    return acc;
}

void BaseField::build_tables(unsigned s) {
    auto tab = std::make_shared<BinTables>();
    const uint32_t n = order_;
    tab->log.assign(n, 0);
    tab->exp.assign(2 * (n - 1), 0);
    // scan for a multiplicative generator; x itself is not primitive for
    // every reduction polynomial (e.g. not for x^8+x^4+x^3+x+1)
    for (uint32_t g = 2; g < n; ++g) {
        uint32_t cur = 1;
        bool ok = true;
        for (uint32_t i = 0; i < n - 1; ++i) {
            if (cur == 1 && i != 0) {
                ok = false; // period divides i < n-1
                break;
            }
            tab->exp[i] = cur;
            tab->log[cur] = i;
            cur = clmul_reduce(cur, g, red_poly_, s);
        }
        if (ok && cur == 1) {
            for (uint32_t i = 0; i < n - 1; ++i) tab->exp[n - 1 + i] = tab->exp[i];
            tab_ = std::move(tab);
            return;
        }
    }
    throw ParamError("no multiplicative generator found (non-irreducible reduction polynomial?)");
}

uint32_t BaseField::add(uint32_t a, uint32_t b) const {
    if (kind_ == FieldKind::Binary) return a ^ b;
    uint32_t s = a + b;
    return s >= order_ ? s - order_ : s;
}

uint32_t BaseField::sub(uint32_t a, uint32_t b) const {
    if (kind_ == FieldKind::Binary) return a ^ b;
    return a >= b ? a - b : a + order_ - b;
}

uint32_t BaseField::neg(uint32_t a) const {
    if (kind_ == FieldKind::Binary) return a;
    return a == 0 ? 0 : order_ - a;
}

uint32_t BaseField::mul(uint32_t a, uint32_t b) const {
    if (kind_ == FieldKind::Binary) {
        if (a == 0 || b == 0) return 0;
        return tab_->exp[tab_->log[a] + tab_->log[b]];
    }
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % order_);
}

uint32_t BaseField::inv(uint32_t a) const {
    if (a == 0) throw ZeroInverse("inverse of zero in " + descriptor());
    if (kind_ == FieldKind::Binary) {
        uint32_t l = tab_->log[a];
        return tab_->exp[(order_ - 1 - l) % (order_ - 1)];
    }
    return pow(a, order_ - 2);
}

uint32_t BaseField::pow(uint32_t a, uint64_t e) const {
    uint32_t out = 1;
    uint32_t base = a;
    while (e) {
        if (e & 1u) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

uint32_t BaseField::element(uint32_t index) const {
    if (index >= order_) throw ParamError("field element index out of range");
    return index;
}

void BaseField::check_element(uint32_t a) const {
    if (a >= order_) throw FieldMismatch("value " + std::to_string(a) + " outside " + descriptor());
}

bool BaseField::operator==(const BaseField &rhs) const {
    return kind_ == rhs.kind_ && order_ == rhs.order_ && red_poly_ == rhs.red_poly_;
}

} // namespace lrc
