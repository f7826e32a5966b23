#include "lrc/ext_field.hpp"

#include "lrc/errors.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace lrc {

namespace {

// Dense polynomials over the base field, coefficient of x^0 first, with
// trailing zeros allowed. Used for modulus validation and inversion; the
// hot-path element arithmetic in ExtField keeps its own fixed-length layout.
using Poly = std::vector<uint32_t>;

int poly_deg(const Poly &p) {
    for (size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

void poly_trim(Poly &p) { p.resize(static_cast<size_t>(poly_deg(p) + 1)); }

Poly poly_mul(const BaseField &F, const Poly &a, const Poly &b) {
    if (poly_deg(a) < 0 || poly_deg(b) < 0) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(out);
    return out;
}

// a mod b, b nonzero
Poly poly_mod(const BaseField &F, Poly a, const Poly &b) {
    int db = poly_deg(b);
    uint32_t lead_inv = F.inv(b[static_cast<size_t>(db)]);
    int da = poly_deg(a);
    while (da >= db) {
        uint32_t c = F.mul(a[static_cast<size_t>(da)], lead_inv);
        if (c != 0) {
            for (int j = 0; j <= db; ++j) {
                size_t pos = static_cast<size_t>(da - db + j);
                a[pos] = F.sub(a[pos], F.mul(c, b[static_cast<size_t>(j)]));
            }
        }
        --da;
        while (da >= 0 && a[static_cast<size_t>(da)] == 0) --da;
    }
    a.resize(static_cast<size_t>(da + 1));
    return a;
}

Poly poly_gcd(const BaseField &F, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (poly_deg(b) >= 0) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_mulmod(const BaseField &F, const Poly &a, const Poly &b, const Poly &mod) {
    return poly_mod(F, poly_mul(F, a, b), mod);
}

Poly poly_powmod(const BaseField &F, Poly a, uint64_t e, const Poly &mod) {
    Poly out{1};
    a = poly_mod(F, std::move(a), mod);
    while (e) {
        if (e & 1u) out = poly_mulmod(F, out, a, mod);
        a = poly_mulmod(F, a, a, mod);
        e >>= 1;
    }
    return out;
}

// The canonical scan and the modulus-validation results are memoized per
// process: degree-49 searches are expensive and tests rebuild the same
// fields constantly. Entries are immutable once inserted.
std::mutex g_field_cache_mutex;
std::map<std::pair<std::string, int>, std::vector<uint32_t>> g_first_irreducible;
std::set<std::pair<std::string, std::vector<uint32_t>>> g_validated_moduli;

bool poly_has_root(const BaseField &F, const std::vector<uint32_t> &poly) {
    for (uint32_t a = 0; a < F.order(); ++a) {
        uint32_t acc = 0;
        for (size_t i = poly.size(); i-- > 0;) acc = F.add(F.mul(acc, a), poly[i]);
        if (acc == 0) return true;
    }
    return false;
}

bool candidate_is_irreducible(const BaseField &base, const std::vector<uint32_t> &cand, int degree) {
    // root scan first: for small fields it rejects most candidates far
    // cheaper than the full test (any root means a linear factor)
    if (degree > 1 && base.order() <= 1024 && poly_has_root(base, cand)) return false;
    return is_irreducible(base, cand);
}

// Walks one weight shell in ascending-code order: digits at positions
// pos..1 are chosen high-to-low, the constant term absorbs the remainder.
bool shell_scan(const BaseField &base, std::vector<uint32_t> &cand, int pos, uint64_t remaining,
                int degree) {
    const uint64_t top = base.order() - 1;
    if (pos == 0) {
        if (remaining > top) return false;
        cand[0] = static_cast<uint32_t>(remaining);
        return candidate_is_irreducible(base, cand, degree);
    }
    const uint64_t lower_capacity = top * static_cast<uint64_t>(pos);
    uint64_t v = remaining > lower_capacity ? remaining - lower_capacity : 0;
    for (; v <= top && v <= remaining; ++v) {
        cand[static_cast<size_t>(pos)] = static_cast<uint32_t>(v);
        if (shell_scan(base, cand, pos - 1, remaining - v, degree)) return true;
    }
    cand[static_cast<size_t>(pos)] = 0;
    return false;
}

} // namespace

bool is_irreducible(const BaseField &base, const std::vector<uint32_t> &poly) {
    const int e = poly_deg(poly);
    if (e < 1) return false;
    if (static_cast<size_t>(e + 1) != poly.size() || poly.back() != 1)
        throw ParamError("is_irreducible requires a trimmed monic polynomial");
    for (uint32_t c : poly) base.check_element(c);
    if (e == 1) return true;

    const uint64_t q = base.order();
    // The deciding conditions are x^(q^e) == x together with
    // gcd(x^(q^(e/l)) - x, f) == 1 for the prime divisors l of e. A nonzero
    // gcd at *any* intermediate step j <= e/2 already exposes a factor of
    // degree dividing j, so the walk bails out early on most reducible
    // inputs; the prime-divisor checkpoints sit below e/2 and are covered.
    Poly x{0, 1};
    Poly t = x; // x^(q^j) mod poly, starting at j = 0
    for (int j = 1; j <= e; ++j) {
        t = poly_powmod(base, t, q, poly);
        if (j <= e / 2) {
            Poly diff = t;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = base.sub(diff[1], 1);
            poly_trim(diff);
            Poly g = poly_gcd(base, poly, diff);
            if (poly_deg(g) != 0) return false;
        }
    }
    return poly_deg(t) == 1 && t[0] == 0 && t[1] == 1;
}

std::vector<uint32_t> find_irreducible(const BaseField &base, int degree) {
    if (degree < 1) throw ParamError("find_irreducible needs degree >= 1");
    const auto key = std::make_pair(base.descriptor(), degree);
    {
        std::lock_guard<std::mutex> lock(g_field_cache_mutex);
        auto it = g_first_irreducible.find(key);
        if (it != g_first_irreducible.end()) return it->second;
    }
    // Candidates are ordered by total coefficient weight (the integer sum of
    // the non-leading digits), ties broken by ascending base-q code. Plain
    // code-ascending order is a trap for binary extension fields: every
    // x^e + bx + c is an additive polynomial plus a constant there, which is
    // never irreducible for e >= 4, so that order would crawl through q^2
    // doomed candidates before reaching a usable one. Weight shells reach
    // mixed-coefficient candidates immediately and keep the result canonical.
    const uint64_t max_weight = static_cast<uint64_t>(base.order() - 1) * degree;
    std::vector<uint32_t> cand(static_cast<size_t>(degree) + 1, 0);
    cand.back() = 1;
    for (uint64_t weight = 0; weight <= max_weight; ++weight) {
        if (shell_scan(base, cand, degree - 1, weight, degree)) {
            std::lock_guard<std::mutex> lock(g_field_cache_mutex);
            g_first_irreducible.emplace(key, cand);
            g_validated_moduli.emplace(base.descriptor(), cand);
            return cand;
        }
    }
    throw ParamError("no irreducible polynomial found"); // unreachable: they exist for every degree
}

ExtField::ExtField(BaseField base, int degree, std::vector<uint32_t> modulus)
    : base_(std::move(base)), degree_(degree), modulus_(std::move(modulus)) {
    if (degree_ < 1) throw ParamError("extension degree must be >= 1");
    if (modulus_.size() != static_cast<size_t>(degree_) + 1)
        throw ParamError("modulus length must be degree+1");
    if (modulus_.back() != 1) throw ParamError("modulus must be monic");
    for (uint32_t c : modulus_) base_.check_element(c);
    const auto key = std::make_pair(base_.descriptor(), modulus_);
    {
        std::lock_guard<std::mutex> lock(g_field_cache_mutex);
        if (g_validated_moduli.count(key)) return;
    }
    if (!is_irreducible(base_, modulus_)) throw ParamError("modulus is not irreducible over the base field");
    std::lock_guard<std::mutex> lock(g_field_cache_mutex);
    g_validated_moduli.insert(key);
}

ExtField ExtField::make(const BaseField &base, int degree) {
    return ExtField(base, degree, find_irreducible(base, degree));
}

ExtElem ExtField::one() const {
    ExtElem a(degree_, 0);
    a[0] = 1;
    return a;
}

ExtElem ExtField::omega() const {
    // the residue class of x; for degree 1 this reduces to -modulus[0]
    if (degree_ == 1) return ExtElem{base_.neg(modulus_[0])};
    ExtElem a(degree_, 0);
    a[1] = 1;
    return a;
}

ExtElem ExtField::from_base(uint32_t a) const {
    base_.check_element(a);
    ExtElem out(degree_, 0);
    out[0] = a;
    return out;
}

void ExtField::check(const ExtElem &a) const {
    if (a.size() != static_cast<size_t>(degree_))
        throw FieldMismatch("element has " + std::to_string(a.size()) + " coefficients, field degree is " +
                            std::to_string(degree_));
}

bool ExtField::is_zero(const ExtElem &a) const {
    check(a);
    for (uint32_t c : a)
        if (c != 0) return false;
    return true;
}

bool ExtField::is_one(const ExtElem &a) const {
    check(a);
    if (a[0] != 1) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

ExtElem ExtField::add(const ExtElem &a, const ExtElem &b) const {
    check(a);
    check(b);
    ExtElem out(degree_);
    for (int i = 0; i < degree_; ++i) out[i] = base_.add(a[i], b[i]);
    return out;
}

ExtElem ExtField::sub(const ExtElem &a, const ExtElem &b) const {
    check(a);
    check(b);
    ExtElem out(degree_);
    for (int i = 0; i < degree_; ++i) out[i] = base_.sub(a[i], b[i]);
    return out;
}

ExtElem ExtField::neg(const ExtElem &a) const {
    check(a);
    ExtElem out(degree_);
    for (int i = 0; i < degree_; ++i) out[i] = base_.neg(a[i]);
    return out;
}

ExtElem ExtField::scale(uint32_t c, const ExtElem &a) const {
    check(a);
    base_.check_element(c);
    ExtElem out(degree_);
    for (int i = 0; i < degree_; ++i) out[i] = base_.mul(c, a[i]);
    return out;
}

ExtElem ExtField::mul(const ExtElem &a, const ExtElem &b) const {
    check(a);
    check(b);
    // schoolbook product followed by one reduction pass against the monic modulus
    std::vector<uint32_t> tmp(2 * static_cast<size_t>(degree_) - 1, 0);
    for (int i = 0; i < degree_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < degree_; ++j) {
            if (b[j] == 0) continue;
            tmp[i + j] = base_.add(tmp[i + j], base_.mul(a[i], b[j]));
        }
    }
    for (size_t i = tmp.size(); i-- > static_cast<size_t>(degree_);) {
        uint32_t c = tmp[i];
        if (c == 0) continue;
        tmp[i] = 0;
        for (int j = 0; j < degree_; ++j) {
            size_t pos = i - degree_ + j;
            tmp[pos] = base_.sub(tmp[pos], base_.mul(c, modulus_[j]));
        }
    }
    tmp.resize(static_cast<size_t>(degree_));
    return tmp;
}

ExtElem ExtField::inv(const ExtElem &a) const {
    if (is_zero(a)) throw ZeroInverse("inverse of zero extension element");
    // extended Euclid on (a, modulus): maintain u with u*a == r (mod modulus)
    Poly r0 = modulus_;
    Poly r1 = a;
    poly_trim(r1);
    Poly u0{}; // coefficient of a for r0 = modulus: 0
    Poly u1{1};
    while (poly_deg(r1) > 0) {
        int d0 = poly_deg(r0);
        int d1 = poly_deg(r1);
        uint32_t lead_inv = base_.inv(r1[static_cast<size_t>(d1)]);
        Poly q(static_cast<size_t>(d0 - d1) + 1, 0);
        Poly rem = r0;
        for (int i = d0; i >= d1; --i) {
            uint32_t c = base_.mul(rem[static_cast<size_t>(i)], lead_inv);
            q[static_cast<size_t>(i - d1)] = c;
            if (c == 0) continue;
            for (int j = 0; j <= d1; ++j) {
                size_t pos = static_cast<size_t>(i - d1 + j);
                rem[pos] = base_.sub(rem[pos], base_.mul(c, r1[static_cast<size_t>(j)]));
            }
        }
        poly_trim(rem);
        // u_next = u0 - q*u1
        Poly qu = poly_mul(base_, q, u1);
        Poly u_next = u0;
        if (u_next.size() < qu.size()) u_next.resize(qu.size(), 0);
        for (size_t i = 0; i < qu.size(); ++i) u_next[i] = base_.sub(u_next[i], qu[i]);
        poly_trim(u_next);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u_next);
    }
    if (poly_deg(r1) != 0) throw ZeroInverse("element not invertible (modulus not irreducible?)");
    uint32_t scale_by = base_.inv(r1[0]);
    ExtElem out(degree_, 0);
    for (size_t i = 0; i < u1.size(); ++i) out[i] = base_.mul(u1[i], scale_by);
    return out;
}

ExtElem ExtField::pow(const ExtElem &a, uint64_t e) const {
    ExtElem out = one();
    ExtElem base = a;
    while (e) {
        if (e & 1u) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

ExtElem ExtField::omega_pow(uint64_t j) const { return pow(omega(), j); }

std::string ExtField::elem_to_string(const ExtElem &a) const {
    check(a);
    std::string out;
    for (int i = 0; i < degree_; ++i) {
        if (i) out += ',';
        out += std::to_string(a[i]);
    }
    return out;
}

ExtElem ExtField::elem_from_string(const std::string &text) const {
    ExtElem out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) throw ParamError("empty coefficient in '" + text + "'");
        out.push_back(static_cast<uint32_t>(std::stoul(part)));
    }
    check(out);
    for (uint32_t c : out) base_.check_element(c);
    return out;
}

bool ExtField::operator==(const ExtField &rhs) const {
    return base_ == rhs.base_ && degree_ == rhs.degree_ && modulus_ == rhs.modulus_;
}

} // namespace lrc
