#pragma once

#include "lrc/base_field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lrc {

/// Element of an extension field: dense coefficient vector over the base
/// field, length equal to the extension degree, constant term first.
using ExtElem = std::vector<uint32_t>;

/// The extension field base[x]/(modulus) with distinguished generator
/// omega = the residue class of x.
///
/// The modulus is monic and irreducible (validated on construction), so the
/// minimal polynomial of omega over the base field is the modulus itself and
/// has degree exactly equal to the extension degree. Note that omega is a
/// *field generator* in this structural sense; it is not required to be a
/// primitive element of the multiplicative group, and none of the algebra in
/// this library relies on primitivity.
///
/// degree == 1 is allowed and wraps the base field itself (elements are
/// single-coefficient vectors), which lets matrix code run over plain base
/// fields without a separate code path.
class ExtField {
  public:
    /// Validates that the modulus is monic of length degree+1, has in-range
    /// coefficients and is irreducible over the base field.
    ExtField(BaseField base, int degree, std::vector<uint32_t> modulus);

    /// Builds the field using the canonical modulus from find_irreducible.
    static ExtField make(const BaseField &base, int degree);

    const BaseField &base() const { return base_; }
    int degree() const { return degree_; }
    const std::vector<uint32_t> &modulus() const { return modulus_; }

    ExtElem zero() const { return ExtElem(degree_, 0); }
    ExtElem one() const;
    ExtElem omega() const;
    ExtElem from_base(uint32_t a) const;

    bool is_zero(const ExtElem &a) const;
    bool is_one(const ExtElem &a) const;

    ExtElem add(const ExtElem &a, const ExtElem &b) const;
    ExtElem sub(const ExtElem &a, const ExtElem &b) const;
    ExtElem neg(const ExtElem &a) const;
    ExtElem mul(const ExtElem &a, const ExtElem &b) const;
    ExtElem scale(uint32_t c, const ExtElem &a) const; // base scalar times element

    /// Extended Euclidean inverse. Throws ZeroInverse when a == 0.
    ExtElem inv(const ExtElem &a) const;

    ExtElem pow(const ExtElem &a, uint64_t e) const;
    ExtElem omega_pow(uint64_t j) const;

    /// Comma-separated coefficients, constant term first: "1,0,2".
    std::string elem_to_string(const ExtElem &a) const;
    ExtElem elem_from_string(const std::string &text) const;

    bool operator==(const ExtField &rhs) const;
    bool operator!=(const ExtField &rhs) const { return !(*this == rhs); }

  private:
    void check(const ExtElem &a) const;

    BaseField base_;
    int degree_;
    std::vector<uint32_t> modulus_;
};

/// The first monic irreducible polynomial of the given degree over the base
/// field under the canonical candidate ordering: ascending total coefficient
/// weight (integer sum of the non-leading coefficients), ties broken by
/// ascending base-q integer code. The result is deterministic for a given
/// (field, degree) pair and tends to have small, sparse coefficients.
/// Returned as a coefficient vector of length degree+1, constant term first,
/// leading coefficient 1.
///
/// Weight-first ordering matters: plain code-ascending enumeration stalls on
/// binary extension fields, where the entire x^e + bx + c family (q^2
/// candidates) is reducible for e >= 4 because x^e + bx is additive.
std::vector<uint32_t> find_irreducible(const BaseField &base, int degree);

/// Rabin irreducibility test: f of degree e is irreducible over F_q iff
/// x^(q^e) == x (mod f) and gcd(x^(q^(e/l)) - x, f) == 1 for every prime
/// l dividing e. The polynomial must be monic with in-range coefficients.
bool is_irreducible(const BaseField &base, const std::vector<uint32_t> &poly);

} // namespace lrc
