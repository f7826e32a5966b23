#pragma once

#include "lrc/bigint.hpp"
#include "lrc/ext_field.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lrc {

/// Polynomial in the formal variable omega with arbitrary-precision integer
/// coefficients, constant term first, no trailing zero coefficients.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(long long c);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt &coeff(size_t i) const;
    const BigInt &leading() const;
    bool is_monic() const;

    /// Adds c * omega^d in place.
    void add_term(size_t d, const BigInt &c);

    /// Specializes omega to a field element; integer coefficients embed via
    /// the field characteristic.
    ExtElem eval(const ExtField &F, const ExtElem &omega_value) const;

    /// Human-readable form like "w^2 + 2w + 1".
    std::string to_string() const;

    bool operator==(const IntPoly &rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPoly &rhs) const { return !(*this == rhs); }

  private:
    std::vector<BigInt> coeffs_;
    void trim();
};

/// Sparse 0/omega-power matrix: each entry is either absent (a structural
/// zero) or a non-negative exponent j standing for omega^j. This is exactly
/// the shape of the local-code generator patterns.
class PatternMatrix {
  public:
    PatternMatrix() : rows_(0), cols_(0) {}
    PatternMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::optional<uint64_t> &at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const std::optional<uint64_t> &at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    /// Largest exponent present; 0 for an all-zero pattern.
    uint64_t max_exponent() const;

    PatternMatrix select_cols(std::span<const int> cols) const;

    bool operator==(const PatternMatrix &rhs) const = default;

  private:
    int rows_;
    int cols_;
    std::vector<std::optional<uint64_t>> entries_;
};

/// Permanent of a (possibly non-square) pattern matrix with cols <= rows:
/// the sum over all injections of columns into rows of the product of the
/// selected entries, collected as an integer polynomial in omega. Throws
/// ShapeError when cols > rows.
IntPoly intpoly_permanent(const PatternMatrix &b);

} // namespace lrc
