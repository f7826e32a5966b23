#pragma once

#include "lrc/ext_field.hpp"

#include <span>
#include <vector>

namespace lrc {

/// Dense row-major matrix over an extension field. Plain value type; all
/// linear algebra on it is exact.
class Matrix {
  public:
    Matrix(ExtField field, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const ExtField &field() const { return field_; }

    ExtElem &at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const ExtElem &at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    ExtElem column_dot(int j, std::span<const ExtElem> x) const; // sum_i x[i] * a(i,j)

    static Matrix identity(const ExtField &field, int n);

    bool operator==(const Matrix &rhs) const;
    bool operator!=(const Matrix &rhs) const { return !(*this == rhs); }

  private:
    ExtField field_;
    int rows_;
    int cols_;
    std::vector<ExtElem> entries_;
};

Matrix mat_mul(const Matrix &a, const Matrix &b);
Matrix transpose(const Matrix &m);

/// Submatrix formed by the given columns, in the given order.
Matrix select_columns(const Matrix &m, std::span<const int> cols);

/// Rank of the selected columns by Gaussian elimination.
int rank_of(const Matrix &m, std::span<const int> cols);
int rank_of(const Matrix &m);

/// Solves M z = y for square M. Throws SingularMatrix when rank < dimension.
std::vector<ExtElem> solve_square(const Matrix &m, std::span<const ExtElem> y);

/// Throws SingularMatrix when not invertible.
Matrix inverse(const Matrix &m);

/// Incremental column-space builder: feed candidate columns, keeping those
/// that grow the span. Used for greedy pivot selection.
class RankAccumulator {
  public:
    explicit RankAccumulator(const ExtField &field) : field_(field) {}

    int rank() const { return static_cast<int>(basis_.size()); }

    /// Returns true (and absorbs the column) iff it is independent of the
    /// columns accepted so far. The column is a vector of matrix-row entries.
    bool try_add(std::vector<ExtElem> column);

  private:
    ExtField field_;
    std::vector<std::vector<ExtElem>> basis_; // reduced: basis_[i] has pivot at pivots_[i], scaled to 1
    std::vector<int> pivots_;
};

std::vector<ExtElem> column_of(const Matrix &m, int j);

/// Plain-text matrix form:
///   field prime:13
///   modulus 1,1,0,0,1
///   rows 3
///   cols 9
/// followed by one line per row, entries space-separated, each entry a
/// comma-separated coefficient tuple (constant term first).
std::string dump_matrix_text(const Matrix &m);
Matrix parse_matrix_text(std::istream &in);

} // namespace lrc
