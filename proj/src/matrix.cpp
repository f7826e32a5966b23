#include "lrc/matrix.hpp"

#include "lrc/errors.hpp"

#include <istream>
#include <numeric>
#include <sstream>

namespace lrc {

Matrix::Matrix(ExtField field, int rows, int cols) : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    entries_.assign(static_cast<size_t>(rows) * cols, field_.zero());
}

ExtElem Matrix::column_dot(int j, std::span<const ExtElem> x) const {
    if (static_cast<int>(x.size()) != rows_) throw ShapeError("vector length does not match row count");
    ExtElem acc = field_.zero();
    for (int i = 0; i < rows_; ++i) {
        if (field_.is_zero(at(i, j))) continue;
        acc = field_.add(acc, field_.mul(x[i], at(i, j)));
    }
    return acc;
}

Matrix Matrix::identity(const ExtField &field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

bool Matrix::operator==(const Matrix &rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

Matrix mat_mul(const Matrix &a, const Matrix &b) {
    if (a.field() != b.field()) throw FieldMismatch("matrix product across different fields");
    if (a.cols() != b.rows()) throw ShapeError("inner dimensions do not match");
    const ExtField &F = a.field();
    Matrix out(F, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int l = 0; l < a.cols(); ++l) {
            const ExtElem &ail = a.at(i, l);
            if (F.is_zero(ail)) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (F.is_zero(b.at(l, j))) continue;
                out.at(i, j) = F.add(out.at(i, j), F.mul(ail, b.at(l, j)));
            }
        }
    }
    return out;
}

Matrix transpose(const Matrix &m) {
    Matrix out(m.field(), m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
    return out;
}

Matrix select_columns(const Matrix &m, std::span<const int> cols) {
    Matrix out(m.field(), m.rows(), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] < 0 || cols[j] >= m.cols()) throw ShapeError("column index out of range");
        for (int i = 0; i < m.rows(); ++i) out.at(i, static_cast<int>(j)) = m.at(i, cols[j]);
    }
    return out;
}

std::vector<ExtElem> column_of(const Matrix &m, int j) {
    std::vector<ExtElem> out;
    out.reserve(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) out.push_back(m.at(i, j));
    return out;
}

int rank_of(const Matrix &m, std::span<const int> cols) {
    const ExtField &F = m.field();
    // work on the transpose of the selected columns: eliminate row by row
    std::vector<std::vector<ExtElem>> rows;
    rows.reserve(cols.size());
    for (int c : cols) {
        if (c < 0 || c >= m.cols()) throw ShapeError("column index out of range");
        rows.push_back(column_of(m, c));
    }
    const int dim = m.rows();
    int rank = 0;
    std::vector<int> pivot_col;
    for (auto &row : rows) {
        // reduce against previously found pivot rows
        for (int p = 0; p < rank; ++p) {
            const ExtElem &c = row[pivot_col[p]];
            if (F.is_zero(c)) continue;
            ExtElem factor = c;
            for (int j = 0; j < dim; ++j) row[j] = F.sub(row[j], F.mul(factor, rows[p][j]));
        }
        int lead = -1;
        for (int j = 0; j < dim; ++j) {
            if (!F.is_zero(row[j])) {
                lead = j;
                break;
            }
        }
        if (lead < 0) continue;
        ExtElem inv_lead = F.inv(row[lead]);
        for (int j = 0; j < dim; ++j) row[j] = F.mul(row[j], inv_lead);
        std::swap(rows[rank], row);
        pivot_col.push_back(lead);
        ++rank;
        if (rank == dim) break;
    }
    return rank;
}

int rank_of(const Matrix &m) {
    std::vector<int> all(static_cast<size_t>(m.cols()));
    std::iota(all.begin(), all.end(), 0);
    return rank_of(m, all);
}

std::vector<ExtElem> solve_square(const Matrix &m, std::span<const ExtElem> y) {
    if (m.rows() != m.cols()) throw ShapeError("solve_square needs a square matrix");
    if (static_cast<int>(y.size()) != m.rows()) throw ShapeError("rhs length does not match");
    const ExtField &F = m.field();
    const int n = m.rows();
    // augmented elimination
    std::vector<std::vector<ExtElem>> a(n);
    for (int i = 0; i < n; ++i) {
        a[i] = std::vector<ExtElem>();
        a[i].reserve(n + 1);
        for (int j = 0; j < n; ++j) a[i].push_back(m.at(i, j));
        a[i].push_back(y[i]);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i) {
            if (!F.is_zero(a[i][col])) {
                piv = i;
                break;
            }
        }
        if (piv < 0) throw SingularMatrix("matrix is singular");
        std::swap(a[col], a[piv]);
        ExtElem inv_p = F.inv(a[col][col]);
        for (int j = col; j <= n; ++j) a[col][j] = F.mul(a[col][j], inv_p);
        for (int i = 0; i < n; ++i) {
            if (i == col || F.is_zero(a[i][col])) continue;
            ExtElem f = a[i][col];
            for (int j = col; j <= n; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[col][j]));
        }
    }
    std::vector<ExtElem> x;
    x.reserve(n);
    for (int i = 0; i < n; ++i) x.push_back(a[i][n]);
    return x;
}

Matrix inverse(const Matrix &m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse needs a square matrix");
    const ExtField &F = m.field();
    const int n = m.rows();
    std::vector<std::vector<ExtElem>> a(n);
    for (int i = 0; i < n; ++i) {
        a[i].reserve(2 * n);
        for (int j = 0; j < n; ++j) a[i].push_back(m.at(i, j));
        for (int j = 0; j < n; ++j) a[i].push_back(i == j ? F.one() : F.zero());
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i) {
            if (!F.is_zero(a[i][col])) {
                piv = i;
                break;
            }
        }
        if (piv < 0) throw SingularMatrix("matrix is singular");
        std::swap(a[col], a[piv]);
        ExtElem inv_p = F.inv(a[col][col]);
        for (int j = 0; j < 2 * n; ++j) a[col][j] = F.mul(a[col][j], inv_p);
        for (int i = 0; i < n; ++i) {
            if (i == col || F.is_zero(a[i][col])) continue;
            ExtElem f = a[i][col];
            for (int j = 0; j < 2 * n; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[col][j]));
        }
    }
    Matrix out(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = a[i][n + j];
    return out;
}

std::string dump_matrix_text(const Matrix &m) {
    const ExtField &F = m.field();
    std::string out;
    out += "field " + F.base().descriptor() + "\n";
    out += "modulus";
    for (size_t i = 0; i < F.modulus().size(); ++i) out += (i ? "," : " ") + std::to_string(F.modulus()[i]);
    out += "\nrows " + std::to_string(m.rows()) + "\ncols " + std::to_string(m.cols()) + "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += F.elem_to_string(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

namespace {

std::string expect_keyword_line(std::istream &in, const std::string &key) {
    std::string word, value;
    if (!(in >> word) || word != key || !(in >> value))
        throw ParamError("matrix dump: expected '" + key + " <value>' line");
    return value;
}

} // namespace

Matrix parse_matrix_text(std::istream &in) {
    const BaseField base = BaseField::parse(expect_keyword_line(in, "field"));
    const std::string mod_text = expect_keyword_line(in, "modulus");
    std::vector<uint32_t> modulus;
    std::stringstream ms(mod_text);
    std::string part;
    while (std::getline(ms, part, ',')) modulus.push_back(static_cast<uint32_t>(std::stoul(part)));
    if (modulus.size() < 2) throw ParamError("matrix dump: modulus needs degree >= 1");
    const ExtField F(base, static_cast<int>(modulus.size()) - 1, modulus);
    const int rows = std::stoi(expect_keyword_line(in, "rows"));
    const int cols = std::stoi(expect_keyword_line(in, "cols"));
    if (rows < 1 || cols < 1) throw ParamError("matrix dump: bad dimensions");
    Matrix m(F, rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            std::string entry;
            if (!(in >> entry)) throw ParamError("matrix dump: missing entries");
            m.at(i, j) = F.elem_from_string(entry);
        }
    }
    return m;
}

bool RankAccumulator::try_add(std::vector<ExtElem> column) {
    for (size_t p = 0; p < basis_.size(); ++p) {
        const ExtElem &c = column[pivots_[p]];
        if (field_.is_zero(c)) continue;
        ExtElem f = c;
        for (size_t j = 0; j < column.size(); ++j) column[j] = field_.sub(column[j], field_.mul(f, basis_[p][j]));
    }
    int lead = -1;
    for (size_t j = 0; j < column.size(); ++j) {
        if (!field_.is_zero(column[j])) {
            lead = static_cast<int>(j);
            break;
        }
    }
    if (lead < 0) return false;
    ExtElem inv_lead = field_.inv(column[lead]);
    for (auto &c : column) c = field_.mul(c, inv_lead);
    basis_.push_back(std::move(column));
    pivots_.push_back(lead);
    return true;
}

} // namespace lrc
