#include "lrc/intpoly.hpp"

#include "lrc/errors.hpp"

namespace lrc {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(long long c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(BigInt(c));
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigInt &IntPoly::coeff(size_t i) const {
    static const BigInt zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const BigInt &IntPoly::leading() const {
    if (coeffs_.empty()) throw ParamError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == BigInt(1); }

void IntPoly::add_term(size_t d, const BigInt &c) {
    if (c.is_zero()) return;
    if (coeffs_.size() <= d) coeffs_.resize(d + 1, BigInt(0));
    coeffs_[d] += c;
    trim();
}

ExtElem IntPoly::eval(const ExtField &F, const ExtElem &omega_value) const {
    // Horner over the extension field; integer coefficients reduce modulo the
    // characteristic (with sign handled before embedding)
    const uint32_t p = F.base().characteristic();
    ExtElem acc = F.zero();
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = F.mul(acc, omega_value);
        uint32_t c = coeffs_[i].mod_u32(p);
        if (coeffs_[i].is_negative()) c = (p - c) % p;
        acc = F.add(acc, F.from_base(c));
    }
    return acc;
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string c = coeffs_[i].to_string();
        if (i == 0) {
            out += c;
        } else {
            if (c != "1") out += c;
            out += i == 1 ? "w" : "w^" + std::to_string(i);
        }
    }
    return out;
}

PatternMatrix::PatternMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative pattern dimension");
    entries_.assign(static_cast<size_t>(rows) * cols, std::nullopt);
}

uint64_t PatternMatrix::max_exponent() const {
    uint64_t m = 0;
    for (const auto &e : entries_)
        if (e && *e > m) m = *e;
    return m;
}

PatternMatrix PatternMatrix::select_cols(std::span<const int> cols) const {
    PatternMatrix out(rows_, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] < 0 || cols[j] >= cols_) throw ShapeError("pattern column index out of range");
        for (int i = 0; i < rows_; ++i) out.at(i, static_cast<int>(j)) = at(i, cols[j]);
    }
    return out;
}

namespace {

// walks all injections of columns into rows, accumulating omega-exponent sums
void permanent_rec(const PatternMatrix &b, int col, uint64_t used_rows, uint64_t exp_sum, IntPoly &acc) {
    if (col == b.cols()) {
        acc.add_term(exp_sum, BigInt(1));
        return;
    }
    for (int i = 0; i < b.rows(); ++i) {
        if (used_rows & (1ULL << i)) continue;
        const auto &e = b.at(i, col);
        if (!e) continue;
        permanent_rec(b, col + 1, used_rows | (1ULL << i), exp_sum + *e, acc);
    }
}

} // namespace

IntPoly intpoly_permanent(const PatternMatrix &b) {
    if (b.cols() > b.rows()) throw ShapeError("permanent requires cols <= rows");
    if (b.rows() > 63) throw TooLarge("pattern matrix too tall for permanent enumeration");
    IntPoly acc;
    permanent_rec(b, 0, 0, 0, acc);
    return acc;
}

} // namespace lrc
