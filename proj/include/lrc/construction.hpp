#pragma once

#include "lrc/intpoly.hpp"
#include "lrc/matrix.hpp"

#include <string>
#include <vector>

namespace lrc {

enum class LocalKind { Standard, PowerTower, Custom };

/// Generator pattern of one (r+delta-1, r) MDS local code: entries are
/// structural zeros or powers of omega. Instantiated over the extension
/// field it re-encodes each group of r inner-code symbols.
struct LocalCode {
    int r = 0;
    int delta = 2;
    PatternMatrix pattern; // r x (r+delta-1)
    uint64_t max_exponent = 0;
    LocalKind kind = LocalKind::Custom;

    int group_size() const { return r + delta - 1; }
};

/// Standard bidiagonal local code for delta = 2: exponent 0 on the main
/// diagonal, exponent 1 on the superdiagonal, r x (r+1).
LocalCode build_local_code(int r);

/// Multi-erasure local code: entry (i, j) carries exponent (i-1) * r^j with
/// 1-based indices, r x (r+delta-1). The largest exponent is
/// a = (r-1) * r^(r+delta-1).
LocalCode build_local_code_general(int r, int delta);

struct PermanentCheck {
    bool ok = false;
    std::vector<int> violating_cols; // empty when ok
    std::string reason;
};

/// Certifies that every r x t column subpattern (t <= r) has a monic
/// permanent; for the standard bidiagonal pattern the permanent degree is
/// additionally required to be at most t. Returns the first violating column
/// subset otherwise. This property is what makes every k x k submatrix drawn
/// from distinct-per-group columns invertible, and hence the whole
/// construction work.
PermanentCheck verify_monic_permanents(const LocalCode &local);

struct CodeParams {
    int n = 0, k = 0, r = 0, delta = 2;
    BaseField base;
    int group_size = 0; // r + delta - 1
    int num_groups = 0; // n / group_size
    int m = 0;          // n * r / group_size: inner-code length
    int ext_degree = 0; // a*k + 1
    uint64_t a = 0;     // largest omega exponent in the local pattern
    std::vector<uint32_t> alphas; // m distinct base-field evaluation points
    LocalCode local;
};

/// Validates (n, k, r, delta) against the base field and derives the group
/// layout, evaluation points and extension degree. Alphas default to the
/// first m elements of the canonical base-field enumeration; callers may
/// supply their own m distinct points instead.
CodeParams make_params(int n, int k, int r, int delta, const BaseField &base,
                       std::vector<uint32_t> alphas = {});

/// Same, but with a caller-supplied local code (must pass
/// verify_monic_permanents; any certified pattern is usable).
CodeParams make_params(int n, int k, int r, int delta, const BaseField &base, const LocalCode &local,
                       std::vector<uint32_t> alphas = {});

/// The k x n generator matrix with its per-group block decomposition.
struct GeneratorMatrix {
    CodeParams params;
    ExtField field;
    Matrix a_inst; // r x group_size local generator over the extension field
    Matrix G;      // k x n
    std::vector<Matrix> blocks; // num_groups matrices of shape k x group_size
};

/// Assembles G group by group: the k x r Vandermonde block on the group's
/// alphas times the instantiated local pattern.
GeneratorMatrix build_generator(const CodeParams &params);

struct SystematicForm {
    GeneratorMatrix gm;
    std::vector<int> pivots; // k column indices carrying the identity
};

/// Left-multiplies by the inverse of the first k linearly independent
/// columns (leftmost-first greedy), preserving the row space. The pivot
/// columns of the result form the identity.
SystematicForm to_systematic(const GeneratorMatrix &gm);

/// Group index of a column (0-based).
int group_of(const CodeParams &params, int col);

/// The column indices of one repair group.
std::vector<int> group_columns(const CodeParams &params, int group);

} // namespace lrc
