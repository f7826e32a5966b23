#pragma once

#include "lrc/construction.hpp"

#include <optional>
#include <vector>

namespace lrc {

/// k message symbols / n codeword symbols over the extension field.
using Symbols = std::vector<ExtElem>;

/// y = x * G.
Symbols encode(const GeneratorMatrix &gm, const Symbols &message);

/// Set of erased codeword positions (0-based, in range, duplicates rejected).
struct ErasurePattern {
    std::vector<int> erased;
};

/// True iff the surviving columns still span the message space.
bool decodable(const GeneratorMatrix &gm, const ErasurePattern &pattern);

/// Reusable decoding recipe for one fixed set of available positions:
/// the k selected columns (leftmost-first greedy independent scan) and the
/// inverse of that k x k submatrix. x = y_selected * inv.
struct DecodePlan {
    std::vector<int> cols;
    Matrix inv;
};

/// Throws RankDeficient when the available columns do not span.
DecodePlan make_decode_plan(const GeneratorMatrix &gm, const std::vector<int> &available);

/// values must correspond positionally to plan.cols.
Symbols apply_decode_plan(const DecodePlan &plan, const Symbols &values);

/// One-shot global decode from any decodable subset: available positions and
/// their symbol values, positionally matched.
Symbols decode(const GeneratorMatrix &gm, const std::vector<int> &available, const Symbols &values);

/// Reusable local-repair recipe for one group: which group positions to read
/// (exactly r of them) and the r x |erased| recombination matrix taking the
/// read values straight to the erased values.
struct RepairPlan {
    int group = 0;
    std::vector<int> read_cols;   // global column indices, all inside the group
    std::vector<int> erased_cols; // global column indices being rebuilt
    Matrix recomb;
};

/// Plans the repair of the given erased positions (all inside one group,
/// at most delta-1 of them) from the group's surviving symbols. Reads are
/// confined to the group: that is the locality contract. Throws
/// TooManyLocalErasures when the group has fewer than r survivors.
RepairPlan make_repair_plan(const GeneratorMatrix &gm, int group, const std::vector<int> &erased_in_group);

Symbols apply_repair_plan(const RepairPlan &plan, const Symbols &read_values);

struct RepairResult {
    std::vector<std::pair<int, ExtElem>> repaired; // (column, value), ascending
    std::vector<int> reads;                        // columns actually read
};

/// One-shot local repair on a partially erased codeword. Positions listed in
/// erased_in_group must be absent; every other group position must be
/// present.
RepairResult repair_local(const GeneratorMatrix &gm, int group,
                          const std::vector<std::optional<ExtElem>> &symbols,
                          const std::vector<int> &erased_in_group);

/// e parallel inner-code codewords over the base field, all evaluated at the
/// same m points; stripe j holds the coefficient-j plane of the extension
/// symbols.
struct StripeBundle {
    std::vector<std::vector<uint32_t>> stripes;
};

/// Packs per-point stripe columns into extension-field symbols: output i has
/// coefficient vector (stripes[0][i], ..., stripes[e-1][i]).
Symbols group_stripes(const ExtField &field, const StripeBundle &bundle);

/// Full codeword from pre-encoded base-field stripes: groups the stripes and
/// then applies only the per-group local re-encoding, skipping the global
/// Vandermonde multiply.
Symbols encode_from_stripes(const GeneratorMatrix &gm, const StripeBundle &bundle);

/// Evaluates the polynomial with the given base-field coefficients at each
/// alpha: one inner-code stripe.
std::vector<uint32_t> rs_stripe(const BaseField &base, const std::vector<uint32_t> &alphas,
                                const std::vector<uint32_t> &message);

} // namespace lrc
