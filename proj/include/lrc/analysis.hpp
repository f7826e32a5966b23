#pragma once

#include "lrc/matrix.hpp"
#include "lrc/rational.hpp"

#include <cstdint>
#include <optional>

namespace lrc {

/// Exact probability that k codeword positions drawn uniformly at random
/// are decodable, for a delta = 2 code whose only rank-deficient k-subsets
/// are the ones containing a whole (r+1)-group. Inclusion-exclusion over the
/// n/(r+1) groups:
///
///   P_dec = 1 - sum_{j>=1} (-1)^(j+1) C(n/(r+1), j) C(n-j(r+1), k-j(r+1)) / C(n, k)
///
/// i.e. one minus the probability that the sample contains at least one full
/// group. The alternating sum is sometimes quoted with the opposite sign
/// convention, which produces values above 1; the convention here is pinned
/// by the exhaustive counting oracle (pdec_brute agrees exactly on the
/// constructions this library builds). Requires (r+1) | n; returns 1 when
/// k < r+1 since no sample can then swallow a group.
Rational pdec_exact(int n, int k, int r);

struct PdecBounds {
    Rational union_bound; // 1 - (n/(r+1)) C(n-(r+1), k-(r+1)) / C(n,k)
    Rational ratio_bound; // 1 - (n/(r+1)) (k/n)^(r+1), the weaker closed form
};

/// Both lower bounds on pdec_exact; union_bound <= pdec_exact always.
PdecBounds pdec_lower_bound(int n, int k, int r);

/// Fraction of all k-column subsets of G with rank k, by exhaustive scan.
/// Counts actual decodability, with no reference to the group structure.
/// Throws TooLarge for more than 14 columns.
Rational pdec_brute(const Matrix &g, int k);

/// Empirical decodable fraction over `trials` uniformly sampled k-subsets,
/// deterministic for a given seed (xoshiro256** stream).
double pdec_monte_carlo(const Matrix &g, int k, uint64_t trials, uint64_t seed);

struct DecodabilityReport {
    std::optional<Rational> p_exact;       // delta = 2 formula
    std::optional<Rational> p_union_bound; // first lower-bound form
    std::optional<Rational> p_ratio_bound; // second lower-bound form
    std::optional<Rational> p_brute;       // exhaustive, when n <= 14
    std::optional<double> p_monte_carlo;
    uint64_t mc_trials = 0;
    uint64_t mc_seed = 0;
};

/// Runs every estimator that applies: the closed forms only when delta == 2
/// (the group-containment argument behind them needs groups of size r+1),
/// the brute count when it fits the budget, Monte Carlo when trials > 0.
DecodabilityReport analyze_decodability(const Matrix &g, int k, int r, int delta, uint64_t trials,
                                        uint64_t seed);

} // namespace lrc
