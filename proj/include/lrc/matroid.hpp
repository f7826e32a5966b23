#pragma once

#include "lrc/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lrc {

/// Enumeration budgets. Circuit-family search for the mu parameter is capped
/// at 1e7 family evaluations; past that CapExceeded is thrown rather than
/// returning a silent approximation.
inline constexpr size_t kDefaultSubsetBudget = 10'000'000;
inline constexpr size_t kDefaultFamilyBudget = 10'000'000;

/// Minimal dependent column set: dependent, with every proper subset
/// independent. Members are 0-based and sorted ascending.
struct Circuit {
    std::vector<int> members;

    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const Circuit &rhs) const = default;
};

/// All circuits of the column matroid of G with size at most size_cap
/// (clamped to k+1: no circuit in a rank-k matroid is larger), in ascending
/// (size, lexicographic) order. Requires n <= 63 columns.
std::vector<Circuit> enumerate_circuits(const Matrix &g, int size_cap,
                                        size_t budget = kDefaultSubsetBudget);

/// The smallest mu >= 1 such that every non-trivial union of mu distinct
/// circuits has size at least k + mu. A family has a non-trivial union when
/// each member keeps at least one private element outside the others. At
/// most n+1. Requires G to have full row rank.
int compute_mu(const Matrix &g, size_t budget = kDefaultFamilyBudget);

/// n - k - mu + 2: the exact minimum distance of the code generated by G.
/// Holds for any full-row-rank linear code, not just the ones built here.
int distance_via_mu(const Matrix &g, size_t budget = kDefaultFamilyBudget);

/// Independent exact minimum distance: n minus the largest column set whose
/// rank is below k, by subset scan in increasing codeword-weight order.
/// Requires full row rank and n <= 20 (throws TooLarge).
int distance_oracle(const Matrix &g);

struct OptimalityCheck {
    bool optimal = false;
    /// delta = 2 only: the stronger structural condition that the nontrivial
    /// circuits all have size r+1 and partition the column set.
    bool circuits_partition = false;
    /// 0-based column with no covering circuit of size <= r+1, if locality
    /// fails; -1 otherwise.
    int witness_index = -1;
    /// Violating circuit family for the union-size condition, if any.
    std::vector<Circuit> witness_family;
    std::string detail;
};

/// delta = 2: checks the two locality/union conditions that characterize
/// distance-optimal locally repairable codes (every column in a circuit of
/// size <= r+1; every non-trivial union of ceil(k/r) circuits has size at
/// least k + ceil(k/r)). delta > 2: checks the distance oracle against
/// n - k - ((ceil(k/r)-1)(delta-1)+1) + 2.
OptimalityCheck verify_optimal_lrc(const Matrix &g, int r, int delta,
                                   size_t subset_budget = kDefaultSubsetBudget,
                                   size_t family_budget = kDefaultFamilyBudget);

struct MatroidReport {
    std::vector<Circuit> nontrivial_circuits; // size <= k
    int mu = 0;
    int d_formula = 0; // n - k - mu + 2
    int d_oracle = 0;
    OptimalityCheck verdict;
};

MatroidReport analyze_matroid(const Matrix &g, int r, int delta,
                              size_t subset_budget = kDefaultSubsetBudget,
                              size_t family_budget = kDefaultFamilyBudget);

} // namespace lrc
