#include "lrc/analysis.hpp"

#include "lrc/errors.hpp"
#include "lrc/rng.hpp"

namespace lrc {

namespace {

void check_pdec_params(int n, int k, int r) {
    if (n < 1 || k < 1 || k > n || r < 1) throw ParamError("need 1 <= k <= n and r >= 1");
    if (n % (r + 1) != 0) throw ParamError("r+1 must divide n");
}

bool next_combination(std::vector<int> &c, int n) {
    int t = static_cast<int>(c.size());
    for (int i = t - 1; i >= 0; --i) {
        if (c[i] < n - t + i) {
            ++c[i];
            for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

Rational pdec_exact(int n, int k, int r) {
    check_pdec_params(n, k, r);
    const int groups = n / (r + 1);
    BigInt hit(0); // number of k-subsets containing at least one full group
    for (int j = 1; j <= k / (r + 1); ++j) {
        BigInt term = binomial(groups, j) * binomial(n - j * (r + 1), k - j * (r + 1));
        if (j % 2 == 1)
            hit += term;
        else
            hit -= term;
    }
    return Rational(1) - Rational(hit, binomial(n, k));
}

PdecBounds pdec_lower_bound(int n, int k, int r) {
    check_pdec_params(n, k, r);
    const int groups = n / (r + 1);
    Rational union_bound =
        Rational(1) - Rational(groups) * Rational(binomial(n - (r + 1), k - (r + 1)), binomial(n, k));
    Rational ratio_bound = Rational(1) - Rational(groups) * Rational(k, n).pow(static_cast<unsigned>(r + 1));
    return PdecBounds{union_bound, ratio_bound};
}

Rational pdec_brute(const Matrix &g, int k) {
    const int n = g.cols();
    if (n > 14) throw TooLarge("exhaustive decodability scan supports at most 14 columns");
    if (k < 1 || k > n) throw ParamError("need 1 <= k <= n");
    BigInt good(0);
    BigInt total(0);
    std::vector<int> c(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i;
    do {
        total += BigInt(1);
        if (rank_of(g, c) == k) good += BigInt(1);
    } while (next_combination(c, n));
    return Rational(good, total);
}

double pdec_monte_carlo(const Matrix &g, int k, uint64_t trials, uint64_t seed) {
    if (trials < 1) throw ParamError("need at least one trial");
    if (k < 1 || k > g.cols()) throw ParamError("need 1 <= k <= n");
    Rng rng(seed);
    uint64_t good = 0;
    for (uint64_t t = 0; t < trials; ++t) {
        std::vector<int> subset = rng.sample_subset(g.cols(), k);
        if (rank_of(g, subset) == k) ++good;
    }
    return static_cast<double>(good) / static_cast<double>(trials);
}

DecodabilityReport analyze_decodability(const Matrix &g, int k, int r, int delta, uint64_t trials,
                                        uint64_t seed) {
    DecodabilityReport report;
    if (delta == 2 && g.cols() % (r + 1) == 0) {
        report.p_exact = pdec_exact(g.cols(), k, r);
        PdecBounds bounds = pdec_lower_bound(g.cols(), k, r);
        report.p_union_bound = bounds.union_bound;
        report.p_ratio_bound = bounds.ratio_bound;
    }
    if (g.cols() <= 14) report.p_brute = pdec_brute(g, k);
    if (trials > 0) {
        report.p_monte_carlo = pdec_monte_carlo(g, k, trials, seed);
        report.mc_trials = trials;
        report.mc_seed = seed;
    }
    return report;
}

} // namespace lrc
