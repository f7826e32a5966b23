#include "lrc/construction.hpp"

#include "lrc/errors.hpp"

#include <algorithm>
#include <set>

namespace lrc {

LocalCode build_local_code(int r) {
    if (r < 2) throw ParamError("local code needs r >= 2");
    PatternMatrix p(r, r + 1);
    for (int i = 0; i < r; ++i) {
        p.at(i, i) = 0;     // omega^0 = 1 on the main diagonal
        p.at(i, i + 1) = 1; // omega on the superdiagonal
    }
    return LocalCode{r, 2, std::move(p), 1, LocalKind::Standard};
}

LocalCode build_local_code_general(int r, int delta) {
    if (r < 2) throw ParamError("local code needs r >= 2");
    if (delta < 2) throw ParamError("local code needs delta >= 2");
    const int g = r + delta - 1;
    PatternMatrix p(r, g);
    // exponent (i-1) * r^j with 1-based indices
    uint64_t max_e = 0;
    for (int j = 1; j <= g; ++j) {
        uint64_t rpow = 1;
        for (int t = 0; t < j; ++t) {
            if (rpow > (1ULL << 50)) throw ParamError("local-code exponents overflow practical range");
            rpow *= static_cast<uint64_t>(r);
        }
        for (int i = 1; i <= r; ++i) {
            uint64_t e = static_cast<uint64_t>(i - 1) * rpow;
            p.at(i - 1, j - 1) = e;
            max_e = std::max(max_e, e);
        }
    }
    return LocalCode{r, delta, std::move(p), max_e, LocalKind::PowerTower};
}

namespace {

// ascending combinations of {0..n-1} of size t
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

std::vector<int> first_combination(int t) {
    std::vector<int> c(t);
    for (int i = 0; i < t; ++i) c[i] = i;
    return c;
}

} // namespace

PermanentCheck verify_monic_permanents(const LocalCode &local) {
    const PatternMatrix &p = local.pattern;
    for (int t = 1; t <= local.r; ++t) {
        std::vector<int> cols = first_combination(t);
        do {
            IntPoly perm = intpoly_permanent(p.select_cols(cols));
            if (!perm.is_monic()) {
                std::string why = perm.is_zero() ? "permanent is zero"
                                                 : "leading coefficient " + perm.leading().to_string();
                return PermanentCheck{false, cols, why};
            }
            if (local.kind == LocalKind::Standard && perm.degree() > t) {
                return PermanentCheck{false, cols,
                                      "degree " + std::to_string(perm.degree()) + " exceeds column count"};
            }
        } while (next_combination(cols, p.cols()));
    }
    return PermanentCheck{true, {}, "all column subsets give monic permanents"};
}

namespace {

CodeParams make_params_impl(int n, int k, int r, int delta, const BaseField &base, LocalCode local,
                            std::vector<uint32_t> alphas) {
    if (delta < 2) throw ParamError("delta must be >= 2");
    if (r < 1 || k < 1 || n < 1) throw ParamError("n, k, r must be positive");
    if (r == 1)
        throw ParamError("r=1 is not supported: replicating each symbol of an (n/2,k) MDS code twice "
                         "already gives an optimal code with locality 1");
    if (r >= k)
        throw ParamError("r >= k is not supported: a plain (n,k) MDS code already has locality k with "
                         "optimal distance");
    const int g = r + delta - 1;
    if (n % g != 0)
        throw ParamError("group size r+delta-1 = " + std::to_string(g) + " must divide n = " + std::to_string(n));
    const int m = n / g * r;
    if (base.order() < static_cast<uint32_t>(m))
        throw ParamError("base field order " + std::to_string(base.order()) + " is smaller than m = " +
                         std::to_string(m) + ": not enough distinct evaluation points");
    if (k > m)
        throw ParamError("k = " + std::to_string(k) + " exceeds the inner code length m = " + std::to_string(m));

    if (local.r != r || local.delta != delta) throw ParamError("local code does not match (r, delta)");
    if (local.pattern.rows() != r || local.pattern.cols() != g)
        throw ParamError("local code pattern has the wrong shape");
    PermanentCheck cert = verify_monic_permanents(local);
    if (!cert.ok) throw ParamError("local code rejected: " + cert.reason);

    const uint64_t a = local.max_exponent;
    const uint64_t e64 = a * static_cast<uint64_t>(k) + 1;
    if (e64 > 1000000) throw ParamError("extension degree a*k+1 = " + std::to_string(e64) + " is impractically large");
    const int e = static_cast<int>(e64);

    if (alphas.empty()) {
        alphas.resize(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) alphas[static_cast<size_t>(i)] = base.element(static_cast<uint32_t>(i));
    } else {
        if (alphas.size() != static_cast<size_t>(m))
            throw ParamError("need exactly m = " + std::to_string(m) + " evaluation points");
        for (uint32_t v : alphas) base.check_element(v);
        std::set<uint32_t> uniq(alphas.begin(), alphas.end());
        if (uniq.size() != alphas.size()) throw ParamError("evaluation points must be pairwise distinct");
    }

    return CodeParams{n, k, r, delta, base, g, n / g, m, e, a, std::move(alphas), std::move(local)};
}

} // namespace

CodeParams make_params(int n, int k, int r, int delta, const BaseField &base, std::vector<uint32_t> alphas) {
    if (delta < 2) throw ParamError("delta must be >= 2");
    if (r < 2) {
        // delegate so the r=1 / bounds diagnostics stay in one place
        return make_params_impl(n, k, r, delta, base, LocalCode{r, delta, PatternMatrix(std::max(r, 0), 1), 0},
                                std::move(alphas));
    }
    LocalCode local = delta == 2 ? build_local_code(r) : build_local_code_general(r, delta);
    return make_params_impl(n, k, r, delta, base, std::move(local), std::move(alphas));
}

CodeParams make_params(int n, int k, int r, int delta, const BaseField &base, const LocalCode &local,
                       std::vector<uint32_t> alphas) {
    return make_params_impl(n, k, r, delta, base, local, std::move(alphas));
}

GeneratorMatrix build_generator(const CodeParams &params) {
    const ExtField F = ExtField::make(params.base, params.ext_degree);
    const int k = params.k;
    const int r = params.r;
    const int g = params.group_size;

    // instantiate the local pattern over the extension field
    Matrix a_inst(F, r, g);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < g; ++j) {
            const auto &e = params.local.pattern.at(i, j);
            if (e) a_inst.at(i, j) = F.omega_pow(*e);
        }

    Matrix G(F, k, params.n);
    std::vector<Matrix> blocks;
    blocks.reserve(static_cast<size_t>(params.num_groups));
    for (int b = 0; b < params.num_groups; ++b) {
        Matrix v(F, k, r);
        for (int t = 0; t < r; ++t) {
            const uint32_t alpha = params.alphas[static_cast<size_t>(b) * r + t];
            uint32_t p = 1;
            for (int i = 0; i < k; ++i) {
                v.at(i, t) = F.from_base(p);
                p = params.base.mul(p, alpha);
            }
        }
        Matrix block = mat_mul(v, a_inst);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < g; ++j) G.at(i, b * g + j) = block.at(i, j);
        blocks.push_back(std::move(block));
    }
    return GeneratorMatrix{params, F, std::move(a_inst), std::move(G), std::move(blocks)};
}

SystematicForm to_systematic(const GeneratorMatrix &gm) {
    const ExtField &F = gm.field;
    const int k = gm.params.k;
    RankAccumulator acc(F);
    std::vector<int> pivots;
    for (int j = 0; j < gm.G.cols() && static_cast<int>(pivots.size()) < k; ++j) {
        if (acc.try_add(column_of(gm.G, j))) pivots.push_back(j);
    }
    if (static_cast<int>(pivots.size()) != k)
        throw RankDeficient("generator matrix does not have full row rank");
    Matrix gk = select_columns(gm.G, pivots);
    Matrix gsys = mat_mul(inverse(gk), gm.G);
    std::vector<Matrix> blocks;
    blocks.reserve(static_cast<size_t>(gm.params.num_groups));
    for (int b = 0; b < gm.params.num_groups; ++b) {
        std::vector<int> cols = group_columns(gm.params, b);
        blocks.push_back(select_columns(gsys, cols));
    }
    return SystematicForm{GeneratorMatrix{gm.params, F, gm.a_inst, std::move(gsys), std::move(blocks)},
                          std::move(pivots)};
}

int group_of(const CodeParams &params, int col) {
    if (col < 0 || col >= params.n) throw ShapeError("column index out of range");
    return col / params.group_size;
}

std::vector<int> group_columns(const CodeParams &params, int group) {
    if (group < 0 || group >= params.num_groups) throw ShapeError("group index out of range");
    std::vector<int> cols(static_cast<size_t>(params.group_size));
    for (int j = 0; j < params.group_size; ++j) cols[static_cast<size_t>(j)] = group * params.group_size + j;
    return cols;
}

} // namespace lrc
