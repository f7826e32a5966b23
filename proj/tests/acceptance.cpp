// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Everything asserts exact values; the only statistical check (Monte Carlo)
// uses a fixed seed and a 4-sigma guard band.

#include "lrc/analysis.hpp"
#include "lrc/codec.hpp"
#include "lrc/construction.hpp"
#include "lrc/errors.hpp"
#include "lrc/matroid.hpp"
#include "lrc/rng.hpp"
#include "lrc/shard_store.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace lrc;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void require(bool ok, const std::string &what) {
    if (!ok) throw std::runtime_error(what);
}

void criterion(int num, const std::string &label, const std::function<void()> &body) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body();
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[PASS] criterion %2d: %s (%.2fs)\n", num, label.c_str(), dt);
    } catch (const std::exception &e) {
        ++g_failures;
        std::printf("[FAIL] criterion %2d: %s -- %s\n", num, label.c_str(), e.what());
    }
    std::fflush(stdout);
}

struct Instance {
    int n, k, r;
};

// every delta=2 parameter set with r+1 | n, 1 < r < k <= m, n <= max_n
std::vector<Instance> delta2_instances(int max_n = 10) {
    std::vector<Instance> out;
    for (int n = 3; n <= max_n; ++n)
        for (int r = 2; r < n; ++r) {
            if (n % (r + 1) != 0) continue;
            const int m = n / (r + 1) * r;
            for (int k = r + 1; k <= m; ++k) out.push_back({n, k, r});
        }
    return out;
}

GeneratorMatrix build(int n, int k, int r, int delta = 2) {
    return build_generator(make_params(n, k, r, delta, BaseField::prime(13)));
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::vector<uint8_t> read_bytes(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    require(in.good(), "cannot read " + p.string());
    return std::vector<uint8_t>((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

} // namespace

int main() {
    std::printf("acceptance suite\n================\n");

    criterion(1, "delta=2 distance optimality over all (n,k,r), n <= 10, prime 13", [] {
        const std::vector<Instance> instances = delta2_instances();
        require(instances.size() == 13, "expected 13 admissible parameter sets, found " +
                                            std::to_string(instances.size()));
        for (const Instance &inst : instances) {
            GeneratorMatrix gm = build(inst.n, inst.k, inst.r);
            const int d = distance_oracle(gm.G);
            const int expect = inst.n - inst.k - ceil_div(inst.k, inst.r) + 2;
            require(d == expect, "(" + std::to_string(inst.n) + "," + std::to_string(inst.k) + "," +
                                     std::to_string(inst.r) + "): oracle " + std::to_string(d) +
                                     " != " + std::to_string(expect));
        }
    });

    criterion(2, "delta=3 distance optimality for (8,3,2,3) and (12,3,2,3)", [] {
        for (const Instance &inst : {Instance{8, 3, 2}, Instance{12, 3, 2}}) {
            GeneratorMatrix gm = build(inst.n, inst.k, inst.r, 3);
            require(gm.params.ext_degree == 49, "extension degree should be a*k+1 = 49");
            const int d = distance_oracle(gm.G);
            const int expect = inst.n - inst.k - ((ceil_div(inst.k, inst.r) - 1) * 2 + 1) + 2;
            require(d == expect, "(" + std::to_string(inst.n) + ",3,2,3): oracle " + std::to_string(d) +
                                     " != " + std::to_string(expect));
        }
    });

    criterion(3, "delta=2 nontrivial circuits are exactly the groups and partition [n]", [] {
        for (const Instance &inst : delta2_instances()) {
            GeneratorMatrix gm = build(inst.n, inst.k, inst.r);
            std::vector<Circuit> got = enumerate_circuits(gm.G, inst.k);
            const int g = inst.r + 1;
            require(static_cast<int>(got.size()) == inst.n / g, "wrong circuit count");
            std::vector<bool> covered(static_cast<size_t>(inst.n), false);
            for (int b = 0; b < inst.n / g; ++b) {
                std::vector<int> expect;
                for (int j = 0; j < g; ++j) expect.push_back(b * g + j);
                require(got[static_cast<size_t>(b)].members == expect, "circuit mismatch");
                for (int e : expect) {
                    require(!covered[static_cast<size_t>(e)], "circuits overlap");
                    covered[static_cast<size_t>(e)] = true;
                }
            }
            for (bool c : covered) require(c, "circuits do not cover [n]");
        }
    });

    criterion(4, "mu-distance formula on 100+ random linear codes (all ranks, primes <= 13)", [] {
        const uint32_t primes[] = {2, 3, 5, 7, 11, 13};
        Rng rng(2024);
        int checked = 0;
        for (int n = 2; n <= 9; ++n) {
            for (int k = 1; k <= n - 1; ++k) {
                for (int pick = 0; pick < 3; ++pick) {
                    const uint32_t p = primes[rng.below(6)];
                    ExtField F = ExtField::make(BaseField::prime(p), 1);
                    Matrix g(F, k, n);
                    do {
                        for (int i = 0; i < k; ++i)
                            for (int j = 0; j < n; ++j)
                                g.at(i, j) = F.from_base(static_cast<uint32_t>(rng.below(p)));
                    } while (rank_of(g) < k);
                    require(distance_via_mu(g) == distance_oracle(g),
                            "formula/oracle mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                " p=" + std::to_string(p));
                    ++checked;
                }
            }
        }
        require(checked >= 100, "need at least 100 random codes, ran " + std::to_string(checked));
    });

    criterion(5, "monic permanent certificates, plus rejection of the non-monic pattern", [] {
        for (int r = 2; r <= 6; ++r)
            require(verify_monic_permanents(build_local_code(r)).ok,
                    "standard pattern r=" + std::to_string(r) + " not certified");
        for (int r = 2; r <= 3; ++r)
            for (int delta = 2; delta <= 3; ++delta)
                require(verify_monic_permanents(build_local_code_general(r, delta)).ok,
                        "generalized pattern (" + std::to_string(r) + "," + std::to_string(delta) +
                            ") not certified");
        PatternMatrix bad(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) bad.at(i, j) = 1;
        require(!verify_monic_permanents(LocalCode{2, 1, bad, 1, LocalKind::Custom}).ok,
                "adversarial all-omega pattern must be rejected");
        IntPoly perm = intpoly_permanent(bad);
        require(perm.degree() == 2 && perm.leading() == BigInt(2), "adversarial permanent should be 2w^2");
    });

    criterion(6, "decodability probability: brute = exact (68/70, 81/84), Monte Carlo in 4 sigma", [] {
        struct Probe {
            Instance inst;
            Rational expect;
        };
        for (const Probe &probe : {Probe{{8, 4, 3}, Rational(68, 70)}, Probe{{9, 3, 2}, Rational(81, 84)}}) {
            GeneratorMatrix gm = build(probe.inst.n, probe.inst.k, probe.inst.r);
            const Rational exact = pdec_exact(probe.inst.n, probe.inst.k, probe.inst.r);
            const Rational brute = pdec_brute(gm.G, probe.inst.k);
            require(exact == probe.expect, "closed form != frozen value");
            require(brute == exact, "exhaustive count != closed form");
            const double est = pdec_monte_carlo(gm.G, probe.inst.k, 100000, 7);
            const double p = exact.to_double();
            const double sigma = std::sqrt(p * (1 - p) / 100000.0);
            require(std::abs(est - p) <= 4 * sigma,
                    "Monte Carlo " + std::to_string(est) + " outside 4 sigma of " + std::to_string(p));
        }
    });

    criterion(7, "stripe grouping path equals direct encoding on 100 random bundles", [] {
        for (const Instance &inst : {Instance{9, 3, 2}, Instance{8, 4, 3}}) {
            GeneratorMatrix gm = build(inst.n, inst.k, inst.r);
            const ExtField &F = gm.field;
            const CodeParams &p = gm.params;
            const int e = F.degree();
            Rng rng(31 + static_cast<uint64_t>(inst.n));
            for (int t = 0; t < 100; ++t) {
                std::vector<std::vector<uint32_t>> plane_msgs(static_cast<size_t>(e));
                for (auto &msg : plane_msgs) {
                    msg.resize(static_cast<size_t>(p.k));
                    for (auto &c : msg) c = static_cast<uint32_t>(rng.below(p.base.order()));
                }
                StripeBundle bundle;
                for (const auto &msg : plane_msgs) bundle.stripes.push_back(rs_stripe(p.base, p.alphas, msg));
                Symbols x;
                for (int i = 0; i < p.k; ++i) {
                    ExtElem sym(static_cast<size_t>(e));
                    for (int j = 0; j < e; ++j)
                        sym[static_cast<size_t>(j)] = plane_msgs[static_cast<size_t>(j)][static_cast<size_t>(i)];
                    x.push_back(std::move(sym));
                }
                require(encode_from_stripes(gm, bundle) == encode(gm, x), "stripe path diverged");
            }
        }
    });

    criterion(8, "local repair: exact, group-local, exhaustive over erasure sets", [] {
        Rng rng(88);
        auto random_message = [&](const GeneratorMatrix &gm) {
            Symbols msg;
            for (int i = 0; i < gm.params.k; ++i) {
                ExtElem e(static_cast<size_t>(gm.field.degree()));
                for (auto &c : e) c = static_cast<uint32_t>(rng.below(gm.field.base().order()));
                msg.push_back(std::move(e));
            }
            return msg;
        };
        auto check_repair = [](const GeneratorMatrix &gm, const Symbols &cw, int group,
                               const std::vector<int> &erased) {
            std::vector<std::optional<ExtElem>> partial(cw.begin(), cw.end());
            for (int e : erased) partial[static_cast<size_t>(e)] = std::nullopt;
            RepairResult res = repair_local(gm, group, partial, erased);
            require(res.repaired.size() == erased.size(), "wrong repair count");
            for (const auto &[idx, val] : res.repaired)
                require(val == cw[static_cast<size_t>(idx)], "repaired value differs");
            require(static_cast<int>(res.reads.size()) == gm.params.r, "must read exactly r symbols");
            for (int rd : res.reads)
                require(group_of(gm.params, rd) == group, "read outside the repair group");
        };

        // delta = 2: every single erasure across every admissible instance up to n = 12
        for (const Instance &inst : delta2_instances(12)) {
            GeneratorMatrix gm = build(inst.n, inst.k, inst.r);
            Symbols cw = encode(gm, random_message(gm));
            for (int e = 0; e < inst.n; ++e) check_repair(gm, cw, group_of(gm.params, e), {e});
        }
        // delta = 3 instances at n <= 12: every erasure set of size <= 2 per group
        for (const Instance &inst : {Instance{8, 3, 2}, Instance{12, 3, 2}}) {
            GeneratorMatrix gm = build(inst.n, inst.k, inst.r, 3);
            Symbols cw = encode(gm, random_message(gm));
            for (int b = 0; b < gm.params.num_groups; ++b) {
                std::vector<int> cols = group_columns(gm.params, b);
                for (size_t i = 0; i < cols.size(); ++i) {
                    check_repair(gm, cw, b, {cols[i]});
                    for (size_t j = i + 1; j < cols.size(); ++j) check_repair(gm, cw, b, {cols[i], cols[j]});
                }
            }
        }
    });

    criterion(9, "CLI round trip on a 1 MiB file at (9,3,2,gf2:8)", [] {
        const fs::path root =
            fs::temp_directory_path() / ("lrc_acceptance_" + std::to_string(std::random_device{}()));
        fs::create_directories(root);
        struct Cleanup {
            fs::path p;
            ~Cleanup() { fs::remove_all(p); }
        } cleanup{root};

        const fs::path input = root / "input.bin";
        {
            Rng rng(424242);
            std::vector<uint8_t> bytes(1 << 20);
            for (auto &b : bytes) b = static_cast<uint8_t>(rng.below(256));
            std::ofstream out(input, std::ios::binary);
            out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        }
        const std::vector<uint8_t> original = read_bytes(input);

        const fs::path store = root / "shards";
        cli::Manifest manifest = cli::cmd_encode(input, store, cli::EncodeOptions{9, 3, 2, 2, "gf2:8"});

        // deletion patterns: 30 sampled 5-subsets (d-1 = 5) plus the 3 whole groups
        std::vector<std::vector<int>> patterns;
        Rng rng(5150);
        std::set<std::vector<int>> dedup;
        while (patterns.size() < 30) {
            std::vector<int> p = rng.sample_subset(9, 5);
            if (dedup.insert(p).second) patterns.push_back(p);
        }
        for (int b = 0; b < 3; ++b) patterns.push_back({3 * b, 3 * b + 1, 3 * b + 2});

        int case_no = 0;
        for (const std::vector<int> &erased : patterns) {
            const fs::path work = root / ("case_" + std::to_string(case_no++));
            fs::create_directories(work);
            fs::copy_file(store / "manifest.json", work / "manifest.json");
            std::set<int> gone(erased.begin(), erased.end());
            for (int i = 0; i < 9; ++i) {
                if (gone.count(i)) continue;
                fs::create_hard_link(store / manifest.shards[static_cast<size_t>(i)],
                                     work / manifest.shards[static_cast<size_t>(i)]);
            }
            const fs::path out = work / "out.bin";
            cli::cmd_decode(work, out);
            require(read_bytes(out) == original, "decode differs after deleting pattern " +
                                                     std::to_string(case_no - 1));
            fs::remove_all(work);
        }

        // single-shard repair is byte-identical for every shard
        for (int i = 1; i <= 9; ++i) {
            const fs::path work = root / "repair";
            fs::create_directories(work);
            fs::copy_file(store / "manifest.json", work / "manifest.json");
            for (int j = 0; j < 9; ++j)
                if (j != i - 1)
                    fs::create_hard_link(store / manifest.shards[static_cast<size_t>(j)],
                                         work / manifest.shards[static_cast<size_t>(j)]);
            cli::RepairOutcome rep = cli::cmd_repair(work, i);
            require(read_bytes(rep.shard_path) == read_bytes(store / manifest.shards[static_cast<size_t>(i - 1)]),
                    "repaired shard " + std::to_string(i) + " differs");
            const int group = (i - 1) / 3;
            for (int rd : rep.read_indices)
                require((rd - 1) / 3 == group, "repair read outside the group");
            fs::remove_all(work);
        }
    });

    criterion(10, "systematic form: identity pivots, same distance, same circuits for (8,4,3)", [] {
        GeneratorMatrix gm = build(8, 4, 3);
        SystematicForm sys = to_systematic(gm);
        const ExtField &F = sys.gm.field;
        require(sys.pivots.size() == 4, "expected 4 pivots");
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) {
                const ExtElem &e = sys.gm.G.at(static_cast<int>(i), sys.pivots[j]);
                require(e == (i == j ? F.one() : F.zero()), "pivot columns are not the identity");
            }
        require(distance_oracle(sys.gm.G) == distance_oracle(gm.G), "distance changed");
        require(enumerate_circuits(sys.gm.G, 4) == enumerate_circuits(gm.G, 4), "circuit structure changed");
    });

    std::printf("================\n%s: %d criterion(s) failed\n", g_failures == 0 ? "SUCCESS" : "FAILURE",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
