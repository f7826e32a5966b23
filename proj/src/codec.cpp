#include "lrc/codec.hpp"

#include "lrc/errors.hpp"

#include <algorithm>
#include <set>

namespace lrc {

Symbols encode(const GeneratorMatrix &gm, const Symbols &message) {
    if (static_cast<int>(message.size()) != gm.params.k)
        throw ShapeError("message must have exactly k symbols");
    Symbols out;
    out.reserve(static_cast<size_t>(gm.params.n));
    for (int j = 0; j < gm.params.n; ++j) out.push_back(gm.G.column_dot(j, message));
    return out;
}

namespace {

std::vector<int> complement_of(const std::vector<int> &erased, int n) {
    std::vector<bool> gone(static_cast<size_t>(n), false);
    for (int e : erased) {
        if (e < 0 || e >= n) throw ShapeError("erased index out of range");
        if (gone[static_cast<size_t>(e)]) throw ShapeError("duplicate erased index");
        gone[static_cast<size_t>(e)] = true;
    }
    std::vector<int> avail;
    avail.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        if (!gone[static_cast<size_t>(i)]) avail.push_back(i);
    return avail;
}

} // namespace

bool decodable(const GeneratorMatrix &gm, const ErasurePattern &pattern) {
    std::vector<int> avail = complement_of(pattern.erased, gm.params.n);
    return rank_of(gm.G, avail) == gm.params.k;
}

DecodePlan make_decode_plan(const GeneratorMatrix &gm, const std::vector<int> &available) {
    const int k = gm.params.k;
    if (static_cast<int>(available.size()) < k)
        throw RankDeficient("only " + std::to_string(available.size()) + " symbols available, need k = " +
                            std::to_string(k));
    RankAccumulator acc(gm.field);
    std::vector<int> picked;
    for (int j : available) {
        if (j < 0 || j >= gm.params.n) throw ShapeError("available index out of range");
        if (acc.try_add(column_of(gm.G, j))) {
            picked.push_back(j);
            if (static_cast<int>(picked.size()) == k) break;
        }
    }
    if (static_cast<int>(picked.size()) != k)
        throw RankDeficient("available symbols span rank " + std::to_string(picked.size()) +
                            " < k = " + std::to_string(k));
    return DecodePlan{picked, inverse(select_columns(gm.G, picked))};
}

Symbols apply_decode_plan(const DecodePlan &plan, const Symbols &values) {
    if (values.size() != plan.cols.size()) throw ShapeError("value count does not match plan");
    const ExtField &F = plan.inv.field();
    const int k = plan.inv.rows();
    Symbols x;
    x.reserve(static_cast<size_t>(k));
    // x = y * inv (row vector times matrix)
    for (int j = 0; j < k; ++j) {
        ExtElem acc = F.zero();
        for (int i = 0; i < k; ++i) {
            if (F.is_zero(plan.inv.at(i, j)) || F.is_zero(values[static_cast<size_t>(i)])) continue;
            acc = F.add(acc, F.mul(values[static_cast<size_t>(i)], plan.inv.at(i, j)));
        }
        x.push_back(std::move(acc));
    }
    return x;
}

Symbols decode(const GeneratorMatrix &gm, const std::vector<int> &available, const Symbols &values) {
    if (available.size() != values.size()) throw ShapeError("available/value count mismatch");
    DecodePlan plan = make_decode_plan(gm, available);
    Symbols sel;
    sel.reserve(plan.cols.size());
    for (int c : plan.cols) {
        auto it = std::find(available.begin(), available.end(), c);
        sel.push_back(values[static_cast<size_t>(it - available.begin())]);
    }
    return apply_decode_plan(plan, sel);
}

RepairPlan make_repair_plan(const GeneratorMatrix &gm, int group, const std::vector<int> &erased_in_group) {
    const CodeParams &p = gm.params;
    if (group < 0 || group >= p.num_groups) throw ShapeError("group index out of range");
    const std::vector<int> cols = group_columns(p, group);
    std::set<int> erased(erased_in_group.begin(), erased_in_group.end());
    if (erased.size() != erased_in_group.size()) throw ShapeError("duplicate erased index");
    for (int e : erased)
        if (group_of(p, e) != group) throw ShapeError("erased index outside the requested group");
    if (static_cast<int>(erased.size()) > p.delta - 1)
        throw TooManyLocalErasures("group " + std::to_string(group) + " lost " + std::to_string(erased.size()) +
                                   " symbols; the local code repairs at most delta-1 = " +
                                   std::to_string(p.delta - 1));

    // read the first r surviving positions of the group
    std::vector<int> reads;
    for (int c : cols) {
        if (erased.count(c)) continue;
        reads.push_back(c);
        if (static_cast<int>(reads.size()) == p.r) break;
    }
    // group has r+delta-1 columns and at most delta-1 erased, so r survive
    const ExtField &F = gm.field;
    Matrix a_read(F, p.r, p.r);
    for (int j = 0; j < p.r; ++j) {
        const int offset = reads[static_cast<size_t>(j)] - cols.front();
        for (int i = 0; i < p.r; ++i) a_read.at(i, j) = gm.a_inst.at(i, offset);
    }
    Matrix a_erased(F, p.r, static_cast<int>(erased.size()));
    int j = 0;
    std::vector<int> erased_sorted(erased.begin(), erased.end());
    for (int c : erased_sorted) {
        const int offset = c - cols.front();
        for (int i = 0; i < p.r; ++i) a_erased.at(i, j) = gm.a_inst.at(i, offset);
        ++j;
    }
    // y_read * inv(A_read) recovers the group's local message; multiplying by
    // A_erased re-evaluates the lost positions. Fuse both steps.
    Matrix recomb = mat_mul(inverse(a_read), a_erased);
    return RepairPlan{group, std::move(reads), std::move(erased_sorted), std::move(recomb)};
}

Symbols apply_repair_plan(const RepairPlan &plan, const Symbols &read_values) {
    if (read_values.size() != plan.read_cols.size()) throw ShapeError("read value count does not match plan");
    Symbols out;
    out.reserve(plan.erased_cols.size());
    for (int j = 0; j < plan.recomb.cols(); ++j) out.push_back(plan.recomb.column_dot(j, read_values));
    return out;
}

RepairResult repair_local(const GeneratorMatrix &gm, int group,
                          const std::vector<std::optional<ExtElem>> &symbols,
                          const std::vector<int> &erased_in_group) {
    if (static_cast<int>(symbols.size()) != gm.params.n) throw ShapeError("partial codeword must have length n");
    RepairPlan plan = make_repair_plan(gm, group, erased_in_group);
    for (int e : plan.erased_cols)
        if (symbols[static_cast<size_t>(e)].has_value())
            throw ShapeError("position " + std::to_string(e) + " marked erased but present");
    Symbols reads;
    reads.reserve(plan.read_cols.size());
    for (int c : plan.read_cols) {
        const auto &s = symbols[static_cast<size_t>(c)];
        if (!s.has_value())
            throw TooManyLocalErasures("group survivor " + std::to_string(c) +
                                       " is missing but not listed as erased");
        reads.push_back(*s);
    }
    Symbols fixed = apply_repair_plan(plan, reads);
    RepairResult out;
    for (size_t i = 0; i < fixed.size(); ++i) out.repaired.emplace_back(plan.erased_cols[i], std::move(fixed[i]));
    out.reads = plan.read_cols;
    return out;
}

Symbols group_stripes(const ExtField &field, const StripeBundle &bundle) {
    const size_t e = static_cast<size_t>(field.degree());
    if (bundle.stripes.size() != e)
        throw ShapeError("bundle has " + std::to_string(bundle.stripes.size()) + " stripes, extension degree is " +
                         std::to_string(e));
    const size_t m = bundle.stripes.empty() ? 0 : bundle.stripes[0].size();
    for (const auto &s : bundle.stripes)
        if (s.size() != m) throw ShapeError("stripes must all have the same length");
    Symbols out;
    out.reserve(m);
    for (size_t i = 0; i < m; ++i) {
        ExtElem sym(e);
        for (size_t j = 0; j < e; ++j) {
            field.base().check_element(bundle.stripes[j][i]);
            sym[j] = bundle.stripes[j][i];
        }
        out.push_back(std::move(sym));
    }
    return out;
}

Symbols encode_from_stripes(const GeneratorMatrix &gm, const StripeBundle &bundle) {
    const CodeParams &p = gm.params;
    Symbols grouped = group_stripes(gm.field, bundle);
    if (static_cast<int>(grouped.size()) != p.m)
        throw ShapeError("stripes evaluate at " + std::to_string(grouped.size()) + " points, expected m = " +
                         std::to_string(p.m));
    Symbols out;
    out.reserve(static_cast<size_t>(p.n));
    for (int b = 0; b < p.num_groups; ++b) {
        std::span<const ExtElem> u(grouped.data() + static_cast<size_t>(b) * p.r, static_cast<size_t>(p.r));
        for (int j = 0; j < p.group_size; ++j) out.push_back(gm.a_inst.column_dot(j, u));
    }
    return out;
}

std::vector<uint32_t> rs_stripe(const BaseField &base, const std::vector<uint32_t> &alphas,
                                const std::vector<uint32_t> &message) {
    std::vector<uint32_t> out;
    out.reserve(alphas.size());
    for (uint32_t alpha : alphas) {
        base.check_element(alpha);
        uint32_t acc = 0;
        for (size_t i = message.size(); i-- > 0;) {
            base.check_element(message[i]);
            acc = base.add(base.mul(acc, alpha), message[i]);
        }
        out.push_back(acc);
    }
    return out;
}

} // namespace lrc
