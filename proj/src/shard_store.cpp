#include "lrc/shard_store.hpp"

#include "lrc/analysis.hpp"
#include "lrc/errors.hpp"
#include "lrc/matroid.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lrc::cli {

namespace fs = std::filesystem;
using nlohmann::json;

uint32_t crc32(std::span<const uint8_t> data) {
    static const std::array<uint32_t, 256> table = [] {
        std::array<uint32_t, 256> t{};
        for (uint32_t i = 0; i < 256; ++i) {
            uint32_t c = i;
            for (int b = 0; b < 8; ++b) c = (c & 1u) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            t[i] = c;
        }
        return t;
    }();
    uint32_t crc = 0xFFFFFFFFu;
    for (uint8_t byte : data) crc = table[(crc ^ byte) & 0xFFu] ^ (crc >> 8);
    return crc ^ 0xFFFFFFFFu;
}

std::string shard_filename(int index_1based) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "shard_%03d.bin", index_1based);
    return buf;
}

std::string Manifest::to_json() const {
    json j;
    j["format_version"] = format_version;
    j["n"] = n;
    j["k"] = k;
    j["r"] = r;
    j["delta"] = delta;
    j["field"] = field;
    j["ext_modulus"] = ext_modulus;
    j["alphas"] = alphas;
    j["original_length"] = original_length;
    j["stripe_count"] = stripe_count;
    j["checksum"] = checksum;
    j["shards"] = shards;
    return j.dump(2) + "\n";
}

Manifest Manifest::from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw ParamError(std::string("manifest is not valid JSON: ") + e.what());
    }
    try {
        Manifest m;
        m.format_version = j.at("format_version").get<int>();
        if (m.format_version != kManifestFormatVersion)
            throw ParamError("unsupported manifest format_version " + std::to_string(m.format_version));
        m.n = j.at("n").get<int>();
        m.k = j.at("k").get<int>();
        m.r = j.at("r").get<int>();
        m.delta = j.at("delta").get<int>();
        m.field = j.at("field").get<std::string>();
        m.ext_modulus = j.at("ext_modulus").get<std::vector<uint32_t>>();
        m.alphas = j.at("alphas").get<std::vector<uint32_t>>();
        m.original_length = j.at("original_length").get<uint64_t>();
        m.stripe_count = j.at("stripe_count").get<uint64_t>();
        m.checksum = j.at("checksum").get<uint32_t>();
        m.shards = j.at("shards").get<std::vector<std::string>>();
        return m;
    } catch (const json::exception &e) {
        throw ParamError(std::string("manifest field error: ") + e.what());
    }
}

int packing_input_bytes(const BaseField &base) {
    int b = 0;
    uint64_t cap = 1;
    while (cap * 256 <= base.order()) {
        cap *= 256;
        ++b;
    }
    return b;
}

int packing_output_bytes(const BaseField &base) {
    int b = 0;
    uint64_t cap = 1;
    while (cap < base.order()) {
        cap *= 256;
        ++b;
    }
    return b;
}

namespace {

std::vector<uint8_t> read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failure on " + path.string());
    return bytes;
}

void write_file(const fs::path &path, std::span<const uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + path.string());
    out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failure on " + path.string());
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + path.string());
    out << text;
    if (!out) throw IoError("write failure on " + path.string());
}

CodeParams params_from_manifest(const Manifest &m, BaseField &base_out) {
    base_out = BaseField::parse(m.field);
    return make_params(m.n, m.k, m.r, m.delta, base_out, m.alphas);
}

GeneratorMatrix generator_from_manifest(const Manifest &m) {
    BaseField base = BaseField::prime(2);
    CodeParams params = params_from_manifest(m, base);
    GeneratorMatrix gm = build_generator(params);
    if (gm.field.modulus() != m.ext_modulus)
        throw ParamError("manifest extension modulus differs from the canonical construction");
    return gm;
}

uint64_t payload_size(const Manifest &m, const ExtField &field) {
    return m.stripe_count * static_cast<uint64_t>(field.degree()) *
           static_cast<uint64_t>(packing_output_bytes(field.base()));
}

void append_symbol(std::vector<uint8_t> &out, const ExtElem &sym, int out_b) {
    for (uint32_t coeff : sym)
        for (int b = 0; b < out_b; ++b) out.push_back(static_cast<uint8_t>(coeff >> (8 * b)));
}

ExtElem read_symbol(std::span<const uint8_t> payload, uint64_t stripe, const ExtField &field, int out_b) {
    const int e = field.degree();
    ExtElem sym(static_cast<size_t>(e), 0);
    size_t pos = static_cast<size_t>(stripe) * e * out_b;
    for (int c = 0; c < e; ++c) {
        uint32_t v = 0;
        for (int b = 0; b < out_b; ++b) v |= static_cast<uint32_t>(payload[pos++]) << (8 * b);
        field.base().check_element(v);
        sym[static_cast<size_t>(c)] = v;
    }
    return sym;
}

} // namespace

std::vector<Symbols> pack_messages(std::span<const uint8_t> bytes, const ExtField &field, int k) {
    const int in_b = packing_input_bytes(field.base());
    if (in_b < 1)
        throw ParamError("field " + field.base().descriptor() +
                         " cannot hold whole bytes; use gf2:8, gf2:16 or a prime field of order >= 257");
    const int e = field.degree();
    const uint64_t n_base = (bytes.size() + in_b - 1) / in_b;
    const uint64_t per_stripe = static_cast<uint64_t>(k) * e;
    const uint64_t stripes = (n_base + per_stripe - 1) / per_stripe;

    std::vector<Symbols> out;
    out.reserve(static_cast<size_t>(stripes));
    size_t pos = 0;
    for (uint64_t s = 0; s < stripes; ++s) {
        Symbols msg;
        msg.reserve(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            ExtElem sym(static_cast<size_t>(e), 0);
            for (int c = 0; c < e; ++c) {
                uint32_t v = 0;
                for (int b = 0; b < in_b && pos < bytes.size(); ++b, ++pos)
                    v |= static_cast<uint32_t>(bytes[pos]) << (8 * b);
                sym[static_cast<size_t>(c)] = v;
            }
            msg.push_back(std::move(sym));
        }
        out.push_back(std::move(msg));
    }
    return out;
}

std::vector<uint8_t> unpack_messages(const std::vector<Symbols> &stripes, const ExtField &field,
                                     uint64_t original_length) {
    const int in_b = packing_input_bytes(field.base());
    std::vector<uint8_t> bytes;
    bytes.reserve(original_length);
    for (const auto &msg : stripes) {
        for (const auto &sym : msg) {
            for (uint32_t coeff : sym)
                for (int b = 0; b < in_b; ++b) bytes.push_back(static_cast<uint8_t>(coeff >> (8 * b)));
        }
    }
    if (bytes.size() < original_length) throw ParamError("stripes shorter than the recorded length");
    bytes.resize(original_length);
    return bytes;
}

Manifest cmd_encode(const fs::path &input, const fs::path &out_dir, const EncodeOptions &options) {
    const BaseField base = BaseField::parse(options.field);
    CodeParams params = make_params(options.n, options.k, options.r, options.delta, base);
    GeneratorMatrix gm = build_generator(params);

    const std::vector<uint8_t> bytes = read_file(input);
    const std::vector<Symbols> messages = pack_messages(bytes, gm.field, params.k);
    const int out_b = packing_output_bytes(base);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create directory " + out_dir.string());

    std::vector<std::vector<uint8_t>> payloads(static_cast<size_t>(params.n));
    const uint64_t per_shard = messages.size() * static_cast<uint64_t>(gm.field.degree()) * out_b;
    for (auto &p : payloads) p.reserve(per_shard);
    for (const auto &msg : messages) {
        Symbols cw = encode(gm, msg);
        for (int i = 0; i < params.n; ++i) append_symbol(payloads[static_cast<size_t>(i)], cw[static_cast<size_t>(i)], out_b);
    }

    Manifest m;
    m.n = params.n;
    m.k = params.k;
    m.r = params.r;
    m.delta = params.delta;
    m.field = base.descriptor();
    m.ext_modulus = gm.field.modulus();
    m.alphas = params.alphas;
    m.original_length = bytes.size();
    m.stripe_count = messages.size();
    m.checksum = crc32(bytes);
    for (int i = 1; i <= params.n; ++i) m.shards.push_back(shard_filename(i));

    for (int i = 0; i < params.n; ++i)
        write_file(out_dir / m.shards[static_cast<size_t>(i)], payloads[static_cast<size_t>(i)]);
    write_text(out_dir / "manifest.json", m.to_json());
    return m;
}

namespace {

Manifest load_manifest(const fs::path &dir) {
    const fs::path path = dir / "manifest.json";
    std::ifstream in(path);
    if (!in) throw IoError("missing manifest: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return Manifest::from_json(ss.str());
}

} // namespace

void cmd_decode(const fs::path &dir, const fs::path &output) {
    const Manifest m = load_manifest(dir);
    GeneratorMatrix gm = generator_from_manifest(m);
    const uint64_t expect_size = payload_size(m, gm.field);
    const int out_b = packing_output_bytes(gm.field.base());

    if (m.stripe_count == 0) {
        std::vector<uint8_t> empty;
        if (crc32(empty) != m.checksum) throw ChecksumMismatch("empty payload fails checksum");
        write_file(output, empty);
        return;
    }

    std::vector<int> available;
    for (int i = 0; i < m.n; ++i) {
        const fs::path p = dir / m.shards[static_cast<size_t>(i)];
        std::error_code ec;
        if (fs::exists(p, ec) && fs::file_size(p, ec) == expect_size) available.push_back(i);
    }
    DecodePlan plan = make_decode_plan(gm, available); // RankDeficient if survivors cannot span

    std::vector<std::vector<uint8_t>> payloads;
    payloads.reserve(plan.cols.size());
    for (int c : plan.cols) payloads.push_back(read_file(dir / m.shards[static_cast<size_t>(c)]));

    std::vector<Symbols> messages;
    messages.reserve(static_cast<size_t>(m.stripe_count));
    for (uint64_t s = 0; s < m.stripe_count; ++s) {
        Symbols values;
        values.reserve(plan.cols.size());
        for (size_t i = 0; i < plan.cols.size(); ++i) values.push_back(read_symbol(payloads[i], s, gm.field, out_b));
        messages.push_back(apply_decode_plan(plan, values));
    }

    std::vector<uint8_t> bytes = unpack_messages(messages, gm.field, m.original_length);
    if (crc32(bytes) != m.checksum)
        throw ChecksumMismatch("reconstructed file fails CRC-32 validation");
    write_file(output, bytes);
}

RepairOutcome cmd_repair(const fs::path &dir, int shard_index) {
    const Manifest m = load_manifest(dir);
    if (shard_index < 1 || shard_index > m.n)
        throw ParamError("shard index must be in 1.." + std::to_string(m.n));
    GeneratorMatrix gm = generator_from_manifest(m);
    const uint64_t expect_size = payload_size(m, gm.field);
    const int out_b = packing_output_bytes(gm.field.base());
    const int target = shard_index - 1;
    const int group = group_of(gm.params, target);

    // every group member missing from disk is treated as erased
    std::vector<int> erased;
    for (int c : group_columns(gm.params, group)) {
        const fs::path p = dir / m.shards[static_cast<size_t>(c)];
        std::error_code ec;
        if (!(fs::exists(p, ec) && fs::file_size(p, ec) == expect_size)) erased.push_back(c);
    }
    if (std::find(erased.begin(), erased.end(), target) == erased.end())
        erased.push_back(target); // allow re-repair of a present shard

    RepairPlan plan = make_repair_plan(gm, group, erased);

    std::vector<std::vector<uint8_t>> payloads;
    payloads.reserve(plan.read_cols.size());
    for (int c : plan.read_cols) payloads.push_back(read_file(dir / m.shards[static_cast<size_t>(c)]));

    std::vector<uint8_t> rebuilt;
    rebuilt.reserve(expect_size);
    const auto target_slot = static_cast<size_t>(
        std::find(plan.erased_cols.begin(), plan.erased_cols.end(), target) - plan.erased_cols.begin());
    for (uint64_t s = 0; s < m.stripe_count; ++s) {
        Symbols reads;
        reads.reserve(plan.read_cols.size());
        for (size_t i = 0; i < plan.read_cols.size(); ++i)
            reads.push_back(read_symbol(payloads[i], s, gm.field, out_b));
        Symbols fixed = apply_repair_plan(plan, reads);
        append_symbol(rebuilt, fixed[target_slot], out_b);
    }

    RepairOutcome outcome;
    outcome.shard_index = shard_index;
    for (int c : plan.read_cols) outcome.read_indices.push_back(c + 1);
    outcome.shard_path = dir / m.shards[static_cast<size_t>(target)];
    write_file(outcome.shard_path, rebuilt);
    return outcome;
}

namespace {

json rational_json(const Rational &q) {
    return json{{"num", q.num().to_string()}, {"den", q.den().to_string()}};
}

json circuits_json(const std::vector<Circuit> &circuits) {
    json out = json::array();
    for (const auto &c : circuits) {
        json members = json::array();
        for (int i : c.members) members.push_back(i + 1); // report 1-based positions
        out.push_back(members);
    }
    return out;
}

json matroid_json(const MatroidReport &r) {
    json j;
    j["nontrivial_circuits"] = circuits_json(r.nontrivial_circuits);
    j["mu"] = r.mu;
    j["d_formula"] = r.d_formula;
    j["d_oracle"] = r.d_oracle;
    j["optimal"] = r.verdict.optimal;
    j["circuits_partition"] = r.verdict.circuits_partition;
    j["detail"] = r.verdict.detail;
    if (r.verdict.witness_index >= 0) j["witness_index"] = r.verdict.witness_index + 1;
    if (!r.verdict.witness_family.empty()) j["witness_family"] = circuits_json(r.verdict.witness_family);
    return j;
}

json decodability_json(const DecodabilityReport &r) {
    json j;
    if (r.p_exact) j["p_exact"] = rational_json(*r.p_exact);
    if (r.p_union_bound) j["p_union_bound"] = rational_json(*r.p_union_bound);
    if (r.p_ratio_bound) j["p_ratio_bound"] = rational_json(*r.p_ratio_bound);
    if (r.p_brute) j["p_brute"] = rational_json(*r.p_brute);
    if (r.p_monte_carlo)
        j["monte_carlo"] = json{{"estimate", *r.p_monte_carlo}, {"trials", r.mc_trials}, {"seed", r.mc_seed}};
    return j;
}

AnalyzeOutcome analyze_matrix(const Matrix &g, int k, int r, int delta, const AnalyzeOptions &options,
                              json header) {
    MatroidReport matroid = analyze_matroid(g, r, delta);
    DecodabilityReport dec = analyze_decodability(g, k, r, delta, options.mc_trials, options.seed);
    json j;
    j["code"] = std::move(header);
    j["matroid"] = matroid_json(matroid);
    j["decodability"] = decodability_json(dec);
    return AnalyzeOutcome{matroid.verdict.optimal, j.dump(2) + "\n"};
}

} // namespace

AnalyzeOutcome cmd_analyze(const EncodeOptions &code, const AnalyzeOptions &options) {
    const BaseField base = BaseField::parse(code.field);
    CodeParams params = make_params(code.n, code.k, code.r, code.delta, base);
    GeneratorMatrix gm = build_generator(params);
    json header;
    header["n"] = params.n;
    header["k"] = params.k;
    header["r"] = params.r;
    header["delta"] = params.delta;
    header["field"] = base.descriptor();
    header["ext_degree"] = params.ext_degree;
    return analyze_matrix(gm.G, params.k, params.r, params.delta, options, std::move(header));
}

AnalyzeOutcome cmd_analyze_dump(const fs::path &dump_file, int r, int delta, const AnalyzeOptions &options) {
    std::ifstream in(dump_file);
    if (!in) throw IoError("cannot open " + dump_file.string());
    Matrix g = parse_matrix_text(in);
    json header;
    header["n"] = g.cols();
    header["k"] = g.rows();
    header["r"] = r;
    header["delta"] = delta;
    header["field"] = g.field().base().descriptor();
    header["ext_degree"] = g.field().degree();
    return analyze_matrix(g, g.rows(), r, delta, options, std::move(header));
}

} // namespace lrc::cli
