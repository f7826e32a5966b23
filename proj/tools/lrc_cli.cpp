// lrc: shard files with a locally repairable code, rebuild lost shards from
// their group, reconstruct files, and certify code optimality.
//
// Exit codes: 0 success, 1 analyze verdict "not optimal", 2 parameter or
// usage error, 3 not enough shards to decode/repair, 4 integrity failure.

#include "lrc/errors.hpp"
#include "lrc/shard_store.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

int run(int argc, char **argv) {
    CLI::App app{"locally repairable erasure coding toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // let global flags appear after the subcommand

    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "narrate shard reads and writes");

    lrc::cli::EncodeOptions code;
    std::string input_path, output_path, dir_path, dump_path;
    int shard_index = 0;
    lrc::cli::AnalyzeOptions analysis;
    int analyze_r = 0;
    int analyze_delta = 2;

    auto add_code_flags = [&](CLI::App *cmd, bool required) {
        cmd->add_option("--n", code.n, "code length")->required(required);
        cmd->add_option("--k", code.k, "message symbols")->required(required);
        cmd->add_option("--r", code.r, "repair locality")->required(required);
        cmd->add_option("--delta", code.delta, "local code distance (default 2)");
        cmd->add_option("--field", code.field, "base field, prime:<p> or gf2:<s> (default gf2:8)");
    };

    CLI::App *enc = app.add_subcommand("encode", "shard a file into <dir> with a manifest");
    enc->add_option("input", input_path, "file to encode")->required();
    enc->add_option("--out", dir_path, "output directory")->required();
    add_code_flags(enc, true);

    CLI::App *dec = app.add_subcommand("decode", "reconstruct the file from surviving shards");
    dec->add_option("dir", dir_path, "shard directory")->required();
    dec->add_option("--out", output_path, "output file")->required();

    CLI::App *rep = app.add_subcommand("repair", "rebuild one shard from its repair group");
    rep->add_option("dir", dir_path, "shard directory")->required();
    rep->add_option("shard", shard_index, "1-based shard index to rebuild")->required();

    CLI::App *ana = app.add_subcommand("analyze", "matroid and decodability report");
    add_code_flags(ana, false);
    ana->add_option("--gdump", dump_path, "analyze a generator matrix dump instead of building one");
    ana->add_option("--trials", analysis.mc_trials, "Monte Carlo trials (default 10000, 0 disables)");
    ana->add_option("--seed", analysis.seed, "Monte Carlo seed (default 0)");

    CLI11_PARSE(app, argc, argv);

    if (enc->parsed()) {
        lrc::cli::Manifest m = lrc::cli::cmd_encode(input_path, dir_path, code);
        if (verbose)
            std::cout << "wrote " << m.shards.size() << " shards, " << m.stripe_count << " stripes, manifest.json\n";
        return 0;
    }
    if (dec->parsed()) {
        lrc::cli::cmd_decode(dir_path, output_path);
        if (verbose) std::cout << "decoded to " << output_path << "\n";
        return 0;
    }
    if (rep->parsed()) {
        lrc::cli::RepairOutcome out = lrc::cli::cmd_repair(dir_path, shard_index);
        if (verbose) {
            std::cout << "read shards:";
            for (int i : out.read_indices) std::cout << ' ' << lrc::cli::shard_filename(i);
            std::cout << "\nrebuilt " << out.shard_path.string() << "\n";
        }
        return 0;
    }
    // analyze
    lrc::cli::AnalyzeOutcome out;
    if (!dump_path.empty()) {
        if (analyze_r == 0) analyze_r = code.r;
        if (analyze_r < 1) throw lrc::ParamError("analyze --gdump needs --r");
        analyze_delta = code.delta;
        out = lrc::cli::cmd_analyze_dump(dump_path, analyze_r, analyze_delta, analysis);
    } else {
        if (code.n == 0 || code.k == 0 || code.r == 0)
            throw lrc::ParamError("analyze needs --n, --k and --r (or --gdump)");
        out = lrc::cli::cmd_analyze(code, analysis);
    }
    std::cout << out.report_json;
    return out.optimal ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const lrc::RankDeficient &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const lrc::TooManyLocalErasures &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const lrc::ChecksumMismatch &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const lrc::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
