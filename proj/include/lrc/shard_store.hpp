#pragma once

#include "lrc/codec.hpp"
#include "lrc/construction.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace lrc::cli {

inline constexpr int kManifestFormatVersion = 1;

/// CRC-32 (reflected polynomial 0xEDB88320, zlib-compatible).
uint32_t crc32(std::span<const uint8_t> data);

/// On-disk description of an encoded file. Stored as manifest.json next to
/// the shards; field parameters are re-validated on load and the extension
/// modulus and alphas are recorded verbatim so rebuilds are byte-stable.
struct Manifest {
    int format_version = kManifestFormatVersion;
    int n = 0, k = 0, r = 0, delta = 2;
    std::string field;                  // base-field descriptor
    std::vector<uint32_t> ext_modulus;  // constant term first, monic
    std::vector<uint32_t> alphas;
    uint64_t original_length = 0;
    uint64_t stripe_count = 0;
    uint32_t checksum = 0;              // CRC-32 of the original file
    std::vector<std::string> shards;    // payload filenames, codeword order

    std::string to_json() const;
    static Manifest from_json(const std::string &text);
};

/// Bytes consumed per base symbol when packing input (largest b with
/// 256^b <= order) and bytes used to serialize one base symbol (smallest b
/// with 256^b >= order). Equal for gf2:8 / gf2:16; for prime fields the
/// output is one byte wider than the input.
int packing_input_bytes(const BaseField &base);
int packing_output_bytes(const BaseField &base);

/// Splits raw bytes into message stripes of k extension symbols each
/// (little-endian base symbols, constant coefficient first, zero padding at
/// the tail).
std::vector<Symbols> pack_messages(std::span<const uint8_t> bytes, const ExtField &field, int k);

/// Inverse of pack_messages; truncates to original_length.
std::vector<uint8_t> unpack_messages(const std::vector<Symbols> &stripes, const ExtField &field,
                                     uint64_t original_length);

struct EncodeOptions {
    int n = 0, k = 0, r = 0;
    int delta = 2;
    std::string field = "gf2:8";
};

/// Encodes input into n shard files plus manifest.json in out_dir.
Manifest cmd_encode(const std::filesystem::path &input, const std::filesystem::path &out_dir,
                    const EncodeOptions &options);

/// Reconstructs the original file from the shards present in dir. Reads only
/// k shards (a greedy independent set of the survivors). Throws RankDeficient
/// when the survivors cannot span and ChecksumMismatch when the rebuilt bytes
/// fail CRC validation.
void cmd_decode(const std::filesystem::path &dir, const std::filesystem::path &output);

struct RepairOutcome {
    int shard_index = 0;              // 1-based, as in the shard filename
    std::vector<int> read_indices;    // 1-based shards actually read
    std::filesystem::path shard_path; // rebuilt file
};

/// Rebuilds one missing shard from its group, reading only group-local
/// shards. shard_index is 1-based to match the shard_###.bin names.
RepairOutcome cmd_repair(const std::filesystem::path &dir, int shard_index);

struct AnalyzeOptions {
    uint64_t mc_trials = 10000;
    uint64_t seed = 0;
};

struct AnalyzeOutcome {
    bool optimal = false;
    std::string report_json;
};

/// Matroid + decodability report for a construction instance.
AnalyzeOutcome cmd_analyze(const EncodeOptions &code, const AnalyzeOptions &options);

/// Same, for an externally supplied generator matrix dump; locality r must
/// be stated since a bare matrix does not carry it.
AnalyzeOutcome cmd_analyze_dump(const std::filesystem::path &dump_file, int r, int delta,
                                const AnalyzeOptions &options);

std::string shard_filename(int index_1based);

} // namespace lrc::cli
