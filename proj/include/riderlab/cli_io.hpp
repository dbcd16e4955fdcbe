#pragma once

// OEIS b-files and cache, verification, SVG and CSV output, run manifests.

#include "riderlab/configs.hpp"
#include "riderlab/exactmath.hpp"
#include "riderlab/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riderlab {

class OeisError : public std::runtime_error {
public:
    enum class Kind { bad_id, malformed, network, unmapped };
    OeisError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct OeisEntry {
    std::string id;  ///< "A036464"
    long offset = 0;
    std::vector<std::pair<long, BigInt>> values;  ///< strictly increasing index

    std::optional<BigInt> at(long index) const;
    friend bool operator==(const OeisEntry&, const OeisEntry&) = default;
};

bool is_sequence_id(const std::string& id);

/// "n value" lines; '#' comments. A "# offset k" comment sets the offset,
/// otherwise the first index is used.
OeisEntry parse_bfile(const std::string& id, const std::string& text);
std::string serialize_bfile(const OeisEntry& entry);

/// RIDERLAB_CACHE if set, else ".riderlab-cache".
std::string default_cache_dir();

/// Cached b-file, fetched over HTTPS on a miss when allowed.
OeisEntry oeis_fetch(const std::string& id, const std::string& cache_dir, bool allow_network = true);

struct OeisMapping {
    std::string family;  ///< rook, bishop, queen, nightrider
    unsigned q = 0;
    std::string id;
    long shift = 0;  ///< board size n = OEIS index + shift
};

const std::vector<OeisMapping>& oeis_table();
std::optional<OeisMapping> oeis_mapping(const PieceSpec& piece, unsigned q);

struct VerifyReport {
    std::string id;
    long shift = 0;
    long checked = 0;
    struct Mismatch {
        long n;
        BigInt expected;
        BigInt actual;
    };
    std::vector<Mismatch> mismatches;
    std::vector<long> missing;  ///< n with no OEIS value

    bool passed() const { return mismatches.empty() && missing.empty() && checked > 0; }
};

/// Brute counts for n = 1..n_max against the mapped sequence. Throws
/// OeisError(unmapped) when the table has no entry.
VerifyReport verify_against_oeis(const PieceSpec& piece, unsigned q, long n_max, const std::string& cache_dir,
                                 bool allow_network = true);
VerifyReport verify_against_entry(const PieceSpec& piece, unsigned q, long n_max, const OeisEntry& entry, long shift);

struct SvgOptions {
    double cell = 24;         ///< pixels per unit, shrunk for large extents
    double max_canvas = 2400; ///< pixels
    bool grid = true;
    bool labels = true;
};

std::string emit_svg(const GeneratedConfig& config, const SvgOptions& opts = {});
std::string emit_svg(const Trajectory& trajectory, const SvgOptions& opts = {});

/// "n,count" header then one row per value.
std::string counts_csv(const std::vector<std::pair<long, BigInt>>& rows);

struct RunManifest {
    std::string command;
    std::string piece;
    unsigned q = 0;
    long n_min = 0;
    long n_max = 0;
    std::vector<std::string> outputs;
    std::vector<std::string> cache_keys;
    std::string started;
    std::string finished;

    std::string to_json() const;
};

/// UTC, ISO 8601.
std::string utc_timestamp();

}  // namespace riderlab
