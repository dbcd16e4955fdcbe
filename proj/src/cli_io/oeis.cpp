#include "riderlab/cli_io.hpp"

#include "riderlab/counting.hpp"

#include "httplib.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace fs = std::filesystem;

namespace riderlab {

std::optional<BigInt> OeisEntry::at(long index) const {
    auto it = std::lower_bound(values.begin(), values.end(), index,
                               [](const auto& v, long k) { return v.first < k; });
    if (it == values.end() || it->first != index) return std::nullopt;
    return it->second;
}

bool is_sequence_id(const std::string& id) {
    static const std::regex re("^A[0-9]{6}$");
    return std::regex_match(id, re);
}

OeisEntry parse_bfile(const std::string& id, const std::string& text) {
    if (!is_sequence_id(id)) throw OeisError(OeisError::Kind::bad_id, "not a sequence id: " + id);
    OeisEntry e;
    e.id = id;
    std::optional<long> offset;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            long k;
            if (std::sscanf(line.c_str() + first, "# offset %ld", &k) == 1) offset = k;
            continue;
        }
        std::istringstream ls(line);
        std::string idx, val, extra;
        ls >> idx >> val;
        if (val.empty() || (ls >> extra))
            throw OeisError(OeisError::Kind::malformed, id + ": bad line " + std::to_string(lineno));
        long k;
        BigInt v;
        try {
            std::size_t used = 0;
            k = std::stol(idx, &used);
            if (used != idx.size()) throw std::invalid_argument(idx);
            if (v.set_str(val, 10) != 0) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw OeisError(OeisError::Kind::malformed, id + ": bad number on line " + std::to_string(lineno));
        }
        if (!e.values.empty() && k <= e.values.back().first)
            throw OeisError(OeisError::Kind::malformed, id + ": indices not increasing at line " + std::to_string(lineno));
        e.values.emplace_back(k, v);
    }
    if (e.values.empty()) throw OeisError(OeisError::Kind::malformed, id + ": no terms");
    e.offset = offset.value_or(e.values.front().first);
    return e;
}

std::string serialize_bfile(const OeisEntry& entry) {
    std::string s = "# " + entry.id + "\n# offset " + std::to_string(entry.offset) + "\n";
    for (const auto& [k, v] : entry.values) s += std::to_string(k) + " " + v.get_str() + "\n";
    return s;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("RIDERLAB_CACHE"); env && *env) return env;
    return ".riderlab-cache";
}

namespace {

std::string bfile_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

std::string download(const std::string& id) {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
    httplib::Client cli("https://oeis.org");
    cli.set_follow_location(true);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(30);
    auto res = cli.Get("/" + id + "/" + bfile_name(id));
    if (!res) throw OeisError(OeisError::Kind::network, id + ": " + httplib::to_string(res.error()));
    if (res->status != 200) throw OeisError(OeisError::Kind::network, id + ": HTTP " + std::to_string(res->status));
    return res->body;
#else
    throw OeisError(OeisError::Kind::network, id + ": built without TLS support");
#endif
}

}  // namespace

OeisEntry oeis_fetch(const std::string& id, const std::string& cache_dir, bool allow_network) {
    if (!is_sequence_id(id)) throw OeisError(OeisError::Kind::bad_id, "not a sequence id: " + id);
    const fs::path path = fs::path(cache_dir) / bfile_name(id);
    if (fs::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_bfile(id, ss.str());
    }
    if (!allow_network) throw OeisError(OeisError::Kind::network, id + ": not cached and network disabled");
    const std::string body = download(id);
    auto entry = parse_bfile(id, body);  // reject junk before caching it
    fs::create_directories(cache_dir);
    std::ofstream(path, std::ios::binary) << body;
    return entry;
}

const std::vector<OeisMapping>& oeis_table() {
    static const std::vector<OeisMapping> table = [] {
        std::vector<OeisMapping> t;
        for (const char* f : {"rook", "bishop", "queen", "nightrider"}) t.push_back({f, 1, "A000290", 0});
        t.push_back({"rook", 2, "A163102", 1});
        const char* rooks[] = {"A179058", "A179059", "A179060", "A179061", "A179062", "A179063", "A179064", "A179065"};
        for (unsigned q = 3; q <= 10; ++q) t.push_back({"rook", q, rooks[q - 3], 0});
        const char* bishops[] = {"A172123", "A172124", "A172127", "A172129", "A176886",
                                 "A187239", "A187240", "A187241", "A187242"};
        for (unsigned q = 2; q <= 10; ++q) t.push_back({"bishop", q, bishops[q - 2], 0});
        const char* queens[] = {"A036464", "A047659", "A061994", "A108792", "A176186", "A178721"};
        for (unsigned q = 2; q <= 7; ++q) t.push_back({"queen", q, queens[q - 2], 0});
        t.push_back({"nightrider", 2, "A172141", 0});
        t.push_back({"nightrider", 3, "A173429", 0});
        return t;
    }();
    return table;
}

std::optional<OeisMapping> oeis_mapping(const PieceSpec& piece, unsigned q) {
    auto sorted = [](std::vector<Move> m) {
        std::sort(m.begin(), m.end());
        return m;
    };
    const auto mine = sorted(piece.moves);
    for (const auto& m : oeis_table())
        if (m.q == q && sorted(parse_piece(m.family).moves) == mine) return m;
    return std::nullopt;
}

VerifyReport verify_against_entry(const PieceSpec& piece, unsigned q, long n_max, const OeisEntry& entry, long shift) {
    VerifyReport r;
    r.id = entry.id;
    r.shift = shift;
    for (long n = 1; n <= n_max; ++n) {
        const auto expected = entry.at(n - shift);
        if (!expected) {
            // below the sequence offset is fine, above its last term is not
            if (n - shift >= entry.offset) r.missing.push_back(n);
            continue;
        }
        const BigInt got = count_placements(piece, q, static_cast<unsigned>(n));
        ++r.checked;
        if (got != *expected) r.mismatches.push_back({n, *expected, got});
    }
    return r;
}

VerifyReport verify_against_oeis(const PieceSpec& piece, unsigned q, long n_max, const std::string& cache_dir,
                                 bool allow_network) {
    const auto m = oeis_mapping(piece, q);
    if (!m) throw OeisError(OeisError::Kind::unmapped, "no OEIS sequence for " + piece.str() + " q=" + std::to_string(q));
    return verify_against_entry(piece, q, n_max, oeis_fetch(m->id, cache_dir, allow_network), m->shift);
}

}  // namespace riderlab
