#include "riderlab/cli.hpp"

#include "riderlab/cli_io.hpp"
#include "riderlab/counting.hpp"
#include "riderlab/polytope.hpp"
#include "riderlab/quasipoly.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace riderlab {

namespace {

struct Args {
    std::string piece;
    unsigned q = 0;
    long n_max = 0;
    std::string board = "square";
    std::string csv;
    unsigned period_max = 1;
    std::string json;
    std::uint64_t budget = 0;
    std::string dump;
    std::string kind;
    std::string svg;
    std::string assign;
    unsigned choice = 0;
    bool oeis = false;
    bool formula = false;
    std::string id;
    std::string cache;
    std::string manifest;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    Args a;
    std::ostream& out;
    std::ostream& err;
    RunManifest manifest;

    void write_file(const std::string& path, const std::string& text) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + path);
        f << text;
        manifest.outputs.push_back(path);
    }

    std::string cache_dir() const { return a.cache.empty() ? default_cache_dir() : a.cache; }
};

std::vector<std::pair<long, BigInt>> counts(const PieceSpec& piece, const Board& board, unsigned q, long n_max) {
    std::vector<std::pair<long, BigInt>> rows;
    for (long n = 1; n <= n_max; ++n) rows.emplace_back(n, count_placements(piece, board, q, static_cast<unsigned>(n)));
    return rows;
}

int cmd_count(Context& c) {
    const auto piece = parse_piece(c.a.piece);
    const Board board = parse_board_kind(c.a.board) == BoardKind::triangle ? Board::triangle() : Board::square();
    const auto text = counts_csv(counts(piece, board, c.a.q, c.a.n_max));
    c.out << text;
    if (!c.a.csv.empty()) c.write_file(c.a.csv, text);
    return 0;
}

int cmd_fit(Context& c) {
    const auto piece = parse_piece(c.a.piece);
    const unsigned degree = 2 * c.a.q;
    const long n_max = static_cast<long>(c.a.period_max) * (degree + 2);
    c.manifest.n_min = 1;
    c.manifest.n_max = n_max;
    const auto rows = counts(piece, Board::square(), c.a.q, n_max);
    const Rational lead = Rational(1) / Rational(factorial(c.a.q));
    unsigned p;
    try {
        p = detect_period(rows, degree, c.a.period_max, 2, lead);
    } catch (const FitError& e) {
        if (e.kind() != FitError::Kind::no_period) throw;
        c.err << "no period <= " << c.a.period_max << " fits\n";
        return 1;
    }
    const auto text = to_json(interpolate(rows, degree, p, lead)) + "\n";
    c.out << text;
    if (!c.a.json.empty()) c.write_file(c.a.json, text);
    return 0;
}

int cmd_period(Context& c) {
    const auto piece = parse_piece(c.a.piece);
    const unsigned degree = 2 * c.a.q;
    const auto rows = counts(piece, Board::square(), c.a.q, c.a.n_max);
    const unsigned max_p = std::max<long>(1, c.a.n_max / (degree + 2));
    try {
        c.out << "period=" << detect_period(rows, degree, max_p, 2, Rational(1) / Rational(factorial(c.a.q))) << "\n";
    } catch (const FitError& e) {
        if (e.kind() != FitError::Kind::no_period) throw;
        c.out << "period=none (max tested " << max_p << ")\n";
        return 1;
    }
    return 0;
}

VertexOptions vertex_options(const Args& a) {
    VertexOptions o;
    if (a.budget) {
        o.allow_large_q = true;
        o.max_nodes = a.budget;
    }
    return o;
}

int cmd_denom(Context& c) {
    const auto vs = enumerate_vertices(parse_piece(c.a.piece), c.a.q, vertex_options(c.a));
    const auto ds = vertex_denominators(vs);
    c.out << "D=" << polytope_denominator(vs) << "\nmax_delta=" << ds.back() << "\nvertices=" << vs.size()
          << "\ndenominators=";
    for (std::size_t k = 0; k < ds.size(); ++k) c.out << (k ? "," : "") << ds[k];
    c.out << "\n";
    return 0;
}

int cmd_vertices(Context& c) {
    const auto vs = enumerate_vertices(parse_piece(c.a.piece), c.a.q, vertex_options(c.a));
    std::string text;
    for (const auto& v : vs) text += v.str() + "\n";
    if (c.a.dump.empty()) {
        c.out << text;
    } else {
        c.write_file(c.a.dump, text);
        c.out << "vertices=" << vs.size() << "\nD=" << polytope_denominator(vs) << "\n";
    }
    return 0;
}

std::array<Move, 4> parse_assignment(const std::string& text, const PieceSpec& piece) {
    std::array<Move, 4> m;
    if (text.empty()) {
        if (piece.moves.size() != 4) throw UsageError("twisted spiral needs a four-move piece");
        std::copy(piece.moves.begin(), piece.moves.end(), m.begin());
        return m;
    }
    // directed moves keep their sign, so read them without canonicalizing
    std::vector<Move> got;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ';')) {
        long c, d;
        if (std::sscanf(tok.c_str(), " (%ld,%ld)", &c, &d) != 2) throw UsageError("bad move in --assign: " + tok);
        got.push_back({c, d});
    }
    if (got.size() != 4) throw UsageError("--assign needs four moves");
    std::copy(got.begin(), got.end(), m.begin());
    return m;
}

int cmd_spiral(Context& c) {
    const auto piece = parse_piece(c.a.piece);
    GeneratedConfig g;
    PieceSpec check = piece;
    if (c.a.kind == "rectangle") {
        g = golden_rectangle(c.a.q);
        check = parse_piece("semiqueen");
    } else if (c.a.kind == "parallelogram") {
        const auto ch = parallelogram_choices(piece);
        if (c.a.choice >= ch.size()) throw UsageError("--choice out of range");
        g = golden_parallelogram(piece, ch[c.a.choice].first, ch[c.a.choice].second, c.a.q);
    } else if (c.a.kind == "spiral") {
        g = queens_spiral(c.a.q);
        check = parse_piece("queen");
    } else {
        g = twisted_spiral(piece, parse_assignment(c.a.assign, piece), c.a.q);
    }
    const auto [w, h] = g.extent();
    c.out << "label=" << g.label << "\ndelta=" << config_denominator(g) << "\nextent=" << w << "x" << h
          << "\nvertex=" << (is_vertex(g, check) ? "yes" : "no") << "\n";
    for (std::size_t k = 0; k < g.positions.size(); ++k)
        c.out << "P" << k + 1 << "=(" << g.positions[k].x << "," << g.positions[k].y << ")\n";
    if (!c.a.svg.empty()) c.write_file(c.a.svg, emit_svg(g));
    return 0;
}

int cmd_verify(Context& c) {
    const auto piece = parse_piece(c.a.piece);
    bool formula = c.a.formula, oeis = c.a.oeis;
    if (!formula && !oeis) formula = oeis = true;
    int status = 0;
    if (formula) {
        const auto f = formula_for_piece(piece, c.a.q);
        if (!f) {
            if (c.a.formula) throw UsageError("no closed form for " + piece.str() + " q=" + std::to_string(c.a.q));
        } else {
            long bad = 0;
            for (long n = 1; n <= c.a.n_max; ++n) {
                const Rational want = formula_eval(f->first, c.a.q, n, f->second);
                const BigInt got = count_placements(piece, c.a.q, static_cast<unsigned>(n));
                if (want != Rational(got)) {
                    ++bad;
                    c.out << "formula mismatch n=" << n << " expected=" << want << " count=" << got << "\n";
                }
            }
            c.out << "formula " << to_string(f->first) << ": " << (bad ? "FAIL" : "PASS") << "\n";
            if (bad) status = 1;
        }
    }
    if (oeis) {
        const auto m = oeis_mapping(piece, c.a.q);
        if (!m) {
            if (c.a.oeis) throw UsageError("no OEIS sequence for " + piece.str() + " q=" + std::to_string(c.a.q));
        } else {
            c.manifest.cache_keys.push_back(m->id);
            const auto r = verify_against_oeis(piece, c.a.q, c.a.n_max, c.cache_dir());
            for (const auto& mm : r.mismatches)
                c.out << "oeis mismatch n=" << mm.n << " expected=" << mm.expected << " count=" << mm.actual << "\n";
            for (long n : r.missing) c.out << "oeis missing n=" << n << "\n";
            c.out << "oeis " << r.id << " shift=" << r.shift << " checked=" << r.checked << ": "
                  << (r.passed() ? "PASS" : "FAIL") << "\n";
            if (!r.passed()) status = 1;
        }
    }
    return status;
}

int cmd_oeis(Context& c) {
    c.manifest.cache_keys.push_back(c.a.id);
    c.out << serialize_bfile(oeis_fetch(c.a.id, c.cache_dir()));
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Context c{{}, out, err, {}};
    Args& a = c.a;
    CLI::App app{"Exact counts, quasipolynomials and denominators for nonattacking riders", "riderlab"};
    app.require_subcommand(1);
    app.add_option("--manifest", a.manifest, "Write a run manifest (JSON)");

    auto piece_q = [&](CLI::App* s) {
        s->add_option("--piece", a.piece, "Preset name or \"(c,d);...\"")->required();
        s->add_option("--q", a.q, "Number of pieces")->required()->check(CLI::PositiveNumber);
    };
    auto* count = app.add_subcommand("count", "Brute-force placement counts");
    piece_q(count);
    count->add_option("--n-max", a.n_max)->required()->check(CLI::PositiveNumber);
    count->add_option("--board", a.board)->check(CLI::IsMember({"square", "triangle"}));
    count->add_option("--csv", a.csv);

    auto* fit = app.add_subcommand("fit", "Fit the counting quasipolynomial");
    piece_q(fit);
    fit->add_option("--period-max", a.period_max)->required()->check(CLI::PositiveNumber);
    fit->add_option("--json", a.json);

    auto* period = app.add_subcommand("period", "Detect the period from counts");
    piece_q(period);
    period->add_option("--n-max", a.n_max)->required()->check(CLI::PositiveNumber);

    auto* denom = app.add_subcommand("denom", "Polytope denominator by vertex enumeration");
    piece_q(denom);
    denom->add_option("--budget", a.budget, "Node budget; allows q > 3");

    auto* vertices = app.add_subcommand("vertices", "Vertex dump");
    piece_q(vertices);
    vertices->add_option("--dump", a.dump);
    vertices->add_option("--budget", a.budget);

    auto* spiral = app.add_subcommand("spiral", "Generated vertex configurations");
    spiral->add_option("--kind", a.kind)->required()->check(CLI::IsMember({"rectangle", "parallelogram", "spiral", "twisted"}));
    piece_q(spiral);
    spiral->add_option("--svg", a.svg);
    spiral->add_option("--choice", a.choice, "Parallelogram index 0..5");
    spiral->add_option("--assign", a.assign, "Twisted spiral moves \"(c,d);...\"");

    auto* verify = app.add_subcommand("verify", "Compare counts with closed forms and OEIS");
    piece_q(verify);
    verify->add_option("--n-max", a.n_max)->required()->check(CLI::PositiveNumber);
    verify->add_flag("--oeis", a.oeis);
    verify->add_flag("--formula", a.formula);
    verify->add_option("--cache", a.cache);

    auto* oeis = app.add_subcommand("oeis", "Fetch or replay a b-file");
    oeis->add_option("--id", a.id)->required();
    oeis->add_option("--cache", a.cache);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto* sub = app.get_subcommands().front();
    c.manifest.command = sub->get_name();
    c.manifest.piece = a.piece;
    c.manifest.q = a.q;
    if (a.n_max) {
        c.manifest.n_min = 1;
        c.manifest.n_max = a.n_max;
    }
    c.manifest.started = utc_timestamp();

    int status;
    try {
        const std::string name = sub->get_name();
        if (name == "count") status = cmd_count(c);
        else if (name == "fit") status = cmd_fit(c);
        else if (name == "period") status = cmd_period(c);
        else if (name == "denom") status = cmd_denom(c);
        else if (name == "vertices") status = cmd_vertices(c);
        else if (name == "spiral") status = cmd_spiral(c);
        else if (name == "verify") status = cmd_verify(c);
        else status = cmd_oeis(c);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (!a.manifest.empty()) {
        c.manifest.finished = utc_timestamp();
        std::ofstream(a.manifest, std::ios::binary) << c.manifest.to_json();
    }
    return status;
}

}  // namespace riderlab
