#include "riderlab/configs.hpp"

#include "riderlab/counting.hpp"
#include "riderlab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace riderlab {

std::vector<Point> GeneratedConfig::unit_positions() const {
    std::vector<Point> out;
    for (const auto& p : positions) out.push_back({Rational(p.x, scale), Rational(p.y, scale)});
    return out;
}

std::pair<BigInt, BigInt> GeneratedConfig::extent() const {
    BigInt w = 0, h = 0;
    for (const auto& p : positions) {
        w = std::max(w, p.x);
        h = std::max(h, p.y);
    }
    return {w, h};
}

std::vector<Rational> flatten(const std::vector<Point>& points) {
    std::vector<Rational> z;
    for (const auto& p : points) {
        z.push_back(p.x);
        z.push_back(p.y);
    }
    return z;
}

Trajectory generate_trajectory(long c, long d, unsigned max_pieces) {
    if (c <= 0 || d <= 0 || std::gcd(c, d) != 1)
        throw std::invalid_argument("generate_trajectory: need c, d > 0 coprime");
    Trajectory t;
    t.anchor = {0, 0};
    if (max_pieces == 0) return t;
    t.points.push_back(t.anchor);
    const Board sq = Board::square();
    bool slope = true;
    while (t.points.size() < max_pieces) {
        const Point cur = t.points.back();
        Point next;
        if (slope) {
            const Rational tx = (Rational(1) - cur.x) / Rational(c), ty = (Rational(1) - cur.y) / Rational(d);
            const Rational s = std::min(tx, ty);
            next = {cur.x + s * Rational(c), cur.y + s * Rational(d)};
            t.moves_used.push_back({c, d});
        } else {
            next = {0, cur.y};
            t.moves_used.push_back({-1, 0});
        }
        t.points.push_back(next);
        if (next.y == 1 || sq.is_corner(next)) break;
        slope = !slope;
    }
    return t;
}

namespace {

struct Fix {
    unsigned piece;
    char axis;
    Rational value;
};

std::optional<std::vector<Rational>> solve_system(unsigned q, const std::vector<Equation>& eqs,
                                                  const std::vector<Fix>& fixes) {
    RationalMatrix a;
    RationalVector b;
    for (const auto& e : eqs) {
        const auto r = equation_row(e, q);
        a.emplace_back(r.begin(), r.end());
        b.emplace_back(0);
    }
    for (const auto& f : fixes) {
        RationalVector r(2 * q, 0);
        r[2 * (f.piece - 1) + (f.axis == 'y')] = 1;
        a.push_back(r);
        b.push_back(f.value);
    }
    auto s = solve_linear(a, b);
    if (!s) return std::nullopt;
    return s.x;
}

std::vector<Point> to_points(const std::vector<Rational>& z) {
    std::vector<Point> p;
    for (std::size_t k = 0; k + 1 < z.size(); k += 2) p.push_back({z[k], z[k + 1]});
    return p;
}

// Translate to min x = min y = 0, shrink the larger extent to 1, and rescale
// by the least common denominator. Fixations follow the bounding box.
GeneratedConfig normalize(const std::vector<Point>& pts, std::vector<Equation> eqs, std::string label) {
    Rational minx = pts[0].x, miny = pts[0].y, maxx = pts[0].x, maxy = pts[0].y;
    for (const auto& p : pts) {
        minx = std::min(minx, p.x);
        miny = std::min(miny, p.y);
        maxx = std::max(maxx, p.x);
        maxy = std::max(maxy, p.y);
    }
    const Rational w = maxx - minx, h = maxy - miny, ext = std::max(w, h);
    if (ext == 0) throw std::invalid_argument("configuration collapses to a point");

    std::vector<Point> unit;
    BigInt delta = 1;
    for (const auto& p : pts) {
        unit.push_back({(p.x - minx) / ext, (p.y - miny) / ext});
        delta = lcm(lcm(delta, unit.back().x.denominator()), unit.back().y.denominator());
    }
    GeneratedConfig g;
    g.scale = delta;
    for (const auto& u : unit)
        g.positions.push_back({(u.x * Rational(delta)).numerator(), (u.y * Rational(delta)).numerator()});

    auto first = [&](auto pred) {
        for (std::size_t k = 0; k < unit.size(); ++k)
            if (pred(unit[k])) return static_cast<unsigned>(k + 1);
        return 0u;
    };
    g.fixations.push_back(Constraint::fixation(first([](const Point& u) { return u.x == 0; }), 'x', 0));
    g.fixations.push_back(Constraint::fixation(first([](const Point& u) { return u.y == 0; }), 'y', 0));
    if (w >= h)
        g.fixations.push_back(Constraint::fixation(first([](const Point& u) { return u.x == 1; }), 'x', 1));
    else
        g.fixations.push_back(Constraint::fixation(first([](const Point& u) { return u.y == 1; }), 'y', 1));
    g.equations = std::move(eqs);
    g.label = std::move(label);
    g.claimed_delta = delta;
    return g;
}

const Move kVert{0, 1}, kHoriz{1, 0}, kDiag{-1, 1};

// Defining equations of the golden rectangle in terms of its three directions.
std::vector<Equation> rectangle_equations(unsigned q, const Move& vert, const Move& horiz, const Move& diag) {
    std::vector<Equation> eqs;
    auto add = [&](long i, long j, const Move& m) {
        if (i >= 1 && j >= 1 && i <= static_cast<long>(q) && j <= static_cast<long>(q))
            eqs.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), m});
    };
    for (long i = 0; i <= static_cast<long>(q); ++i) {
        add(4 * i, 4 * i + 1, vert);
        add(4 * i + 2, 4 * i + 6, vert);
        add(4 * i + 1, 4 * i + 3, vert);
        add(4 * i, 4 * i + 4, horiz);
        add(4 * i + 2, 4 * i + 3, horiz);
        add(4 * i + 3, 4 * i + 5, horiz);
        add(2 * i + 1, 2 * i + 2, diag);
    }
    add(1, 4, horiz);
    return eqs;
}

// Golden rectangle at its natural integer scale, q >= 3.
std::vector<Point> rectangle_points(unsigned q) {
    const unsigned h = q / 2;
    const std::vector<Fix> fixes{{1, 'y', 0}, {2, 'x', 0}, {q, h % 2 == 0 ? 'x' : 'y', Rational(fib(h))}};
    const auto z = solve_system(q, rectangle_equations(q, kVert, kHoriz, kDiag), fixes);
    if (!z) throw std::logic_error("golden rectangle system is not uniquely solvable");
    return to_points(*z);
}

std::vector<Equation> spiral_equations(unsigned q, const std::array<Move, 4>& m) {
    std::vector<Equation> eqs;
    auto add = [&](long i, long j, const Move& mv) {
        if (i >= 1 && j <= static_cast<long>(q)) eqs.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), mv});
    };
    for (long i = 0; i <= static_cast<long>(q) + 1; ++i) {
        add(2 * i, 2 * i + 1, m[0]);
        add(2 * i + 1, 2 * i + 2, m[1]);
        add(2 * i, 2 * i + 3, m[2]);
        add(2 * i + 1, 2 * i + 4, m[3]);
    }
    add(1, 3, m[2]);
    return eqs;
}

GeneratedConfig spiral(unsigned q, const std::array<Move, 4>& m, std::string label) {
    if (q < 3) throw std::invalid_argument("spiral: q must be at least 3");
    auto eqs = spiral_equations(q, m);
    // anchor piece 1 and try scale fixations until the system is determined
    for (const Fix third : {Fix{2, 'x', 1}, Fix{2, 'y', 1}, Fix{3, 'x', 1}, Fix{3, 'y', 1}}) {
        const auto z = solve_system(q, eqs, {{1, 'x', 0}, {1, 'y', 0}, third});
        if (z) return normalize(to_points(*z), std::move(eqs), std::move(label));
    }
    throw std::invalid_argument("spiral: move system is rank deficient");
}

std::string move_label(const Move& m) { return std::to_string(m.d) + "/" + std::to_string(m.c); }

}  // namespace

GeneratedConfig golden_rectangle(unsigned q) {
    if (q < 4) throw std::invalid_argument("golden_rectangle: q must be at least 4");
    const auto pts = rectangle_points(q);
    GeneratedConfig g;
    for (const auto& p : pts) {
        if (!p.x.is_integer() || !p.y.is_integer()) throw std::logic_error("golden rectangle is not integral");
        g.positions.push_back({p.x.numerator(), p.y.numerator()});
    }
    const unsigned h = q / 2;
    g.scale = fib(h);
    g.fixations = {Constraint::fixation(1, 'y', 0), Constraint::fixation(2, 'x', 0),
                   Constraint::fixation(q, h % 2 == 0 ? 'x' : 'y', 1)};
    g.equations = rectangle_equations(q, kVert, kHoriz, kDiag);
    g.label = "rectangle";
    g.claimed_delta = fib(h);
    return g;
}

std::vector<std::pair<IntPoint, IntPoint>> parallelogram_choices(const PieceSpec& piece) {
    if (piece.moves.size() < 3) throw std::invalid_argument("parallelogram: piece needs three moves");
    const auto& m = piece.moves;
    const auto w = triangle_weights(m[0], m[1], m[2]);
    const long ws[3] = {w.w1, w.w2, w.w3};
    std::vector<std::pair<IntPoint, IntPoint>> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j)
                out.push_back({{BigInt(ws[i] * m[i].c), BigInt(ws[i] * m[i].d)},
                               {BigInt(-ws[j] * m[j].c), BigInt(-ws[j] * m[j].d)}});
    return out;
}

GeneratedConfig golden_parallelogram(const PieceSpec& piece, const IntPoint& a, const IntPoint& b, unsigned q) {
    if (q < 3) throw std::invalid_argument("golden_parallelogram: q must be at least 3");
    if (a.x * b.y - a.y * b.x == 0) throw std::invalid_argument("golden_parallelogram: degenerate transform");
    const auto choices = parallelogram_choices(piece);
    const bool ok = std::any_of(choices.begin(), choices.end(), [&](const auto& ch) {
        return (ch.first == a && ch.second == b) ||
               (ch.first == IntPoint{-a.x, -a.y} && ch.second == IntPoint{-b.x, -b.y});
    });
    if (!ok) throw std::invalid_argument("golden_parallelogram: images are not weighted moves of the piece");

    auto image = [&](const Move& m) {
        const BigInt x = BigInt(m.c) * a.x + BigInt(m.d) * b.x, y = BigInt(m.c) * a.y + BigInt(m.d) * b.y;
        const BigInt g = gcd(x, y);
        return Move{BigInt(x / g).get_si(), BigInt(y / g).get_si()};
    };
    std::vector<Point> pts;
    for (const auto& p : rectangle_points(q))
        pts.push_back({p.x * Rational(a.x) + p.y * Rational(b.x), p.x * Rational(a.y) + p.y * Rational(b.y)});
    auto eqs = rectangle_equations(q, image(kVert), image(kHoriz), image(kDiag));
    const std::string label = "parallelogram((" + a.x.get_str() + "," + a.y.get_str() + "),(" + b.x.get_str() + "," +
                              b.y.get_str() + "))";
    return normalize(pts, std::move(eqs), label);
}

GeneratedConfig queens_spiral(unsigned q) {
    if (q < 4) throw std::invalid_argument("queens_spiral: q must be at least 4");
    auto g = spiral(q, {Move{1, 1}, Move{1, -1}, Move{0, 1}, Move{1, 0}}, "spiral");
    g.claimed_delta = fib(q - 1);
    return g;
}

GeneratedConfig twisted_spiral(const PieceSpec& piece, const std::array<Move, 4>& assignment, unsigned q) {
    if (piece.moves.size() != 4) throw std::invalid_argument("twisted_spiral: piece needs four moves");
    std::vector<Move> seen;
    for (const auto& m : assignment) {
        const auto cm = canonical_move(m.c, m.d);
        if (std::find(piece.moves.begin(), piece.moves.end(), cm) == piece.moves.end() ||
            std::find(seen.begin(), seen.end(), cm) != seen.end())
            throw std::invalid_argument("twisted_spiral: assignment is not a signed permutation of the moves");
        seen.push_back(cm);
    }
    std::string label = "twisted(";
    for (std::size_t k = 0; k < 4; ++k) label += (k ? "," : "") + move_label(assignment[k]);
    return spiral(q, assignment, label + ")");
}

namespace {

void require_fixations(const std::vector<Point>& unit, const std::vector<Constraint>& fixations) {
    for (const auto& f : fixations) {
        if (f.kind != Constraint::Kind::fixation) continue;
        if (f.piece > unit.size()) throw std::invalid_argument("fixation refers to a missing piece");
        const auto& p = unit[f.piece - 1];
        if ((f.axis == 'x' ? p.x : p.y) != f.bound)
            throw std::invalid_argument("configuration violates " + f.str());
    }
}

BigInt lcd(const std::vector<Point>& unit) {
    BigInt d = 1;
    for (const auto& p : unit) d = lcm(lcm(d, p.x.denominator()), p.y.denominator());
    return d;
}

}  // namespace

BigInt config_denominator(const GeneratedConfig& config) {
    const auto unit = config.unit_positions();
    require_fixations(unit, config.fixations);
    return lcd(unit);
}

BigInt config_denominator(const Configuration& config, const std::vector<Constraint>& fixations) {
    const Rational s(config.dilation.value_or(1));
    std::vector<Point> unit;
    for (const auto& p : config.positions) unit.push_back({p.x / s, p.y / s});
    require_fixations(unit, fixations);
    return lcd(unit);
}

bool is_vertex(const GeneratedConfig& config, const PieceSpec& piece) {
    const auto unit = config.unit_positions();
    const unsigned q = static_cast<unsigned>(unit.size());
    for (const auto& p : unit)
        if (p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1) return false;
    try {
        require_fixations(unit, config.fixations);
    } catch (const std::invalid_argument&) {
        return false;
    }
    const auto z = flatten(unit);
    RationalMatrix rows;
    for (const auto& h : move_hyperplanes(piece, q)) {
        const auto r = equation_row(h, q);
        Rational dot = 0;
        for (std::size_t k = 0; k < r.size(); ++k) dot += Rational(r[k]) * z[k];
        if (dot == 0) rows.emplace_back(r.begin(), r.end());
    }
    for (const auto& f : config.fixations) {
        const auto r = f.row(q);
        rows.emplace_back(r.begin(), r.end());
    }
    return rank(rows) == 2 * q;
}

}  // namespace riderlab
