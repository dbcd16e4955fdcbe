#include "riderlab/model.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace riderlab {

long Move::hat_c() const { return std::min(std::labs(c), std::labs(d)); }
long Move::hat_d() const { return std::max(std::labs(c), std::labs(d)); }

std::string Move::str() const { return "(" + std::to_string(c) + "," + std::to_string(d) + ")"; }

Move canonical_move(long c, long d) {
    if (c == 0 && d == 0) throw std::invalid_argument("canonical_move: zero vector");
    const long g = std::gcd(c, d);
    c /= g;
    d /= g;
    if (c < 0 || (c == 0 && d < 0)) {
        c = -c;
        d = -d;
    }
    return {c, d};
}

std::string PieceSpec::str() const {
    if (!name.empty()) return name;
    std::string s;
    for (std::size_t i = 0; i < moves.size(); ++i) s += (i ? ";" : "") + moves[i].str();
    return s;
}

PieceSpec make_piece(const std::vector<Move>& moves, std::string name) {
    if (moves.empty()) throw std::invalid_argument("piece needs at least one move");
    PieceSpec p;
    p.name = std::move(name);
    for (const auto& m : moves) {
        const Move cm = canonical_move(m.c, m.d);
        if (std::find(p.moves.begin(), p.moves.end(), cm) != p.moves.end())
            throw std::invalid_argument("parallel moves " + m.str() + " in piece");
        p.moves.push_back(cm);
    }
    return p;
}

namespace {

struct Preset {
    const char* name;
    const char* alias;
    std::vector<Move> moves;
};

const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = {
        {"rook", "Q20", {{1, 0}, {0, 1}}},
        {"semirook", "Q10", {{1, 0}}},
        {"bishop", "Q02", {{1, 1}, {1, -1}}},
        {"semibishop", "Q01", {{1, 1}}},
        {"queen", "Q22", {{1, 0}, {0, 1}, {1, 1}, {1, -1}}},
        // diagonal (1,-1) so the golden rectangle is a vertex of this piece
        {"semiqueen", "Q21", {{1, 0}, {0, 1}, {1, -1}}},
        {"frontal-queen", "Q12", {{0, 1}, {1, 1}, {1, -1}}},
        {"subqueen", "Q11", {{0, 1}, {1, 1}}},
        {"nightrider", "N4", {{1, 2}, {2, 1}, {1, -2}, {2, -1}}},
        {"N1", "N1", {{2, 1}}},
        {"N2-lateral", "N2-lateral", {{2, 1}, {2, -1}}},
        {"N2-inclined", "N2-inclined", {{2, 1}, {1, 2}}},
        {"N2-ortho", "N2-ortho", {{2, 1}, {1, -2}}},
        {"N3", "N3", {{2, -1}, {2, 1}, {1, 2}}},
    };
    return table;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

long parse_long(const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + s + "' in move list");
    }
    if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "' in move list");
    return v;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& p : presets()) out.emplace_back(p.name);
    return out;
}

PieceSpec parse_piece(std::string_view text) {
    const std::string t = trim(text);
    if (t.empty()) throw std::invalid_argument("empty piece");
    if (t.front() != '(') {
        const std::string key = lower(t);
        for (const auto& p : presets())
            if (lower(p.name) == key || lower(p.alias) == key) return make_piece(p.moves, p.name);
        if (key == "n" || key == "n4") return make_piece(presets()[8].moves, "nightrider");
        if (key == "frontalqueen" || key == "frontal_queen") return make_piece(presets()[6].moves, "frontal-queen");
        throw std::invalid_argument("unknown piece '" + t + "'");
    }
    // (c,d);(c,d);...
    std::vector<Move> moves;
    std::size_t pos = 0;
    while (pos < t.size()) {
        if (t[pos] != '(') throw std::invalid_argument("expected '(' in move list '" + t + "'");
        const auto close = t.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("unclosed '(' in move list");
        const std::string body = t.substr(pos + 1, close - pos - 1);
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("move needs two components");
        moves.push_back({parse_long(trim(body.substr(0, comma))), parse_long(trim(body.substr(comma + 1)))});
        pos = close + 1;
        if (pos < t.size()) {
            if (t[pos] != ';') throw std::invalid_argument("moves are separated by ';'");
            ++pos;
        }
    }
    return make_piece(moves);
}

std::string Point::str() const { return "(" + x.str() + "," + y.str() + ")"; }

namespace {

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    return ax * by - ay * bx;
}

}  // namespace

Board Board::square() {
    return {BoardKind::square, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
}

Board Board::triangle() {
    return {BoardKind::triangle, {{0, 0}, {1, 1}, {0, 1}}};
}

Board Board::polygon(std::vector<Point> corners) {
    const std::size_t k = corners.size();
    if (k < 3) throw std::invalid_argument("polygon needs at least 3 corners");
    Rational area2(0);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& a = corners[i];
        const auto& b = corners[(i + 1) % k];
        area2 += cross(a.x, a.y, b.x, b.y);
    }
    if (area2 == 0) throw std::invalid_argument("degenerate polygon");
    if (area2 < 0) std::reverse(corners.begin(), corners.end());
    for (std::size_t i = 0; i < k; ++i) {
        const auto& a = corners[i];
        const auto& b = corners[(i + 1) % k];
        const auto& c = corners[(i + 2) % k];
        if (cross(b.x - a.x, b.y - a.y, c.x - b.x, c.y - b.y) <= 0)
            throw std::invalid_argument("polygon corners not in strictly convex position");
    }
    return {BoardKind::polygon, std::move(corners)};
}

bool Board::contains(const Point& p) const {
    const std::size_t k = corners.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& a = corners[i];
        const auto& b = corners[(i + 1) % k];
        if (cross(b.x - a.x, b.y - a.y, p.x - a.x, p.y - a.y) < 0) return false;
    }
    return true;
}

bool Board::is_corner(const Point& p) const {
    return std::find(corners.begin(), corners.end(), p) != corners.end();
}

const char* to_string(BoardKind k) {
    switch (k) {
        case BoardKind::square: return "square";
        case BoardKind::triangle: return "triangle";
        case BoardKind::polygon: return "polygon";
    }
    return "?";
}

BoardKind parse_board_kind(std::string_view text) {
    const std::string t = lower(trim(text));
    if (t == "square") return BoardKind::square;
    if (t == "triangle") return BoardKind::triangle;
    if (t == "polygon") return BoardKind::polygon;
    throw std::invalid_argument("unknown board '" + std::string(text) + "'");
}

bool attacks(const Point& z1, const Point& z2, const PieceSpec& piece) {
    const Rational dx = z2.x - z1.x;
    const Rational dy = z2.y - z1.y;
    for (const auto& m : piece.moves)
        if (dx * Rational(m.d) == dy * Rational(m.c)) return true;
    return false;
}

std::optional<Point> antipode(const Board& board, const Point& corner, const Move& move) {
    if (!board.is_corner(corner)) throw std::invalid_argument("antipode: " + corner.str() + " is not a corner");
    // Clip the line corner + t*move against each edge half-plane.
    std::optional<Rational> lo, hi;
    const Rational mx(move.c), my(move.d);
    const std::size_t k = board.corners.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& a = board.corners[i];
        const auto& b = board.corners[(i + 1) % k];
        const Rational ex = b.x - a.x, ey = b.y - a.y;
        const Rational base = cross(ex, ey, corner.x - a.x, corner.y - a.y);  // >= 0
        const Rational slope = cross(ex, ey, mx, my);
        if (slope == 0) continue;  // parallel: base >= 0 holds for all t
        const Rational t = -base / slope;
        if (slope > 0) {
            if (!lo || t > *lo) lo = t;
        } else {
            if (!hi || t < *hi) hi = t;
        }
    }
    const Rational tl = lo.value_or(Rational(0)), th = hi.value_or(Rational(0));
    Rational t(0);
    if (th != 0) t = th;
    else if (tl != 0) t = tl;
    else return std::nullopt;
    return Point{corner.x + t * mx, corner.y + t * my};
}

}  // namespace riderlab
