#pragma once

// Pieces, moves, boards and the attack predicate.

#include "riderlab/exactmath.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace riderlab {

/// Primitive move direction, stored undirected: c > 0, or c == 0 and d == 1.
struct Move {
    long c = 1;
    long d = 0;

    long hat_c() const;  ///< min(|c|,|d|)
    long hat_d() const;  ///< max(|c|,|d|)
    std::string str() const;  ///< "(c,d)"

    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;
};

/// Reduces (c,d) by gcd and fixes the sign. Throws std::invalid_argument on (0,0).
Move canonical_move(long c, long d);

struct PieceSpec {
    std::vector<Move> moves;
    std::string name;

    std::string str() const;  ///< name if present, else the move list
};

/// Canonicalizes and validates (nonempty, no two parallel moves).
PieceSpec make_piece(const std::vector<Move>& moves, std::string name = {});

/// Named preset ("queen", "Q21", "nightrider", "N2-lateral", ...) or an
/// explicit list "(1,0);(2,1)". Throws std::invalid_argument.
PieceSpec parse_piece(std::string_view text);

std::vector<std::string> preset_names();

struct Point {
    Rational x;
    Rational y;

    std::string str() const;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point& a, const Point& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

enum class BoardKind { square, triangle, polygon };

struct Board {
    BoardKind kind = BoardKind::square;
    std::vector<Point> corners;  ///< boundary order, counterclockwise

    static Board square();
    static Board triangle();
    /// Convex rational polygon; corners in boundary order (either orientation).
    static Board polygon(std::vector<Point> corners);

    bool contains(const Point& p) const;  ///< closed board
    bool is_corner(const Point& p) const;
};

const char* to_string(BoardKind k);
BoardKind parse_board_kind(std::string_view text);

/// True when z2 - z1 is a (possibly zero) multiple of some move.
bool attacks(const Point& z1, const Point& z2, const PieceSpec& piece);

/// Second boundary point of the line through `corner` in direction `move`,
/// or nullopt when the line touches the board only at the corner.
std::optional<Point> antipode(const Board& board, const Point& corner, const Move& move);

struct Configuration {
    std::vector<Point> positions;
    std::optional<long> dilation;  ///< nullopt: unit scale
};

}  // namespace riderlab
