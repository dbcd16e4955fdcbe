#pragma once

// Constructive vertex configurations: trajectories, golden rectangles and
// parallelograms, Fibonacci spirals.

#include "riderlab/exactmath.hpp"
#include "riderlab/model.hpp"
#include "riderlab/polytope.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace riderlab {

struct Trajectory {
    std::vector<Point> points;     ///< unit square
    std::vector<Move> moves_used;  ///< directed step from points[k] to points[k+1]
    Point anchor;
};

/// Zigzag from (0,0): slope d/c rightwards, then horizontal back to x = 0,
/// until y = 1, a corner, or max_pieces points.
Trajectory generate_trajectory(long c, long d, unsigned max_pieces);

struct IntPoint {
    BigInt x;
    BigInt y;
    friend bool operator==(const IntPoint&, const IntPoint&) = default;
};

struct GeneratedConfig {
    std::vector<IntPoint> positions;   ///< generator scale, min x = min y = 0
    BigInt scale = 1;                  ///< unit position = position / scale
    std::vector<Constraint> fixations; ///< unit-cube fixations
    std::vector<Equation> equations;   ///< defining move equations (directed copies)
    std::string label;
    BigInt claimed_delta = 1;

    std::vector<Point> unit_positions() const;
    /// Width and height at generator scale.
    std::pair<BigInt, BigInt> extent() const;
};

/// q >= 4 semiqueens, moves (1,0), (0,1), (-1,1).
GeneratedConfig golden_rectangle(unsigned q);

/// The golden rectangle positions mapped by (1,0) -> a, (0,1) -> b. The images
/// must be s*w_i m_i and -s*w_j m_j (i != j) for the first three moves.
GeneratedConfig golden_parallelogram(const PieceSpec& piece, const IntPoint& a, const IntPoint& b, unsigned q);

/// The six (a, b) choices with a = w_i m_i, b = -w_j m_j.
std::vector<std::pair<IntPoint, IntPoint>> parallelogram_choices(const PieceSpec& piece);

GeneratedConfig queens_spiral(unsigned q);

/// Spiral equations with directed moves m1..m4; fixations by the bounding-box
/// rule. Throws std::invalid_argument if the assignment is not a signed
/// permutation of the piece's moves or the system is rank deficient.
GeneratedConfig twisted_spiral(const PieceSpec& piece, const std::array<Move, 4>& assignment, unsigned q);

/// Minimal dilation making the unit-scale positions integral. Throws
/// std::invalid_argument if a fixation is violated.
BigInt config_denominator(const GeneratedConfig& config);
BigInt config_denominator(const Configuration& config, const std::vector<Constraint>& fixations = {});

/// Tight move equations of the piece plus the fixations have rank 2q and the
/// unit positions lie in the closed square.
bool is_vertex(const GeneratedConfig& config, const PieceSpec& piece);

/// Unit positions flattened as x1,y1,...,xq,yq.
std::vector<Rational> flatten(const std::vector<Point>& points);

}  // namespace riderlab
