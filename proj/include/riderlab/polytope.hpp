#pragma once

// Vertices of the inside-out polytope ([0,1]^{2q}, move arrangement) and
// denominator results.

#include "riderlab/counting.hpp"
#include "riderlab/exactmath.hpp"
#include "riderlab/model.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace riderlab {

struct Constraint {
    enum class Kind { move_equation, fixation };
    Kind kind = Kind::move_equation;
    Equation equation;   ///< move_equation only
    unsigned piece = 1;  ///< fixation only, 1-based
    char axis = 'x';     ///< 'x' or 'y'
    int bound = 0;       ///< 0 or 1

    static Constraint move(const Equation& e);
    static Constraint fixation(unsigned piece, char axis, int bound);

    /// "H1,2[d/c]" or "x1=0".
    std::string str() const;
    /// Coefficients over (x1,y1,...,xq,yq) and right-hand side.
    std::vector<long> row(unsigned q) const;
    long rhs() const { return kind == Kind::fixation ? bound : 0; }

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct VertexRecord {
    std::vector<Rational> position;  ///< x1,y1,...,xq,yq
    BigInt denominator;              ///< Delta(z)
    std::vector<Constraint> active;  ///< every constraint tight at z

    /// "num/den,...|delta=K|constraints=H1,2[2/1];x1=0"
    std::string str() const;
};

struct VertexOptions {
    bool allow_large_q = false;           ///< q >= 4 only when set
    std::size_t max_flats = 20000;        ///< lattice size limit
    std::uint64_t max_nodes = 200000000;  ///< candidate points examined
};

/// All vertices, sorted lexicographically by position. Throws
/// std::invalid_argument for q > 3 without allow_large_q and BudgetExceeded
/// when a limit is hit.
std::vector<VertexRecord> enumerate_vertices(const PieceSpec& piece, unsigned q, const VertexOptions& opts = {});

/// lcm of Delta(z) over all vertices.
BigInt polytope_denominator(const PieceSpec& piece, unsigned q, const VertexOptions& opts = {});
BigInt polytope_denominator(const std::vector<VertexRecord>& vertices);

/// Distinct Delta(z) values, ascending. The last one is the observed maximum.
std::vector<BigInt> vertex_denominators(const std::vector<VertexRecord>& vertices);

/// lcd of the board corners, together with their antipodes when q >= 2.
BigInt one_move_denominator(const Board& board, const Move& move, unsigned q);
/// Square-board closed form: 1 for q = 1, otherwise max(|c|, |d|).
BigInt one_move_denominator_square(const Move& move, unsigned q);

struct ConditionalDenominator {
    BigInt value;
    bool conjecture_conditional = true;  ///< relies on simple trajectories
    std::string note;
};

/// Moves (1,0) and (+-c,+-d), gcd(c,d) = 1, c,d > 0.
ConditionalDenominator two_move_denominator(long c, long d, unsigned q);

struct TriangleWeights {
    long w1 = 0, w2 = 0, w3 = 0;
    friend bool operator==(const TriangleWeights&, const TriangleWeights&) = default;
};

/// w1 m1 + w2 m2 + w3 m3 = 0, gcd 1, first weight positive.
TriangleWeights triangle_weights(const Move& m1, const Move& m2, const Move& m3);
/// max |w_i c_i|, |w_i d_i|.
long triangle_denominator(const Move& m1, const Move& m2, const Move& m3);

}  // namespace riderlab
