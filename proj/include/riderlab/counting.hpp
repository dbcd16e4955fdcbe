#pragma once

// Exact enumeration: placement counts, line-attack counts, subspace counts
// and the intersection lattice of the move arrangement.

#include "riderlab/exactmath.hpp"
#include "riderlab/model.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace riderlab {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unlabelled nonattacking placements of q pieces on the n-board.
/// Square: cells [1,n]^2. Triangle: 1 <= x <= y-1 <= n.
BigInt count_placements(const PieceSpec& piece, const Board& board, unsigned q, unsigned n);
BigInt count_placements(const PieceSpec& piece, unsigned q, unsigned n);  // square

struct CountRecord {
    PieceSpec piece;
    Board board;
    unsigned q = 0;
    unsigned n = 0;
    BigInt unlabeled;

    BigInt labeled() const { return factorial(q) * unlabeled; }
};

/// Ordered pairs (coincident included) on a common line of slope d/c.
BigInt alpha_line(const Move& move, unsigned n);
/// Ordered triples on a common line of slope d/c.
BigInt beta_line(const Move& move, unsigned n);

/// (z_j - z_i) . (d, -c) = 0, pieces numbered from 1.
struct Equation {
    unsigned i = 1;
    unsigned j = 2;
    Move move;

    friend bool operator==(const Equation&, const Equation&) = default;
    friend auto operator<=>(const Equation&, const Equation&) = default;
};

struct Subspace {
    std::vector<Equation> equations;
    unsigned kappa = 0;
    unsigned codim = 0;
    long mobius = 0;
    std::uint64_t mask = 0;  ///< hyperplanes containing it, when built by build_lattice

    std::string str() const;
};

/// Fills kappa and codim from the equations.
Subspace make_subspace(std::vector<Equation> equations);

/// Integer configurations of the essential pieces in (0,n+1)^{2 kappa}
/// lying on U (membership only, no exclusion).
BigInt subspace_count(const Subspace& u, unsigned n, std::uint64_t budget = 4'000'000'000ULL);

struct IntersectionLattice {
    std::vector<Equation> hyperplanes;  ///< bit k of a mask refers to hyperplanes[k]
    std::vector<Subspace> elements;     ///< elements[0] is the whole space
    unsigned q = 0;
};

/// Hyperplanes H^{m}_{ij}, i < j, in (i, j, move) order.
std::vector<Equation> move_hyperplanes(const PieceSpec& piece, unsigned q);

/// Coefficient row of an equation in the 2q coordinates (x1,y1,x2,y2,...).
std::vector<long> equation_row(const Equation& e, unsigned q);

IntersectionLattice build_lattice(const PieceSpec& piece, unsigned q, std::size_t max_elements = 200000);

/// Labelled count o(q;n) by Moebius inversion over the lattice.
BigInt count_via_mobius(const PieceSpec& piece, unsigned q, unsigned n);
BigInt count_via_mobius(const IntersectionLattice& lattice, unsigned n);

}  // namespace riderlab
