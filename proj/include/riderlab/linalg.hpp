#pragma once

#include "riderlab/exactmath.hpp"

#include <cstddef>
#include <vector>

namespace riderlab {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

enum class SolveStatus { unique, singular, inconsistent };

const char* to_string(SolveStatus s);

struct LinearSolution {
    SolveStatus status = SolveStatus::singular;
    RationalVector x;  ///< populated only when status == unique

    explicit operator bool() const { return status == SolveStatus::unique; }
};

/// Exact solution of A x = b by fraction-free (Bareiss) elimination.
/// Rows may outnumber columns; redundant consistent rows are fine.
LinearSolution solve_linear(const RationalMatrix& a, const RationalVector& b);

std::size_t rank(const RationalMatrix& a);

/// Reduced row echelon form with unit pivots; zero rows dropped.
RationalMatrix rref(const RationalMatrix& a, std::vector<std::size_t>* pivot_columns = nullptr);

/// Basis of { x : A x = 0 } with the free variable of each vector set to 1.
std::vector<RationalVector> nullspace(const RationalMatrix& a, std::size_t columns);

RationalVector multiply(const RationalMatrix& a, const RationalVector& x);

}  // namespace riderlab
