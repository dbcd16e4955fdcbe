#include "riderlab/counting.hpp"

#include "riderlab/linalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace riderlab {

namespace {

struct Cell {
    long x, y;
};

std::vector<Cell> board_cells(const Board& board, unsigned n) {
    std::vector<Cell> cells;
    switch (board.kind) {
        case BoardKind::square:
            for (long x = 1; x <= n; ++x)
                for (long y = 1; y <= n; ++y) cells.push_back({x, y});
            break;
        case BoardKind::triangle:
            for (long x = 1; x <= n; ++x)
                for (long y = x + 1; y <= static_cast<long>(n) + 1; ++y) cells.push_back({x, y});
            break;
        case BoardKind::polygon:
            throw std::invalid_argument("count_placements: polygon boards are not supported");
    }
    return cells;
}

// Depth-first over increasing cell indices. compat[c] holds the cells after c
// that c does not attack, so the last piece is a popcount.
class PlacementCounter {
public:
    PlacementCounter(const std::vector<Cell>& cells, const PieceSpec& piece)
        : n_(cells.size()), words_((n_ + 63) / 64), compat_(n_ * words_, 0) {
        for (std::size_t a = 0; a < n_; ++a) {
            std::uint64_t* row = &compat_[a * words_];
            for (std::size_t b = a + 1; b < n_; ++b) {
                const long dx = cells[b].x - cells[a].x, dy = cells[b].y - cells[a].y;
                bool hit = false;
                for (const auto& m : piece.moves)
                    if (dx * m.d == dy * m.c) { hit = true; break; }
                if (!hit) row[b / 64] |= std::uint64_t{1} << (b % 64);
            }
        }
    }

    std::uint64_t count(unsigned q) {
        if (q == 0) return 1;
        if (q > n_) return 0;
        std::vector<std::uint64_t> all(words_, 0);
        for (std::size_t b = 0; b < n_; ++b) all[b / 64] |= std::uint64_t{1} << (b % 64);
        if (q == 1) return n_;
        stack_.assign(static_cast<std::size_t>(q) * words_, 0);
        std::copy(all.begin(), all.end(), stack_.begin());
        return descend(0, q);
    }

private:
    std::uint64_t descend(unsigned depth, unsigned q) {
        const std::uint64_t* avail = &stack_[depth * words_];
        std::uint64_t total = 0;
        const bool last_pair = depth + 2 == q;
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = avail[w];
            while (bits) {
                const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                const std::uint64_t* cm = &compat_[c * words_];
                if (last_pair) {
                    for (std::size_t k = w; k < words_; ++k) total += static_cast<std::uint64_t>(std::popcount(avail[k] & cm[k]));
                } else {
                    std::uint64_t* next = &stack_[(depth + 1) * words_];
                    bool any = false;
                    for (std::size_t k = 0; k < words_; ++k) {
                        next[k] = k < w ? 0 : (avail[k] & cm[k]);
                        any = any || next[k];
                    }
                    if (any) total += descend(depth + 1, q);
                }
            }
        }
        return total;
    }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> compat_;
    std::vector<std::uint64_t> stack_;
};

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

template <class Fn>
BigInt line_power_sum(const Move& m, unsigned n, Fn power) {
    std::map<long, long> lines;
    for (long x = 1; x <= n; ++x)
        for (long y = 1; y <= n; ++y) ++lines[m.d * x - m.c * y];
    BigInt total = 0;
    for (const auto& [key, len] : lines) total += power(BigInt(len));
    return total;
}

}  // namespace

BigInt count_placements(const PieceSpec& piece, const Board& board, unsigned q, unsigned n) {
    if (q == 0) throw std::invalid_argument("count_placements: q must be positive");
    if (n == 0) throw std::invalid_argument("count_placements: n must be positive");
    const auto cells = board_cells(board, n);
    PlacementCounter counter(cells, piece);
    return BigInt(static_cast<unsigned long>(counter.count(q)));
}

BigInt count_placements(const PieceSpec& piece, unsigned q, unsigned n) {
    return count_placements(piece, Board::square(), q, n);
}

BigInt alpha_line(const Move& move, unsigned n) {
    return line_power_sum(move, n, [](const BigInt& len) { return BigInt(len * len); });
}

BigInt beta_line(const Move& move, unsigned n) {
    return line_power_sum(move, n, [](const BigInt& len) { return BigInt(len * len * len); });
}

std::vector<long> equation_row(const Equation& e, unsigned q) {
    if (e.i == e.j || e.i < 1 || e.j < 1 || e.i > q || e.j > q)
        throw std::invalid_argument("equation pieces out of range");
    std::vector<long> row(2 * q, 0);
    const unsigned i = e.i - 1, j = e.j - 1;
    row[2 * j] += e.move.d;
    row[2 * j + 1] -= e.move.c;
    row[2 * i] -= e.move.d;
    row[2 * i + 1] += e.move.c;
    return row;
}

std::string Subspace::str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < equations.size(); ++k) {
        const auto& e = equations[k];
        s += (k ? "," : "") + std::string("H") + std::to_string(e.i) + "," + std::to_string(e.j) + "[" +
             std::to_string(e.move.d) + "/" + std::to_string(e.move.c) + "]";
    }
    return s + "}";
}

namespace {

// Local renumbering of the pieces an equation set touches.
std::vector<unsigned> involved_pieces(const std::vector<Equation>& eqs) {
    std::set<unsigned> s;
    for (const auto& e : eqs) {
        s.insert(e.i);
        s.insert(e.j);
    }
    return {s.begin(), s.end()};
}

RationalMatrix local_rows(const std::vector<Equation>& eqs, const std::vector<unsigned>& pieces) {
    const unsigned k = static_cast<unsigned>(pieces.size());
    auto local = [&](unsigned p) {
        return static_cast<unsigned>(std::lower_bound(pieces.begin(), pieces.end(), p) - pieces.begin()) + 1;
    };
    RationalMatrix rows;
    for (const auto& e : eqs) {
        const auto row = equation_row({local(e.i), local(e.j), e.move}, k);
        rows.emplace_back(row.begin(), row.end());
    }
    return rows;
}

}  // namespace

Subspace make_subspace(std::vector<Equation> equations) {
    for (auto& e : equations) {
        if (e.i == e.j) throw std::invalid_argument("equation needs two distinct pieces");
        e.move = canonical_move(e.move.c, e.move.d);
    }
    Subspace u;
    const auto pieces = involved_pieces(equations);
    u.kappa = static_cast<unsigned>(pieces.size());
    u.codim = static_cast<unsigned>(rank(local_rows(equations, pieces)));
    u.equations = std::move(equations);
    return u;
}

BigInt subspace_count(const Subspace& u, unsigned n, std::uint64_t budget) {
    const auto pieces = involved_pieces(u.equations);
    if (pieces.empty()) return 1;
    const std::size_t dim = 2 * pieces.size();
    std::vector<std::size_t> pivots;
    const RationalMatrix red = rref(local_rows(u.equations, pieces), &pivots);

    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < dim; ++c)
        if (!is_pivot[c]) free.push_back(c);

    // pivot_r * den_r = sum_f coef_r[f] * free_f
    const std::size_t nr = pivots.size(), nf = free.size();
    std::vector<long> den(nr);
    std::vector<std::vector<long>> coef(nr, std::vector<long>(nf));
    for (std::size_t r = 0; r < nr; ++r) {
        BigInt l = 1;
        for (auto f : free) l = lcm(l, red[r][f].denominator());
        if (!l.fits_slong_p()) throw BudgetExceeded("subspace_count: coefficients too large");
        den[r] = l.get_si();
        for (std::size_t k = 0; k < nf; ++k) {
            const Rational v = -red[r][free[k]] * Rational(l);
            coef[r][k] = v.numerator().get_si();
        }
    }

    double work = 1;
    for (std::size_t k = 0; k < nf; ++k) work *= n;
    if (work > static_cast<double>(budget)) throw BudgetExceeded("subspace_count: enumeration exceeds budget");

    if (nf == 0) {
        // only the zero solution, which is never inside the open cube
        return 0;
    }

    std::vector<long> sums(nr * (nf + 1), 0);
    const long N = n;
    std::uint64_t total = 0;

    // Recursion over free variables; the last one is scanned over the
    // interval left by the pivot inequalities.
    auto rec = [&](auto&& self, std::size_t k) -> void {
        long* cur = &sums[k * nr];
        if (k + 1 == nf) {
            long lo = 1, hi = N;
            for (std::size_t r = 0; r < nr && lo <= hi; ++r) {
                const long a = coef[r][k], s = cur[r], L = den[r];
                if (a == 0) {
                    if (s < L || s > N * L || s % L != 0) hi = lo - 1;
                    continue;
                }
                // A <= a v <= B
                const long A = L - s, B = N * L - s;
                const long vlo = a > 0 ? ceil_div(A, a) : ceil_div(B, a);
                const long vhi = a > 0 ? floor_div(B, a) : floor_div(A, a);
                lo = std::max(lo, vlo);
                hi = std::min(hi, vhi);
            }
            for (long v = lo; v <= hi; ++v) {
                bool ok = true;
                for (std::size_t r = 0; r < nr; ++r) {
                    if (den[r] == 1) continue;
                    if ((cur[r] + coef[r][k] * v) % den[r] != 0) { ok = false; break; }
                }
                if (ok) ++total;
            }
            return;
        }
        long* nxt = &sums[(k + 1) * nr];
        for (long v = 1; v <= N; ++v) {
            for (std::size_t r = 0; r < nr; ++r) nxt[r] = cur[r] + coef[r][k] * v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return BigInt(static_cast<unsigned long>(total));
}

std::vector<Equation> move_hyperplanes(const PieceSpec& piece, unsigned q) {
    std::vector<Equation> hs;
    for (unsigned i = 1; i <= q; ++i)
        for (unsigned j = i + 1; j <= q; ++j)
            for (const auto& m : piece.moves) hs.push_back({i, j, m});
    return hs;
}

namespace {

struct Flat {
    RationalMatrix basis;  // reduced rows
    std::vector<std::size_t> pivots;
    std::uint64_t mask = 0;
};

bool in_row_space(const RationalVector& h, const Flat& f) {
    RationalVector v = h;
    for (std::size_t r = 0; r < f.basis.size(); ++r) {
        const auto p = f.pivots[r];
        if (v[p] == 0) continue;
        const Rational factor = v[p];
        for (std::size_t c = 0; c < v.size(); ++c)
            if (f.basis[r][c] != 0) v[c] -= factor * f.basis[r][c];
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

IntersectionLattice build_lattice(const PieceSpec& piece, unsigned q, std::size_t max_elements) {
    if (q == 0) throw std::invalid_argument("build_lattice: q must be positive");
    IntersectionLattice lat;
    lat.q = q;
    lat.hyperplanes = move_hyperplanes(piece, q);
    const std::size_t nh = lat.hyperplanes.size();
    if (nh > 64) throw BudgetExceeded("build_lattice: more than 64 hyperplanes");

    std::vector<RationalVector> rows;
    for (const auto& h : lat.hyperplanes) {
        const auto r = equation_row(h, q);
        rows.emplace_back(r.begin(), r.end());
    }

    std::vector<Flat> flats{Flat{}};
    std::unordered_map<std::uint64_t, std::size_t> seen{{0, 0}};
    std::size_t level_begin = 0;
    while (level_begin < flats.size()) {
        const std::size_t level_end = flats.size();
        for (std::size_t fi = level_begin; fi < level_end; ++fi) {
            for (std::size_t h = 0; h < nh; ++h) {
                if (flats[fi].mask >> h & 1) continue;
                Flat g;
                RationalMatrix m = flats[fi].basis;
                m.push_back(rows[h]);
                g.basis = rref(m, &g.pivots);
                for (std::size_t k = 0; k < nh; ++k)
                    if ((flats[fi].mask >> k & 1) || k == h || in_row_space(rows[k], g)) g.mask |= std::uint64_t{1} << k;
                if (seen.count(g.mask)) continue;
                if (flats.size() >= max_elements) throw BudgetExceeded("build_lattice: element budget exceeded");
                seen.emplace(g.mask, flats.size());
                flats.push_back(std::move(g));
            }
        }
        level_begin = level_end;
    }

    // flats are generated in nondecreasing rank, so lower intervals come first
    for (std::size_t k = 0; k < flats.size(); ++k) {
        Subspace u;
        u.mask = flats[k].mask;
        u.codim = static_cast<unsigned>(flats[k].basis.size());
        for (std::size_t h = 0; h < nh; ++h)
            if (u.mask >> h & 1) u.equations.push_back(lat.hyperplanes[h]);
        u.kappa = static_cast<unsigned>(involved_pieces(u.equations).size());
        if (k == 0) {
            u.mobius = 1;
        } else {
            long s = 0;
            for (std::size_t v = 0; v < k; ++v) {
                const auto vm = lat.elements[v].mask;
                if ((vm & u.mask) == vm && vm != u.mask) s += lat.elements[v].mobius;
            }
            u.mobius = -s;
        }
        lat.elements.push_back(std::move(u));
    }
    return lat;
}

BigInt count_via_mobius(const IntersectionLattice& lattice, unsigned n) {
    BigInt total = 0;
    for (const auto& u : lattice.elements) {
        if (u.mobius == 0) continue;
        BigInt free_part;
        mpz_ui_pow_ui(free_part.get_mpz_t(), n, 2 * (lattice.q - u.kappa));
        total += BigInt(u.mobius) * free_part * subspace_count(u, n);
    }
    return total;
}

BigInt count_via_mobius(const PieceSpec& piece, unsigned q, unsigned n) {
    return count_via_mobius(build_lattice(piece, q), n);
}

}  // namespace riderlab
