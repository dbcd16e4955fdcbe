#include "riderlab/polytope.hpp"

#include "riderlab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace riderlab {

Constraint Constraint::move(const Equation& e) {
    Constraint c;
    c.kind = Kind::move_equation;
    c.equation = e;
    return c;
}

Constraint Constraint::fixation(unsigned piece, char axis, int bound) {
    if (piece == 0) throw std::invalid_argument("fixation: pieces are numbered from 1");
    if (axis != 'x' && axis != 'y') throw std::invalid_argument("fixation: axis must be x or y");
    if (bound != 0 && bound != 1) throw std::invalid_argument("fixation: bound must be 0 or 1");
    Constraint c;
    c.kind = Kind::fixation;
    c.piece = piece;
    c.axis = axis;
    c.bound = bound;
    return c;
}

std::string Constraint::str() const {
    if (kind == Kind::fixation) return std::string(1, axis) + std::to_string(piece) + "=" + std::to_string(bound);
    return "H" + std::to_string(equation.i) + "," + std::to_string(equation.j) + "[" + std::to_string(equation.move.d) +
           "/" + std::to_string(equation.move.c) + "]";
}

std::vector<long> Constraint::row(unsigned q) const {
    if (kind == Kind::move_equation) return equation_row(equation, q);
    std::vector<long> r(2 * q, 0);
    r[2 * (piece - 1) + (axis == 'y')] = 1;
    return r;
}

std::string VertexRecord::str() const {
    std::string s;
    for (std::size_t k = 0; k < position.size(); ++k) s += (k ? "," : "") + position[k].to_string();
    s += "|delta=" + denominator.get_str() + "|constraints=";
    for (std::size_t k = 0; k < active.size(); ++k) s += (k ? ";" : "") + active[k].str();
    return s;
}

namespace {

// Inverse of a square rational matrix, empty when singular.
RationalMatrix inverse(RationalMatrix a) {
    const std::size_t n = a.size();
    RationalMatrix inv(n, RationalVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return {};
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const Rational pv = a[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] /= pv;
            inv[c][k] /= pv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

long to_long(const BigInt& v) {
    if (!v.fits_slong_p()) throw BudgetExceeded("enumerate_vertices: coordinates exceed machine range");
    return v.get_si();
}

// Point as {L, n_1, ..., n_2q} with L the least common denominator.
using Key = std::vector<long>;

Key normalize(long l, const std::vector<long>& nums) {
    long g = l;
    for (long v : nums) g = std::gcd(g, v);
    Key k;
    k.reserve(nums.size() + 1);
    k.push_back(l / g);
    for (long v : nums) k.push_back(v / g);
    return k;
}

bool next_combination(std::vector<std::size_t>& s, std::size_t n) {
    const std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<VertexRecord> enumerate_vertices(const PieceSpec& piece, unsigned q, const VertexOptions& opts) {
    if (q == 0) throw std::invalid_argument("enumerate_vertices: q must be positive");
    if (q > 3 && !opts.allow_large_q)
        throw std::invalid_argument("enumerate_vertices: q > 3 needs allow_large_q");
    const std::size_t dim = 2 * q;
    const auto lat = build_lattice(piece, q, opts.max_flats);

    std::vector<RationalVector> hrows;
    std::vector<std::vector<long>> hrows_int;
    for (const auto& h : lat.hyperplanes) {
        hrows_int.push_back(equation_row(h, q));
        hrows.emplace_back(hrows_int.back().begin(), hrows_int.back().end());
    }

    // Every vertex is the flat spanned by its tight move equations cut by
    // coordinate fixations; a complementary set of fixations always exists.
    std::set<Key> points;
    std::uint64_t nodes = 0;
    for (const auto& u : lat.elements) {
        RationalMatrix eqs;
        for (std::size_t h = 0; h < hrows.size(); ++h)
            if (u.mask >> h & 1) eqs.push_back(hrows[h]);
        std::vector<RationalVector> basis;
        if (eqs.empty()) {
            for (std::size_t k = 0; k < dim; ++k) {
                RationalVector e(dim, 0);
                e[k] = 1;
                basis.push_back(e);
            }
        } else {
            basis = nullspace(eqs, dim);
        }
        const std::size_t f = basis.size();
        if (f == 0) {
            points.insert(normalize(1, std::vector<long>(dim, 0)));
            continue;
        }

        std::vector<std::size_t> s(f);
        std::iota(s.begin(), s.end(), 0);
        do {
            RationalMatrix ns(f, RationalVector(f));
            for (std::size_t r = 0; r < f; ++r)
                for (std::size_t k = 0; k < f; ++k) ns[r][k] = basis[k][s[r]];
            const auto inv = inverse(ns);
            if (inv.empty()) continue;
            nodes += std::uint64_t{1} << f;
            if (nodes > opts.max_nodes) throw BudgetExceeded("enumerate_vertices: node budget exceeded");

            // z = basis * inv * v for v in {0,1}^f, over a common denominator
            RationalMatrix m(dim, RationalVector(f, 0));
            BigInt l = 1;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t k = 0; k < f; ++k) {
                    for (std::size_t t = 0; t < f; ++t) m[i][k] += basis[t][i] * inv[t][k];
                    l = lcm(l, m[i][k].denominator());
                }
            const long L = to_long(l);
            std::vector<std::vector<long>> mi(dim, std::vector<long>(f));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t k = 0; k < f; ++k) mi[i][k] = to_long((m[i][k] * Rational(l)).numerator());

            std::vector<long> z(dim);
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f); ++bits) {
                bool inside = true;
                for (std::size_t i = 0; i < dim && inside; ++i) {
                    long v = 0;
                    for (std::size_t k = 0; k < f; ++k)
                        if (bits >> k & 1) v += mi[i][k];
                    z[i] = v;
                    inside = v >= 0 && v <= L;
                }
                if (inside) points.insert(normalize(L, z));
            }
        } while (next_combination(s, dim));
    }

    std::vector<VertexRecord> out;
    out.reserve(points.size());
    for (const auto& key : points) {
        const long L = key[0];
        VertexRecord v;
        v.denominator = L;
        for (std::size_t i = 0; i < dim; ++i) v.position.emplace_back(key[i + 1], L);
        for (std::size_t h = 0; h < hrows_int.size(); ++h) {
            long dot = 0;
            for (std::size_t i = 0; i < dim; ++i) dot += hrows_int[h][i] * key[i + 1];
            if (dot == 0) v.active.push_back(Constraint::move(lat.hyperplanes[h]));
        }
        for (unsigned p = 0; p < q; ++p)
            for (int axis = 0; axis < 2; ++axis) {
                const long c = key[2 * p + axis + 1];
                if (c == 0) v.active.push_back(Constraint::fixation(p + 1, axis ? 'y' : 'x', 0));
                if (c == L) v.active.push_back(Constraint::fixation(p + 1, axis ? 'y' : 'x', 1));
            }
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(),
              [](const VertexRecord& a, const VertexRecord& b) { return a.position < b.position; });
    return out;
}

BigInt polytope_denominator(const std::vector<VertexRecord>& vertices) {
    BigInt d = 1;
    for (const auto& v : vertices) d = lcm(d, v.denominator);
    return d;
}

BigInt polytope_denominator(const PieceSpec& piece, unsigned q, const VertexOptions& opts) {
    return polytope_denominator(enumerate_vertices(piece, q, opts));
}

std::vector<BigInt> vertex_denominators(const std::vector<VertexRecord>& vertices) {
    std::set<BigInt> s;
    for (const auto& v : vertices) s.insert(v.denominator);
    return {s.begin(), s.end()};
}

BigInt one_move_denominator(const Board& board, const Move& move, unsigned q) {
    if (q == 0) throw std::invalid_argument("one_move_denominator: q must be positive");
    BigInt d = 1;
    auto absorb = [&](const Point& p) { d = lcm(lcm(d, p.x.denominator()), p.y.denominator()); };
    for (const auto& c : board.corners) {
        absorb(c);
        if (q < 2) continue;
        if (auto a = antipode(board, c, move)) absorb(*a);
    }
    return d;
}

BigInt one_move_denominator_square(const Move& move, unsigned q) {
    if (q == 0) throw std::invalid_argument("one_move_denominator_square: q must be positive");
    if (q == 1) return 1;
    return std::max(std::labs(move.c), std::labs(move.d));
}

ConditionalDenominator two_move_denominator(long c, long d, unsigned q) {
    if (c <= 0 || d <= 0 || std::gcd(c, d) != 1)
        throw std::invalid_argument("two_move_denominator: need c, d > 0 coprime");
    if (q == 0) throw std::invalid_argument("two_move_denominator: q must be positive");
    ConditionalDenominator r;
    r.note = "assumes the denominator is attained by simple trajectories";
    if (q == 1) {
        r.value = 1;
    } else if (d >= c) {
        r.value = d;
    } else if (q <= 2 * (c / d) + 1) {
        r.value = c;
    } else {
        r.value = BigInt(c) * d;
    }
    return r;
}

TriangleWeights triangle_weights(const Move& m1, const Move& m2, const Move& m3) {
    auto det = [](const Move& a, const Move& b) { return a.c * b.d - a.d * b.c; };
    if (det(m1, m2) == 0 || det(m2, m3) == 0 || det(m1, m3) == 0)
        throw std::invalid_argument("triangle_weights: moves must be pairwise nonparallel");
    TriangleWeights w{det(m2, m3), det(m3, m1), det(m1, m2)};
    const long g = std::gcd(std::gcd(w.w1, w.w2), w.w3);
    w.w1 /= g;
    w.w2 /= g;
    w.w3 /= g;
    if (w.w1 < 0) w = {-w.w1, -w.w2, -w.w3};
    return w;
}

long triangle_denominator(const Move& m1, const Move& m2, const Move& m3) {
    const auto w = triangle_weights(m1, m2, m3);
    return std::max({std::labs(w.w1 * m1.c), std::labs(w.w1 * m1.d), std::labs(w.w2 * m2.c),
                     std::labs(w.w2 * m2.d), std::labs(w.w3 * m3.c), std::labs(w.w3 * m3.d)});
}

}  // namespace riderlab
