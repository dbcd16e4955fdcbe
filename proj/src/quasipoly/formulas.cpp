#include "riderlab/quasipoly.hpp"

#include <algorithm>
#include <map>

namespace riderlab {

namespace {

using Coeffs = std::vector<Rational>;

// coefficients written from the top degree down, stored from degree 0 up
Coeffs desc(std::initializer_list<Rational> top_down) {
    Coeffs c(top_down.begin(), top_down.end());
    std::reverse(c.begin(), c.end());
    return c;
}

Coeffs add(Coeffs a, const Coeffs& b, const Rational& scale = Rational(1)) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t k = 0; k < b.size(); ++k) a[k] += scale * b[k];
    return a;
}

// P(n) + (-1)^n S(n)
Quasipolynomial signed_pair(const Coeffs& p, const Coeffs& s) {
    Quasipolynomial q;
    q.degree = static_cast<unsigned>(p.size() - 1);
    q.period = 2;
    q.constituents = {add(p, s), add(p, s, Rational(-1))};
    for (auto& c : q.constituents) c.resize(q.degree + 1, Rational(0));
    return q;
}

Rational R(long a, long b = 1) { return Rational(a, b); }

Quasipolynomial bishop_table(unsigned q) {
    switch (q) {
        case 1: return Quasipolynomial::polynomial(desc({1, 0, 0}));
        case 2: return Quasipolynomial::polynomial(desc({R(1, 2), R(-2, 3), R(1, 2), R(-1, 3), 0}));
        case 3:
            return signed_pair(desc({R(1, 6), R(-2, 3), R(5, 4), R(-5, 3), R(4, 3), R(-2, 3), R(1, 8)}),
                               desc({R(-1, 8)}));
        case 4:
            return signed_pair(desc({R(1, 24), R(-1, 3), R(11, 9), R(-29, 10), R(355, 72), R(-35, 6), R(337, 72),
                                     R(-73, 30), R(1, 2)}),
                               desc({R(-1, 8), R(1, 2), R(-1, 2)}));
        case 5:
            return signed_pair(desc({R(1, 120), R(-1, 9), R(49, 72), R(-118, 45), R(523, 72), R(-2731, 180),
                                     R(3413, 144), R(-4853, 180), R(2599, 120), R(-1321, 120), R(9, 4)}),
                               desc({R(-1, 16), R(7, 12), R(-17, 8), R(85, 24), R(-9, 4)}));
        case 6:
            return signed_pair(desc({R(1, 720), R(-1, 36), R(37, 144), R(-4813, 3240), R(8819, 1440),
                                     R(-72991, 3780), R(2873, 60), R(-100459, 1080), R(199519, 1440),
                                     R(-498557, 3240), R(14579, 120), R(-7517, 126), R(765, 64)}),
                               desc({R(-1, 48), R(1, 3), R(-221, 96), R(211, 24), R(-467, 24), R(47, 2),
                                     R(-765, 64)}));
        default: throw std::invalid_argument("bishop table covers q <= 6");
    }
}

Quasipolynomial queen_table(unsigned q) {
    switch (q) {
        case 1: return Quasipolynomial::polynomial(desc({1, 0, 0}));
        case 2: return Quasipolynomial::polynomial(desc({R(1, 2), R(-5, 3), R(3, 2), R(-1, 3), 0}));
        case 3:
            return signed_pair(desc({R(1, 6), R(-5, 3), R(79, 12), R(-25, 2), 11, R(-43, 12), R(1, 8)}),
                               desc({R(1, 4), R(-1, 8)}));
        case 4: {
            const auto two = signed_pair(desc({R(1, 24), R(-5, 6), R(65, 9), R(-1051, 30), R(817, 8),
                                               R(-19103, 108), R(3989, 24), R(-18131, 270), R(253, 54)}),
                                         desc({R(1, 4), R(-21, 8), 7, R(-7, 2)}));
            // Re(zeta3^n) 32(n-1)/27 + Im(zeta3^n) 40 sqrt3/81, expanded by n mod 3
            const Coeffs shift = desc({R(32, 27), R(-32, 27)});
            Quasipolynomial out;
            out.degree = 8;
            out.period = 6;
            for (unsigned r = 0; r < 6; ++r) {
                Coeffs c = two.constituents[r % 2];
                switch (r % 3) {
                    case 0: c = add(c, shift); break;
                    case 1: c = add(add(c, shift, R(-1, 2)), desc({R(20, 27)})); break;
                    default: c = add(add(c, shift, R(-1, 2)), desc({R(-20, 27)})); break;
                }
                out.constituents.push_back(c);
            }
            return out;
        }
        default: throw std::invalid_argument("queen table covers q <= 4");
    }
}

Quasipolynomial partial_nightrider2(unsigned k) {
    if (k < 1 || k > 4) throw std::invalid_argument("partial nightrider has 1..4 moves");
    const long kk = k;
    Coeffs even = desc({R(1, 2), R(-5 * kk, 24), R(kk - 1, 2), R(-kk, 6), 0});
    Coeffs odd = add(even, desc({R(-kk, 8), 0}));
    Quasipolynomial q;
    q.degree = 4;
    q.period = 2;
    q.constituents = {even, odd};
    return q;
}

BigInt pow_int(const BigInt& b, long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational arshon(long n, long i, bool white) {
    if (n < 1) throw std::invalid_argument("Arshon sums need n >= 1");
    if (i < 0) return 0;
    const long N = n - 1 - i;
    long a, b;
    if (n % 2 == 0) {
        a = n / 2;
        b = n / 2 - 1;
    } else if (!white) {
        a = b = (n - 1) / 2;
    } else {
        if (n == 1) return i <= 1 ? 1 : 0;
        a = (n + 1) / 2;
        b = (n - 3) / 2;
    }
    if (N < 0) return 0;
    BigInt total = 0;
    for (long j = 0; j <= N; ++j) {
        const BigInt term = binomial(N, j) * pow_int(BigInt(n + 1 - i - j), a) * pow_int(BigInt(n - i - j), b);
        if (j % 2) total -= term;
        else total += term;
    }
    return Rational(total) / Rational(factorial(static_cast<unsigned>(N)));
}

BigInt kotesovec(unsigned q, long n) {
    if (n < 1) throw std::invalid_argument("Kotesovec's sum needs n >= 1");
    const long A = (n + 1) / 2, B = n / 2;
    BigInt total = 0;
    for (long i = 0; i <= static_cast<long>(q); ++i) {
        BigInt s1 = 0, s2 = 0;
        for (long j = 0; j <= A; ++j) s1 += binomial(A, j) * stirling_second(static_cast<unsigned>(j + B), n - i);
        for (long h = 0; h <= B; ++h)
            s2 += binomial(B, h) * stirling_second(static_cast<unsigned>(h + A), n - (static_cast<long>(q) - i));
        total += s1 * s2;
    }
    return total;
}

Rational falling(long x, unsigned k) { return falling_factorial(Rational(x), k); }

Rational queen_gamma(unsigned q, unsigned i) {
    if (i == 0) return Rational(1) / Rational(factorial(q));
    if (q < 2) throw std::invalid_argument("queen gamma_i for i >= 1 needs q >= 2");
    const long m = static_cast<long>(q) - 2;
    const Rational inv = Rational(1) / Rational(factorial(q - 2));
    switch (i) {
        case 1: return -R(5, 3) * inv;
        case 2: return (R(25, 9) * falling(m, 2) + R(61, 6) * m + 3) * inv / 2;
        case 3:
            return -(R(125, 27) * falling(m, 4) + R(305, 6) * falling(m, 3) + R(681, 5) * falling(m, 2) + 73 * m + 2) *
                   inv / 6;
        default: throw std::invalid_argument("queen gamma formula covers i <= 3");
    }
}

Rational nightrider_gamma(unsigned q, unsigned i, unsigned k) {
    if (i == 0) return Rational(1) / Rational(factorial(q));
    if (q < 2) throw std::invalid_argument("nightrider gamma_i for i >= 1 needs q >= 2");
    const long m = static_cast<long>(q) - 2;
    const Rational inv = Rational(1) / Rational(factorial(q - 2));
    switch (i) {
        case 1: return -R(5 * static_cast<long>(k), 24) * inv;
        case 2:
            if (k != 4) throw std::invalid_argument("nightrider gamma_2 is for the full nightrider");
            return (R(25, 36) * falling(m, 2) + R(1871, 720) * m + 3) * inv / 2;
        default: throw std::invalid_argument("nightrider gamma formula covers i <= 2");
    }
}

// Direct values of the polynomial-in-n closed forms, n >= 0.
Rational direct_polynomial(FormulaId id, unsigned q, long n) {
    switch (id) {
        case FormulaId::rook_general: return Rational(BigInt(factorial(q) * binomial(n, q) * binomial(n, q)));
        case FormulaId::semirook_general: return Rational(BigInt(binomial(n, q) * pow_int(BigInt(n), q)));
        case FormulaId::semibishop_general: {
            BigInt t = 0;
            for (long k = 0; k <= static_cast<long>(q); ++k)
                t += stirling_first(static_cast<unsigned>(n + 1), n + 1 - k) *
                     stirling_first(static_cast<unsigned>(n), n - (static_cast<long>(q) - k));
            return Rational(q % 2 ? BigInt(-t) : t);
        }
        case FormulaId::triangle_semibishop: {
            const BigInt s = stirling_first(static_cast<unsigned>(n + 1), n + 1 - static_cast<long>(q));
            return Rational(q % 2 ? BigInt(-s) : s);
        }
        default: throw std::logic_error("not a polynomial formula");
    }
}

bool is_polynomial_id(FormulaId id) {
    return id == FormulaId::rook_general || id == FormulaId::semirook_general ||
           id == FormulaId::semibishop_general || id == FormulaId::triangle_semibishop;
}

const std::map<FormulaId, const char*>& id_names() {
    static const std::map<FormulaId, const char*> names = {
        {FormulaId::rook_general, "rook-general"},
        {FormulaId::semirook_general, "semirook-general"},
        {FormulaId::bishop_table, "bishop-q<=6"},
        {FormulaId::queen_table, "queen-q<=4"},
        {FormulaId::nightrider_q2, "nightrider-q2"},
        {FormulaId::partial_nightrider_q2, "partial-nightrider-q2"},
        {FormulaId::semibishop_general, "semibishop-general"},
        {FormulaId::triangle_semibishop, "triangle-semibishop"},
        {FormulaId::arshon_black, "arshon-black"},
        {FormulaId::arshon_white, "arshon-white"},
        {FormulaId::kotesovec_bishop_doublesum, "kotesovec-bishop-doublesum"},
        {FormulaId::rook_coefficient, "rook-coefficient"},
        {FormulaId::queen_gamma, "queen-gamma"},
        {FormulaId::nightrider_gamma, "nightrider-gamma"},
    };
    return names;
}

}  // namespace

const char* to_string(FormulaId id) { return id_names().at(id); }

FormulaId parse_formula_id(const std::string& text) {
    for (const auto& [id, name] : id_names())
        if (text == name) return id;
    throw std::invalid_argument("unknown formula '" + text + "'");
}

std::vector<FormulaId> all_formula_ids() {
    std::vector<FormulaId> out;
    for (const auto& [id, name] : id_names()) out.push_back(id);
    return out;
}

Quasipolynomial formula_quasipolynomial(FormulaId id, unsigned q, const FormulaParams& params) {
    if (q == 0) throw std::invalid_argument("formula: q must be positive");
    switch (id) {
        case FormulaId::bishop_table: return bishop_table(q);
        case FormulaId::queen_table: return queen_table(q);
        case FormulaId::nightrider_q2:
            if (q == 1) return Quasipolynomial::polynomial(desc({1, 0, 0}));
            if (q != 2) throw std::invalid_argument("nightrider closed form covers q <= 2");
            return signed_pair(desc({R(1, 2), R(-5, 6), R(3, 2), R(-11, 12), 0}), desc({R(1, 4), 0}));
        case FormulaId::partial_nightrider_q2:
            if (q == 1) return Quasipolynomial::polynomial(desc({1, 0, 0}));
            if (q != 2) throw std::invalid_argument("partial nightrider closed form covers q <= 2");
            return partial_nightrider2(params.k);
        default: break;
    }
    if (!is_polynomial_id(id)) throw std::invalid_argument(std::string(to_string(id)) + " is not a counting formula in n");
    // a polynomial of degree 2q in n on either board; fit and
    // cross-check on extra points
    const unsigned deg = 2 * q;
    std::vector<Sample> pts;
    for (long n = 1; n <= static_cast<long>(deg) + 4; ++n) pts.emplace_back(n, direct_polynomial(id, q, n).numerator());
    return interpolate(pts, deg, 1);
}

Rational formula_eval(FormulaId id, unsigned q, long n, const FormulaParams& params) {
    switch (id) {
        case FormulaId::arshon_black: return arshon(n, q, false);
        case FormulaId::arshon_white: return arshon(n, q, true);
        case FormulaId::kotesovec_bishop_doublesum: return Rational(kotesovec(q, n));
        case FormulaId::rook_coefficient: {
            BigInt t = 0;
            const long i = params.index;
            for (long k = 0; k <= i; ++k)
                t += stirling_first(q, static_cast<long>(q) - k) * stirling_first(q, static_cast<long>(q) - (i - k));
            return Rational(t);
        }
        case FormulaId::queen_gamma: return queen_gamma(q, params.index);
        case FormulaId::nightrider_gamma: return nightrider_gamma(q, params.index, params.k);
        default: break;
    }
    if (q == 0) throw std::invalid_argument("formula: q must be positive");
    if (is_polynomial_id(id)) {
        if (n >= 0) return direct_polynomial(id, q, n);
        return evaluate(formula_quasipolynomial(id, q, params), n);
    }
    return evaluate(formula_quasipolynomial(id, q, params), n);
}

std::optional<std::pair<FormulaId, FormulaParams>> formula_for_piece(const PieceSpec& piece, unsigned q) {
    auto sorted = [](std::vector<Move> m) {
        std::sort(m.begin(), m.end());
        return m;
    };
    const auto mine = sorted(piece.moves);
    auto is = [&](const char* preset) { return mine == sorted(parse_piece(preset).moves); };
    if (is("rook")) return std::pair{FormulaId::rook_general, FormulaParams{}};
    if (is("semirook")) return std::pair{FormulaId::semirook_general, FormulaParams{}};
    if (is("semibishop")) return std::pair{FormulaId::semibishop_general, FormulaParams{}};
    if (is("bishop") && q <= 6) return std::pair{FormulaId::bishop_table, FormulaParams{}};
    if (is("queen") && q <= 4) return std::pair{FormulaId::queen_table, FormulaParams{}};
    if (is("nightrider") && q <= 2) return std::pair{FormulaId::nightrider_q2, FormulaParams{}};
    const auto night = parse_piece("nightrider").moves;
    const bool sub = std::all_of(mine.begin(), mine.end(),
                                 [&](const Move& m) { return std::find(night.begin(), night.end(), m) != night.end(); });
    if (sub && q <= 2) return std::pair{FormulaId::partial_nightrider_q2, FormulaParams{static_cast<unsigned>(mine.size()), 0}};
    return std::nullopt;
}

Rational rook_leading_coefficient(unsigned i) {
    auto inner = [](long k) {
        BigInt s = 0;
        for (long r = 0; r <= k; ++r) {
            const BigInt t = binomial(2 * k, k + r) * stirling_second(static_cast<unsigned>(k + r), r);
            if (r % 2) s -= t;
            else s += t;
        }
        return s;
    };
    BigInt total = 0;
    const long ii = i;
    for (long k = 0; k <= ii; ++k) total += binomial(2 * ii, 2 * k) * inner(k) * inner(ii - k);
    return Rational(total) / Rational(factorial(2 * i));
}

}  // namespace riderlab
