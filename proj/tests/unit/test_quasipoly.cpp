#include "doctest.h"

#include "riderlab/counting.hpp"
#include "riderlab/quasipoly.hpp"

#include <random>

using namespace riderlab;

namespace {

std::vector<Sample> brute_samples(const char* piece, unsigned q, long n_max, long n_min = 1) {
    const auto p = parse_piece(piece);
    std::vector<Sample> out;
    for (long n = n_min; n <= n_max; ++n) out.emplace_back(n, count_placements(p, q, static_cast<unsigned>(n)));
    return out;
}

std::vector<Sample> alpha_samples(const Subspace& u, long n_max) {
    std::vector<Sample> out;
    for (long n = 1; n <= n_max; ++n) out.emplace_back(n, subspace_count(u, static_cast<unsigned>(n)));
    return out;
}

Rational inv_fact(unsigned q) { return Rational(1) / Rational(factorial(q)); }

}  // namespace

TEST_CASE("evaluate with negative n") {
    Quasipolynomial q;
    q.degree = 1;
    q.period = 2;
    q.constituents = {{0, 1}, {10, 1}};
    CHECK(evaluate(q, 4L) == 4);
    CHECK(evaluate(q, 3L) == 13);
    CHECK(evaluate(q, -1L) == 9);  // residue 1
    CHECK(evaluate(q, -2L) == -2);
}

TEST_CASE("interpolate") {
    auto q2 = interpolate(brute_samples("queen", 2, 6), 4, 1);
    CHECK(q2.constituents[0] == std::vector<Rational>{0, Rational(-1, 3), Rational(3, 2), Rational(-5, 3), Rational(1, 2)});

    auto c = interpolate({{1, 7}, {2, 7}, {5, 7}}, 0, 1);
    CHECK(c.constituents[0] == std::vector<Rational>{7});

    auto n2 = interpolate(brute_samples("nightrider", 2, 10), 4, 2);
    CHECK(n2 == formula_quasipolynomial(FormulaId::nightrider_q2, 2));

    CHECK_THROWS_AS(interpolate({{1, 1}, {2, 4}}, 2, 1), FitError);
    try {
        interpolate({{1, 1}, {2, 4}, {3, 9}, {4, 17}}, 2, 1);
        FAIL("expected inconsistency");
    } catch (const FitError& e) {
        CHECK(e.kind() == FitError::Kind::inconsistent_fit);
    }
    try {
        interpolate({{1, 1}}, 2, 1);
        FAIL("expected insufficient");
    } catch (const FitError& e) {
        CHECK(e.kind() == FitError::Kind::insufficient_samples);
    }
    // known leading coefficient saves one sample per residue
    auto kl = interpolate({{1, 1}, {2, 4}}, 2, 1, Rational(1));
    CHECK(kl.constituents[0] == std::vector<Rational>{0, 0, 1});
}

TEST_CASE("interpolation round trip on random quasipolynomials") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    std::uniform_int_distribution<unsigned> deg(0, 8), per(1, 6);
    for (int t = 0; t < 200; ++t) {
        Quasipolynomial q;
        q.degree = deg(rng);
        q.period = per(rng);
        for (unsigned r = 0; r < q.period; ++r) {
            std::vector<Rational> c;
            for (unsigned k = 0; k <= q.degree; ++k) c.emplace_back(num(rng), den(rng));
            q.constituents.push_back(c);
        }
        // values are rational here, so fit through the integer-valued scaling
        BigInt scale = 1;
        for (const auto& c : q.constituents)
            for (const auto& v : c) scale = lcm(scale, v.denominator());
        std::vector<Sample> pts;
        for (long n = 1; n <= static_cast<long>((q.degree + 1) * q.period); ++n) {
            const Rational v = evaluate(q, n) * Rational(scale);
            REQUIRE(v.is_integer());
            pts.emplace_back(n, v.numerator());
        }
        auto fit = interpolate(pts, q.degree, q.period);
        for (auto& c : fit.constituents)
            for (auto& v : c) v /= Rational(scale);
        CHECK(fit == q);
    }
}

TEST_CASE("period detection") {
    const auto lead3 = inv_fact(3);
    CHECK(detect_period(brute_samples("bishop", 3, 40), 6, 4, 2, lead3) == 2);
    CHECK(detect_period(brute_samples("semibishop", 3, 30), 6, 4, 2, lead3) == 1);
    CHECK(detect_period(brute_samples("nightrider", 2, 30), 4, 4, 2, inv_fact(2)) == 2);
    CHECK(detect_period(brute_samples("nightrider", 2, 30), 4, 4, 2) == 2);
    try {
        detect_period(brute_samples("nightrider", 2, 12), 4, 1, 2);
        FAIL("period 1 must not fit");
    } catch (const FitError& e) {
        CHECK(e.kind() == FitError::Kind::no_period);
    }
    CHECK_THROWS_AS(detect_period(brute_samples("bishop", 3, 10), 6, 4, 2), FitError);
}

TEST_CASE("gamma coefficients") {
    auto q3 = interpolate(brute_samples("queen", 3, 20), 6, 2, inv_fact(3));
    CHECK(coefficient_gamma(q3, 1, 0) == Rational(-5, 3));
    CHECK(coefficient_gamma(q3, 1, 1) == Rational(-5, 3));
    CHECK(coefficient_gamma(q3, 0, 0) == inv_fact(3));
    auto n2 = interpolate(brute_samples("nightrider", 2, 12), 4, 2);
    CHECK(coefficient_gamma(n2, 1, 0) == Rational(-5, 6));
    auto r3 = interpolate(brute_samples("rook", 3, 9), 6, 1);
    CHECK(coefficient_gamma(r3, 1, 0) == -1);
    CHECK(formula_eval(FormulaId::rook_coefficient, 3, 0, {4, 1}) == -6);
}

TEST_CASE("formula library spot values") {
    CHECK(formula_eval(FormulaId::rook_general, 2, 3) == 18);
    CHECK(formula_eval(FormulaId::bishop_table, 3, 3) == 26);
    CHECK(formula_eval(FormulaId::bishop_table, 2, 3) == 26);
    CHECK(formula_eval(FormulaId::queen_table, 3, -1) == 36);
    CHECK(formula_eval(FormulaId::partial_nightrider_q2, 2, 3, {4, 0}) == 28);
    CHECK(formula_eval(FormulaId::arshon_black, 1, 2) == 2);
    CHECK(formula_eval(FormulaId::kotesovec_bishop_doublesum, 2, 3) == 26);
    CHECK(formula_eval(FormulaId::triangle_semibishop, 2, 3) == 11);
    CHECK_THROWS(formula_eval(FormulaId::queen_table, 5, 3));
    CHECK_THROWS(formula_eval(FormulaId::nightrider_q2, 3, 3));
    for (auto id : all_formula_ids()) CHECK(parse_formula_id(to_string(id)) == id);
}

TEST_CASE("semibishop explicit polynomials") {
    const std::vector<std::vector<Rational>> explicit_forms = {
        {0, 0, 1},
        {0, Rational(-1, 6), 0, Rational(-1, 3), Rational(1, 2)},
        {0, 0, Rational(1, 6), Rational(-1, 6), Rational(1, 6), Rational(-1, 3), Rational(1, 6)},
        {0, Rational(1, 60), Rational(1, 72), Rational(-1, 6), Rational(2, 9), Rational(-11, 60), Rational(2, 9),
         Rational(-1, 6), Rational(1, 24)},
    };
    for (unsigned q = 1; q <= 4; ++q) {
        const auto qp = formula_quasipolynomial(FormulaId::semibishop_general, q);
        CHECK(qp.constituents[0] == explicit_forms[q - 1]);
    }
}

TEST_CASE("rook coefficient polynomials in q") {
    // q! gamma_1 = -(q)_2, q! gamma_2 = (q)_2 (3q^2-5q+1)/6, q! gamma_3 = -(q)_3 q(q-1)^2/6
    for (long q = 1; q <= 9; ++q) {
        const FormulaParams p1{4, 1}, p2{4, 2}, p3{4, 3};
        const Rational Q(q);
        CHECK(formula_eval(FormulaId::rook_coefficient, q, 0, p1) == -falling_factorial(Q, 2));
        CHECK(formula_eval(FormulaId::rook_coefficient, q, 0, p2) ==
              falling_factorial(Q, 2) * (3 * Q * Q - 5 * Q + 1) / 6);
        CHECK(formula_eval(FormulaId::rook_coefficient, q, 0, p3) ==
              -falling_factorial(Q, 3) * Q * (Q - 1) * (Q - 1) / 6);
    }
    for (unsigned i = 1; i <= 3; ++i) {
        std::vector<Sample> pts;
        for (long q = 1; q <= static_cast<long>(2 * i + 4); ++q)
            pts.emplace_back(q, formula_eval(FormulaId::rook_coefficient, q, 0, {4, i}).numerator());
        const auto fit = interpolate(pts, 2 * i, 1);
        CHECK(fit.constituents[0][2 * i] == rook_leading_coefficient(i));
        CHECK(rook_leading_coefficient(i).sign() == (i % 2 ? -1 : 1));
    }
}

TEST_CASE("parity") {
    const auto a12 = interpolate(alpha_samples(make_subspace({{1, 2, {2, 1}}}), 12), 3, 2);
    CHECK(parity_check(a12, 3));
    const auto b12 = interpolate(alpha_samples(make_subspace({{1, 2, {2, 1}}, {1, 3, {2, 1}}}), 12), 4, 2);
    CHECK(parity_check(b12, 4));
    auto bad = b12;
    bad.constituents[0][1] += 1;
    CHECK_FALSE(parity_check(bad, 4));
}

TEST_CASE("strong parity sample budget") {
    CHECK(sample_budget(3, 2, 12) == 25);
    CHECK(sample_budget(3, 1, 2) == 5);
    CHECK(sample_budget(1, 2, 1) == 1);
    for (unsigned kappa = 1; kappa <= 4; ++kappa)
        for (unsigned codim = 0; codim <= 2 * kappa; ++codim)
            for (unsigned p = 1; p <= 20; ++p)
                CHECK(parity_parameter_count(2 * kappa - codim, p) == sample_budget(kappa, codim, p));
    // alpha of slope 1/2 needs 3 values at period 2
    const auto u = make_subspace({{1, 2, {2, 1}}});
    const auto plan = parity_sample_plan(3, 2);
    CHECK(plan.size() == sample_budget(2, 1, 2));
    std::vector<Sample> pts;
    for (long n : plan) pts.emplace_back(n, subspace_count(u, static_cast<unsigned>(n)));
    CHECK(interpolate_with_parity(pts, 3, 2) == interpolate(alpha_samples(u, 12), 3, 2));
}

TEST_CASE("combinatorial types") {
    CHECK(types_count(formula_quasipolynomial(FormulaId::queen_table, 4)) == 574);
    CHECK(types_count(formula_quasipolynomial(FormulaId::rook_general, 3)) == 6);
    // the tabulated 7 disagrees with the closed form; four attack lines give 8 sectors, 4 unlabelled types
    CHECK(types_count(formula_quasipolynomial(FormulaId::nightrider_q2, 2)) == 4);
    CHECK(types_count(interpolate(brute_samples("nightrider", 2, 12), 4, 2)) == 4);
    CHECK(types_count(interpolate(brute_samples("bishop", 3, 16), 6, 2)) == 6);
}

TEST_CASE("json") {
    const auto q = formula_quasipolynomial(FormulaId::nightrider_q2, 2);
    const auto text = to_json(q);
    CHECK(text.rfind("{\"degree\":4,\"period\":2,\"constituents\":[[\"0/1\",", 0) == 0);
    CHECK(quasipolynomial_from_json(text) == q);
    CHECK_THROWS(quasipolynomial_from_json("{\"degree\":1,\"period\":2,\"constituents\":[[\"1/1\",\"0/1\"]]}"));
}

TEST_CASE("formula_for_piece") {
    auto f = formula_for_piece(parse_piece("N2-ortho"), 2);
    REQUIRE(f);
    CHECK(f->first == FormulaId::partial_nightrider_q2);
    CHECK(f->second.k == 2);
    CHECK(formula_for_piece(parse_piece("(1,1);(1,-1)"), 3)->first == FormulaId::bishop_table);
    CHECK_FALSE(formula_for_piece(parse_piece("queen"), 5));
    CHECK_FALSE(formula_for_piece(parse_piece("frontal-queen"), 2));
}
