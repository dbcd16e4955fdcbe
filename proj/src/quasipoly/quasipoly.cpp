#include "riderlab/quasipoly.hpp"

#include "riderlab/linalg.hpp"

#include <algorithm>
#include <map>
#include "json.hpp"

namespace riderlab {

namespace {

unsigned residue(long n, unsigned p) {
    const long r = n % static_cast<long>(p);
    return static_cast<unsigned>(r < 0 ? r + static_cast<long>(p) : r);
}

unsigned residue(const BigInt& n, unsigned p) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
    return static_cast<unsigned>(r.get_ui());
}

Rational horner(const std::vector<Rational>& c, const Rational& x) {
    Rational acc(0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

// Distinct n per residue; a repeated n with a different value is inconsistent.
std::map<unsigned, std::vector<Sample>> by_residue(const std::vector<Sample>& values, unsigned p) {
    std::map<long, BigInt> uniq;
    for (const auto& [n, v] : values) {
        auto [it, fresh] = uniq.emplace(n, v);
        if (!fresh && it->second != v)
            throw FitError(FitError::Kind::inconsistent_fit, "two different values at n=" + std::to_string(n));
    }
    std::map<unsigned, std::vector<Sample>> out;
    for (const auto& [n, v] : uniq) out[residue(n, p)].emplace_back(n, v);
    return out;
}

std::vector<Rational> fit_constituent(const std::vector<Sample>& pts, unsigned degree,
                                      const std::optional<Rational>& lead, unsigned r) {
    const unsigned unknowns = lead ? degree : degree + 1;
    if (pts.size() < unknowns)
        throw FitError(FitError::Kind::insufficient_samples,
                       "residue " + std::to_string(r) + ": need " + std::to_string(unknowns) + " samples, have " +
                           std::to_string(pts.size()));
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    if (lead) coeffs[degree] = *lead;
    if (unknowns == 0) {
        for (const auto& [n, v] : pts)
            if (horner(coeffs, Rational(n)) != Rational(v))
                throw FitError(FitError::Kind::inconsistent_fit, "constant fit disagrees at n=" + std::to_string(n));
        return coeffs;
    }
    RationalMatrix a;
    RationalVector b;
    for (const auto& [n, v] : pts) {
        RationalVector row(unknowns);
        Rational pw(1);
        for (unsigned k = 0; k < unknowns; ++k, pw *= Rational(n)) row[k] = pw;
        Rational rhs(v);
        if (lead) rhs -= *lead * pow(Rational(n), degree);
        a.push_back(std::move(row));
        b.push_back(rhs);
    }
    auto sol = solve_linear(a, b);
    if (sol.status == SolveStatus::inconsistent)
        throw FitError(FitError::Kind::inconsistent_fit,
                       "residue " + std::to_string(r) + ": samples do not fit degree " + std::to_string(degree));
    if (!sol) throw FitError(FitError::Kind::insufficient_samples, "residue " + std::to_string(r) + ": singular fit");
    for (unsigned k = 0; k < unknowns; ++k) coeffs[k] = sol.x[k];
    return coeffs;
}

}  // namespace

Quasipolynomial Quasipolynomial::polynomial(std::vector<Rational> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0);
    Quasipolynomial q;
    q.degree = static_cast<unsigned>(coeffs.size() - 1);
    q.period = 1;
    q.constituents = {std::move(coeffs)};
    return q;
}

Quasipolynomial Quasipolynomial::reduced() const {
    for (unsigned p = 1; p < period; ++p) {
        if (period % p != 0) continue;
        bool same = true;
        for (unsigned r = p; r < period && same; ++r) same = constituents[r] == constituents[r % p];
        if (same) {
            Quasipolynomial q = *this;
            q.period = p;
            q.constituents.resize(p);
            return q;
        }
    }
    return *this;
}

Rational evaluate(const Quasipolynomial& qp, long n) {
    return horner(qp.constituents.at(residue(n, qp.period)), Rational(n));
}

Rational evaluate(const Quasipolynomial& qp, const BigInt& n) {
    return horner(qp.constituents.at(residue(n, qp.period)), Rational(n));
}

Quasipolynomial interpolate(const std::vector<Sample>& values, unsigned degree, unsigned period,
                            std::optional<Rational> known_leading) {
    if (period == 0) throw std::invalid_argument("interpolate: period must be positive");
    const auto groups = by_residue(values, period);
    Quasipolynomial q;
    q.degree = degree;
    q.period = period;
    for (unsigned r = 0; r < period; ++r) {
        auto it = groups.find(r);
        static const std::vector<Sample> none;
        q.constituents.push_back(fit_constituent(it == groups.end() ? none : it->second, degree, known_leading, r));
    }
    return q;
}

unsigned detect_period(const std::vector<Sample>& values, unsigned degree, unsigned max_period, unsigned holdout,
                       std::optional<Rational> known_leading) {
    const unsigned margin = std::max(holdout, 2u);
    const unsigned need = known_leading ? degree : degree + 1;
    for (unsigned p = 1; p <= max_period; ++p) {
        const auto groups = by_residue(values, p);
        bool fits = true;
        for (unsigned r = 0; r < p && fits; ++r) {
            auto it = groups.find(r);
            const std::size_t have = it == groups.end() ? 0 : it->second.size();
            if (have < need + margin)
                throw FitError(FitError::Kind::insufficient_samples,
                               "period " + std::to_string(p) + " residue " + std::to_string(r) + ": need " +
                                   std::to_string(need + margin) + " samples, have " + std::to_string(have));
            const auto& pts = it->second;
            std::vector<Sample> train(pts.begin(), pts.begin() + need);
            std::vector<Rational> c;
            try {
                c = fit_constituent(train, degree, known_leading, r);
            } catch (const FitError&) {
                fits = false;
                break;
            }
            for (std::size_t k = need; k < pts.size() && fits; ++k)
                fits = horner(c, Rational(pts[k].first)) == Rational(pts[k].second);
        }
        if (fits) return p;
    }
    throw FitError(FitError::Kind::no_period, "no period <= " + std::to_string(max_period) + " fits");
}

Rational coefficient_gamma(const Quasipolynomial& qp, unsigned i, unsigned r) {
    if (i > qp.degree) throw std::invalid_argument("coefficient_gamma: index above degree");
    return qp.constituents.at(r % qp.period).at(qp.degree - i);
}

bool parity_check(const Quasipolynomial& qp, unsigned d) {
    if (qp.degree > d) {
        for (const auto& c : qp.constituents)
            for (unsigned k = d + 1; k <= qp.degree; ++k)
                if (c[k] != 0) return false;
    }
    for (unsigned r = 0; r < qp.period; ++r) {
        const auto& a = qp.constituents[r];
        const auto& b = qp.constituents[(qp.period - r) % qp.period];
        for (unsigned k = 0; k <= std::min(d, qp.degree); ++k) {
            const Rational lhs = (k % 2 == 0) ? b[k] : -b[k];  // coefficient of n^k in Q_{-r}(-n)
            const Rational rhs = (d % 2 == 0) ? a[k] : -a[k];
            if (lhs != rhs) return false;
        }
    }
    return true;
}

unsigned long sample_budget(unsigned kappa, unsigned codim, unsigned period) {
    if (codim > 2 * kappa) throw std::invalid_argument("sample_budget: codim exceeds 2 kappa");
    const unsigned long twice = static_cast<unsigned long>(period) * (2 * kappa - codim);
    return (twice + 1) / 2 + (codim % 2 == 0 ? 1 : 0);
}

namespace {

// Coefficient (r,k) expressed as sign * theta[index]; index -1 means zero.
struct ParityLayout {
    std::vector<std::vector<std::pair<long, int>>> slot;  // [r][k] -> (param, sign)
    unsigned long params = 0;
};

ParityLayout parity_layout(unsigned d, unsigned p) {
    ParityLayout L;
    L.slot.assign(p, std::vector<std::pair<long, int>>(d + 1, {-1, 0}));
    const long lead = static_cast<long>(L.params++);
    for (unsigned r = 0; r < p; ++r) L.slot[r][d] = {lead, 1};
    for (unsigned r = 0; r < p; ++r) {
        const unsigned mr = (p - r) % p;
        if (mr < r) continue;
        for (unsigned k = 0; k < d; ++k) {
            const bool even = (d - k) % 2 == 0;
            if (mr == r) {
                if (even) L.slot[r][k] = {static_cast<long>(L.params++), 1};
            } else {
                const long id = static_cast<long>(L.params++);
                L.slot[r][k] = {id, 1};
                L.slot[mr][k] = {id, even ? 1 : -1};
            }
        }
    }
    return L;
}

RationalVector parity_row(const ParityLayout& L, unsigned d, unsigned p, long n) {
    RationalVector row(L.params, Rational(0));
    const unsigned r = residue(n, p);
    Rational pw(1);
    for (unsigned k = 0; k <= d; ++k, pw *= Rational(n)) {
        const auto [id, sign] = L.slot[r][k];
        if (id >= 0) row[static_cast<std::size_t>(id)] += sign > 0 ? pw : -pw;
    }
    return row;
}

}  // namespace

unsigned long parity_parameter_count(unsigned degree, unsigned period) {
    return parity_layout(degree, period).params;
}

std::vector<long> parity_sample_plan(unsigned degree, unsigned period, long start) {
    const auto L = parity_layout(degree, period);
    std::vector<long> plan;
    RationalMatrix rows;
    std::size_t current = 0;
    for (long n = start; plan.size() < L.params; ++n) {
        if (n - start > static_cast<long>(64 * (L.params + period)))
            throw FitError(FitError::Kind::insufficient_samples, "parity plan did not reach full rank");
        rows.push_back(parity_row(L, degree, period, n));
        const std::size_t rk = rank(rows);
        if (rk > current) {
            current = rk;
            plan.push_back(n);
        } else {
            rows.pop_back();
        }
    }
    return plan;
}

Quasipolynomial interpolate_with_parity(const std::vector<Sample>& values, unsigned degree, unsigned period) {
    const auto L = parity_layout(degree, period);
    RationalMatrix a;
    RationalVector b;
    std::map<long, BigInt> uniq;
    for (const auto& [n, v] : values) {
        auto [it, fresh] = uniq.emplace(n, v);
        if (!fresh && it->second != v)
            throw FitError(FitError::Kind::inconsistent_fit, "two different values at n=" + std::to_string(n));
        if (!fresh) continue;
        a.push_back(parity_row(L, degree, period, n));
        b.push_back(Rational(v));
    }
    if (a.size() < L.params)
        throw FitError(FitError::Kind::insufficient_samples,
                       "need " + std::to_string(L.params) + " samples, have " + std::to_string(a.size()));
    auto sol = solve_linear(a, b);
    if (sol.status == SolveStatus::inconsistent)
        throw FitError(FitError::Kind::inconsistent_fit, "samples violate the parity-reduced form");
    if (!sol) throw FitError(FitError::Kind::insufficient_samples, "samples do not determine every coefficient");
    Quasipolynomial q;
    q.degree = degree;
    q.period = period;
    q.constituents.assign(period, std::vector<Rational>(degree + 1, Rational(0)));
    for (unsigned r = 0; r < period; ++r)
        for (unsigned k = 0; k <= degree; ++k) {
            const auto [id, sign] = L.slot[r][k];
            if (id >= 0) q.constituents[r][k] = sign > 0 ? sol.x[id] : -sol.x[id];
        }
    return q;
}

Rational types_count(const Quasipolynomial& qp) { return evaluate(qp, -1L); }

std::string to_json(const Quasipolynomial& qp) {
    nlohmann::ordered_json j;
    j["degree"] = qp.degree;
    j["period"] = qp.period;
    auto cons = nlohmann::ordered_json::array();
    for (const auto& c : qp.constituents) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& v : c) row.push_back(v.to_string());
        cons.push_back(std::move(row));
    }
    j["constituents"] = std::move(cons);
    return j.dump();
}

Quasipolynomial quasipolynomial_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Quasipolynomial q;
    q.degree = j.at("degree").get<unsigned>();
    q.period = j.at("period").get<unsigned>();
    if (q.period == 0) throw std::invalid_argument("quasipolynomial json: period must be positive");
    const auto& cons = j.at("constituents");
    if (cons.size() != q.period) throw std::invalid_argument("quasipolynomial json: constituent count != period");
    for (const auto& row : cons) {
        if (row.size() != q.degree + 1) throw std::invalid_argument("quasipolynomial json: wrong constituent length");
        std::vector<Rational> c;
        for (const auto& v : row) c.push_back(Rational::parse(v.get<std::string>()));
        q.constituents.push_back(std::move(c));
    }
    return q;
}

}  // namespace riderlab
