#pragma once

// Quasipolynomials: exact fitting, period detection, parity, and the
// library of closed-form counting formulas.

#include "riderlab/exactmath.hpp"
#include "riderlab/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riderlab {

/// constituents[r][k] is the coefficient of n^k used when n = r (mod period).
struct Quasipolynomial {
    unsigned degree = 0;
    unsigned period = 1;
    std::vector<std::vector<Rational>> constituents;

    static Quasipolynomial polynomial(std::vector<Rational> coeffs);

    /// Smallest period that reproduces the same constituents.
    Quasipolynomial reduced() const;

    friend bool operator==(const Quasipolynomial&, const Quasipolynomial&) = default;
};

Rational evaluate(const Quasipolynomial& qp, long n);
Rational evaluate(const Quasipolynomial& qp, const BigInt& n);

class FitError : public std::runtime_error {
public:
    enum class Kind { insufficient_samples, inconsistent_fit, no_period };
    FitError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

using Sample = std::pair<long, BigInt>;

Quasipolynomial interpolate(const std::vector<Sample>& values, unsigned degree, unsigned period,
                            std::optional<Rational> known_leading = std::nullopt);

/// Smallest period p <= max_period whose fit predicts at least
/// max(holdout, 2) further samples per residue class.
unsigned detect_period(const std::vector<Sample>& values, unsigned degree, unsigned max_period, unsigned holdout,
                       std::optional<Rational> known_leading = std::nullopt);

/// Coefficient of n^{degree-i} in the constituent for `residue`.
Rational coefficient_gamma(const Quasipolynomial& qp, unsigned i, unsigned residue);

/// Checks Q_{-r}(-n) = (-1)^d Q_r(n) for every residue r.
bool parity_check(const Quasipolynomial& qp, unsigned d);

/// Values needed under the parity reflection and a common leading term.
unsigned long sample_budget(unsigned kappa, unsigned codim, unsigned period);

/// Free parameters of a degree-d, period-p quasipolynomial with the parity
/// reflection and a shared leading coefficient.
unsigned long parity_parameter_count(unsigned degree, unsigned period);

/// Greedy choice of n >= start, each raising the rank of the parity-reduced
/// system, until the fit is determined. Its length is the parameter count.
std::vector<long> parity_sample_plan(unsigned degree, unsigned period, long start = 1);

Quasipolynomial interpolate_with_parity(const std::vector<Sample>& values, unsigned degree, unsigned period);

/// Value at n = -1.
Rational types_count(const Quasipolynomial& qp);

/// {"degree":d,"period":p,"constituents":[["num/den",...],...]}, degree 0 first.
std::string to_json(const Quasipolynomial& qp);
Quasipolynomial quasipolynomial_from_json(const std::string& text);

// ---- closed forms ----------------------------------------------------------

enum class FormulaId {
    rook_general,
    semirook_general,
    bishop_table,
    queen_table,
    nightrider_q2,
    partial_nightrider_q2,
    semibishop_general,
    triangle_semibishop,
    arshon_black,
    arshon_white,
    kotesovec_bishop_doublesum,
    rook_coefficient,
    queen_gamma,
    nightrider_gamma,
};

struct FormulaParams {
    unsigned k = 4;      ///< number of moves for the partial nightrider
    unsigned index = 0;  ///< coefficient index i for the gamma/coefficient formulas
};

const char* to_string(FormulaId id);
FormulaId parse_formula_id(const std::string& text);
std::vector<FormulaId> all_formula_ids();

/// Exact value of a closed form. For arshon_black/white, q is the number of
/// bishops on that colour. For rook_coefficient the result is q! gamma_i, for
/// queen_gamma and nightrider_gamma it is gamma_i (the n-independent part).
/// Throws std::invalid_argument when (id, q) is unsupported.
Rational formula_eval(FormulaId id, unsigned q, long n, const FormulaParams& params = {});

/// Closed form as a quasipolynomial in n, for the placement-count ids.
Quasipolynomial formula_quasipolynomial(FormulaId id, unsigned q, const FormulaParams& params = {});

/// Placement-count formula for a preset, if the library has one.
std::optional<std::pair<FormulaId, FormulaParams>> formula_for_piece(const PieceSpec& piece, unsigned q);

/// Leading coefficient in q of q! gamma_i for the rook (triple sum form).
Rational rook_leading_coefficient(unsigned i);

}  // namespace riderlab
