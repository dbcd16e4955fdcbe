#include "riderlab/exactmath.hpp"

#include <mutex>
#include <vector>

namespace riderlab {

Rational Rational::parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto to_big = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        return BigInt(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw std::invalid_argument("Rational::parse: bad integer '" + std::string(text) + "'");
        return Rational(to_big(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("Rational::parse: bad fraction '" + std::string(text) + "'");
    return Rational(to_big(num), to_big(den));
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return to_string();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent) b *= b;
    }
    return result;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BigInt binomial(long n, long k) {
    if (k < 0) return 0;
    BigInt r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        BigInt nn(n);
        mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return r;
}

Rational falling_factorial(const Rational& x, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= x - Rational(static_cast<long>(i));
    return r;
}

namespace {

constexpr unsigned kMemoLimit = 200;

struct Tables {
    std::mutex mu;
    std::vector<BigInt> fib{1, 1};
    std::vector<std::vector<BigInt>> first{{1}};   // s(n, 0..n)
    std::vector<std::vector<BigInt>> second{{1}};  // S(n, 0..n)
};

Tables& tables() {
    static Tables t;
    return t;
}

// Next triangular row of s(n,k) from row n-1: s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
std::vector<BigInt> next_first_row(const std::vector<BigInt>& prev) {
    const unsigned n = static_cast<unsigned>(prev.size());
    std::vector<BigInt> row(n + 1, 0);
    for (unsigned k = 0; k <= n; ++k) {
        BigInt v = 0;
        if (k >= 1) v += prev[k - 1];
        if (k < n) v -= BigInt(n - 1) * prev[k];
        row[k] = v;
    }
    return row;
}

// S(n,k) = k S(n-1,k) + S(n-1,k-1).
std::vector<BigInt> next_second_row(const std::vector<BigInt>& prev) {
    const unsigned n = static_cast<unsigned>(prev.size());
    std::vector<BigInt> row(n + 1, 0);
    for (unsigned k = 0; k <= n; ++k) {
        BigInt v = 0;
        if (k >= 1) v += prev[k - 1];
        if (k < n) v += BigInt(k) * prev[k];
        row[k] = v;
    }
    return row;
}

template <class NextRow>
BigInt triangular_lookup(std::vector<std::vector<BigInt>>& memo, std::mutex& mu, unsigned n, long k,
                         NextRow next) {
    if (k < 0 || k > static_cast<long>(n)) return 0;
    std::lock_guard lock(mu);
    while (memo.size() <= std::min(n, kMemoLimit)) memo.push_back(next(memo.back()));
    if (n <= kMemoLimit) return memo[n][static_cast<std::size_t>(k)];
    std::vector<BigInt> row = memo.back();
    while (row.size() <= n) row = next(row);
    return row[static_cast<std::size_t>(k)];
}

}  // namespace

BigInt fib(unsigned i) {
    auto& t = tables();
    std::lock_guard lock(t.mu);
    while (t.fib.size() <= i) t.fib.push_back(t.fib[t.fib.size() - 1] + t.fib[t.fib.size() - 2]);
    return t.fib[i];
}

BigInt stirling_first(unsigned n, long k) {
    auto& t = tables();
    return triangular_lookup(t.first, t.mu, n, k, next_first_row);
}

BigInt stirling_second(unsigned n, long k) {
    auto& t = tables();
    return triangular_lookup(t.second, t.mu, n, k, next_second_row);
}

BigInt elem_sym(unsigned q, unsigned n) {
    if (q > n) return 0;
    // e[j] over the prefix {1..m}, updated in place for m = 1..n.
    std::vector<BigInt> e(q + 1, 0);
    e[0] = 1;
    for (unsigned m = 1; m <= n; ++m)
        for (unsigned j = std::min(q, m); j >= 1; --j) e[j] += BigInt(m) * e[j - 1];
    return e[q];
}

}  // namespace riderlab
