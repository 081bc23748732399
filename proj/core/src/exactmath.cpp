#include "qmf/exactmath.hpp"

#include <algorithm>
#include <utility>

namespace qmf {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational ratio(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational literal: '" + text + "'");
    }
}

Integer integer_pow(const Integer& base, unsigned long exp)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational rational_pow(const Rational& base, std::int64_t exp)
{
    if (exp >= 0) {
        const auto e = static_cast<unsigned long>(exp);
        return make_rational(integer_pow(base.get_num(), e), integer_pow(base.get_den(), e));
    }
    if (base == 0) {
        throw DomainError("zero raised to a negative power");
    }
    const auto e = static_cast<unsigned long>(-exp);
    return make_rational(integer_pow(base.get_den(), e), integer_pow(base.get_num(), e));
}

Rational bernoulli(int k)
{
    if (k < 2 || k % 2 != 0) {
        throw DomainError("bernoulli: k must be even and >= 2, got " + std::to_string(k));
    }
    // sum_{j=0}^{n} C(n+1, j) B_j = 0, B_0 = 1; this recurrence yields B_1 = -1/2
    // and leaves even-index values convention independent.
    std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
    b[0] = 1;
    for (int n = 1; n <= k; ++n) {
        Rational acc = 0;
        for (int j = 0; j < n; ++j) {
            acc += Rational(binomial(n + 1, j)) * b[static_cast<std::size_t>(j)];
        }
        b[static_cast<std::size_t>(n)] = -acc / Rational(n + 1);
    }
    return b[static_cast<std::size_t>(k)];
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("divisors of 0");
    }
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Integer sigma(unsigned j, std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("sigma: n must be positive");
    }
    Integer acc = 0;
    for (auto d : divisors(n)) {
        acc += integer_pow(Integer(static_cast<unsigned long>(d)), j);
    }
    return acc;
}

Rational sigma_rational(std::int64_t j, std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("sigma: n must be positive");
    }
    Rational acc = 0;
    for (auto d : divisors(n)) {
        acc += rational_pow(Rational(static_cast<unsigned long>(d)), j);
    }
    return acc;
}

Integer binomial(std::int64_t n, std::int64_t r)
{
    if (n < 0 || r < 0 || r > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

namespace {

// Reduces the augmented matrix in place; returns the pivot column of each
// pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[row], m[p]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) {
                continue;
            }
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c) {
                m[r][c] -= factor * m[row][c];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a,
                                                  const std::vector<Rational>& b)
{
    if (a.empty()) {
        throw DomainError("solve_linear: matrix has no rows");
    }
    if (a.size() != b.size()) {
        throw DomainError("solve_linear: " + std::to_string(a.size()) + " rows but rhs of length "
                          + std::to_string(b.size()));
    }
    const std::size_t cols = a.front().size();
    RationalMatrix m;
    m.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != cols) {
            throw DomainError("solve_linear: ragged matrix");
        }
        auto row = a[i];
        row.push_back(b[i]);
        m.push_back(std::move(row));
    }

    const auto pivots = row_reduce(m, cols);
    for (std::size_t r = pivots.size(); r < m.size(); ++r) {
        if (m[r][cols] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = m[r][cols];
    }
    return x;
}

std::size_t matrix_rank(const RationalMatrix& a)
{
    if (a.empty()) {
        return 0;
    }
    RationalMatrix m = a;
    return row_reduce(m, a.front().size()).size();
}

bool is_perfect_square(const Integer& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

} // namespace qmf
