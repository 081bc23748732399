#include "qmf/forms.hpp"

#include <algorithm>

namespace qmf {

GradedSeries eisenstein(int k, std::size_t prec)
{
    if (k < 2 || k % 2 != 0) {
        throw DomainError("eisenstein: weight must be even and >= 2, got " + std::to_string(k));
    }
    const Rational factor = -Rational(2 * k) / bernoulli(k);
    std::vector<Rational> c(prec + 1);
    c[0] = 1;
    for (std::size_t m = 1; m <= prec; ++m) {
        c[m] = factor * Rational(sigma(static_cast<unsigned>(k - 1), m));
    }
    return {QSeries(std::move(c)), k, k == 2 ? 1 : 0};
}

std::vector<std::pair<int, int>> monomial_exponents(int k)
{
    if (k < 0 || k % 2 != 0) {
        throw DomainError("monomial basis: weight must be even and nonnegative, got " + std::to_string(k));
    }
    std::vector<std::pair<int, int>> out;
    for (int a = k / 4; a >= 0; --a) {
        const int rest = k - 4 * a;
        if (rest % 6 == 0) {
            out.emplace_back(a, rest / 6);
        }
    }
    return out;
}

std::size_t modular_dimension(int k)
{
    return monomial_exponents(k).size();
}

namespace {

// Powers E4^0..E4^amax and E6^0..E6^bmax.
struct PowerTable {
    std::vector<QSeries> e4, e6;

    PowerTable(int amax, int bmax, std::size_t prec)
    {
        const QSeries one = QSeries::constant(1, prec);
        e4.push_back(one);
        e6.push_back(one);
        const QSeries x4 = eisenstein(4, prec).series;
        const QSeries x6 = eisenstein(6, prec).series;
        for (int a = 1; a <= amax; ++a) {
            e4.push_back(e4.back() * x4);
        }
        for (int b = 1; b <= bmax; ++b) {
            e6.push_back(e6.back() * x6);
        }
    }
};

} // namespace

std::vector<GradedSeries> monomial_basis(int k, std::size_t prec)
{
    const auto exps = monomial_exponents(k);
    if (exps.empty()) {
        return {};
    }
    int amax = 0, bmax = 0;
    for (auto [a, b] : exps) {
        amax = std::max(amax, a);
        bmax = std::max(bmax, b);
    }
    const PowerTable powers(amax, bmax, prec);
    std::vector<GradedSeries> out;
    out.reserve(exps.size());
    for (auto [a, b] : exps) {
        out.push_back({powers.e4[static_cast<std::size_t>(a)] * powers.e6[static_cast<std::size_t>(b)], k, 0});
    }
    return out;
}

namespace {

void require_delta_weight(int k)
{
    if (std::find(std::begin(kDeltaWeights), std::end(kDeltaWeights), k) == std::end(kDeltaWeights)) {
        throw DomainError("cusp_delta: weight " + std::to_string(k)
                          + " does not have a one-dimensional cusp space in {12,16,18,20,22,26}");
    }
}

// Columns are basis elements, rows are q-exponents first..last.
RationalMatrix coefficient_matrix(const std::vector<QSeries>& columns, std::size_t rows)
{
    RationalMatrix a(rows, std::vector<Rational>(columns.size()));
    for (std::size_t m = 0; m < rows; ++m) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            a[m][i] = columns[i][m];
        }
    }
    return a;
}

std::vector<QSeries> series_of(const std::vector<GradedSeries>& forms)
{
    std::vector<QSeries> out;
    out.reserve(forms.size());
    for (const auto& f : forms) {
        out.push_back(f.series);
    }
    return out;
}

QSeries combine(const std::vector<QSeries>& basis, const std::vector<Rational>& coords, std::size_t prec)
{
    QSeries acc(prec);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coords[i] != 0) {
            acc = acc + coords[i] * basis[i];
        }
    }
    return acc;
}

} // namespace

std::vector<Rational> cusp_delta_coordinates(int k)
{
    require_delta_weight(k);
    const auto basis = series_of(monomial_basis(k, 1));
    const auto a = coefficient_matrix(basis, 2);
    auto x = solve_linear(a, {Rational(0), Rational(1)});
    if (!x || matrix_rank(a) != basis.size()) {
        throw DomainError("cusp_delta: normalization system is not uniquely solvable at weight " + std::to_string(k));
    }
    return *x;
}

GradedSeries cusp_delta(int k, std::size_t prec)
{
    const auto coords = cusp_delta_coordinates(k);
    const auto basis = series_of(monomial_basis(k, prec));
    return {combine(basis, coords, prec), k, 0};
}

std::optional<std::vector<Rational>> is_modular_member(const QSeries& f, int k, std::size_t margin)
{
    if (k < 0 || k % 2 != 0) {
        throw DomainError("is_modular_member: level-1 forms have even nonnegative weight, got "
                          + std::to_string(k));
    }
    const std::size_t dim = modular_dimension(k);
    if (dim == 0) {
        if (f.is_zero()) {
            return std::vector<Rational>{};
        }
        throw DomainError("is_modular_member: M_" + std::to_string(k) + " is zero but the series is not");
    }
    if (f.prec() + 1 < dim + margin) {
        throw PrecisionError("is_modular_member: need at least " + std::to_string(dim + margin)
                             + " coefficients for weight " + std::to_string(k) + ", have "
                             + std::to_string(f.prec() + 1));
    }
    const auto basis = series_of(monomial_basis(k, f.prec()));
    std::vector<Rational> rhs(f.coeffs().begin(), f.coeffs().end());
    return solve_linear(coefficient_matrix(basis, f.prec() + 1), rhs);
}

std::vector<QSeries> cusp_basis(int k, std::size_t prec)
{
    // Every E4^a E6^b has constant term 1, so differences against the last
    // basis element span the kernel of a_0.
    const auto basis = series_of(monomial_basis(k, prec));
    std::vector<QSeries> out;
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
        out.push_back(basis[i] - basis.back());
    }
    return out;
}

std::optional<std::vector<Rational>> is_cusp_member(const QSeries& f, int k, std::size_t margin)
{
    if (k < 0 || k % 2 != 0) {
        throw DomainError("is_cusp_member: level-1 forms have even nonnegative weight, got " + std::to_string(k));
    }
    const auto basis = cusp_basis(k, f.prec());
    if (basis.empty()) {
        if (f.is_zero()) {
            return std::vector<Rational>{};
        }
        return std::nullopt;
    }
    if (f.prec() + 1 < basis.size() + margin) {
        throw PrecisionError("is_cusp_member: need at least " + std::to_string(basis.size() + margin)
                             + " coefficients, have " + std::to_string(f.prec() + 1));
    }
    std::vector<Rational> rhs(f.coeffs().begin(), f.coeffs().end());
    return solve_linear(coefficient_matrix(basis, f.prec() + 1), rhs);
}

namespace {

// Evaluates the polynomial with a symbol lookup, caching powers.
template <class Lookup>
QSeries evaluate_polynomial(const Polynomial& p, std::size_t prec, Lookup&& lookup)
{
    std::map<std::pair<std::string, unsigned>, QSeries> powers;
    auto power = [&](const std::string& sym, unsigned e) -> const QSeries& {
        for (unsigned i = 1; i <= e; ++i) {
            if (powers.count({sym, i}) == 0) {
                QSeries value = i == 1 ? lookup(sym) : powers.at({sym, i - 1}) * lookup(sym);
                powers.emplace(std::make_pair(sym, i), std::move(value));
            }
        }
        return powers.at({sym, e});
    };

    QSeries acc(prec);
    for (const auto& [mono, coeff] : p.terms()) {
        QSeries term = QSeries::constant(coeff, prec);
        for (const auto& [sym, e] : mono) {
            term = term * power(sym, e);
        }
        acc = acc + term;
    }
    return acc;
}

void require_generators(const Polynomial& p)
{
    for (const auto& [mono, coeff] : p.terms()) {
        for (const auto& [sym, e] : mono) {
            if (sym != "E2" && sym != "E4" && sym != "E6") {
                throw DomainError("generator polynomial may only use E2, E4, E6; found " + sym);
            }
        }
    }
}

// Homogeneous weight and max E2 degree; throws listing the monomials by
// weight otherwise.
std::pair<int, int> homogeneous_weight(const Polynomial& p)
{
    std::map<int, std::vector<std::string>> by_weight;
    int depth = 0;
    for (const auto& [mono, coeff] : p.terms()) {
        by_weight[monomial_weight(mono)].push_back(to_string(mono));
        depth = std::max(depth, static_cast<int>(e2_degree(mono)));
    }
    if (by_weight.size() > 1) {
        std::string msg = "polynomial is not weight-homogeneous:";
        for (const auto& [w, monos] : by_weight) {
            msg += " weight " + std::to_string(w) + " {";
            for (std::size_t i = 0; i < monos.size(); ++i) {
                msg += (i ? ", " : "") + monos[i];
            }
            msg += "}";
        }
        throw DomainError(msg);
    }
    return {by_weight.empty() ? 0 : by_weight.begin()->first, depth};
}

} // namespace

QSeries eval_generator_poly_ungraded(const Polynomial& p, std::size_t prec)
{
    require_generators(p);
    std::map<std::string, QSeries> gens;
    return evaluate_polynomial(p, prec, [&](const std::string& sym) -> QSeries {
        auto it = gens.find(sym);
        if (it == gens.end()) {
            it = gens.emplace(sym, eisenstein(symbol_weight(sym), prec).series).first;
        }
        return it->second;
    });
}

GradedSeries eval_generator_poly(const Polynomial& p, std::size_t prec)
{
    require_generators(p);
    const auto [weight, depth] = homogeneous_weight(p);
    return {eval_generator_poly_ungraded(p, prec), weight, depth};
}

FormCatalog::FormCatalog(std::size_t prec) : prec_(prec)
{
    for (int k : {2, 4, 6, 8, 10, 14}) {
        entries_.emplace("E" + std::to_string(k), eisenstein(k, prec));
    }
    for (int k : kDeltaWeights) {
        entries_.emplace("Delta" + std::to_string(k), cusp_delta(k, prec));
    }
}

const std::vector<std::string>& FormCatalog::names()
{
    static const std::vector<std::string> kNames = {"E2",      "E4",      "E6",      "E8",
                                                    "E10",     "E14",     "Delta12", "Delta16",
                                                    "Delta18", "Delta20", "Delta22", "Delta26"};
    return kNames;
}

bool FormCatalog::contains(const std::string& name) const
{
    return entries_.count(name) != 0;
}

const GradedSeries& FormCatalog::get(const std::string& name) const
{
    auto it = entries_.find(name);
    if (it == entries_.end()) {
        throw DomainError("unknown catalog form '" + name + "'");
    }
    return it->second;
}

GradedSeries FormCatalog::symbol_series(const std::string& sym) const
{
    if (auto it = entries_.find(sym); it != entries_.end()) {
        return it->second;
    }
    if (sym.rfind('E', 0) == 0) {
        return eisenstein(symbol_weight(sym), prec_);
    }
    return cusp_delta(symbol_weight(sym), prec_);
}

GradedSeries FormCatalog::evaluate(const Polynomial& p) const
{
    const auto [weight, depth] = homogeneous_weight(p);
    std::map<std::string, QSeries> cache;
    QSeries s = evaluate_polynomial(p, prec_, [&](const std::string& sym) -> QSeries {
        auto it = cache.find(sym);
        if (it == cache.end()) {
            it = cache.emplace(sym, symbol_series(sym).series).first;
        }
        return it->second;
    });
    return {std::move(s), weight, depth};
}

GradedSeries FormCatalog::resolve(const std::string& name_or_expr) const
{
    if (contains(name_or_expr)) {
        return get(name_or_expr);
    }
    return evaluate(parse_polynomial(name_or_expr));
}

} // namespace qmf
