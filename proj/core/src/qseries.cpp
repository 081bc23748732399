#include "qmf/qseries.hpp"

#include <algorithm>

namespace qmf {

QSeries::QSeries(std::size_t prec) : coeffs_(prec + 1, Rational(0)) {}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw DomainError("QSeries needs at least the constant coefficient");
    }
}

QSeries QSeries::constant(const Rational& c, std::size_t prec)
{
    QSeries out(prec);
    out.coeffs_[0] = c;
    return out;
}

QSeries QSeries::monomial(std::size_t j, const Rational& c, std::size_t prec)
{
    QSeries out(prec);
    if (j <= prec) {
        out.coeffs_[j] = c;
    }
    return out;
}

const Rational& QSeries::at(std::size_t m) const
{
    if (m > prec()) {
        throw PrecisionError("coefficient q^" + std::to_string(m) + " requested from a series known to q^"
                             + std::to_string(prec()));
    }
    return coeffs_[m];
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<std::size_t> QSeries::valuation() const
{
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        if (coeffs_[m] != 0) {
            return m;
        }
    }
    return std::nullopt;
}

bool QSeries::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

QSeries QSeries::truncated(std::size_t prec) const
{
    if (prec >= this->prec()) {
        return *this;
    }
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(prec) + 1));
}

QSeries operator+(const QSeries& f, const QSeries& g)
{
    const std::size_t p = std::min(f.prec(), g.prec());
    std::vector<Rational> c(p + 1);
    for (std::size_t m = 0; m <= p; ++m) {
        c[m] = f[m] + g[m];
    }
    return QSeries(std::move(c));
}

QSeries operator-(const QSeries& f, const QSeries& g)
{
    const std::size_t p = std::min(f.prec(), g.prec());
    std::vector<Rational> c(p + 1);
    for (std::size_t m = 0; m <= p; ++m) {
        c[m] = f[m] - g[m];
    }
    return QSeries(std::move(c));
}

QSeries operator-(const QSeries& f)
{
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : c) {
        x = -x;
    }
    return QSeries(std::move(c));
}

QSeries operator*(const Rational& k, const QSeries& f)
{
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : c) {
        x *= k;
    }
    return QSeries(std::move(c));
}

QSeries mul_rational(const QSeries& f, const QSeries& g)
{
    const std::size_t p = std::min(f.prec(), g.prec());
    std::vector<Rational> c(p + 1, Rational(0));
    for (std::size_t i = 0; i <= p; ++i) {
        if (f[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= p; ++j) {
            c[i + j] += f[i] * g[j];
        }
    }
    return QSeries(std::move(c));
}

namespace {

Integer common_denominator(const QSeries& f, std::size_t p)
{
    Integer l = 1;
    for (std::size_t m = 0; m <= p; ++m) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f[m].get_den().get_mpz_t());
    }
    return l;
}

std::vector<Integer> scaled_numerators(const QSeries& f, std::size_t p, const Integer& l)
{
    std::vector<Integer> out(p + 1);
    for (std::size_t m = 0; m <= p; ++m) {
        out[m] = f[m].get_num() * (l / f[m].get_den());
    }
    return out;
}

} // namespace

QSeries operator*(const QSeries& f, const QSeries& g)
{
    const std::size_t p = std::min(f.prec(), g.prec());
    const Integer lf = common_denominator(f, p);
    const Integer lg = common_denominator(g, p);
    const auto a = scaled_numerators(f, p, lf);
    const auto b = scaled_numerators(g, p, lg);

    std::vector<Integer> acc(p + 1, Integer(0));
    for (std::size_t i = 0; i <= p; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= p; ++j) {
            mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    const Integer den = lf * lg;
    std::vector<Rational> c(p + 1);
    for (std::size_t m = 0; m <= p; ++m) {
        c[m] = make_rational(acc[m], den);
    }
    return QSeries(std::move(c));
}

QSeries add(const QSeries& f, const QSeries& g) { return f + g; }

QSeries mul(const QSeries& f, const QSeries& g) { return f * g; }

QSeries derivative_D(const QSeries& f, unsigned r)
{
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (c[m] != 0) {
            c[m] *= Rational(integer_pow(Integer(static_cast<unsigned long>(m)), r));
        }
    }
    return QSeries(std::move(c));
}

QSeries derivative_D(const QSeries& f) { return derivative_D(f, 1); }

std::pair<QSeries, Rational> normalize(const QSeries& f)
{
    const auto v = f.valuation();
    if (!v) {
        throw DomainError("normalize: series is zero to precision " + std::to_string(f.prec()));
    }
    const Rational c = f[*v];
    return {Rational(1) / c * f, c};
}

std::optional<std::size_t> first_difference(const QSeries& f, const QSeries& g)
{
    const std::size_t p = std::min(f.prec(), g.prec());
    for (std::size_t m = 0; m <= p; ++m) {
        if (f[m] != g[m]) {
            return m;
        }
    }
    return std::nullopt;
}

bool agree_on_common_window(const QSeries& f, const QSeries& g)
{
    return !first_difference(f, g).has_value();
}

namespace {

std::optional<int> add_depths(std::optional<int> a, std::optional<int> b)
{
    if (a && b) {
        return *a + *b;
    }
    return std::nullopt;
}

void require_same_weight(const GradedSeries& f, const GradedSeries& g, const char* op)
{
    if (f.weight != g.weight) {
        throw DomainError(std::string(op) + " of graded series with weights " + std::to_string(f.weight) + " and "
                          + std::to_string(g.weight));
    }
}

std::optional<int> max_depth(std::optional<int> a, std::optional<int> b)
{
    if (a && b) {
        return std::max(*a, *b);
    }
    return std::nullopt;
}

} // namespace

GradedSeries operator+(const GradedSeries& f, const GradedSeries& g)
{
    require_same_weight(f, g, "sum");
    return {f.series + g.series, f.weight, max_depth(f.depth, g.depth)};
}

GradedSeries operator-(const GradedSeries& f, const GradedSeries& g)
{
    require_same_weight(f, g, "difference");
    return {f.series - g.series, f.weight, max_depth(f.depth, g.depth)};
}

GradedSeries operator*(const Rational& c, const GradedSeries& f)
{
    return {c * f.series, f.weight, f.depth};
}

GradedSeries operator*(const GradedSeries& f, const GradedSeries& g)
{
    return {f.series * g.series, f.weight + g.weight, add_depths(f.depth, g.depth)};
}

GradedSeries derivative_D(const GradedSeries& f, unsigned r)
{
    std::optional<int> depth;
    if (f.depth) {
        depth = *f.depth + static_cast<int>(r);
    }
    return {derivative_D(f.series, r), f.weight + 2 * static_cast<int>(r), depth};
}

nlohmann::json to_json(const QSeries& f)
{
    auto coeffs = nlohmann::json::array();
    for (const auto& c : f.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return {{"coeffs", std::move(coeffs)}, {"prec", f.prec()}};
}

nlohmann::json to_json(const GradedSeries& f)
{
    auto j = to_json(f.series);
    j["weight"] = f.weight;
    if (f.depth) {
        j["depth"] = *f.depth;
    }
    return j;
}

QSeries qseries_from_json(const nlohmann::json& j)
{
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    QSeries out(std::move(coeffs));
    if (out.prec() != j.at("prec").get<std::size_t>()) {
        throw DomainError("QSeries JSON: prec does not match coefficient count");
    }
    return out;
}

} // namespace qmf
