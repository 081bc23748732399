#include "qmf/nearly.hpp"

#include <algorithm>

#include "qmf/forms.hpp"

namespace qmf {

YPolyForm::YPolyForm(std::vector<QSeries> components, int weight)
    : components_(std::move(components)), weight_(weight)
{
    if (components_.empty()) {
        throw DomainError("YPolyForm needs at least the Y^0 component");
    }
    while (components_.size() > 1 && components_.back().is_zero()) {
        components_.pop_back();
    }
}

YPolyForm::YPolyForm(const GradedSeries& f) : components_{f.series}, weight_(f.weight) {}

QSeries YPolyForm::component(std::size_t r) const
{
    if (r < components_.size()) {
        return components_[r];
    }
    return QSeries(prec());
}

std::size_t YPolyForm::prec() const
{
    std::size_t p = components_.front().prec();
    for (const auto& c : components_) {
        p = std::min(p, c.prec());
    }
    return p;
}

bool YPolyForm::is_zero() const
{
    return std::all_of(components_.begin(), components_.end(), [](const QSeries& c) { return c.is_zero(); });
}

std::optional<std::string> YPolyForm::depth_warning() const
{
    if (!is_zero() && 2 * depth() > weight_) {
        return "depth " + std::to_string(depth()) + " exceeds weight/2 for weight " + std::to_string(weight_);
    }
    return std::nullopt;
}

namespace {

void require_same_weight(const YPolyForm& f, const YPolyForm& g)
{
    if (f.weight() != g.weight()) {
        throw DomainError("sum of Y-polynomial forms with weights " + std::to_string(f.weight()) + " and "
                          + std::to_string(g.weight()));
    }
}

} // namespace

YPolyForm operator+(const YPolyForm& f, const YPolyForm& g)
{
    require_same_weight(f, g);
    const std::size_t n = std::max(f.components().size(), g.components().size());
    const std::size_t p = std::min(f.prec(), g.prec());
    std::vector<QSeries> c;
    for (std::size_t r = 0; r < n; ++r) {
        c.push_back((f.component(r) + g.component(r)).truncated(p));
    }
    return YPolyForm(std::move(c), f.weight());
}

YPolyForm operator-(const YPolyForm& f, const YPolyForm& g)
{
    return f + Rational(-1) * g;
}

YPolyForm operator*(const Rational& k, const YPolyForm& f)
{
    std::vector<QSeries> c;
    for (const auto& x : f.components()) {
        c.push_back(k * x);
    }
    return YPolyForm(std::move(c), f.weight());
}

YPolyForm operator*(const YPolyForm& f, const YPolyForm& g)
{
    const std::size_t p = std::min(f.prec(), g.prec());
    const std::size_t n = f.components().size() + g.components().size() - 1;
    std::vector<QSeries> c(n, QSeries(p));
    for (std::size_t i = 0; i < f.components().size(); ++i) {
        for (std::size_t j = 0; j < g.components().size(); ++j) {
            c[i + j] = c[i + j] + f.components()[i] * g.components()[j];
        }
    }
    return YPolyForm(std::move(c), f.weight() + g.weight());
}

namespace {

// D applied componentwise plus the Y-shift contributions, with an extra
// -(k/4) Y F term scaled by `y_shift` (0 for plain D, 1 for delta_k).
YPolyForm raise(const YPolyForm& f, const Rational& y_shift)
{
    const std::size_t n = f.components().size();
    const std::size_t p = f.prec();
    std::vector<QSeries> c(n + 1, QSeries(p));
    const Rational k = f.weight();
    for (std::size_t r = 0; r < n; ++r) {
        const QSeries& fr = f.components()[r];
        c[r] = c[r] + derivative_D(fr).truncated(p);
        const Rational shift = ratio(static_cast<long>(r), 4) - y_shift * k / 4;
        if (shift != 0) {
            c[r + 1] = c[r + 1] + (shift * fr).truncated(p);
        }
    }
    return YPolyForm(std::move(c), f.weight() + 2);
}

} // namespace

YPolyForm derivative_D(const YPolyForm& f)
{
    return raise(f, 0);
}

YPolyForm maass_shimura(const YPolyForm& f)
{
    return raise(f, 1);
}

YPolyForm e2_star(std::size_t prec)
{
    return YPolyForm({eisenstein(2, prec).series, QSeries::constant(-3, prec)}, 2);
}

GradedSeries constant_term(const YPolyForm& f)
{
    return {f.components().front(), f.weight(), std::nullopt};
}

std::optional<std::vector<DecompositionPart>> quasimodular_decompose(const GradedSeries& f, int p)
{
    const int k = f.weight;
    if (p < 0 || 2 * p >= k) {
        throw DomainError("quasimodular_decompose: need 0 <= depth < weight/2, got depth " + std::to_string(p)
                          + " at weight " + std::to_string(k));
    }
    if (k % 2 != 0) {
        throw DomainError("quasimodular_decompose: odd weight " + std::to_string(k));
    }

    struct Column {
        int r;
        std::size_t index;
        QSeries series;
    };
    std::vector<Column> columns;
    std::vector<std::vector<GradedSeries>> bases;
    for (int r = 0; r <= p; ++r) {
        bases.push_back(monomial_basis(k - 2 * r, f.prec()));
        for (std::size_t i = 0; i < bases.back().size(); ++i) {
            columns.push_back({r, i, derivative_D(bases.back()[i].series, static_cast<unsigned>(r))});
        }
    }

    const std::size_t window = columns.size() + kDefaultMembershipMargin;
    if (f.prec() + 1 < window) {
        throw PrecisionError("quasimodular_decompose: need " + std::to_string(window) + " coefficients, have "
                             + std::to_string(f.prec() + 1));
    }

    std::vector<DecompositionPart> parts;
    for (int r = 0; r <= p; ++r) {
        const auto& basis = bases[static_cast<std::size_t>(r)];
        parts.push_back({r, GradedSeries{QSeries(f.prec()), k - 2 * r, 0},
                         std::vector<Rational>(basis.size(), Rational(0))});
    }

    if (!columns.empty()) {
        RationalMatrix a(window, std::vector<Rational>(columns.size()));
        std::vector<Rational> rhs(window);
        for (std::size_t m = 0; m < window; ++m) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                a[m][c] = columns[c].series[m];
            }
            rhs[m] = f.series[m];
        }
        const auto x = solve_linear(a, rhs);
        if (!x) {
            return std::nullopt;
        }
        for (std::size_t c = 0; c < columns.size(); ++c) {
            auto& part = parts[static_cast<std::size_t>(columns[c].r)];
            part.coordinates[columns[c].index] = (*x)[c];
        }
        for (auto& part : parts) {
            const auto& basis = bases[static_cast<std::size_t>(part.r)];
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (part.coordinates[i] != 0) {
                    part.form.series = part.form.series + part.coordinates[i] * basis[i].series;
                }
            }
        }
    }

    if (!agree_on_common_window(reassemble(parts), f.series)) {
        return std::nullopt;
    }
    return parts;
}

QSeries reassemble(const std::vector<DecompositionPart>& parts)
{
    if (parts.empty()) {
        throw DomainError("reassemble: no parts");
    }
    QSeries acc(parts.front().form.prec());
    for (const auto& part : parts) {
        acc = acc + derivative_D(part.form.series, static_cast<unsigned>(part.r));
    }
    return acc;
}

nlohmann::json to_json(const YPolyForm& f)
{
    auto comps = nlohmann::json::array();
    for (const auto& c : f.components()) {
        comps.push_back(to_json(c));
    }
    return {{"components", std::move(comps)}, {"weight", f.weight()}, {"depth", f.depth()}, {"scaling", kYScaling}};
}

} // namespace qmf
