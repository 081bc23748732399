#include "qmf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "qmf/brackets.hpp"
#include "qmf/nearly.hpp"

namespace qmf {

std::size_t VerificationReport::passed() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

std::size_t VerificationReport::failed() const
{
    return checks.size() - passed();
}

void VerificationReport::add(std::string id, std::string anchor, bool pass, nlohmann::json witness)
{
    if (!pass && witness.is_null()) {
        witness = {{"note", "no witness recorded"}};
    }
    checks.push_back({std::move(id), std::move(anchor), pass, std::move(witness)});
}

void VerificationReport::append(const VerificationReport& other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    runtime_seconds += other.runtime_seconds;
}

nlohmann::json to_json(const VerificationReport& r, bool include_runtime)
{
    auto checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"pass", c.pass}, {"witness", c.witness}});
    }
    nlohmann::json j = {{"suite", r.suite}, {"checks", std::move(checks)}, {"passed", r.passed()}, {"failed", r.failed()}};
    if (include_runtime) {
        j["runtime_seconds"] = r.runtime_seconds;
    }
    return j;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

nlohmann::json difference_witness(const QSeries& lhs, const QSeries& rhs)
{
    const auto m = first_difference(lhs, rhs);
    if (!m) {
        return {{"compared_to", std::min(lhs.prec(), rhs.prec())}};
    }
    return {{"exponent", *m}, {"lhs", to_string(lhs[*m])}, {"rhs", to_string(rhs[*m])}};
}

void add_series_identity(VerificationReport& report, const std::string& id, const std::string& anchor,
                         const QSeries& lhs, const QSeries& rhs)
{
    const bool ok = agree_on_common_window(lhs, rhs);
    report.add(id, anchor, ok, difference_witness(lhs, rhs));
}

nlohmann::json eigen_witness(const EigenReport& r)
{
    return to_json(r);
}

struct ModularIdentity {
    const char* f;
    const char* g;
    const char* target;
    const char* anchor;
};

constexpr ModularIdentity kModularIdentities[] = {
    {"E4", "E4", "E8", "E4^2 = E8"},
    {"E4", "E6", "E10", "E4 E6 = E10"},
    {"E6", "E8", "E14", "E6 E8 = E14"},
    {"E4", "E10", "E14", "E4 E10 = E14"},
    {"E4", "Delta12", "Delta16", "E4 Delta12 = Delta16"},
    {"E6", "Delta12", "Delta18", "E6 Delta12 = Delta18"},
    {"E4", "Delta16", "Delta20", "E4 Delta16 = Delta20"},
    {"E8", "Delta12", "Delta20", "E8 Delta12 = Delta20"},
    {"E4", "Delta18", "Delta22", "E4 Delta18 = Delta22"},
    {"E6", "Delta16", "Delta22", "E6 Delta16 = Delta22"},
    {"E10", "Delta12", "Delta22", "E10 Delta12 = Delta22"},
    {"E4", "Delta22", "Delta26", "E4 Delta22 = Delta26"},
    {"E6", "Delta20", "Delta26", "E6 Delta20 = Delta26"},
    {"E8", "Delta18", "Delta26", "E8 Delta18 = Delta26"},
    {"E10", "Delta16", "Delta26", "E10 Delta16 = Delta26"},
    {"E14", "Delta12", "Delta26", "E14 Delta12 = Delta26"},
};

Rational power_of_two(std::int64_t e)
{
    return rational_pow(Rational(2), e);
}

// a_4 - (a_2^2 - 2^{w-1}) and a_6 - a_2 a_3 after dividing by a_1.
RelationResiduals relation_residuals(const QSeries& f, int weight)
{
    const Rational a1 = f.at(1);
    if (a1 == 0) {
        throw DomainError("relation residuals need a nonzero q-coefficient");
    }
    auto a = [&](std::size_t m) { return f.at(m) / a1; };
    return {a(4) - (a(2) * a(2) - power_of_two(weight - 1)), a(6) - a(2) * a(3)};
}

} // namespace

std::string label(const FormRef& f)
{
    if (f.r == 0) {
        return f.name;
    }
    if (f.r == 1) {
        return "D(" + f.name + ")";
    }
    return "D^" + std::to_string(f.r) + "(" + f.name + ")";
}

namespace {

std::string product_label(const ProductCandidate& c)
{
    return label(c.f) + "*" + label(c.g);
}

bool same_product(const ProductCandidate& a, const ProductCandidate& b)
{
    return (a.f == b.f && a.g == b.g) || (a.f == b.g && a.g == b.f);
}

SearchOutcome run_candidate(const std::string& lbl, const GradedSeries& form, std::uint64_t bound,
                            std::size_t window)
{
    SearchOutcome out;
    out.label = lbl;
    out.weight = form.weight;
    if (form.series.is_zero()) {
        out.is_zero = true;
        return out;
    }
    try {
        out.report = eigenform_test(form, bound, window);
    } catch (const DomainError& e) {
        out.error = e.what();
    }
    return out;
}

// D^r of catalog forms, computed on demand.
class DerivativeCache {
public:
    explicit DerivativeCache(const FormCatalog& catalog) : catalog_(catalog) {}

    const GradedSeries& get(const FormRef& f)
    {
        auto key = std::make_pair(f.name, f.r);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, derivative_D(catalog_.get(f.name), f.r)).first;
        }
        return it->second;
    }

private:
    const FormCatalog& catalog_;
    std::map<std::pair<std::string, unsigned>, GradedSeries> cache_;
};

} // namespace

std::vector<std::size_t> ProductSearchResult::hit_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i].is_hit()) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> BracketSearchResult::hit_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i].is_hit()) {
            out.push_back(i);
        }
    }
    return out;
}

ProductSearchResult product_search(int max_weight, unsigned max_deriv, std::uint64_t bound, std::size_t prec,
                                   std::size_t window)
{
    if (max_weight > 26) {
        throw DomainError("product_search: the catalog covers weights <= 26");
    }
    if (max_deriv > 3) {
        throw DomainError("product_search: derivative exponents are limited to 3");
    }
    const FormCatalog catalog(prec);
    DerivativeCache derivs(catalog);

    std::vector<FormRef> items;
    for (const auto& name : FormCatalog::names()) {
        for (unsigned r = 0; r <= max_deriv; ++r) {
            items.push_back({name, r});
        }
    }

    ProductSearchResult result;
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = i; j < items.size(); ++j) {
            const auto& a = derivs.get(items[i]);
            const auto& b = derivs.get(items[j]);
            if (a.weight + b.weight > max_weight) {
                continue;
            }
            ProductCandidate c{items[i], items[j]};
            result.outcomes.push_back(run_candidate(product_label(c), a * b, bound, window));
            result.candidates.push_back(std::move(c));
        }
    }
    return result;
}

std::vector<ProductCandidate> expected_eigen_products()
{
    std::vector<ProductCandidate> out;
    for (const auto& id : kModularIdentities) {
        out.push_back({{id.f, 0}, {id.g, 0}});
    }
    out.push_back({{"E4", 1}, {"E4", 0}});
    out.push_back({{"E2", 0}, {"Delta12", 0}});
    return out;
}

BracketSearchResult bracket_search(int max_weight, unsigned max_m, std::uint64_t bound, std::size_t prec,
                                   std::size_t window)
{
    if (max_weight > 26) {
        throw DomainError("bracket_search: the catalog covers weights <= 26");
    }
    if (max_m > 4) {
        throw DomainError("bracket_search: bracket order is limited to 4");
    }
    const FormCatalog catalog(prec);
    std::vector<std::string> names;
    for (const auto& n : FormCatalog::names()) {
        if (n != "E2") {
            names.push_back(n);
        }
    }

    BracketSearchResult result;
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i; j < names.size(); ++j) {
            const auto& g = catalog.get(names[i]);
            const auto& h = catalog.get(names[j]);
            for (unsigned m = 0; m <= max_m; ++m) {
                const int w = g.weight + h.weight + 2 * static_cast<int>(m);
                if (w > max_weight) {
                    break;
                }
                const auto bracket = rankin_cohen(g, h, m);
                const std::string lbl = "[" + names[i] + "," + names[j] + "]_" + std::to_string(m);
                auto outcome = run_candidate(lbl, bracket, bound, window);
                std::optional<std::vector<Rational>> coords;
                if (outcome.is_hit()) {
                    coords = is_modular_member(bracket.series, w);
                }
                result.candidates.push_back({names[i], names[j], m});
                result.outcomes.push_back(std::move(outcome));
                result.coordinates.push_back(std::move(coords));
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Diophantine scans

DiophantineEquation parse_equation(const std::string& id)
{
    if (id == "eq3") {
        return DiophantineEquation::eq3;
    }
    if (id == "eq4") {
        return DiophantineEquation::eq4;
    }
    if (id == "eq7") {
        return DiophantineEquation::eq7;
    }
    if (id == "quadratic") {
        return DiophantineEquation::quadratic;
    }
    throw DomainError("unknown equation id '" + id + "' (expected eq3, eq4, eq7 or quadratic)");
}

std::string equation_id(DiophantineEquation eq)
{
    switch (eq) {
    case DiophantineEquation::eq3:
        return "eq3";
    case DiophantineEquation::eq4:
        return "eq4";
    case DiophantineEquation::eq7:
        return "eq7";
    case DiophantineEquation::quadratic:
        return "quadratic";
    }
    return "?";
}

namespace {

Rational pow_int(long base, std::int64_t e)
{
    return rational_pow(Rational(base), e);
}

Rational sig(int k, std::uint64_t n)
{
    return Rational(sigma(static_cast<unsigned>(k - 1), n));
}

} // namespace

Rational eq3_residual(int k, int s)
{
    const Rational lhs = pow_int(3, s) * (1 + pow_int(3, k - 1)) + pow_int(2, s) + 28;
    const Rational rhs = pow_int(2, k + s - 4) * (pow_int(2, s) - 8);
    return lhs - rhs;
}

Rational eq4_residual(int k, int s)
{
    const Rational s2 = sig(k, 2);
    return pow_int(5, s) * sig(k, 5) + pow_int(3, s + 1) * sig(k, 3) + pow_int(2, 2 * s + 1) * s2 * s2
           + 7 * pow_int(2, s + 2) * s2 - 3 * pow_int(2, k + 2 * s - 1) + 78;
}

Rational eq7_residual(int r)
{
    return pow_int(2, 2 * r - 3) + 4 * pow_int(3, r) + 21 * pow_int(2, r) - 212;
}

Integer quadratic_b(int k, int r)
{
    const auto ur = static_cast<unsigned long>(r);
    const auto uk = static_cast<unsigned long>(k);
    return 4 * integer_pow(3, ur) + 3 * integer_pow(2, ur) * (integer_pow(2, uk - 1) - 1) + 1
           + integer_pow(3, uk - 1);
}

Integer quadratic_discriminant(int k, int r)
{
    const Integer b = quadratic_b(k, r);
    return b * b + integer_pow(2, static_cast<unsigned long>(2 * r + 3)) * (integer_pow(2, static_cast<unsigned long>(k)) - 1);
}

Rational quadratic_residual(int k, int r)
{
    const Rational x = Rational(2 * k) / bernoulli(k);
    const Rational c = pow_int(2, 2 * r + 1) * (1 - pow_int(2, k));
    return x * x + Rational(quadratic_b(k, r)) * x + c;
}

DiophantineScan diophantine_check(DiophantineEquation eq, int k_min, int k_max, int e_min, int e_max)
{
    if (eq != DiophantineEquation::eq7 && (k_min < 2 || k_min % 2 != 0)) {
        throw DomainError("diophantine_check: k range must start at an even k >= 2");
    }
    DiophantineScan scan{eq, k_min, k_max, e_min, e_max, 0, {}, {}};
    if (eq == DiophantineEquation::eq7) {
        for (int r = e_min; r <= e_max; ++r) {
            ++scan.evaluated;
            if (eq7_residual(r) == 0) {
                scan.solutions.push_back({4, r});
            }
        }
        return scan;
    }
    for (int k = k_min; k <= k_max; k += 2) {
        for (int e = e_min; e <= e_max; ++e) {
            ++scan.evaluated;
            switch (eq) {
            case DiophantineEquation::eq3:
                if (eq3_residual(k, e) == 0) {
                    scan.solutions.push_back({k, e});
                }
                break;
            case DiophantineEquation::eq4:
                if (eq4_residual(k, e) == 0) {
                    scan.solutions.push_back({k, e});
                }
                break;
            case DiophantineEquation::quadratic:
                if (is_perfect_square(quadratic_discriminant(k, e))) {
                    scan.perfect_squares.push_back({k, e});
                }
                if (quadratic_residual(k, e) == 0) {
                    scan.solutions.push_back({k, e});
                }
                break;
            case DiophantineEquation::eq7:
                break;
            }
        }
    }
    return scan;
}

RelationResiduals e2_times_derivative_residuals(int k, int s)
{
    constexpr std::size_t prec = 8;
    const QSeries f = eisenstein(2, prec).series * derivative_D(eisenstein(k, prec).series, static_cast<unsigned>(s));
    return relation_residuals(f, 2 + k + 2 * s);
}

RelationResiduals derivative_e2_times_eisenstein_residuals(int k, int r)
{
    constexpr std::size_t prec = 8;
    const QSeries f = derivative_D(eisenstein(2, prec).series, static_cast<unsigned>(r)) * eisenstein(k, prec).series;
    return relation_residuals(f, 2 + k + 2 * r);
}

bool revalidate_violation(const QSeries& f, int weight, const EigenViolation& v)
{
    // Direct divisor-sum evaluation, scanning d = 1..n.
    auto hecke_coeff = [&](std::size_t m) {
        Rational acc = 0;
        for (std::uint64_t d = 1; d <= v.n; ++d) {
            if (v.n % d != 0 || m % d != 0) {
                continue;
            }
            acc += rational_pow(Rational(static_cast<unsigned long>(d)), weight - 1) * f.at(m * v.n / (d * d));
        }
        return acc;
    };
    const auto lead = f.valuation();
    if (!lead || v.component != 0) {
        return false;
    }
    const Rational lambda = hecke_coeff(*lead) / f[*lead];
    const Rational actual = hecke_coeff(v.exponent);
    const Rational expected = lambda * f.at(v.exponent);
    return actual == v.actual && expected == v.expected && actual != expected;
}

// ---------------------------------------------------------------------------
// Suites

VerificationReport verify_identity_suite(std::size_t prec)
{
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "identities";
    const FormCatalog cat(prec);
    auto s = [&](const char* name) -> const QSeries& { return cat.get(name).series; };

    for (const auto& id : kModularIdentities) {
        add_series_identity(report, std::string("product:") + id.f + "*" + id.g, id.anchor, s(id.f) * s(id.g),
                            s(id.target));
    }

    const QSeries de4 = derivative_D(s("E4"));
    add_series_identity(report, "product:D(E4)*E4", "(D E4) E4 = 1/2 D E8", de4 * s("E4"),
                        ratio(1, 2) * derivative_D(s("E8")));

    add_series_identity(report, "ramanujan:DE2", "D E2 = (E2^2 - E4)/12", derivative_D(s("E2")),
                        eval_generator_poly(parse_polynomial("(E2^2 - E4)/12"), prec).series);
    add_series_identity(report, "ramanujan:DE4", "D E4 = (E2 E4 - E6)/3", de4,
                        eval_generator_poly(parse_polynomial("(E2*E4 - E6)/3"), prec).series);
    add_series_identity(report, "ramanujan:DE6", "D E6 = (E2 E6 - E4^2)/2", derivative_D(s("E6")),
                        eval_generator_poly(parse_polynomial("(E2*E6 - E4^2)/2"), prec).series);
    add_series_identity(report, "DDelta12=E2*Delta12", "D Delta12 = E2 Delta12", derivative_D(s("Delta12")),
                        s("E2") * s("Delta12"));

    {
        const YPolyForm delta12(cat.get("Delta12"));
        const YPolyForm lhs = maass_shimura(delta12);
        const YPolyForm rhs = e2_star(prec) * delta12;
        nlohmann::json w = {{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
        report.add("maass-shimura:delta12", "delta_12(Delta12) = E2* Delta12", lhs == rhs,
                   lhs == rhs ? nlohmann::json{{"depth", lhs.depth()}} : w);
    }

    {
        const auto coords = cusp_delta_coordinates(12);
        const bool ok = coords == std::vector<Rational>{ratio(1, 1728), ratio(-1, 1728)};
        report.add("delta12:coordinates", "Delta12 = (E4^3 - E6^2)/1728", ok,
                   {{"coordinates", {to_string(coords[0]), to_string(coords[1])}}});
        const std::vector<Rational> tau = {1, -24, 252, -1472};
        bool tau_ok = true;
        for (std::size_t n = 1; n <= 4; ++n) {
            tau_ok = tau_ok && s("Delta12")[n] == tau[n - 1];
        }
        report.add("delta12:coefficients", "a_2 = -24, a_3 = 252, a_4 = -1472 for Delta12", tau_ok,
                   {{"a", {to_string(s("Delta12")[1]), to_string(s("Delta12")[2]), to_string(s("Delta12")[3]),
                           to_string(s("Delta12")[4])}}});
    }

    // delta_k f - (k/12) E2* f is holomorphic and modular of weight k + 2.
    for (const auto& name : FormCatalog::names()) {
        if (name == "E2") {
            continue;
        }
        const auto& f = cat.get(name);
        const YPolyForm fy(f);
        const YPolyForm g = maass_shimura(fy) - ratio(f.weight, 12) * (e2_star(prec) * fy);
        const auto coords = g.depth() == 0 ? is_modular_member(g.components()[0], f.weight + 2) : std::nullopt;
        nlohmann::json w = {{"depth", g.depth()}, {"member", coords.has_value()}};
        report.add("serre-derivative:" + name, "delta_k f - (k/12) E2* f = D f - (k/12) E2 f in M_{k+2}",
                   g.depth() == 0 && coords.has_value(), w);
    }

    auto expect_eigen = [&](const std::string& id, const std::string& anchor, const auto& form, bool want) {
        const EigenReport r = eigenform_test(form);
        report.add(id, anchor, r.is_eigen_up_to_bound == want, eigen_witness(r));
        return r;
    };

    const GradedSeries e2 = cat.get("E2");
    {
        const auto r = expect_eigen("eigen:E2", "E2 is an eigenform", e2, true);
        bool sig_ok = r.is_eigen_up_to_bound;
        for (const auto& [n, lambda] : r.eigenvalues) {
            sig_ok = sig_ok && lambda == Rational(sigma(1, n));
        }
        report.add("eigenvalues:E2", "lambda_n(E2) = sigma_1(n)", sig_ok, eigen_witness(r));
    }
    expect_eigen("eigen:E2*Delta12", "E2 Delta12 is an eigenform", e2 * cat.get("Delta12"), true);
    expect_eigen("eigen:E2*", "E2* is an eigenform", e2_star(prec), true);
    expect_eigen("eigen:delta12(Delta12)", "delta_12(Delta12) is an eigenform",
                 maass_shimura(YPolyForm(cat.get("Delta12"))), true);
    expect_eigen("eigen:E2^2", "E2^2 is not an eigenform", e2 * e2, false);

    for (int k : {4, 6, 8, 10, 14}) {
        const std::string name = "E" + std::to_string(k);
        const GradedSeries prod = e2 * cat.get(name);
        const EigenReport r = eigenform_test(prod);
        const auto res = relation_residuals(prod.series, prod.weight);
        nlohmann::json w = eigen_witness(r);
        w["a4_relation_residual"] = to_string(res.a4);
        w["a6_relation_residual"] = to_string(res.a6);
        report.add("eigen:E2*" + name, "E2 E_k is not an eigenform (k = " + std::to_string(k) + ")",
                   !r.is_eigen_up_to_bound && r.first_violation.has_value() && res.a4 != 0, w);
    }

    report.runtime_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_product_suite(std::size_t prec)
{
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "products";

    const auto result = product_search(26, 1, kDefaultHeckeBound, prec);
    const auto expected = expected_eigen_products();
    const auto hits = result.hit_indices();

    for (const auto& e : expected) {
        auto it = std::find_if(hits.begin(), hits.end(),
                               [&](std::size_t i) { return same_product(result.candidates[i], e); });
        nlohmann::json w = {{"candidate", product_label(e)}};
        if (it != hits.end()) {
            w["eigenvalues"] = eigen_witness(*result.outcomes[*it].report)["eigenvalues"];
        }
        report.add("found:" + product_label(e), product_label(e) + " is an eigenform", it != hits.end(), w);
    }

    nlohmann::json unexpected = nlohmann::json::array();
    for (auto i : hits) {
        const bool known = std::any_of(expected.begin(), expected.end(),
                                       [&](const auto& e) { return same_product(result.candidates[i], e); });
        if (!known) {
            unexpected.push_back(result.outcomes[i].label);
        }
    }
    report.add("no-unexpected-hits", "no other product of catalog eigenforms is an eigenform", unexpected.empty(),
               {{"unexpected", unexpected}, {"hits", hits.size()}, {"candidates", result.candidates.size()}});

    nlohmann::json errors = nlohmann::json::array();
    for (const auto& o : result.outcomes) {
        if (!o.error.empty()) {
            errors.push_back({{"candidate", o.label}, {"error", o.error}});
        }
    }
    report.add("no-precision-errors", "every candidate was decided at the working precision", errors.empty(),
               {{"errors", errors}});

    // Each non-hit carries a violation that recomputes from the raw product.
    {
        const FormCatalog cat(prec);
        DerivativeCache derivs(cat);
        nlohmann::json bad = nlohmann::json::array();
        std::size_t checked = 0;
        for (std::size_t i = 0; i < result.candidates.size(); ++i) {
            const auto& o = result.outcomes[i];
            if (!o.report || o.report->is_eigen_up_to_bound) {
                continue;
            }
            const auto prod = derivs.get(result.candidates[i].f) * derivs.get(result.candidates[i].g);
            ++checked;
            if (!revalidate_violation(prod.series, prod.weight, *o.report->first_violation)) {
                bad.push_back(o.label);
            }
        }
        report.add("witnesses-revalidate", "every failing candidate's violation recomputes from the raw series",
                   bad.empty(), {{"checked", checked}, {"mismatched", bad}});
    }

    {
        auto it = std::find_if(result.candidates.begin(), result.candidates.end(), [](const ProductCandidate& c) {
            return same_product(c, {{"E2", 0}, {"E4", 1}});
        });
        const auto& o = result.outcomes[static_cast<std::size_t>(it - result.candidates.begin())];
        report.add("not-found:E2*D(E4)", "E2 (D E4) is not an eigenform", o.report && !o.is_hit(),
                   o.report ? eigen_witness(*o.report) : nlohmann::json{{"error", o.error}});
    }

    report.runtime_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_bracket_suite(std::size_t prec)
{
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "brackets";
    const FormCatalog cat(prec);

    std::vector<std::string> names;
    for (const auto& n : FormCatalog::names()) {
        if (n != "E2") {
            names.push_back(n);
        }
    }

    nlohmann::json product_fail = nlohmann::json::array();
    nlohmann::json symmetry_fail = nlohmann::json::array();
    nlohmann::json cusp_fail = nlohmann::json::array();
    nlohmann::json member_fail = nlohmann::json::array();
    std::size_t pairs = 0;
    for (const auto& gn : names) {
        for (const auto& hn : names) {
            const auto& g = cat.get(gn);
            const auto& h = cat.get(hn);
            if (!agree_on_common_window(rankin_cohen(g, h, 0).series, g.series * h.series)) {
                product_fail.push_back(gn + "," + hn);
            }
            for (unsigned m = 0; m <= 4; ++m) {
                const auto gh = rankin_cohen(g, h, m);
                const auto hg = rankin_cohen(h, g, m);
                const Rational sign = m % 2 == 0 ? 1 : -1;
                if (!agree_on_common_window(gh.series, sign * hg.series)) {
                    symmetry_fail.push_back({{"g", gn}, {"h", hn}, {"m", m}});
                }
                if (m >= 1 && gh.series[0] != 0) {
                    cusp_fail.push_back({{"g", gn}, {"h", hn}, {"m", m}, {"a0", to_string(gh.series[0])}});
                }
                if (gh.weight <= 26) {
                    ++pairs;
                    const bool member = m >= 1 ? is_cusp_member(gh.series, gh.weight).has_value()
                                               : is_modular_member(gh.series, gh.weight).has_value();
                    if (!member) {
                        member_fail.push_back({{"g", gn}, {"h", hn}, {"m", m}});
                    }
                }
            }
        }
    }
    report.add("bracket:m0-product", "[g,h]_0 = g h", product_fail.empty(), {{"failures", product_fail}});
    report.add("bracket:symmetry", "[g,h]_m = (-1)^m [h,g]_m for m <= 4", symmetry_fail.empty(),
               {{"failures", symmetry_fail}});
    report.add("bracket:constant-term", "[g,h]_m has zero constant term for m >= 1", cusp_fail.empty(),
               {{"failures", cusp_fail}});
    report.add("bracket:membership", "[g,h]_m in M_{k1+k2+2m}, cuspidal for m >= 1", member_fail.empty(),
               {{"failures", member_fail}, {"checked", pairs}});

    {
        const auto b = rankin_cohen(cat.get("E4"), cat.get("E6"), 1);
        const QSeries rhs = Rational(-3456) * cat.get("Delta12").series;
        add_series_identity(report, "bracket:[E4,E6]_1", "[E4,E6]_1 = -3456 Delta12", b.series, rhs);
    }

    const auto result = bracket_search(26, 4, kDefaultHeckeBound, prec);
    nlohmann::json off_line = nlohmann::json::array();
    nlohmann::json hit_labels = nlohmann::json::array();
    std::set<std::pair<std::string, std::string>> m0_hits;
    for (auto i : result.hit_indices()) {
        const auto& c = result.candidates[i];
        const auto& o = result.outcomes[i];
        hit_labels.push_back(o.label);
        if (c.m == 0) {
            m0_hits.insert({c.g, c.h});
        }
        const auto bracket = rankin_cohen(cat.get(c.g), cat.get(c.h), c.m);
        const bool cusp_line = bracket.series[0] == 0 && cusp_basis(o.weight, 1).size() == 1;
        const bool eis_line =
            agree_on_common_window(bracket.series, bracket.series[0] * eisenstein(o.weight, prec).series);
        if (!(cusp_line || eis_line) || !result.coordinates[i]) {
            off_line.push_back(o.label);
        }
    }
    report.add("bracket-search:hits-on-lines",
               "eigenform brackets lie in a one-dimensional cusp space or on the Eisenstein line", off_line.empty(),
               {{"hits", hit_labels}, {"off_line", off_line}});

    std::set<std::pair<std::string, std::string>> modular_products;
    for (const auto& id : kModularIdentities) {
        modular_products.insert({id.f, id.g});
    }
    report.add("bracket-search:m0-slice", "m = 0 hits are exactly the modular eigenform products",
               m0_hits == modular_products, {{"hits_m0", m0_hits.size()}, {"expected", modular_products.size()}});

    {
        auto it = std::find_if(result.candidates.begin(), result.candidates.end(), [](const BracketCandidate& c) {
            return c.g == "E4" && c.h == "E4" && c.m == 1;
        });
        const auto& o = result.outcomes[static_cast<std::size_t>(it - result.candidates.begin())];
        report.add("bracket-search:[E4,E4]_1-zero", "[f,f]_m = 0 for odd m", o.is_zero && !o.is_hit(),
                   {{"is_zero", o.is_zero}});
    }

    report.runtime_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_diophantine_suite()
{
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "diophantine";

    auto scan_record = [&](const DiophantineScan& scan, const std::string& anchor) {
        auto sols = nlohmann::json::array();
        for (const auto& s : scan.solutions) {
            sols.push_back({{"k", s.k}, {"exponent", s.exponent}});
        }
        auto squares = nlohmann::json::array();
        for (const auto& s : scan.perfect_squares) {
            squares.push_back({{"k", s.k}, {"r", s.exponent}});
        }
        nlohmann::json w = {{"k_range", {scan.k_min, scan.k_max}},
                            {"exponent_range", {scan.e_min, scan.e_max}},
                            {"evaluated", scan.evaluated},
                            {"solutions", sols}};
        if (scan.equation == DiophantineEquation::quadratic) {
            w["perfect_squares"] = squares;
        }
        report.add("scan:" + equation_id(scan.equation), anchor, scan.solutions.empty(), w);
    };

    scan_record(diophantine_check(DiophantineEquation::eq3, 2, 40, 1, 40),
                "3^s(1+3^{k-1}) + 2^s + 28 = 2^{k+s-4}(2^s - 2^3) has no solution");
    scan_record(diophantine_check(DiophantineEquation::eq4, 2, 40, 1, 40),
                "5^s s_{k-1}(5) + 3^{s+1} s_{k-1}(3) + 2^{2s+1} s_{k-1}(2)^2 + 7 2^{s+2} s_{k-1}(2) - 3 2^{k+2s-1} + "
                "78 = 0 has no solution");
    scan_record(diophantine_check(DiophantineEquation::eq7, 0, 0, 1, 64),
                "2^{2r-3} + 4 3^r + 21 2^r - 212 = 0 has no positive integer solution");
    scan_record(diophantine_check(DiophantineEquation::quadratic, 2, 40, 1, 40),
                "2k/B_k is never a root of x^2 + b x + 2^{2r+1}(1 - 2^k) for r >= 1");

    // The equations are the coefficient relations of the actual series,
    // rescaled: residual(series) = -24 residual(equation).
    {
        nlohmann::json bad = nlohmann::json::array();
        for (int k = 2; k <= 14; k += 2) {
            for (int s = 1; s <= 4; ++s) {
                const auto res = e2_times_derivative_residuals(k, s);
                if (res.a4 != -24 * eq3_residual(k, s) || res.a6 != -24 * eq4_residual(k, s)) {
                    bad.push_back({{"k", k}, {"s", s}, {"a4", to_string(res.a4)}, {"a6", to_string(res.a6)}});
                }
            }
        }
        report.add("link:E2*D^s(E_k)", "a_4 = a_2^2 - 2^{k+2s+1} and a_6 = a_2 a_3 reduce to the two equations in s",
                   bad.empty(), {{"k_range", {2, 14}}, {"s_range", {1, 4}}, {"mismatches", bad}});
    }
    {
        nlohmann::json bad = nlohmann::json::array();
        for (int k : {4, 6, 8, 10, 14}) {
            for (int r = 1; r <= 4; ++r) {
                const auto res = derivative_e2_times_eisenstein_residuals(k, r);
                if (res.a4 != -quadratic_residual(k, r)) {
                    bad.push_back({{"k", k}, {"r", r}, {"a4", to_string(res.a4)}});
                }
            }
        }
        report.add("link:D^r(E2)*E_k", "b_4 = b_2^2 - 2^{k+2r+1} is the quadratic in 2k/B_k", bad.empty(),
                   {{"mismatches", bad}});
    }
    {
        nlohmann::json bad = nlohmann::json::array();
        for (int r = 1; r <= 64; ++r) {
            // (-b - sqrt(disc))/2 = -240 at k = 4 is equivalent to b = 240 - 2^{2r-3}.
            if (eq7_residual(r) != Rational(quadratic_b(4, r)) - 240 + pow_int(2, 2 * r - 3)) {
                bad.push_back(r);
            }
        }
        report.add("link:eq7", "at k = 4 the quadratic forces b = 240 - 2^{2r-3}", bad.empty(), {{"mismatches", bad}});
    }
    {
        std::vector<int> integral;
        for (int k = 2; k <= 40; k += 2) {
            const Rational x = Rational(2 * k) / bernoulli(k);
            if (x.get_den() == 1) {
                integral.push_back(k);
            }
        }
        report.add("integrality:2k/B_k", "2k/B_k is an integer only for k in {2,4,6,8,10,14}",
                   integral == std::vector<int>{2, 4, 6, 8, 10, 14}, {{"k_with_integral_value", integral}});
    }

    report.runtime_seconds = seconds_since(start);
    return report;
}

VerificationReport ghitza_check(int max_weight)
{
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "ghitza";
    if (max_weight > 26) {
        throw DomainError("ghitza_check: only one-dimensional cusp spaces (weight <= 26) are covered");
    }
    constexpr int level = 1;
    const auto bound = static_cast<std::size_t>(std::floor(4 * std::pow(std::log(level) + 1, 2)));
    const auto d12 = cusp_delta(12, bound);
    for (int k : kDeltaWeights) {
        if (k == 12 || k > max_weight) {
            continue;
        }
        const auto dk = cusp_delta(k, bound);
        std::optional<std::size_t> n;
        for (std::size_t i = 1; i <= bound && !n; ++i) {
            if (dk.series[i] != d12.series[i]) {
                n = i;
            }
        }
        nlohmann::json w = {{"k", k}, {"bound", bound}};
        if (n) {
            w["n"] = *n;
            w["a_n(Delta_k)"] = to_string(dk.series[*n]);
            w["a_n(Delta12)"] = to_string(d12.series[*n]);
        }
        report.add("separate:Delta" + std::to_string(k), "a_n(Delta_k) != a_n(Delta12) for some n <= 4(log N + 1)^2",
                   n.has_value(), w);
    }
    report.runtime_seconds = seconds_since(start);
    return report;
}

VerificationReport run_suite(const std::string& name, std::size_t prec)
{
    if (name == "identities") {
        return verify_identity_suite(prec);
    }
    if (name == "products") {
        return verify_product_suite(prec);
    }
    if (name == "brackets") {
        return verify_bracket_suite(prec);
    }
    if (name == "diophantine") {
        return verify_diophantine_suite();
    }
    if (name == "ghitza") {
        return ghitza_check();
    }
    if (name == "all") {
        VerificationReport all;
        all.suite = "all";
        for (const char* s : {"identities", "products", "brackets", "diophantine", "ghitza"}) {
            all.append(run_suite(s, prec));
        }
        return all;
    }
    throw DomainError("unknown suite '" + name + "'");
}

} // namespace qmf
