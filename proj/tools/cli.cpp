#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qmf/brackets.hpp"
#include "qmf/forms.hpp"
#include "qmf/hecke.hpp"
#include "qmf/nearly.hpp"
#include "qmf/verify.hpp"

namespace qmf::cli {

namespace {

constexpr std::size_t kShownTerms = 12;

std::string format_series(const QSeries& f, std::size_t max_terms = kShownTerms)
{
    std::ostringstream os;
    std::size_t shown = 0;
    std::size_t m = 0;
    for (; m <= f.prec() && shown < max_terms; ++m) {
        const Rational& c = f[m];
        if (c == 0) {
            continue;
        }
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (shown == 0) {
            os << (neg ? "-" : "");
        } else {
            os << (neg ? " - " : " + ");
        }
        if (m == 0 || mag != 1) {
            os << mag.get_str();
            if (m > 0) {
                os << "*";
            }
        }
        if (m == 1) {
            os << "q";
        } else if (m > 1) {
            os << "q^" << m;
        }
        ++shown;
    }
    if (shown == 0) {
        os << "0";
    }
    for (; m <= f.prec(); ++m) {
        if (f[m] != 0) {
            os << " + ...";
            break;
        }
    }
    os << " + O(q^" << f.prec() + 1 << ")";
    return os.str();
}

void print_eigen_report(std::ostream& out, const EigenReport& r)
{
    out << (r.is_eigen_up_to_bound ? "eigenform" : "not an eigenform") << " (T_n for n <= " << r.tested_bound
        << ", exponents 0.." << r.window << ", precision " << r.precision_used << ")\n";
    for (const auto& [n, lambda] : r.eigenvalues) {
        out << "  lambda_" << n << " = " << lambda.get_str() << "\n";
    }
    if (r.first_violation) {
        const auto& v = *r.first_violation;
        out << "  first violation: n = " << v.n << ", q^" << v.exponent;
        if (v.component != 0) {
            out << " (Y^" << v.component << ")";
        }
        out << ": expected " << v.expected.get_str() << ", got " << v.actual.get_str() << "\n";
    }
}

struct Options {
    int weight = 0;
    std::size_t prec = kDefaultPrec;
    bool json = false;
    std::string input;
    std::uint64_t n = 1;
    std::uint64_t bound = kDefaultHeckeBound;
    std::size_t window = kDefaultWindow;
    std::string g, h;
    unsigned m = 0;
    std::string expr;
    int depth = 0;
    std::string suite = "all";
    std::string out_file;
};

int cmd_eis(const Options& o, std::ostream& out)
{
    const auto f = eisenstein(o.weight, o.prec);
    if (o.json) {
        out << to_json(f).dump() << "\n";
    } else {
        out << "E" << o.weight << " = " << format_series(f.series) << "\n";
    }
    return 0;
}

int cmd_delta(const Options& o, std::ostream& out)
{
    const auto f = cusp_delta(o.weight, o.prec);
    if (o.json) {
        auto j = to_json(f);
        auto coords = nlohmann::json::array();
        for (const auto& c : cusp_delta_coordinates(o.weight)) {
            coords.push_back(to_string(c));
        }
        j["basis_coordinates"] = coords;
        out << j.dump() << "\n";
    } else {
        out << "Delta" << o.weight << " = " << format_series(f.series) << "\n";
    }
    return 0;
}

int cmd_hecke(const Options& o, std::ostream& out, std::ostream& err)
{
    const FormCatalog cat(o.prec);
    const auto f = cat.resolve(o.input);
    const auto warning = hecke_precision_warning(f.prec(), o.n);
    const auto t = hecke(f, o.n);
    if (o.json) {
        auto j = to_json(t);
        j["n"] = o.n;
        j["input"] = o.input;
        j["warning"] = warning ? nlohmann::json(*warning) : nlohmann::json(nullptr);
        out << j.dump() << "\n";
    } else {
        if (warning) {
            err << "warning: " << *warning << "\n";
        }
        out << "T_" << o.n << "(" << o.input << ") [weight " << t.weight << "] = " << format_series(t.series) << "\n";
    }
    return 0;
}

int cmd_eigen(const Options& o, std::ostream& out)
{
    EigenReport r;
    if (o.input == "E2star") {
        r = eigenform_test(e2_star(o.prec), o.bound, o.window);
    } else {
        const FormCatalog cat(o.prec);
        r = eigenform_test(cat.resolve(o.input), o.bound, o.window);
    }
    if (o.json) {
        auto j = to_json(r);
        j["input"] = o.input;
        out << j.dump() << "\n";
    } else {
        out << o.input << ": ";
        print_eigen_report(out, r);
    }
    return 0;
}

int cmd_bracket(const Options& o, std::ostream& out)
{
    const FormCatalog cat(o.prec);
    const auto b = rankin_cohen(cat.resolve(o.g), cat.resolve(o.h), o.m);
    std::optional<std::vector<Rational>> coords;
    std::string membership = "not checked";
    if (b.weight >= 0 && b.weight % 2 == 0 && b.prec() + 1 >= modular_dimension(b.weight) + kDefaultMembershipMargin) {
        try {
            coords = is_modular_member(b.series, b.weight);
            membership = coords ? "member" : "not a member";
        } catch (const DomainError& e) {
            membership = e.what();
        }
    }
    if (o.json) {
        auto j = to_json(b);
        j["g"] = o.g;
        j["h"] = o.h;
        j["m"] = o.m;
        if (coords) {
            auto c = nlohmann::json::array();
            for (const auto& x : *coords) {
                c.push_back(to_string(x));
            }
            j["modular_coordinates"] = c;
        } else {
            j["modular_coordinates"] = nullptr;
        }
        out << j.dump() << "\n";
    } else {
        out << "[" << o.g << ", " << o.h << "]_" << o.m << " [weight " << b.weight << "] = " << format_series(b.series)
            << "\n";
        out << "M_" << b.weight << " membership: " << membership;
        if (coords) {
            out << ", coordinates in E4^a E6^b basis: [";
            for (std::size_t i = 0; i < coords->size(); ++i) {
                out << (i ? ", " : "") << (*coords)[i].get_str();
            }
            out << "]";
        }
        out << "\n";
    }
    return 0;
}

int cmd_decompose(const Options& o, std::ostream& out)
{
    const auto f = eval_generator_poly(parse_polynomial(o.expr), o.prec);
    if (f.weight != o.weight && !f.series.is_zero()) {
        throw DomainError("expression has weight " + std::to_string(f.weight) + ", not " + std::to_string(o.weight));
    }
    GradedSeries tagged = f;
    tagged.weight = o.weight;
    const auto parts = quasimodular_decompose(tagged, o.depth);
    if (o.json) {
        nlohmann::json j = {{"expr", o.expr}, {"weight", o.weight}, {"depth", o.depth}};
        if (!parts) {
            j["decomposable"] = false;
            j["parts"] = nullptr;
        } else {
            j["decomposable"] = true;
            auto arr = nlohmann::json::array();
            for (const auto& p : *parts) {
                auto c = nlohmann::json::array();
                for (const auto& x : p.coordinates) {
                    c.push_back(to_string(x));
                }
                arr.push_back({{"r", p.r}, {"weight", p.form.weight}, {"coordinates", c}});
            }
            j["parts"] = arr;
        }
        out << j.dump() << "\n";
        return 0;
    }
    if (!parts) {
        out << "not decomposable as sum of D^r(M_{k-2r}) with depth <= " << o.depth << "\n";
        return 0;
    }
    for (const auto& p : *parts) {
        const auto exps = monomial_exponents(p.form.weight);
        out << "r = " << p.r << ": f_" << p.r << " in M_" << p.form.weight << " = ";
        bool any = false;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (p.coordinates[i] == 0) {
                continue;
            }
            out << (any ? " + " : "") << "(" << p.coordinates[i].get_str() << ")*E4^" << exps[i].first << "*E6^"
                << exps[i].second;
            any = true;
        }
        out << (any ? "" : "0") << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto report = run_suite(o.suite, o.prec);
    const auto j = to_json(report);
    if (!o.out_file.empty()) {
        std::ofstream f(o.out_file);
        if (!f) {
            throw std::runtime_error("cannot open " + o.out_file + " for writing");
        }
        f << j.dump(2) << "\n";
    }
    if (o.json) {
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.id << "  [" << c.anchor << "]\n";
            if (!c.pass) {
                out << "     witness: " << c.witness.dump() << "\n";
            }
        }
        out << report.suite << ": " << report.passed() << " passed, " << report.failed() << " failed ("
            << report.runtime_seconds << " s)\n";
    }
    return report.all_passed() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-expansion engine for modular, quasimodular and nearly holomorphic forms on SL2(Z)"};
    app.require_subcommand(1);
    Options o;

    auto* eis = app.add_subcommand("eis", "Eisenstein series E_k");
    eis->add_option("--weight", o.weight, "Even weight k >= 2")->required();
    eis->add_option("--prec", o.prec, "Precision (largest exponent)")->required();
    eis->add_flag("--json", o.json);

    auto* delta = app.add_subcommand("delta", "Normalized cusp form Delta_k, k in {12,16,18,20,22,26}");
    delta->add_option("--weight", o.weight)->required();
    delta->add_option("--prec", o.prec)->required();
    delta->add_flag("--json", o.json);

    auto* hk = app.add_subcommand("hecke", "Apply T_n to a catalog form or expression");
    hk->add_option("--input", o.input, "Catalog name (E4, Delta12, ...) or expression in catalog names")->required();
    hk->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    hk->add_option("--prec", o.prec);
    hk->add_flag("--json", o.json);

    auto* eig = app.add_subcommand("eigen", "Finite eigenform test");
    eig->add_option("--input", o.input, "Catalog name, expression, or E2star")->required();
    eig->add_option("--bound", o.bound)->check(CLI::PositiveNumber);
    eig->add_option("--window", o.window);
    eig->add_option("--prec", o.prec);
    eig->add_flag("--json", o.json);

    auto* br = app.add_subcommand("bracket", "Rankin-Cohen bracket [g,h]_m");
    br->set_help_flag("--help", "Print this help message and exit");
    br->add_option("--g", o.g)->required();
    br->add_option("--h", o.h)->required();
    br->add_option("--m", o.m)->required();
    br->add_option("--prec", o.prec);
    br->add_flag("--json", o.json);

    auto* dec = app.add_subcommand("decompose", "Write a quasimodular form as sum of D^r(M_{k-2r})");
    dec->add_option("--expr", o.expr, "Polynomial in E2, E4, E6")->required();
    dec->add_option("--weight", o.weight)->required();
    dec->add_option("--depth", o.depth)->required();
    dec->add_flag("--json", o.json);

    auto* ver = app.add_subcommand("verify", "Run a reproduction suite");
    ver->add_option("--suite", o.suite)
        ->check(CLI::IsMember({"identities", "products", "brackets", "diophantine", "ghitza", "all"}))
        ->required();
    ver->add_option("--prec", o.prec);
    ver->add_flag("--json", o.json);
    ver->add_option("--out", o.out_file, "Also write the JSON report to FILE");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) {
        rev.pop_back();
    }
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eis->parsed()) {
            return cmd_eis(o, out);
        }
        if (delta->parsed()) {
            return cmd_delta(o, out);
        }
        if (hk->parsed()) {
            return cmd_hecke(o, out, err);
        }
        if (eig->parsed()) {
            return cmd_eigen(o, out);
        }
        if (br->parsed()) {
            return cmd_bracket(o, out);
        }
        if (dec->parsed()) {
            return cmd_decompose(o, out);
        }
        if (ver->parsed()) {
            return cmd_verify(o, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace qmf::cli
