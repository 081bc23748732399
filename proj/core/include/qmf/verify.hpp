#pragma once

// Reproduction suites: series identities, eigenform classification of
// products and brackets, Diophantine scans and the Ghitza separation bound.
// Every suite returns a VerificationReport whose records carry the claim
// they check and, on failure, a concrete witness.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmf/forms.hpp"
#include "qmf/hecke.hpp"

namespace qmf {

inline constexpr std::size_t kDefaultPrec = 128;

struct CheckRecord {
    std::string id;
    /// The claim being checked, as a formula ("E4^2 = E8").
    std::string anchor;
    bool pass = false;
    /// Inputs and, for failures, the offending coefficient or parameters.
    nlohmann::json witness;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;
    double runtime_seconds = 0;

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_passed() const { return failed() == 0; }

    void add(std::string id, std::string anchor, bool pass, nlohmann::json witness = nullptr);
    void append(const VerificationReport& other);
};

/// {"suite", "checks": [{"id", "anchor", "pass", "witness"}], "passed",
/// "failed"} plus "runtime_seconds" when requested.
nlohmann::json to_json(const VerificationReport& r, bool include_runtime = true);

// ---------------------------------------------------------------------------
// Product and bracket searches

/// A catalog form with a derivative exponent, D^r(name).
struct FormRef {
    std::string name;
    unsigned r = 0;

    friend bool operator==(const FormRef&, const FormRef&) = default;
};

std::string label(const FormRef& f);

struct SearchOutcome {
    std::string label;
    int weight = 0;
    /// Empty when the eigenform test itself raised (e.g. PrecisionError).
    std::optional<EigenReport> report;
    std::string error;
    bool is_zero = false;

    bool is_hit() const { return report && report->is_eigen_up_to_bound; }
};

struct ProductCandidate {
    FormRef f;
    FormRef g;
};

struct ProductSearchResult {
    std::vector<ProductCandidate> candidates;
    /// Parallel to candidates.
    std::vector<SearchOutcome> outcomes;

    std::vector<std::size_t> hit_indices() const;
};

/// Every unordered pair from the catalog {E2, E4, E6, E8, E10, E14,
/// Delta12..Delta26} with derivative exponents r, s <= max_deriv and
/// product weight <= max_weight, each run through eigenform_test. Requires
/// max_weight <= 26 and max_deriv <= 3.
ProductSearchResult product_search(int max_weight, unsigned max_deriv, std::uint64_t bound, std::size_t prec,
                                   std::size_t window = kDefaultWindow);

/// The products expected to be eigenforms: the sixteen modular products
/// (E4*E4, ..., E14*Delta12), (D E4)*E4 and E2*Delta12.
std::vector<ProductCandidate> expected_eigen_products();

struct BracketCandidate {
    std::string g;
    std::string h;
    unsigned m = 0;
};

struct BracketSearchResult {
    std::vector<BracketCandidate> candidates;
    std::vector<SearchOutcome> outcomes;
    /// Coordinates in monomial_basis(weight) for every hit.
    std::vector<std::optional<std::vector<Rational>>> coordinates;

    std::vector<std::size_t> hit_indices() const;
};

/// [g, h]_m over unordered pairs of the modular catalog entries (E2 is not
/// modular and is excluded), m <= max_m, weight <= max_weight. Zero brackets
/// are recorded and never counted as hits. Requires max_weight <= 26 and
/// max_m <= 4.
BracketSearchResult bracket_search(int max_weight, unsigned max_m, std::uint64_t bound, std::size_t prec,
                                   std::size_t window = kDefaultWindow);

// ---------------------------------------------------------------------------
// Diophantine conditions from the coefficient relations a_4 = a_2^2 - 2^{w-1}
// and a_6 = a_2 a_3 of a normalized eigenform of weight w.

enum class DiophantineEquation { eq3, eq4, eq7, quadratic };

DiophantineEquation parse_equation(const std::string& id);
std::string equation_id(DiophantineEquation eq);

/// 3^s(1+3^{k-1}) + 2^s + 28 - 2^{k+s-4}(2^s - 8).
Rational eq3_residual(int k, int s);
/// 5^s s5 + 3^{s+1} s3 + 2^{2s+1} s2^2 + 7 2^{s+2} s2 - 3 2^{k+2s-1} + 78,
/// with sj = sigma_{k-1}(j).
Rational eq4_residual(int k, int s);
/// 2^{2r-3} + 4 3^r + 21 2^r - 212.
Rational eq7_residual(int r);
/// b = 4 3^r + 3 2^r (2^{k-1} - 1) + 1 + 3^{k-1}.
Integer quadratic_b(int k, int r);
/// b^2 + 2^{2r+3}(2^k - 1).
Integer quadratic_discriminant(int k, int r);
/// x^2 + b x + 2^{2r+1}(1 - 2^k) at x = 2k/B_k.
Rational quadratic_residual(int k, int r);

struct DiophantineSolution {
    int k = 0;
    int exponent = 0;
};

struct DiophantineScan {
    DiophantineEquation equation;
    int k_min = 0, k_max = 0, e_min = 0, e_max = 0;
    std::size_t evaluated = 0;
    std::vector<DiophantineSolution> solutions;
    /// quadratic only: (k, r) with a perfect-square discriminant.
    std::vector<DiophantineSolution> perfect_squares;
};

/// Exhaustive scan over even k in [k_min, k_max] and exponents in
/// [e_min, e_max] (k is ignored for eq7). Arithmetic is exact throughout.
DiophantineScan diophantine_check(DiophantineEquation eq, int k_min, int k_max, int e_min, int e_max);

/// Relation residuals read off the actual series.
struct RelationResiduals {
    /// a_4 - (a_2^2 - 2^{w-1}) of the normalized form.
    Rational a4;
    /// a_6 - a_2 a_3 of the normalized form.
    Rational a6;
};

/// For E2 * D^s(E_k), normalized by its q-coefficient.
RelationResiduals e2_times_derivative_residuals(int k, int s);
/// For D^r(E2) * E_k, normalized by its q-coefficient (-1/24 scaling).
RelationResiduals derivative_e2_times_eisenstein_residuals(int k, int r);

// ---------------------------------------------------------------------------
// Suites

VerificationReport verify_identity_suite(std::size_t prec = kDefaultPrec);
VerificationReport verify_product_suite(std::size_t prec = kDefaultPrec);
VerificationReport verify_bracket_suite(std::size_t prec = kDefaultPrec);
VerificationReport verify_diophantine_suite();
/// Every Delta_k, k <= max_weight, differs from Delta12 at some
/// n <= 4 (log N + 1)^2 with N = 1.
VerificationReport ghitza_check(int max_weight = 26);

/// One of identities, products, brackets, diophantine, ghitza, all.
VerificationReport run_suite(const std::string& name, std::size_t prec = kDefaultPrec);

/// Recomputes (T_n f)_m straight from the divisor-sum definition and
/// compares it with the recorded violation.
bool revalidate_violation(const QSeries& f, int weight, const EigenViolation& v);

} // namespace qmf
