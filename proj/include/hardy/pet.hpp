#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/hpoly.hpp"
#include "hardy/normal_form.hpp"

namespace hardy {

/// (d, w_d, ..., w_1) for polynomial families, (d, n_d, ..., n_0) for Hardy families.
using TypeVector = std::vector<long>;

/// "(2,1,2)"
std::string render_type(const TypeVector& t);

// Polynomial families ---------------------------------------------------------

/// Polynomial in t whose coefficients are polynomials in the shifts h_k.
struct TPoly {
    std::vector<HPoly> coeffs;  // coeffs[k] multiplies t^k; no trailing zeros

    static TPoly from(const HardyNormalForm& p);
    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    const HPoly& leading() const { return coeffs.back(); }
    /// p(t + h_k)
    TPoly shifted(unsigned k) const;
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs == b.coeffs; }
    std::string render() const;
};

struct PolyMember {
    TPoly poly;
    /// Unexpanded form such as "(t+h1)^2 - t"; falls back to the expanded text when long.
    std::string label;
};

struct PolyFamily {
    std::vector<PolyMember> members;

    /// Members must be polynomials (UnsupportedForm otherwise).
    static PolyFamily from(const std::vector<HardyNormalForm>& polys);
    static PolyFamily parse(const std::string& text);
    std::size_t size() const noexcept { return members.size(); }
    int degree() const;
};

/// Throws DegenerateFamily unless every member and every pairwise difference is non-constant.
void check_essentially_distinct(const PolyFamily& P);

TypeVector poly_type(const PolyFamily& P);
/// Keeps p_i(t+h) - p(t) unless p_i is linear and p_i(t) - p(t) unless p_i = p.
/// Shifted members come first, in family order. `pivot` indexes the member p.
PolyFamily poly_vdc(const PolyFamily& P, std::size_t pivot, unsigned h = 1);
/// Pivot of the inductive step. Needs deg(p_1) = deg(P) >= 2 (DomainError otherwise).
std::size_t choose_pivot(const PolyFamily& P);

// Hardy families --------------------------------------------------------------

/// Asymptotic expansion sum c(h) t^alpha (log t)^beta of a combination of
/// shifted Hardy functions; terms with alpha below kCutoff are dropped.
struct Expansion {
    struct Term {
        HPoly coeff;
        Surd alpha;
        int beta = 0;
    };
    static constexpr long kCutoff = -2;

    std::vector<Term> terms;  // strictly decreasing in (alpha, beta), nonzero coefficients

    static Expansion from(const HardyNormalForm& a);
    /// a(t + h_k) through its Taylor series in h_k.
    Expansion shifted(unsigned k) const;
    friend Expansion operator-(const Expansion& a, const Expansion& b);
    bool is_zero() const noexcept { return terms.empty(); }
    GrowthKey leading_key() const;
    const HPoly& leading_coeff() const { return terms.front().coeff; }
    std::string render() const;
};

struct HardyMember {
    Expansion value;
    std::string label;
};

struct HardyFamily {
    std::vector<HardyMember> members;

    static HardyFamily from(const std::vector<HardyNormalForm>& funcs);
    static HardyFamily parse(const std::string& text);
    std::size_t size() const noexcept { return members.size(); }
};

/// Index i with t^i < a < t^(i+1). Integer powers without logs have no band
/// unless `polynomial_bands` (then t^k sits in band k). Throws DegenerateFamily.
long hardy_band(const Expansion& a, bool polynomial_bands = false);
/// t^(k+eps) < a < t^(k+1) for some k >= 0, eps > 0.
bool expansion_in_G(const Expansion& a);
/// Members and pairwise differences in G; throws DegenerateFamily otherwise.
void check_nice(const HardyFamily& F);

TypeVector hardy_type(const HardyFamily& F, bool polynomial_bands = false);
/// Keeps a_i(t+h) - a(t) unless a_i < t and a_i(t) - a(t) unless a_i = a. Requires F nice.
HardyFamily hardy_vdc(const HardyFamily& F, std::size_t pivot, unsigned h = 1);
/// Pivot of the Hardy inductive step. Needs a_1 > t of maximal growth (DomainError otherwise).
std::size_t choose_hardy_pivot(const HardyFamily& F);

// Derivations -----------------------------------------------------------------

struct DerivationStep {
    TypeVector type;
    std::size_t size = 0;
    /// Member labels (omitted for families larger than kLabelLimit).
    std::vector<std::string> members;
    /// Index of the pivot in `members` order; -1 at the last node.
    long pivot = -1;
    static constexpr std::size_t kLabelLimit = 64;
};

enum class DerivationOutcome { BaseCase, DepthGuard, MemberBudget, TypeIncrease };
std::string to_string(DerivationOutcome o);

struct Derivation {
    std::vector<DerivationStep> steps;
    DerivationOutcome outcome = DerivationOutcome::BaseCase;
    std::size_t depth() const noexcept { return steps.empty() ? 0 : steps.size() - 1; }
};

struct DerivationLimits {
    std::size_t max_depth = 64;
    std::size_t max_members = 4096;
};

using PolyPivotRule = std::function<std::size_t(const PolyFamily&)>;
using HardyPivotRule = std::function<std::size_t(const HardyFamily&)>;

/// Sorts by degree (stable), picks a pivot and transforms until every member is
/// linear. Records each type; stops at the limits or on a type that fails to decrease.
Derivation derive(const PolyFamily& start, const DerivationLimits& limits = {}, const PolyPivotRule& rule = choose_pivot);
/// Same for Hardy families, until every member is sublinear.
Derivation derive(const HardyFamily& start, const DerivationLimits& limits = {},
                  const HardyPivotRule& rule = choose_hardy_pivot);

/// derive() that throws NonTermination at the depth guard, BudgetExceeded at the
/// member budget and std::logic_error on a non-decreasing edge.
Derivation derivation_tree(const PolyFamily& start, const PolyPivotRule& rule = choose_pivot);
Derivation derivation_tree(const HardyFamily& start, const HardyPivotRule& rule = choose_hardy_pivot);

/// One line per node, indented by depth.
std::string render_text(const Derivation& d);
nlohmann::json to_json(const Derivation& d);

// Degree skeleton -------------------------------------------------------------

/// The polynomial calculus reduced to degrees: deg[i] = deg p_i and
/// D[i][j] = deg(p_i - p_j) (-1 on the diagonal). For symbolic h these numbers
/// determine every later type, so the skeleton follows derivations far beyond
/// what explicit families allow.
struct DegreeSkeleton {
    std::vector<int> deg;
    std::vector<std::vector<int>> D;

    static DegreeSkeleton from(const PolyFamily& P);
    std::size_t size() const noexcept { return deg.size(); }
    TypeVector type() const;
    std::size_t pivot() const;
    /// Stable sort by degree, descending.
    DegreeSkeleton sorted() const;
    DegreeSkeleton step(std::size_t pivot) const;
};

struct SkeletonRun {
    std::vector<TypeVector> types;
    DerivationOutcome outcome = DerivationOutcome::BaseCase;
    std::size_t depth() const noexcept { return types.empty() ? 0 : types.size() - 1; }
};

SkeletonRun run_skeleton(const DegreeSkeleton& start, const DerivationLimits& limits = {});

}  // namespace hardy
