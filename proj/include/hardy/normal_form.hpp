#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hardy/interval.hpp"
#include "hardy/surd.hpp"

namespace hardy {

/// coeff * t^alpha * (log t)^beta
struct Term {
    Surd coeff;
    Surd alpha;
    int beta = 0;
};

/// Growth key (alpha, beta), compared lexicographically.
struct GrowthKey {
    Surd alpha;
    int beta = 0;

    friend int compare(const GrowthKey& a, const GrowthKey& b) {
        if (int c = compare(a.alpha, b.alpha); c != 0) return c;
        return (a.beta > b.beta) - (a.beta < b.beta);
    }
    friend bool operator<(const GrowthKey& a, const GrowthKey& b) { return compare(a, b) < 0; }
    friend bool operator>(const GrowthKey& a, const GrowthKey& b) { return compare(a, b) > 0; }
    friend bool operator<=(const GrowthKey& a, const GrowthKey& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const GrowthKey& a, const GrowthKey& b) { return compare(a, b) >= 0; }
    friend bool operator==(const GrowthKey& a, const GrowthKey& b) { return a.alpha == b.alpha && a.beta == b.beta; }
};

/// Finite sum of terms c*t^a*(log t)^b, sorted strictly decreasing by (a, b),
/// with no zero coefficients. Algebraically equal inputs give identical objects.
class HardyNormalForm {
public:
    HardyNormalForm() = default;
    /// Merges equal (alpha, beta), drops zeros and sorts.
    explicit HardyNormalForm(std::vector<Term> terms);

    static HardyNormalForm constant(const Surd& c);
    static HardyNormalForm monomial(const Surd& c, const Surd& alpha, int beta = 0);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const Term& leading() const;
    GrowthKey leading_key() const;

    HardyNormalForm operator-() const;
    friend HardyNormalForm operator+(const HardyNormalForm& a, const HardyNormalForm& b);
    friend HardyNormalForm operator-(const HardyNormalForm& a, const HardyNormalForm& b);
    friend HardyNormalForm operator*(const HardyNormalForm& a, const HardyNormalForm& b);
    HardyNormalForm scaled(const Surd& c) const;
    friend bool operator==(const HardyNormalForm& a, const HardyNormalForm& b);
    friend bool operator!=(const HardyNormalForm& a, const HardyNormalForm& b) { return !(a == b); }

    /// True when every term is c*t^k with integer k >= 0 and no log factor.
    bool is_polynomial() const;

    /// Enclosure of a(n) for an integer n >= 1.
    Interval evaluate(std::int64_t n, mpfr_prec_t precision) const;
    /// a(n) exactly, when every term is algebraic at n and lands in the surd field.
    std::optional<Surd> exact_value(std::int64_t n) const;
    double evaluate_double(double t) const;

    /// Re-parseable text, e.g. "sqrt(5)*t^2 + log(t)".
    std::string render() const;

private:
    std::vector<Term> terms_;
};

enum class Growth { StrictlySlower, Comparable, StrictlyFaster };

struct GrowthRelation {
    Growth kind;
    /// Leading coefficient ratio a/b when Comparable.
    double ratio = 0.0;
    /// Same ratio, exact, when the leading coefficients are commensurable.
    std::optional<mpq_class> exact_ratio;
};

/// Asymptotic comparison of two nonzero normal forms by leading (alpha, beta).
GrowthRelation growth_compare(const HardyNormalForm& a, const HardyNormalForm& b);

/// Termwise derivative in t.
HardyNormalForm differentiate(const HardyNormalForm& a);

/// k-th derivative.
HardyNormalForm differentiate(const HardyNormalForm& a, int k);

}  // namespace hardy
