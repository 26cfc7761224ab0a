#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hardy/normal_form.hpp"

namespace hardy {

/// Integer polynomial, coefficient of t^i at index i.
using IntPoly = std::vector<mpz_class>;

std::string render_int_poly(const IntPoly& p);

/// Commensurability bound for the scale search: denominators above this are
/// treated as incommensurable.
inline constexpr long kCommensurabilityBound = 1000000;

struct ConvergenceClass {
    enum class Kind { GoodCond1, GoodCond2, GoodCond3, Bad };
    Kind kind = Kind::Bad;
    // GoodCond2: a - c*p -> d
    Surd c;
    Surd d;
    IntPoly p;
    // GoodCond3: |a - t/m| << log t
    long m = 0;

    bool good() const noexcept { return kind != Kind::Bad; }
    std::string name() const;
    /// Name plus witnesses, e.g. "GoodCond3{m=2}".
    std::string describe() const;
};

enum class RecurrenceVerdict { Good, NotCovered };

std::string to_string(RecurrenceVerdict v);

/// Best commensurable polynomial match for the given terms: every term must be
/// c_k*t^k with integer k >= 1 and the c_k pairwise commensurable within the
/// bound. Returns (c, p) with c = c_lead / D and D the least common denominator
/// of the ratios c_k / c_lead.
std::optional<std::pair<Surd, IntPoly>> commensurable_match(const std::vector<Term>& terms);

ConvergenceClass classify_convergence(const HardyNormalForm& a);

/// Good when |a - c*p| -> infinity for every real c and integer polynomial p.
RecurrenceVerdict classify_recurrence(const HardyNormalForm& a);

/// t^(k+eps) < a < t^(k+1) for some integer k >= 0 and eps > 0.
bool in_class_G(const HardyNormalForm& a);

}  // namespace hardy
