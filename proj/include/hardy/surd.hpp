#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hardy/interval.hpp"

namespace hardy {

/// Exact real number of the form  sum_k q_k * sqrt(r_k)  with rational q_k and
/// distinct squarefree radicands r_k (r = 1 is the rational part).
///
/// Sums and products stay in this class, so equality and commensurability
/// (a = q*b for rational q) are decided exactly. Ordering goes through interval
/// evaluation, which always terminates for a nonzero value.
class Surd {
public:
    Surd() = default;
    Surd(long value);  // NOLINT(google-explicit-constructor)
    Surd(const mpq_class& value);  // NOLINT(google-explicit-constructor)

    /// sqrt(value) for a nonnegative rational.
    static Surd sqrt(const mpq_class& value);
    /// Parses "3", "-7/2", "1.25".
    static Surd from_literal(const std::string& text);

    bool is_zero() const noexcept { return parts_.empty(); }
    bool is_rational() const noexcept;
    /// Integer check (exact, any sign).
    bool is_integer() const noexcept;
    /// Rational value; throws std::logic_error when irrational.
    mpq_class rational() const;
    const std::map<std::uint64_t, mpq_class>& parts() const noexcept { return parts_; }

    Surd operator-() const;
    Surd& operator+=(const Surd& other);
    Surd& operator-=(const Surd& other);
    Surd& operator*=(const Surd& other);
    friend Surd operator+(Surd a, const Surd& b) { return a += b; }
    friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
    friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
    friend bool operator==(const Surd& a, const Surd& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

    /// Exact inverse when the value has a single radicand part.
    std::optional<Surd> inverse() const;
    /// Division by a nonzero rational.
    Surd divided_by(const mpq_class& q) const;

    /// q with *this == q * other, when it exists. `other` must be nonzero.
    std::optional<mpq_class> ratio_to(const Surd& other) const;

    Interval enclose(mpfr_prec_t precision) const;
    /// -1, 0 or +1 (exact).
    int sign() const;
    double to_double() const;
    std::string to_string() const;

    /// Total order by numeric value.
    friend int compare(const Surd& a, const Surd& b) { return (a - b).sign(); }
    friend bool operator<(const Surd& a, const Surd& b) { return compare(a, b) < 0; }
    friend bool operator>(const Surd& a, const Surd& b) { return compare(a, b) > 0; }
    friend bool operator<=(const Surd& a, const Surd& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Surd& a, const Surd& b) { return compare(a, b) >= 0; }

    /// Structural order (radicand, then coefficient); used for canonical sorting only.
    static bool structural_less(const Surd& a, const Surd& b);

private:
    void add_part(std::uint64_t radicand, const mpq_class& coefficient);
    std::map<std::uint64_t, mpq_class> parts_;
};

/// floor(value) for an exact rational.
mpz_class floor_of(const mpq_class& value);

}  // namespace hardy
