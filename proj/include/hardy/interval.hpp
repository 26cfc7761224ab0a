#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <optional>

namespace hardy {

/// Closed interval [lo, hi] with MPFR endpoints and outward rounding.
///
/// Every operation rounds the lower endpoint toward -inf and the upper endpoint
/// toward +inf, so the true value of any expression built from exact inputs stays
/// inside the result.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    static Interval exact(long value, mpfr_prec_t precision);
    static Interval from_rational(const mpq_class& value, mpfr_prec_t precision);
    static Interval from_integer(const mpz_class& value, mpfr_prec_t precision);
    /// Enclosure of sqrt(value) for a nonnegative rational.
    static Interval sqrt_of(const mpq_class& value, mpfr_prec_t precision);
    /// Enclosure of log(n) for n >= 1.
    static Interval log_of(std::int64_t n, mpfr_prec_t precision);
    /// Enclosure of n^(p/q) for n >= 1, q >= 1.
    static Interval rational_power(std::int64_t n, long p, unsigned long q, mpfr_prec_t precision);
    static Interval hull(double lo, double hi, mpfr_prec_t precision);

    mpfr_prec_t precision() const noexcept { return precision_; }
    mpfr_srcptr lo() const noexcept { return lo_; }
    mpfr_srcptr hi() const noexcept { return hi_; }

    Interval operator-() const;
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    Interval& operator+=(const Interval& b) { return *this = *this + b; }
    Interval& operator*=(const Interval& b) { return *this = *this * b; }

    /// exp over the interval (monotone).
    Interval exp() const;
    /// Integer power of an interval with lo >= 0; negative exponents require lo > 0.
    Interval pow_nonnegative(long exponent) const;
    /// Multiplicative inverse; requires 0 not in the interval.
    Interval inverse() const;

    bool contains_zero() const;
    /// Sign if the interval excludes zero.
    std::optional<int> sign() const;
    /// floor(x) for every x in the interval, if it is the same integer.
    std::optional<mpz_class> certified_floor() const;
    double midpoint() const;
    double lower_double() const;
    double upper_double() const;
    double width() const;

private:
    mpfr_prec_t precision_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace hardy
