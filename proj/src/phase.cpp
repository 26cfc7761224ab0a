#include "hardy/phase.hpp"

#include <cmath>
#include <numbers>

namespace hardy {

namespace {

// round(frac(x) * 2^64) from an MPFR value
std::uint64_t fraction_bits(mpfr_srcptr x) {
    mpfr_t f;
    mpfr_init2(f, mpfr_get_prec(x) + 64);
    mpfr_frac(f, x, MPFR_RNDN);
    if (mpfr_sgn(f) < 0) mpfr_add_ui(f, f, 1, MPFR_RNDN);
    mpfr_mul_2ui(f, f, 64, MPFR_RNDN);
    mpfr_round(f, f);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), f, MPFR_RNDN);
    mpfr_clear(f);
    mpz_class mod;
    mpz_fdiv_r_2exp(mod.get_mpz_t(), z.get_mpz_t(), 64);
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, mod.get_mpz_t());
    return out;
}

}  // namespace

Phase Phase::from_double(double x) {
    double f = x - std::floor(x);
    long double scaled = static_cast<long double>(f) * 0x1p64L;
    if (scaled >= 0x1p64L) return {0};
    return {static_cast<std::uint64_t>(scaled)};
}

Phase Phase::from_rational(const mpq_class& q) {
    mpz_class scaled = q.get_num();
    scaled <<= 64;
    mpz_class rounded;
    // round half up
    mpz_class twice = 2 * scaled + q.get_den();
    mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * q.get_den()).get_mpz_t());
    mpz_class mod;
    mpz_fdiv_r_2exp(mod.get_mpz_t(), rounded.get_mpz_t(), 64);
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, mod.get_mpz_t());
    return {out};
}

Phase Phase::from_surd(const Surd& s) {
    if (s.is_rational()) return from_rational(s.rational());
    const Interval v = s.enclose(256);
    return {fraction_bits(v.lo())};
}

Lift Lift::from_double(double x) {
    const double fl = std::floor(x);
    return {static_cast<std::int64_t>(fl), Phase::from_double(x - fl)};
}

Lift Lift::from_rational(const mpq_class& q) {
    const mpz_class fl = floor_of(q);
    return {fl.get_si(), Phase::from_rational(q - fl)};
}

Lift Lift::from_surd(const Surd& s) {
    if (s.is_rational()) return from_rational(s.rational());
    const Interval v = s.enclose(256);
    mpz_class fl;
    mpfr_get_z(fl.get_mpz_t(), v.lo(), MPFR_RNDD);
    return {fl.get_si(), {fraction_bits(v.lo())}};
}

std::complex<double> e(Phase x) {
    // signed fraction keeps the angle in [-pi, pi)
    const double t = static_cast<double>(static_cast<std::int64_t>(x.raw)) * 0x1p-64;
    const double angle = 2.0 * std::numbers::pi * t;
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> e(double x) { return e(Phase::from_double(x)); }

double circle_norm(Phase x) {
    return std::abs(static_cast<double>(static_cast<std::int64_t>(x.raw))) * 0x1p-64;
}

}  // namespace hardy
