#include "hardy/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace hardy {

Interval::Interval(mpfr_prec_t precision) : precision_(precision) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : precision_(other.precision_) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other) {}

Interval& Interval::operator=(const Interval& other) {
    if (this == &other) return *this;
    if (precision_ != other.precision_) {
        precision_ = other.precision_;
        mpfr_set_prec(lo_, precision_);
        mpfr_set_prec(hi_, precision_);
    }
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    if (this != &other) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
        std::swap(precision_, other.precision_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::exact(long value, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_si(r.lo_, value, MPFR_RNDD);
    mpfr_set_si(r.hi_, value, MPFR_RNDU);
    return r;
}

Interval Interval::from_rational(const mpq_class& value, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_integer(const mpz_class& value, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::sqrt_of(const mpq_class& value, mpfr_prec_t precision) {
    if (value < 0) throw std::domain_error("sqrt of a negative rational");
    Interval q = from_rational(value, precision);
    Interval r(precision);
    mpfr_sqrt(r.lo_, q.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, q.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log_of(std::int64_t n, mpfr_prec_t precision) {
    if (n < 1) throw std::domain_error("log of a non-positive integer");
    Interval r(precision);
    if (n == 1) return r;
    mpz_class z(static_cast<long>(n));
    Interval nz = from_integer(z, precision + 64);
    mpfr_log(r.lo_, nz.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, nz.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::rational_power(std::int64_t n, long p, unsigned long q, mpfr_prec_t precision) {
    if (n < 1) throw std::domain_error("rational power of a non-positive integer");
    if (q == 0) throw std::domain_error("zero root index");
    mpz_class base(static_cast<long>(n));
    mpz_class power;
    unsigned long ap = static_cast<unsigned long>(p < 0 ? -p : p);
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), ap);
    Interval r(precision);
    mpfr_t tmp_lo, tmp_hi;
    mpfr_init2(tmp_lo, precision + 32);
    mpfr_init2(tmp_hi, precision + 32);
    mpfr_set_z(tmp_lo, power.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(tmp_hi, power.get_mpz_t(), MPFR_RNDU);
    mpfr_rootn_ui(r.lo_, tmp_lo, q, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, tmp_hi, q, MPFR_RNDU);
    mpfr_clear(tmp_lo);
    mpfr_clear(tmp_hi);
    if (p < 0) return r.inverse();
    return r;
}

Interval Interval::hull(double lo, double hi, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_d(r.lo_, std::min(lo, hi), MPFR_RNDD);
    mpfr_set_d(r.hi_, std::max(lo, hi), MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(precision_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision_, b.precision_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision_, b.precision_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = std::max(a.precision_, b.precision_);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr al[2] = {a.lo_, a.hi_};
    mpfr_srcptr bl[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : al) {
        for (auto y : bl) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Interval Interval::exp() const {
    Interval r(precision_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::pow_nonnegative(long exponent) const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("pow_nonnegative on an interval reaching below zero");
    if (exponent < 0 && mpfr_zero_p(lo_)) throw std::domain_error("negative power of an interval containing zero");
    Interval r(precision_);
    if (exponent >= 0) {
        mpfr_pow_si(r.lo_, lo_, exponent, MPFR_RNDD);
        mpfr_pow_si(r.hi_, hi_, exponent, MPFR_RNDU);
    } else {
        mpfr_pow_si(r.lo_, hi_, exponent, MPFR_RNDD);
        mpfr_pow_si(r.hi_, lo_, exponent, MPFR_RNDU);
    }
    return r;
}

Interval Interval::inverse() const {
    if (contains_zero()) throw std::domain_error("inverse of an interval containing zero");
    Interval r(precision_);
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

std::optional<int> Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
    return std::nullopt;
}

std::optional<mpz_class> Interval::certified_floor() const {
    mpz_class a, b;
    mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDD);
    mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDD);
    if (a == b) return a;
    return std::nullopt;
}

double Interval::midpoint() const {
    mpfr_t m;
    mpfr_init2(m, precision_ + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, precision_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

}  // namespace hardy
