#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>

#include "hardy/surd.hpp"

namespace hardy {

/// Point of the circle R/Z stored as a 64-bit binary fraction (raw / 2^64).
/// Addition and integer multiples are exact modulo 1.
struct Phase {
    std::uint64_t raw = 0;

    static Phase from_double(double x);
    /// Nearest 64-bit fraction to frac(q).
    static Phase from_rational(const mpq_class& q);
    /// Nearest 64-bit fraction to frac(s), s evaluated with interval arithmetic.
    static Phase from_surd(const Surd& s);

    double value() const noexcept { return static_cast<double>(raw) * 0x1p-64; }

    friend Phase operator+(Phase a, Phase b) noexcept { return {a.raw + b.raw}; }
    friend Phase operator-(Phase a, Phase b) noexcept { return {a.raw - b.raw}; }
    Phase operator-() const noexcept { return {0 - raw}; }
    Phase& operator+=(Phase b) noexcept {
        raw += b.raw;
        return *this;
    }
    /// n * phase mod 1 (n of any sign).
    friend Phase operator*(std::int64_t n, Phase a) noexcept {
        return {static_cast<std::uint64_t>(n) * a.raw};
    }
    friend bool operator==(Phase a, Phase b) noexcept { return a.raw == b.raw; }
    friend bool operator!=(Phase a, Phase b) noexcept { return a.raw != b.raw; }
};

/// Real number as integer part plus Phase fraction.
struct Lift {
    std::int64_t integer = 0;
    Phase frac;

    static Lift from_double(double x);
    static Lift from_rational(const mpq_class& q);
    static Lift from_surd(const Surd& s);
    double value() const noexcept { return static_cast<double>(integer) + frac.value(); }
};

/// e(x) = exp(2 pi i x).
std::complex<double> e(Phase x);
std::complex<double> e(double x);

/// Distance to the nearest integer, in [0, 1/2].
double circle_norm(Phase x);

}  // namespace hardy
