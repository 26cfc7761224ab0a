#pragma once

#include <map>
#include <string>
#include <vector>

#include "hardy/surd.hpp"

namespace hardy {

/// Polynomial in the shift variables h1, h2, ... with surd coefficients.
/// Exponent vectors carry no trailing zeros, so equal polynomials compare equal.
class HPoly {
public:
    using Exponents = std::vector<unsigned>;

    HPoly() = default;
    HPoly(const Surd& c);  // NOLINT(google-explicit-constructor)
    /// h_k, k >= 1.
    static HPoly variable(unsigned k);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term.
    Surd constant_term() const;
    /// Largest variable index that occurs (0 for constants).
    unsigned max_variable() const noexcept;
    const std::map<Exponents, Surd>& terms() const noexcept { return terms_; }

    HPoly operator-() const;
    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    HPoly scaled(const Surd& c) const;
    /// c * h_k^e * (*this)
    HPoly times_monomial(const Surd& c, unsigned k, unsigned e) const;
    friend bool operator==(const HPoly& a, const HPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

    /// Canonical text, e.g. "2*h1^2 - h2 + 3"; also usable as a hash key.
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Surd& c);
    std::map<Exponents, Surd> terms_;
};

}  // namespace hardy
