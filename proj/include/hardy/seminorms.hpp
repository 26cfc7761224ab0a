#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/systems.hpp"

namespace hardy {

struct SeminormResult {
    int ell = 1;
    double value = 0.0;
    /// "brute-force", "recursive-exact", "recursive-fourier" or "recursive-quadrature"
    std::string method;
    /// Outer Cesaro length used by the recursion (0 when the limit is exact).
    std::int64_t n_trunc = 0;
    /// Tail variation of the outer average: |A(N) - A(N/2)|, 0 when exact.
    double error = 0.0;
};

/// Tuples x, h_1..h_ell on Z/m are enumerated while m^(ell+1) stays within this.
inline constexpr std::uint64_t kGowersBudget = std::uint64_t{1} << 24;

/// (E_{x,h} prod_w C^{|w|} f(x + w.h))^(1/2^ell) on Z/m, C complex conjugation.
SeminormResult gowers_bruteforce(const std::vector<std::complex<double>>& f, int ell);

/// Host-Kra seminorm through |||f|||_1 = ||E(f|I)|| and
/// |||f|||_{l+1}^{2^{l+1}} = lim E_n |||conj(f) T^n f|||_l^{2^l}.
/// Finite systems (cyclic groups and their products) use a full period and are exact;
/// rotations with trigonometric observables recurse on Fourier coefficients;
/// other ergodic systems integrate over the default grid.
SeminormResult seminorm_recursive(const System& s, const Observable& f, int ell, std::int64_t n_trunc = 256,
                                  std::size_t grid_points = 1024);

struct ProductIdentity {
    double lhs = 0.0;  // |||f|||_{l+1}^2 on Z/m
    double rhs = 0.0;  // |||f (x) conj(f)|||_l on Z/m x Z/m
    bool holds = false;
};

/// Checks |||f|||_{l+1}^2 = |||f (x) conj(f)|||_l within tolerance.
ProductIdentity product_identity_check(const std::vector<std::complex<double>>& f, int ell,
                                       double tolerance = 1e-9);

nlohmann::json to_json(const SeminormResult& r);

}  // namespace hardy
