#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "hardy/classify.hpp"
#include "hardy/surd.hpp"
#include "hardy/systems.hpp"

namespace hardy {

/// p(n) = sum_i C(n, i) * alpha[i], exact coefficients.
struct BinomialPoly {
    std::vector<Surd> alpha;

    /// From monomial coefficients a[j] of n^j, using n^j = sum_i S(j, i) i! C(n, i).
    static BinomialPoly from_monomial(const std::vector<Surd>& a);
    std::vector<Surd> to_monomial() const;
    Surd operator()(std::int64_t n) const;
    std::string render() const;
};

/// Distance from s to the nearest integer (exact for rationals).
double dist_to_integer(const Surd& s);

/// max over i >= 1 of N^i * ||alpha_i||; 0 for a constant.
double cinf_norm(const BinomialPoly& p, std::int64_t N);
double cinf_norm_monomial(const std::vector<Surd>& a, std::int64_t N);

/// Unipotent affine map with exact translation part.
struct ExactAffine {
    IntMatrix S;
    std::vector<Surd> b;

    std::size_t dim() const noexcept { return b.size(); }
    /// Exact copy of the 64-bit binary fractions stored in the system.
    static ExactAffine from(const AffineTorus& T);
    static ExactAffine from(const TorusRotation& R);
};

/// Exact dyadic value of each coordinate of a torus point.
std::vector<Surd> exact_coords(const Point& x);

/// kappa . T^n x as a polynomial in n, in the binomial basis.
BinomialPoly orbit_polynomial(const ExactAffine& T, const std::vector<std::int64_t>& kappa,
                              const std::vector<Surd>& x);

struct FrequencyHit {
    std::vector<std::int64_t> kappa;
    double norm = 0.0;
    BinomialPoly poly;
};

/// Minimum of cinf_norm(kappa . T^n x, N) over nonzero kappa with |kappa|_inf <= M.
/// Ties go to the lexicographically smallest kappa. DomainError when the orbit
/// polynomial has degree above d.
FrequencyHit frequency_minimum(const ExactAffine& T, const std::vector<Surd>& x, int d, std::int64_t N,
                               std::int64_t M, bool serial = false);

/// The minimiser when its norm is at most threshold (default M).
std::optional<FrequencyHit> frequency_search(const ExactAffine& T, const std::vector<Surd>& x, int d,
                                             std::int64_t N, std::int64_t M, std::optional<double> threshold = {},
                                             bool serial = false);
std::optional<FrequencyHit> frequency_search(const AffineTorus& T, const Point& x, int d, std::int64_t N,
                                             std::int64_t M, std::optional<double> threshold = {},
                                             bool serial = false);

/// max over the grid of |E_{M_win <= n <= N_win} F(T^{p(n)} x) - integral F|.
double uniform_equidist_check(const System& s, const Observable& F, const IntPoly& p, std::int64_t M_win,
                              std::int64_t N_win, const std::vector<Point>& grid, bool serial = false);

nlohmann::json to_json(const FrequencyHit& h);

}  // namespace hardy
