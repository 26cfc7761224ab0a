#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hardy/phase.hpp"

namespace hardy {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// x -> x + alpha on T^d.
struct TorusRotation {
    std::vector<Phase> alpha;
    std::size_t dim() const noexcept { return alpha.size(); }
};

/// x -> S x + b on T^d with S unipotent ((S - I)^d = 0).
struct AffineTorus {
    IntMatrix S;
    std::vector<Phase> b;
    std::size_t dim() const noexcept { return b.size(); }
};

/// Left translation by beta = (b1, b2, b3) on the Heisenberg nilmanifold, group law
/// (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y'), lattice Z^3.
struct Heisenberg {
    Lift beta1, beta2, beta3;
};

/// x -> x + 1 mod m.
struct FiniteCyclic {
    std::int64_t m = 1;
};

struct System;

struct Product {
    std::vector<System> factors;
};

struct System {
    std::variant<TorusRotation, AffineTorus, Heisenberg, FiniteCyclic, Product> kind;
    std::string describe() const;
};

TorusRotation make_rotation(std::vector<Phase> alpha);
/// Validates S square, unipotent and matching b.
AffineTorus make_affine(IntMatrix S, std::vector<Phase> b);
FiniteCyclic make_cyclic(std::int64_t m);

/// Torus and Heisenberg points use `coords` (fundamental domain [0,1)^k),
/// FiniteCyclic uses `residue`, Product uses `factors`.
struct Point {
    std::vector<Phase> coords;
    std::int64_t residue = 0;
    std::vector<Point> factors;

    friend bool operator==(const Point& a, const Point& b) {
        return a.coords == b.coords && a.residue == b.residue && a.factors == b.factors;
    }
};

/// T^n x in closed form, n of any sign.
Point iterate(const System& s, const Point& x, std::int64_t n);

/// C(n, i) mod 2^64 for any integer n.
std::uint64_t binomial_mod64(std::int64_t n, unsigned long i);

/// Coefficients c_0..c_d with k . T^n x = sum_j C(n, j) c_j (mod 1):
/// c_0 = k.x and c_j = k.N^j x + k.N^(j-1) b, where N = S - I.
std::vector<Phase> affine_orbit_coefficients(const AffineTorus& T, const std::vector<std::int64_t>& k,
                                             const std::vector<Phase>& x);

/// Heisenberg coordinates (x, y, z) reduced into [0,1)^3 by right lattice multiplication.
std::vector<Phase> reduce_heisenberg(const Lift& x, const Lift& y, const Lift& z);
/// Same for double input.
std::array<double, 3> reduce_heisenberg(double x, double y, double z);

/// Heisenberg group product of raw real coordinates.
std::array<double, 3> heisenberg_multiply(const std::array<double, 3>& g, const std::array<double, 3>& h);

// Observables ------------------------------------------------------------------

/// e(k . x) on a torus.
struct TorusCharacter {
    std::vector<std::int64_t> k;
};

/// sum_j c_j e(k_j . x).
struct TorusTrigPoly {
    std::vector<std::pair<std::complex<double>, std::vector<std::int64_t>>> terms;
};

/// Values on Z/m.
struct FiniteVector {
    std::vector<std::complex<double>> values;
};

/// Product over the three coordinates of a ramp-smoothed indicator of
/// [lo_i, hi_i]: 1 inside, 0 outside, linear over a band of width `width`
/// centred on each edge. Requires width/2 <= lo_i and hi_i + width/2 <= 1.
struct HeisenbergBox {
    std::array<double, 3> lo;
    std::array<double, 3> hi;
    double width = 0.0;
};

/// e(k1 x + k2 y), well defined on the quotient.
struct HeisenbergHorizontalCharacter {
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
};

struct Constant {
    std::complex<double> value{1.0, 0.0};
};

struct Observable;

/// Product of one observable per factor of a Product system.
struct Tensor {
    std::vector<Observable> factors;
};

struct Observable {
    std::variant<TorusCharacter, TorusTrigPoly, FiniteVector, HeisenbergBox, HeisenbergHorizontalCharacter, Constant,
                 Tensor>
        kind;
    std::string describe() const;
};

/// Throws ShapeMismatch when the observable does not fit the system.
void check_shape(const System& s, const Observable& f);

std::complex<double> evaluate(const Observable& f, const Point& x);
double sup_norm(const Observable& f);
/// Integral against Haar measure (exact for characters and finite vectors).
std::complex<double> integral(const System& s, const Observable& f);
/// Pointwise complex conjugate.
Observable conjugate(const Observable& f);

/// Point with every coordinate zero.
Point origin(const System& s);

/// Deterministic low-discrepancy sample of initial points. Finite cyclic
/// systems use every residue; other coordinates come from the Halton sequence.
std::vector<Point> default_grid(const System& s, std::size_t count);

/// Number of real torus coordinates (Heisenberg counts 3, cyclic 0).
std::size_t continuous_dim(const System& s);

/// Halton radical inverse of index in the given prime base.
double radical_inverse(std::uint64_t index, std::uint64_t base);

}  // namespace hardy
