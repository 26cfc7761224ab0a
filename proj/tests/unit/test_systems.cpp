#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hardy/error.hpp"
#include "hardy/systems.hpp"

using namespace hardy;

namespace {

double circle_dist(double a, double b) {
    double d = std::fmod(std::abs(a - b), 1.0);
    return std::min(d, 1.0 - d);
}

Point torus_point(std::initializer_list<double> xs) {
    Point p;
    for (double x : xs) p.coords.push_back(Phase::from_double(x));
    return p;
}

System skew_system(const mpq_class& alpha) {
    const Phase a = Phase::from_rational(alpha);
    return System{make_affine({{1, 0}, {2, 1}}, {a, a})};
}

System heisenberg(double b1, double b2, double b3) {
    return System{Heisenberg{Lift::from_double(b1), Lift::from_double(b2), Lift::from_double(b3)}};
}

}  // namespace

TEST_CASE("iterate examples") {
    const System rot{make_rotation({Phase::from_rational(mpq_class(1, 4))})};
    CHECK(iterate(rot, torus_point({0.0}), 3).coords[0] == Phase::from_rational(mpq_class(3, 4)));

    const System aff = skew_system(mpq_class(1, 3));
    const Point y = iterate(aff, torus_point({0.0, 0.0}), 2);
    CHECK(circle_dist(y.coords[0].value(), 2.0 / 3) < 1e-15);
    CHECK(circle_dist(y.coords[1].value(), 1.0 / 3) < 1e-15);
    // composing T twice by hand
    const Point once = iterate(aff, torus_point({0.0, 0.0}), 1);
    CHECK(iterate(aff, once, 1) == y);

    const double b1 = 0.3819660112501051, b2 = 0.7071067811865476;
    const System h = heisenberg(b1, b2, 0.0);
    const Point g = iterate(h, torus_point({0, 0, 0}), 2);
    const auto expected = reduce_heisenberg(2 * b1, 2 * b2, b1 * b2);
    for (int i = 0; i < 3; ++i) CHECK(circle_dist(g.coords[i].value(), expected[i]) < 1e-12);

    const System cyc{make_cyclic(5)};
    Point c;
    c.residue = 3;
    CHECK(iterate(cyc, c, 4).residue == 2);
    CHECK(iterate(cyc, c, -4).residue == 4);
}

TEST_CASE("reduce_heisenberg examples") {
    CHECK(reduce_heisenberg(0.0, 0.0, 0.0) == std::array<double, 3>{0, 0, 0});
    const auto a = reduce_heisenberg(1.5, 0.25, 0.75);
    CHECK(a[0] == Catch::Approx(0.5));
    CHECK(a[1] == Catch::Approx(0.25));
    CHECK(a[2] == Catch::Approx(0.75));
    const auto b = reduce_heisenberg(0.5, 1.25, 0.3);
    CHECK(b[0] == Catch::Approx(0.5));
    CHECK(b[1] == Catch::Approx(0.25));
    CHECK(b[2] == Catch::Approx(0.8));
    const auto lifted = reduce_heisenberg(Lift::from_double(0.5), Lift::from_double(1.25), Lift::from_double(0.3));
    CHECK(lifted[2].value() == Catch::Approx(0.8));
}

TEST_CASE("evaluate examples") {
    const auto v = evaluate(Observable{TorusCharacter{{1}}}, torus_point({0.25}));
    CHECK(std::abs(v - std::complex<double>(0, 1)) < 1e-15);
    Point one;
    one.residue = 1;
    CHECK(evaluate(Observable{FiniteVector{{1.0, -1.0}}}, one) == std::complex<double>(-1.0));
    const auto h = evaluate(Observable{HeisenbergHorizontalCharacter{1, 0}}, torus_point({0.5, 0.3, 0.9}));
    CHECK(std::abs(h - std::complex<double>(-1, 0)) < 1e-15);
}

TEST_CASE("shape mismatches are reported") {
    const System rot{make_rotation({Phase::from_double(0.1)})};
    CHECK_THROWS_AS(check_shape(rot, Observable{TorusCharacter{{1, 2}}}), ShapeMismatch);
    CHECK_THROWS_AS(check_shape(rot, Observable{FiniteVector{{1.0}}}), ShapeMismatch);
    CHECK_THROWS_AS(check_shape(System{make_cyclic(3)}, Observable{FiniteVector{{1.0, 2.0}}}), ShapeMismatch);
    CHECK_NOTHROW(check_shape(rot, Observable{Constant{}}));
    CHECK_THROWS_AS(make_affine({{1, 1}, {1, 1}}, {Phase{}, Phase{}}), UnsupportedSystem);
}

TEST_CASE("iterate is a flow: T^(n+m) = T^m T^n") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> step(-2000000000LL, 2000000000LL);
    const System rot{make_rotation({Phase::from_double(0.6180339887), Phase::from_rational(mpq_class(2, 7))})};
    const System aff{make_affine({{1, 0, 0}, {3, 1, 0}, {-2, 5, 1}}, {Phase::from_double(0.1234), Phase::from_rational(mpq_class(1, 3)), Phase::from_double(0.77)})};
    const System cyc{make_cyclic(12)};
    const System prod{Product{{rot, cyc}}};
    const System hei = heisenberg(1.6180339887498949, -0.41421356237309515, 2.718281828459045);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = step(rng), m = step(rng);
        const Point x3 = torus_point({0.11, 0.52, 0.93});
        CHECK(iterate(rot, iterate(rot, torus_point({0.3, 0.9}), n), m) == iterate(rot, torus_point({0.3, 0.9}), n + m));
        CHECK(iterate(aff, iterate(aff, x3, n), m) == iterate(aff, x3, n + m));
        Point c;
        c.residue = 5;
        CHECK(iterate(cyc, iterate(cyc, c, n), m) == iterate(cyc, c, n + m));
        Point pp;
        pp.factors = {torus_point({0.2, 0.4}), c};
        CHECK(iterate(prod, iterate(prod, pp, n), m) == iterate(prod, pp, n + m));
        const Point a = iterate(hei, iterate(hei, x3, n), m);
        const Point b = iterate(hei, x3, n + m);
        CHECK(a.coords[0] == b.coords[0]);
        CHECK(a.coords[1] == b.coords[1]);
        CHECK(circle_norm(a.coords[2] - b.coords[2]) < 1e-15);
    }
}

TEST_CASE("Heisenberg closed form matches step-by-step multiplication") {
    const double b1 = 0.7548776662466927, b2 = 0.5698402909980532, b3 = 0.2;
    const System h = heisenberg(b1, b2, b3);
    const std::array<double, 3> start{0.3, 0.8, 0.45};
    // long double oracle: multiply by b on the left, reduce only at the end
    long double gx = start[0], gy = start[1], gz = start[2];
    for (int n = 1; n <= 64; ++n) {
        gz = b3 + gz + static_cast<long double>(b1) * gy;
        gx += b1;
        gy += b2;
        const long double fx = gx - std::floor(gx);
        const long double zz = gz - fx * std::floor(gy);
        const std::array<double, 3> expected{static_cast<double>(fx), static_cast<double>(gy - std::floor(gy)),
                                             static_cast<double>(zz - std::floor(zz))};
        const Point p = iterate(h, torus_point({start[0], start[1], start[2]}), n);
        for (int i = 0; i < 3; ++i) REQUIRE(circle_dist(p.coords[i].value(), expected[i]) < 1e-12);
    }
    // negative n: b^-1 undoes b
    const Point p = torus_point({start[0], start[1], start[2]});
    const Point back = iterate(h, iterate(h, p, 1), -1);
    for (int i = 0; i < 3; ++i) CHECK(circle_norm(back.coords[i] - p.coords[i]) < 1e-15);
}

TEST_CASE("iterates preserve Haar measure statistically") {
    const std::vector<System> systems = {
        System{make_rotation({Phase::from_double(0.6180339887498949), Phase::from_double(0.41421356)})},
        System{make_affine({{1, 0}, {2, 1}}, {Phase::from_double(0.6180339887498949), Phase::from_double(0.3)})},
        heisenberg(0.6180339887498949, 0.41421356237309515, 0.1),
    };
    for (const auto& s : systems) {
        const auto pts = default_grid(s, 10000);
        const std::size_t d = pts[0].coords.size();
        for (double lo : {0.0, 0.3, 0.55}) {
            const double hi = lo + 0.35;
            std::size_t count = 0;
            for (const auto& p : pts) {
                const Point q = iterate(s, p, 17);
                bool in = true;
                for (std::size_t i = 0; i < d; ++i) in = in && q.coords[i].value() >= lo && q.coords[i].value() < hi;
                count += in;
            }
            const double mu = std::pow(hi - lo, static_cast<double>(d));
            const double sigma = std::sqrt(mu * (1 - mu) / 10000.0);
            INFO(s.describe() << " box " << lo);
            CHECK(std::abs(static_cast<double>(count) / 10000.0 - mu) < 3 * sigma);
        }
    }
}

TEST_CASE("observable integrals and norms") {
    const System h = heisenberg(0.1, 0.2, 0.3);
    const Observable box{HeisenbergBox{{0.1, 0.2, 0.1}, {0.6, 0.7, 0.9}, 0.1}};
    CHECK(integral(h, box).real() == Catch::Approx(0.5 * 0.5 * 0.8));
    // quadrature check of the smoothed box integral
    const auto pts = default_grid(h, 50000);
    double sum = 0;
    for (const auto& p : pts) sum += evaluate(box, p).real();
    CHECK(sum / 50000 == Catch::Approx(0.2).margin(2e-3));
    CHECK_THROWS_AS(integral(h, Observable{HeisenbergBox{{0.0, 0.2, 0.1}, {0.6, 0.7, 0.9}, 0.1}}), ShapeMismatch);
    const System cyc{make_cyclic(4)};
    CHECK(integral(cyc, Observable{FiniteVector{{1.0, 1.0, -1.0, 3.0}}}) == std::complex<double>(1.0));
    CHECK(sup_norm(Observable{FiniteVector{{1.0, 1.0, -1.0, 3.0}}}) == 3.0);
    const System prod{Product{{cyc, System{make_rotation({Phase::from_double(0.3)})}}}};
    const Observable t{Tensor{{Observable{FiniteVector{{2.0, 2.0, 2.0, 2.0}}}, Observable{Constant{{0.5, 0}}}}}};
    CHECK(integral(prod, t) == std::complex<double>(1.0));
    const auto grid = default_grid(prod, 16);
    CHECK(grid.size() == 16);
    CHECK(default_grid(cyc, 256).size() == 4);
}
