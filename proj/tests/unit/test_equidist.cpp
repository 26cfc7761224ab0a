#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hardy/equidist.hpp"
#include "hardy/error.hpp"
#include "hardy/sequences.hpp"

using namespace hardy;

namespace {

Surd q(long a, long b) { return Surd(mpq_class(a, b)); }

Surd golden() { return (Surd(1) + Surd::sqrt(5)).divided_by(2); }

ExactAffine skew(const Surd& alpha) { return ExactAffine{{{1, 0}, {2, 1}}, {alpha, alpha}}; }

// sum_j a_j n^j directly
Surd monomial_value(const std::vector<Surd>& a, long n) {
    Surd acc, power(1);
    for (const auto& c : a) {
        acc += c * power;
        power *= Surd(n);
    }
    return acc;
}

std::vector<Surd> random_rational_poly(std::mt19937_64& rng, int max_den) {
    std::uniform_int_distribution<int> deg(0, 6), num(-20, 20), den(1, max_den);
    std::vector<Surd> a(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : a) c = q(num(rng), den(rng));
    return a;
}

}  // namespace

TEST_CASE("cinf_norm examples") {
    CHECK(cinf_norm_monomial({Surd(), Surd(), q(1, 4)}, 10) == 50.0);
    const BinomialPoly b = BinomialPoly::from_monomial({Surd(), Surd(), q(1, 4)});
    CHECK(b.alpha[2] == q(1, 2));
    CHECK(b.alpha[1] == q(1, 4));
    CHECK(cinf_norm_monomial({Surd(3), Surd(-7), Surd(2), Surd(11)}, 1000) == 0.0);
    CHECK(cinf_norm_monomial({Surd(), q(1, 2)}, 10) == 5.0);
    CHECK(cinf_norm(BinomialPoly{{q(1, 3)}}, 10) == 0.0);
    // irrational: N * ||sqrt 2|| = 10 * (sqrt2 - 1)
    CHECK(cinf_norm_monomial({Surd(), Surd::sqrt(2)}, 10) == Catch::Approx(10 * (std::sqrt(2.0) - 1)).epsilon(1e-14));
}

TEST_CASE("binomial and monomial bases convert exactly") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_rational_poly(rng, 9);
        if (trial % 3 == 0) a.back() += Surd::sqrt(3);
        const BinomialPoly b = BinomialPoly::from_monomial(a);
        CHECK(b.to_monomial() == a);
        for (long n = -3; n <= 10; ++n) CHECK(b(n) == monomial_value(a, n));
    }
}

TEST_CASE("cinf_norm vanishes exactly when e(p(n)) is constant") {
    std::mt19937_64 rng(12);
    int zeros = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_rational_poly(rng, 3);
        // integer-valued polynomials like n(n-1)/2 must also count
        if (trial % 4 == 0) a = BinomialPoly{{q(1, 5), Surd(2), Surd(3), Surd(-1)}}.to_monomial();
        const std::size_t deg = a.size() - 1;
        bool constant_phase = true;
        for (long n = 1; n <= static_cast<long>(deg) + 1; ++n) {
            const Surd diff = monomial_value(a, n) - monomial_value(a, 0);
            constant_phase = constant_phase && diff.is_integer();
        }
        const double norm = cinf_norm_monomial(a, 50);
        CHECK((norm == 0.0) == constant_phase);
        zeros += constant_phase;
    }
    CHECK(zeros > 50);
}

TEST_CASE("orbit polynomial of the skew map") {
    const Surd a = q(1, 3);
    const ExactAffine T = skew(a);
    const std::vector<Surd> x{q(1, 7), q(2, 5)};
    // step the map by hand: (x, y) -> (x + a, y + 2x + a)
    Surd u = x[0], v = x[1];
    for (long n = 0; n <= 12; ++n) {
        for (std::vector<std::int64_t> k : {std::vector<std::int64_t>{0, 3}, {2, -1}, {1, 1}}) {
            const Surd expected = Surd(static_cast<long>(k[0])) * u + Surd(static_cast<long>(k[1])) * v;
            CHECK(orbit_polynomial(T, k, x)(n) == expected);
        }
        v = v + Surd(2) * u + a;
        u = u + a;
    }
    // kappa = (0, 3) gives 3 a n^2 + 6 x n + 3y; leading binomial coefficient 3 * 2a = 2
    const BinomialPoly p = orbit_polynomial(T, {0, 3}, {Surd(), Surd()});
    CHECK(p.alpha.size() == 3);
    CHECK(p.alpha[2] == Surd(2));
    CHECK(cinf_norm(p, 100) == 0.0);
}

TEST_CASE("frequency_search examples") {
    const ExactAffine T = skew(q(1, 3));
    const std::vector<Surd> origin{Surd(), Surd()};
    const auto hit = frequency_search(T, origin, 2, 100, 3);
    REQUIRE(hit);
    CHECK(hit->norm == 0.0);
    // every kappa in {-3, 0, 3}^2 \ 0 kills the orbit; ties go to the lexicographically first
    CHECK(hit->kappa == std::vector<std::int64_t>{-3, -3});

    // the same search on the 64-bit system type
    const AffineTorus dyadic = make_affine({{1, 0}, {2, 1}}, {Phase::from_rational(mpq_class(1, 3)), Phase::from_rational(mpq_class(1, 3))});
    const auto near = frequency_search(dyadic, Point{{Phase{}, Phase{}}, 0, {}}, 2, 100, 3);
    REQUIRE(near);
    CHECK(near->norm < 1e-10);

    const ExactAffine rot{{{1}}, {golden()}};
    CHECK_FALSE(frequency_search(rot, {Surd()}, 1, 10000, 10));
    const FrequencyHit best = frequency_minimum(rot, {Surd()}, 1, 10000, 10);
    // continued-fraction oracle: ||k phi|| over 1 <= |k| <= 10 is smallest at k = 8
    double oracle = 1;
    for (int k = 1; k <= 10; ++k) {
        const double v = k * (1 + std::sqrt(5.0)) / 2;
        oracle = std::min(oracle, std::abs(v - std::round(v)));
    }
    CHECK(best.norm == Catch::Approx(1e4 * oracle).epsilon(1e-9));
    CHECK(std::abs(best.kappa[0]) == 8);
    CHECK(best.kappa[0] != 0);
}

TEST_CASE("frequency_search guards") {
    CHECK_THROWS_AS(frequency_minimum(skew(q(1, 3)), {Surd(), Surd()}, 1, 100, 3), DomainError);
    CHECK_THROWS_AS(frequency_minimum(skew(q(1, 3)), {Surd(), Surd()}, 2, 100, 0), DomainError);
    // kappa = 0 would always score 0
    const FrequencyHit h = frequency_minimum(ExactAffine{{{1}}, {golden()}}, {Surd()}, 1, 100, 1);
    CHECK(h.kappa != std::vector<std::int64_t>{0});
    const auto j = to_json(h);
    CHECK(j.contains("kappa"));
    CHECK(j.contains("norm"));
}

TEST_CASE("uniform_equidist_check examples") {
    const System rot{make_rotation({Phase::from_surd(golden())})};
    const auto grid = default_grid(rot, 64);
    CHECK(uniform_equidist_check(rot, Observable{Constant{}}, {0, 0, 1}, 100000, 200000, grid) == 0.0);
    const double dev = uniform_equidist_check(rot, Observable{TorusCharacter{{1}}}, {0, 0, 1}, 100000, 200000, grid);
    CHECK(dev <= 0.05);
    // the same quantity through the generic iterate/evaluate path
    const Observable trig{TorusTrigPoly{{{{1.0, 0.0}, {1}}}}};
    CHECK(std::abs(uniform_equidist_check(rot, trig, {0, 0, 1}, 100000, 200000, grid) - dev) < 1e-9);

    // Z/3 with p(n) = n^2: n^2 mod 3 is 0 for a third of n and 1 otherwise
    const System cyc{make_cyclic(3)};
    const std::complex<double> w = std::polar(1.0, 2 * M_PI / 3);
    const Observable chi{FiniteVector{{1.0, w, w * w}}};
    const double stuck = uniform_equidist_check(cyc, chi, {0, 0, 1}, 1, 3000, default_grid(cyc, 3));
    CHECK(stuck == Catch::Approx(std::abs(1.0 / 3 + 2.0 / 3 * w)).epsilon(1e-12));
    CHECK(stuck >= 1.0 / 3);
}

TEST_CASE("poor equidistribution comes with a small-norm frequency") {
    std::mt19937_64 rng(2024);
    const std::vector<long> denominators{1, 2, 3, 4, 5, 1009, 4099};
    std::uniform_int_distribution<std::size_t> pick(0, denominators.size() - 1);
    std::uniform_int_distribution<int> skew(-2, 2);
    const std::int64_t N = 10000;
    int poor = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto rational = [&] {
            const long d = denominators[pick(rng)];
            std::uniform_int_distribution<long> num(0, d - 1);
            return mpq_class(num(rng), d);
        };
        const AffineTorus T = make_affine({{1, 0}, {skew(rng), 1}}, {Phase::from_rational(rational()), Phase::from_rational(rational())});
        const Point x{{Phase::from_rational(rational()), Phase::from_rational(rational())}, 0, {}};
        std::vector<Point> orbit;
        orbit.reserve(N);
        for (std::int64_t n = 1; n <= N; ++n) orbit.push_back(iterate(System{T}, x, n));
        double worst = 0;
        for (std::int64_t k1 = -5; k1 <= 5; ++k1) {
            for (std::int64_t k2 = -5; k2 <= 5; ++k2) {
                if (k1 == 0 && k2 == 0) continue;
                std::vector<double> pts;
                pts.reserve(N);
                for (const auto& p : orbit) pts.push_back((k1 * p.coords[0] + k2 * p.coords[1]).value());
                worst = std::max(worst, star_discrepancy_1d(std::move(pts)));
            }
        }
        if (worst > 0.2) {
            ++poor;
            INFO("trial " << trial << " discrepancy " << worst);
            const auto hit = frequency_search(T, x, 2, N, 5, 10.0);
            CHECK(hit.has_value());
        }
    }
    CHECK(poor > 5);
}
