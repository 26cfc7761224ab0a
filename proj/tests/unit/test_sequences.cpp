#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include "hardy/error.hpp"
#include "hardy/parser.hpp"
#include "hardy/sequences.hpp"

using namespace hardy;

namespace {

// floor(n^(3/2)) = isqrt(n^3), computed with integers only
std::int64_t isqrt_cube(std::int64_t n) {
    mpz_class c = mpz_class(static_cast<long>(n)) * n * n;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), c.get_mpz_t());
    return r.get_si();
}

// Star discrepancy by scanning every candidate sup point (points and their left limits).
double star_discrepancy_scan(const std::vector<double>& pts) {
    double best = 0.0;
    const double N = static_cast<double>(pts.size());
    std::vector<double> candidates = pts;
    candidates.push_back(1.0);
    for (double x : candidates) {
        double below = 0, at_or_below = 0;
        for (double p : pts) {
            if (p < x) ++below;
            if (p <= x) ++at_or_below;
        }
        best = std::max({best, std::abs(below / N - x), std::abs(at_or_below / N - x)});
    }
    return best;
}

}  // namespace

TEST_CASE("floor_seq examples") {
    const auto s = floor_seq(parse("t^(3/2)"), 1, 5);
    CHECK(s.values == std::vector<std::int64_t>{1, 2, 5, 8, 11});
    CHECK(std::find(s.exact_path.begin(), s.exact_path.end(), 4) != s.exact_path.end());
    CHECK(floor_seq(parse("t^2"), 1, 4).values == std::vector<std::int64_t>{1, 4, 9, 16});
    CHECK(floor_seq(parse("t/2+log(t)"), 1, 4).values == std::vector<std::int64_t>{0, 1, 2, 3});
}

TEST_CASE("floor_seq agrees with the integer square-root oracle") {
    const auto s = floor_seq(parse("t^(3/2)"), 1, 20000);
    for (std::int64_t n = 1; n <= 20000; ++n) REQUIRE(s(n) == isqrt_cube(n));
    // exact path exactly at perfect squares
    std::vector<std::int64_t> squares;
    for (std::int64_t k = 1; k * k <= 20000; ++k) squares.push_back(k * k);
    CHECK(s.exact_path == squares);
}

TEST_CASE("floor_seq with logs matches long double away from integers") {
    const auto a = parse("t/2+log(t)");
    const auto s = floor_seq(a, 1, 2000);
    for (std::int64_t n = 1; n <= 2000; ++n) {
        const long double v = n / 2.0L + std::log(static_cast<long double>(n));
        const long double f = std::floor(v);
        if (v - f < 1e-9L || f + 1 - v < 1e-9L) continue;
        REQUIRE(s(n) == static_cast<std::int64_t>(f));
    }
}

TEST_CASE("floor_seq of a monotone function is nondecreasing") {
    for (const char* text : {"t^(3/2)", "t*log(t)", "t^(1/2)", "t^sqrt(2)*log(t)", "t^3/log(t)"}) {
        const auto s = floor_seq(parse(text), 2, 3000);
        INFO(text);
        CHECK(std::is_sorted(s.values.begin(), s.values.end()));
    }
}

TEST_CASE("floor_seq detects exact rational values with irrational coefficients cancelled") {
    // sqrt(2)*t^(1/2) at n = 2 is exactly 2
    const auto s = floor_seq(parse("sqrt(2)*t^(1/2)"), 2, 2);
    CHECK(s.values[0] == 2);
    CHECK(s.exact_path == std::vector<std::int64_t>{2});
}

TEST_CASE("hit_counts examples") {
    const auto h = hit_counts(parse("t^(1/2)"), 1000);
    CHECK(h.count(1) == 3);
    CHECK(h.cumulative(h.highest()) == 1000);
    const auto lin = hit_counts(parse("t"), 500);
    for (std::int64_t v = 1; v <= 500; ++v) REQUIRE(lin.count(v) == 1);
    CHECK(lin.cumulative(500) == 500);
    // oracle: values of isqrt
    for (std::int64_t v = 1; v < 31; ++v) CHECK(h.count(v) == 2 * v + 1);
}

TEST_CASE("hit_counts: n*w(n)/W(n) stays bounded") {
    for (const char* text : {"t^(1/2)", "t^(2/3)"}) {
        const auto a = parse(text);
        double previous = 0;
        for (std::int64_t N : {1000, 10000, 100000}) {
            const auto h = hit_counts(a, N);
            double worst = 0;
            // the last value may be partially covered, so stop one short
            for (std::int64_t v = std::max<std::int64_t>(1, h.lowest); v < h.highest(); ++v) {
                if (h.cumulative(v) == 0) continue;
                worst = std::max(worst, static_cast<double>(v) * h.count(v) / static_cast<double>(h.cumulative(v)));
            }
            INFO(text << " N=" << N << " worst=" << worst);
            CHECK(worst < 6.0);
            if (previous > 0) CHECK(worst < previous * 1.5);
            previous = worst;
        }
    }
}

TEST_CASE("exp_sum examples and bounds") {
    const auto lin = floor_seq(parse("t"), 1, 1000);
    CHECK(exp_sum(lin, 0.0, 1000) == Catch::Approx(1.0).margin(1e-15));
    CHECK(exp_sum(lin, 0.5, 1000) < 1e-12);
    const auto s = floor_seq(parse("t^(3/2)"), 1, 100000);
    const double golden_conj = (std::sqrt(5.0) - 1) / 2;
    CHECK(exp_sum(s, golden_conj, 100000) < 0.05);
    CHECK(exp_sum(s, 0.0, 100000) == Catch::Approx(1.0));
    for (double th : {0.1, 0.25, 0.7, golden_conj}) CHECK(exp_sum(s, th, 5000) <= 1.0 + 1e-12);
}

TEST_CASE("star discrepancy examples") {
    for (int N : {1, 7, 100}) {
        std::vector<double> pts;
        for (int i = 0; i < N; ++i) pts.push_back(static_cast<double>(i) / N);
        CHECK(star_discrepancy_1d(pts) == Catch::Approx(1.0 / N));
        CHECK(star_discrepancy_1d(pts) == Catch::Approx(star_discrepancy_scan(pts)));
    }
    CHECK(star_discrepancy_1d(std::vector<double>(10, 0.0)) == Catch::Approx(1.0));
    std::vector<double> kron;
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (int n = 1; n <= 1000; ++n) kron.push_back(std::fmod(n * g, 1.0));
    CHECK(star_discrepancy_1d(kron) <= 0.01);
    CHECK(star_discrepancy_1d(kron) == Catch::Approx(star_discrepancy_scan(kron)));
}

TEST_CASE("serialization") {
    const auto s = floor_seq(parse("t^(3/2)"), 3, 7);
    std::ostringstream csv;
    write_csv(s, csv);
    CHECK(csv.str() == "n,value\n3,5\n4,8\n5,11\n6,14\n7,18\n");
    std::stringstream bin;
    write_binary(s, bin);
    CHECK(bin.str().size() == 5 * 16);
    CHECK(static_cast<unsigned char>(bin.str()[0]) == 3);
    CHECK(static_cast<unsigned char>(bin.str()[8]) == 5);
    const auto back = read_binary(bin);
    CHECK(back.first == 3);
    CHECK(back.values == s.values);
}

TEST_CASE("floor_seq is deterministic across serial and parallel modes") {
    const auto a = parse("t*log(t)");
    CHECK(floor_seq(a, 1, 20000, true).values == floor_seq(a, 1, 20000, false).values);
}
