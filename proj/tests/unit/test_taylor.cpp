#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "hardy/error.hpp"
#include "hardy/parser.hpp"
#include "hardy/taylor.hpp"

using namespace hardy;

namespace {

HardyNormalForm f(const std::string& s) { return parse(s); }

// For a = t^alpha with alpha > 0 not an integer: a^(k) ~ t^(alpha-k), so the
// smallest admissible k is the first integer above alpha.
int power_order(const mpq_class& alpha) {
    int k = 1;
    while (mpq_class(k) <= alpha) ++k;
    return k;
}

mpq_class power_gamma(const mpq_class& alpha) {
    const int k = power_order(alpha);
    const mpq_class e = alpha - k;
    const mpq_class lower = -e / k;
    mpq_class upper = 1;
    upper = std::min(upper, mpq_class(-(e - 1) / (k + 1)));
    upper = std::min(upper, mpq_class(-e * (mpq_class(1, k) + mpq_class(1, k * k))));
    return (lower + upper) / 2;
}

}  // namespace

TEST_CASE("select_order examples") {
    CHECK(select_order(f("t^(3/2)")) == 2);
    CHECK(select_order(f("t*log(t)")) == 2);
    CHECK(select_order(f("t^(5/2)")) == 3);
    CHECK(select_order(f("t^(1/2)")) == 1);
}

TEST_CASE("select_order agrees with the power-law oracle") {
    for (int q : {2, 3, 5, 7}) {
        for (int p = 1; p <= 4 * q; ++p) {
            mpq_class alpha(p, q);
            alpha.canonicalize();
            if (alpha.get_den() == 1) continue;
            const HardyNormalForm a = HardyNormalForm::monomial(Surd(1), Surd(alpha));
            INFO(a.render());
            CHECK(select_order(a) == power_order(alpha));
            const ReductionPlan plan = window_length(a, power_order(alpha));
            CHECK(plan.window.delta == 0);
            CHECK(plan.window.gamma == Surd(power_gamma(alpha)));
        }
    }
}

TEST_CASE("select_order rejects functions without an admissible order") {
    CHECK_THROWS_AS(select_order(f("t^2")), HypothesisFailed);
    CHECK_THROWS_AS(select_order(f("2*t + log(t)")), HypothesisFailed);
    CHECK_THROWS_AS(select_order(f("t/2 + log(t)")), HypothesisFailed);
    // GoodCond1, but only sqrt(3)*t separates it from Z[t]; it is itself a real polynomial
    CHECK_THROWS_AS(select_order(f("t^2 + sqrt(3)*t")), HypothesisFailed);
}

TEST_CASE("window_length examples") {
    const ReductionPlan a = window_length(f("t^(3/2)"), 2);
    CHECK(a.lower == LogMonomial{Surd(mpq_class(1, 4)), 0});
    CHECK(a.upper == LogMonomial{Surd(mpq_class(3, 8)), 0});
    CHECK(a.window.gamma == Surd(mpq_class(5, 16)));
    CHECK(a.window.render() == "t^(5/16)");
    const ReductionPlan b = window_length(f("t*log(t)"), 2);
    CHECK(b.window.gamma == Surd(mpq_class(7, 12)));
    CHECK(b.lower.gamma == Surd(mpq_class(1, 2)));
    CHECK(b.upper.gamma == Surd(mpq_class(2, 3)));
    CHECK(window_length(f("t^(1/2)"), 1).window.gamma == Surd(mpq_class(5, 8)));
    CHECK(window_length(f("t^(5/2)"), 3).window.gamma == Surd(mpq_class(7, 36)));
    for (const auto& c : a.certificates) {
        INFO(c.statement);
        CHECK(c.holds);
    }
    CHECK_THROWS_AS(window_length(f("t^(3/2)"), 1), HypothesisFailed);
}

TEST_CASE("windows fall back to log exponents when the power range collapses") {
    const ReductionPlan p = plan_reduction(f("t^2 + log(t)^2"));
    CHECK(p.k == 3);
    CHECK(p.window.gamma == Surd(1));
    CHECK(p.window.delta == mpq_class(-7, 24));
    const ReductionPlan q = plan_reduction(f("t^3/log(t)"));
    CHECK(q.k == 3);
    CHECK(q.window.gamma.is_zero());
    CHECK(q.window.delta == mpq_class(7, 18));
    const ReductionPlan r = plan_reduction(f("t^2 + t*log(t)"));
    CHECK(r.k == 3);
    CHECK(r.window.gamma == Surd(mpq_class(17, 24)));
}

TEST_CASE("Taylor window of t^(3/2) against a direct computation") {
    const HardyNormalForm a = f("t^(3/2)");
    const std::int64_t N = 10000;
    const std::int64_t L = window_size(window_length(a, 2).window, N);
    CHECK(L == static_cast<std::int64_t>(std::ceil(std::pow(10000.0, 5.0 / 16))));
    const TaylorReport r = taylor_window_check(a, N, 2, L);
    // a''' < 0, so the floor of the Taylor polynomial can only overshoot
    CHECK(r.sign == -1);
    CHECK(r.max_remainder < 1);
    std::map<std::int64_t, std::int64_t> oracle;
    for (std::int64_t n = 1; n <= L; ++n) {
        // P(n) = 10^6 + 150 n + (3/800) n^2, exact in rationals
        const mpq_class p = mpq_class(1000000 + 150 * n) + mpq_class(3 * n * n, 800);
        const long double exact = std::pow(static_cast<long double>(N + n), 1.5L);
        ++oracle[static_cast<std::int64_t>(std::floor(exact)) - floor_of(p).get_si()];
    }
    CHECK(r.histogram == oracle);
    for (const auto& [e, c] : r.histogram) CHECK((e == 0 || e == -1));
    CHECK(r.remainder_bound < 1);
}

TEST_CASE("polynomials equal their Taylor expansion") {
    for (std::int64_t N : {1, 37, 100000}) {
        const TaylorReport r = taylor_window_check(f("t^2"), N, 2, 500);
        CHECK(r.sign == 0);
        CHECK(r.max_remainder == 0.0);
        CHECK(r.histogram == std::map<std::int64_t, std::int64_t>{{0, 500}});
    }
}

TEST_CASE("Taylor window of t log t") {
    const HardyNormalForm a = f("t*log(t)");
    const std::int64_t N = 100000;
    const std::int64_t L = window_size(plan_reduction(a).window, N);
    CHECK(L == static_cast<std::int64_t>(std::ceil(std::pow(1e5, 7.0 / 12))));
    const TaylorReport r = taylor_window_check(a, N, 2, L);
    CHECK(r.sign == -1);
    CHECK(r.max_remainder < 1);
    for (const auto& [e, c] : r.histogram) CHECK((e == 0 || e == -1));
    CHECK(r.histogram.count(-1) == 1);
}

TEST_CASE("oversized windows raise RemainderTooLarge") {
    CHECK_THROWS_AS(taylor_window_check(f("t^(3/2)"), 10000, 2, 400), RemainderTooLarge);
    const TaylorReport r = taylor_window_scan(f("t^(3/2)"), 10000, 2, 400);
    CHECK_FALSE(r.passed);
    CHECK(r.max_remainder > 1);
}

TEST_CASE("corpus functions pass at every scale") {
    for (const char* s : {"t*log(t)", "t^3/log(t)", "t^2 + t*log(t)", "t^2 + log(t)^2", "t^(3/2)", "t^(5/2)"}) {
        const HardyNormalForm a = f(s);
        const ReductionPlan plan = plan_reduction(a);
        for (std::int64_t N : {10000, 100000, 1000000}) {
            INFO(s << " N = " << N);
            const std::int64_t L = window_size(plan.window, N);
            const TaylorReport r = taylor_window_check(a, N, plan.k, L);
            CHECK(r.passed);
            CHECK(r.remainder_bound < 1);
        }
    }
}

TEST_CASE("serial and parallel scans agree") {
    const HardyNormalForm a = f("t^(5/2)");
    const TaylorReport x = taylor_window_scan(a, 123456, 3, 300, true);
    const TaylorReport y = taylor_window_scan(a, 123456, 3, 300, false);
    CHECK(x.histogram == y.histogram);
    CHECK(x.max_remainder == y.max_remainder);
}

TEST_CASE("Taylor report serialization") {
    const TaylorReport r = taylor_window_check(f("t^(3/2)"), 10000, 2, 18);
    const nlohmann::json j = to_json(r);
    CHECK(j["a"] == "t^(3/2)");
    CHECK(j["gamma"] == "t^(5/16)");
    CHECK(j["N"] == 10000);
    CHECK(j["L"] == 18);
    CHECK(j["k"] == 2);
    CHECK(j.contains("histogram"));
    CHECK(j.contains("max_remainder"));
    const nlohmann::json p = to_json(plan_reduction(f("t*log(t)")));
    CHECK(p["window"] == "t^(7/12)");
    CHECK(p["certificates"].size() == 6);
}
