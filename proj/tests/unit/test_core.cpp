#include <catch_amalgamated.hpp>

#include <random>

#include "hardy/classify.hpp"
#include "hardy/error.hpp"
#include "hardy/parser.hpp"

using namespace hardy;

namespace {

Term term(const Surd& c, const mpq_class& alpha, int beta) { return Term{c, Surd(alpha), beta}; }

bool same_terms(const HardyNormalForm& f, const std::vector<Term>& expected) {
    return f == HardyNormalForm(expected);
}

}  // namespace

TEST_CASE("surd arithmetic is exact") {
    const Surd r5 = Surd::sqrt(5);
    CHECK(r5 * r5 == Surd(5));
    CHECK(Surd::sqrt(12) == Surd(2) * Surd::sqrt(3));
    CHECK(Surd::sqrt(mpq_class(1, 2)) * Surd(2) == Surd::sqrt(2));
    CHECK((Surd::sqrt(2) * Surd::sqrt(6)) == Surd(2) * Surd::sqrt(3));
    CHECK(Surd::sqrt(2).ratio_to(Surd::sqrt(8)) == mpq_class(1, 2));
    CHECK_FALSE(Surd::sqrt(2).ratio_to(Surd(1)).has_value());
    CHECK((Surd::sqrt(2) - Surd(1)).sign() == 1);
    CHECK((Surd::sqrt(2) - Surd(mpq_class(141422, 100000))).sign() == -1);
    CHECK(Surd::from_literal("1.25") == Surd(mpq_class(5, 4)));
    CHECK(Surd::from_literal("-7/2") == Surd(mpq_class(-7, 2)));
    CHECK(Surd::from_literal("0.25") == Surd(mpq_class(1, 4)));
    CHECK(Surd::from_literal("010") == Surd(10));
    CHECK(Surd::from_literal("007/010") == Surd(mpq_class(7, 10)));
    CHECK(*Surd::sqrt(3).inverse() * Surd::sqrt(3) == Surd(1));
}

TEST_CASE("interval enclosures contain the true value") {
    const Interval s = Interval::sqrt_of(2, 128);
    CHECK(s.lower_double() <= 1.4142135623730951);
    CHECK(s.upper_double() >= 1.4142135623730950);
    const Interval p = Interval::rational_power(4, 3, 2, 128);  // 8
    CHECK(p.lower_double() <= 8.0);
    CHECK(p.upper_double() >= 8.0);
    CHECK(Interval::rational_power(5, 3, 2, 128).certified_floor() == mpz_class(11));
    CHECK(Interval::log_of(1, 64).sign() == 0);
}

TEST_CASE("parse examples") {
    CHECK(same_terms(parse("t^1.5"), {term(1, mpq_class(3, 2), 0)}));
    const auto f = parse("t*log(t) + t^2");
    REQUIRE(f.terms().size() == 2);
    CHECK(f.terms()[0].alpha == Surd(2));
    CHECK(f.terms()[0].beta == 0);
    CHECK(f.terms()[1].alpha == Surd(1));
    CHECK(f.terms()[1].beta == 1);
    const auto g = parse("sqrt(5)*t^2 + log(t)");
    REQUIRE(g.terms().size() == 2);
    CHECK(g.terms()[0].coeff == Surd::sqrt(5));
    CHECK(g.terms()[0].alpha == Surd(2));
    CHECK(g.terms()[1].coeff == Surd(1));
    CHECK(g.terms()[1].alpha.is_zero());
    CHECK(g.terms()[1].beta == 1);
}

TEST_CASE("parse canonicalizes algebraically equal inputs") {
    CHECK(parse("t^2 + t - t^2") == parse("t"));
    CHECK(parse("(t+1)^2") == parse("t^2 + 2t + 1"));
    CHECK(parse("t^3/log(t)") == parse("t^3*log(t)^(-1)"));
    CHECK(parse("t^1/3") == parse("t^(1/3)"));
    CHECK(parse("2*t/4") == parse("t/2"));
    CHECK(parse("n^2") == parse("t^2"));
    CHECK(parse("(t^2)^(3/4)") == parse("t^1.5"));
    CHECK(parse("t^sqrt(2)*log(t)").leading().alpha == Surd::sqrt(2));
    CHECK(parse("log(t^2)") == parse("2log(t)"));
    CHECK(parse("t - t").is_zero());
}

TEST_CASE("parse rejects text outside the grammar or the class") {
    CHECK_THROWS_AS(parse("exp(t)"), UnsupportedForm);
    CHECK_THROWS_AS(parse("sin(t)"), UnsupportedForm);
    CHECK_THROWS_AS(parse("log(log(t))"), UnsupportedForm);
    CHECK_THROWS_AS(parse("t^t"), UnsupportedForm);
    CHECK_THROWS_AS(parse("1/(t+1)"), UnsupportedForm);
    CHECK_THROWS_AS(parse("t +"), ParseError);
    CHECK_THROWS_AS(parse("foo(t)"), ParseError);
    CHECK_THROWS_AS(parse("t $ 2"), ParseError);
    try {
        parse("t + * 2");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("render round-trips through parse") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4), beta(-2, 2), count(1, 5), kind(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Term> terms;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            Surd c(mpq_class(num(rng), den(rng)));
            if (kind(rng) == 0) c += Surd::sqrt(mpq_class(den(rng) + 1)) * Surd(static_cast<long>(num(rng)));
            Surd alpha(mpq_class(num(rng), den(rng)));
            if (kind(rng) == 0) alpha = Surd::sqrt(2) * Surd(static_cast<long>(den(rng)));
            terms.push_back(Term{c, alpha, beta(rng)});
        }
        const HardyNormalForm f(terms);
        INFO(f.render());
        CHECK(parse(f.render()) == f);
    }
}

TEST_CASE("normal form invariants") {
    const auto f = parse("log(t) + t^2 + 3 + t*log(t)^2 + t");
    for (std::size_t i = 1; i < f.terms().size(); ++i) {
        CHECK(GrowthKey{f.terms()[i - 1].alpha, f.terms()[i - 1].beta} > GrowthKey{f.terms()[i].alpha, f.terms()[i].beta});
        CHECK_FALSE(f.terms()[i].coeff.is_zero());
    }
}

TEST_CASE("growth_compare examples") {
    CHECK(growth_compare(parse("t*log(t)"), parse("t^2")).kind == Growth::StrictlySlower);
    const auto r = growth_compare(parse("t^(3/2)"), parse("5*t^(3/2)"));
    CHECK(r.kind == Growth::Comparable);
    REQUIRE(r.exact_ratio.has_value());
    CHECK(*r.exact_ratio == mpq_class(1, 5));
    CHECK(growth_compare(parse("log(t)^2"), parse("log(t)")).kind == Growth::StrictlyFaster);
    CHECK(growth_compare(parse("sqrt(2)*t"), parse("t")).kind == Growth::Comparable);
    CHECK_FALSE(growth_compare(parse("sqrt(2)*t"), parse("t")).exact_ratio.has_value());
}

TEST_CASE("differentiate examples") {
    CHECK(differentiate(parse("t^(3/2)")) == parse("3/2*t^(1/2)"));
    CHECK(differentiate(parse("t*log(t)")) == HardyNormalForm({term(1, 0, 1), term(1, 0, 0)}));
    CHECK(differentiate(parse("log(t)^2")) == parse("2*t^(-1)*log(t)"));
    CHECK(differentiate(parse("t^2"), 3).is_zero());
}

TEST_CASE("derivatives respect growth order up to log^2") {
    const std::vector<std::string> pool = {"t^(1/2)", "t*log(t)", "t^(3/2)", "t^2", "t^3/log(t)", "log(t)^3",
                                           "t^(1/3)*log(t)", "t^sqrt(2)", "t^2+t*log(t)", "t^(5/2)"};
    for (const auto& sa : pool) {
        for (const auto& sb : pool) {
            const auto a = parse(sa), b = parse(sb);
            if (growth_compare(a, b).kind != Growth::StrictlySlower) continue;
            const auto lhs = differentiate(a);
            const auto rhs = differentiate(b) * parse("log(t)^2");
            INFO(sa << " vs " << sb);
            CHECK(growth_compare(lhs, rhs).kind != Growth::StrictlyFaster);
        }
    }
}

TEST_CASE("evaluate and exact values") {
    const auto f = parse("t^(3/2)");
    CHECK(f.exact_value(4) == Surd(8));
    CHECK(f.exact_value(2) == Surd(2) * Surd::sqrt(2));
    CHECK_FALSE(parse("t^(1/3)").exact_value(2).has_value());
    CHECK(parse("t/2+log(t)").exact_value(1) == Surd(mpq_class(1, 2)));
    CHECK_THROWS_AS(parse("1/log(t)").evaluate(1, 64), DomainError);
    const Interval v = parse("t^sqrt(2)").evaluate(10, 128);
    CHECK(v.lower_double() <= 25.954553519470085);
    CHECK(v.upper_double() >= 25.954553519470078);
}

TEST_CASE("classify_convergence table") {
    using K = ConvergenceClass::Kind;
    const std::vector<std::pair<std::string, K>> table = {
        {"n*log(n)", K::GoodCond1},       {"n^3/log(n)", K::GoodCond1},    {"n^2+n*log(n)", K::GoodCond1},
        {"n^2+sqrt(3)*n", K::GoodCond1},  {"n^2+log(n)^2", K::GoodCond1},  {"sqrt(5)*n^2", K::GoodCond2},
        {"n/2+log(n)", K::GoodCond3},     {"sqrt(5)*n^2+log(n)", K::Bad},  {"2n+log(n)", K::Bad},
    };
    for (const auto& [text, expected] : table) {
        INFO(text);
        CHECK(classify_convergence(parse(text)).kind == expected);
    }
    const auto c2 = classify_convergence(parse("sqrt(5)*t^2"));
    CHECK(c2.c == Surd::sqrt(5));
    CHECK(c2.d.is_zero());
    CHECK(render_int_poly(c2.p) == "t^2");
    CHECK(classify_convergence(parse("t/2+log(t)")).m == 2);
    CHECK(classify_convergence(parse("t/2+log(t)")).describe() == "GoodCond3{m=2}");
}

TEST_CASE("classify_convergence witnesses satisfy their conditions") {
    const auto c = classify_convergence(parse("3/2*t^3 + 3/4*t + 7 + t^(-1/2)"));
    REQUIRE(c.kind == ConvergenceClass::Kind::GoodCond2);
    // a - c*p -> d
    HardyNormalForm cp;
    for (std::size_t i = 0; i < c.p.size(); ++i) {
        cp = cp + HardyNormalForm::monomial(c.c * Surd(mpq_class(c.p[i])), Surd(static_cast<long>(i)));
    }
    const auto rest = parse("3/2*t^3 + 3/4*t + 7 + t^(-1/2)") - cp;
    CHECK(rest.leading_key() == GrowthKey{Surd(), 0});
    CHECK(rest.leading().coeff == c.d);
    CHECK(c.c == Surd(mpq_class(3, 4)));
    CHECK(render_int_poly(c.p) == "2*t^3 + t");
}

TEST_CASE("classifier properties") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-20, 20), den(1, 6), deg(1, 4);
    for (int i = 0; i < 100; ++i) {
        // commensurable polynomial: sqrt(7) * rational polynomial
        std::vector<Term> terms;
        for (int k = 0; k <= deg(rng); ++k) {
            terms.push_back(Term{Surd::sqrt(7) * Surd(mpq_class(coef(rng), den(rng))), Surd(static_cast<long>(k)), 0});
        }
        const HardyNormalForm f(terms);
        if (f.is_zero() || f.leading().alpha.is_zero()) continue;
        CHECK(classify_convergence(f).kind == ConvergenceClass::Kind::GoodCond2);
        // non-polynomial residual above log t
        const auto g = f + parse("t^(1/2)*log(t)");
        CHECK(classify_convergence(g).kind == ConvergenceClass::Kind::GoodCond1);
    }
}

TEST_CASE("classify_recurrence examples") {
    CHECK(classify_recurrence(parse("sqrt(5)*t + log(t)")) == RecurrenceVerdict::Good);
    CHECK(classify_recurrence(parse("t^2 + log(t)^2")) == RecurrenceVerdict::Good);
    CHECK(classify_recurrence(parse("sqrt(5)*t + 2")) == RecurrenceVerdict::NotCovered);
    CHECK(classify_recurrence(parse("t^(3/2)")) == RecurrenceVerdict::Good);
}

TEST_CASE("in_class_G examples") {
    CHECK(in_class_G(parse("t^(3/2)")));
    CHECK_FALSE(in_class_G(parse("t*log(t)")));
    CHECK(in_class_G(parse("t^sqrt(2)*log(t)")));
    CHECK_FALSE(in_class_G(parse("t^2")));
    CHECK_FALSE(in_class_G(parse("log(t)^3")));
    CHECK(in_class_G(parse("t^2/log(t)")));
    for (long r : {2, 3, 5, 7, 11}) {
        CHECK(in_class_G(HardyNormalForm::monomial(Surd(1), Surd::sqrt(r) * Surd(r), 1)));
    }
}
