#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hardy/error.hpp"
#include "hardy/parser.hpp"
#include "hardy/pet.hpp"

using namespace hardy;

namespace {

TPoly tp(const std::string& s) { return TPoly::from(parse(s)); }

double eval_hpoly(const HPoly& p, const std::vector<double>& h) {
    double s = 0;
    for (const auto& [e, c] : p.terms()) {
        double m = c.to_double();
        for (std::size_t i = 0; i < e.size(); ++i) m *= std::pow(h.at(i), e[i]);
        s += m;
    }
    return s;
}

double eval_expansion(const Expansion& a, double t, const std::vector<double>& h) {
    double s = 0;
    for (const auto& term : a.terms) {
        s += eval_hpoly(term.coeff, h) * std::pow(t, term.alpha.to_double()) * std::pow(std::log(t), term.beta);
    }
    return s;
}

// Random essentially distinct polynomial family with small integer coefficients.
PolyFamily random_family(std::mt19937_64& rng, int max_deg, int max_size) {
    std::uniform_int_distribution<int> size(1, max_size), deg(1, max_deg), coef(-2, 2), lead(0, 3);
    const int lc[] = {-2, -1, 1, 2};
    for (;;) {
        std::vector<HardyNormalForm> ps;
        const int n = size(rng);
        for (int k = 0; k < n; ++k) {
            const int d = deg(rng);
            std::vector<Term> terms;
            for (int i = 0; i < d; ++i) terms.push_back({Surd(static_cast<long>(coef(rng))), Surd(static_cast<long>(i)), 0});
            terms.push_back({Surd(static_cast<long>(lc[lead(rng)])), Surd(static_cast<long>(d)), 0});
            ps.emplace_back(terms);
        }
        PolyFamily P = PolyFamily::from(ps);
        try {
            check_essentially_distinct(P);
            return P;
        } catch (const DegenerateFamily&) {
        }
    }
}

}  // namespace

TEST_CASE("h-polynomials") {
    const HPoly h1 = HPoly::variable(1), h2 = HPoly::variable(2);
    const HPoly p = (h1 + h2) * (h1 - h2);
    CHECK(p == h1 * h1 - h2 * h2);
    CHECK(p.to_string() == "h1^2 - h2^2");
    CHECK((p - p).is_zero());
    CHECK(HPoly(Surd(3)).is_constant());
    CHECK(p.max_variable() == 2);
    CHECK((h1.scaled(Surd::sqrt(2)) + HPoly(Surd(-1))).to_string() == "sqrt(2)*h1 - 1");
}

TEST_CASE("polynomial types") {
    CHECK(poly_type(PolyFamily::parse("{t, 2t, t^2}")) == TypeVector{2, 1, 2});
    CHECK(poly_type(PolyFamily::parse("{t}")) == TypeVector{1, 1});
    CHECK(poly_type(PolyFamily::parse("{t^2, t^2 + t, 3t^2}")) == TypeVector{2, 2, 0});
    CHECK(poly_type(PolyFamily::parse("{sqrt(3) t^2, t^2 + sqrt(3) t}")) == TypeVector{2, 2, 0});
    CHECK(render_type({2, 1, 2}) == "(2,1,2)");
    CHECK_THROWS_AS(poly_type(PolyFamily::parse("{t, t + 1}")), DegenerateFamily);
    CHECK_THROWS_AS(poly_type(PolyFamily::parse("{t, 3}")), DegenerateFamily);
    CHECK_THROWS_AS(PolyFamily::parse("{t^(1/2)}"), UnsupportedForm);
}

TEST_CASE("polynomial type is invariant under reordering") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        PolyFamily P = random_family(rng, 4, 5);
        const TypeVector t = poly_type(P);
        std::shuffle(P.members.begin(), P.members.end(), rng);
        CHECK(poly_type(P) == t);
    }
}

TEST_CASE("polynomial van der Corput step") {
    const PolyFamily P = PolyFamily::parse("{t, 2t, t^2}");
    const PolyFamily Q = poly_vdc(P, 0);
    REQUIRE(Q.size() == 3);
    CHECK(Q.members[0].poly == tp("t^2").shifted(1) - tp("t"));
    CHECK(Q.members[1].poly == tp("t"));
    CHECK(Q.members[2].poly == tp("t^2 - t"));
    CHECK(Q.members[0].label == "(t+h1)^2 - t");
    CHECK(Q.members[2].label == "t^2 - t");
    CHECK(Q.members[0].poly.render() == "t^2 + (2*h1 - 1)*t + h1^2");
    CHECK(poly_type(Q) == TypeVector{2, 1, 1});

    const PolyFamily S = poly_vdc(PolyFamily::parse("{t^2}"), 0);
    REQUIRE(S.size() == 1);
    CHECK(S.members[0].poly.render() == "2*h1*t + h1^2");
    CHECK(poly_type(S) == TypeVector{1, 1});

    const PolyFamily L = poly_vdc(PolyFamily::parse("{t, 2t}"), 0);
    REQUIRE(L.size() == 1);
    CHECK(L.members[0].poly == tp("t"));
    CHECK(poly_type(L) == TypeVector{1, 1});

    CHECK_THROWS_AS(poly_vdc(PolyFamily::parse("{t}"), 0), DegenerateFamily);
    CHECK_THROWS_AS(poly_vdc(P, 3), DomainError);
}

TEST_CASE("pivot selection") {
    CHECK(choose_pivot(PolyFamily::parse("{t^2, t, 2t}")) == 1);
    CHECK(choose_pivot(PolyFamily::parse("{t^2, t^2 + t}")) == 1);
    CHECK(choose_pivot(PolyFamily::parse("{t^2, 2t^2}")) == 1);
    CHECK(choose_pivot(PolyFamily::parse("{t^3, t^3 + t, t^3 + t^2, t^3 + t^2 + 1}")) == 2);
    CHECK(choose_pivot(PolyFamily::parse("{t^2}")) == 0);
    CHECK_THROWS_AS(choose_pivot(PolyFamily::parse("{t, t^2}")), DomainError);
    CHECK_THROWS_AS(choose_pivot(PolyFamily::parse("{t, 2t}")), DomainError);
}

TEST_CASE("polynomial derivations") {
    const auto d = derivation_tree(PolyFamily::parse("{t, 2t, t^2}"));
    REQUIRE(d.steps.size() == 4);
    CHECK(d.steps[0].type == TypeVector{2, 1, 2});
    CHECK(d.steps[1].type == TypeVector{2, 1, 1});
    CHECK(d.steps[2].type == TypeVector{2, 1, 0});
    CHECK(d.steps[3].type == TypeVector{1, 7});
    CHECK(d.steps[0].members == std::vector<std::string>{"t^2", "t", "2*t"});
    CHECK(d.steps[0].pivot == 1);
    CHECK(d.outcome == DerivationOutcome::BaseCase);

    const auto leaf = derivation_tree(PolyFamily::parse("{t}"));
    CHECK(leaf.depth() == 0);
    CHECK(leaf.steps[0].pivot == -1);

    const auto sq = derivation_tree(PolyFamily::parse("{t^2}"));
    REQUIRE(sq.steps.size() == 2);
    CHECK(sq.steps[0].type == TypeVector{2, 1, 0});
    CHECK(sq.steps[1].type == TypeVector{1, 1});

    const auto j = to_json(d);
    CHECK(j["outcome"] == "base-case");
    CHECK(j["depth"] == 3);
    CHECK(j["root"]["type"] == nlohmann::json::array({2, 1, 2}));
    CHECK(j["root"]["children"][0]["type"] == nlohmann::json::array({2, 1, 1}));
    const std::string text = render_text(d);
    CHECK(text.find("(2,1,2) size 3 {t^2, t, 2*t} pivot #1\n  (2,1,1)") == 0);
}

TEST_CASE("degree-3 families outgrow any fixed depth") {
    // {t^3, 2t^3} reaches type (2,15,0) after four steps; from there each step doubles the family
    const PolyFamily P = PolyFamily::parse("{t^3, 2t^3}");
    const auto run = run_skeleton(DegreeSkeleton::from(P), {64, 1u << 13});
    REQUIRE(run.types.size() > 5);
    CHECK(run.types[4] == TypeVector{2, 15, 0});
    CHECK(run.outcome != DerivationOutcome::BaseCase);
    CHECK(run.outcome != DerivationOutcome::TypeIncrease);
    CHECK_THROWS_AS(derivation_tree(P), BudgetExceeded);
}

TEST_CASE("skeleton reproduces explicit types") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const PolyFamily P = random_family(rng, 3, 3);
        const DerivationLimits limits{64, 96};
        const Derivation d = derive(P, limits);
        const SkeletonRun s = run_skeleton(DegreeSkeleton::from(P), limits);
        const std::size_t n = std::min(d.steps.size(), s.types.size());
        for (std::size_t i = 0; i < n; ++i) CHECK(d.steps[i].type == s.types[i]);
        if (d.outcome == DerivationOutcome::BaseCase) {
            CHECK(s.outcome == DerivationOutcome::BaseCase);
            CHECK(s.depth() == d.depth());
        }
    }
}

TEST_CASE("pivot transforms decrease the type") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const PolyFamily P = random_family(rng, 4, 5);
        const Derivation d = derive(P, {64, 128});
        CHECK(d.outcome != DerivationOutcome::TypeIncrease);
        for (std::size_t i = 1; i < d.steps.size(); ++i) CHECK(d.steps[i].type < d.steps[i - 1].type);
    }
    // one explicit step stays essentially distinct
    for (int trial = 0; trial < 50; ++trial) {
        PolyFamily P = random_family(rng, 4, 4);
        std::stable_sort(P.members.begin(), P.members.end(),
                         [](const PolyMember& a, const PolyMember& b) { return a.poly.degree() > b.poly.degree(); });
        if (P.degree() < 2) continue;
        const PolyFamily Q = poly_vdc(P, choose_pivot(P));
        CHECK_NOTHROW(check_essentially_distinct(Q));
        CHECK(poly_type(Q) < poly_type(P));
    }
}

TEST_CASE("Hardy types") {
    CHECK(hardy_type(HardyFamily::parse("{t^(1/3), t^(5/2), t^(5/2) + t^(1/2), t^(5/2) + t^(7/3)}")) ==
          TypeVector{2, 2, 0, 1});
    CHECK(hardy_type(HardyFamily::parse("{t^(1/2)}")) == TypeVector{0, 1});
    CHECK(hardy_type(HardyFamily::parse("{t^(3/2), t^(3/2) + t^(1/4)}")) == TypeVector{1, 1, 0});
    CHECK(hardy_type(HardyFamily::parse("{t^(1/3), t^(1/2), t^(3/2)}")) == TypeVector{1, 1, 2});
    CHECK(hardy_type(HardyFamily::parse("{t log(t), t^2/log(t)}")) == TypeVector{1, 2, 0});
    CHECK(hardy_type(HardyFamily::parse("{t^sqrt(2), 2t^sqrt(2)}")) == TypeVector{1, 2, 0});
    CHECK_THROWS_AS(hardy_type(HardyFamily::parse("{t^2}")), DegenerateFamily);
    CHECK_THROWS_AS(hardy_type(HardyFamily::parse("{t^(1/2), t^(1/2)}")), DegenerateFamily);
    CHECK_THROWS_AS(hardy_type(HardyFamily::parse("{1/t}")), DegenerateFamily);
}

TEST_CASE("Hardy bands agree with polynomial types") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const PolyFamily P = random_family(rng, 4, 5);
        std::vector<HardyNormalForm> funcs;
        for (const auto& m : P.members) funcs.push_back(parse(m.label));
        TypeVector expected = poly_type(P);
        expected.push_back(0);
        CHECK(hardy_type(HardyFamily::from(funcs), true) == expected);
    }
}

TEST_CASE("shift expansions match (t+h)^a numerically") {
    const std::vector<std::string> cases{"t^(3/2)", "t log(t)", "t^(5/2) - 2t^(1/3)", "t^2/log(t)", "t^sqrt(2)"};
    for (const auto& s : cases) {
        const HardyNormalForm a = parse(s);
        const Expansion e = Expansion::from(a).shifted(1).shifted(2);
        for (double t : {1e4, 1e6}) {
            const double exact = a.evaluate_double(t + 3.0 + 5.0);
            CHECK(std::abs(eval_expansion(e, t, {3.0, 5.0}) - exact) <= 1e-9 * std::abs(exact) + 1e-6);
        }
    }
}

TEST_CASE("Hardy van der Corput step") {
    const HardyFamily F = HardyFamily::parse("{t^(1/3), t^(1/2), t^(3/2)}");
    const HardyFamily G = hardy_vdc(F, 0);
    REQUIRE(G.size() == 3);
    CHECK(G.members[0].label == "(t+h1)^(3/2) - t^(1/3)");
    CHECK(G.members[1].label == "t^(1/2) - t^(1/3)");
    CHECK(G.members[2].label == "t^(3/2) - t^(1/3)");
    CHECK(hardy_type(G) == TypeVector{1, 1, 1});
    CHECK_NOTHROW(check_nice(G));

    const HardyFamily S = hardy_vdc(HardyFamily::parse("{t^(3/2)}"), 0);
    REQUIRE(S.size() == 1);
    CHECK(S.members[0].value.leading_key() == GrowthKey{Surd(mpq_class(1, 2)), 0});
    CHECK(S.members[0].value.leading_coeff() == HPoly::variable(1).scaled(Surd(mpq_class(3, 2))));
    CHECK(hardy_type(S) == TypeVector{0, 1});

    const HardyFamily R = hardy_vdc(HardyFamily::parse("{t^(1/2), t^(1/3)}"), 1);
    REQUIRE(R.size() == 1);
    CHECK(R.members[0].label == "t^(1/2) - t^(1/3)");

    CHECK_THROWS_AS(hardy_vdc(HardyFamily::parse("{t^2, t^(1/2)}"), 0), DegenerateFamily);
    CHECK_THROWS_AS(hardy_vdc(HardyFamily::parse("{t^(3/2), t^(3/2) + t}"), 0), DegenerateFamily);
}

TEST_CASE("Hardy pivots and derivations") {
    CHECK(choose_hardy_pivot(HardyFamily::parse("{t^(3/2), t^(1/2), t^(1/3)}")) == 2);
    CHECK(choose_hardy_pivot(HardyFamily::parse("{t^(3/2), 2t^(3/2)}")) == 1);
    CHECK(choose_hardy_pivot(HardyFamily::parse("{t^(5/2), t^(5/2) + t^(1/2), t^(5/2) + t^(7/3)}")) == 2);
    CHECK_THROWS_AS(choose_hardy_pivot(HardyFamily::parse("{t^(1/2)}")), DomainError);
    CHECK_THROWS_AS(choose_hardy_pivot(HardyFamily::parse("{t^(1/2), t^(3/2)}")), DomainError);

    const auto d = derivation_tree(HardyFamily::parse("{t^(1/3), t^(1/2), t^(3/2)}"));
    CHECK(d.steps[0].type == TypeVector{1, 1, 2});
    CHECK(d.steps[1].type == TypeVector{1, 1, 1});
    CHECK(d.steps.back().type[0] == 0);
    for (std::size_t i = 1; i < d.steps.size(); ++i) CHECK(d.steps[i].type < d.steps[i - 1].type);

    for (const char* fam : {"{t^(3/2)}", "{t^(5/2)}", "{t log(t)^(-1) * t, t^(3/2)}", "{t^(3/2), 2t^(3/2)}"}) {
        const auto r = derive(HardyFamily::parse(fam), {64, 256});
        CHECK(r.outcome != DerivationOutcome::TypeIncrease);
        for (std::size_t i = 1; i < r.steps.size(); ++i) CHECK(r.steps[i].type < r.steps[i - 1].type);
    }
    CHECK(derivation_tree(HardyFamily::parse("{t^(5/2)}")).steps.back().type == TypeVector{0, 1});
}
