#include "hardy/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "hardy/averages.hpp"
#include "hardy/classify.hpp"
#include "hardy/error.hpp"
#include "hardy/parser.hpp"
#include "hardy/pet.hpp"
#include "hardy/seminorms.hpp"
#include "hardy/sequences.hpp"
#include "hardy/taylor.hpp"

namespace hardy {

namespace {

using cd = std::complex<double>;
using nlohmann::json;

System golden_rotation() { return System{make_rotation({Phase::from_surd((Surd::sqrt(5) - Surd(1)).divided_by(2))})}; }

Observable character(std::int64_t k) { return Observable{TorusCharacter{{k}}}; }

json complex_json(cd z) { return json::array({z.real(), z.imag()}); }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

json echo(const ExperimentOptions& o, std::int64_t N, std::size_t grid) {
    return {{"N", N}, {"grid", grid}, {"seed", o.seed}, {"serial", o.serial}};
}

// Max over the later half of the series below the max over the earlier half.
bool decreasing_halves(const std::vector<double>& v, double& early, double& late) {
    const std::size_t half = v.size() / 2;
    early = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(half));
    late = *std::max_element(v.begin() + static_cast<std::ptrdiff_t>(half), v.end());
    return late < early;
}

// Limit formula -------------------------------------------------------------

void limit_formula_into(ExperimentReport& r, const std::string& expr, const ExperimentOptions& o) {
    const std::int64_t N = o.N.value_or(100000);
    const std::size_t grid = o.grid.value_or(64);
    const System rot = golden_rotation();
    const auto cps = geometric_checkpoints(1000, N, 2);
    const auto cmp = furstenberg_compare(rot, {character(1), character(1)}, parse(expr), N, default_grid(rot, grid),
                                         cps, o.serial);
    for (std::size_t c = 0; c < cmp.hardy.N.size(); ++c) {
        r.checkpoints.push_back({{"a", expr},
                                 {"N", cmp.hardy.N[c]},
                                 {"hardy_mean", complex_json(cmp.hardy.mean[c])},
                                 {"linear_mean", complex_json(cmp.linear.mean[c])},
                                 {"sup_difference", cmp.sup_difference[c]},
                                 {"rms_difference", cmp.rms_difference[c]}});
    }
    const double last = cmp.sup_difference.back();
    r.check(expr + ": sup difference at N = " + std::to_string(N), last, "<= 0.05", last <= 0.05);
    double early = 0, late = 0;
    const bool dec = decreasing_halves(cmp.sup_difference, early, late);
    r.check(expr + ": max sup difference, later half vs earlier half of checkpoints", json::array({late, early}),
            "later < earlier", dec);
    r.config["N"] = N;
    r.config["grid"] = grid;
}

ExperimentReport limit_formula(const std::vector<std::string>& exprs, const std::string& name,
                               const ExperimentOptions& o) {
    ExperimentReport r;
    r.experiment = name;
    r.claim = "for a in GoodCond1, averages of prod_j f_j(T^{j[a(n)]}x) and of prod_j f_j(T^{jn}x) have the same limit";
    r.config = echo(o, o.N.value_or(100000), o.grid.value_or(64));
    r.config["system"] = "golden rotation";
    r.config["observables"] = {"e(x)", "e(x)"};
    r.config["a"] = exprs;
    r.tolerances = {{"sup_difference", 0.05}};
    for (const auto& e : exprs) limit_formula_into(r, e, o);
    return r;
}

// Product splitting ---------------------------------------------------------

ExperimentReport product_splitting(const ExperimentOptions& o) {
    const std::int64_t N = o.N.value_or(1000000);
    const std::size_t grid = o.grid.value_or(64);
    ExperimentReport r;
    r.experiment = "product-splitting";
    r.claim = "averages along several Hardy sequences of different growth split into the product of integrals";
    r.config = echo(o, N, grid);
    r.config["system"] = "golden rotation";
    r.config["sequences"] = {"[n^(1/2)]", "[n^(3/2)]"};
    r.config["observables"] = {"e(x)", "e(x)"};
    r.tolerances = {{"max_abs_average", 0.05}};
    const System rot = golden_rotation();
    AverageSpec spec;
    spec.systems = {rot, rot};
    spec.observables = {character(1), character(1)};
    spec.sequences = {IterateSequence::floor_multiple(parse("t^(1/2)"), N),
                      IterateSequence::floor_multiple(parse("t^(3/2)"), N)};
    spec.points = default_grid(rot, grid);
    spec.N = N;
    spec.checkpoints = dyadic_checkpoints(N);
    spec.serial = o.serial;
    const AverageSeries s = multi_average(spec);
    double worst = 0;
    for (std::size_t c = 0; c < s.N.size(); ++c) {
        double m = 0;
        for (cd z : s.values[c]) m = std::max(m, std::abs(z));
        r.checkpoints.push_back({{"N", s.N[c]}, {"mean", complex_json(s.mean[c])}, {"rms", s.rms[c]}, {"max_abs", m}});
        worst = m;
    }
    r.details["method"] = s.method;
    r.check("max over the grid of |average| at N = " + std::to_string(N), worst, "<= 0.05", worst <= 0.05);
    return r;
}

// Recurrence ----------------------------------------------------------------

ExperimentReport rotation_arc_quarter(const ExperimentOptions& o) {
    const std::int64_t N = o.N.value_or(1000000);
    const std::int64_t from = std::min<std::int64_t>(10000, N);
    ExperimentReport r;
    r.experiment = "rotation-arc-quarter";
    r.claim = "mu(A cap T^{-[a_1(n)]}A cap ... cap T^{-[a_l(n)]}A) averages to at least mu(A)^{l+1}";
    r.config = echo(o, N, 0);
    r.config["system"] = "golden rotation";
    r.config["set"] = "[0, 1/4)";
    r.config["sequences"] = {"[n^(1/2)]", "[n^(3/2)]"};
    r.tolerances = {{"final", 0.01}, {"floor_after", from}, {"floor_slack", 0.01}};
    std::vector<std::int64_t> every;
    for (std::int64_t n = from; n <= N; ++n) every.push_back(n);
    const auto report_points = geometric_checkpoints(16, N, 2);
    every.insert(every.end(), report_points.begin(), report_points.end());
    const RecurrenceSeries s = recurrence_average(golden_rotation(), MeasurableSet{Box{{{0.0, 0.25}}}},
                                                  {IterateSequence::floor_multiple(parse("t^(1/2)"), N),
                                                   IterateSequence::floor_multiple(parse("t^(3/2)"), N)},
                                                  N, every, 4096, o.serial);
    const std::set<std::int64_t> shown(report_points.begin(), report_points.end());
    double lowest = 1.0;
    for (std::size_t c = 0; c < s.N.size(); ++c) {
        if (shown.count(s.N[c])) r.checkpoints.push_back({{"N", s.N[c]}, {"average", s.average[c]}});
        if (s.N[c] >= from) lowest = std::min(lowest, s.average[c]);
    }
    r.details["method"] = s.method;
    r.details["lower_bound"] = s.lower_bound;
    const double final_gap = std::abs(s.average.back() - s.lower_bound);
    r.check("|average - (1/4)^3| at N = " + std::to_string(N), final_gap, "<= 0.01", final_gap <= 0.01);
    r.check("lowest running average for N >= " + std::to_string(from), lowest,
            ">= (1/4)^3 - 0.01 = " + fmt(s.lower_bound - 0.01), lowest >= s.lower_bound - 0.01);
    return r;
}

// Bad sequence --------------------------------------------------------------

ExperimentReport bad_parity(const ExperimentOptions& o) {
    const std::int64_t N = o.N.value_or(1000000);
    ExperimentReport r;
    r.experiment = "bad-parity";
    r.claim = "averages along a Bad sequence need not converge: f(T^{[2n + log n]}x) on Z/2 with f = (1, -1)";
    r.config = echo(o, N, 2);
    r.config["system"] = "Z/2";
    r.config["sequence"] = "[2n + log n]";
    r.tolerances = {{"min_oscillation", 0.1}};
    const System cyc{make_cyclic(2)};
    AverageSpec spec;
    spec.systems = {cyc};
    spec.observables = {Observable{FiniteVector{{1.0, -1.0}}}};
    spec.sequences = {IterateSequence::floor_multiple(parse("2t + log(t)"), N)};
    spec.points = default_grid(cyc, 2);
    spec.N = N;
    spec.checkpoints = geometric_checkpoints(100, N, 16);
    spec.serial = o.serial;
    const AverageSeries s = multi_average(spec);
    const OscillationReport osc = cesaro_diagnostic(s, 100, N, 0.1);
    for (std::size_t c = 0; c < s.N.size(); ++c) {
        r.checkpoints.push_back({{"N", s.N[c]}, {"mean", complex_json(s.mean[c])}, {"rms", s.rms[c]}});
    }
    r.details["oscillation"] = to_json(osc);
    r.check("largest oscillation over dyadic windows up to N = " + std::to_string(N), osc.max_osc, ">= 0.1",
            osc.max_osc >= 0.1);
    return r;
}

// Van der Corput ------------------------------------------------------------

ExperimentReport vdc_inequality(const ExperimentOptions& o) {
    const std::int64_t N = o.N.value_or(2000);
    const std::int64_t H = std::max<std::int64_t>(1, N / 100);
    ExperimentReport r;
    r.experiment = "vdc-inequality";
    r.claim = "|E_n v_n|^2 <= 4 E_h |E_n <v_{n+h}, v_n>| for bounded vector sequences, finite truncation";
    r.config = echo(o, N, 0);
    r.config["H"] = H;
    r.config["trials"] = 100;
    r.config["families"] = {"constant", "rotation e(n alpha)", "random unit modulus"};
    r.tolerances = {{"slack", 0.05}};
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t len = static_cast<std::size_t>(N + H);
    const double golden = (std::sqrt(5.0) - 1) / 2;
    std::vector<double> worst(3, -1e300);
    std::vector<int> held(3, 0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<std::vector<cd>>> families(3, std::vector<std::vector<cd>>(len));
        const std::size_t d = 1 + static_cast<std::size_t>(trial % 3);
        std::vector<cd> c(d);
        for (auto& z : c) z = std::polar(std::sqrt(unit(rng)), 2 * M_PI * unit(rng));
        const double alpha = trial == 0 ? golden : unit(rng);
        for (std::size_t n = 0; n < len; ++n) {
            families[0][n] = c;
            families[1][n] = {std::polar(1.0, 2 * M_PI * std::fmod(static_cast<double>(n) * alpha, 1.0))};
            std::vector<cd> v(3);
            for (auto& z : v) z = std::polar(1.0, 2 * M_PI * unit(rng));
            families[2][n] = v;
        }
        for (std::size_t f = 0; f < 3; ++f) {
            const VdcResult res = vdc_check(families[f], H, N);
            worst[f] = std::max(worst[f], res.lhs - 4 * res.rhs);
            held[f] += res.holds(0.05);
        }
    }
    const char* names[] = {"constant", "rotation", "random unit modulus"};
    for (std::size_t f = 0; f < 3; ++f) {
        r.details[names[f]] = {{"max_lhs_minus_4rhs", worst[f]}, {"trials_holding", held[f]}};
        r.check(std::string(names[f]) + ": max of lhs - 4 rhs over 100 trials", worst[f], "<= 0.05", held[f] == 100);
    }
    return r;
}

// Floor certification -------------------------------------------------------

ExperimentReport floor_certification(const ExperimentOptions& o) {
    const std::int64_t N = o.N.value_or(1000000);
    ExperimentReport r;
    r.experiment = "floor-certification";
    r.claim = "[n^(3/2)] is certified for every n <= N, perfect squares through the exact path";
    r.config = echo(o, N, 0);
    r.config["a"] = "t^(3/2)";
    FloorSequence seq;
    try {
        seq = floor_seq(parse("t^(3/2)"), 1, N, o.serial);
    } catch (const UndecidableFloor& e) {
        r.check("no undecidable floor", e.n(), "none", false);
        return r;
    }
    r.check("no undecidable floor", nullptr, "none", true);
    // integer oracle: [n^(3/2)] = isqrt(n^3)
    std::int64_t mismatches = 0;
    for (std::int64_t n = 1; n <= N; ++n) {
        mpz_class cube = mpz_class(static_cast<long>(n)) * n * n;
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), cube.get_mpz_t());
        if (root.get_si() != seq(n)) ++mismatches;
    }
    r.check("values differing from isqrt(n^3)", mismatches, "== 0", mismatches == 0);
    std::set<std::int64_t> exact(seq.exact_path.begin(), seq.exact_path.end());
    std::int64_t missing = 0, extra = 0;
    for (std::int64_t k = 2; k * k <= N; ++k) missing += exact.count(k * k) == 0;
    for (std::int64_t n : exact) {
        const auto k = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
        extra += k * k != n;
    }
    r.details["exact_path_count"] = exact.size();
    r.details["precision_bits_used"] = seq.precision_bits_used;
    r.check("perfect squares k^2 (k >= 2) not settled exactly", missing, "== 0", missing == 0);
    r.check("non-squares settled exactly", extra, "== 0", extra == 0);
    return r;
}

// Taylor windows ------------------------------------------------------------

ExperimentReport taylor_windows(const ExperimentOptions& o) {
    ExperimentReport r;
    r.experiment = "taylor-windows";
    r.claim = "[a(N+n)] equals the floor of the Taylor polynomial up to an error in {0, sign a^(k+1)} on the window";
    std::vector<std::int64_t> scales{10000, 100000, 1000000};
    if (o.N) scales = {*o.N};
    r.config = {{"a", {"t^(3/2)", "t*log(t)", "t^(5/2)"}}, {"N", scales}, {"serial", o.serial}};
    r.tolerances = {{"max_remainder", 1.0}};
    for (const std::string expr : {"t^(3/2)", "t*log(t)", "t^(5/2)"}) {
        const HardyNormalForm a = parse(expr);
        const ReductionPlan plan = plan_reduction(a);
        r.details[expr] = to_json(plan);
        for (std::int64_t N : scales) {
            const std::int64_t L = window_size(plan.window, N);
            const TaylorReport t = taylor_window_scan(a, N, plan.k, L, o.serial);
            r.checkpoints.push_back(to_json(t));
            r.check(expr + " at N = " + std::to_string(N) + " (k = " + std::to_string(t.k) + ", L = " +
                        std::to_string(L) + ")",
                    {{"max_remainder", t.max_remainder}, {"histogram", to_json(t)["histogram"]}},
                    "remainder < 1, errors in {0, " + std::to_string(t.sign) + "}", t.passed);
        }
    }
    return r;
}

// Classifier ----------------------------------------------------------------

ExperimentReport classifier_table(const ExperimentOptions& o) {
    ExperimentReport r;
    r.experiment = "classifier-table";
    r.claim = "convergence classes of the standard example sequences";
    r.config = {{"serial", o.serial}};
    const std::vector<std::pair<std::string, std::string>> table{
        {"n log(n)", "GoodCond1"},
        {"n^3/log(n)", "GoodCond1"},
        {"n^2 + n log(n)", "GoodCond1"},
        {"n^2 + sqrt(3) n", "GoodCond1"},
        {"n^2 + log(n)^2", "GoodCond1"},
        {"sqrt(5) n^2", "GoodCond2"},
        {"n/2 + log(n)", "GoodCond3"},
        {"sqrt(5) n^2 + log(n)", "Bad"},
        {"2n + log(n)", "Bad"},
    };
    for (const auto& [expr, expected] : table) {
        const ConvergenceClass c = classify_convergence(parse(expr));
        r.checkpoints.push_back({{"expression", expr}, {"class", c.describe()}});
        r.check(expr, c.name(), "== " + expected, c.name() == expected);
    }
    return r;
}

// PET -----------------------------------------------------------------------

ExperimentReport pet_golden(const ExperimentOptions& o) {
    ExperimentReport r;
    r.experiment = "pet-golden";
    r.claim = "types of the worked polynomial and Hardy families and of one van der Corput step";
    r.config = {{"serial", o.serial}};
    auto add = [&](const std::string& name, const TypeVector& got, const std::string& expected) {
        r.check(name, render_type(got), "== " + expected, render_type(got) == expected);
    };
    const PolyFamily P = PolyFamily::parse("{t, 2t, t^2}");
    add("type {t, 2t, t^2}", poly_type(P), "(2,1,2)");
    add("type after the step with p = t", poly_type(poly_vdc(P, 0)), "(2,1,1)");
    const HardyFamily F = HardyFamily::parse("{t^(1/3), t^(5/2), t^(5/2) + t^(1/2), t^(5/2) + t^(7/3)}");
    add("type {t^(1/3), t^(5/2), t^(5/2)+t^(1/2), t^(5/2)+t^(7/3)}", hardy_type(F), "(2,2,0,1)");
    const HardyFamily G = HardyFamily::parse("{t^(1/3), t^(1/2), t^(3/2)}");
    add("type {t^(1/3), t^(1/2), t^(3/2)}", hardy_type(G), "(1,1,2)");
    add("type after the step with a = t^(1/3)", hardy_type(hardy_vdc(G, 0)), "(1,1,1)");
    return r;
}

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

ExperimentReport type_decrease(const ExperimentOptions& o) {
    const std::int64_t count = o.N.value_or(500);
    const DerivationLimits explicit_limits{64, 64};
    const DerivationLimits skeleton_limits{64, 1024};
    ExperimentReport r;
    r.experiment = "type-decrease";
    r.claim = "every pivot step lowers the type, so every derivation terminates";
    r.config = {{"families", count}, {"max_degree", 4}, {"max_size", 5}, {"seed", o.seed},
                {"explicit_limits", {explicit_limits.max_depth, explicit_limits.max_members}},
                {"skeleton_limits", {skeleton_limits.max_depth, skeleton_limits.max_members}}};
    r.tolerances = {{"max_depth", 64}};
    std::mt19937_64 rng(o.seed);
    std::int64_t edges = 0, bad_edges = 0, disagreements = 0;
    std::map<std::string, std::int64_t> outcomes;
    std::size_t deepest = 0;
    json examples = json::array();
    for (std::int64_t i = 0; i < count; ++i) {
        const PolyFamily P = random_family(rng, 4, 5);
        const Derivation d = derive(P, explicit_limits);
        for (std::size_t s = 1; s < d.steps.size(); ++s) {
            ++edges;
            bad_edges += !(d.steps[s].type < d.steps[s - 1].type);
        }
        bad_edges += d.outcome == DerivationOutcome::TypeIncrease;
        const SkeletonRun run = run_skeleton(DegreeSkeleton::from(P), skeleton_limits);
        for (std::size_t s = 1; s < run.types.size(); ++s) {
            ++edges;
            bad_edges += !(run.types[s] < run.types[s - 1]);
        }
        const std::size_t n = std::min(d.steps.size(), run.types.size());
        for (std::size_t s = 0; s < n; ++s) disagreements += d.steps[s].type != run.types[s];
        ++outcomes[to_string(run.outcome)];
        if (run.outcome == DerivationOutcome::BaseCase) deepest = std::max(deepest, run.depth());
        if (run.outcome != DerivationOutcome::BaseCase && examples.size() < 5) {
            std::vector<std::string> members;
            for (const auto& m : P.members) members.push_back(m.poly.render());
            examples.push_back({{"family", members},
                                {"outcome", to_string(run.outcome)},
                                {"depth_reached", run.depth()},
                                {"last_type", render_type(run.types.back())}});
        }
    }
    r.details["outcomes"] = outcomes;
    r.details["deepest_terminating_depth"] = deepest;
    r.details["unfinished_examples"] = examples;
    r.check("type edges that fail to decrease (of " + std::to_string(edges) + ")", bad_edges, "== 0", bad_edges == 0);
    r.check("explicit and skeleton types disagreeing", disagreements, "== 0", disagreements == 0);
    const std::int64_t finished = outcomes["base-case"];
    r.check("derivations reaching the base case within depth 64", finished, "== " + std::to_string(count),
            finished == count);
    return r;
}

// Seminorms -----------------------------------------------------------------

ExperimentReport seminorm_oracle(const ExperimentOptions& o) {
    const std::int64_t trials = o.N.value_or(100);
    ExperimentReport r;
    r.experiment = "seminorm-oracle";
    r.claim = "recursive seminorms equal Gowers norms on Z/m, and |||f|||_{l+1}^2 = |||f (x) conj f|||_l";
    r.config = {{"m", "2..32"}, {"ell", {1, 2, 3}}, {"trials", trials}, {"seed", o.seed}};
    r.tolerances = {{"difference", 1e-9}};
    std::mt19937_64 rng(o.seed);
    std::normal_distribution<double> gauss;
    double worst = 0, worst_identity = 0;
    std::int64_t compared = 0, identities = 0;
    for (std::int64_t m = 2; m <= 32; ++m) {
        const System cyc{make_cyclic(m)};
        for (int ell = 1; ell <= 3; ++ell) {
            double local = 0;
            for (std::int64_t t = 0; t < trials; ++t) {
                std::vector<cd> f(static_cast<std::size_t>(m));
                for (auto& z : f) z = {gauss(rng), gauss(rng)};
                const double brute = gowers_bruteforce(f, ell).value;
                const double rec = seminorm_recursive(cyc, Observable{FiniteVector{f}}, ell).value;
                local = std::max(local, std::abs(brute - rec));
                ++compared;
                // the identity needs brute force at ell + 1
                const auto side = static_cast<std::uint64_t>(m);
                std::uint64_t cube = 1;
                for (int i = 0; i < ell + 2; ++i) cube *= side;
                if (t < 5 && cube <= kGowersBudget) {
                    const ProductIdentity id = product_identity_check(f, ell);
                    worst_identity = std::max(worst_identity, std::abs(id.lhs - id.rhs));
                    ++identities;
                }
            }
            worst = std::max(worst, local);
            r.checkpoints.push_back({{"m", m}, {"ell", ell}, {"max_difference", local}});
        }
    }
    r.details["comparisons"] = compared;
    r.details["identity_checks"] = identities;
    r.check("max |recursive - brute force| over " + std::to_string(compared) + " cases", worst, "<= 1e-9",
            worst <= 1e-9);
    r.check("max |lhs - rhs| of the product identity over " + std::to_string(identities) + " cases", worst_identity,
            "<= 1e-9", worst_identity <= 1e-9);
    return r;
}

}  // namespace

bool ExperimentReport::passed() const {
    return !verdicts.empty() && std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

void ExperimentReport::check(const std::string& name, const nlohmann::json& observed, const std::string& criterion,
                             bool pass) {
    verdicts.push_back({name, observed, criterion, pass});
}

nlohmann::json ExperimentReport::to_json() const {
    json v = json::array();
    for (const auto& x : verdicts) {
        v.push_back({{"name", x.name}, {"observed", x.observed}, {"criterion", x.criterion}, {"pass", x.pass}});
    }
    return {{"experiment", experiment}, {"claim", claim},      {"config_echo", config}, {"checkpoints", checkpoints},
            {"verdicts", v},            {"tolerances", tolerances}, {"details", details},    {"passed", passed()}};
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = {
        {"pet-golden", "pet-type", "worked PET types", pet_golden},
        {"classifier-table", "classify", "convergence classes of the example sequences", classifier_table},
        {"type-decrease", "pet-tree", "type decrease and termination over random families", type_decrease},
        {"seminorm-oracle", "seminorm", "recursive seminorm against brute force", seminorm_oracle},
        {"furstenberg-compare-t32", "avg", "limit formula for t^(3/2)",
         [](const ExperimentOptions& o) { return limit_formula({"t^(3/2)"}, "furstenberg-compare-t32", o); }},
        {"furstenberg-compare-tlogt", "avg", "limit formula for t log t",
         [](const ExperimentOptions& o) { return limit_formula({"t*log(t)"}, "furstenberg-compare-tlogt", o); }},
        {"limit-formula", "avg", "limit formula for t^(3/2) and t log t",
         [](const ExperimentOptions& o) { return limit_formula({"t^(3/2)", "t*log(t)"}, "limit-formula", o); }},
        {"product-splitting", "avg", "several sequences split into integrals", product_splitting},
        {"rotation-arc-quarter", "recur", "recurrence lower bound on the golden rotation", rotation_arc_quarter},
        {"taylor-windows", "taylor", "Taylor window floor identity", taylor_windows},
        {"bad-parity", "avg", "oscillation along [2n + log n]", bad_parity},
        {"vdc-inequality", "avg", "finite van der Corput inequality", vdc_inequality},
        {"floor-certification", "taylor", "certified floors of n^(3/2)", floor_certification},
    };
    return all;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : presets()) {
        if (p.name == name) return p;
    }
    throw DomainError("unknown preset " + name);
}

}  // namespace hardy
