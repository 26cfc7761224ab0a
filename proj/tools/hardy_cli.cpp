#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hardy/averages.hpp"
#include "hardy/classify.hpp"
#include "hardy/equidist.hpp"
#include "hardy/error.hpp"
#include "hardy/experiments.hpp"
#include "hardy/parser.hpp"
#include "hardy/pet.hpp"
#include "hardy/seminorms.hpp"
#include "hardy/systems.hpp"
#include "hardy/taylor.hpp"

using namespace hardy;
using json = nlohmann::json;

namespace {

constexpr int kRuntimeExit = 1;
constexpr int kUsageExit = 2;

// Bad flags or descriptors; exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("expected an integer for " + what + ", got '" + text + "'");
}

// Accepts 1000000 and 1e6.
std::int64_t parse_count(const std::string& text, const std::string& what) {
    if (text.find_first_of("eE") == std::string::npos) return parse_int(text, what);
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size() && v == std::floor(v) && v >= 0 && v < 9e18) return static_cast<std::int64_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError("expected a count for " + what + ", got '" + text + "'");
}

// A constant expression: 1/3, 0.25, sqrt(2)/2, or "golden" for (sqrt(5)-1)/2.
Surd parse_constant(const std::string& text) {
    if (text == "golden") return (Surd::sqrt(5) - Surd(1)).divided_by(2);
    const HardyNormalForm f = parse(text);
    Surd c;
    for (const auto& term : f.terms()) {
        if (!term.alpha.is_zero() || term.beta != 0) throw UsageError("'" + text + "' is not a constant");
        c += term.coeff;
    }
    return c;
}

std::vector<Surd> parse_constants(const std::string& text) {
    std::vector<Surd> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_constant(item));
    return out;
}

std::vector<std::int64_t> parse_ints(const std::string& text, const std::string& what) {
    std::vector<std::int64_t> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_int(item, what));
    return out;
}

std::pair<std::string, std::string> kind_and_args(const std::string& descriptor) {
    const auto colon = descriptor.find(':');
    if (colon == std::string::npos) return {descriptor, ""};
    return {descriptor.substr(0, colon), descriptor.substr(colon + 1)};
}

// Exact form of a rotation or affine descriptor, used by the frequency search.
struct ExactSystem {
    System system;
    std::optional<ExactAffine> exact;
};

ExactSystem parse_system(const std::string& descriptor) {
    const auto [kind, args] = kind_and_args(descriptor);
    if (kind == "rotation") {
        const auto alpha = parse_constants(args);
        std::vector<Phase> phases;
        for (const auto& a : alpha) phases.push_back(Phase::from_surd(a));
        IntMatrix I(alpha.size(), std::vector<std::int64_t>(alpha.size(), 0));
        for (std::size_t i = 0; i < alpha.size(); ++i) I[i][i] = 1;
        return {System{make_rotation(phases)}, ExactAffine{I, alpha}};
    }
    if (kind == "affine") {
        // affine:1,0;2,1:b1,b2 with rows split by ';' or '/'
        const auto colon = args.find(':');
        if (colon == std::string::npos) throw UsageError("affine needs rows and a translation: affine:1,0/2,1:b1,b2");
        std::string rows = args.substr(0, colon);
        std::replace(rows.begin(), rows.end(), '/', ';');
        IntMatrix S;
        for (const auto& row : split(rows, ';')) S.push_back(parse_ints(row, "matrix entry"));
        const auto b = parse_constants(args.substr(colon + 1));
        std::vector<Phase> phases;
        for (const auto& c : b) phases.push_back(Phase::from_surd(c));
        try {
            return {System{make_affine(S, phases)}, ExactAffine{S, b}};
        } catch (const Error& e) {
            throw UsageError(std::string("affine: ") + e.what());
        }
    }
    if (kind == "heisenberg") {
        const auto beta = parse_constants(args);
        if (beta.size() != 3) throw UsageError("heisenberg takes three parameters");
        return {System{Heisenberg{Lift::from_surd(beta[0]), Lift::from_surd(beta[1]), Lift::from_surd(beta[2])}}, {}};
    }
    if (kind == "cyclic") {
        const std::int64_t m = parse_int(args, "cyclic modulus");
        if (m < 1) throw UsageError("cyclic modulus must be positive");
        return {System{make_cyclic(m)}, {}};
    }
    if (kind == "product") {
        Product p;
        for (const auto& factor : split(args, '|')) p.factors.push_back(parse_system(factor).system);
        if (p.factors.empty()) throw UsageError("empty product");
        return {System{p}, {}};
    }
    throw UsageError("unknown system '" + descriptor + "' (rotation:, affine:, heisenberg:, cyclic:, product:)");
}

std::complex<double> parse_value(const std::string& text) {
    // e(p) is the root of unity exp(2 pi i p)
    if (text.size() > 3 && text.compare(0, 2, "e(") == 0 && text.back() == ')') {
        return std::polar(1.0, 2 * M_PI * parse_constant(text.substr(2, text.size() - 3)).to_double());
    }
    return parse_constant(text).to_double();
}

Observable parse_observable(const std::string& descriptor) {
    const auto [kind, args] = kind_and_args(descriptor);
    if (kind == "char") return Observable{TorusCharacter{parse_ints(args, "frequency")}};
    if (kind == "hchar") {
        const auto k = parse_ints(args, "frequency");
        if (k.size() != 2) throw UsageError("hchar takes two frequencies");
        return Observable{HeisenbergHorizontalCharacter{k[0], k[1]}};
    }
    if (kind == "vec") {
        FiniteVector v;
        for (const auto& item : split(args, ',')) v.values.push_back(parse_value(item));
        return Observable{v};
    }
    if (kind == "const") return Observable{Constant{args.empty() ? 1.0 : parse_value(args)}};
    if (kind == "tensor") {
        Tensor t;
        for (const auto& factor : split(args, '|')) t.factors.push_back(parse_observable(factor));
        return Observable{t};
    }
    throw UsageError("unknown observable '" + descriptor + "' (char:, hchar:, vec:, const:, tensor:)");
}

MeasurableSet parse_set(const std::string& descriptor, const System& s) {
    const auto [kind, args] = kind_and_args(descriptor);
    if (kind == "box") {
        Box b;
        for (const auto& side : split(args, ';')) {
            const auto ends = parse_constants(side);
            if (ends.size() != 2) throw UsageError("box sides are lo,hi");
            b.sides.emplace_back(ends[0].to_double(), ends[1].to_double());
        }
        return MeasurableSet{b};
    }
    if (kind == "subset") {
        const auto* cyc = std::get_if<FiniteCyclic>(&s.kind);
        if (!cyc) throw UsageError("subset: needs a cyclic system");
        CyclicSubset c{std::vector<bool>(static_cast<std::size_t>(cyc->m), false)};
        for (const auto r : parse_ints(args, "residue")) {
            if (r < 0 || r >= cyc->m) throw UsageError("residue out of range");
            c.members[static_cast<std::size_t>(r)] = true;
        }
        return MeasurableSet{c};
    }
    throw UsageError("unknown set '" + descriptor + "' (box:, subset:)");
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

struct Common {
    std::string N;
    std::size_t grid = 0;
    std::uint64_t seed = 1;
    bool serial = false;
    std::string out;
    std::string preset;
    bool json_stdout = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--N", c.N, "Length of the average or the base point (1e6 allowed)");
    cmd->add_option("--grid", c.grid, "Number of initial points");
    cmd->add_option("--seed", c.seed, "Seed for randomized corpora");
    cmd->add_flag("--serial", c.serial, "Single-threaded, byte-identical output");
    cmd->add_option("--out", c.out, "Write the JSON report here");
    cmd->add_option("--preset", c.preset, "Run a named experiment");
    cmd->add_flag("--json", c.json_stdout, "Print the JSON report on stdout");
}

void write_report(const json& report, const Common& c, const std::string& text = {}) {
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw std::runtime_error("cannot write " + c.out);
        f << report.dump(2) << '\n';
    }
    if (c.json_stdout || text.empty()) {
        if (c.out.empty() || c.json_stdout) std::cout << report.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

// Returns true when a preset ran.
bool run_preset(const std::string& command, const Common& c) {
    if (c.preset.empty()) return false;
    const Preset* p = nullptr;
    try {
        p = &find_preset(c.preset);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    if (p->command != command) {
        throw UsageError("preset '" + c.preset + "' belongs to the '" + p->command + "' command");
    }
    ExperimentOptions o;
    if (!c.N.empty()) o.N = parse_count(c.N, "--N");
    if (c.grid) o.grid = c.grid;
    o.seed = c.seed;
    o.serial = c.serial;
    const ExperimentReport r = p->run(o);
    std::ostringstream text;
    text << (r.passed() ? "PASS " : "FAIL ") << r.experiment << ": " << r.claim << '\n';
    for (const auto& v : r.verdicts) {
        text << "  " << (v.pass ? "ok   " : "MISS ") << v.name << ": " << v.observed.dump() << " (" << v.criterion
             << ")\n";
    }
    write_report(r.to_json(), c, text.str());
    return true;
}

std::int64_t count_or(const Common& c, std::int64_t fallback) {
    return c.N.empty() ? fallback : parse_count(c.N, "--N");
}

// Commands ---------------------------------------------------------------------

void cmd_classify(const std::vector<std::string>& exprs, const Common& c) {
    json rows = json::array();
    std::ostringstream text;
    for (const auto& e : exprs) {
        const HardyNormalForm a = parse(e);
        const ConvergenceClass cls = classify_convergence(a);
        const RecurrenceVerdict rec = classify_recurrence(a);
        const bool g = in_class_G(a);
        rows.push_back({{"expression", e},
                        {"normal_form", a.render()},
                        {"convergence", cls.name()},
                        {"detail", cls.describe()},
                        {"recurrence", to_string(rec)},
                        {"in_G", g}});
        text << e << "\t" << cls.describe() << "\t" << to_string(rec) << "\t" << (g ? "in G" : "not in G") << '\n';
    }
    write_report(json{{"experiment", "classify"}, {"rows", rows}}, c, exprs.empty() ? "" : text.str());
}

void cmd_avg(const std::string& system_desc, std::vector<std::string> obs, const std::vector<std::string>& seqs,
             bool furstenberg, const std::string& csv, const Common& c) {
    if (seqs.empty()) throw UsageError("avg needs --seq or --preset");
    const System s = parse_system(system_desc).system;
    if (obs.empty()) obs.assign(seqs.size(), std::holds_alternative<FiniteCyclic>(s.kind) ? "vec:1,-1" : "char:1");
    if (obs.size() != seqs.size()) throw UsageError("give one --obs per --seq");
    std::vector<Observable> observables;
    for (const auto& o : obs) {
        observables.push_back(parse_observable(o));
        check_shape(s, observables.back());
    }
    const std::int64_t N = count_or(c, 100000);
    const auto points = default_grid(s, c.grid ? c.grid : 64);
    const auto checkpoints = dyadic_checkpoints(N);
    json report{{"experiment", "avg"},
                {"config_echo",
                 {{"system", system_desc}, {"observables", obs}, {"sequences", seqs}, {"N", N}, {"grid", points.size()}}}};
    if (furstenberg) {
        if (seqs.size() != 1) throw UsageError("--furstenberg compares a single sequence");
        const auto cmp = furstenberg_compare(s, observables, parse(seqs[0]), N, points, checkpoints, c.serial);
        json rows = json::array();
        for (std::size_t i = 0; i < cmp.hardy.N.size(); ++i) {
            rows.push_back({{"N", cmp.hardy.N[i]},
                            {"hardy_mean", complex_json(cmp.hardy.mean[i])},
                            {"linear_mean", complex_json(cmp.linear.mean[i])},
                            {"sup_difference", cmp.sup_difference[i]},
                            {"rms_difference", cmp.rms_difference[i]}});
        }
        report["checkpoints"] = rows;
        if (!csv.empty()) {
            std::ofstream f(csv);
            write_csv(cmp.hardy, f);
        }
    } else {
        AverageSpec spec;
        spec.systems.assign(seqs.size(), s);
        spec.observables = observables;
        for (const auto& e : seqs) spec.sequences.push_back(IterateSequence::floor_multiple(parse(e), N));
        spec.points = points;
        spec.N = N;
        spec.checkpoints = checkpoints;
        spec.serial = c.serial;
        const AverageSeries series = multi_average(spec);
        report["series"] = to_json(series);
        if (!csv.empty()) {
            std::ofstream f(csv);
            write_csv(series, f);
        }
    }
    write_report(report, c);
}

void cmd_recur(const std::string& system_desc, const std::string& set_desc, const std::vector<std::string>& seqs,
               const Common& c) {
    if (seqs.empty()) throw UsageError("recur needs --seq or --preset");
    const System s = parse_system(system_desc).system;
    const MeasurableSet A = parse_set(set_desc, s);
    const std::int64_t N = count_or(c, 1000000);
    std::vector<IterateSequence> sequences;
    for (const auto& e : seqs) sequences.push_back(IterateSequence::floor_multiple(parse(e), N));
    const RecurrenceSeries r =
        recurrence_average(s, A, sequences, N, dyadic_checkpoints(N), c.grid ? c.grid : 4096, c.serial);
    write_report({{"experiment", "recur"},
                  {"config_echo", {{"system", system_desc}, {"set", set_desc}, {"sequences", seqs}, {"N", N}}},
                  {"series", to_json(r)}},
                 c);
}

void cmd_seminorm(const std::string& system_desc, const std::string& obs, int ell, std::int64_t n_trunc,
                  const Common& c) {
    if (obs.empty()) throw UsageError("seminorm needs --obs or --preset");
    const System s = parse_system(system_desc).system;
    const Observable f = parse_observable(obs);
    check_shape(s, f);
    json report{{"experiment", "seminorm"},
                {"config_echo", {{"system", system_desc}, {"observable", obs}, {"ell", ell}}}};
    report["recursive"] = to_json(seminorm_recursive(s, f, ell, n_trunc, c.grid ? c.grid : 1024));
    if (const auto* v = std::get_if<FiniteVector>(&f.kind); v && std::holds_alternative<FiniteCyclic>(s.kind)) {
        report["bruteforce"] = to_json(gowers_bruteforce(v->values, ell));
    }
    write_report(report, c);
}

bool all_polynomial(const std::vector<HardyNormalForm>& fs) {
    for (const auto& f : fs) {
        if (!f.is_polynomial()) return false;
    }
    return true;
}

void cmd_pet_type(const std::string& family, bool force_hardy, std::optional<std::size_t> vdc, const Common& c) {
    const auto members = parse_family(family);
    TypeVector type;
    json report{{"experiment", "pet-type"}, {"config_echo", {{"family", family}}}};
    if (!force_hardy && all_polynomial(members)) {
        PolyFamily P = PolyFamily::from(members);
        check_essentially_distinct(P);
        if (vdc) {
            if (*vdc >= P.size()) throw UsageError("--vdc index out of range");
            P = poly_vdc(P, *vdc);
        }
        type = poly_type(P);
        report["kind"] = "polynomial";
    } else {
        HardyFamily F = HardyFamily::from(members);
        check_nice(F);
        if (vdc) {
            if (*vdc >= F.size()) throw UsageError("--vdc index out of range");
            F = hardy_vdc(F, *vdc);
        }
        type = hardy_type(F);
        report["kind"] = "hardy";
    }
    report["type"] = render_type(type);
    write_report(report, c, render_type(type) + "\n");
}

void cmd_pet_tree(const std::string& family, bool force_hardy, const DerivationLimits& limits, const Common& c) {
    const auto members = parse_family(family);
    Derivation d;
    if (!force_hardy && all_polynomial(members)) {
        const PolyFamily P = PolyFamily::from(members);
        check_essentially_distinct(P);
        d = derive(P, limits);
    } else {
        const HardyFamily F = HardyFamily::from(members);
        check_nice(F);
        d = derive(F, limits);
    }
    json report{{"experiment", "pet-tree"},
                {"config_echo", {{"family", family}, {"max_depth", limits.max_depth}, {"max_members", limits.max_members}}},
                {"derivation", to_json(d)}};
    write_report(report, c, render_text(d));
}

void cmd_taylor(const std::string& expr, std::optional<int> k, std::optional<std::int64_t> L, const Common& c) {
    const HardyNormalForm a = parse(expr);
    const std::int64_t N = count_or(c, 100000);
    const ReductionPlan plan = k ? window_length(a, *k) : plan_reduction(a);
    const std::int64_t length = L ? *L : window_size(plan.window, N);
    const TaylorReport r = taylor_window_scan(a, N, plan.k, length, c.serial);
    json report{{"experiment", "taylor"},
                {"config_echo", {{"expression", expr}, {"N", N}, {"L", length}}},
                {"plan", to_json(plan)},
                {"report", to_json(r)},
                {"passed", r.passed}};
    write_report(report, c);
}

void cmd_equidist(const std::string& system_desc, const std::string& point, std::optional<int> d, std::int64_t M,
                  std::optional<double> threshold, const std::string& obs, const std::string& poly, const Common& c) {
    const ExactSystem es = parse_system(system_desc);
    const std::int64_t N = count_or(c, 10000);
    json report{{"experiment", "equidist"},
                {"config_echo", {{"system", system_desc}, {"point", point}, {"N", N}, {"M", M}}}};
    if (es.exact) {
        std::vector<Surd> x(es.exact->dim());
        if (!point.empty()) x = parse_constants(point);
        if (x.size() != es.exact->dim()) throw UsageError("point has the wrong dimension");
        const int degree = d ? *d : static_cast<int>(es.exact->dim());
        const FrequencyHit best = frequency_minimum(*es.exact, x, degree, N, M, c.serial);
        report["minimum"] = to_json(best);
        const double limit = threshold ? *threshold : static_cast<double>(M);
        report["threshold"] = limit;
        report["obstruction_found"] = best.norm <= limit;
    } else if (obs.empty()) {
        throw UsageError("frequency search needs a rotation or affine system");
    }
    if (!obs.empty()) {
        const Observable F = parse_observable(obs);
        check_shape(es.system, F);
        IntPoly p;
        for (const auto v : parse_ints(poly.empty() ? "0,1" : poly, "polynomial coefficient")) p.emplace_back(v);
        const auto grid = default_grid(es.system, c.grid ? c.grid : 64);
        report["uniform_deviation"] = uniform_equidist_check(es.system, F, p, N, 2 * N, grid, c.serial);
        report["config_echo"]["observable"] = obs;
        report["config_echo"]["polynomial"] = render_int_poly(p);
    }
    write_report(report, c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiple ergodic averages along Hardy sequences"};
    app.require_subcommand(1);

    Common common;

    auto* classify = app.add_subcommand("classify", "Convergence and recurrence class of each expression");
    std::vector<std::string> exprs;
    classify->add_option("expressions", exprs, "Expressions in t or n, e.g. \"n^(3/2)\"");
    add_common(classify, common);

    auto* avg = app.add_subcommand("avg", "Multiple ergodic average along [a_i(n)]");
    std::string avg_system = "rotation:golden";
    std::vector<std::string> avg_obs, avg_seqs;
    bool furstenberg = false;
    std::string csv;
    avg->add_option("--system", avg_system, "rotation:a,.. | affine:1,0/2,1:b1,b2 | heisenberg:b1,b2,b3 | cyclic:m");
    avg->add_option("--obs", avg_obs, "char:k,.. | hchar:k1,k2 | vec:v,.. | const:c (one per --seq)");
    avg->add_option("--seq", avg_seqs, "Hardy expression, repeatable");
    avg->add_flag("--furstenberg", furstenberg, "Compare with the linear average n");
    avg->add_option("--csv", csv, "Write the series as CSV");
    add_common(avg, common);

    auto* recur = app.add_subcommand("recur", "Averaged measure of A and its returns along [a_i(n)]");
    std::string recur_system = "rotation:golden", recur_set = "box:0,1/4";
    std::vector<std::string> recur_seqs;
    recur->add_option("--system", recur_system, "System descriptor");
    recur->add_option("--set", recur_set, "box:lo,hi;.. | subset:r,..");
    recur->add_option("--seq", recur_seqs, "Hardy expression, repeatable");
    add_common(recur, common);

    auto* seminorm = app.add_subcommand("seminorm", "Host-Kra seminorm of an observable");
    std::string sem_system = "cyclic:5", sem_obs;
    int ell = 2;
    std::int64_t n_trunc = 256;
    seminorm->add_option("--system", sem_system, "System descriptor");
    seminorm->add_option("--obs", sem_obs, "Observable descriptor");
    seminorm->add_option("--ell", ell, "Seminorm order")->check(CLI::Range(1, 8));
    seminorm->add_option("--n-trunc", n_trunc, "Truncation of the outer limits");
    add_common(seminorm, common);

    auto* pet_type = app.add_subcommand("pet-type", "PET type of a family, e.g. \"{t,2t,t^2}\"");
    std::string family;
    bool force_hardy = false;
    std::optional<std::size_t> vdc;
    pet_type->add_option("family", family, "Family of functions");
    pet_type->add_flag("--hardy", force_hardy, "Use the Hardy type even for polynomials");
    pet_type->add_option("--vdc", vdc, "Apply one van der Corput step with this pivot index first");
    add_common(pet_type, common);

    auto* pet_tree = app.add_subcommand("pet-tree", "Full PET derivation of a family");
    DerivationLimits limits;
    pet_tree->add_option("family", family, "Family of functions");
    pet_tree->add_flag("--hardy", force_hardy, "Use the Hardy scheme even for polynomials");
    pet_tree->add_option("--max-depth", limits.max_depth, "Depth guard");
    pet_tree->add_option("--max-members", limits.max_members, "Member budget");
    add_common(pet_tree, common);

    auto* taylor = app.add_subcommand("taylor", "Taylor window check of [a(N+n)]");
    std::string taylor_expr;
    std::optional<int> order;
    std::optional<std::int64_t> L;
    taylor->add_option("expression", taylor_expr, "Hardy expression");
    taylor->add_option("--k", order, "Taylor order (default: smallest admissible)");
    taylor->add_option("--L", L, "Window length (default: from the window function)");
    add_common(taylor, common);

    auto* equidist = app.add_subcommand("equidist", "Frequency obstruction search and uniform equidistribution");
    std::string eq_system = "affine:1,0/2,1:golden,golden", eq_point, eq_obs, eq_poly;
    std::optional<int> degree;
    std::int64_t M = 5;
    std::optional<double> threshold;
    equidist->add_option("--system", eq_system, "rotation:.. or affine:rows:b");
    equidist->add_option("--point", eq_point, "Initial point x1,x2,..");
    equidist->add_option("--d", degree, "Maximal orbit polynomial degree");
    equidist->add_option("--M", M, "Frequency box |kappa|_inf <= M");
    equidist->add_option("--threshold", threshold, "Report an obstruction when the norm is at most this (default M)");
    equidist->add_option("--obs", eq_obs, "Also measure the uniform deviation of this observable");
    equidist->add_option("--poly", eq_poly, "Integer polynomial p for the uniform check, coefficients c0,c1,..");
    add_common(equidist, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageExit;
    }

    try {
        if (classify->parsed()) {
            if (!run_preset("classify", common)) cmd_classify(exprs, common);
        } else if (avg->parsed()) {
            if (!run_preset("avg", common)) cmd_avg(avg_system, avg_obs, avg_seqs, furstenberg, csv, common);
        } else if (recur->parsed()) {
            if (!run_preset("recur", common)) cmd_recur(recur_system, recur_set, recur_seqs, common);
        } else if (seminorm->parsed()) {
            if (!run_preset("seminorm", common)) cmd_seminorm(sem_system, sem_obs, ell, n_trunc, common);
        } else if (pet_type->parsed()) {
            if (!run_preset("pet-type", common)) {
                if (family.empty()) throw UsageError("pet-type needs a family");
                cmd_pet_type(family, force_hardy, vdc, common);
            }
        } else if (pet_tree->parsed()) {
            if (!run_preset("pet-tree", common)) {
                if (family.empty()) throw UsageError("pet-tree needs a family");
                cmd_pet_tree(family, force_hardy, limits, common);
            }
        } else if (taylor->parsed()) {
            if (!run_preset("taylor", common)) {
                if (taylor_expr.empty()) throw UsageError("taylor needs an expression");
                cmd_taylor(taylor_expr, order, L, common);
            }
        } else if (equidist->parsed()) {
            if (!run_preset("equidist", common)) {
                cmd_equidist(eq_system, eq_point, degree, M, threshold, eq_obs, eq_poly, common);
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageExit;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsageExit;
    } catch (const UnsupportedForm& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUsageExit;
    } catch (const ShapeMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageExit;
    } catch (const DegenerateFamily& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageExit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeExit;
    }
    return 0;
}
