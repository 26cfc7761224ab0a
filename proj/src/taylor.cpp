#include "hardy/taylor.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/classify.hpp"
#include "hardy/error.hpp"
#include "hardy/parallel.hpp"
#include "hardy/sequences.hpp"

namespace hardy {

namespace {

LogMonomial key_of(const HardyNormalForm& f) {
    const Term& t = f.leading();
    return LogMonomial{t.alpha, mpq_class(t.beta)};
}

LogMonomial scaled(const LogMonomial& m, const mpq_class& r) { return LogMonomial{m.gamma * Surd(r), m.delta * r}; }

std::string derivative_name(int k) { return "a^(" + std::to_string(k) + ")"; }

std::string leading_text(const HardyNormalForm& f) { return HardyNormalForm({f.leading()}).render(); }

mpq_class factorial(int j) {
    mpz_class f = 1;
    for (int i = 2; i <= j; ++i) f *= i;
    return mpq_class(f);
}

std::int64_t to_int64(const mpz_class& z, std::int64_t n) {
    if (!z.fits_slong_p()) throw UndecidableFloor(n);
    return z.get_si();
}

// Residual after removing every c*t^j term with integer j >= 0.
bool far_from_real_polynomials(const HardyNormalForm& a) {
    std::vector<Term> rest;
    for (const auto& t : a.terms()) {
        if (!(t.beta == 0 && t.alpha.is_integer() && t.alpha.sign() >= 0)) rest.push_back(t);
    }
    if (rest.empty()) return false;
    const HardyNormalForm r(std::move(rest));
    return r.leading_key() > GrowthKey{Surd(), 1};
}

bool all_hold(const std::vector<Certificate>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const Certificate& c) { return c.holds; });
}

}  // namespace

double LogMonomial::at(std::int64_t N) const {
    const long double n = static_cast<long double>(N);
    long double v = std::pow(n, static_cast<long double>(gamma.to_double()));
    if (delta != 0) v *= std::pow(std::log(n), static_cast<long double>(delta.get_d()));
    return static_cast<double>(v);
}

std::string LogMonomial::render() const {
    std::vector<std::string> parts;
    if (!gamma.is_zero()) {
        if (gamma == Surd(1)) {
            parts.push_back("t");
        } else {
            parts.push_back("t^(" + gamma.to_string() + ")");
        }
    }
    if (delta != 0) parts.push_back(delta == 1 ? "log(t)" : "log(t)^(" + delta.get_str() + ")");
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

std::vector<Certificate> order_certificates(const HardyNormalForm& a, int k) {
    const std::string ak_name = derivative_name(k);
    const std::string ak1_name = derivative_name(k + 1);
    const HardyNormalForm ak = differentiate(a, k);
    const HardyNormalForm ak1 = differentiate(ak);
    std::vector<Certificate> out;
    if (ak.is_zero()) {
        out.push_back({ak_name + " vanishes identically", false});
        return out;
    }
    const LogMonomial key = key_of(ak);
    const std::string ak_text = ak_name + " ~ " + leading_text(ak);
    out.push_back({"t^-" + std::to_string(k) + " << " + ak_text, LogMonomial{Surd(-k), 0} < key});
    out.push_back({ak_text + " << 1", key < LogMonomial{Surd(), 0}});
    if (ak1.is_zero()) {
        out.push_back({"(" + ak1_name + ")^" + std::to_string(k) + " << (" + ak_name + ")^" + std::to_string(k + 1),
                       true});
        out.push_back({ak1_name + " vanishes identically, not a decreasing nonzero function", false});
        return out;
    }
    const LogMonomial key1 = key_of(ak1);
    out.push_back({"(" + ak1_name + ")^" + std::to_string(k) + " << (" + ak_name + ")^" + std::to_string(k + 1) +
                       " with " + ak1_name + " ~ " + leading_text(ak1),
                   scaled(key1, k) < scaled(key, k + 1)});
    out.push_back({"|" + ak1_name + "| decreases to 0 (t-exponent " + key1.gamma.to_string() + " < 0)",
                   key1.gamma.sign() < 0});
    return out;
}

int select_order(const HardyNormalForm& a) {
    if (a.is_zero()) throw HypothesisFailed("the zero function has no Taylor reduction");
    const ConvergenceClass cls = classify_convergence(a);
    if (cls.kind != ConvergenceClass::Kind::GoodCond1) {
        throw HypothesisFailed(a.render() + " is " + cls.describe() + ", GoodCond1 required");
    }
    if (!far_from_real_polynomials(a)) {
        throw HypothesisFailed(a.render() + " lies within log t of a real polynomial");
    }
    for (int k = 1; k <= kMaxTaylorOrder; ++k) {
        if (differentiate(a, k).is_zero()) break;
        if (all_hold(order_certificates(a, k))) return k;
    }
    throw HypothesisFailed("no admissible derivative order for " + a.render());
}

ReductionPlan window_length(const HardyNormalForm& a, int k) {
    if (k < 1) throw DomainError("order must be at least 1");
    ReductionPlan plan{a, k, {}, {}, {}, order_certificates(a, k)};
    if (!all_hold(plan.certificates)) {
        throw HypothesisFailed("order " + std::to_string(k) + " is not admissible for " + a.render());
    }
    const LogMonomial key = key_of(differentiate(a, k));
    const LogMonomial key1 = key_of(differentiate(a, k + 1));
    plan.lower = scaled(key, mpq_class(-1, k));
    const std::vector<LogMonomial> uppers = {
        LogMonomial{Surd(1), 0},
        scaled(key1, mpq_class(-1, k + 1)),
        scaled(key, -(mpq_class(1, k) + mpq_class(1, k * k))),
    };
    plan.upper = *std::min_element(uppers.begin(), uppers.end());
    if (!(plan.lower < plan.upper)) {
        throw EmptyWindow("no window between " + plan.lower.render() + " and " + plan.upper.render());
    }
    if (plan.lower.gamma != plan.upper.gamma) {
        plan.window = LogMonomial{(plan.lower.gamma + plan.upper.gamma).divided_by(2), 0};
    } else {
        plan.window = LogMonomial{plan.lower.gamma, (plan.lower.delta + plan.upper.delta) / 2};
    }
    const std::string l = plan.window.render();
    plan.certificates.push_back({plan.lower.render() + " << l = " + l, plan.lower < plan.window});
    plan.certificates.push_back({"l = " + l + " << " + plan.upper.render(), plan.window < plan.upper});
    return plan;
}

ReductionPlan plan_reduction(const HardyNormalForm& a) { return window_length(a, select_order(a)); }

std::int64_t window_size(const LogMonomial& l, std::int64_t N) {
    const double v = std::ceil(l.at(N));
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(v));
}

TaylorReport taylor_window_scan(const HardyNormalForm& a, std::int64_t N, int k, std::int64_t L, bool serial) {
    if (N < 1 || L < 1 || k < 0) throw DomainError("Taylor window needs N >= 1, L >= 1 and k >= 0");
    TaylorReport report;
    report.a = a.render();
    report.k = k;
    report.N = N;
    report.L = L;
    try {
        report.gamma = window_length(a, k).window.render();
    } catch (const Error&) {
        report.gamma = "none";
    }

    std::vector<HardyNormalForm> derivs{a};
    for (int j = 1; j <= k + 1; ++j) derivs.push_back(differentiate(derivs.back()));
    const HardyNormalForm& ak1 = derivs.back();
    report.sign = ak1.is_zero() ? 0 : ak1.leading().coeff.sign();

    const std::vector<mpfr_prec_t> precisions = {128, 512, 2048};
    std::vector<std::vector<Interval>> coeffs;
    for (mpfr_prec_t p : precisions) {
        std::vector<Interval> c;
        for (int j = 0; j <= k; ++j) {
            c.push_back(derivs[static_cast<std::size_t>(j)].evaluate(N, p) *
                        Interval::from_rational(1 / factorial(j), p));
        }
        coeffs.push_back(std::move(c));
    }
    std::vector<Surd> exact;
    for (int j = 0; j <= k; ++j) {
        auto v = derivs[static_cast<std::size_t>(j)].exact_value(N);
        if (!v) {
            exact.clear();
            break;
        }
        exact.push_back(v->divided_by(factorial(j)));
    }

    const std::size_t count = static_cast<std::size_t>(L);
    std::vector<std::int64_t> errors(count);
    std::vector<double> remainders(count);
    parallel_for(
        count,
        [&](std::size_t i) {
            const std::int64_t n = static_cast<std::int64_t>(i) + 1;
            const std::int64_t m = N + n;
            const std::int64_t fa = certified_floor(a, m).value;
            std::optional<std::int64_t> fp;
            for (std::size_t level = 0; level < precisions.size(); ++level) {
                const auto& c = coeffs[level];
                Interval p = c[static_cast<std::size_t>(k)];
                const Interval x = Interval::exact(static_cast<long>(n), precisions[level]);
                for (int j = k - 1; j >= 0; --j) p = p * x + c[static_cast<std::size_t>(j)];
                if (level == 0) remainders[i] = std::abs((a.evaluate(m, precisions[0]) - p).midpoint());
                if (auto f = p.certified_floor()) {
                    fp = to_int64(*f, m);
                    break;
                }
            }
            if (!fp && !exact.empty()) {
                Surd p = exact.back();
                for (int j = k - 1; j >= 0; --j) p = p * Surd(static_cast<long>(n)) + exact[static_cast<std::size_t>(j)];
                for (mpfr_prec_t prec : precisions) {
                    if (auto f = p.enclose(prec).certified_floor()) {
                        fp = to_int64(*f, m);
                        break;
                    }
                }
            }
            if (!fp) throw UndecidableFloor(m);
            errors[i] = fa - *fp;
        },
        serial);

    for (std::size_t i = 0; i < count; ++i) {
        ++report.histogram[errors[i]];
        report.max_remainder = std::max(report.max_remainder, remainders[i]);
    }
    report.remainder_bound = std::abs(ak1.evaluate_double(static_cast<double>(N))) *
                             std::pow(static_cast<double>(L), k + 1) / factorial(k + 1).get_d();
    const bool in_sign_set = std::all_of(report.histogram.begin(), report.histogram.end(), [&](const auto& kv) {
        return kv.first == 0 || kv.first == report.sign;
    });
    report.passed = in_sign_set && report.max_remainder < 1.0;
    return report;
}

TaylorReport taylor_window_check(const HardyNormalForm& a, std::int64_t N, int k, std::int64_t L, bool serial) {
    TaylorReport r = taylor_window_scan(a, N, k, L, serial);
    if (!r.passed) {
        std::string hist;
        for (const auto& [e, c] : r.histogram) hist += " " + std::to_string(e) + ":" + std::to_string(c);
        throw RemainderTooLarge("window L = " + std::to_string(L) + " at N = " + std::to_string(N) + " for " + r.a +
                                ": max remainder " + std::to_string(r.max_remainder) + ", errors" + hist);
    }
    return r;
}

nlohmann::json to_json(const ReductionPlan& p) {
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : p.certificates) certs.push_back({{"statement", c.statement}, {"holds", c.holds}});
    return {{"a", p.a.render()},
            {"k", p.k},
            {"window", p.window.render()},
            {"lower", p.lower.render()},
            {"upper", p.upper.render()},
            {"certificates", certs}};
}

nlohmann::json to_json(const TaylorReport& r) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [e, c] : r.histogram) hist[std::to_string(e)] = c;
    return {{"a", r.a},
            {"k", r.k},
            {"gamma", r.gamma},
            {"N", r.N},
            {"L", r.L},
            {"sign", r.sign},
            {"histogram", hist},
            {"max_remainder", r.max_remainder},
            {"remainder_bound", r.remainder_bound},
            {"passed", r.passed}};
}

}  // namespace hardy
