#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/normal_form.hpp"

namespace hardy {

/// t^gamma * (log t)^delta, ordered by growth.
struct LogMonomial {
    Surd gamma;
    mpq_class delta = 0;

    friend int compare(const LogMonomial& a, const LogMonomial& b) {
        if (int c = compare(a.gamma, b.gamma); c != 0) return c;
        return cmp(a.delta, b.delta);
    }
    friend bool operator<(const LogMonomial& a, const LogMonomial& b) { return compare(a, b) < 0; }
    friend bool operator==(const LogMonomial& a, const LogMonomial& b) { return compare(a, b) == 0; }
    /// Value at t = N (double precision).
    double at(std::int64_t N) const;
    std::string render() const;
};

/// One symbolic growth comparison that the reduction relies on.
struct Certificate {
    std::string statement;
    bool holds = false;
};

struct ReductionPlan {
    HardyNormalForm a;
    int k = 0;
    /// Window length l(t).
    LogMonomial window;
    /// Open range the window exponent was chosen from.
    LogMonomial lower;
    LogMonomial upper;
    std::vector<Certificate> certificates;
};

inline constexpr int kMaxTaylorOrder = 64;

/// Growth certificates for order k: 1/t^k < a^(k) < 1, (a^(k+1))^k < (a^(k))^(k+1),
/// and a^(k+1) -> 0.
std::vector<Certificate> order_certificates(const HardyNormalForm& a, int k);

/// Smallest k whose order certificates all hold. Requires a GoodCond1 function
/// that stays farther than log t from every real polynomial; otherwise
/// HypothesisFailed.
int select_order(const HardyNormalForm& a);

/// Window l(t) with (a^(k))^(-1/k) < l < min(t, (a^(k+1))^(-1/(k+1)), (a^(k))^(-(1/k + 1/k^2))).
/// Uses the midpoint of the t-exponent range; when that range collapses to a
/// point the log exponent is split instead. EmptyWindow if nothing fits.
ReductionPlan window_length(const HardyNormalForm& a, int k);

/// select_order followed by window_length.
ReductionPlan plan_reduction(const HardyNormalForm& a);

/// ceil(l(N)), at least 1.
std::int64_t window_size(const LogMonomial& l, std::int64_t N);

struct TaylorReport {
    std::string a;
    int k = 0;
    std::string gamma;
    std::int64_t N = 0;
    std::int64_t L = 0;
    /// Sign of a^(k+1) at infinity; 0 when it vanishes identically.
    int sign = 0;
    /// error term -> count, error = [a(N+n)] - [P_N(n)].
    std::map<std::int64_t, std::int64_t> histogram;
    double max_remainder = 0.0;
    /// |a^(k+1)(N)| L^(k+1) / (k+1)!.
    double remainder_bound = 0.0;
    /// Every error term in {0, sign} and max |remainder| < 1.
    bool passed = false;
};

/// Compares [a(N+n)] with the floor of the degree-k Taylor polynomial of a at N
/// for n = 1..L. Floors are certified by interval evaluation with an exact
/// fallback, so the histogram is exact.
TaylorReport taylor_window_scan(const HardyNormalForm& a, std::int64_t N, int k, std::int64_t L,
                                bool serial = false);

/// taylor_window_scan that throws RemainderTooLarge unless the report passed.
TaylorReport taylor_window_check(const HardyNormalForm& a, std::int64_t N, int k, std::int64_t L,
                                 bool serial = false);

nlohmann::json to_json(const ReductionPlan& p);
nlohmann::json to_json(const TaylorReport& r);

}  // namespace hardy
