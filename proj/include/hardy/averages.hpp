#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hardy/normal_form.hpp"
#include "hardy/sequences.hpp"
#include "hardy/systems.hpp"

namespace hardy {

/// n -> multiple * base(n), where base is either n itself or a stored floor sequence.
struct IterateSequence {
    std::shared_ptr<const std::vector<std::int64_t>> values;  // values[n-1]; null means base(n) = n
    std::int64_t multiple = 1;
    std::string label;

    std::int64_t at(std::int64_t n) const {
        return multiple * (values ? (*values)[static_cast<std::size_t>(n - 1)] : n);
    }
    std::int64_t length() const noexcept {
        return values ? static_cast<std::int64_t>(values->size()) : INT64_MAX;
    }

    static IterateSequence linear(std::int64_t j = 1);
    /// j*[a(n)]; the sequence must start at n = 1.
    static IterateSequence floor_multiple(const FloorSequence& seq, std::int64_t j = 1);
    /// j*[a(n)] computed up to N.
    static IterateSequence floor_multiple(const HardyNormalForm& a, std::int64_t N, std::int64_t j = 1);
};

/// Powers of two up to N, then N.
std::vector<std::int64_t> dyadic_checkpoints(std::int64_t N);
/// round(first * 2^(k/per_octave)) up to N, deduplicated, then N.
std::vector<std::int64_t> geometric_checkpoints(std::int64_t first, std::int64_t N, int per_octave);

/// (1/N) sum_{n<=N} prod_i f_i(T_i^{s_i(n)} x), for x over a grid of initial points.
struct AverageSpec {
    std::vector<System> systems;
    std::vector<Observable> observables;
    std::vector<IterateSequence> sequences;
    std::vector<Point> points;
    std::int64_t N = 0;
    std::vector<std::int64_t> checkpoints;
    bool serial = false;
};

struct AverageSeries {
    std::vector<std::int64_t> N;
    /// values[c][j]: running average at checkpoint c for initial point j.
    std::vector<std::vector<std::complex<double>>> values;
    /// Grid mean of the running average.
    std::vector<std::complex<double>> mean;
    /// Root mean square over the grid (the L^2 proxy).
    std::vector<double> rms;
    /// Product of observable sup norms; every value is bounded by it.
    double bound = 1.0;
    /// "separable" when the n-sum factors out of the initial point, else "pointwise".
    std::string method;
};

AverageSeries multi_average(const AverageSpec& spec);

/// Grid RMS of the difference of two series at matching checkpoints.
double rms_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b);
double sup_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b);

struct FurstenbergComparison {
    AverageSeries hardy;
    AverageSeries linear;
    std::vector<double> sup_difference;
    std::vector<double> rms_difference;
};

/// Averages along j*[a(n)] against j*n, j = 1..l. Requires a in GoodCond1.
FurstenbergComparison furstenberg_compare(const System& system, const std::vector<Observable>& observables,
                                          const HardyNormalForm& a, std::int64_t N,
                                          const std::vector<Point>& points,
                                          const std::vector<std::int64_t>& checkpoints, bool serial = false);

// Recurrence -----------------------------------------------------------------

/// Product of intervals, one per torus coordinate. An interval with lo > hi wraps around 1.
struct Box {
    std::vector<std::pair<double, double>> sides;
};

struct CyclicSubset {
    std::vector<bool> members;
};

struct MeasurableSet {
    std::variant<Box, CyclicSubset> kind;
    bool contains(const Point& x) const;
    std::string describe() const;
};

/// Exact measure (box volume or counting measure).
double measure(const MeasurableSet& A);

struct RecurrenceSeries {
    std::vector<std::int64_t> N;
    /// Running average of mu(A cap T^{-s_1(n)}A cap ... cap T^{-s_l(n)}A).
    std::vector<double> average;
    /// mu(A)^(l+1)
    double lower_bound = 0.0;
    /// "exact-arc", "exact-count" or "grid"
    std::string method;
};

RecurrenceSeries recurrence_average(const System& system, const MeasurableSet& A,
                                    const std::vector<IterateSequence>& sequences, std::int64_t N,
                                    const std::vector<std::int64_t>& checkpoints, std::size_t grid_points = 4096,
                                    bool serial = false);

/// mu(A cap T^{-s_1}A cap ...) for one tuple of shifts (exact when possible).
double intersection_measure(const System& system, const MeasurableSet& A, const std::vector<std::int64_t>& shifts,
                            const std::vector<Point>* grid = nullptr);

// Van der Corput -------------------------------------------------------------

struct VdcResult {
    double lhs = 0.0;  // |E_{n<=N} v_n|^2
    double rhs = 0.0;  // E_{h<=H} b_h,  b_h = |E_{n<=N} <v_{n+h}, v_n>|
    /// max(0, lhs - 4*rhs)
    double slack = 0.0;
    bool holds(double tolerance) const { return lhs <= 4 * rhs + tolerance; }
};

/// v[n] for n = 0..N+H-1, each a vector in C^d.
VdcResult vdc_check(const std::vector<std::vector<std::complex<double>>>& v, std::int64_t H, std::int64_t N);

// Change of variables --------------------------------------------------------

struct ChangeVarPoint {
    std::int64_t N;
    double difference;
};

/// |E_{n<=N} V([a(n)]) - E_{n<=N} V(n)| along the schedule. Requires t^eps < a < t.
std::vector<ChangeVarPoint> change_var_check(const HardyNormalForm& a,
                                             const std::function<std::complex<double>(std::int64_t)>& V,
                                             const std::vector<std::int64_t>& schedule, bool serial = false);

// Oscillation ----------------------------------------------------------------

struct OscillationWindow {
    std::int64_t N1;
    std::int64_t N2;
    double osc;
};

struct OscillationReport {
    std::vector<OscillationWindow> windows;
    double max_osc = 0.0;
    double threshold = 0.05;
    bool oscillating = false;
};

/// Within each dyadic window [2^j, 2^(j+1)] (restricted to [from, to]) the largest
/// grid RMS distance between running averages at two checkpoints.
OscillationReport cesaro_diagnostic(const AverageSeries& series, std::int64_t from = 1, std::int64_t to = INT64_MAX,
                                     double threshold = 0.05);
/// Same for a scalar series given as (N, value) pairs.
OscillationReport cesaro_diagnostic(const std::vector<std::int64_t>& N, const std::vector<std::complex<double>>& values,
                                    std::int64_t from = 1, std::int64_t to = INT64_MAX, double threshold = 0.05);

// Output ---------------------------------------------------------------------

/// Header "N,re,im,rms"; re/im are the grid mean.
void write_csv(const AverageSeries& s, std::ostream& out);
nlohmann::json to_json(const AverageSeries& s);
nlohmann::json to_json(const RecurrenceSeries& s);
nlohmann::json to_json(const OscillationReport& r);

}  // namespace hardy
