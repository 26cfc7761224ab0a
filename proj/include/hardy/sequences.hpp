#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hardy/normal_form.hpp"

namespace hardy {

/// Certified floor of a(n) for one n.
struct CertifiedFloor {
    std::int64_t value = 0;
    /// Interval precision that certified the value, 0 when the exact path was taken.
    mpfr_prec_t precision = 0;
    bool exact_path = false;
};

/// Interval evaluation from 128 bits doubling to 4096; when the enclosure still
/// straddles an integer, the value is computed exactly in the surd field.
/// Throws UndecidableFloor when neither certifies.
CertifiedFloor certified_floor(const HardyNormalForm& a, std::int64_t n);

/// Values [a(n)] for n in [first, last].
struct FloorSequence {
    HardyNormalForm source;
    std::int64_t first = 1;
    std::vector<std::int64_t> values;
    /// Highest interval precision any entry needed.
    mpfr_prec_t precision_bits_used = 0;
    /// Indices n that were settled by exact evaluation.
    std::vector<std::int64_t> exact_path;

    std::int64_t last() const noexcept { return first + static_cast<std::int64_t>(values.size()) - 1; }
    std::int64_t operator()(std::int64_t n) const { return values.at(static_cast<std::size_t>(n - first)); }
};

FloorSequence floor_seq(const HardyNormalForm& a, std::int64_t first, std::int64_t last, bool serial = false);

/// w(v) = #{m <= N : [a(m)] = v} and the cumulative W(v) = sum_{u <= v} w(u),
/// over the value range [lowest, lowest + size).
struct HitCounts {
    std::int64_t lowest = 0;
    std::vector<std::int64_t> w;
    std::vector<std::int64_t> W;

    std::int64_t count(std::int64_t v) const;
    std::int64_t cumulative(std::int64_t v) const;
    std::int64_t highest() const noexcept { return lowest + static_cast<std::int64_t>(w.size()) - 1; }
};

HitCounts hit_counts(const HardyNormalForm& a, std::int64_t N, bool serial = false);
HitCounts hit_counts(const FloorSequence& seq);

/// |(1/N) sum_{n=first}^{first+N-1} e(seq(n) * theta)|.
double exp_sum(const FloorSequence& seq, double theta, std::int64_t N);

/// Exact star discrepancy of points in [0, 1).
double star_discrepancy_1d(std::vector<double> points);

/// "n,value" lines with a header.
void write_csv(const FloorSequence& seq, std::ostream& out);
/// Little-endian (int64 n, int64 value) pairs.
void write_binary(const FloorSequence& seq, std::ostream& out);
FloorSequence read_binary(std::istream& in);

}  // namespace hardy
