#include "hardy/sequences.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "hardy/error.hpp"
#include "hardy/parallel.hpp"
#include "hardy/phase.hpp"
#include "hardy/summation.hpp"

namespace hardy {

namespace {

constexpr mpfr_prec_t kStartPrecision = 128;
constexpr mpfr_prec_t kMaxPrecision = 4096;

std::int64_t to_int64(const mpz_class& z, std::int64_t n) {
    if (!z.fits_slong_p()) throw GrowthOutOfRange("[a(" + std::to_string(n) + ")] does not fit in 64 bits");
    return z.get_si();
}

void put_le(std::ostream& out, std::int64_t v) {
    unsigned char bytes[8];
    auto u = static_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(u >> (8 * i));
    out.write(reinterpret_cast<const char*>(bytes), 8);
}

bool get_le(std::istream& in, std::int64_t& v) {
    unsigned char bytes[8];
    if (!in.read(reinterpret_cast<char*>(bytes), 8)) return false;
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    v = static_cast<std::int64_t>(u);
    return true;
}

}  // namespace

CertifiedFloor certified_floor(const HardyNormalForm& a, std::int64_t n) {
    for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
        const Interval v = a.evaluate(n, prec);
        if (auto f = v.certified_floor()) {
            // a lower endpoint sitting on an integer means a(n) may be that
            // integer; settle it symbolically when the value is algebraic
            if (mpfr_integer_p(v.lo())) {
                if (auto exact = a.exact_value(n); exact && exact->is_rational()) {
                    return {to_int64(floor_of(exact->rational()), n), 0, true};
                }
            }
            return {to_int64(*f, n), prec, false};
        }
    }
    if (auto exact = a.exact_value(n)) {
        if (exact->is_rational()) return {to_int64(floor_of(exact->rational()), n), 0, true};
        // an irrational surd is never an integer, so enough bits separate it
        for (mpfr_prec_t prec = 2 * kMaxPrecision; prec <= (1 << 16); prec *= 2) {
            if (auto f = exact->enclose(prec).certified_floor()) return {to_int64(*f, n), 0, true};
        }
    }
    throw UndecidableFloor(n);
}

FloorSequence floor_seq(const HardyNormalForm& a, std::int64_t first, std::int64_t last, bool serial) {
    if (first < 1) throw DomainError("floor_seq requires n >= 1");
    FloorSequence seq;
    seq.source = a;
    seq.first = first;
    if (last < first) return seq;
    const auto count = static_cast<std::size_t>(last - first + 1);
    std::vector<CertifiedFloor> raw(count);
    // fixed-size blocks keep the work split independent of the thread count
    constexpr std::size_t kBlock = 4096;
    const std::size_t blocks = (count + kBlock - 1) / kBlock;
    parallel_for(
        blocks,
        [&](std::size_t b) {
            const std::size_t end = std::min(count, (b + 1) * kBlock);
            for (std::size_t i = b * kBlock; i < end; ++i) {
                raw[i] = certified_floor(a, first + static_cast<std::int64_t>(i));
            }
        },
        serial);
    seq.values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        seq.values.push_back(raw[i].value);
        seq.precision_bits_used = std::max(seq.precision_bits_used, raw[i].precision);
        if (raw[i].exact_path) seq.exact_path.push_back(first + static_cast<std::int64_t>(i));
    }
    return seq;
}

std::int64_t HitCounts::count(std::int64_t v) const {
    if (v < lowest || v > highest()) return 0;
    return w[static_cast<std::size_t>(v - lowest)];
}

std::int64_t HitCounts::cumulative(std::int64_t v) const {
    if (v < lowest) return 0;
    if (v > highest()) return W.empty() ? 0 : W.back();
    return W[static_cast<std::size_t>(v - lowest)];
}

HitCounts hit_counts(const FloorSequence& seq) {
    HitCounts h;
    if (seq.values.empty()) return h;
    const auto [lo, hi] = std::minmax_element(seq.values.begin(), seq.values.end());
    h.lowest = *lo;
    h.w.assign(static_cast<std::size_t>(*hi - *lo + 1), 0);
    for (auto v : seq.values) ++h.w[static_cast<std::size_t>(v - h.lowest)];
    h.W.resize(h.w.size());
    std::int64_t run = 0;
    for (std::size_t i = 0; i < h.w.size(); ++i) h.W[i] = run += h.w[i];
    return h;
}

HitCounts hit_counts(const HardyNormalForm& a, std::int64_t N, bool serial) {
    return hit_counts(floor_seq(a, 1, N, serial));
}

double exp_sum(const FloorSequence& seq, double theta, std::int64_t N) {
    if (N <= 0 || N > static_cast<std::int64_t>(seq.values.size())) {
        throw DomainError("exp_sum needs 0 < N <= sequence length");
    }
    const Phase th = Phase::from_double(theta);
    ComplexCompensatedSum sum;
    for (std::int64_t i = 0; i < N; ++i) sum.add(e(seq.values[static_cast<std::size_t>(i)] * th));
    return std::abs(sum.value()) / static_cast<double>(N);
}

double star_discrepancy_1d(std::vector<double> points) {
    if (points.empty()) return 0.0;
    std::sort(points.begin(), points.end());
    const double N = static_cast<double>(points.size());
    double d = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double x = points[i];
        d = std::max({d, static_cast<double>(i + 1) / N - x, x - static_cast<double>(i) / N});
    }
    return d;
}

void write_csv(const FloorSequence& seq, std::ostream& out) {
    out << "n,value\n";
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        out << seq.first + static_cast<std::int64_t>(i) << ',' << seq.values[i] << '\n';
    }
}

void write_binary(const FloorSequence& seq, std::ostream& out) {
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        put_le(out, seq.first + static_cast<std::int64_t>(i));
        put_le(out, seq.values[i]);
    }
}

FloorSequence read_binary(std::istream& in) {
    FloorSequence seq;
    std::int64_t n = 0, v = 0;
    bool first = true;
    while (get_le(in, n) && get_le(in, v)) {
        if (first) {
            seq.first = n;
            first = false;
        } else if (n != seq.last() + 1) {
            throw ShapeMismatch("binary sequence indices are not consecutive");
        }
        seq.values.push_back(v);
    }
    return seq;
}

}  // namespace hardy
