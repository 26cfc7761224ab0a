#include "hardy/averages.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "hardy/classify.hpp"
#include "hardy/error.hpp"
#include "hardy/parallel.hpp"
#include "hardy/summation.hpp"

namespace hardy {

namespace {

using u128 = unsigned __int128;

// f(T^k x) as a function of k for a fixed x.
class OrbitFunction {
public:
    virtual ~OrbitFunction() = default;
    virtual std::complex<double> at(std::int64_t k) const = 0;
};

class ConstantOrbit : public OrbitFunction {
public:
    explicit ConstantOrbit(std::complex<double> c) : c_(c) {}
    std::complex<double> at(std::int64_t) const override { return c_; }

private:
    std::complex<double> c_;
};

class RotationCharacterOrbit : public OrbitFunction {
public:
    RotationCharacterOrbit(Phase base, Phase step) : base_(base), step_(step) {}
    std::complex<double> at(std::int64_t k) const override { return e(base_ + k * step_); }

private:
    Phase base_, step_;
};

class CyclicOrbit : public OrbitFunction {
public:
    CyclicOrbit(const std::vector<std::complex<double>>& values, std::int64_t residue)
        : values_(values), residue_(residue), m_(static_cast<std::int64_t>(values.size())) {}
    std::complex<double> at(std::int64_t k) const override {
        const std::int64_t r = ((residue_ + k % m_) % m_ + m_) % m_;
        return values_[static_cast<std::size_t>(r)];
    }

private:
    const std::vector<std::complex<double>>& values_;
    std::int64_t residue_, m_;
};

class AffineCharacterOrbit : public OrbitFunction {
public:
    explicit AffineCharacterOrbit(std::vector<Phase> coefficients) : c_(std::move(coefficients)) {}
    std::complex<double> at(std::int64_t k) const override {
        std::uint64_t acc = c_[0].raw;
        for (std::size_t j = 1; j < c_.size(); ++j) acc += binomial_mod64(k, j) * c_[j].raw;
        return e(Phase{acc});
    }

private:
    std::vector<Phase> c_;
};

class GenericOrbit : public OrbitFunction {
public:
    GenericOrbit(const System& s, const Observable& f, const Point& x) : s_(s), f_(f), x_(x) {}
    std::complex<double> at(std::int64_t k) const override { return evaluate(f_, iterate(s_, x_, k)); }

private:
    const System& s_;
    const Observable& f_;
    const Point& x_;
};

std::unique_ptr<OrbitFunction> make_orbit(const System& s, const Observable& f, const Point& x) {
    if (auto* c = std::get_if<Constant>(&f.kind)) return std::make_unique<ConstantOrbit>(c->value);
    if (auto* chi = std::get_if<TorusCharacter>(&f.kind)) {
        if (auto* r = std::get_if<TorusRotation>(&s.kind)) {
            std::uint64_t base = 0, step = 0;
            for (std::size_t i = 0; i < chi->k.size(); ++i) {
                base += static_cast<std::uint64_t>(chi->k[i]) * x.coords[i].raw;
                step += static_cast<std::uint64_t>(chi->k[i]) * r->alpha[i].raw;
            }
            return std::make_unique<RotationCharacterOrbit>(Phase{base}, Phase{step});
        }
        if (auto* a = std::get_if<AffineTorus>(&s.kind)) {
            return std::make_unique<AffineCharacterOrbit>(affine_orbit_coefficients(*a, chi->k, x.coords));
        }
    }
    if (auto* v = std::get_if<FiniteVector>(&f.kind)) {
        if (std::holds_alternative<FiniteCyclic>(s.kind)) return std::make_unique<CyclicOrbit>(v->values, x.residue);
    }
    return std::make_unique<GenericOrbit>(s, f, x);
}

bool separable(const AverageSpec& spec) {
    for (std::size_t i = 0; i < spec.systems.size(); ++i) {
        if (!std::holds_alternative<TorusRotation>(spec.systems[i].kind)) return false;
        const auto& k = spec.observables[i].kind;
        if (!std::holds_alternative<TorusCharacter>(k) && !std::holds_alternative<Constant>(k)) return false;
    }
    return true;
}

std::vector<std::int64_t> normalized_checkpoints(std::vector<std::int64_t> cps, std::int64_t N) {
    if (cps.empty()) cps = dyadic_checkpoints(N);
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    cps.erase(std::remove_if(cps.begin(), cps.end(), [&](std::int64_t c) { return c < 1 || c > N; }), cps.end());
    if (cps.empty() || cps.back() != N) cps.push_back(N);
    return cps;
}

void validate(const AverageSpec& spec) {
    const std::size_t l = spec.systems.size();
    if (l == 0) throw ShapeMismatch("average needs at least one factor");
    if (spec.observables.size() != l || spec.sequences.size() != l) {
        throw ShapeMismatch("systems, observables and sequences must have equal length");
    }
    if (spec.N < 1) throw ShapeMismatch("N must be positive");
    if (spec.points.empty()) throw ShapeMismatch("no initial points");
    for (std::size_t i = 0; i < l; ++i) {
        check_shape(spec.systems[i], spec.observables[i]);
        if (spec.sequences[i].length() < spec.N) throw ShapeMismatch("sequence shorter than N");
    }
}

void finish_series(AverageSeries& out) {
    for (auto& row : out.values) {
        ComplexCompensatedSum mean;
        CompensatedSum sq;
        for (auto v : row) {
            if (std::abs(v) > out.bound * (1 + 1e-12) + 1e-15) {
                throw std::logic_error("partial average exceeds the product of sup norms");
            }
            mean.add(v);
            sq.add(std::norm(v));
        }
        const double count = static_cast<double>(row.size());
        out.mean.push_back(mean.value() / count);
        out.rms.push_back(std::sqrt(sq.value() / count));
    }
}

// Arcs on the circle as half-open segments of [0, 2^64).
using Segments = std::vector<std::pair<u128, u128>>;
constexpr u128 kFull = static_cast<u128>(1) << 64;

u128 length_of(double lo, double hi) {
    double len = hi >= lo ? hi - lo : 1.0 - lo + hi;
    if (len >= 1.0) return kFull;
    return static_cast<u128>(static_cast<long double>(len) * 0x1p64L);
}

Segments arc(std::uint64_t start, u128 len) {
    if (len >= kFull) return {{0, kFull}};
    const u128 end = static_cast<u128>(start) + len;
    if (end <= kFull) return {{start, end}};
    return {{start, kFull}, {0, end - kFull}};
}

Segments intersect(const Segments& a, const Segments& b) {
    Segments out;
    for (const auto& [a0, a1] : a) {
        for (const auto& [b0, b1] : b) {
            const u128 lo = std::max(a0, b0), hi = std::min(a1, b1);
            if (lo < hi) out.emplace_back(lo, hi);
        }
    }
    return out;
}

double total(const Segments& s) {
    long double sum = 0;
    for (const auto& [lo, hi] : s) sum += static_cast<long double>(hi - lo);
    return static_cast<double>(sum * 0x1p-64L);
}

}  // namespace

IterateSequence IterateSequence::linear(std::int64_t j) {
    IterateSequence s;
    s.multiple = j;
    s.label = j == 1 ? "n" : std::to_string(j) + "n";
    return s;
}

IterateSequence IterateSequence::floor_multiple(const FloorSequence& seq, std::int64_t j) {
    if (seq.first != 1) throw ShapeMismatch("iterate sequences must start at n = 1");
    IterateSequence s;
    s.values = std::make_shared<const std::vector<std::int64_t>>(seq.values);
    s.multiple = j;
    s.label = (j == 1 ? "" : std::to_string(j) + "*") + "[" + seq.source.render() + "]";
    return s;
}

IterateSequence IterateSequence::floor_multiple(const HardyNormalForm& a, std::int64_t N, std::int64_t j) {
    return floor_multiple(floor_seq(a, 1, N), j);
}

std::vector<std::int64_t> dyadic_checkpoints(std::int64_t N) {
    std::vector<std::int64_t> out;
    for (std::int64_t c = 1; c < N; c *= 2) out.push_back(c);
    out.push_back(N);
    return out;
}

std::vector<std::int64_t> geometric_checkpoints(std::int64_t first, std::int64_t N, int per_octave) {
    std::vector<std::int64_t> out;
    for (int k = 0;; ++k) {
        const auto c = static_cast<std::int64_t>(std::llround(static_cast<double>(first) * std::exp2(static_cast<double>(k) / per_octave)));
        if (c >= N) break;
        if (out.empty() || out.back() != c) out.push_back(c);
    }
    out.push_back(N);
    return out;
}

AverageSeries multi_average(const AverageSpec& spec) {
    validate(spec);
    AverageSeries out;
    out.N = normalized_checkpoints(spec.checkpoints, spec.N);
    out.bound = 1.0;
    for (const auto& f : spec.observables) out.bound *= sup_norm(f);
    const std::size_t l = spec.systems.size();
    const std::size_t P = spec.points.size();
    out.values.assign(out.N.size(), std::vector<std::complex<double>>(P));

    if (separable(spec)) {
        // prod_i e(k_i.(x + s_i(n) alpha_i)) = e(sum_i k_i.x) * e(sum_i s_i(n) k_i.alpha_i)
        out.method = "separable";
        std::complex<double> constant = 1.0;
        std::vector<Phase> step(l);
        for (std::size_t i = 0; i < l; ++i) {
            if (auto* c = std::get_if<Constant>(&spec.observables[i].kind)) {
                constant *= c->value;
                continue;
            }
            const auto& k = std::get<TorusCharacter>(spec.observables[i].kind).k;
            const auto& alpha = std::get<TorusRotation>(spec.systems[i].kind).alpha;
            for (std::size_t j = 0; j < k.size(); ++j) step[i] += k[j] * alpha[j];
        }
        std::vector<std::complex<double>> sums;
        ComplexCompensatedSum sum;
        std::size_t next = 0;
        for (std::int64_t n = 1; n <= spec.N; ++n) {
            Phase total;
            for (std::size_t i = 0; i < l; ++i) total += spec.sequences[i].at(n) * step[i];
            sum.add(e(total));
            if (n == out.N[next]) {
                sums.push_back(sum.value() / static_cast<double>(n));
                ++next;
            }
        }
        for (std::size_t j = 0; j < P; ++j) {
            Phase px;
            for (std::size_t i = 0; i < l; ++i) {
                if (auto* chi = std::get_if<TorusCharacter>(&spec.observables[i].kind)) {
                    for (std::size_t d = 0; d < chi->k.size(); ++d) px += chi->k[d] * spec.points[j].coords[d];
                }
            }
            const std::complex<double> factor = constant * e(px);
            for (std::size_t c = 0; c < out.N.size(); ++c) out.values[c][j] = factor * sums[c];
        }
    } else {
        out.method = "pointwise";
        parallel_for(
            P,
            [&](std::size_t j) {
                std::vector<std::unique_ptr<OrbitFunction>> orbits;
                for (std::size_t i = 0; i < l; ++i) {
                    orbits.push_back(make_orbit(spec.systems[i], spec.observables[i], spec.points[j]));
                }
                ComplexCompensatedSum sum;
                std::size_t next = 0;
                for (std::int64_t n = 1; n <= spec.N; ++n) {
                    std::complex<double> v = 1.0;
                    for (std::size_t i = 0; i < l; ++i) v *= orbits[i]->at(spec.sequences[i].at(n));
                    sum.add(v);
                    if (n == out.N[next]) {
                        out.values[next][j] = sum.value() / static_cast<double>(n);
                        ++next;
                    }
                }
            },
            spec.serial);
    }
    finish_series(out);
    return out;
}

double rms_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size() || a.empty()) throw ShapeMismatch("rms_distance: grids differ");
    CompensatedSum sq;
    for (std::size_t i = 0; i < a.size(); ++i) sq.add(std::norm(a[i] - b[i]));
    return std::sqrt(sq.value() / static_cast<double>(a.size()));
}

double sup_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size()) throw ShapeMismatch("sup_distance: grids differ");
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

FurstenbergComparison furstenberg_compare(const System& system, const std::vector<Observable>& observables,
                                          const HardyNormalForm& a, std::int64_t N,
                                          const std::vector<Point>& points,
                                          const std::vector<std::int64_t>& checkpoints, bool serial) {
    const auto cls = classify_convergence(a);
    if (cls.kind != ConvergenceClass::Kind::GoodCond1) {
        throw RequiresCond1(a.render() + " is " + cls.describe() + ", the limit formula needs GoodCond1");
    }
    const auto l = static_cast<std::int64_t>(observables.size());
    const FloorSequence base = floor_seq(a, 1, N, serial);
    AverageSpec hardy_spec;
    hardy_spec.N = N;
    hardy_spec.points = points;
    hardy_spec.checkpoints = checkpoints;
    hardy_spec.serial = serial;
    hardy_spec.observables = observables;
    hardy_spec.systems.assign(static_cast<std::size_t>(l), system);
    AverageSpec linear_spec = hardy_spec;
    for (std::int64_t j = 1; j <= l; ++j) {
        hardy_spec.sequences.push_back(IterateSequence::floor_multiple(base, j));
        linear_spec.sequences.push_back(IterateSequence::linear(j));
    }
    FurstenbergComparison out;
    out.hardy = multi_average(hardy_spec);
    out.linear = multi_average(linear_spec);
    for (std::size_t c = 0; c < out.hardy.N.size(); ++c) {
        out.sup_difference.push_back(sup_distance(out.hardy.values[c], out.linear.values[c]));
        out.rms_difference.push_back(rms_distance(out.hardy.values[c], out.linear.values[c]));
    }
    return out;
}

bool MeasurableSet::contains(const Point& x) const {
    if (auto* b = std::get_if<Box>(&kind)) {
        if (x.coords.size() != b->sides.size()) throw ShapeMismatch("box dimension differs from the point");
        for (std::size_t i = 0; i < b->sides.size(); ++i) {
            const double u = x.coords[i].value();
            const auto [lo, hi] = b->sides[i];
            const bool in = lo <= hi ? (u >= lo && u < hi) : (u >= lo || u < hi);
            if (!in) return false;
        }
        return true;
    }
    const auto& s = std::get<CyclicSubset>(kind);
    return s.members.at(static_cast<std::size_t>(x.residue));
}

std::string MeasurableSet::describe() const {
    if (auto* b = std::get_if<Box>(&kind)) {
        std::string out = "Box(";
        for (std::size_t i = 0; i < b->sides.size(); ++i) {
            out += (i ? " x " : "") + ("[" + std::to_string(b->sides[i].first) + ", " + std::to_string(b->sides[i].second) + ")");
        }
        return out + ")";
    }
    const auto& s = std::get<CyclicSubset>(kind);
    std::string out = "Subset{";
    bool first = true;
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        if (!s.members[i]) continue;
        out += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return out + "} of Z/" + std::to_string(s.members.size());
}

double measure(const MeasurableSet& A) {
    if (auto* b = std::get_if<Box>(&A.kind)) {
        double v = 1.0;
        for (const auto& [lo, hi] : b->sides) v *= static_cast<double>(static_cast<long double>(length_of(lo, hi)) * 0x1p-64L);
        return v;
    }
    const auto& s = std::get<CyclicSubset>(A.kind);
    return static_cast<double>(std::count(s.members.begin(), s.members.end(), true)) /
           static_cast<double>(s.members.size());
}

double intersection_measure(const System& system, const MeasurableSet& A, const std::vector<std::int64_t>& shifts,
                            const std::vector<Point>* grid) {
    if (auto* r = std::get_if<TorusRotation>(&system.kind)) {
        const auto* b = std::get_if<Box>(&A.kind);
        if (!b || b->sides.size() != r->dim()) throw ShapeMismatch("rotation needs a box of matching dimension");
        double v = 1.0;
        for (std::size_t c = 0; c < r->dim(); ++c) {
            const auto [lo, hi] = b->sides[c];
            const std::uint64_t start = Phase::from_double(lo).raw;
            const u128 len = length_of(lo, hi);
            Segments s = arc(start, len);
            // x in T^{-k}A  <=>  x + k alpha in A  <=>  x in A - k alpha
            for (auto k : shifts) s = intersect(s, arc(start - (k * r->alpha[c]).raw, len));
            v *= total(s);
            if (v == 0.0) break;
        }
        return v;
    }
    if (auto* c = std::get_if<FiniteCyclic>(&system.kind)) {
        const auto* sub = std::get_if<CyclicSubset>(&A.kind);
        if (!sub || static_cast<std::int64_t>(sub->members.size()) != c->m) {
            throw ShapeMismatch("cyclic system needs a subset of Z/m");
        }
        std::int64_t count = 0;
        for (std::int64_t x = 0; x < c->m; ++x) {
            bool in = sub->members[static_cast<std::size_t>(x)];
            for (auto k : shifts) {
                if (!in) break;
                in = sub->members[static_cast<std::size_t>(((x + k % c->m) % c->m + c->m) % c->m)];
            }
            count += in;
        }
        return static_cast<double>(count) / static_cast<double>(c->m);
    }
    if (std::holds_alternative<Product>(system.kind)) throw UnsupportedSystem("recurrence sets on product systems");
    if (!grid || grid->empty()) throw ShapeMismatch("grid estimate needs initial points");
    std::size_t hits = 0;
    for (const auto& x : *grid) {
        bool in = A.contains(x);
        for (auto k : shifts) {
            if (!in) break;
            in = A.contains(iterate(system, x, k));
        }
        hits += in;
    }
    return static_cast<double>(hits) / static_cast<double>(grid->size());
}

RecurrenceSeries recurrence_average(const System& system, const MeasurableSet& A,
                                    const std::vector<IterateSequence>& sequences, std::int64_t N,
                                    const std::vector<std::int64_t>& checkpoints, std::size_t grid_points,
                                    bool serial) {
    if (sequences.empty()) throw ShapeMismatch("recurrence needs at least one sequence");
    for (const auto& s : sequences) {
        if (s.length() < N) throw ShapeMismatch("sequence shorter than N");
    }
    RecurrenceSeries out;
    out.N = normalized_checkpoints(checkpoints, N);
    out.lower_bound = std::pow(measure(A), static_cast<double>(sequences.size() + 1));
    std::vector<Point> grid;
    if (std::holds_alternative<TorusRotation>(system.kind)) {
        out.method = "exact-arc";
    } else if (std::holds_alternative<FiniteCyclic>(system.kind)) {
        out.method = "exact-count";
    } else {
        out.method = "grid";
        grid = default_grid(system, grid_points);
    }
    // terms are independent; evaluate in fixed blocks, then sum in order
    std::vector<double> terms(static_cast<std::size_t>(N));
    constexpr std::size_t kBlock = 8192;
    const std::size_t blocks = (terms.size() + kBlock - 1) / kBlock;
    parallel_for(
        blocks,
        [&](std::size_t b) {
            std::vector<std::int64_t> shifts(sequences.size());
            const std::size_t end = std::min(terms.size(), (b + 1) * kBlock);
            for (std::size_t i = b * kBlock; i < end; ++i) {
                const auto n = static_cast<std::int64_t>(i + 1);
                for (std::size_t s = 0; s < sequences.size(); ++s) shifts[s] = sequences[s].at(n);
                terms[i] = intersection_measure(system, A, shifts, &grid);
            }
        },
        serial);
    CompensatedSum sum;
    std::size_t next = 0;
    for (std::int64_t n = 1; n <= N; ++n) {
        sum.add(terms[static_cast<std::size_t>(n - 1)]);
        if (n == out.N[next]) {
            out.average.push_back(sum.value() / static_cast<double>(n));
            ++next;
        }
    }
    return out;
}

VdcResult vdc_check(const std::vector<std::vector<std::complex<double>>>& v, std::int64_t H, std::int64_t N) {
    if (H < 1 || N < 1 || static_cast<std::int64_t>(v.size()) < N + H) {
        throw ShapeMismatch("vdc_check needs N + H vectors");
    }
    const std::size_t d = v[0].size();
    auto inner = [&](std::size_t a, std::size_t b) {
        std::complex<double> s = 0;
        for (std::size_t i = 0; i < d; ++i) s += v[a][i] * std::conj(v[b][i]);
        return s;
    };
    VdcResult r;
    std::vector<ComplexCompensatedSum> mean(d);
    for (std::int64_t n = 0; n < N; ++n) {
        for (std::size_t i = 0; i < d; ++i) mean[i].add(v[static_cast<std::size_t>(n)][i]);
    }
    for (std::size_t i = 0; i < d; ++i) r.lhs += std::norm(mean[i].value() / static_cast<double>(N));
    CompensatedSum bh_sum;
    for (std::int64_t h = 1; h <= H; ++h) {
        ComplexCompensatedSum c;
        for (std::int64_t n = 0; n < N; ++n) c.add(inner(static_cast<std::size_t>(n + h), static_cast<std::size_t>(n)));
        bh_sum.add(std::abs(c.value() / static_cast<double>(N)));
    }
    r.rhs = bh_sum.value() / static_cast<double>(H);
    r.slack = std::max(0.0, r.lhs - 4 * r.rhs);
    return r;
}

std::vector<ChangeVarPoint> change_var_check(const HardyNormalForm& a,
                                             const std::function<std::complex<double>(std::int64_t)>& V,
                                             const std::vector<std::int64_t>& schedule, bool serial) {
    if (a.is_zero()) throw GrowthOutOfRange("a = 0");
    const GrowthKey key = a.leading_key();
    if (!(key.alpha.sign() > 0 && key < GrowthKey{Surd(1), 0}) || a.leading().coeff.sign() < 0) {
        throw GrowthOutOfRange(a.render() + " must satisfy t^eps < a(t) < t and increase");
    }
    if (schedule.empty()) return {};
    const std::int64_t N = *std::max_element(schedule.begin(), schedule.end());
    const FloorSequence seq = floor_seq(a, 1, N, serial);
    std::vector<std::int64_t> sorted = schedule;
    std::sort(sorted.begin(), sorted.end());
    std::vector<ChangeVarPoint> out;
    ComplexCompensatedSum along, plain;
    std::size_t next = 0;
    for (std::int64_t n = 1; n <= N && next < sorted.size(); ++n) {
        along.add(V(seq(n)));
        plain.add(V(n));
        while (next < sorted.size() && sorted[next] == n) {
            out.push_back({n, std::abs((along.value() - plain.value()) / static_cast<double>(n))});
            ++next;
        }
    }
    return out;
}

OscillationReport cesaro_diagnostic(const AverageSeries& series, std::int64_t from, std::int64_t to,
                                    double threshold) {
    OscillationReport rep;
    rep.threshold = threshold;
    for (std::int64_t lo = 1; lo <= series.N.back(); lo *= 2) {
        const std::int64_t hi = 2 * lo;
        std::vector<std::size_t> idx;
        for (std::size_t c = 0; c < series.N.size(); ++c) {
            const auto n = series.N[c];
            if (n >= lo && n <= hi && n >= from && n <= to) idx.push_back(c);
        }
        if (idx.size() < 2) continue;
        double osc = 0;
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                osc = std::max(osc, rms_distance(series.values[idx[a]], series.values[idx[b]]));
            }
        }
        rep.windows.push_back({series.N[idx.front()], series.N[idx.back()], osc});
        rep.max_osc = std::max(rep.max_osc, osc);
        if (hi > INT64_MAX / 2) break;
    }
    rep.oscillating = rep.max_osc > threshold;
    return rep;
}

OscillationReport cesaro_diagnostic(const std::vector<std::int64_t>& N, const std::vector<std::complex<double>>& values,
                                    std::int64_t from, std::int64_t to, double threshold) {
    if (N.size() != values.size() || N.empty()) throw ShapeMismatch("cesaro_diagnostic: N and values differ");
    AverageSeries s;
    s.N = N;
    for (auto v : values) s.values.push_back({v});
    return cesaro_diagnostic(s, from, to, threshold);
}

void write_csv(const AverageSeries& s, std::ostream& out) {
    out << "N,re,im,rms\n";
    out.precision(17);
    for (std::size_t c = 0; c < s.N.size(); ++c) {
        out << s.N[c] << ',' << s.mean[c].real() << ',' << s.mean[c].imag() << ',' << s.rms[c] << '\n';
    }
}

nlohmann::json to_json(const AverageSeries& s) {
    nlohmann::json j;
    j["method"] = s.method;
    j["bound"] = s.bound;
    j["grid_points"] = s.values.empty() ? 0 : s.values[0].size();
    auto& cps = j["checkpoints"] = nlohmann::json::array();
    for (std::size_t c = 0; c < s.N.size(); ++c) {
        cps.push_back({{"N", s.N[c]}, {"re", s.mean[c].real()}, {"im", s.mean[c].imag()}, {"rms", s.rms[c]}});
    }
    return j;
}

nlohmann::json to_json(const RecurrenceSeries& s) {
    nlohmann::json j;
    j["method"] = s.method;
    j["lower_bound"] = s.lower_bound;
    auto& cps = j["checkpoints"] = nlohmann::json::array();
    for (std::size_t c = 0; c < s.N.size(); ++c) cps.push_back({{"N", s.N[c]}, {"average", s.average[c]}});
    return j;
}

nlohmann::json to_json(const OscillationReport& r) {
    nlohmann::json j;
    j["max_osc"] = r.max_osc;
    j["threshold"] = r.threshold;
    j["oscillating"] = r.oscillating;
    auto& w = j["windows"] = nlohmann::json::array();
    for (const auto& win : r.windows) w.push_back({{"N1", win.N1}, {"N2", win.N2}, {"osc", win.osc}});
    return j;
}

}  // namespace hardy
