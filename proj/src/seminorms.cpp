#include "hardy/seminorms.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "hardy/error.hpp"
#include "hardy/parallel.hpp"
#include "hardy/summation.hpp"

namespace hardy {

namespace {

using cd = std::complex<double>;

double root(double s, int ell) { return std::pow(std::max(s, 0.0), 1.0 / std::ldexp(1.0, ell)); }

// A function on a finite product of cyclic groups, stored in mixed radix.
struct FiniteTable {
    std::vector<std::int64_t> moduli;
    std::vector<cd> values;

    std::size_t shifted(std::size_t index, std::int64_t n) const {
        std::size_t out = 0, stride = 1;
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            const auto m = static_cast<std::size_t>(moduli[i]);
            const std::size_t digit = (index / stride) % m;
            out += ((digit + static_cast<std::size_t>(n % moduli[i])) % m) * stride;
            stride *= m;
        }
        return out;
    }
};

void collect_moduli(const System& s, std::vector<std::int64_t>& out) {
    if (auto* c = std::get_if<FiniteCyclic>(&s.kind)) {
        out.push_back(c->m);
    } else if (auto* p = std::get_if<Product>(&s.kind)) {
        for (const auto& f : p->factors) collect_moduli(f, out);
    } else {
        throw UnsupportedSystem("not a finite system");
    }
}

bool is_finite(const System& s) {
    if (std::holds_alternative<FiniteCyclic>(s.kind)) return true;
    if (auto* p = std::get_if<Product>(&s.kind)) {
        for (const auto& f : p->factors) {
            if (!is_finite(f)) return false;
        }
        return !p->factors.empty();
    }
    return false;
}

Point point_of(const System& s, std::size_t& index) {
    Point x;
    if (auto* c = std::get_if<FiniteCyclic>(&s.kind)) {
        const auto m = static_cast<std::size_t>(c->m);
        x.residue = static_cast<std::int64_t>(index % m);
        index /= m;
    } else {
        for (const auto& f : std::get<Product>(s.kind).factors) x.factors.push_back(point_of(f, index));
    }
    return x;
}

FiniteTable tabulate(const System& s, const Observable& f) {
    FiniteTable t;
    collect_moduli(s, t.moduli);
    std::size_t size = 1;
    for (auto m : t.moduli) size *= static_cast<std::size_t>(m);
    t.values.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
        std::size_t rest = i;
        t.values[i] = evaluate(f, point_of(s, rest));
    }
    return t;
}

// S_l(g) = |||g|||_l^{2^l}; the Cesaro limit over a full period of T is exact.
double finite_power(const FiniteTable& g, int ell, std::int64_t period) {
    const std::size_t M = g.values.size();
    if (ell == 1) {
        // ||E(g|I)||^2, E(g|I) the orbit average
        CompensatedSum sq;
        for (std::size_t i = 0; i < M; ++i) {
            ComplexCompensatedSum orbit;
            for (std::int64_t n = 0; n < period; ++n) orbit.add(g.values[g.shifted(i, n)]);
            sq.add(std::norm(orbit.value() / static_cast<double>(period)));
        }
        return sq.value() / static_cast<double>(M);
    }
    CompensatedSum outer;
    FiniteTable d{g.moduli, std::vector<cd>(M)};
    for (std::int64_t n = 0; n < period; ++n) {
        for (std::size_t i = 0; i < M; ++i) d.values[i] = std::conj(g.values[i]) * g.values[g.shifted(i, n)];
        outer.add(finite_power(d, ell - 1, period));
    }
    return outer.value() / static_cast<double>(period);
}

// Trigonometric polynomial on a torus: frequency -> coefficient.
using Fourier = std::map<std::vector<std::int64_t>, cd>;

Fourier fourier_of(const Observable& f, std::size_t dim) {
    Fourier out;
    if (auto* chi = std::get_if<TorusCharacter>(&f.kind)) {
        out[chi->k] = 1.0;
    } else if (auto* p = std::get_if<TorusTrigPoly>(&f.kind)) {
        for (const auto& [c, k] : p->terms) out[k] += c;
    } else if (auto* c = std::get_if<Constant>(&f.kind)) {
        out[std::vector<std::int64_t>(dim, 0)] = c->value;
    }
    return out;
}

// conj(g) * T^n g for the rotation by alpha.
Fourier rotation_derivative(const Fourier& g, const std::vector<Phase>& alpha, std::int64_t n) {
    Fourier out;
    for (const auto& [k, a] : g) {
        for (const auto& [k2, b] : g) {
            Phase ph;
            std::vector<std::int64_t> freq(k.size());
            for (std::size_t i = 0; i < k.size(); ++i) {
                ph += (k2[i] * n) * alpha[i];
                freq[i] = k2[i] - k[i];
            }
            out[freq] += std::conj(a) * b * e(ph);
        }
    }
    return out;
}

double rotation_power(const Fourier& g, const std::vector<Phase>& alpha, int ell, std::int64_t N) {
    if (ell == 1) {
        const auto it = g.find(std::vector<std::int64_t>(alpha.size(), 0));
        return it == g.end() ? 0.0 : std::norm(it->second);
    }
    CompensatedSum outer;
    for (std::int64_t n = 1; n <= N; ++n) outer.add(rotation_power(rotation_derivative(g, alpha, n), alpha, ell - 1, N));
    return outer.value() / static_cast<double>(N);
}

// Generic ergodic system: S_l(f) = E_{n_1..n_{l-1}} |int prod_w C^{l-1-|w|} f(T^{w.n} x) dx|^2.
double quadrature_power(const System& s, const Observable& f, int ell, std::int64_t N, const std::vector<Point>& grid) {
    const std::size_t corners = std::size_t{1} << (ell - 1);
    std::vector<std::int64_t> n(static_cast<std::size_t>(ell - 1), 1);
    CompensatedSum outer;
    std::int64_t count = 0;
    for (;;) {
        ComplexCompensatedSum integral;
        for (const auto& x : grid) {
            cd prod = 1.0;
            for (std::size_t w = 0; w < corners; ++w) {
                std::int64_t shift = 0;
                int weight = 0;
                for (std::size_t b = 0; b < n.size(); ++b) {
                    if (w >> b & 1) {
                        shift += n[b];
                        ++weight;
                    }
                }
                const cd v = evaluate(f, iterate(s, x, shift));
                prod *= ((ell - 1 - weight) % 2 != 0) ? std::conj(v) : v;
            }
            integral.add(prod);
        }
        outer.add(std::norm(integral.value() / static_cast<double>(grid.size())));
        ++count;
        std::size_t b = 0;
        while (b < n.size() && n[b] == N) n[b++] = 1;
        if (b == n.size()) break;
        ++n[b];
    }
    return outer.value() / static_cast<double>(count);
}

}  // namespace

SeminormResult gowers_bruteforce(const std::vector<cd>& f, int ell) {
    if (ell < 1) throw DomainError("seminorm level must be at least 1");
    const auto m = static_cast<std::uint64_t>(f.size());
    if (m == 0) throw ShapeMismatch("empty function");
    std::uint64_t tuples = m;
    for (int i = 0; i < ell; ++i) {
        if (tuples > kGowersBudget / m) {
            throw BudgetExceeded("Z/" + std::to_string(m) + " at level " + std::to_string(ell) + " exceeds the tuple budget");
        }
        tuples *= m;
    }
    const std::size_t M = f.size();
    // products over the cube are built one coordinate h_i at a time; every tuple is visited
    std::vector<double> per_h1(M);
    parallel_for(M, [&](std::size_t h1) {
        std::vector<std::vector<cd>> level(static_cast<std::size_t>(ell) + 1, std::vector<cd>(M));
        std::vector<std::size_t> h(static_cast<std::size_t>(ell), 0);
        h[0] = h1;
        for (std::size_t x = 0; x < M; ++x) level[0][x] = f[x];
        auto extend = [&](int i) {
            const auto& src = level[static_cast<std::size_t>(i)];
            auto& dst = level[static_cast<std::size_t>(i) + 1];
            for (std::size_t x = 0; x < M; ++x) dst[x] = src[x] * std::conj(src[(x + h[static_cast<std::size_t>(i)]) % M]);
        };
        CompensatedSum sum;
        extend(0);
        for (;;) {
            // fill levels 2..ell for the current h
            ComplexCompensatedSum s;
            for (int i = 1; i < ell; ++i) extend(i);
            for (std::size_t x = 0; x < M; ++x) s.add(level[static_cast<std::size_t>(ell)][x]);
            sum.add(s.value().real());
            std::size_t b = 1;
            while (b < h.size() && h[b] == M - 1) h[b++] = 0;
            if (b == h.size()) break;
            ++h[b];
        }
        per_h1[h1] = sum.value();
    });
    CompensatedSum total;
    for (double v : per_h1) total.add(v);
    SeminormResult r;
    r.ell = ell;
    r.value = root(total.value() / static_cast<double>(tuples), ell);
    r.method = "brute-force";
    return r;
}

SeminormResult seminorm_recursive(const System& s, const Observable& f, int ell, std::int64_t n_trunc,
                                  std::size_t grid_points) {
    if (ell < 1) throw DomainError("seminorm level must be at least 1");
    check_shape(s, f);
    SeminormResult r;
    r.ell = ell;
    if (is_finite(s)) {
        const FiniteTable t = tabulate(s, f);
        const std::int64_t period = std::accumulate(t.moduli.begin(), t.moduli.end(), std::int64_t{1},
                                                    [](std::int64_t a, std::int64_t b) { return std::lcm(a, b); });
        r.value = root(finite_power(t, ell, period), ell);
        r.method = "recursive-exact";
        return r;
    }
    if (n_trunc < 2) throw DomainError("truncation length must be at least 2");
    r.n_trunc = n_trunc;
    auto* rot = std::get_if<TorusRotation>(&s.kind);
    const bool fourier = rot && (std::holds_alternative<TorusCharacter>(f.kind) ||
                                 std::holds_alternative<TorusTrigPoly>(f.kind) || std::holds_alternative<Constant>(f.kind));
    if (std::holds_alternative<Constant>(f.kind)) {
        r.value = std::abs(std::get<Constant>(f.kind).value);
        r.method = "recursive-exact";
        return r;
    }
    if (std::holds_alternative<Product>(s.kind)) throw UnsupportedSystem("seminorms on products with continuous factors");
    double full = 0.0, half = 0.0;
    if (fourier) {
        const Fourier g = fourier_of(f, rot->dim());
        full = rotation_power(g, rot->alpha, ell, n_trunc);
        half = ell > 1 ? rotation_power(g, rot->alpha, ell, n_trunc / 2) : full;
        r.method = "recursive-fourier";
    } else {
        const auto grid = default_grid(s, grid_points);
        full = quadrature_power(s, f, ell, n_trunc, grid);
        half = ell > 1 ? quadrature_power(s, f, ell, n_trunc / 2, grid) : full;
        r.method = "recursive-quadrature";
    }
    r.value = root(full, ell);
    r.error = std::abs(r.value - root(half, ell));
    return r;
}

ProductIdentity product_identity_check(const std::vector<cd>& f, int ell, double tolerance) {
    const auto m = static_cast<std::int64_t>(f.size());
    const System cyc{make_cyclic(m)};
    const System prod{Product{{cyc, cyc}}};
    std::vector<cd> fbar(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fbar[i] = std::conj(f[i]);
    const Observable tensor{Tensor{{Observable{FiniteVector{f}}, Observable{FiniteVector{fbar}}}}};
    ProductIdentity out;
    const double left = gowers_bruteforce(f, ell + 1).value;
    out.lhs = left * left;
    out.rhs = seminorm_recursive(prod, tensor, ell).value;
    out.holds = std::abs(out.lhs - out.rhs) <= tolerance;
    return out;
}

nlohmann::json to_json(const SeminormResult& r) {
    return {{"ell", r.ell}, {"value", r.value}, {"method", r.method}, {"n_trunc", r.n_trunc}, {"error", r.error}};
}

}  // namespace hardy
