#include "hardy/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/error.hpp"
#include "hardy/parallel.hpp"
#include "hardy/summation.hpp"

namespace hardy {

namespace {

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// S(j, i), second kind, rows 0..n.
std::vector<std::vector<mpz_class>> stirling2(std::size_t n) {
    std::vector<std::vector<mpz_class>> s(n + 1, std::vector<mpz_class>(n + 1, 0));
    s[0][0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 1; i <= j; ++i) s[j][i] = s[j - 1][i - 1] + mpz_class(static_cast<unsigned long>(i)) * s[j - 1][i];
    }
    return s;
}

// Signed s(i, j), first kind: n(n-1)...(n-i+1) = sum_j s(i, j) n^j.
std::vector<std::vector<mpz_class>> stirling1(std::size_t n) {
    std::vector<std::vector<mpz_class>> s(n + 1, std::vector<mpz_class>(n + 1, 0));
    s[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= i; ++j) {
            s[i][j] = s[i - 1][j - 1] - mpz_class(static_cast<unsigned long>(i - 1)) * s[i - 1][j];
        }
    }
    return s;
}

Surd dyadic(Phase p) {
    mpq_class q{mpz_class(std::to_string(p.raw)), mpz_class(1)};
    q /= mpq_class(mpz_class(1) << 64);
    return Surd(q);
}

Surd dot(const std::vector<std::int64_t>& k, const std::vector<Surd>& v) {
    Surd acc;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] != 0) acc += Surd(static_cast<long>(k[i])) * v[i];
    }
    return acc;
}

std::vector<Surd> mat_vec(const IntMatrix& N, const std::vector<Surd>& v) {
    std::vector<Surd> out(v.size());
    for (std::size_t r = 0; r < N.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (N[r][c] != 0) out[r] += Surd(static_cast<long>(N[r][c])) * v[c];
        }
    }
    return out;
}

bool is_zero_vector(const std::vector<Surd>& v) {
    return std::all_of(v.begin(), v.end(), [](const Surd& s) { return s.is_zero(); });
}

// Orbit vectors v_0 = x, v_j = N^j x + N^(j-1) b, so kappa . T^n x = sum_j C(n, j) kappa . v_j.
std::vector<std::vector<Surd>> orbit_vectors(const ExactAffine& T, const std::vector<Surd>& x) {
    const std::size_t d = T.dim();
    if (x.size() != d || T.S.size() != d) throw ShapeMismatch("affine orbit: dimension mismatch");
    IntMatrix N = T.S;
    for (std::size_t i = 0; i < d; ++i) N[i][i] -= 1;
    std::vector<std::vector<Surd>> v{x};
    std::vector<Surd> Nx = x, Nb = T.b;
    for (std::size_t j = 1; j <= d; ++j) {
        Nx = mat_vec(N, Nx);
        std::vector<Surd> vj(d);
        for (std::size_t i = 0; i < d; ++i) vj[i] = Nx[i] + Nb[i];
        v.push_back(std::move(vj));
        Nb = mat_vec(N, Nb);
    }
    return v;
}

std::int64_t eval_int_poly(const IntPoly& p, std::int64_t n) {
    mpz_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * n + p[i];
    if (!acc.fits_slong_p()) throw DomainError("p(n) overflows 64 bits at n = " + std::to_string(n));
    return acc.get_si();
}

}  // namespace

BinomialPoly BinomialPoly::from_monomial(const std::vector<Surd>& a) {
    const auto s = stirling2(a.size());
    BinomialPoly out;
    out.alpha.assign(a.size(), Surd());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].is_zero()) continue;
        for (std::size_t i = 0; i <= j; ++i) {
            if (s[j][i] == 0) continue;
            out.alpha[i] += a[j] * Surd(mpq_class(s[j][i] * factorial(i)));
        }
    }
    return out;
}

std::vector<Surd> BinomialPoly::to_monomial() const {
    const auto s = stirling1(alpha.size());
    std::vector<Surd> a(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i].is_zero()) continue;
        const Surd scaled = alpha[i].divided_by(mpq_class(factorial(i)));
        for (std::size_t j = 0; j <= i; ++j) {
            if (s[i][j] != 0) a[j] += scaled * Surd(mpq_class(s[i][j]));
        }
    }
    return a;
}

Surd BinomialPoly::operator()(std::int64_t n) const {
    Surd acc;
    const mpz_class nz(static_cast<long>(n));
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        mpz_class c;
        mpz_bin_ui(c.get_mpz_t(), nz.get_mpz_t(), static_cast<unsigned long>(i));
        acc += alpha[i] * Surd(mpq_class(c));
    }
    return acc;
}

std::string BinomialPoly::render() const {
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + alpha[i].to_string() + ")*C(n," + std::to_string(i) + ")";
    }
    return out.empty() ? "0" : out;
}

double dist_to_integer(const Surd& s) {
    if (s.is_rational()) {
        const mpq_class q = s.rational();
        const mpq_class f = q - mpq_class(floor_of(q));
        const mpq_class g = 1 - f;
        return (f < g ? f : g).get_d();
    }
    for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
        const Interval v = s.enclose(prec);
        if (auto fl = v.certified_floor()) {
            const double f = (v - Interval::from_integer(*fl, prec)).midpoint();
            return std::min(f, 1.0 - f);
        }
    }
    throw UndecidableFloor(0);
}

double cinf_norm(const BinomialPoly& p, std::int64_t N) {
    if (N < 1) throw DomainError("C-infinity norm needs N >= 1");
    double best = 0.0;
    for (std::size_t i = 1; i < p.alpha.size(); ++i) {
        if (p.alpha[i].is_rational()) {
            const mpq_class q = p.alpha[i].rational();
            mpq_class f = q - mpq_class(floor_of(q));
            if (f > mpq_class(1, 2)) f = 1 - f;
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(i));
            best = std::max(best, mpq_class(f * scale).get_d());
        } else {
            best = std::max(best, std::pow(static_cast<double>(N), static_cast<double>(i)) * dist_to_integer(p.alpha[i]));
        }
    }
    return best;
}

double cinf_norm_monomial(const std::vector<Surd>& a, std::int64_t N) {
    return cinf_norm(BinomialPoly::from_monomial(a), N);
}

ExactAffine ExactAffine::from(const AffineTorus& T) {
    ExactAffine out{T.S, {}};
    for (Phase p : T.b) out.b.push_back(dyadic(p));
    return out;
}

ExactAffine ExactAffine::from(const TorusRotation& R) {
    const std::size_t d = R.dim();
    ExactAffine out{IntMatrix(d, std::vector<std::int64_t>(d, 0)), {}};
    for (std::size_t i = 0; i < d; ++i) {
        out.S[i][i] = 1;
        out.b.push_back(dyadic(R.alpha[i]));
    }
    return out;
}

std::vector<Surd> exact_coords(const Point& x) {
    std::vector<Surd> out;
    for (Phase p : x.coords) out.push_back(dyadic(p));
    return out;
}

BinomialPoly orbit_polynomial(const ExactAffine& T, const std::vector<std::int64_t>& kappa,
                              const std::vector<Surd>& x) {
    if (kappa.size() != T.dim()) throw ShapeMismatch("frequency has the wrong dimension");
    BinomialPoly p;
    for (const auto& v : orbit_vectors(T, x)) p.alpha.push_back(dot(kappa, v));
    while (p.alpha.size() > 1 && p.alpha.back().is_zero()) p.alpha.pop_back();
    return p;
}

FrequencyHit frequency_minimum(const ExactAffine& T, const std::vector<Surd>& x, int d, std::int64_t N,
                               std::int64_t M, bool serial) {
    if (M < 1) throw DomainError("frequency bound must be at least 1");
    if (d < 0) throw DomainError("degree must be nonnegative");
    const auto vectors = orbit_vectors(T, x);
    for (std::size_t j = static_cast<std::size_t>(d) + 1; j < vectors.size(); ++j) {
        if (!is_zero_vector(vectors[j])) {
            throw DomainError("orbit polynomial has degree above " + std::to_string(d));
        }
    }
    const std::size_t dim = T.dim();
    const std::uint64_t side = static_cast<std::uint64_t>(2 * M + 1);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > (std::uint64_t{1} << 32) / side) throw BudgetExceeded("frequency search space too large");
        total *= side;
    }
    // index -> kappa, first coordinate most significant, so index order is lexicographic
    auto kappa_of = [&](std::uint64_t index) {
        std::vector<std::int64_t> k(dim);
        for (std::size_t i = dim; i-- > 0;) {
            k[i] = static_cast<std::int64_t>(index % side) - M;
            index /= side;
        }
        return k;
    };
    std::vector<double> norms(total, std::numeric_limits<double>::infinity());
    parallel_for(
        total,
        [&](std::size_t index) {
            const auto k = kappa_of(index);
            if (std::all_of(k.begin(), k.end(), [](std::int64_t c) { return c == 0; })) return;
            BinomialPoly p;
            for (const auto& v : vectors) p.alpha.push_back(dot(k, v));
            norms[index] = cinf_norm(p, N);
        },
        serial);
    std::size_t best = 0;
    for (std::size_t i = 1; i < total; ++i) {
        if (norms[i] < norms[best]) best = i;
    }
    FrequencyHit hit{kappa_of(best), norms[best], {}};
    hit.poly = orbit_polynomial(T, hit.kappa, x);
    return hit;
}

std::optional<FrequencyHit> frequency_search(const ExactAffine& T, const std::vector<Surd>& x, int d,
                                             std::int64_t N, std::int64_t M, std::optional<double> threshold,
                                             bool serial) {
    FrequencyHit hit = frequency_minimum(T, x, d, N, M, serial);
    if (hit.norm <= threshold.value_or(static_cast<double>(M))) return hit;
    return std::nullopt;
}

std::optional<FrequencyHit> frequency_search(const AffineTorus& T, const Point& x, int d, std::int64_t N,
                                             std::int64_t M, std::optional<double> threshold, bool serial) {
    return frequency_search(ExactAffine::from(T), exact_coords(x), d, N, M, threshold, serial);
}

double uniform_equidist_check(const System& s, const Observable& F, const IntPoly& p, std::int64_t M_win,
                              std::int64_t N_win, const std::vector<Point>& grid, bool serial) {
    if (N_win < M_win) throw DomainError("empty window");
    check_shape(s, F);
    const std::complex<double> mean = integral(s, F);
    const std::size_t count = static_cast<std::size_t>(N_win - M_win + 1);
    std::vector<std::int64_t> times(count);
    for (std::size_t i = 0; i < count; ++i) times[i] = eval_int_poly(p, M_win + static_cast<std::int64_t>(i));

    // characters on rotations and affine maps: phase is a binomial combination of p(n)
    const TorusCharacter* chi = std::get_if<TorusCharacter>(&F.kind);
    std::optional<AffineTorus> affine;
    if (chi != nullptr) {
        if (const auto* r = std::get_if<TorusRotation>(&s.kind)) {
            IntMatrix I(r->dim(), std::vector<std::int64_t>(r->dim(), 0));
            for (std::size_t i = 0; i < r->dim(); ++i) I[i][i] = 1;
            affine = AffineTorus{I, r->alpha};
        } else if (const auto* a = std::get_if<AffineTorus>(&s.kind)) {
            affine = *a;
        }
    }

    std::vector<double> deviation(grid.size());
    parallel_for(
        grid.size(),
        [&](std::size_t g) {
            ComplexCompensatedSum sum;
            if (affine) {
                const auto c = affine_orbit_coefficients(*affine, chi->k, grid[g].coords);
                for (std::int64_t m : times) {
                    Phase ph = c[0];
                    for (std::size_t j = 1; j < c.size(); ++j) ph += binomial_mod64(m, j) * c[j];
                    sum.add(e(ph));
                }
            } else {
                for (std::int64_t m : times) sum.add(evaluate(F, iterate(s, grid[g], m)));
            }
            deviation[g] = std::abs(sum.value() / static_cast<double>(count) - mean);
        },
        serial);
    return grid.empty() ? 0.0 : *std::max_element(deviation.begin(), deviation.end());
}

nlohmann::json to_json(const FrequencyHit& h) {
    return {{"kappa", h.kappa}, {"norm", h.norm}, {"orbit_polynomial", h.poly.render()}};
}

}  // namespace hardy
