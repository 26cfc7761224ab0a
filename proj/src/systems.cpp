#include "hardy/systems.hpp"

#include <gmpxx.h>

#include <cmath>
#include <sstream>

#include "hardy/error.hpp"

namespace hardy {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

std::vector<std::uint64_t> mat_vec(const IntMatrix& M, const std::vector<std::uint64_t>& v) {
    std::vector<std::uint64_t> out(v.size(), 0);
    for (std::size_t r = 0; r < M.size(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < v.size(); ++c) acc += static_cast<std::uint64_t>(M[r][c]) * v[c];
        out[r] = acc;
    }
    return out;
}

IntMatrix nilpotent_part(const IntMatrix& S) {
    IntMatrix N = S;
    for (std::size_t i = 0; i < N.size(); ++i) N[i][i] -= 1;
    return N;
}

std::vector<std::uint64_t> raw_of(const std::vector<Phase>& v) {
    std::vector<std::uint64_t> out;
    out.reserve(v.size());
    for (auto p : v) out.push_back(p.raw);
    return out;
}

Point iterate_affine(const AffineTorus& T, const Point& x, std::int64_t n) {
    const std::size_t d = T.dim();
    const IntMatrix N = nilpotent_part(T.S);
    std::vector<std::uint64_t> acc(d, 0);
    std::vector<std::uint64_t> Nx = raw_of(x.coords);
    std::vector<std::uint64_t> Nb = raw_of(T.b);
    // T^n x = sum_i C(n,i) N^i x + sum_i C(n,i+1) N^i b
    for (std::size_t i = 0; i < d; ++i) {
        const std::uint64_t cx = binomial_mod64(n, i);
        const std::uint64_t cb = binomial_mod64(n, i + 1);
        for (std::size_t r = 0; r < d; ++r) acc[r] += cx * Nx[r] + cb * Nb[r];
        Nx = mat_vec(N, Nx);
        Nb = mat_vec(N, Nb);
    }
    Point out;
    out.coords.reserve(d);
    for (auto a : acc) out.coords.push_back({a});
    return out;
}

Point iterate_heisenberg(const Heisenberg& H, const Point& g, std::int64_t n) {
    const std::uint64_t x = g.coords[0].raw, y = g.coords[1].raw, z = g.coords[2].raw;
    const std::uint64_t f1 = H.beta1.frac.raw, f2 = H.beta2.frac.raw, f3 = H.beta3.frac.raw;
    const auto I1 = static_cast<std::uint64_t>(H.beta1.integer);
    const auto I2 = static_cast<std::uint64_t>(H.beta2.integer);
    const auto un = static_cast<std::uint64_t>(n);
    const auto wn = static_cast<u128>(static_cast<i128>(n));

    // b^n g = (n b1 + x, n b2 + y, n b3 + C(n,2) b1 b2 + z + n b1 y)
    const std::uint64_t fx = x + un * f1;
    const i128 ys = static_cast<i128>(n) * static_cast<i128>(f2) + static_cast<i128>(y);
    const std::uint64_t fy = static_cast<std::uint64_t>(ys);
    const std::uint64_t floor_y = un * I2 + static_cast<std::uint64_t>(ys >> 64);

    // fractional parts of the z contributions as 128-bit binary fractions
    const u128 b1b2 = (static_cast<u128>(I1 * f2 + I2 * f1) << 64) + static_cast<u128>(f1) * f2;
    const u128 b1y = (static_cast<u128>(I1 * y) << 64) + static_cast<u128>(f1) * y;
    const i128 c2 = static_cast<i128>(n) * (static_cast<i128>(n) - 1) / 2;
    u128 Z = static_cast<u128>(z) << 64;
    Z += wn * (static_cast<u128>(f3) << 64);
    Z += static_cast<u128>(c2) * b1b2;
    Z += wn * b1y;
    // right-multiply by (-floor X, -floor Y, *): z -= frac(X) * floor(Y)
    Z -= static_cast<u128>(fx * floor_y) << 64;
    const std::uint64_t fz = static_cast<std::uint64_t>((Z + (static_cast<u128>(1) << 63)) >> 64);

    Point out;
    out.coords = {{fx}, {fy}, {fz}};
    return out;
}

std::uint64_t dot_raw(const std::vector<std::int64_t>& k, const std::vector<Phase>& x) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < k.size(); ++i) acc += static_cast<std::uint64_t>(k[i]) * x[i].raw;
    return acc;
}

double ramp(double u, double lo, double hi, double w) {
    if (w <= 0) return (u >= lo && u <= hi) ? 1.0 : 0.0;
    const double inside = std::min(u - lo, hi - u) / w + 0.5;
    return std::clamp(inside, 0.0, 1.0);
}

const std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

void fill_point(const System& s, const std::vector<double>& u, std::size_t& at, Point& p);

void fill_point(const System& s, const std::vector<double>& u, std::size_t& at, Point& p) {
    std::visit(overloaded{
                   [&](const TorusRotation& r) {
                       for (std::size_t i = 0; i < r.dim(); ++i) p.coords.push_back(Phase::from_double(u[at++]));
                   },
                   [&](const AffineTorus& a) {
                       for (std::size_t i = 0; i < a.dim(); ++i) p.coords.push_back(Phase::from_double(u[at++]));
                   },
                   [&](const Heisenberg&) {
                       for (int i = 0; i < 3; ++i) p.coords.push_back(Phase::from_double(u[at++]));
                   },
                   [&](const FiniteCyclic& c) {
                       p.residue = std::min<std::int64_t>(c.m - 1, static_cast<std::int64_t>(u[at++] * c.m));
                   },
                   [&](const Product& pr) {
                       for (const auto& f : pr.factors) {
                           Point q;
                           fill_point(f, u, at, q);
                           p.factors.push_back(std::move(q));
                       }
                   },
               },
               s.kind);
}

std::size_t grid_dim(const System& s) {
    return std::visit(overloaded{
                          [](const TorusRotation& r) { return r.dim(); },
                          [](const AffineTorus& a) { return a.dim(); },
                          [](const Heisenberg&) { return std::size_t{3}; },
                          [](const FiniteCyclic&) { return std::size_t{1}; },
                          [](const Product& p) {
                              std::size_t d = 0;
                              for (const auto& f : p.factors) d += grid_dim(f);
                              return d;
                          },
                      },
                      s.kind);
}

std::string join_phases(const std::vector<Phase>& v) {
    std::ostringstream o;
    o.precision(17);
    o << '[';
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? ", " : "") << v[i].value();
    o << ']';
    return o.str();
}

}  // namespace

std::uint64_t binomial_mod64(std::int64_t n, unsigned long i) {
    if (i == 0) return 1;
    if (i == 1) return static_cast<std::uint64_t>(n);
    if (i == 2) {
        // n(n-1) is even, so halve before reducing
        const i128 v = static_cast<i128>(n) * (static_cast<i128>(n) - 1) / 2;
        return static_cast<std::uint64_t>(static_cast<u128>(v));
    }
    mpz_class b;
    mpz_class nz(static_cast<long>(n));
    mpz_bin_ui(b.get_mpz_t(), nz.get_mpz_t(), i);
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), b.get_mpz_t(), 64);
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, r.get_mpz_t());
    return out;
}

std::vector<Phase> affine_orbit_coefficients(const AffineTorus& T, const std::vector<std::int64_t>& k,
                                             const std::vector<Phase>& x) {
    const std::size_t d = T.dim();
    if (k.size() != d || x.size() != d) throw ShapeMismatch("affine orbit: dimension mismatch");
    const IntMatrix N = nilpotent_part(T.S);
    auto dot = [&](const std::vector<std::uint64_t>& v) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < d; ++i) acc += static_cast<std::uint64_t>(k[i]) * v[i];
        return Phase{acc};
    };
    std::vector<Phase> c;
    std::vector<std::uint64_t> Nx = raw_of(x);
    std::vector<std::uint64_t> Nb = raw_of(T.b);
    c.push_back(dot(Nx));
    for (std::size_t j = 1; j <= d; ++j) {
        Nx = mat_vec(N, Nx);
        c.push_back(dot(Nx) + dot(Nb));
        Nb = mat_vec(N, Nb);
    }
    return c;
}

TorusRotation make_rotation(std::vector<Phase> alpha) {
    if (alpha.empty()) throw ShapeMismatch("rotation needs dimension >= 1");
    return TorusRotation{std::move(alpha)};
}

AffineTorus make_affine(IntMatrix S, std::vector<Phase> b) {
    const std::size_t d = b.size();
    if (d == 0 || S.size() != d) throw ShapeMismatch("affine map: S must be d x d with d = dim b");
    for (const auto& row : S) {
        if (row.size() != d) throw ShapeMismatch("affine map: S must be square");
    }
    // (S - I)^d must vanish
    const IntMatrix N = nilpotent_part(S);
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<mpz_class> col(d, 0);
        col[c] = 1;
        for (std::size_t k = 0; k < d; ++k) {
            std::vector<mpz_class> next(d, 0);
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t j = 0; j < d; ++j) next[r] += mpz_class(static_cast<long>(N[r][j])) * col[j];
            }
            col = std::move(next);
        }
        for (const auto& v : col) {
            if (v != 0) throw UnsupportedSystem("affine map: S is not unipotent");
        }
    }
    return AffineTorus{std::move(S), std::move(b)};
}

FiniteCyclic make_cyclic(std::int64_t m) {
    if (m < 1) throw ShapeMismatch("cyclic modulus must be >= 1");
    return FiniteCyclic{m};
}

std::string System::describe() const {
    return std::visit(overloaded{
                          [](const TorusRotation& r) { return "TorusRotation(alpha=" + join_phases(r.alpha) + ")"; },
                          [](const AffineTorus& a) {
                              std::ostringstream o;
                              o << "AffineTorus(S=[";
                              for (std::size_t i = 0; i < a.S.size(); ++i) {
                                  o << (i ? "; " : "");
                                  for (std::size_t j = 0; j < a.S[i].size(); ++j) o << (j ? " " : "") << a.S[i][j];
                              }
                              o << "], b=" << join_phases(a.b) << ")";
                              return o.str();
                          },
                          [](const Heisenberg& h) {
                              std::ostringstream o;
                              o.precision(17);
                              o << "Heisenberg(beta=[" << h.beta1.value() << ", " << h.beta2.value() << ", "
                                << h.beta3.value() << "])";
                              return o.str();
                          },
                          [](const FiniteCyclic& c) { return "FiniteCyclic(m=" + std::to_string(c.m) + ")"; },
                          [](const Product& p) {
                              std::string out = "Product(";
                              for (std::size_t i = 0; i < p.factors.size(); ++i) {
                                  out += (i ? ", " : "") + p.factors[i].describe();
                              }
                              return out + ")";
                          },
                      },
                      kind);
}

std::string Observable::describe() const {
    return std::visit(overloaded{
                          [](const TorusCharacter& c) {
                              std::string out = "e(";
                              for (std::size_t i = 0; i < c.k.size(); ++i) {
                                  out += (i ? "," : "") + std::to_string(c.k[i]);
                              }
                              return out + " . x)";
                          },
                          [](const TorusTrigPoly& t) { return "TrigPoly(" + std::to_string(t.terms.size()) + " terms)"; },
                          [](const FiniteVector& v) { return "FiniteVector(m=" + std::to_string(v.values.size()) + ")"; },
                          [](const HeisenbergBox&) { return std::string("HeisenbergBox"); },
                          [](const HeisenbergHorizontalCharacter& h) {
                              return "e(" + std::to_string(h.k1) + "x + " + std::to_string(h.k2) + "y)";
                          },
                          [](const Constant& c) {
                              std::ostringstream o;
                              o << "Constant(" << c.value.real() << (c.value.imag() < 0 ? "" : "+") << c.value.imag()
                                << "i)";
                              return o.str();
                          },
                          [](const Tensor& t) {
                              std::string out = "Tensor(";
                              for (std::size_t i = 0; i < t.factors.size(); ++i) {
                                  out += (i ? ", " : "") + t.factors[i].describe();
                              }
                              return out + ")";
                          },
                      },
                      kind);
}

Point iterate(const System& s, const Point& x, std::int64_t n) {
    return std::visit(overloaded{
                          [&](const TorusRotation& r) {
                              Point out = x;
                              for (std::size_t i = 0; i < r.dim(); ++i) out.coords[i] += n * r.alpha[i];
                              return out;
                          },
                          [&](const AffineTorus& a) { return iterate_affine(a, x, n); },
                          [&](const Heisenberg& h) { return iterate_heisenberg(h, x, n); },
                          [&](const FiniteCyclic& c) {
                              Point out = x;
                              const std::int64_t step = n % c.m;
                              out.residue = ((x.residue + step) % c.m + c.m) % c.m;
                              return out;
                          },
                          [&](const Product& p) {
                              Point out;
                              out.factors.reserve(p.factors.size());
                              for (std::size_t i = 0; i < p.factors.size(); ++i) {
                                  out.factors.push_back(iterate(p.factors[i], x.factors[i], n));
                              }
                              return out;
                          },
                      },
                      s.kind);
}

std::vector<Phase> reduce_heisenberg(const Lift& x, const Lift& y, const Lift& z) {
    const std::uint64_t fz = z.frac.raw - x.frac.raw * static_cast<std::uint64_t>(y.integer);
    return {x.frac, y.frac, {fz}};
}

std::array<double, 3> reduce_heisenberg(double x, double y, double z) {
    const double fx = x - std::floor(x);
    const double fy_floor = std::floor(y);
    const double zz = z - fx * fy_floor;
    return {fx, y - fy_floor, zz - std::floor(zz)};
}

std::array<double, 3> heisenberg_multiply(const std::array<double, 3>& g, const std::array<double, 3>& h) {
    return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]};
}

void check_shape(const System& s, const Observable& f) {
    auto fail = [&](const std::string& why) {
        throw ShapeMismatch(f.describe() + " does not fit " + s.describe() + ": " + why);
    };
    if (std::holds_alternative<Constant>(f.kind)) return;
    std::visit(overloaded{
                   [&](const TorusCharacter& c) {
                       std::size_t d = 0;
                       if (auto* r = std::get_if<TorusRotation>(&s.kind)) {
                           d = r->dim();
                       } else if (auto* a = std::get_if<AffineTorus>(&s.kind)) {
                           d = a->dim();
                       } else {
                           fail("torus character on a non-torus system");
                       }
                       if (c.k.size() != d) fail("frequency dimension");
                   },
                   [&](const TorusTrigPoly& t) {
                       for (const auto& [coef, k] : t.terms) {
                           (void)coef;
                           check_shape(s, Observable{TorusCharacter{k}});
                       }
                   },
                   [&](const FiniteVector& v) {
                       auto* c = std::get_if<FiniteCyclic>(&s.kind);
                       if (!c) fail("finite vector on a non-cyclic system");
                       if (static_cast<std::int64_t>(v.values.size()) != c->m) fail("length differs from modulus");
                   },
                   [&](const HeisenbergBox& b) {
                       if (!std::holds_alternative<Heisenberg>(s.kind)) fail("box on a non-Heisenberg system");
                       for (int i = 0; i < 3; ++i) {
                           if (!(b.lo[i] - b.width / 2 >= 0 && b.hi[i] + b.width / 2 <= 1 && b.lo[i] < b.hi[i])) {
                               fail("box edges and smoothing band must stay inside [0,1]");
                           }
                       }
                   },
                   [&](const HeisenbergHorizontalCharacter&) {
                       if (!std::holds_alternative<Heisenberg>(s.kind)) fail("horizontal character needs Heisenberg");
                   },
                   [&](const Constant&) {},
                   [&](const Tensor& t) {
                       auto* p = std::get_if<Product>(&s.kind);
                       if (!p) fail("tensor on a non-product system");
                       if (p->factors.size() != t.factors.size()) fail("factor count");
                       for (std::size_t i = 0; i < t.factors.size(); ++i) check_shape(p->factors[i], t.factors[i]);
                   },
               },
               f.kind);
}

std::complex<double> evaluate(const Observable& f, const Point& x) {
    return std::visit(overloaded{
                          [&](const TorusCharacter& c) { return e(Phase{dot_raw(c.k, x.coords)}); },
                          [&](const TorusTrigPoly& t) {
                              std::complex<double> sum = 0;
                              for (const auto& [coef, k] : t.terms) sum += coef * e(Phase{dot_raw(k, x.coords)});
                              return sum;
                          },
                          [&](const FiniteVector& v) { return v.values[static_cast<std::size_t>(x.residue)]; },
                          [&](const HeisenbergBox& b) {
                              double v = 1.0;
                              for (int i = 0; i < 3; ++i) v *= ramp(x.coords[i].value(), b.lo[i], b.hi[i], b.width);
                              return std::complex<double>(v, 0.0);
                          },
                          [&](const HeisenbergHorizontalCharacter& h) {
                              return e(h.k1 * x.coords[0] + h.k2 * x.coords[1]);
                          },
                          [&](const Constant& c) { return c.value; },
                          [&](const Tensor& t) {
                              std::complex<double> v = 1.0;
                              for (std::size_t i = 0; i < t.factors.size(); ++i) v *= evaluate(t.factors[i], x.factors[i]);
                              return v;
                          },
                      },
                      f.kind);
}

double sup_norm(const Observable& f) {
    return std::visit(overloaded{
                          [](const TorusCharacter&) { return 1.0; },
                          [](const TorusTrigPoly& t) {
                              double s = 0;
                              for (const auto& term : t.terms) s += std::abs(term.first);
                              return s;
                          },
                          [](const FiniteVector& v) {
                              double s = 0;
                              for (auto z : v.values) s = std::max(s, std::abs(z));
                              return s;
                          },
                          [](const HeisenbergBox&) { return 1.0; },
                          [](const HeisenbergHorizontalCharacter&) { return 1.0; },
                          [](const Constant& c) { return std::abs(c.value); },
                          [](const Tensor& t) {
                              double s = 1;
                              for (const auto& g : t.factors) s *= sup_norm(g);
                              return s;
                          },
                      },
                      f.kind);
}

std::complex<double> integral(const System& s, const Observable& f) {
    check_shape(s, f);
    return std::visit(overloaded{
                          [](const TorusCharacter& c) {
                              for (auto k : c.k) {
                                  if (k != 0) return std::complex<double>(0.0);
                              }
                              return std::complex<double>(1.0);
                          },
                          [](const TorusTrigPoly& t) {
                              std::complex<double> sum = 0;
                              for (const auto& [coef, k] : t.terms) {
                                  bool zero = true;
                                  for (auto ki : k) zero = zero && ki == 0;
                                  if (zero) sum += coef;
                              }
                              return sum;
                          },
                          [](const FiniteVector& v) {
                              std::complex<double> sum = 0;
                              for (auto z : v.values) sum += z;
                              return sum / static_cast<double>(v.values.size());
                          },
                          [](const HeisenbergBox& b) {
                              double vol = 1.0;
                              for (int i = 0; i < 3; ++i) vol *= b.hi[i] - b.lo[i];
                              return std::complex<double>(vol);
                          },
                          [](const HeisenbergHorizontalCharacter& h) {
                              return std::complex<double>(h.k1 == 0 && h.k2 == 0 ? 1.0 : 0.0);
                          },
                          [](const Constant& c) { return c.value; },
                          [&](const Tensor& t) {
                              const auto& p = std::get<Product>(s.kind);
                              std::complex<double> v = 1.0;
                              for (std::size_t i = 0; i < t.factors.size(); ++i) v *= integral(p.factors[i], t.factors[i]);
                              return v;
                          },
                      },
                      f.kind);
}

Observable conjugate(const Observable& f) {
    return std::visit(overloaded{
                          [](const TorusCharacter& c) {
                              TorusCharacter out = c;
                              for (auto& k : out.k) k = -k;
                              return Observable{out};
                          },
                          [](const TorusTrigPoly& t) {
                              TorusTrigPoly out;
                              for (const auto& [coef, k] : t.terms) {
                                  std::vector<std::int64_t> nk = k;
                                  for (auto& v : nk) v = -v;
                                  out.terms.emplace_back(std::conj(coef), nk);
                              }
                              return Observable{out};
                          },
                          [](const FiniteVector& v) {
                              FiniteVector out = v;
                              for (auto& z : out.values) z = std::conj(z);
                              return Observable{out};
                          },
                          [](const HeisenbergBox& b) { return Observable{b}; },
                          [](const HeisenbergHorizontalCharacter& h) {
                              return Observable{HeisenbergHorizontalCharacter{-h.k1, -h.k2}};
                          },
                          [](const Constant& c) { return Observable{Constant{std::conj(c.value)}}; },
                          [](const Tensor& t) {
                              Tensor out;
                              for (const auto& g : t.factors) out.factors.push_back(conjugate(g));
                              return Observable{out};
                          },
                      },
                      f.kind);
}

Point origin(const System& s) {
    std::vector<double> zeros(grid_dim(s), 0.0);
    std::size_t at = 0;
    Point p;
    fill_point(s, zeros, at, p);
    return p;
}

double radical_inverse(std::uint64_t index, std::uint64_t base) {
    double result = 0.0;
    double f = 1.0 / static_cast<double>(base);
    double scale = f;
    while (index > 0) {
        result += static_cast<double>(index % base) * scale;
        index /= base;
        scale *= f;
    }
    return result;
}

std::vector<Point> default_grid(const System& s, std::size_t count) {
    std::vector<Point> grid;
    if (auto* c = std::get_if<FiniteCyclic>(&s.kind)) {
        for (std::int64_t r = 0; r < c->m; ++r) {
            Point p;
            p.residue = r;
            grid.push_back(p);
        }
        return grid;
    }
    const std::size_t d = grid_dim(s);
    if (d > std::size(kPrimes)) throw UnsupportedSystem("grid dimension above 20");
    grid.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        std::vector<double> u(d);
        for (std::size_t i = 0; i < d; ++i) u[i] = radical_inverse(j + 1, kPrimes[i]);
        std::size_t at = 0;
        Point p;
        fill_point(s, u, at, p);
        grid.push_back(std::move(p));
    }
    return grid;
}

std::size_t continuous_dim(const System& s) {
    return std::visit(overloaded{
                          [](const TorusRotation& r) { return r.dim(); },
                          [](const AffineTorus& a) { return a.dim(); },
                          [](const Heisenberg&) { return std::size_t{3}; },
                          [](const FiniteCyclic&) { return std::size_t{0}; },
                          [](const Product& p) {
                              std::size_t d = 0;
                              for (const auto& f : p.factors) d += continuous_dim(f);
                              return d;
                          },
                      },
                      s.kind);
}

}  // namespace hardy
