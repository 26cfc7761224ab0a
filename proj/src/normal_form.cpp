#include "hardy/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardy/error.hpp"

namespace hardy {

namespace {

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw UnsupportedForm("exponent component too large: " + z.get_str());
    return z.get_si();
}

std::string exponent_text(const Surd& e) {
    if (e.is_integer() && e.sign() >= 0) return e.to_string();
    std::string s = e.to_string();
    if (s.front() == '(') return s;
    return "(" + s + ")";
}

// Renders the factors of a term with a positive-signed coefficient already split off.
std::string render_magnitude(const Surd& coeff, const Surd& alpha, int beta) {
    std::vector<std::string> factors;
    const bool has_variable = !alpha.is_zero() || beta != 0;
    if (!(coeff == Surd(1) && has_variable)) factors.push_back(coeff.to_string());
    if (!alpha.is_zero()) {
        if (alpha == Surd(1)) {
            factors.push_back("t");
        } else {
            factors.push_back("t^" + exponent_text(alpha));
        }
    }
    if (beta != 0) {
        if (beta == 1) {
            factors.push_back("log(t)");
        } else {
            factors.push_back("log(t)^" + exponent_text(Surd(static_cast<long>(beta))));
        }
    }
    std::string out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
    return out;
}

}  // namespace

HardyNormalForm::HardyNormalForm(std::vector<Term> terms) {
    std::vector<Term> nonzero;
    nonzero.reserve(terms.size());
    for (auto& t : terms) {
        if (!t.coeff.is_zero()) nonzero.push_back(std::move(t));
    }
    std::stable_sort(nonzero.begin(), nonzero.end(), [](const Term& a, const Term& b) {
        return GrowthKey{a.alpha, a.beta} > GrowthKey{b.alpha, b.beta};
    });
    for (auto& t : nonzero) {
        if (!terms_.empty() && terms_.back().alpha == t.alpha && terms_.back().beta == t.beta) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

HardyNormalForm HardyNormalForm::constant(const Surd& c) { return HardyNormalForm({Term{c, Surd(), 0}}); }

HardyNormalForm HardyNormalForm::monomial(const Surd& c, const Surd& alpha, int beta) {
    return HardyNormalForm({Term{c, alpha, beta}});
}

const Term& HardyNormalForm::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero function");
    return terms_.front();
}

GrowthKey HardyNormalForm::leading_key() const {
    const Term& t = leading();
    return GrowthKey{t.alpha, t.beta};
}

HardyNormalForm HardyNormalForm::operator-() const { return scaled(Surd(-1)); }

HardyNormalForm operator+(const HardyNormalForm& a, const HardyNormalForm& b) {
    std::vector<Term> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return HardyNormalForm(std::move(all));
}

HardyNormalForm operator-(const HardyNormalForm& a, const HardyNormalForm& b) { return a + (-b); }

HardyNormalForm operator*(const HardyNormalForm& a, const HardyNormalForm& b) {
    std::vector<Term> all;
    all.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) all.push_back(Term{x.coeff * y.coeff, x.alpha + y.alpha, x.beta + y.beta});
    }
    return HardyNormalForm(std::move(all));
}

HardyNormalForm HardyNormalForm::scaled(const Surd& c) const {
    std::vector<Term> all = terms_;
    for (auto& t : all) t.coeff *= c;
    return HardyNormalForm(std::move(all));
}

bool operator==(const HardyNormalForm& a, const HardyNormalForm& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const Term& x = a.terms_[i];
        const Term& y = b.terms_[i];
        if (x.beta != y.beta || x.alpha != y.alpha || x.coeff != y.coeff) return false;
    }
    return true;
}

bool HardyNormalForm::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.beta == 0 && t.alpha.is_integer() && t.alpha.sign() >= 0; });
}

Interval HardyNormalForm::evaluate(std::int64_t n, mpfr_prec_t precision) const {
    if (n < 1) throw DomainError("evaluation requires t >= 1, got " + std::to_string(n));
    Interval sum(precision);
    for (const auto& term : terms_) {
        Interval value = term.coeff.enclose(precision);
        if (n != 1 && !term.alpha.is_zero()) {
            if (term.alpha.is_rational()) {
                const mpq_class a = term.alpha.rational();
                const long q = to_long(a.get_den());
                value *= Interval::rational_power(n, to_long(a.get_num()), static_cast<unsigned long>(q), precision);
            } else {
                value *= (term.alpha.enclose(precision) * Interval::log_of(n, precision)).exp();
            }
        }
        if (term.beta != 0) {
            if (n == 1) {
                if (term.beta < 0) throw DomainError("(log t)^" + std::to_string(term.beta) + " undefined at t = 1");
                value = Interval(precision);
            } else {
                value *= Interval::log_of(n, precision).pow_nonnegative(term.beta);
            }
        }
        sum += value;
    }
    return sum;
}

std::optional<Surd> HardyNormalForm::exact_value(std::int64_t n) const {
    if (n < 1) throw DomainError("evaluation requires t >= 1, got " + std::to_string(n));
    Surd sum;
    for (const auto& term : terms_) {
        if (term.beta != 0) {
            if (n != 1) return std::nullopt;
            if (term.beta < 0) throw DomainError("(log t)^" + std::to_string(term.beta) + " undefined at t = 1");
            continue;  // log(1) = 0
        }
        Surd power(1);
        if (n != 1 && !term.alpha.is_zero()) {
            if (!term.alpha.is_rational()) return std::nullopt;
            const mpq_class a = term.alpha.rational();
            const mpz_class& num = a.get_num();
            if (!a.get_den().fits_ulong_p() || !num.fits_slong_p()) return std::nullopt;
            const unsigned long q = a.get_den().get_ui();
            const long p = num.get_si();
            mpz_class base;
            mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(std::labs(p)));
            mpz_class root;
            if (mpz_root(root.get_mpz_t(), base.get_mpz_t(), q) != 0) {
                power = Surd(mpq_class(root));
            } else if (q == 2) {
                try {
                    power = Surd::sqrt(mpq_class(base));
                } catch (const std::domain_error&) {
                    return std::nullopt;
                }
            } else {
                return std::nullopt;
            }
            if (p < 0) {
                auto inv = power.inverse();
                if (!inv) return std::nullopt;
                power = *inv;
            }
        }
        sum += term.coeff * power;
    }
    return sum;
}

double HardyNormalForm::evaluate_double(double t) const {
    long double sum = 0;
    const long double lt = std::log(static_cast<long double>(t));
    for (const auto& term : terms_) {
        long double v = term.coeff.to_double();
        if (!term.alpha.is_zero()) v *= std::pow(static_cast<long double>(t), static_cast<long double>(term.alpha.to_double()));
        if (term.beta != 0) v *= std::pow(lt, static_cast<long double>(term.beta));
        sum += v;
    }
    return static_cast<double>(sum);
}

std::string HardyNormalForm::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        const bool single_part = t.coeff.parts().size() == 1;
        const bool negative = single_part && t.coeff.sign() < 0;
        const std::string body = render_magnitude(negative ? -t.coeff : t.coeff, t.alpha, t.beta);
        if (i == 0) {
            out += negative ? "-" + body : body;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    return out;
}

GrowthRelation growth_compare(const HardyNormalForm& a, const HardyNormalForm& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("growth_compare requires nonzero functions");
    const int c = compare(a.leading_key(), b.leading_key());
    if (c < 0) return {Growth::StrictlySlower, 0.0, std::nullopt};
    if (c > 0) return {Growth::StrictlyFaster, 0.0, std::nullopt};
    GrowthRelation r{Growth::Comparable, 0.0, std::nullopt};
    r.exact_ratio = a.leading().coeff.ratio_to(b.leading().coeff);
    if (r.exact_ratio) {
        r.ratio = r.exact_ratio->get_d();
    } else {
        r.ratio = a.leading().coeff.to_double() / b.leading().coeff.to_double();
    }
    return r;
}

HardyNormalForm differentiate(const HardyNormalForm& a) {
    std::vector<Term> out;
    for (const auto& t : a.terms()) {
        const Surd lowered = t.alpha - Surd(1);
        if (!t.alpha.is_zero()) out.push_back(Term{t.coeff * t.alpha, lowered, t.beta});
        if (t.beta != 0) out.push_back(Term{t.coeff * Surd(static_cast<long>(t.beta)), lowered, t.beta - 1});
    }
    return HardyNormalForm(std::move(out));
}

HardyNormalForm differentiate(const HardyNormalForm& a, int k) {
    HardyNormalForm r = a;
    for (int i = 0; i < k; ++i) r = differentiate(r);
    return r;
}

}  // namespace hardy
