#include "hardy/classify.hpp"

#include "hardy/error.hpp"

namespace hardy {

namespace {

bool is_polynomial_term(const Term& t) { return t.beta == 0 && t.alpha.is_integer() && t.alpha.sign() >= 0; }

const GrowthKey kLogT{Surd(), 1};
const GrowthKey kConstant{Surd(), 0};

std::vector<Term> terms_above(const HardyNormalForm& a, const GrowthKey& floor) {
    std::vector<Term> out;
    for (const auto& t : a.terms()) {
        if (GrowthKey{t.alpha, t.beta} > floor) out.push_back(t);
    }
    return out;
}

}  // namespace

std::string render_int_poly(const IntPoly& p) {
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        mpz_class c = p[i];
        const bool negative = c < 0;
        if (negative) c = -c;
        std::string body;
        if (i == 0) {
            body = c.get_str();
        } else {
            if (c != 1) body = c.get_str() + "*";
            body += i == 1 ? "t" : "t^" + std::to_string(i);
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    return out.empty() ? "0" : out;
}

std::string ConvergenceClass::name() const {
    switch (kind) {
        case Kind::GoodCond1: return "GoodCond1";
        case Kind::GoodCond2: return "GoodCond2";
        case Kind::GoodCond3: return "GoodCond3";
        case Kind::Bad: return "Bad";
    }
    return "?";
}

std::string ConvergenceClass::describe() const {
    switch (kind) {
        case Kind::GoodCond2:
            return name() + "{c=" + c.to_string() + ", d=" + d.to_string() + ", p=" + render_int_poly(p) + "}";
        case Kind::GoodCond3: return name() + "{m=" + std::to_string(m) + "}";
        default: return name();
    }
}

std::string to_string(RecurrenceVerdict v) { return v == RecurrenceVerdict::Good ? "Good" : "NotCovered"; }

std::optional<std::pair<Surd, IntPoly>> commensurable_match(const std::vector<Term>& terms) {
    if (terms.empty()) return std::pair<Surd, IntPoly>{Surd(), IntPoly{0}};
    for (const auto& t : terms) {
        if (!is_polynomial_term(t) || t.alpha.is_zero()) return std::nullopt;
    }
    // terms arrive sorted descending, so the first is the leading one
    const Surd& lead = terms.front().coeff;
    std::vector<mpq_class> ratios;
    mpz_class D = 1;
    for (const auto& t : terms) {
        auto r = t.coeff.ratio_to(lead);
        if (!r) return std::nullopt;
        ratios.push_back(*r);
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), r->get_den_mpz_t());
        if (D > kCommensurabilityBound) return std::nullopt;
    }
    const long degree = terms.front().alpha.rational().get_num().get_si();
    IntPoly p(static_cast<std::size_t>(degree) + 1, mpz_class(0));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const long k = terms[i].alpha.rational().get_num().get_si();
        mpq_class v = ratios[i] * D;
        v.canonicalize();
        p[static_cast<std::size_t>(k)] = v.get_num();
    }
    return std::pair<Surd, IntPoly>{lead.divided_by(mpq_class(D)), p};
}

ConvergenceClass classify_convergence(const HardyNormalForm& a) {
    ConvergenceClass out;
    std::vector<Term> q_nonconstant;
    Surd constant;
    bool r_to_constant = true;
    for (const auto& t : a.terms()) {
        if (is_polynomial_term(t)) {
            if (t.alpha.is_zero()) {
                constant = t.coeff;
            } else {
                q_nonconstant.push_back(t);
            }
        } else if (GrowthKey{t.alpha, t.beta} >= kConstant) {
            r_to_constant = false;
        }
    }

    if (r_to_constant) {
        if (auto match = commensurable_match(q_nonconstant)) {
            out.kind = ConvergenceClass::Kind::GoodCond2;
            out.c = match->first;
            out.p = match->second;
            out.d = constant;
            return out;
        }
    }

    // |a - t/m| << log t
    {
        std::optional<Surd> linear;
        bool rest_small = true;
        for (const auto& t : a.terms()) {
            if (t.beta == 0 && t.alpha == Surd(1)) {
                linear = t.coeff;
            } else if (GrowthKey{t.alpha, t.beta} > kLogT) {
                rest_small = false;
            }
        }
        if (linear && rest_small && linear->is_rational()) {
            const mpq_class inv = 1 / linear->rational();
            if (inv.get_den() == 1 && inv.get_num().fits_slong_p()) {
                out.kind = ConvergenceClass::Kind::GoodCond3;
                out.m = inv.get_num().get_si();
                return out;
            }
        }
    }

    // Some c*p cancels everything above log t exactly when the terms above
    // log t form a commensurable polynomial (possibly empty).
    if (!commensurable_match(terms_above(a, kLogT))) {
        out.kind = ConvergenceClass::Kind::GoodCond1;
        return out;
    }
    out.kind = ConvergenceClass::Kind::Bad;
    return out;
}

RecurrenceVerdict classify_recurrence(const HardyNormalForm& a) {
    return commensurable_match(terms_above(a, kConstant)) ? RecurrenceVerdict::NotCovered : RecurrenceVerdict::Good;
}

bool in_class_G(const HardyNormalForm& a) {
    if (a.is_zero()) return false;
    const Term& lead = a.leading();
    if (lead.alpha.sign() <= 0) return false;
    if (!lead.alpha.is_integer()) return true;
    // t^k / (log t)^j sits strictly between t^(k-1+eps) and t^k
    return lead.beta < 0;
}

}  // namespace hardy
