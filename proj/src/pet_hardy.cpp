#include <algorithm>
#include <cmath>

#include "hardy/error.hpp"
#include "hardy/parser.hpp"
#include "hardy/pet.hpp"
#include "pet_labels.hpp"

namespace hardy {

namespace {

const Surd kCut(Expansion::kCutoff);

Expansion normalize(std::vector<Expansion::Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), [](const Expansion::Term& a, const Expansion::Term& b) {
        return GrowthKey{a.alpha, a.beta} > GrowthKey{b.alpha, b.beta};
    });
    Expansion out;
    for (auto& t : terms) {
        if (!out.terms.empty() && out.terms.back().alpha == t.alpha && out.terms.back().beta == t.beta) {
            out.terms.back().coeff += t.coeff;
            if (out.terms.back().coeff.is_zero()) out.terms.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

bool is_int(const Surd& s) { return s.is_rational() && s.is_integer(); }

long floor_surd(const Surd& s) {
    if (s.is_rational()) return floor_of(s.rational()).get_si();
    return static_cast<long>(std::floor(s.to_double()));
}

void sort_by_growth(HardyFamily& F) {
    std::vector<GrowthKey> keys;
    std::vector<std::size_t> idx(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) {
        idx[i] = i;
        keys.push_back(F.members[i].value.leading_key());
    }
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
    std::vector<HardyMember> out;
    out.reserve(F.size());
    for (auto i : idx) out.push_back(std::move(F.members[i]));
    F.members = std::move(out);
}

HardyFamily transform(const HardyFamily& F, std::size_t pivot, unsigned h) {
    const HardyMember& a = F.members[pivot];
    const GrowthKey linear{Surd(1), 0};
    HardyFamily out;
    const bool labelled = 2 * F.size() <= detail::kLabelledFamily;
    auto label = [&](const Expansion& v, std::string symbolic) {
        return labelled ? detail::pick_label(std::move(symbolic), [&] { return v.render(); }) : std::string();
    };
    for (const auto& m : F.members) {
        if (m.value.leading_key() < linear) continue;
        Expansion v = m.value.shifted(h) - a.value;
        std::string l = label(v, detail::difference_label(detail::shift_label(m.label, h), a.label));
        out.members.push_back({std::move(v), std::move(l)});
    }
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (i == pivot) continue;
        Expansion v = F.members[i].value - a.value;
        std::string l = label(v, detail::difference_label(F.members[i].label, a.label));
        out.members.push_back({std::move(v), std::move(l)});
    }
    return out;
}

TypeVector type_of(const HardyFamily& F, bool polynomial_bands) {
    if (F.members.empty()) throw DegenerateFamily("empty family");
    std::vector<long> band(F.size());
    long d = 0;
    for (std::size_t i = 0; i < F.size(); ++i) {
        band[i] = hardy_band(F.members[i].value, polynomial_bands);
        d = std::max(d, band[i]);
    }
    TypeVector t{d};
    for (long i = d; i >= 0; --i) {
        const GrowthKey bound{Surd(i), 0};
        std::vector<std::size_t> reps;
        for (std::size_t k = 0; k < F.size(); ++k) {
            if (band[k] != i) continue;
            const bool known = std::any_of(reps.begin(), reps.end(), [&](std::size_t r) {
                const Expansion diff = F.members[k].value - F.members[r].value;
                return diff.is_zero() || diff.leading_key() < bound;
            });
            if (!known) reps.push_back(k);
        }
        t.push_back(static_cast<long>(reps.size()));
    }
    return t;
}

}  // namespace

Expansion Expansion::from(const HardyNormalForm& a) {
    std::vector<Term> terms;
    for (const auto& t : a.terms()) {
        if (t.alpha < kCut) continue;
        terms.push_back({HPoly(t.coeff), t.alpha, t.beta});
    }
    return normalize(std::move(terms));
}

Expansion Expansion::shifted(unsigned k) const {
    const HPoly h = HPoly::variable(k);
    std::vector<Term> out;
    for (const auto& term : terms) {
        // sum_r h^r/r! D^r (t^alpha log^beta)
        HardyNormalForm deriv = HardyNormalForm::monomial(Surd(1), term.alpha, term.beta);
        HPoly weight = term.coeff;
        mpz_class factorial = 1;
        for (unsigned r = 0; !deriv.is_zero() && deriv.leading().alpha >= kCut; ++r) {
            if (r > 0) factorial *= r;
            const Surd inv(mpq_class(1, factorial));
            for (const auto& d : deriv.terms()) {
                if (d.alpha < kCut) continue;
                out.push_back({weight.scaled(d.coeff * inv), d.alpha, d.beta});
            }
            deriv = differentiate(deriv);
            weight = weight * h;
        }
    }
    return normalize(std::move(out));
}

Expansion operator-(const Expansion& a, const Expansion& b) {
    std::vector<Expansion::Term> all = a.terms;
    for (const auto& t : b.terms) all.push_back({-t.coeff, t.alpha, t.beta});
    return normalize(std::move(all));
}

GrowthKey Expansion::leading_key() const {
    if (terms.empty()) throw DegenerateFamily("zero function in a family");
    return {terms.front().alpha, terms.front().beta};
}

std::string Expansion::render() const {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        const bool unit_factor = t.alpha.is_zero() && t.beta == 0;
        const std::string factor = unit_factor ? "" : HardyNormalForm::monomial(Surd(1), t.alpha, t.beta).render();
        std::string body;
        if (t.coeff.is_constant()) {
            const HardyNormalForm m = HardyNormalForm::monomial(t.coeff.constant_term(), t.alpha, t.beta);
            body = m.render();
            if (i > 0) {
                out += body[0] == '-' ? " - " + body.substr(1) : " + " + body;
                continue;
            }
            out += body;
            continue;
        }
        body = "(" + t.coeff.to_string() + ")" + (unit_factor ? "" : "*" + factor);
        out += (i > 0 ? " + " : "") + body;
    }
    return out;
}

HardyFamily HardyFamily::from(const std::vector<HardyNormalForm>& funcs) {
    HardyFamily F;
    for (const auto& a : funcs) F.members.push_back({Expansion::from(a), a.render()});
    return F;
}

HardyFamily HardyFamily::parse(const std::string& text) { return from(parse_family(text)); }

long hardy_band(const Expansion& a, bool polynomial_bands) {
    if (a.is_zero()) throw DegenerateFamily("zero function has no growth band");
    const GrowthKey k = a.leading_key();
    long band;
    if (is_int(k.alpha)) {
        const long n = k.alpha.rational().get_num().get_si();
        if (k.beta > 0) {
            band = n;
        } else if (k.beta < 0) {
            band = n - 1;
        } else if (polynomial_bands) {
            band = n;
        } else {
            throw DegenerateFamily(a.render() + " grows like an integer power of t");
        }
    } else {
        band = floor_surd(k.alpha);
    }
    if (band < 0 || (polynomial_bands && k.alpha.is_zero() && k.beta == 0)) {
        throw DegenerateFamily(a.render() + " is bounded or decays");
    }
    return band;
}

bool expansion_in_G(const Expansion& a) {
    if (a.is_zero()) return false;
    const GrowthKey k = a.leading_key();
    if (k.alpha.sign() <= 0) return false;
    if (!is_int(k.alpha)) return true;
    return k.beta < 0;
}

void check_nice(const HardyFamily& F) {
    if (F.members.empty()) throw DegenerateFamily("empty family");
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (!expansion_in_G(F.members[i].value)) throw DegenerateFamily(F.members[i].label + " is not in G");
        for (std::size_t j = i + 1; j < F.size(); ++j) {
            if (!expansion_in_G(F.members[i].value - F.members[j].value)) {
                throw DegenerateFamily(F.members[i].label + " minus " + F.members[j].label + " is not in G");
            }
        }
    }
}

TypeVector hardy_type(const HardyFamily& F, bool polynomial_bands) {
    for (std::size_t i = 0; i < F.size(); ++i) {
        for (std::size_t j = i + 1; j < F.size(); ++j) {
            if ((F.members[i].value - F.members[j].value).is_zero()) throw DegenerateFamily("repeated member " + F.members[i].label);
        }
    }
    return type_of(F, polynomial_bands);
}

HardyFamily hardy_vdc(const HardyFamily& F, std::size_t pivot, unsigned h) {
    if (pivot >= F.size()) throw DomainError("pivot outside the family");
    check_nice(F);
    HardyFamily out = transform(F, pivot, h);
    if (out.members.empty()) throw DegenerateFamily("transform removes every member");
    return out;
}

std::size_t choose_hardy_pivot(const HardyFamily& F) {
    if (F.members.empty()) throw DegenerateFamily("empty family");
    const auto& ms = F.members;
    const GrowthKey top = ms[0].value.leading_key();
    if (!(top > GrowthKey{Surd(1), 0})) throw DomainError("pivot selection needs a_1 > t");
    std::size_t low = 0;
    GrowthKey low_key = top;
    for (std::size_t i = 1; i < ms.size(); ++i) {
        const GrowthKey k = ms[i].value.leading_key();
        if (k > top) throw DomainError("pivot selection needs a_1 of maximal growth");
        if (k < low_key) {
            low = i;
            low_key = k;
        }
    }
    if (low_key < top) return low;
    for (std::size_t i = 1; i < ms.size(); ++i) {
        if (ms[i].value.leading_coeff() != ms[0].value.leading_coeff()) return i;
    }
    if (ms.size() == 1) return 0;
    std::size_t best = 1;
    GrowthKey best_key = (ms[1].value - ms[0].value).leading_key();
    for (std::size_t i = 2; i < ms.size(); ++i) {
        const GrowthKey k = (ms[i].value - ms[0].value).leading_key();
        if (k > best_key) {
            best = i;
            best_key = k;
        }
    }
    return best;
}

Derivation derive(const HardyFamily& start, const DerivationLimits& limits, const HardyPivotRule& rule) {
    check_nice(start);
    Derivation d;
    HardyFamily cur = start;
    sort_by_growth(cur);
    auto node = [](const TypeVector& t, const HardyFamily& F) {
        DerivationStep s;
        s.type = t;
        s.size = F.size();
        if (F.size() <= DerivationStep::kLabelLimit) {
            for (const auto& m : F.members) s.members.push_back(m.label);
        }
        return s;
    };
    TypeVector t = type_of(cur, false);
    d.steps.push_back(node(t, cur));
    for (;;) {
        if (t[0] == 0) {
            d.outcome = DerivationOutcome::BaseCase;
            break;
        }
        if (d.depth() >= limits.max_depth) {
            d.outcome = DerivationOutcome::DepthGuard;
            break;
        }
        const std::size_t p = rule(cur);
        d.steps.back().pivot = static_cast<long>(p);
        HardyFamily next = transform(cur, p, static_cast<unsigned>(d.depth() + 1));
        if (next.size() > limits.max_members) {
            d.outcome = DerivationOutcome::MemberBudget;
            break;
        }
        sort_by_growth(next);
        const TypeVector nt = type_of(next, false);
        d.steps.push_back(node(nt, next));
        if (!(nt < t)) {
            d.outcome = DerivationOutcome::TypeIncrease;
            break;
        }
        cur = std::move(next);
        t = nt;
    }
    return d;
}

}  // namespace hardy
