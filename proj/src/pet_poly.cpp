#include <algorithm>

#include "hardy/error.hpp"
#include "hardy/parser.hpp"
#include "hardy/pet.hpp"
#include "pet_labels.hpp"

namespace hardy {

namespace {

void trim(std::vector<HPoly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// binomial coefficients as surds
Surd choose(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Surd(mpq_class(r));
}

TypeVector type_of(const PolyFamily& P) {
    const int d = P.degree();
    TypeVector t{d};
    for (int i = d; i >= 1; --i) {
        std::vector<const HPoly*> leads;
        for (const auto& m : P.members) {
            if (m.poly.degree() != i) continue;
            const HPoly& lc = m.poly.leading();
            if (std::none_of(leads.begin(), leads.end(), [&](const HPoly* x) { return *x == lc; })) leads.push_back(&lc);
        }
        t.push_back(static_cast<long>(leads.size()));
    }
    return t;
}

PolyFamily transform(const PolyFamily& P, std::size_t pivot, unsigned h) {
    const PolyMember& p = P.members[pivot];
    PolyFamily out;
    const bool labelled = 2 * P.size() <= detail::kLabelledFamily;
    auto label = [&](const TPoly& v, std::string symbolic) {
        return labelled ? detail::pick_label(std::move(symbolic), [&] { return v.render(); }) : std::string();
    };
    for (const auto& m : P.members) {
        if (m.poly.degree() == 1) continue;
        TPoly v = m.poly.shifted(h) - p.poly;
        std::string l = label(v, detail::difference_label(detail::shift_label(m.label, h), p.label));
        out.members.push_back({std::move(v), std::move(l)});
    }
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (i == pivot) continue;
        TPoly v = P.members[i].poly - p.poly;
        std::string l = label(v, detail::difference_label(P.members[i].label, p.label));
        out.members.push_back({std::move(v), std::move(l)});
    }
    return out;
}

void sort_by_degree(PolyFamily& P) {
    std::stable_sort(P.members.begin(), P.members.end(),
                     [](const PolyMember& a, const PolyMember& b) { return a.poly.degree() > b.poly.degree(); });
}

DerivationStep node(const TypeVector& t, const std::vector<std::string>& labels) {
    DerivationStep s;
    s.type = t;
    s.size = labels.size();
    if (labels.size() <= DerivationStep::kLabelLimit) s.members = labels;
    return s;
}

template <class Family>
std::vector<std::string> labels_of(const Family& F) {
    std::vector<std::string> out;
    out.reserve(F.members.size());
    for (const auto& m : F.members) out.push_back(m.label);
    return out;
}

void render_node(const nlohmann::json& j, int depth, std::string& out) {
    out += std::string(static_cast<std::size_t>(2 * depth), ' ');
    TypeVector t = j["type"].get<TypeVector>();
    out += render_type(t) + " size " + std::to_string(j["size"].get<std::size_t>());
    if (j.contains("members")) {
        out += " {";
        bool first = true;
        for (const auto& m : j["members"]) {
            out += (first ? "" : ", ") + m.get<std::string>();
            first = false;
        }
        out += "}";
    }
    if (j.contains("pivot")) out += " pivot #" + std::to_string(j["pivot"].get<long>());
    out += "\n";
    for (const auto& c : j["children"]) render_node(c, depth + 1, out);
}

}  // namespace

std::string render_type(const TypeVector& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
    return out + ")";
}

TPoly TPoly::from(const HardyNormalForm& p) {
    if (!p.is_polynomial()) throw UnsupportedForm(p.render() + " is not a polynomial");
    TPoly out;
    for (const auto& term : p.terms()) {
        const auto k = static_cast<std::size_t>(term.alpha.rational().get_num().get_ui());
        if (out.coeffs.size() <= k) out.coeffs.resize(k + 1);
        out.coeffs[k] += HPoly(term.coeff);
    }
    trim(out.coeffs);
    return out;
}

TPoly TPoly::shifted(unsigned k) const {
    TPoly out;
    out.coeffs.resize(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (coeffs[n].is_zero()) continue;
        // c_n (t+h)^n = sum_j C(n,j) c_n h^(n-j) t^j
        for (std::size_t j = 0; j <= n; ++j) {
            out.coeffs[j] += coeffs[n].times_monomial(choose(static_cast<unsigned>(n), static_cast<unsigned>(j)), k,
                                                      static_cast<unsigned>(n - j));
        }
    }
    trim(out.coeffs);
    return out;
}

TPoly operator-(const TPoly& a, const TPoly& b) {
    TPoly out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    trim(out.coeffs);
    return out;
}

std::string TPoly::render() const {
    if (coeffs.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const HPoly& c = coeffs[k];
        if (c.is_zero()) continue;
        const std::string power = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        std::string body;
        bool negative = false;
        if (c.is_constant()) {
            const Surd v = c.constant_term();
            negative = v.parts().size() == 1 && v.sign() < 0;
            const Surd mag = negative ? -v : v;
            if (power.empty()) {
                body = mag.to_string();
            } else if (mag == Surd(1)) {
                body = power;
            } else {
                body = (mag.parts().size() > 1 ? "(" + mag.to_string() + ")" : mag.to_string()) + "*" + power;
            }
        } else {
            const std::string cs = c.terms().size() > 1 ? "(" + c.to_string() + ")" : c.to_string();
            body = power.empty() ? c.to_string() : cs + "*" + power;
        }
        if (first) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
        first = false;
    }
    return out;
}

PolyFamily PolyFamily::from(const std::vector<HardyNormalForm>& polys) {
    PolyFamily P;
    for (const auto& p : polys) P.members.push_back({TPoly::from(p), p.render()});
    return P;
}

PolyFamily PolyFamily::parse(const std::string& text) { return from(parse_family(text)); }

int PolyFamily::degree() const {
    if (members.empty()) throw DegenerateFamily("empty family");
    int d = 0;
    for (const auto& m : members) d = std::max(d, m.poly.degree());
    return d;
}

void check_essentially_distinct(const PolyFamily& P) {
    if (P.members.empty()) throw DegenerateFamily("empty family");
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (P.members[i].poly.degree() < 1) throw DegenerateFamily(P.members[i].label + " is constant");
        for (std::size_t j = i + 1; j < P.size(); ++j) {
            if ((P.members[i].poly - P.members[j].poly).degree() < 1) {
                throw DegenerateFamily(P.members[i].label + " and " + P.members[j].label + " differ by a constant");
            }
        }
    }
}

TypeVector poly_type(const PolyFamily& P) {
    check_essentially_distinct(P);
    return type_of(P);
}

PolyFamily poly_vdc(const PolyFamily& P, std::size_t pivot, unsigned h) {
    if (pivot >= P.size()) throw DomainError("pivot outside the family");
    check_essentially_distinct(P);
    PolyFamily out = transform(P, pivot, h);
    if (out.members.empty()) throw DegenerateFamily("transform removes every member");
    return out;
}

std::size_t choose_pivot(const PolyFamily& P) {
    const int d = P.degree();
    if (P.members.front().poly.degree() != d || d < 2) {
        throw DomainError("pivot selection needs deg(p_1) = deg(P) >= 2");
    }
    const auto& ms = P.members;
    // degrees differ: a member of minimal degree
    std::size_t low = 0;
    for (std::size_t i = 1; i < ms.size(); ++i) {
        if (ms[i].poly.degree() < ms[low].poly.degree()) low = i;
    }
    if (ms[low].poly.degree() < d) return low;
    // equal degrees: a member whose leading coefficient differs from p_1's
    for (std::size_t i = 1; i < ms.size(); ++i) {
        if (ms[i].poly.leading() != ms[0].poly.leading()) return i;
    }
    if (ms.size() == 1) return 0;
    // all leading coefficients equal: maximal deg(p_i - p_1)
    std::size_t best = 1;
    int best_deg = (ms[1].poly - ms[0].poly).degree();
    for (std::size_t i = 2; i < ms.size(); ++i) {
        const int di = (ms[i].poly - ms[0].poly).degree();
        if (di > best_deg) {
            best = i;
            best_deg = di;
        }
    }
    return best;
}

std::string to_string(DerivationOutcome o) {
    switch (o) {
        case DerivationOutcome::BaseCase: return "base-case";
        case DerivationOutcome::DepthGuard: return "depth-guard";
        case DerivationOutcome::MemberBudget: return "member-budget";
        case DerivationOutcome::TypeIncrease: return "type-increase";
    }
    return "?";
}

Derivation derive(const PolyFamily& start, const DerivationLimits& limits, const PolyPivotRule& rule) {
    check_essentially_distinct(start);
    Derivation d;
    PolyFamily cur = start;
    sort_by_degree(cur);
    TypeVector t = type_of(cur);
    d.steps.push_back(node(t, labels_of(cur)));
    for (;;) {
        if (t[0] <= 1) {
            d.outcome = DerivationOutcome::BaseCase;
            break;
        }
        if (d.depth() >= limits.max_depth) {
            d.outcome = DerivationOutcome::DepthGuard;
            break;
        }
        const std::size_t p = rule(cur);
        d.steps.back().pivot = static_cast<long>(p);
        PolyFamily next = transform(cur, p, static_cast<unsigned>(d.depth() + 1));
        if (next.size() > limits.max_members) {
            d.outcome = DerivationOutcome::MemberBudget;
            break;
        }
        sort_by_degree(next);
        const TypeVector nt = type_of(next);
        d.steps.push_back(node(nt, labels_of(next)));
        if (!(nt < t)) {
            d.outcome = DerivationOutcome::TypeIncrease;
            break;
        }
        cur = std::move(next);
        t = nt;
    }
    return d;
}

namespace {

Derivation checked(Derivation d) {
    switch (d.outcome) {
        case DerivationOutcome::BaseCase: return d;
        case DerivationOutcome::DepthGuard:
            throw NonTermination("no base case after " + std::to_string(d.depth()) + " steps, last type " +
                                 render_type(d.steps.back().type));
        case DerivationOutcome::MemberBudget:
            throw BudgetExceeded("family outgrew the member budget after " + std::to_string(d.depth()) +
                                 " steps, last type " + render_type(d.steps.back().type));
        case DerivationOutcome::TypeIncrease:
            throw std::logic_error("type failed to decrease at step " + std::to_string(d.depth()));
    }
    return d;
}

}  // namespace

Derivation derivation_tree(const PolyFamily& start, const PolyPivotRule& rule) {
    return checked(derive(start, {}, rule));
}

Derivation derivation_tree(const HardyFamily& start, const HardyPivotRule& rule) {
    return checked(derive(start, {}, rule));
}

nlohmann::json to_json(const Derivation& d) {
    nlohmann::json child;
    for (std::size_t i = d.steps.size(); i-- > 0;) {
        const auto& s = d.steps[i];
        nlohmann::json j;
        j["type"] = s.type;
        j["size"] = s.size;
        if (!s.members.empty()) j["members"] = s.members;
        if (s.pivot >= 0) j["pivot"] = s.pivot;
        j["children"] = nlohmann::json::array();
        if (!child.is_null()) j["children"].push_back(std::move(child));
        child = std::move(j);
    }
    return {{"outcome", to_string(d.outcome)}, {"depth", d.depth()}, {"root", child}};
}

std::string render_text(const Derivation& d) {
    std::string out;
    const auto j = to_json(d);
    if (!j["root"].is_null()) render_node(j["root"], 0, out);
    out += "outcome " + to_string(d.outcome) + " at depth " + std::to_string(d.depth()) + "\n";
    return out;
}

}  // namespace hardy
