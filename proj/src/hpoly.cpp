#include "hardy/hpoly.hpp"

#include <algorithm>

namespace hardy {

HPoly::HPoly(const Surd& c) {
    if (!c.is_zero()) terms_[{}] = c;
}

HPoly HPoly::variable(unsigned k) {
    HPoly p;
    Exponents e(k, 0);
    e[k - 1] = 1;
    p.terms_[e] = Surd(1);
    return p;
}

bool HPoly::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Surd HPoly::constant_term() const {
    const auto it = terms_.find({});
    return it == terms_.end() ? Surd() : it->second;
}

unsigned HPoly::max_variable() const noexcept {
    unsigned m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, static_cast<unsigned>(e.size()));
    return m;
}

void HPoly::add_term(const Exponents& e, const Surd& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HPoly HPoly::operator-() const { return scaled(Surd(-1)); }

HPoly& HPoly::operator+=(const HPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            HPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

HPoly HPoly::scaled(const Surd& c) const {
    HPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

HPoly HPoly::times_monomial(const Surd& c, unsigned k, unsigned e) const {
    HPoly out;
    if (c.is_zero()) return out;
    for (const auto& [ex, v] : terms_) {
        Exponents n = ex;
        if (e > 0) {
            if (n.size() < k) n.resize(k, 0);
            n[k - 1] += e;
        }
        out.terms_.emplace_hint(out.terms_.end(), std::move(n), v * c);
    }
    return out;
}

std::string HPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // highest total degree first
    std::vector<const std::pair<const Exponents, Surd>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto total = [](const Exponents& e) {
        unsigned s = 0;
        for (auto x : e) s += x;
        return s;
    };
    std::stable_sort(order.begin(), order.end(), [&](auto* x, auto* y) {
        const unsigned tx = total(x->first), ty = total(y->first);
        if (tx != ty) return tx > ty;
        return x->first > y->first;
    });
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "h" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const bool negative = c.parts().size() == 1 && c.sign() < 0;
        const Surd mag = negative ? -c : c;
        std::string body;
        if (mono.empty()) {
            body = mag.to_string();
        } else if (mag == Surd(1)) {
            body = mono;
        } else {
            const std::string cs = mag.to_string();
            body = (mag.parts().size() > 1 ? "(" + cs + ")" : cs) + "*" + mono;
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

}  // namespace hardy
