#include "hardy/surd.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hardy {

namespace {

// value = square^2 * free with free squarefree. Trial division; inputs stay small
// in practice (radicands of user constants and of integer arguments <= 1e12).
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t value) {
    if (value == 0) return {0, 1};
    std::uint64_t square = 1;
    std::uint64_t free = 1;
    std::uint64_t rest = value;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (p > 2000000) throw std::domain_error("radicand too large to factor: " + std::to_string(value));
        unsigned count = 0;
        while (rest % p == 0) {
            rest /= p;
            ++count;
        }
        for (unsigned i = 0; i < count / 2; ++i) square *= p;
        if (count % 2 == 1) free *= p;
    }
    free *= rest;
    return {square, free};
}

std::uint64_t to_u64(const mpz_class& z) {
    if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 63) throw std::domain_error("radicand out of range");
    return static_cast<std::uint64_t>(z.get_ui());
}

std::string rational_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

mpz_class floor_of(const mpq_class& value) {
    mpz_class result;
    mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return result;
}

Surd::Surd(long value) {
    if (value != 0) parts_.emplace(1, mpq_class(value));
}

Surd::Surd(const mpq_class& value) {
    if (value != 0) {
        mpq_class v = value;
        v.canonicalize();
        parts_.emplace(1, v);
    }
}

Surd Surd::sqrt(const mpq_class& value) {
    if (value < 0) throw std::domain_error("sqrt of a negative number");
    if (value == 0) return Surd();
    mpq_class v = value;
    v.canonicalize();
    // sqrt(a/b) = sqrt(a*b) / b
    mpz_class ab = v.get_num() * v.get_den();
    auto [square, free] = split_square(to_u64(ab));
    mpq_class coefficient(mpz_class(static_cast<unsigned long>(square)), v.get_den());
    coefficient.canonicalize();
    Surd r;
    r.add_part(free, coefficient);
    return r;
}

Surd Surd::from_literal(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) throw std::invalid_argument("empty numeric literal");
    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        value = mpq_class(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
        if (value.get_den() == 0) throw std::invalid_argument("zero denominator in literal");
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty()) throw std::invalid_argument("malformed decimal literal");
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
        value = mpq_class(mpz_class(digits, 10), den);
    } else {
        value = mpq_class(mpz_class(s, 10));
    }
    value.canonicalize();
    return Surd(negative ? mpq_class(-value) : value);
}

void Surd::add_part(std::uint64_t radicand, const mpq_class& coefficient) {
    if (coefficient == 0 || radicand == 0) return;
    auto it = parts_.find(radicand);
    if (it == parts_.end()) {
        parts_.emplace(radicand, coefficient);
        return;
    }
    it->second += coefficient;
    it->second.canonicalize();
    if (it->second == 0) parts_.erase(it);
}

bool Surd::is_rational() const noexcept {
    return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first == 1);
}

bool Surd::is_integer() const noexcept {
    if (parts_.empty()) return true;
    return is_rational() && parts_.begin()->second.get_den() == 1;
}

mpq_class Surd::rational() const {
    if (!is_rational()) throw std::logic_error("irrational value " + to_string());
    if (parts_.empty()) return mpq_class(0);
    return parts_.begin()->second;
}

Surd Surd::operator-() const {
    Surd r = *this;
    for (auto& [k, q] : r.parts_) q = -q;
    return r;
}

Surd& Surd::operator+=(const Surd& other) {
    for (const auto& [k, q] : other.parts_) add_part(k, q);
    return *this;
}

Surd& Surd::operator-=(const Surd& other) {
    for (const auto& [k, q] : other.parts_) add_part(k, -q);
    return *this;
}

Surd& Surd::operator*=(const Surd& other) {
    Surd result;
    for (const auto& [a, qa] : parts_) {
        for (const auto& [b, qb] : other.parts_) {
            const std::uint64_t g = std::gcd(a, b);
            const unsigned __int128 free = static_cast<unsigned __int128>(a / g) * (b / g);
            if (free >> 62) throw std::domain_error("radicand overflow in surd product");
            mpq_class c = qa * qb * mpq_class(static_cast<unsigned long>(g));
            c.canonicalize();
            result.add_part(static_cast<std::uint64_t>(free), c);
        }
    }
    parts_ = std::move(result.parts_);
    return *this;
}

std::optional<Surd> Surd::inverse() const {
    if (parts_.size() != 1) return std::nullopt;
    const auto& [r, q] = *parts_.begin();
    // 1/(q sqrt r) = sqrt(r) / (q r)
    Surd result;
    mpq_class c = 1 / (q * mpq_class(static_cast<unsigned long>(r)));
    c.canonicalize();
    result.add_part(r, c);
    return result;
}

Surd Surd::divided_by(const mpq_class& q) const {
    if (q == 0) throw std::domain_error("division by zero");
    Surd r = *this;
    for (auto& [k, c] : r.parts_) {
        c /= q;
        c.canonicalize();
    }
    return r;
}

std::optional<mpq_class> Surd::ratio_to(const Surd& other) const {
    if (other.is_zero()) throw std::domain_error("ratio to zero");
    if (is_zero()) return mpq_class(0);
    if (parts_.size() != other.parts_.size()) return std::nullopt;
    std::optional<mpq_class> ratio;
    auto it = other.parts_.begin();
    for (const auto& [k, q] : parts_) {
        if (it->first != k) return std::nullopt;
        mpq_class r = q / it->second;
        r.canonicalize();
        if (ratio && *ratio != r) return std::nullopt;
        ratio = r;
        ++it;
    }
    return ratio;
}

Interval Surd::enclose(mpfr_prec_t precision) const {
    Interval sum(precision);
    for (const auto& [k, q] : parts_) {
        Interval coefficient = Interval::from_rational(q, precision);
        if (k == 1) {
            sum += coefficient;
        } else {
            sum += coefficient * Interval::sqrt_of(mpq_class(static_cast<unsigned long>(k)), precision);
        }
    }
    return sum;
}

int Surd::sign() const {
    if (parts_.empty()) return 0;
    if (is_rational()) return sgn(parts_.begin()->second);
    for (mpfr_prec_t p = 64; p <= (1 << 18); p *= 2) {
        if (auto s = enclose(p).sign(); s && *s != 0) return *s;
    }
    throw std::logic_error("sign of nonzero surd not resolved");
}

double Surd::to_double() const { return enclose(80).midpoint(); }

std::string Surd::to_string() const {
    if (parts_.empty()) return "0";
    std::vector<std::string> pieces;
    for (const auto& [k, q] : parts_) {
        if (k == 1) {
            pieces.push_back(rational_string(q));
        } else {
            std::string root = "sqrt(" + std::to_string(k) + ")";
            if (q == 1) {
                pieces.push_back(root);
            } else if (q == -1) {
                pieces.push_back("-" + root);
            } else {
                pieces.push_back(rational_string(q) + "*" + root);
            }
        }
    }
    if (pieces.size() == 1) return pieces.front();
    std::string out = "(" + pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        if (pieces[i][0] == '-') {
            out += " - " + pieces[i].substr(1);
        } else {
            out += " + " + pieces[i];
        }
    }
    return out + ")";
}

bool Surd::structural_less(const Surd& a, const Surd& b) {
    auto ia = a.parts_.begin();
    auto ib = b.parts_.begin();
    for (; ia != a.parts_.end() && ib != b.parts_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.parts_.end() && ib != b.parts_.end();
}

}  // namespace hardy
