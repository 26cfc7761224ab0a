#pragma once

#include <cctype>
#include <string>

namespace hardy::detail {

inline constexpr std::size_t kLabelLength = 160;

/// Replaces each standalone t by (t+hk).
inline std::string shift_label(const std::string& s, unsigned k) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const bool standalone = s[i] == 't' && (i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1]))) &&
                                (i + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 1])));
        if (standalone) {
            out += "(t+h" + std::to_string(k) + ")";
        } else {
            out += s[i];
        }
    }
    return out;
}

inline std::string difference_label(const std::string& a, const std::string& b) {
    const bool compound = b.find(' ') != std::string::npos || (!b.empty() && b[0] == '-');
    return a + " - " + (compound ? "(" + b + ")" : b);
}

/// Symbolic label when short, expanded text otherwise.
template <class Render>
std::string pick_label(std::string symbolic, const Render& expanded) {
    return symbolic.size() <= kLabelLength ? std::move(symbolic) : expanded();
}

/// Families above this size carry no labels; only small derivation nodes print them.
inline constexpr std::size_t kLabelledFamily = 64;

}  // namespace hardy::detail
