#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace wph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" rendering: lowest terms, q > 0, integers written as "p/1".
inline std::string render(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p/q" or a bare integer. Returns false on malformed text or a zero
/// denominator.
inline bool parse_rational(const std::string& text, Rational& out) {
    auto digits = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false)) return false;
    BigInt p(num[0] == '+' ? num.substr(1) : num);
    BigInt q(den);
    if (q == 0) return false;
    out = Rational(p, q);
    return true;
}

/// Nonnegative residue of a modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) noexcept {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t gcd_of(std::span<const std::int64_t> values) noexcept {
    std::int64_t g = 0;
    for (auto v : values) g = std::gcd(g, v);
    return g;
}

/// Binomial coefficient C(n, k) for small arguments; 0 when k < 0 or k > n.
constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) noexcept {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace wph
