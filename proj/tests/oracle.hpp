#pragma once

// Brute-force reference implementations used by the unit tests. Deliberately
// naive and independent of the library's arithmetic shortcuts: ages are summed
// as rationals, lattice points are enumerated one by one, monomials are listed
// by nested loops.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using V = std::vector<std::int64_t>;

inline std::int64_t degree(const V& w) { return std::accumulate(w.begin(), w.end(), std::int64_t{0}); }

/// Fractional parts {k w_i / d} as rationals, summed.
inline Q age(const V& w, std::int64_t k) {
    const auto d = degree(w);
    Q s = 0;
    for (auto wi : w) {
        Q x(k * wi, d);
        while (x >= 1) x -= 1;
        s += x;
    }
    return s;
}

inline bool strict(const V& w, std::int64_t k) {
    const auto d = degree(w);
    for (auto wi : w)
        if ((k * wi) % d == 0) return false;
    return true;
}

/// a^s_j for j = 1..n.
inline V age_counts(const V& w) {
    V c(w.size() - 1, 0);
    for (std::int64_t k = 1; k < degree(w); ++k)
        if (strict(w, k)) {
            const Q a = age(w, k);
            ++c[static_cast<std::size_t>(boost::multiprecision::numerator(a)) - 1];
        }
    return c;
}

/// Calls f(a) for every a in N^m with a_i >= 0 and sum a_i = total.
inline void compositions(std::size_t m, std::int64_t total, const std::function<void(const V&)>& f) {
    V a(m, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i + 1 == m) {
            a[i] = left;
            f(a);
            return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
            a[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, total);
}

/// The point a/d lies in N = Z^m + Z e iff a = j w (mod d) coordinatewise for some j.
inline bool in_lattice(const V& w, const V& a) {
    const auto d = degree(w);
    for (std::int64_t j = 0; j < d; ++j) {
        bool ok = true;
        for (std::size_t i = 0; i < w.size() && ok; ++i) ok = ((a[i] - j * w[i]) % d + d) % d == 0;
        if (ok) return true;
    }
    return false;
}

/// Points of N at level k, positive exactly on the face (bitmask).
inline std::int64_t strict_points(const V& w, std::uint32_t face, std::int64_t k) {
    const auto d = degree(w);
    std::int64_t n = 0;
    compositions(w.size(), k * d, [&](const V& a) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (((face >> i) & 1U) != (a[i] > 0)) return;
        if (in_lattice(w, a)) ++n;
    });
    return n;
}

/// Coefficients of (1-t)^{s} * sum_k l*(k face) t^k, up to t^{s}.
inline V phi(const V& w, std::uint32_t face) {
    const auto s = static_cast<std::int64_t>(__builtin_popcount(face));
    V counts;
    for (std::int64_t k = 0; k <= s; ++k) counts.push_back(strict_points(w, face, k));
    V out(static_cast<std::size_t>(s) + 1, 0);
    for (std::int64_t k = 0; k <= s; ++k) {
        std::int64_t c = 1;  // binomial(s, i)
        for (std::int64_t i = 0; i <= k; ++i) {
            out[static_cast<std::size_t>(k)] += (i % 2 ? -c : c) * counts[static_cast<std::size_t>(k - i)];
            c = c * (s - i) / (i + 1);
        }
    }
    return out;
}

/// Exponent vectors of degree e supported inside the mask.
inline std::vector<V> monomials(const V& w, std::int64_t e, std::uint32_t mask) {
    std::vector<V> out;
    V m(w.size(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i == w.size()) {
            if (left == 0) out.push_back(m);
            return;
        }
        if (!((mask >> i) & 1U)) {
            m[i] = 0;
            rec(i + 1, left);
            return;
        }
        for (std::int64_t x = 0; x * w[i] <= left; ++x) {
            m[i] = x;
            rec(i + 1, left - x * w[i]);
        }
        m[i] = 0;
    };
    rec(0, e);
    return out;
}

/// Quasismoothness of the general X_e straight from the Jacobian criterion on
/// coordinate strata: for each nonempty I, either some monomial lives on I, or
/// |I| distinct x_j (j outside I) appear as x_j * (monomial on I).
inline bool quasismooth(const V& w, std::int64_t e) {
    const std::size_t m = w.size();
    for (std::uint32_t pair_i = 0; pair_i < m; ++pair_i)
        for (std::uint32_t pair_j = pair_i + 1; pair_j < m; ++pair_j) {
            const std::uint32_t mask = ((1U << m) - 1U) & ~(1U << pair_i) & ~(1U << pair_j);
            if (monomials(w, e, mask).empty()) return false;
        }
    for (std::uint32_t I = 1; I < (1U << m); ++I) {
        if (!monomials(w, e, I).empty()) continue;
        int partners = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (!((I >> j) & 1U) && e - w[j] >= 0 && !monomials(w, e - w[j], I).empty()) ++partners;
        if (partners < __builtin_popcount(I)) return false;
    }
    return true;
}

/// |G| and the largest element order, by listing x in prod Z/d_i with
/// sum w_i x_i = 0 (mod d) and quotienting by the diagonal.
struct GroupFacts {
    std::int64_t order = 0;
    std::int64_t exponent = 0;
};

inline GroupFacts group_facts(const V& w) {
    const auto d = degree(w);
    const std::size_t m = w.size();
    V di(m);
    for (std::size_t i = 0; i < m; ++i) di[i] = d / std::gcd(w[i], d);
    std::vector<V> elems;
    V x(m, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t s) {
        if (i == m) {
            if (s % d == 0) elems.push_back(x);
            return;
        }
        for (std::int64_t t = 0; t < di[i]; ++t) {
            x[i] = t;
            rec(i + 1, s + w[i] * t);
        }
    };
    rec(0, 0);
    std::int64_t diag = 1;
    for (auto v : di) diag = std::lcm(diag, v);
    GroupFacts g;
    g.order = static_cast<std::int64_t>(elems.size()) / diag;
    auto in_diag = [&](const V& y) {
        for (std::int64_t s = 0; s < diag; ++s) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i) ok = ((y[i] - s) % di[i] + di[i]) % di[i] == 0;
            if (ok) return true;
        }
        return false;
    };
    for (const auto& e : elems) {
        V y(m, 0);
        for (std::int64_t t = 1; t <= g.order; ++t) {
            for (std::size_t i = 0; i < m; ++i) y[i] = (y[i] + e[i]) % di[i];
            if (in_diag(y)) {
                g.exponent = std::max(g.exponent, t);
                break;
            }
        }
    }
    return g;
}

/// Plain integer polynomial product, ascending powers.
inline V poly_mul(const V& p, const V& q) {
    V r(p.size() + q.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

} // namespace oracle
