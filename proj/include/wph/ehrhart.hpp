#pragma once

// Lattice-point counting on the simplex spanned by e_0, ..., e_n in the level-1
// slice of N, and on its faces. The strict counts l*(k*face) give the
// numerators P(t) = (1-t)^{dim+1} L*(t), and the alternating face sum of these
// numerators recovers the strict-age spectrum independently of agecalc.

#include "wph/agecalc.hpp"
#include "wph/error.hpp"
#include "wph/numeric.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace wph {

inline constexpr unsigned long long default_visit_limit = 100'000'000ULL;

/// The lattice N for a weight tuple, with box representatives precomputed.
/// Coordinates follow the input order of the weights.
class LatticeContext {
public:
    explicit LatticeContext(WeightTuple w, unsigned long long visit_limit = default_visit_limit)
        : weights_(std::move(w)), limit_(visit_limit) {
        const auto d = weights_.degree();
        const auto& ws = weights_.input_order();
        box_.resize(static_cast<std::size_t>(d) * ws.size());
        ages_.resize(static_cast<std::size_t>(d));
        for (std::int64_t k = 0; k < d; ++k) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < ws.size(); ++i) {
                const auto a = (k * ws[i]) % d;
                box_[static_cast<std::size_t>(k) * ws.size() + i] = a;
                s += a;
            }
            ages_[static_cast<std::size_t>(k)] = s / d;
        }
    }

    const WeightTuple& weights() const noexcept { return weights_; }
    std::int64_t degree() const noexcept { return weights_.degree(); }
    std::size_t dim() const noexcept { return weights_.dim(); }
    unsigned long long visit_limit() const noexcept { return limit_; }

    /// Numerator of coordinate i of the box representative of residue k.
    std::int64_t box(std::int64_t k, std::size_t i) const noexcept {
        return box_[static_cast<std::size_t>(k) * weights_.size() + i];
    }
    std::int64_t age(std::int64_t k) const noexcept { return ages_[static_cast<std::size_t>(k)]; }

    /// Residue k with v = k*e mod Z^{n+1}, if v is in N.
    std::optional<std::int64_t> residue_of(const std::vector<Rational>& v) const {
        if (v.size() != weights_.size()) return std::nullopt;
        const auto d = degree();
        for (const auto& x : v)
            if (d % static_cast<std::int64_t>(denominator(x)) != 0) return std::nullopt;
        for (std::int64_t k = 0; k < d; ++k) {
            bool ok = true;
            for (std::size_t i = 0; i < v.size() && ok; ++i)
                ok = denominator(v[i] - Rational(box(k, i), d)) == 1;
            if (ok) return k;
        }
        return std::nullopt;
    }

    bool contains(const std::vector<Rational>& v) const { return residue_of(v).has_value(); }

    /// l(v) = sum of coordinates.
    static Rational level(const std::vector<Rational>& v) {
        Rational s = 0;
        for (const auto& x : v) s += x;
        return s;
    }

private:
    WeightTuple weights_;
    unsigned long long limit_;
    std::vector<std::int64_t> box_;
    std::vector<std::int64_t> ages_;
};

/// Face of the simplex spanned by {e_i : i in S}; S is a bitmask over input
/// coordinates.
struct SimplexFace {
    std::uint32_t vertices = 0;

    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(vertices)); }
    int dim() const noexcept { return static_cast<int>(size()) - 1; }
    bool contains(std::size_t i) const noexcept { return (vertices >> i) & 1U; }

    static SimplexFace full(std::size_t coordinates) {
        return {coordinates >= 32 ? ~0U : (1U << coordinates) - 1U};
    }
};

namespace detail {

struct VisitBudget {
    unsigned long long limit;
    unsigned long long used = 0;
    void charge(unsigned long long n = 1) {
        used += n;
        if (used > limit) throw ResourceError(limit);
    }
};

inline std::int64_t strict_count(const LatticeContext& ctx, SimplexFace face, std::int64_t k,
                                 VisitBudget& budget) {
    if (k <= 0 || face.vertices == 0) return 0;
    const std::size_t m = ctx.weights().size();
    const auto s = static_cast<std::int64_t>(face.size());
    std::int64_t total = 0;
    for (std::int64_t j = 0; j < ctx.degree(); ++j) {
        budget.charge();
        bool supported = true;
        std::int64_t zeros_inside = 0;
        for (std::size_t i = 0; i < m && supported; ++i) {
            const bool zero = ctx.box(j, i) == 0;
            if (!face.contains(i))
                supported = zero;
            else if (zero)
                ++zeros_inside;
        }
        if (!supported) continue;
        // v = box(j) + t, t >= 0 integral, t_i >= 1 where box(j)_i = 0, l(v) = k.
        const std::int64_t free = k - ctx.age(j) - zeros_inside;
        if (free < 0) continue;
        total += binomial(free + s - 1, s - 1);
    }
    return total;
}

} // namespace detail

/// Number of v in N with l(v) = k, v_i > 0 on the face and v_i = 0 off it.
inline std::int64_t strict_count(const LatticeContext& ctx, SimplexFace face, std::int64_t k) {
    if (k < 0) throw Error(ErrorKind::Range, "level must be nonnegative");
    detail::VisitBudget budget{ctx.visit_limit()};
    return detail::strict_count(ctx, face, k, budget);
}

struct EhrhartPolynomialData {
    SimplexFace face;
    std::vector<std::int64_t> strict_counts;  // l*(k face), k = 0 .. dim+1
    std::vector<std::int64_t> phis;           // phi_1 .. phi_{dim+1}

    /// phi_k with the convention phi_k = 0 outside [1, dim+1].
    std::int64_t phi(std::int64_t k) const noexcept {
        if (k < 1 || k > static_cast<std::int64_t>(phis.size())) return 0;
        return phis[static_cast<std::size_t>(k - 1)];
    }
};

namespace detail {

inline EhrhartPolynomialData ehrhart_data(const LatticeContext& ctx, SimplexFace face,
                                          VisitBudget& budget) {
    const auto top = face.dim() + 1;
    // One level past the degree bound, to check that the series truncates.
    std::vector<std::int64_t> counts;
    for (std::int64_t k = 0; k <= top + 1; ++k) counts.push_back(strict_count(ctx, face, k, budget));

    std::vector<std::int64_t> coeffs(counts.size(), 0);
    for (std::size_t k = 0; k < counts.size(); ++k)
        for (std::size_t i = 0; i <= k && i <= static_cast<std::size_t>(top); ++i) {
            const auto c = binomial(top, static_cast<std::int64_t>(i));
            coeffs[k] += (i % 2 ? -c : c) * counts[k - i];
        }
    if (coeffs.front() != 0 || coeffs.back() != 0)
        throw Error(ErrorKind::Degree, "strict Ehrhart series does not truncate to a polynomial");

    EhrhartPolynomialData out;
    out.face = face;
    out.strict_counts.assign(counts.begin(), counts.end() - 1);
    out.phis.assign(coeffs.begin() + 1, coeffs.end() - 1);
    return out;
}

} // namespace detail

inline EhrhartPolynomialData ehrhart_data(const LatticeContext& ctx, SimplexFace face) {
    if (face.vertices == 0) throw Error(ErrorKind::Range, "face must have at least one vertex");
    detail::VisitBudget budget{ctx.visit_limit()};
    return detail::ehrhart_data(ctx, face, budget);
}

/// (h^{n-1,0}, ..., h^{0,n-1}) from the alternating sum over faces:
/// h_k = sum over faces G of (-1)^{codim G} phi_{k - codim G}(G).
inline std::vector<std::int64_t> hodge_via_inclusion_exclusion(const LatticeContext& ctx) {
    const std::size_t m = ctx.weights().size();
    const auto n = static_cast<std::int64_t>(ctx.dim());
    detail::VisitBudget budget{ctx.visit_limit()};
    // index k = 0 .. n+1; the empty face (codim n+1, P = 1) only reaches t^{n+1}
    std::vector<std::int64_t> h(static_cast<std::size_t>(n + 2), 0);
    h[static_cast<std::size_t>(n + 1)] += (n + 1) % 2 ? -1 : 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        const SimplexFace face{static_cast<std::uint32_t>(mask)};
        const auto data = detail::ehrhart_data(ctx, face, budget);
        const std::int64_t codim = n - face.dim();
        const std::int64_t sign = codim % 2 ? -1 : 1;
        for (std::int64_t k = 1; k <= n + 1; ++k) h[static_cast<std::size_t>(k)] += sign * data.phi(k - codim);
    }
    if (h[static_cast<std::size_t>(n + 1)] != 0)
        throw Error(ErrorKind::Degree, "face sum leaves a nonzero t^{n+1} coefficient");
    return {h.begin() + 1, h.end() - 1};
}

enum class Polytope { Delta, DualDelta };

using LatticePoint = std::vector<Rational>;

/// Lattice points strictly inside the simplex (Delta: points of N at level 1
/// with all coordinates in (0,1), e included) or its dual (DualDelta: the
/// integer vectors a_i = <m, e_i - e> with a_i >= 0 and sum w_i a_i = 0).
inline std::vector<LatticePoint> interior_points(const LatticeContext& ctx, Polytope which) {
    const auto& ws = ctx.weights().input_order();
    const std::size_t m = ws.size();
    detail::VisitBudget budget{ctx.visit_limit()};
    std::vector<LatticePoint> out;
    if (which == Polytope::Delta) {
        for (std::int64_t k = 1; k < ctx.degree(); ++k) {
            budget.charge();
            if (ctx.age(k) != 1) continue;
            LatticePoint v;
            bool strict = true;
            for (std::size_t i = 0; i < m; ++i) {
                strict = strict && ctx.box(k, i) != 0;
                v.emplace_back(ctx.box(k, i), ctx.degree());
            }
            if (strict) out.push_back(std::move(v));
        }
        return out;
    }
    // a_i >= 0 and sum w_i a_i = 0 admit only a = 0, but search the box
    // 0 <= a_i <= (d - w_i)/w_i anyway.
    std::vector<std::int64_t> a(m, 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t sum) -> void {
        budget.charge();
        if (i == m) {
            if (sum == 0) {
                LatticePoint v;
                for (auto x : a) v.emplace_back(x);
                out.push_back(std::move(v));
            }
            return;
        }
        const auto hi = (ctx.degree() - ws[i]) / ws[i];
        for (std::int64_t x = 0; x <= hi; ++x) {
            a[i] = x;
            self(self, i + 1, sum + ws[i] * x);
        }
        a[i] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

/// Number of lattice points of the dual simplex {a_i >= -1, sum w_i a_i = 0}.
inline std::int64_t dual_lattice_point_count(const LatticeContext& ctx) {
    const auto& ws = ctx.weights().input_order();
    const std::size_t m = ws.size();
    detail::VisitBudget budget{ctx.visit_limit()};
    // suffix minima of the remaining sum, to prune
    std::vector<std::int64_t> min_rest(m + 1, 0);
    std::vector<std::int64_t> max_rest(m + 1, 0);
    for (std::size_t i = m; i-- > 0;) {
        min_rest[i] = min_rest[i + 1] - ws[i];
        max_rest[i] = max_rest[i + 1] + (ctx.degree() - ws[i]) / ws[i] * ws[i];
    }
    std::int64_t count = 0;
    auto rec = [&](auto&& self, std::size_t i, std::int64_t sum) -> void {
        budget.charge();
        if (i == m) {
            count += sum == 0;
            return;
        }
        const auto hi = (ctx.degree() - ws[i]) / ws[i];
        for (std::int64_t x = -1; x <= hi; ++x) {
            const auto s = sum + ws[i] * x;
            if (s + min_rest[i + 1] > 0) break;
            if (s + max_rest[i + 1] < 0) continue;
            self(self, i + 1, s);
        }
    };
    rec(rec, 0, 0);
    return count;
}

} // namespace wph
