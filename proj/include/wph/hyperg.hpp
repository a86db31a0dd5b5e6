#pragma once

// Hypergeometric parameter algebra: the multisets A and B attached to a weight
// tuple, the cancellation H -> H^red, integer-factor and expanded forms of both
// operators, and the Hodge-number calculator for general (alpha; beta) data.

#include "wph/agecalc.hpp"
#include "wph/error.hpp"
#include "wph/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wph {

/// Sorted multiset of rationals in [0, 1).
class ParamMultiset {
public:
    ParamMultiset() = default;

    explicit ParamMultiset(std::vector<Rational> entries) : entries_(std::move(entries)) {
        for (const auto& q : entries_)
            if (q < 0 || q >= 1)
                throw Error(ErrorKind::Range, "parameter " + render(q) + " is outside [0,1)");
        std::stable_sort(entries_.begin(), entries_.end());
    }

    const std::vector<Rational>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// The multiset {(1 - q) mod 1}.
    ParamMultiset negated() const {
        std::vector<Rational> out;
        out.reserve(entries_.size());
        for (const auto& q : entries_) out.push_back(q == 0 ? Rational(0) : Rational(1) - q);
        return ParamMultiset(std::move(out));
    }

    bool conjugation_stable() const { return negated() == *this; }

    friend bool operator==(const ParamMultiset&, const ParamMultiset&) = default;

private:
    std::vector<Rational> entries_;
};

struct ParameterSets {
    ParamMultiset a;  // union over i of {k/w_i}
    ParamMultiset b;  // {k/d}
};

inline ParameterSets build_parameter_sets(const WeightTuple& w) {
    std::vector<Rational> a, b;
    for (auto wi : w.input_order())
        for (std::int64_t k = 0; k < wi; ++k) a.emplace_back(k, wi);
    for (std::int64_t k = 0; k < w.degree(); ++k) b.emplace_back(k, w.degree());
    return {ParamMultiset(std::move(a)), ParamMultiset(std::move(b))};
}

struct Cancellation {
    ParamMultiset alphas;
    ParamMultiset betas;
    ParamMultiset common;
};

/// Multiset intersection and the two differences, by a sorted merge.
inline Cancellation cancel(const ParamMultiset& a, const ParamMultiset& b) {
    std::vector<Rational> alphas, betas, common;
    const auto& x = a.entries();
    const auto& y = b.entries();
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i] < y[j])) {
            alphas.push_back(x[i++]);
        } else if (i == x.size() || y[j] < x[i]) {
            betas.push_back(y[j++]);
        } else {
            common.push_back(x[i]);
            ++i;
            ++j;
        }
    }
    return {ParamMultiset(std::move(alphas)), ParamMultiset(std::move(betas)),
            ParamMultiset(std::move(common))};
}

/// Linear factor c*D - r (left summand) or c*D + r (right summand).
struct LinearFactor {
    std::int64_t c = 1;
    std::int64_t r = 0;
    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

using Polynomial = std::vector<BigInt>;  // coefficients in ascending powers of D

inline Polynomial multiply(const Polynomial& p, const Polynomial& q) {
    if (p.empty() || q.empty()) return {};
    Polynomial out(p.size() + q.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

/// leftPoly(D) - t * rightPoly(D), each summand stored as
/// scale * product of its linear factors and also fully expanded.
struct OperatorForm {
    bool reduced = false;
    BigInt left_scale = 1;
    BigInt right_scale = 1;
    std::vector<LinearFactor> left;   // (c*D - r)
    std::vector<LinearFactor> right;  // (c*D + r)
    Polynomial expanded_left;
    Polynomial expanded_right;

    std::size_t degree() const noexcept {
        return std::max(expanded_left.size(), expanded_right.size()) - 1;
    }

    void expand() {
        expanded_left = {left_scale};
        for (const auto& f : left) expanded_left = multiply(expanded_left, {BigInt(-f.r), BigInt(f.c)});
        expanded_right = {right_scale};
        for (const auto& f : right) expanded_right = multiply(expanded_right, {BigInt(f.r), BigInt(f.c)});
    }
};

struct OperatorPair {
    OperatorForm full;
    OperatorForm reduced;
    Cancellation cancellation;
};

inline OperatorPair operator_forms(const WeightTuple& w) {
    const std::int64_t d = w.degree();
    OperatorPair out;
    for (auto wi : w.input_order())
        for (std::int64_t k = 0; k < wi; ++k) out.full.left.push_back({wi, k});
    for (std::int64_t k = 0; k < d; ++k) out.full.right.push_back({d, k});
    out.full.expand();

    const auto sets = build_parameter_sets(w);
    out.cancellation = cancel(sets.a, sets.b);

    OperatorForm red = out.full;
    red.reduced = true;
    for (const auto& q : out.cancellation.common.entries()) {
        // left: remove one factor (c, r) with r/c == q; the removed monic root
        // leaves its leading coefficient behind as a scalar.
        auto it = std::find_if(red.left.begin(), red.left.end(),
                               [&](const LinearFactor& f) { return Rational(f.r, f.c) == q; });
        assert(it != red.left.end());
        red.left_scale *= it->c;
        red.left.erase(it);

        // right: B is negation-stable, so q = k/d pairs with the factor (d*D + (d-k) mod d).
        const Rational qd = q * d;
        assert(denominator(qd) == 1);
        const auto k = static_cast<std::int64_t>(numerator(qd));
        const LinearFactor target{d, mod_floor(d - k, d)};
        auto jt = std::find(red.right.begin(), red.right.end(), target);
        assert(jt != red.right.end());
        red.right_scale *= jt->c;
        red.right.erase(jt);
    }
    red.expand();
    out.reduced = std::move(red);
    return out;
}

namespace detail {

inline std::string factor_product(const BigInt& scale, const std::vector<LinearFactor>& fs,
                                  char sign) {
    std::string s;
    if (scale != 1 || fs.empty()) s = scale.str();
    for (const auto& f : fs) {
        if (!s.empty()) s += "*";
        const std::string d = f.c == 1 ? "D" : std::to_string(f.c) + "*D";
        s += f.r == 0 ? d : "(" + d + " " + sign + " " + std::to_string(f.r) + ")";
    }
    return s;
}

inline std::string polynomial_text(const Polynomial& p) {
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) {
        const BigInt& c = p[i];
        if (c == 0) continue;
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        const std::string mono = i == 0 ? "" : (i == 1 ? "D" : "D^" + std::to_string(i));
        if (mono.empty())
            s += mag.str();
        else if (mag == 1)
            s += mono;
        else
            s += mag.str() + "*" + mono;
    }
    return s.empty() ? "0" : s;
}

inline bool is_monomial(const Polynomial& p) {
    return std::count_if(p.begin(), p.end(), [](const BigInt& c) { return c != 0; }) <= 1;
}

} // namespace detail

/// "(c*D - r)*... - t*(c*D + r)*..." with a leading scalar where it is not 1.
inline std::string factored_text(const OperatorForm& op) {
    return detail::factor_product(op.left_scale, op.left, '-') + " - t*" +
           detail::factor_product(op.right_scale, op.right, '+');
}

inline std::string expanded_text(const OperatorForm& op) {
    auto wrap = [](const Polynomial& p) {
        const auto s = detail::polynomial_text(p);
        return detail::is_monomial(p) ? s : "(" + s + ")";
    };
    return detail::polynomial_text(op.expanded_left) + " - t*" + wrap(op.expanded_right);
}

/// Hodge data predicted for H({alpha}; {beta}).
///
/// p(k) = #{j : alpha_j < beta_k} - k over the betas in ascending order. The
/// vector `hodge` runs from h^{w,0} down to h^{0,w}, the same order as
/// (a^s_1, ..., a^s_n) for weight-tuple inputs.
struct HodgeProfile {
    ParamMultiset alphas;
    ParamMultiset betas;
    std::vector<std::int64_t> p_values;
    std::int64_t p_plus = 0;
    std::int64_t p_minus = 0;
    std::int64_t weight = 0;
    std::vector<std::int64_t> hodge;
    bool conjectural = true;
};

inline HodgeProfile conjecture_hodge(const ParamMultiset& alphas, const ParamMultiset& betas,
                                     std::int64_t index_origin = 0) {
    if (alphas.size() != betas.size())
        throw Error(ErrorKind::Range, "alpha and beta lists must have the same length");
    if (alphas.empty()) throw Error(ErrorKind::EmptyInput, "parameter lists are empty");
    for (const auto& a : alphas.entries())
        if (std::binary_search(betas.entries().begin(), betas.entries().end(), a))
            throw Error(ErrorKind::Overlap, "parameter " + render(a) + " occurs in both lists");
    if (!alphas.conjugation_stable())
        throw Error(ErrorKind::Conjugation, "alpha list is not stable under q -> 1-q mod 1");
    if (!betas.conjugation_stable())
        throw Error(ErrorKind::Conjugation, "beta list is not stable under q -> 1-q mod 1");

    HodgeProfile h;
    h.alphas = alphas;
    h.betas = betas;
    const auto& al = alphas.entries();
    for (std::size_t k = 0; k < betas.size(); ++k) {
        const auto below = std::lower_bound(al.begin(), al.end(), betas.entries()[k]) - al.begin();
        h.p_values.push_back(static_cast<std::int64_t>(below) - static_cast<std::int64_t>(k) -
                             index_origin);
    }
    h.p_plus = *std::max_element(h.p_values.begin(), h.p_values.end());
    h.p_minus = *std::min_element(h.p_values.begin(), h.p_values.end());
    h.weight = h.p_plus - h.p_minus;
    // h^{j - p_-, p_+ - j} = #p^{-1}(j); slot for h^{q, w-q} is w - q.
    h.hodge.assign(static_cast<std::size_t>(h.weight + 1), 0);
    for (auto p : h.p_values) ++h.hodge[static_cast<std::size_t>(h.p_plus - p)];
    return h;
}

struct PropositionReport {
    bool holds = false;
    std::vector<std::int64_t> from_parameters;  // HodgeProfile read as (h^{n-1,0}, ..., h^{0,n-1})
    std::vector<std::int64_t> from_ages;        // (a^s_1, ..., a^s_n)
    HodgeProfile profile;
};

/// Cross-checks the parameter-side Hodge profile against the age spectrum.
inline PropositionReport verify_proposition(const WeightTuple& w) {
    const auto sets = build_parameter_sets(w);
    const auto c = cancel(sets.a, sets.b);
    PropositionReport r;
    r.profile = conjecture_hodge(c.alphas, c.betas);
    r.profile.conjectural = false;
    r.from_ages = age_spectrum(w).counts;
    r.from_parameters = r.profile.hodge;
    if (r.from_parameters.size() < r.from_ages.size())
        r.from_parameters.resize(r.from_ages.size(), 0);
    r.holds = static_cast<std::size_t>(r.profile.weight) + 1 == w.dim() &&
              r.from_parameters == r.from_ages;
    return r;
}

} // namespace wph
