#pragma once

// Lattice arithmetic on N = Z(w_0/d, ..., w_n/d) + Z^{n+1}: residues, unit-box
// representatives, Reid ages, the strict-age spectrum and the singular value
// of the hypergeometric operator.

#include "wph/error.hpp"
#include "wph/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace wph {

/// A validated, well-formed weight vector (w_0, ..., w_n) with d = sum w_i.
///
/// weights() is the canonical ascending order used by every permutation
/// invariant computation; input_order() keeps the caller's order for display
/// and for coordinate-aligned output (quotient presentations, the fibration table).
class WeightTuple {
public:
    const std::vector<std::int64_t>& weights() const noexcept { return sorted_; }
    const std::vector<std::int64_t>& input_order() const noexcept { return input_; }

    /// sorted position -> input index
    const std::vector<std::size_t>& permutation() const noexcept { return perm_; }

    std::int64_t degree() const noexcept { return degree_; }
    std::size_t dim() const noexcept { return sorted_.size() - 1; }
    std::size_t size() const noexcept { return sorted_.size(); }

    /// The same tuple with input order replaced by the canonical order.
    WeightTuple canonical() const {
        WeightTuple c = *this;
        c.input_ = sorted_;
        std::iota(c.perm_.begin(), c.perm_.end(), std::size_t{0});
        return c;
    }

    friend bool operator==(const WeightTuple& a, const WeightTuple& b) noexcept {
        return a.sorted_ == b.sorted_;
    }

    friend WeightTuple make_weights(std::span<const std::int64_t> raw);

private:
    std::vector<std::int64_t> sorted_;
    std::vector<std::int64_t> input_;
    std::vector<std::size_t> perm_;
    std::int64_t degree_ = 0;
};

/// Validates raw weights. Throws EmptyInput for fewer than two entries or a
/// nonpositive weight, WellFormednessError naming the first index whose
/// omission leaves a common factor.
inline WeightTuple make_weights(std::span<const std::int64_t> raw) {
    if (raw.size() < 2)
        throw Error(ErrorKind::EmptyInput, "at least two weights are required");
    if (raw.size() > 32)
        throw Error(ErrorKind::Range, "at most 32 weights are supported");
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (raw[i] < 1)
            throw Error(ErrorKind::EmptyInput,
                        "weight at index " + std::to_string(i) + " is not positive");

    for (std::size_t i = 0; i < raw.size(); ++i) {
        std::int64_t g = 0;
        for (std::size_t j = 0; j < raw.size(); ++j)
            if (j != i) g = std::gcd(g, raw[j]);
        if (g > 1) throw WellFormednessError(i, g);
    }

    WeightTuple w;
    w.input_.assign(raw.begin(), raw.end());
    w.perm_.resize(raw.size());
    std::iota(w.perm_.begin(), w.perm_.end(), std::size_t{0});
    std::stable_sort(w.perm_.begin(), w.perm_.end(),
                     [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });
    for (auto i : w.perm_) w.sorted_.push_back(raw[i]);
    w.degree_ = std::accumulate(raw.begin(), raw.end(), std::int64_t{0});
    return w;
}

inline WeightTuple make_weights(std::initializer_list<std::int64_t> raw) {
    return make_weights(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

inline WeightTuple make_weights(const std::vector<std::int64_t>& raw) {
    return make_weights(std::span<const std::int64_t>(raw));
}

/// The unit-box representative of k*e, e = (w_0/d, ..., w_n/d), in input order.
struct BoxElement {
    std::int64_t residue = 0;
    std::int64_t denominator = 1;          // d
    std::vector<std::int64_t> numerators;  // k*w_i mod d, entry i of rep is numerators[i]/d
    std::int64_t age = 0;
    bool strict = false;

    std::vector<Rational> rep() const {
        std::vector<Rational> out;
        out.reserve(numerators.size());
        for (auto a : numerators) out.emplace_back(a, denominator);
        return out;
    }
};

/// Age of residue k: (sum_i (k*w_i mod d)) / d. Hot path, pure integer.
inline std::int64_t age_of(std::span<const std::int64_t> weights, std::int64_t d,
                           std::int64_t k) noexcept {
    std::int64_t s = 0;
    for (auto w : weights) s += (k * w) % d;
    assert(s % d == 0);
    return s / d;
}

inline BoxElement box_element(const WeightTuple& w, std::int64_t k) {
    const std::int64_t d = w.degree();
    if (k < 0 || k >= d)
        throw Error(ErrorKind::Range,
                    "residue " + std::to_string(k) + " outside [0," + std::to_string(d) + ")");
    BoxElement b;
    b.residue = k;
    b.denominator = d;
    b.strict = k != 0;
    std::int64_t sum = 0;
    for (auto wi : w.input_order()) {
        const std::int64_t a = (k * wi) % d;
        b.numerators.push_back(a);
        sum += a;
        if (a == 0) b.strict = false;
    }
    assert(sum % d == 0);
    b.age = sum / d;
    return b;
}

/// Strict residues (Z/d)^0 and the counts a^s_1..a^s_n of strict age j.
struct AgeSpectrum {
    WeightTuple weights;
    std::vector<std::int64_t> strict_residues;
    std::vector<std::int64_t> counts;  // counts[j-1] = a^s_j, j = 1..n
    std::int64_t rank = 0;

    /// a^s_j for 1 <= j <= n.
    std::int64_t at(std::size_t j) const { return counts.at(j - 1); }
};

inline AgeSpectrum age_spectrum(const WeightTuple& w) {
    const auto& ws = w.weights();
    const std::int64_t d = w.degree();
    AgeSpectrum s{w, {}, std::vector<std::int64_t>(w.dim(), 0), 0};
    for (std::int64_t k = 1; k < d; ++k) {
        std::int64_t sum = 0;
        bool strict = true;
        for (auto wi : ws) {
            const std::int64_t a = (k * wi) % d;
            if (a == 0) {
                strict = false;
                break;
            }
            sum += a;
        }
        if (!strict) continue;
        assert(sum % d == 0);
        const std::int64_t age = sum / d;
        assert(age >= 1 && static_cast<std::size_t>(age) <= w.dim());
        ++s.counts[static_cast<std::size_t>(age - 1)];
        s.strict_residues.push_back(k);
    }
    s.rank = static_cast<std::int64_t>(s.strict_residues.size());
    return s;
}

struct Canonicity {
    bool canonical = false;
    /// Strict residues of age 1 other than k = 1; each one is a nonzero lattice
    /// point strictly inside the simplex.
    std::vector<std::int64_t> certificate;
};

inline Canonicity is_canonical(const WeightTuple& w) {
    Canonicity c;
    const auto& ws = w.weights();
    const std::int64_t d = w.degree();
    for (std::int64_t k = 2; k < d; ++k) {
        std::int64_t sum = 0;
        bool strict = true;
        for (auto wi : ws) {
            const std::int64_t a = (k * wi) % d;
            if (a == 0) {
                strict = false;
                break;
            }
            sum += a;
        }
        if (strict && sum == d) c.certificate.push_back(k);
    }
    c.canonical = c.certificate.empty();
    return c;
}

/// Early-exit canonicity test for the enumeration hot path: stops at the
/// second strict age-1 residue.
inline bool is_canonical_fast(std::span<const std::int64_t> ws, std::int64_t d) noexcept {
    for (std::int64_t k = 2; k < d; ++k) {
        std::int64_t sum = 0;
        for (auto wi : ws) {
            const std::int64_t a = (k * wi) % d;
            if (a == 0) {
                sum = -1;
                break;
            }
            sum += a;
            if (sum > d) break;
        }
        if (sum == d) return false;
    }
    return true;
}

/// lambda = prod w_i^{w_i} / d^d, kept both raw and reduced.
struct SpectralValue {
    BigInt numerator;
    BigInt denominator;
    Rational reduced;
};

inline SpectralValue lambda_value(const WeightTuple& w) {
    SpectralValue v{1, 1, {}};
    for (auto wi : w.weights()) v.numerator *= boost::multiprecision::pow(BigInt(wi), static_cast<unsigned>(wi));
    v.denominator = boost::multiprecision::pow(BigInt(w.degree()), static_cast<unsigned>(w.degree()));
    v.reduced = Rational(v.numerator, v.denominator);
    return v;
}

} // namespace wph
