#pragma once

// Classification of weight tuples: monomial bookkeeping, well-formedness and
// quasismoothness of the general anticanonical hypersurface, and the search
// for weighted projective spaces with canonical singularities.

#include "wph/agecalc.hpp"
#include "wph/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <numeric>
#include <span>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace wph {

/// Closed: every exponent vector supported inside the subset.
/// Exact: supported inside the subset and using every variable of it.
enum class SupportMode { Closed, Exact };

namespace detail {

inline std::vector<std::int64_t> support_weights(std::span<const std::int64_t> ws,
                                                 std::uint32_t support) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < ws.size(); ++i)
        if ((support >> i) & 1U) out.push_back(ws[i]);
    return out;
}

inline std::int64_t exact_shift(std::span<const std::int64_t> ws, std::uint32_t support) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < ws.size(); ++i)
        if ((support >> i) & 1U) s += ws[i];
    return s;
}

} // namespace detail

/// Number of exponent vectors m >= 0 with sum m_i w_i = e on the given support
/// (bitmask over input coordinates).
inline std::uint64_t count_monomials(std::span<const std::int64_t> ws, std::int64_t e,
                                     std::uint32_t support, SupportMode mode = SupportMode::Closed) {
    if (mode == SupportMode::Exact) e -= detail::exact_shift(ws, support);
    if (e < 0) return 0;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(e) + 1, 0);
    ways[0] = 1;
    for (auto w : detail::support_weights(ws, support))
        for (std::int64_t t = w; t <= e; ++t)
            ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - w)];
    return ways[static_cast<std::size_t>(e)];
}

/// Existence variant of count_monomials; short-circuits.
inline bool has_monomial(std::span<const std::int64_t> ws, std::int64_t e, std::uint32_t support,
                         SupportMode mode = SupportMode::Closed) {
    if (mode == SupportMode::Exact) e -= detail::exact_shift(ws, support);
    if (e < 0) return false;
    if (e == 0) return true;
    const auto sw = detail::support_weights(ws, support);
    if (sw.empty()) return false;
    std::int64_t g = 0;
    for (auto w : sw) g = std::gcd(g, w);
    if (e % g != 0) return false;
    std::vector<char> reach(static_cast<std::size_t>(e) + 1, 0);
    reach[0] = 1;
    for (auto w : sw) {
        for (std::int64_t t = w; t <= e; ++t)
            if (reach[static_cast<std::size_t>(t - w)]) reach[static_cast<std::size_t>(t)] = 1;
        if (reach[static_cast<std::size_t>(e)]) return true;
    }
    return false;
}

inline std::uint64_t monomials_of_degree(const WeightTuple& w, std::int64_t e, std::uint32_t support,
                                         SupportMode mode = SupportMode::Closed) {
    if (e < 0) throw Error(ErrorKind::Range, "degree must be nonnegative");
    return count_monomials(w.input_order(), e, support, mode);
}

/// X_e in P(w); degree defaults to the anticanonical degree d.
struct HypersurfaceSpec {
    WeightTuple weights;
    std::int64_t degree = 0;

    explicit HypersurfaceSpec(WeightTuple w) : weights(std::move(w)), degree(weights.degree()) {}
    HypersurfaceSpec(WeightTuple w, std::int64_t e) : weights(std::move(w)), degree(e) {
        if (e < 1) throw Error(ErrorKind::Range, "hypersurface degree must be positive");
    }
};

inline std::uint32_t all_coordinates(std::size_t m) {
    return m >= 32 ? ~0U : (1U << m) - 1U;
}

/// A general X_e contains no (x_i = x_j = 0): for each pair some degree-e
/// monomial avoids both variables.
inline bool general_hypersurface_well_formed(const HypersurfaceSpec& spec) {
    const auto& ws = spec.weights.input_order();
    const auto all = all_coordinates(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            if (!has_monomial(ws, spec.degree, all & ~(1U << i) & ~(1U << j))) return false;
    return true;
}

struct QuasismoothResult {
    bool quasismooth = false;
    bool well_formed = false;
    /// Coordinate subset (input order) where the criterion fails, if it does.
    std::optional<std::uint32_t> witness;
};

/// For every nonempty subset I: either a degree-e monomial lives on I, or at
/// least |I| distinct j outside I carry a degree-e monomial x_I^m x_j.
/// Combined with general_hypersurface_well_formed.
inline QuasismoothResult general_hypersurface_quasismooth(const HypersurfaceSpec& spec) {
    const auto& ws = spec.weights.input_order();
    for (auto wi : ws)
        if (wi == spec.degree)
            throw Error(ErrorKind::LinearCone,
                        "degree " + std::to_string(spec.degree) + " equals a weight (linear cone)");
    QuasismoothResult r;
    r.well_formed = general_hypersurface_well_formed(spec);
    const std::size_t m = ws.size();
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << m); ++subset) {
        const auto I = static_cast<std::uint32_t>(subset);
        if (has_monomial(ws, spec.degree, I)) continue;
        int partners = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (!((I >> j) & 1U) && spec.degree > ws[j] && has_monomial(ws, spec.degree - ws[j], I))
                ++partners;
        if (partners < std::popcount(I)) {
            r.witness = I;
            break;
        }
    }
    r.quasismooth = r.well_formed && !r.witness;
    return r;
}

enum class Tag { Famous95, AdditionalNine, NonCanonical };

inline const char* to_string(Tag t) noexcept {
    switch (t) {
    case Tag::Famous95: return "famous95";
    case Tag::AdditionalNine: return "additionalNine";
    case Tag::NonCanonical: return "nonCanonical";
    }
    return "?";
}

struct ClassificationRecord {
    WeightTuple weights;  // canonical (ascending) order
    bool canonical = false;
    bool general_xd_well_formed = false;
    bool general_xd_quasismooth = false;
    AgeSpectrum hodge;
    Tag tag = Tag::NonCanonical;
};

inline ClassificationRecord classify_weights(const WeightTuple& input) {
    const auto w = input.canonical();
    const HypersurfaceSpec spec(w);
    const auto qs = general_hypersurface_quasismooth(spec);
    ClassificationRecord r{w, false, qs.well_formed, qs.quasismooth, age_spectrum(w), Tag::NonCanonical};
    r.canonical = r.hodge.counts.front() == 1;
    if (r.canonical) r.tag = r.general_xd_quasismooth ? Tag::Famous95 : Tag::AdditionalNine;
    return r;
}

struct EnumerationBounds {
    std::size_t dim = 3;
    std::int64_t max_weight = 100;
    std::int64_t max_degree = 256;
    unsigned jobs = 1;
    unsigned long long visit_limit = 100'000'000ULL;
    /// false: classify every well-formed tuple by its full age spectrum
    /// instead of stopping at the second strict age-1 residue.
    bool prune = true;
};

namespace detail {

inline bool well_formed(std::span<const std::int64_t> ws) noexcept {
    for (std::size_t i = 0; i < ws.size(); ++i) {
        std::int64_t g = 0;
        for (std::size_t j = 0; j < ws.size() && g != 1; ++j)
            if (j != i) g = std::gcd(g, ws[j]);
        if (g != 1) return false;
    }
    return true;
}

struct SearchWorker {
    const EnumerationBounds& bounds;
    std::atomic<unsigned long long>& visits;
    std::vector<std::int64_t> current;
    std::vector<std::vector<std::int64_t>> found;

    void descend(std::size_t i, std::int64_t sum) {
        const std::size_t m = bounds.dim + 1;
        if (i == m) {
            if (visits.fetch_add(1, std::memory_order_relaxed) + 1 > bounds.visit_limit)
                throw ResourceError(bounds.visit_limit);
            if (!well_formed(current)) return;
            const bool canonical = bounds.prune
                                       ? is_canonical_fast(current, sum)
                                       : age_spectrum(make_weights(current)).counts.front() == 1;
            if (canonical) found.push_back(current);
            return;
        }
        const auto remaining = static_cast<std::int64_t>(m - i);
        for (std::int64_t w = current[i - 1]; w <= bounds.max_weight; ++w) {
            if (sum + remaining * w > bounds.max_degree) break;
            current[i] = w;
            descend(i + 1, sum + w);
        }
    }
};

} // namespace detail

/// All canonically ordered well-formed (dim+1)-tuples inside the bounds whose
/// weighted projective space has canonical singularities, sorted
/// lexicographically. Leading weights are dealt round-robin to `jobs` threads;
/// the merged result does not depend on the thread count.
inline std::vector<ClassificationRecord> enumerate_canonical(const EnumerationBounds& bounds) {
    if (bounds.dim < 2) throw Error(ErrorKind::Dimension, "enumeration needs dim >= 2");
    if (bounds.max_weight < 1 || bounds.max_degree < 1)
        throw Error(ErrorKind::Range, "enumeration bounds must be positive");

    const unsigned jobs = std::max(1U, bounds.jobs);
    std::atomic<unsigned long long> visits{0};
    std::vector<std::vector<std::vector<std::int64_t>>> partial(jobs);
    std::vector<std::exception_ptr> errors(jobs);

    auto run = [&](unsigned job) {
        try {
            detail::SearchWorker worker{bounds, visits, std::vector<std::int64_t>(bounds.dim + 1), {}};
            const auto m = static_cast<std::int64_t>(bounds.dim + 1);
            for (std::int64_t lead = 1 + job; lead <= bounds.max_weight; lead += jobs) {
                if (m * lead > bounds.max_degree) break;
                worker.current[0] = lead;
                worker.descend(1, lead);
            }
            partial[job] = std::move(worker.found);
        } catch (...) {
            errors[job] = std::current_exception();
        }
    };

    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(run, j);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<std::vector<std::int64_t>> tuples;
    for (auto& p : partial) tuples.insert(tuples.end(), p.begin(), p.end());
    std::sort(tuples.begin(), tuples.end());

    std::vector<ClassificationRecord> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) out.push_back(classify_weights(make_weights(t)));
    return out;
}

} // namespace wph
