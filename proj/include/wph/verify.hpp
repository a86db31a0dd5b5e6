#pragma once

// Cross-check suites behind `wph verify`: random well-formed tuples are pushed
// through the age, face-sum and parameter pipelines and compared; the tables
// suite regenerates both golden files.

#include "wph/classify.hpp"
#include "wph/ehrhart.hpp"
#include "wph/hyperg.hpp"
#include "wph/report.hpp"
#include "wph/toric.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <thread>

namespace wph {

enum class Suite { Ages, Ehrhart, Tables, All };

inline Suite parse_suite(const std::string& s) {
    if (s == "ages") return Suite::Ages;
    if (s == "ehrhart") return Suite::Ehrhart;
    if (s == "tables") return Suite::Tables;
    if (s == "all") return Suite::All;
    throw Error(ErrorKind::Parse, "unknown suite '" + s + "' (expected ages, ehrhart, tables or all)");
}

inline const char* to_string(Suite s) noexcept {
    switch (s) {
    case Suite::Ages: return "ages";
    case Suite::Ehrhart: return "ehrhart";
    case Suite::Tables: return "tables";
    case Suite::All: return "all";
    }
    return "?";
}

/// n uniform in {2,...,5}, n+1 weights uniform in [1,12], redrawn until well-formed.
inline std::vector<WeightTuple> sample_tuples(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(2, 5);
    std::uniform_int_distribution<std::int64_t> weight(1, 12);
    std::vector<WeightTuple> out;
    out.reserve(count);
    while (out.size() < count) {
        const auto n = static_cast<std::size_t>(dim(rng));
        std::vector<std::int64_t> ws(n + 1);
        for (;;) {
            for (auto& x : ws) x = weight(rng);
            if (detail::well_formed(ws)) break;
        }
        out.push_back(make_weights(ws));
    }
    return out;
}

/// The computations under test. Replaceable so a harness can plant a fault.
struct Pipelines {
    std::function<std::vector<std::int64_t>(const WeightTuple&)> ages = [](const WeightTuple& w) {
        return age_spectrum(w).counts;
    };
    std::function<std::int64_t(const WeightTuple&, std::int64_t)> age = [](const WeightTuple& w, std::int64_t k) {
        return age_of(w.weights(), w.degree(), k);
    };
    std::function<std::vector<std::int64_t>(const WeightTuple&, unsigned long long)> face_sum =
        [](const WeightTuple& w, unsigned long long limit) {
            return hodge_via_inclusion_exclusion(LatticeContext(w, limit));
        };
    std::function<std::vector<std::int64_t>(const WeightTuple&)> parameters = [](const WeightTuple& w) {
        return verify_proposition(w).from_parameters;
    };
};

struct VerifyOptions {
    Suite suite = Suite::All;
    std::size_t samples = 500;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    unsigned long long visit_limit = default_visit_limit;
    std::filesystem::path golden_dir;
    /// Add the canonical quadruples of the default enumeration to the sample.
    bool include_canonical = false;
    EnumerationBounds bounds{};
};

struct Mismatch {
    std::string check;
    std::vector<std::int64_t> weights;
    Json left;
    Json right;

    Json to_json() const { return {{"check", check}, {"weights", weights}, {"left", left}, {"right", right}}; }
};

namespace detail {

inline Json vec(const std::vector<std::int64_t>& v) { return Json(v); }

/// Age-side checks: ages vs parameters, rank vs operator degree, palindromy, pairing.
inline void check_ages(const WeightTuple& w, const Pipelines& p, std::vector<Mismatch>& out) {
    const auto& ws = w.weights();
    const auto counts = p.ages(w);
    const auto params = p.parameters(w);
    if (counts != params) out.push_back({"ages=parameters", ws, vec(counts), vec(params)});

    std::int64_t total = 0;
    for (auto c : counts) total += c;
    std::int64_t strict = 0;
    for (std::int64_t k = 1; k < w.degree(); ++k) {
        bool s = true;
        for (auto wi : ws) s = s && (k * wi) % w.degree() != 0;
        strict += s;
    }
    const auto op_degree = static_cast<std::int64_t>(operator_forms(w).reduced.degree());
    if (total != op_degree || total != strict)
        out.push_back({"rank", ws, Json{{"sum", total}}, Json{{"operator_degree", op_degree}, {"strict", strict}}});

    auto reversed = counts;
    std::reverse(reversed.begin(), reversed.end());
    if (counts != reversed) out.push_back({"palindromy", ws, vec(counts), vec(reversed)});

    const auto n1 = static_cast<std::int64_t>(w.size());
    for (std::int64_t k = 1; k < w.degree(); ++k) {
        bool s = true;
        for (auto wi : ws) s = s && (k * wi) % w.degree() != 0;
        if (!s) continue;
        const auto a = p.age(w, k), b = p.age(w, w.degree() - k);
        if (a + b != n1) {
            out.push_back({"pairing", ws, Json{{"k", k}, {"age", a}}, Json{{"k", w.degree() - k}, {"age", b}}});
            break;
        }
    }
}

/// Lattice-side checks: ages vs face sum, Reid-Tai.
inline void check_ehrhart(const WeightTuple& w, const Pipelines& p, unsigned long long limit,
                          std::vector<Mismatch>& out) {
    const auto& ws = w.weights();
    const auto counts = p.ages(w);
    const auto faces = p.face_sum(w, limit);
    if (counts != faces) out.push_back({"ages=face_sum", ws, vec(counts), vec(faces)});

    const LatticeContext ctx(w, limit);
    const auto inside = static_cast<std::int64_t>(interior_points(ctx, Polytope::Delta).size());
    const bool canonical = is_canonical(w).canonical;
    const std::int64_t a1 = counts.empty() ? 0 : counts.front();
    if (canonical != (inside == 1) || inside != a1)
        out.push_back({"reid_tai", ws, Json{{"canonical", canonical}, {"a1", a1}},
                       Json{{"interior_points", inside}}});
}

} // namespace detail

/// One line "w0,w1,..." per tuple; '#' lines and blanks ignored.
inline std::vector<std::vector<std::int64_t>> parse_table1(std::istream& in) {
    std::vector<std::vector<std::int64_t>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        out.push_back(detail::split_ints(line, lineno));
    }
    return out;
}

inline std::string serialize_table1(const std::vector<std::vector<std::int64_t>>& rows) {
    std::string s;
    for (const auto& r : rows) s += detail::join(r) + "\n";
    return s;
}

inline std::vector<std::vector<std::int64_t>> read_table1_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + file.string());
    return parse_table1(in);
}

inline std::vector<Table2Record> read_table2_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + file.string());
    return parse_table2(in);
}

/// Enumeration summary plus the additional nine, in the table1.expected format.
struct EnumerationSummary {
    std::vector<ClassificationRecord> records;
    std::int64_t canonical = 0;
    std::int64_t quasismooth = 0;
    std::int64_t additional = 0;
    std::vector<std::vector<std::int64_t>> additional_weights;

    std::string line() const {
        return std::to_string(canonical) + " canonical (" + std::to_string(quasismooth) + " quasismooth, " +
               std::to_string(additional) + " additional)";
    }
};

inline EnumerationSummary summarize(std::vector<ClassificationRecord> records) {
    EnumerationSummary s;
    s.records = std::move(records);
    for (const auto& r : s.records) {
        s.canonical += r.canonical;
        if (r.tag == Tag::Famous95) ++s.quasismooth;
        if (r.tag == Tag::AdditionalNine) {
            ++s.additional;
            s.additional_weights.push_back(r.weights.weights());
        }
    }
    return s;
}

inline Json table1_section(const EnumerationSummary& s, const std::vector<std::vector<std::int64_t>>& golden) {
    Json j;
    j["summary"] = s.line();
    j["canonical"] = s.canonical;
    j["quasismooth"] = s.quasismooth;
    j["additional"] = s.additional;
    j["computed"] = s.additional_weights;
    j["golden"] = golden;
    j["match"] = s.additional_weights == golden;
    return j;
}

inline Json table2_section(const std::vector<Table2RowReport>& rows) {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(to_json(r));
    return {{"rows", a}, {"match", true}};
}

/// Runs the selected suites. The report status is Mismatch if any check fails;
/// resource and input errors propagate as exceptions.
inline Report run_verify(const VerifyOptions& opt, const Pipelines& p = {}) {
    Report rep;
    rep.command = "verify";
    rep.input = {{"suite", to_string(opt.suite)}, {"samples", opt.samples}, {"seed", opt.seed}};
    rep.provenance = {{"visit_limit", opt.visit_limit}};

    const bool ages = opt.suite == Suite::Ages || opt.suite == Suite::All;
    const bool ehrhart = opt.suite == Suite::Ehrhart || opt.suite == Suite::All;
    const bool tables = opt.suite == Suite::Tables || opt.suite == Suite::All;
    bool failed = false;

    std::vector<WeightTuple> sample;
    if (ages || ehrhart) {
        sample = sample_tuples(opt.samples, opt.seed);
        if (opt.include_canonical) {
            auto b = opt.bounds;
            b.jobs = opt.jobs;
            b.visit_limit = opt.visit_limit;
            for (const auto& r : enumerate_canonical(b)) sample.push_back(r.weights);
        }
        // Per-tuple results land in fixed slots, so worker count cannot change the order.
        std::vector<std::vector<Mismatch>> found(sample.size());
        std::vector<std::exception_ptr> errors(sample.size());
        auto work = [&](std::size_t start, std::size_t step) {
            for (std::size_t i = start; i < sample.size(); i += step) {
                try {
                    if (ages) detail::check_ages(sample[i], p, found[i]);
                    if (ehrhart) detail::check_ehrhart(sample[i], p, opt.visit_limit, found[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        const unsigned jobs = std::max(1U, opt.jobs);
        if (jobs == 1) {
            work(0, 1);
        } else {
            std::vector<std::thread> ts;
            for (unsigned j = 0; j < jobs; ++j) ts.emplace_back(work, j, jobs);
            for (auto& t : ts) t.join();
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);

        Json mism = Json::array();
        std::map<std::string, std::int64_t> per_check;
        for (const auto& list : found)
            for (const auto& m : list) {
                ++per_check[m.check];
                if (mism.size() < 20) mism.push_back(m.to_json());
            }
        std::int64_t bad = 0;
        for (const auto& list : found) bad += !list.empty();
        Json checks = Json::array();
        if (ages) checks.insert(checks.end(), {"ages=parameters", "rank", "palindromy", "pairing"});
        if (ehrhart) checks.insert(checks.end(), {"ages=face_sum", "reid_tai"});
        rep.sections["sample"] = {{"tuples", sample.size()},
                                  {"random", opt.samples},
                                  {"canonical_quadruples", sample.size() - opt.samples},
                                  {"checks", checks},
                                  {"failing_tuples", bad},
                                  {"failures_by_check", per_check},
                                  {"mismatches", mism}};
        failed = failed || bad > 0;
    }

    if (tables) {
        auto b = opt.bounds;
        b.jobs = opt.jobs;
        b.visit_limit = opt.visit_limit;
        const auto summary = summarize(enumerate_canonical(b));
        const auto golden1 = read_table1_file(opt.golden_dir / "table1.expected");
        auto t1 = table1_section(summary, golden1);
        const bool totals = summary.canonical == 104 && summary.quasismooth == 95 && summary.additional == 9;
        t1["totals_match"] = totals;
        failed = failed || !totals || summary.additional_weights != golden1;
        rep.sections["table1"] = t1;

        try {
            const auto rows = validate_table2(read_table2_file(opt.golden_dir / "table2.expected"));
            auto t2 = table2_section(rows);
            // (1,5,6,8): section z_3 = 0 of the pencil is a genus-1 curve, action weights (0,5,1,6)
            bool spot = false;
            for (const auto& r : rows)
                if (r.weights == Exponents{1, 5, 6, 8})
                    spot = r.facet_genus.size() == 4 && r.facet_genus[3] == 1 &&
                           r.action_weights == Exponents{0, 5, 1, 6};
            t2["spot_check_1568"] = spot;
            failed = failed || !spot || rows.size() != 9;
            rep.sections["table2"] = t2;
        } catch (const MismatchError& e) {
            rep.sections["table2"] = {{"match", false},
                                      {"row", e.row()},
                                      {"column", e.column()},
                                      {"detail", e.what()}};
            failed = true;
        }
    }
    rep.status = failed ? Status::Mismatch : Status::Ok;
    return rep;
}

} // namespace wph
