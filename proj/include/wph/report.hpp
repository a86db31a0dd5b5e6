#pragma once

// Structured reports: JSON builders for every module's results, plus CSV and
// plain-text renderings of the same tree. Keys are sorted (nlohmann::json's
// default object type is an ordered map), rationals render as "p/q" strings and
// big integers as decimal strings, so a rendering is a pure function of the
// values it carries.

#include "wph/agecalc.hpp"
#include "wph/classify.hpp"
#include "wph/ehrhart.hpp"
#include "wph/hyperg.hpp"
#include "wph/toric.hpp"

#include "json.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace wph {

using Json = nlohmann::json;

inline constexpr const char* tool_version = "1.0.0";

enum class Status { Ok, Mismatch, ResourceLimit, InputError };

inline const char* to_string(Status s) noexcept {
    switch (s) {
    case Status::Ok: return "ok";
    case Status::Mismatch: return "mismatch";
    case Status::ResourceLimit: return "resource-limit";
    case Status::InputError: return "input-error";
    }
    return "?";
}

/// Process exit code for a status: 0 ok, 1 mismatch, 2 input error, 3 resource limit.
inline int exit_code(Status s) noexcept {
    switch (s) {
    case Status::Ok: return 0;
    case Status::Mismatch: return 1;
    case Status::InputError: return 2;
    case Status::ResourceLimit: return 3;
    }
    return 1;
}

struct Report {
    std::string command;
    Json input = Json::object();
    Json sections = Json::object();
    Json provenance = Json::object();
    Status status = Status::Ok;

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["input"] = input;
        j["sections"] = sections;
        Json prov = provenance;
        prov["tool"] = "wph";
        prov["version"] = tool_version;
        j["provenance"] = prov;
        j["status"] = to_string(status);
        return j;
    }
};

// ---------------------------------------------------------------------------
// Module payloads

inline Json rationals(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(render(q));
    return a;
}

inline Json rationals(const ParamMultiset& s) { return rationals(s.entries()); }

inline Json bigints(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline Json to_json(const BoxElement& b) {
    return {{"residue", b.residue}, {"rep", rationals(b.rep())}, {"age", b.age}, {"strict", b.strict}};
}

inline Json ages_section(const WeightTuple& w) {
    const auto s = age_spectrum(w);
    Json j;
    j["degree"] = w.degree();
    j["dim"] = w.dim();
    j["weights_canonical"] = w.weights();
    j["strict_residues"] = s.strict_residues;
    j["counts"] = s.counts;
    j["rank"] = s.rank;
    Json box = Json::array();
    for (std::int64_t k = 0; k < w.degree(); ++k) box.push_back(to_json(box_element(w, k)));
    j["box"] = box;
    return j;
}

inline Json lambda_section(const WeightTuple& w) {
    const auto v = lambda_value(w);
    return {{"numerator", v.numerator.str()}, {"denominator", v.denominator.str()}, {"reduced", render(v.reduced)}};
}

inline Json canonical_section(const WeightTuple& w) {
    const auto c = is_canonical(w);
    Json cert = Json::array();
    for (auto k : c.certificate) cert.push_back(to_json(box_element(w, k)));
    return {{"canonical", c.canonical}, {"certificate", cert}};
}

inline Json to_json(const OperatorForm& op) {
    Json left = Json::array(), right = Json::array();
    for (const auto& f : op.left) left.push_back({f.c, f.r});
    for (const auto& f : op.right) right.push_back({f.c, f.r});
    return {{"reduced", op.reduced},
            {"degree", op.degree()},
            {"left_scale", op.left_scale.str()},
            {"right_scale", op.right_scale.str()},
            {"left_factors", left},
            {"right_factors", right},
            {"expanded_left", bigints(op.expanded_left)},
            {"expanded_right", bigints(op.expanded_right)},
            {"factored", factored_text(op)},
            {"expanded", expanded_text(op)}};
}

inline Json to_json(const HodgeProfile& h) {
    return {{"alphas", rationals(h.alphas)}, {"betas", rationals(h.betas)},
            {"p_values", h.p_values},        {"p_plus", h.p_plus},
            {"p_minus", h.p_minus},          {"weight", h.weight},
            {"hodge", h.hodge},              {"conjectural", h.conjectural}};
}

inline Json hypergeometric_section(const WeightTuple& w) {
    const auto sets = build_parameter_sets(w);
    const auto ops = operator_forms(w);
    const auto prop = verify_proposition(w);
    Json j;
    j["A"] = rationals(sets.a);
    j["B"] = rationals(sets.b);
    j["common"] = rationals(ops.cancellation.common);
    j["H"] = to_json(ops.full);
    j["Hred"] = to_json(ops.reduced);
    j["profile"] = to_json(prop.profile);
    j["proposition"] = {{"holds", prop.holds},
                        {"from_parameters", prop.from_parameters},
                        {"from_ages", prop.from_ages}};
    return j;
}

inline Json ehrhart_section(const WeightTuple& w, unsigned long long limit) {
    const LatticeContext ctx(w, limit);
    const auto full = ehrhart_data(ctx, SimplexFace::full(w.size()));
    Json inside = Json::array(), dual = Json::array();
    for (const auto& p : interior_points(ctx, Polytope::Delta)) inside.push_back(rationals(p));
    const auto dual_pts = interior_points(ctx, Polytope::DualDelta);
    for (const auto& p : dual_pts) dual.push_back(rationals(p));
    Json j;
    j["hodge_inclusion_exclusion"] = hodge_via_inclusion_exclusion(ctx);
    j["strict_counts_full"] = full.strict_counts;
    j["phi_full"] = full.phis;
    j["interior_delta"] = inside;
    j["interior_dual"] = dual;
    j["dual_interior_flag"] = dual_pts.size() > 1;
    j["dual_lattice_points"] = dual_lattice_point_count(ctx);
    return j;
}

inline Json toric_section(const WeightTuple& w) {
    const auto row = table_row(w);
    const auto& q = row.presentation;
    Json j;
    j["ambient"] = q.b;
    j["d"] = q.d;
    j["u"] = q.u;
    j["group_order"] = q.group_order;
    j["invariant_factors"] = q.invariant_factors;
    j["action_weights"] = q.action_weights;
    j["f_exponents"] = row.f_exponents;
    j["omega_numerator"] = row.omega_numerator;
    if (w.dim() == 3) {
        Json g = Json::array();
        for (std::size_t i = 0; i < 4; ++i) g.push_back(facet_curve_genus(w, i));
        j["facet_genus"] = g;
    }
    return j;
}

inline Json to_json(const ClassificationRecord& r) {
    return {{"weights", r.weights.weights()},
            {"canonical", r.canonical},
            {"general_xd_well_formed", r.general_xd_well_formed},
            {"general_xd_quasismooth", r.general_xd_quasismooth},
            {"hodge", r.hodge.counts},
            {"tag", to_string(r.tag)}};
}

inline Json classification_section(const WeightTuple& w) {
    Json j = to_json(classify_weights(w));
    try {
        const auto qs = general_hypersurface_quasismooth(HypersurfaceSpec(w.canonical()));
        if (qs.witness) {
            Json subset = Json::array();
            for (std::size_t i = 0; i < w.size(); ++i)
                if ((*qs.witness >> i) & 1U) subset.push_back(i);
            j["quasismooth_witness"] = subset;
        }
    } catch (const Error&) {
    }
    return j;
}

inline Json to_json(const Table2RowReport& r) {
    return {{"weights", r.weights},
            {"ambient", r.regenerated.ambient},
            {"group_order", r.regenerated.group_order},
            {"invariant_factors", r.regenerated.invariant_factors},
            {"f_exponents", r.regenerated.f},
            {"omega_numerator", r.regenerated.omega},
            {"fibration", r.regenerated.fibration},
            {"fibration_level", render(r.fibration_level)},
            {"fibration_witness", r.fibration_witness},
            {"action_weights", r.action_weights},
            {"facet_genus", r.facet_genus}};
}

// ---------------------------------------------------------------------------
// Renderings

inline std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        if (j.empty()) out.emplace_back(path, "{}");
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array()) {
        if (j.empty()) out.emplace_back(path, "[]");
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out.emplace_back(path, j.get<std::string>());
    } else {
        out.emplace_back(path, j.dump());
    }
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

} // namespace detail

/// Leaf paths of the report, in key order, with scalar values as text.
inline std::vector<std::pair<std::string, std::string>> flatten(const Json& j) {
    std::vector<std::pair<std::string, std::string>> out;
    detail::flatten(j, "", out);
    return out;
}

/// RFC 4180: header "key,value", CRLF line ends, one row per leaf.
inline std::string render_csv(const Json& j) {
    std::string s = "key,value\r\n";
    for (const auto& [k, v] : flatten(j)) s += detail::csv_field(k) + "," + detail::csv_field(v) + "\r\n";
    return s;
}

/// Inverse of render_csv's row encoding.
inline std::vector<std::pair<std::string, std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows(1);
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            rows.back().push_back(std::move(field));
            field.clear();
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            rows.back().push_back(std::move(field));
            field.clear();
            rows.emplace_back();
            ++i;
        } else {
            field += c;
        }
    }
    if (!field.empty() || !rows.back().empty()) rows.back().push_back(std::move(field));
    if (rows.back().empty()) rows.pop_back();
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() == 2) out.emplace_back(rows[i][0], rows[i][1]);
        else throw Error(ErrorKind::Parse, "CSV row " + std::to_string(i) + " does not have two fields");
    return out;
}

/// Indented "key: value" text; short scalar arrays stay on one line.
inline std::string render_text(const Json& j) {
    std::ostringstream os;
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat_array = [](const Json& v) {
        if (!v.is_array()) return false;
        for (const auto& x : v)
            if (x.is_structured() && !(x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) {
                                         return y.is_primitive();
                                     })))
                return false;
        return true;
    };
    auto inline_array = [&](const Json& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            if (v[i].is_array()) {
                s += "(";
                for (std::size_t k = 0; k < v[i].size(); ++k) s += (k ? ", " : "") + scalar(v[i][k]);
                s += ")";
            } else {
                s += scalar(v[i]);
            }
        }
        return s + ")";
    };
    auto rec = [&](auto&& self, const Json& v, int indent) -> void {
        const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
        for (auto it = v.begin(); it != v.end(); ++it) {
            const auto& x = it.value();
            const std::string key = v.is_object() ? it.key() : "-";
            if (x.is_object()) {
                os << pad << key << ":\n";
                self(self, x, indent + 1);
            } else if (flat_array(x)) {
                os << pad << key << ": " << inline_array(x) << "\n";
            } else if (x.is_array()) {
                os << pad << key << ":\n";
                for (const auto& item : x) {
                    if (item.is_object()) {
                        os << pad << "  -\n";
                        self(self, item, indent + 2);
                    } else {
                        os << pad << "  - " << (item.is_array() ? inline_array(item) : scalar(item)) << "\n";
                    }
                }
            } else {
                os << pad << key << ": " << scalar(x) << "\n";
            }
        }
    };
    rec(rec, j, 0);
    return os.str();
}

enum class Format { Json, Csv, Text };

inline std::string render(const Json& j, Format f) {
    switch (f) {
    case Format::Json: return render_json(j);
    case Format::Csv: return render_csv(j);
    case Format::Text: return render_text(j);
    }
    return render_json(j);
}

} // namespace wph
