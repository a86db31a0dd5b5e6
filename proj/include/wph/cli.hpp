#pragma once

// Command-line front end. run_cli() is the whole program minus main(), so tests
// can drive it in-process with captured streams.

#include "wph/report.hpp"
#include "wph/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace wph {

inline constexpr const char* resource_env = "WPH_RESOURCE_LIMIT";

struct CliConfig {
    std::filesystem::path golden_dir;
    Pipelines pipelines{};
};

namespace detail {

inline unsigned long long env_limit() {
    const char* v = std::getenv(resource_env);
    if (!v || !*v) return default_visit_limit;
    try {
        std::size_t used = 0;
        const auto x = std::stoull(v, &used);
        if (used == std::string(v).size() && x > 0) return x;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::Parse, std::string(resource_env) + " must be a positive integer, got '" + v + "'");
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rational q;
        if (!parse_rational(item, q)) throw Error(ErrorKind::Parse, "not a rational number: '" + item + "'");
        out.push_back(q);
    }
    return out;
}

inline std::string enumerate_text(const EnumerationSummary& s) {
    std::string out;
    for (const auto& r : s.records) {
        std::string h;
        for (std::size_t i = 0; i < r.hodge.counts.size(); ++i)
            h += (i ? "," : "") + std::to_string(r.hodge.counts[i]);
        out += detail::join(r.weights.weights()) + "  " + to_string(r.tag) + "  a=(" + h + ")\n";
    }
    return out + s.line() + "\n";
}

} // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   const CliConfig& cfg = {}) {
    CLI::App app{"Weighted projective spaces: ages, hypergeometric data, lattice counts and tables", "wph"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false, as_csv = false, as_text = false;
    std::string output_path;
    std::optional<unsigned long long> limit_flag;
    unsigned jobs = 1;
    auto* fmt = app.add_option_group("format");
    fmt->add_flag("--json", as_json, "JSON report");
    fmt->add_flag("--csv", as_csv, "CSV report (key,value rows)");
    fmt->add_flag("--text", as_text, "plain text (default)");
    fmt->require_option(0, 1);
    app.add_option("--output,-o", output_path, "write the report to a file instead of stdout");
    app.add_option("--limit", limit_flag, std::string("resource cap in candidate visits (default: $") +
                                              resource_env + " or 1e8)")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs,-j", jobs, "worker threads")->check(CLI::Range(1U, 256U));

    std::vector<std::int64_t> weights;
    auto* analyze = app.add_subcommand("analyze", "full report for one weight tuple");
    analyze->add_option("weights", weights, "weights w_0 ... w_n")->required();

    EnumerationBounds bounds;
    auto* enumerate = app.add_subcommand("enumerate", "canonical weighted projective spaces within bounds");
    enumerate->add_option("--dim", bounds.dim, "dimension n")->capture_default_str();
    enumerate->add_option("--max-weight", bounds.max_weight)->capture_default_str();
    enumerate->add_option("--max-degree", bounds.max_degree)->capture_default_str();

    std::vector<std::int64_t> hw;
    std::string alpha_text, beta_text;
    auto* hypergeom = app.add_subcommand("hypergeom", "p-profile and Hodge vector of a parameter pair");
    hypergeom->add_option("weights", hw, "weights (alternative to --alpha/--beta)");
    auto* alpha_opt = hypergeom->add_option("--alpha", alpha_text, "comma-separated rationals in [0,1)");
    auto* beta_opt = hypergeom->add_option("--beta", beta_text, "comma-separated rationals in [0,1)");
    alpha_opt->needs(beta_opt);
    beta_opt->needs(alpha_opt);

    VerifyOptions vopt;
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "cross-check suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"ages", "ehrhart", "tables", "all"}))->capture_default_str();
    verify->add_option("--samples", vopt.samples)->capture_default_str();
    verify->add_option("--seed", vopt.seed)->capture_default_str();
    verify->add_flag("--with-canonical", vopt.include_canonical, "add the canonical quadruples to the sample");

    auto* table1 = app.add_subcommand("table1", "regenerate the additional-nine table");
    auto* table2 = app.add_subcommand("table2", "regenerate the elliptic-fibration table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(Status::InputError);
    }

    const Format format = as_json ? Format::Json : as_csv ? Format::Csv : Format::Text;
    Report rep;
    std::optional<std::string> text_override;
    auto emit = [&](const std::string& body) {
        if (output_path.empty()) {
            out << body;
            return true;
        }
        std::ofstream f(output_path, std::ios::binary);
        f << body;
        if (!f) {
            err << "error: cannot write " << output_path << "\n";
            return false;
        }
        return true;
    };

    try {
        const unsigned long long limit = limit_flag ? *limit_flag : detail::env_limit();
        rep.provenance = {{"visit_limit", limit}};

        if (*analyze) {
            const auto w = make_weights(weights);
            rep.command = "analyze";
            rep.input = {{"weights", w.input_order()}};
            rep.sections["ages"] = ages_section(w);
            rep.sections["canonical"] = canonical_section(w);
            rep.sections["lambda"] = lambda_section(w);
            rep.sections["hypergeometric"] = hypergeometric_section(w);
            rep.sections["ehrhart"] = ehrhart_section(w, limit);
            rep.sections["toric"] = toric_section(w);
            rep.sections["classification"] = classification_section(w);
        } else if (*enumerate) {
            bounds.jobs = jobs;
            bounds.visit_limit = limit;
            const auto s = summarize(enumerate_canonical(bounds));
            rep.command = "enumerate";
            rep.input = {{"dim", bounds.dim}, {"max_weight", bounds.max_weight}, {"max_degree", bounds.max_degree}};
            Json recs = Json::array();
            for (const auto& r : s.records) recs.push_back(to_json(r));
            rep.sections["records"] = recs;
            rep.sections["summary"] = {{"canonical", s.canonical},
                                       {"quasismooth", s.quasismooth},
                                       {"additional", s.additional},
                                       {"line", s.line()}};
            text_override = detail::enumerate_text(s);
        } else if (*hypergeom) {
            rep.command = "hypergeom";
            if (!hw.empty()) {
                const auto w = make_weights(hw);
                rep.input = {{"weights", w.input_order()}};
                rep.sections["hypergeometric"] = hypergeometric_section(w);
            } else if (!alpha_opt->empty()) {
                const ParamMultiset a(detail::parse_rational_list(alpha_text));
                const ParamMultiset b(detail::parse_rational_list(beta_text));
                rep.input = {{"alpha", rationals(a)}, {"beta", rationals(b)}};
                rep.sections["profile"] = to_json(conjecture_hodge(a, b));
            } else {
                throw Error(ErrorKind::EmptyInput, "hypergeom needs weights or --alpha/--beta");
            }
        } else if (*verify) {
            vopt.suite = parse_suite(suite);
            vopt.jobs = jobs;
            vopt.visit_limit = limit;
            vopt.golden_dir = cfg.golden_dir;
            rep = run_verify(vopt, cfg.pipelines);
        } else if (*table1) {
            EnumerationBounds b;
            b.jobs = jobs;
            b.visit_limit = limit;
            const auto s = summarize(enumerate_canonical(b));
            const auto golden = read_table1_file(cfg.golden_dir / "table1.expected");
            rep.command = "table1";
            rep.sections["table1"] = table1_section(s, golden);
            if (s.additional_weights != golden) rep.status = Status::Mismatch;
            text_override = serialize_table1(s.additional_weights);
        } else if (*table2) {
            const auto golden = read_table2_file(cfg.golden_dir / "table2.expected");
            const auto rows = validate_table2(golden);
            rep.command = "table2";
            rep.sections["table2"] = table2_section(rows);
            std::vector<Table2Record> regen;
            for (const auto& r : rows) regen.push_back(r.regenerated);
            text_override = serialize_table2(regen);
        }
    } catch (const ResourceError& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        rep.status = Status::ResourceLimit;
        rep.sections["error"] = {{"kind", e.name()}, {"message", e.what()}};
        if (format != Format::Text) emit(render(rep.to_json(), format));
        return exit_code(rep.status);
    } catch (const MismatchError& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        rep.status = Status::Mismatch;
        rep.sections["error"] = {{"kind", e.name()}, {"message", e.what()}, {"row", e.row()}, {"column", e.column()}};
        if (format != Format::Text) emit(render(rep.to_json(), format));
        return exit_code(rep.status);
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        rep.status = Status::InputError;
        rep.sections["error"] = {{"kind", e.name()}, {"message", e.what()}};
        if (format != Format::Text) emit(render(rep.to_json(), format));
        return exit_code(rep.status);
    }

    const std::string body =
        format == Format::Text && text_override ? *text_override : render(rep.to_json(), format);
    if (!emit(body)) return exit_code(Status::InputError);
    if (rep.status == Status::Mismatch && format == Format::Text && text_override)
        err << "error: regenerated table differs from the golden file\n";
    return exit_code(rep.status);
}

} // namespace wph
