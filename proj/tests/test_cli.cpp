#include "catch_amalgamated.hpp"

#include "wph/cli.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>

using namespace wph;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "wph");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliConfig cfg;
    cfg.golden_dir = WPH_DATA_DIR;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, cfg);
    return {code, out.str(), err.str()};
}

/// Runs a built binary through the shell; returns the exit status and stdout.
Run shell(const std::string& cmd) {
    std::string out;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

} // namespace

TEST_CASE("analyze") {
    auto r = cli({"analyze", "1", "5", "6", "8", "--json"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["sections"]["ages"]["counts"] == Json({1, 10, 1}));
    CHECK(j["sections"]["canonical"]["canonical"] == true);
    CHECK(j["sections"]["toric"]["group_order"] == 10);

    r = cli({"analyze", "1", "1", "3", "--text"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("canonical: false") != std::string::npos);
    CHECK(r.out.find("residue: 2") != std::string::npos);

    r = cli({"analyze", "2", "2", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("WellFormednessError") != std::string::npos);

    r = cli({"analyze", "2", "2", "3", "--json"});
    CHECK(r.code == 2);
    CHECK(Json::parse(r.out)["status"] == "input-error");

    CHECK(cli({"analyze"}).code == 2);
    CHECK(cli({"analyze", "1", "x"}).code == 2);
    CHECK(cli({"analyze", "1", "1", "--json", "--csv"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("output formats agree") {
    const auto js = cli({"analyze", "1", "5", "6", "8", "--json"});
    const auto cs = cli({"analyze", "1", "5", "6", "8", "--csv"});
    REQUIRE(js.code == 0);
    REQUIRE(cs.code == 0);
    CHECK(parse_csv(cs.out) == flatten(Json::parse(js.out)));
    CHECK(render_json(Json::parse(js.out)) == js.out);

    const auto path = std::filesystem::temp_directory_path() / "wph_cli_output.json";
    const auto f = cli({"analyze", "1", "5", "6", "8", "--json", "--output", path.string()});
    CHECK(f.code == 0);
    CHECK(f.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == js.out);
    std::filesystem::remove(path);
}

TEST_CASE("enumerate") {
    auto r = cli({"enumerate", "--dim", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.size() > 45);
    CHECK(r.out.substr(r.out.size() - 45) == "104 canonical (95 quasismooth, 9 additional)\n");

    const auto one = cli({"enumerate", "--dim", "3", "--max-weight", "8", "--json"});
    const auto three = cli({"enumerate", "--dim", "3", "--max-weight", "8", "--json", "--jobs", "3"});
    CHECK(one.code == 0);
    CHECK(one.out == three.out);

    r = cli({"enumerate", "--dim", "2", "--json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["sections"]["summary"]["canonical"] > 0);

    r = cli({"enumerate", "--dim", "3", "--limit", "1000"});
    CHECK(r.code == 3);
    r = cli({"enumerate", "--dim", "1"});
    CHECK(r.code == 2);
}

TEST_CASE("hypergeom") {
    auto r = cli({"hypergeom", "1", "1", "3", "--json"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out)["sections"]["hypergeometric"];
    CHECK(j["profile"]["p_values"] == Json({2, 2, 1, 1}));
    CHECK(j["profile"]["hodge"] == Json({2, 2}));
    CHECK(j["proposition"]["holds"] == true);

    r = cli({"hypergeom", "--alpha", "0,0,0", "--beta", "1/4,1/2,3/4", "--json"});
    REQUIRE(r.code == 0);
    j = Json::parse(r.out)["sections"]["profile"];
    CHECK(j["weight"] == 2);
    CHECK(j["hodge"] == Json({1, 1, 1}));
    CHECK(j["conjectural"] == true);

    r = cli({"hypergeom", "--alpha", "0", "--beta", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("OverlapError") != std::string::npos);
    CHECK(cli({"hypergeom", "--alpha", "1/3", "--beta", "1/2"}).code == 2);
    CHECK(cli({"hypergeom", "--alpha", "0"}).code == 2);
    CHECK(cli({"hypergeom", "--alpha", "abc", "--beta", "1/2"}).code == 2);
    CHECK(cli({"hypergeom"}).code == 2);
}

TEST_CASE("verify and tables") {
    auto r = cli({"verify", "--suite", "tables", "--json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["status"] == "ok");

    r = cli({"verify", "--suite", "ehrhart", "--samples", "200", "--seed", "7", "--json"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["sections"]["sample"]["tuples"] == 200);
    CHECK(j["sections"]["sample"]["failing_tuples"] == 0);

    CHECK(cli({"verify", "--suite", "nonsense"}).code == 2);

    r = cli({"table1"});
    CHECK(r.code == 0);
    std::ifstream t1(std::filesystem::path(WPH_DATA_DIR) / "table1.expected", std::ios::binary);
    std::stringstream s1;
    s1 << t1.rdbuf();
    CHECK(r.out == s1.str());

    r = cli({"table2"});
    CHECK(r.code == 0);
    std::ifstream t2(std::filesystem::path(WPH_DATA_DIR) / "table2.expected", std::ios::binary);
    std::stringstream s2;
    s2 << t2.rdbuf();
    CHECK(r.out == s2.str());
}

TEST_CASE("binaries: exit codes, environment cap, planted fault") {
    const std::string bin = WPH_BIN;
    CHECK(shell(bin + " analyze 1 5 6 8 --json").code == 0);
    CHECK(shell(bin + " analyze 2 2 3").code == 2);
    CHECK(shell(bin + " hypergeom --alpha 0 --beta 0").code == 2);
    CHECK(shell("WPH_RESOURCE_LIMIT=1000 " + bin + " enumerate --dim 3").code == 3);
    CHECK(shell("WPH_RESOURCE_LIMIT=1000 " + bin + " enumerate --dim 3 --limit 100000000").code == 0);
    CHECK(shell("WPH_RESOURCE_LIMIT=bogus " + bin + " enumerate --dim 3").code == 2);

    const auto bad = shell(std::string(WPH_FAULT_BIN) + " verify --suite all --samples 50 --json");
    CHECK(bad.code == 1);
    const auto j = Json::parse(bad.out);
    CHECK(j["status"] == "mismatch");
    REQUIRE_FALSE(j["sections"]["sample"]["mismatches"].empty());
    CHECK(j["sections"]["sample"]["mismatches"][0]["weights"].is_array());

    const auto good = shell(bin + " verify --suite all --samples 50 --json");
    CHECK(good.code == 0);
}
