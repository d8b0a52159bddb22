#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "invforge/cli.hpp"
#include "invforge/construct.hpp"
#include "support.hpp"

using namespace invforge;
namespace cli = invforge::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("invforge_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("verify exit codes")
{
    const auto ok = run({"verify", "--p", "3", "--n", "1"});
    CHECK(ok.code == cli::kExitOk);
    CHECK(ok.out.find("-> PASS") != std::string::npos);
    CHECK(ok.out.find("[FAIL]") == std::string::npos);

    CHECK(run({"verify", "--p", "3", "--n", "2"}).code == cli::kExitOk);

    const auto two = run({"verify", "--p", "2", "--n", "1"});
    CHECK(two.code == cli::kExitConfig);
    CHECK(two.err.find("characteristic 2 unsupported") != std::string::npos);

    CHECK(run({"verify", "--p", "4"}).code == cli::kExitConfig);
    CHECK(run({"verify", "--p", "3", "--n", "5"}).code == cli::kExitConfig);
    CHECK(run({"verify", "--p", "3", "--checks", "nonsense"}).code == cli::kExitConfig);
    CHECK(run({"verify", "--p", "3", "--format", "xml"}).code == cli::kExitConfig);
    CHECK(run({"verify"}).code == cli::kExitConfig);
    CHECK(run({"frobnicate", "--p", "3"}).code == cli::kExitConfig);
    CHECK(run({}).code == cli::kExitConfig);
}

TEST_CASE("every check passes in a verification run")
{
    for (const auto q : {3u, 5u, 7u}) {
        cli::RunConfig config;
        config.p = q;
        const auto report = cli::run_verification(config);
        CHECK(report.pass());
        std::set<std::string> groups;
        for (const auto& c : report.checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
            CHECK_FALSE(c.paper_anchor.empty());
            groups.insert(c.name.substr(0, c.name.find('.')));
        }
        for (const auto& name : cli::kAllChecks) CHECK(groups.count(name) == 1);
        CHECK(groups.count("induced-action") == 1);
    }
}

TEST_CASE("checks run in a fixed order regardless of the requested order")
{
    cli::RunConfig a, b;
    a.checks = {"phi", "invariance"};
    b.checks = {"invariance", "phi"};
    const auto ra = cli::run_verification(a);
    const auto rb = cli::run_verification(b);
    REQUIRE(ra.checks.size() == rb.checks.size());
    for (std::size_t i = 0; i < ra.checks.size(); ++i) CHECK(ra.checks[i].name == rb.checks[i].name);
}

TEST_CASE("JSON reports are deterministic apart from timing")
{
    auto strip = [](const std::string& s) {
        auto j = nlohmann::json::parse(s);
        CHECK(j.contains("elapsed_ms"));
        j.erase("elapsed_ms");
        return j.dump();
    };
    const auto r1 = run({"verify", "--p", "5", "--format", "json"});
    const auto r2 = run({"verify", "--p", "5", "--format", "json"});
    REQUIRE(r1.code == 0);
    CHECK(strip(r1.out) == strip(r2.out));

    const auto j = nlohmann::json::parse(r1.out);
    CHECK(j["config"]["p"] == 5);
    CHECK(j["config"]["n"] == 1);
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("paper_anchor"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("detail"));
    }

    const auto t1 = run({"phi", "--p", "5"});
    const auto t2 = run({"phi", "--p", "5"});
    CHECK(t1.out == t2.out);
}

TEST_CASE("phi command")
{
    const auto j3 = run({"phi", "--p", "3", "--n", "1", "--format", "json"});
    REQUIRE(j3.code == 0);
    const auto e3 = Expression::from_json(Field::make(3, 1), nlohmann::json::parse(j3.out));
    CHECK_FALSE(e3.is_zero());
    CHECK_FALSE(e3.uses_var(2));

    const auto t5 = run({"phi", "--p", "5", "--n", "1"});
    CHECK(t5.code == 0);
    CHECK(t5.out.find("Delta") != std::string::npos);

    const auto j7 = run({"phi", "--p", "7", "--format", "json"});
    REQUIRE(j7.code == 0);
    CHECK_FALSE(Expression::from_json(Field::make(7, 1), nlohmann::json::parse(j7.out)).uses_var(2));
}

TEST_CASE("hilbert command")
{
    const auto h = run({"hilbert", "--p", "3", "--n", "1", "--max-degree", "12"});
    CHECK(h.code == 0);
    std::size_t rows = 0, yes = 0;
    std::istringstream lines(h.out);
    for (std::string line; std::getline(lines, line);) {
        if (line.find(" | ") != std::string::npos && line.find("degree") == std::string::npos) {
            ++rows;
            if (line.find("yes") != std::string::npos) ++yes;
        }
    }
    CHECK(rows == 26);  // 13 rows for each group
    CHECK(yes == rows);

    const auto sl = run({"hilbert", "--p", "3", "--max-degree", "12", "--group", "SL2", "--format", "json"});
    CHECK(sl.code == 0);
    const auto j = nlohmann::json::parse(sl.out);
    REQUIRE(j["tables"].size() == 1);
    CHECK(j["tables"][0]["rows"].size() == 13);

    const auto zero = run({"hilbert", "--p", "3", "--max-degree", "0", "--group", "P"});
    CHECK(zero.code == 0);

    const auto big = run({"hilbert", "--p", "7", "--n", "1", "--max-degree", "500"});
    CHECK(big.code == cli::kExitConfig);
    CHECK(big.err.find("budget") != std::string::npos);
}

TEST_CASE("export writes every named invariant")
{
    for (const std::string format : {"json", "text"}) {
        const auto dir = scratch_dir(format);
        const auto r = run({"export", "--p", "3", "--n", "1", "--format", format, "--out", dir.string()});
        REQUIRE(r.code == 0);
        std::set<std::string> files;
        for (const auto& e : std::filesystem::directory_iterator(dir)) files.insert(e.path().filename().string());
        const std::string ext = format == "json" ? ".json" : ".txt";
        std::set<std::string> expected;
        for (const auto* n : {"Delta", "beta", "gamma0", "Gamma", "B", "J", "Phi"}) expected.insert(n + ext);
        CHECK(files == expected);

        const auto F = Field::make(3, 1);
        const auto inv = build(F);
        std::ifstream in(dir / ("B" + ext));
        std::stringstream buf;
        buf << in.rdbuf();
        if (format == "json") {
            CHECK(poly_from_json(F, nlohmann::json::parse(buf.str())) == inv.B);
        } else {
            CHECK(parse_poly(F, buf.str()) == inv.B);
        }
        std::filesystem::remove_all(dir);
    }
}

TEST_CASE("report written to --out")
{
    const auto dir = scratch_dir("report");
    std::filesystem::create_directories(dir);
    const auto path = (dir / "report.json").string();
    const auto r = run({"verify", "--p", "3", "--checks", "p-relation", "--format", "json", "--out", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    const auto j = nlohmann::json::parse(in);
    CHECK(j["checks"].size() > 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("field cap override warns")
{
    ::setenv("INVFORGE_MAX_Q", "100", 1);
    const auto r = run({"verify", "--p", "3", "--checks", "p-relation"});
    ::unsetenv("INVFORGE_MAX_Q");
    CHECK(r.code == 0);
    CHECK(r.err.find("WARNING") != std::string::npos);
}
