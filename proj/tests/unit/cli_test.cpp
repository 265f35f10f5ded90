#include <zfcube_cli.hpp>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using nlohmann::json;

namespace {
    struct Result {
        int code;
        std::string out, err;

        auto parsed() const -> json { return json::parse(out); }

        auto manifest() const -> json
        {
            auto start = err.rfind('\n', err.size() - 2);
            return json::parse(err.substr(start == std::string::npos ? 0 : start + 1));
        }
    };

    auto run(std::vector<std::string> args, const std::string & input = "") -> Result
    {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = zfcube::cli::run(args, in, out, err);
        return {code, out.str(), err.str()};
    }

    auto build(const std::string & kind, int n) -> std::string
    {
        auto r = run({"build", kind, "-n", std::to_string(n)});
        EXPECT_EQ(r.code, 0) << r.err;
        return r.out;
    }

    class TempFile {
      public:
        explicit TempFile(const std::string & contents) :
            path_(std::filesystem::temp_directory_path() / ("zfcube_cli_test_" + std::to_string(counter_++) + ".json"))
        {
            std::ofstream(path_) << contents;
        }
        ~TempFile() { std::filesystem::remove(path_); }
        auto path() const -> std::string { return path_.string(); }

      private:
        std::filesystem::path path_;
        static inline int counter_ = 0;
    };
}

TEST(CliBuild, Hypercube)
{
    auto r = run({"build", "hypercube", "-n", "3"});
    ASSERT_EQ(r.code, 0);
    auto j = r.parsed();
    EXPECT_EQ(j["vertices"].size(), 8U);
    EXPECT_EQ(j["edges"].size(), 12U);
    EXPECT_EQ(j["dimension"], 3);
}

TEST(CliBuild, MinorityHasArcsAndAnnotations)
{
    auto j = json::parse(build("minority", 4));
    EXPECT_EQ(j["arcs"].size(), 9U);
    EXPECT_EQ(j["bridge_arc"], json({"0110", "0111"}));
    EXPECT_EQ(j["twisted_edges"].size(), 2U);
}

TEST(CliBuild, Errors)
{
    EXPECT_EQ(run({"build", "minority", "-n", "2"}).code, 2);
    EXPECT_EQ(run({"build", "hypercube"}).code, 2);
    EXPECT_EQ(run({"build", "hypercube", "-n", "40"}).code, 2);
    EXPECT_EQ(run({"build", "cube", "-n", "3"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    TempFile bad(R"({"levels":[[0],[0,0]]})");
    EXPECT_EQ(run({"build", "twisted", "--spec", bad.path()}).code, 2);
    EXPECT_EQ(run({"build", "twisted", "--spec", "/nonexistent/spec.json"}).code, 2);
}

TEST(CliBuild, TwistedFromSpec)
{
    TempFile spec(R"({"levels":[[0],[0,1],[1,0,2,3]]})");
    auto r = run({"build", "twisted", "--spec", spec.path()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.parsed()["twisted_edges"].size(), 2U);
    auto m = r.manifest();
    EXPECT_EQ(m["inputs"][spec.path()].get<std::string>().rfind("sha256:", 0), 0U);
}

TEST(CliVerify, ArcsOnLargeMinorityCube)
{
    auto r = run({"verify", "--input", "-", "--mode", "arcs"}, build("minority", 10));
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.parsed();
    EXPECT_EQ(j["result"], "pass");
    EXPECT_EQ(j["executed"], 639);
    EXPECT_EQ(j["arcs"], 639);
}

TEST(CliVerify, TwistNoneOnMinorityFour)
{
    auto r = run({"verify", "-i", "-", "--mode", "twist"}, build("minority", 4));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.parsed()["twist"], "none");
    EXPECT_EQ(r.parsed()["detector"], "exhaustive");

    auto big = run({"verify", "-i", "-", "--mode", "twist"}, build("minority", 8));
    EXPECT_EQ(big.code, 0);
    EXPECT_EQ(big.parsed()["detector"], "walk");
    EXPECT_EQ(run({"verify", "-i", "-", "--mode", "twist", "--detector", "exhaustive"}, build("minority", 8)).code, 2);
}

TEST(CliVerify, TwistFound)
{
    auto doc = R"({"dimension":null,"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["a","d"]],"arcs":[["a","b"],["c","d"]]})";
    auto r = run({"verify", "-i", "-", "--mode", "twist"}, doc);
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.parsed()["twist"], json({"a", "b", "c", "d"}));
    auto arcs = run({"verify", "-i", "-", "--mode", "arcs"}, doc);
    EXPECT_EQ(arcs.code, 1);
    EXPECT_EQ(arcs.parsed()["executed"], 0);
}

TEST(CliVerify, SetOnCube)
{
    auto r = run({"verify", "-i", "-", "--mode", "set", "--set", "000"}, build("hypercube", 3));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.parsed()["unforced"], 7);
    EXPECT_EQ(r.parsed()["result"], "fail");

    auto ok = run({"verify", "-i", "-", "--mode", "set", "--set", "000,010,001,011"}, build("hypercube", 3));
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.parsed()["unforced"], 0);
}

TEST(CliVerify, MissingPayloads)
{
    EXPECT_EQ(run({"verify", "-i", "-", "--mode", "set"}, build("hypercube", 3)).code, 2);
    EXPECT_EQ(run({"verify", "-i", "-", "--mode", "arcs"}, build("hypercube", 3)).code, 2);
    EXPECT_EQ(run({"verify", "-i", "-", "--mode", "set", "--set", "999"}, build("hypercube", 3)).code, 2);
    EXPECT_EQ(run({"verify", "-i", "-", "--mode", "set"}, "{not json").code, 2);
}

TEST(CliSolve, Values)
{
    auto m4 = run({"solve", "--input", "-"}, build("minority", 4));
    ASSERT_EQ(m4.code, 0) << m4.err;
    auto j = m4.parsed();
    EXPECT_EQ(j["z"], 7);
    EXPECT_EQ(j["status"], "exact");
    EXPECT_EQ(j["bounds"], json({7, 7}));
    EXPECT_EQ(j["witness"].size(), 7U);

    EXPECT_EQ(run({"solve", "-i", "-"}, build("hypercube", 2)).parsed()["z"], 2);
}

TEST(CliSolve, BudgetAndGuards)
{
    auto r = run({"solve", "-i", "-", "--budget-subsets", "10"}, build("minority", 4));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.parsed()["status"], "inconclusive");
    EXPECT_TRUE(r.parsed()["z"].is_null());

    EXPECT_EQ(run({"solve", "-i", "-"}, build("minority", 6)).code, 2);
    auto large = run({"solve", "-i", "-", "--allow-large", "--budget-subsets", "1000"}, build("minority", 6));
    EXPECT_EQ(large.code, 0);
    auto bounds = large.parsed()["bounds"];
    EXPECT_LE(bounds[1].get<int>(), 32);
    EXPECT_EQ(run({"solve", "-i", "-", "--workers", "0"}, build("hypercube", 2)).code, 2);
}

TEST(CliSolve, OutputIndependentOfWorkers)
{
    auto doc = build("minority", 4);
    auto one = run({"solve", "-i", "-", "--workers", "1"}, doc);
    auto four = run({"solve", "-i", "-", "--workers", "4"}, doc);
    EXPECT_EQ(one.out, four.out);
}

TEST(CliExport, DotHasTwoRedEdges)
{
    auto r = run({"export", "-i", "-", "--dot"}, build("minority", 4));
    ASSERT_EQ(r.code, 0);
    std::regex red("color=red");
    EXPECT_EQ(std::distance(std::sregex_iterator(r.out.begin(), r.out.end(), red), std::sregex_iterator()), 2);
    EXPECT_EQ(r.out.rfind("digraph", 0), 0U);
}

TEST(CliExport, JsonIsIdentity)
{
    auto doc = build("minority", 5);
    auto r = run({"export", "-i", "-", "--format", "json"}, doc);
    EXPECT_EQ(r.out, doc);
    EXPECT_EQ(run({"export", "-i", "-", "--dot", "--json"}, doc).code, 2);
}

TEST(CliDeterminism, IdenticalInvocationsGiveIdenticalBytes)
{
    for (auto & args : std::vector<std::vector<std::string>>{
             {"build", "minority", "-n", "6"},
             {"build", "hypercube", "-n", "5"}}) {
        auto a = run(args), b = run(args);
        EXPECT_EQ(a.out, b.out);
    }
    auto doc = build("minority", 4);
    for (auto & mode : {"arcs", "twist"}) {
        auto a = run({"verify", "-i", "-", "--mode", mode}, doc);
        auto b = run({"verify", "-i", "-", "--mode", mode}, doc);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(CliManifest, OneLinePerInvocation)
{
    auto r = run({"verify", "-i", "-", "--mode", "set", "--set", "000"}, build("hypercube", 3));
    auto m = r.manifest();
    EXPECT_EQ(m["command"], "verify");
    EXPECT_EQ(m["parameters"]["mode"], "set");
    EXPECT_EQ(m["outcome"], "fail");
    EXPECT_EQ(m["exit_code"], 1);
    EXPECT_TRUE(m["inputs"].contains("-"));
    EXPECT_TRUE(m.contains("version"));
    EXPECT_TRUE(m["elapsed_secs"].is_number());

    auto bad = run({"build", "minority", "-n", "2"});
    EXPECT_EQ(bad.manifest()["outcome"], "error");
}
