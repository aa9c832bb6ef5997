#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kaleido/kaleidoscope.hpp"
#include "kaleido/serialize.hpp"
#include "kaleido/transforms.hpp"
#include "kaleido_cli/cli.hpp"

using namespace kaleido;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;

    std::vector<std::string> lines() const {
        std::vector<std::string> v;
        std::istringstream in(out);
        for (std::string l; std::getline(in, l);) v.push_back(l);
        return v;
    }
    std::vector<json> records() const {
        std::vector<json> v;
        for (const std::string &l : lines()) v.push_back(json::parse(l));
        return v;
    }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyAllPasses) {
    Result r = run({"verify", "all"});
    ASSERT_EQ(r.code, cli::kOk) << r.out << r.err;
    EXPECT_NE(r.out.find("count squares = 10"), std::string::npos);
    EXPECT_NE(r.out.find("count tetrads = 105"), std::string::npos);
    EXPECT_NE(r.out.find("count apparitions = 1120"), std::string::npos);
    EXPECT_NE(r.out.find("result PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
}

TEST(Cli, VerifyJsonReport) {
    Result r = run({"verify", "squares", "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk);
    json j = json::parse(r.out);
    EXPECT_EQ(j["suite"], "squares");
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["counts"]["squares"], 10);
}

TEST(Cli, EveryCorruptedTableFailsVerification) {
    for (const std::string &t : golden::table_names()) {
        Result r = run({"verify", "all", "--corrupt-golden", t});
        EXPECT_EQ(r.code, cli::kVerificationFailed) << t;
    }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"verify", "nonsense"}).code, cli::kUsageError);
    EXPECT_EQ(run({"list", "states", "--format", "yaml"}).code, cli::kUsageError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
    EXPECT_EQ(run({"list", "widgets"}).code, cli::kUsageError);
    EXPECT_EQ(run({"list", "tetrads", "--square", "S11"}).code, cli::kUsageError);
    EXPECT_EQ(run({"apparitions", "--kind", "19"}).code, cli::kUsageError);
    EXPECT_EQ(run({"find-map", "S1"}).code, cli::kUsageError);
    EXPECT_EQ(run({"verify", "all", "--corrupt-golden", "nope"}).code, cli::kUsageError);
    EXPECT_EQ(run({}).code, cli::kUsageError);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, ListStates) {
    Result r = run({"list", "states"});
    ASSERT_EQ(r.code, cli::kOk);
    auto lines = r.lines();
    ASSERT_EQ(lines.size(), 60u);
    EXPECT_EQ(lines[36].rfind("37 (1,0,0,i)", 0), 0u) << lines[36];
}

TEST(Cli, ListTriadsJson) {
    Result r = run({"list", "triads", "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk);
    auto recs = r.records();
    ASSERT_EQ(recs.size(), 15u);
    int negative = 0;
    for (const json &j : recs) negative += j["sign"] == -1;
    EXPECT_EQ(negative, 3);
}

TEST(Cli, ListFilteredBySquare) {
    EXPECT_EQ(run({"list", "tetrads", "--square", "S1"}).lines().size(), 24u);
    EXPECT_EQ(run({"list", "tetrads"}).lines().size(), 105u);
    EXPECT_EQ(run({"list", "squares", "--square", "6"}).lines().size(), 1u);
    EXPECT_EQ(run({"list", "lines", "--square", "S2"}).lines().size(), 32u);
    EXPECT_EQ(run({"list", "configs"}).lines().size(), 20u);
    EXPECT_EQ(run({"list", "pairing"}).lines().size(), 10u);
    EXPECT_EQ(run({"list", "mubsets"}).lines().size(), 6u);
    EXPECT_EQ(run({"list", "observables"}).lines().size(), 15u);
}

TEST(Cli, Apparitions) {
    EXPECT_EQ(run({"apparitions", "--square", "S1", "--kind", "18"}).lines().size(), 16u);
    EXPECT_EQ(run({"apparitions", "--all"}).lines().size(), 1120u);
    Result r = run({"apparitions", "--square", "S1", "--kind", "20", "--check", "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk);
    auto recs = r.records();
    ASSERT_EQ(recs.size(), 96u);
    for (const json &j : recs) {
        EXPECT_EQ(j["colorings"], 0);
        EXPECT_EQ(j["kind"], 20);
        EXPECT_EQ(j["tetrads"].size(), 11u);
    }
}

TEST(Cli, FindMap) {
    auto to2 = run({"find-map", "S1", "S2", "--format", "json"}).records();
    EXPECT_EQ(to2.size(), 72u);
    EXPECT_TRUE(std::any_of(to2.begin(), to2.end(), [](const json &j) { return j["local"].get<bool>(); }));

    auto to6 = run({"find-map", "S1", "S6", "--format", "json"}).records();
    EXPECT_EQ(to6.size(), 72u);
    for (const json &j : to6) EXPECT_FALSE(j["local"].get<bool>());

    auto self = run({"find-map", "1", "1", "--format", "json"}).records();
    json id = SymplecticMap::identity();
    EXPECT_TRUE(std::any_of(self.begin(), self.end(), [&](const json &j) { return j["map"] == id; }));
}

TEST(Cli, FindMapLift) {
    Result r = run({"find-map", "S1", "S6", "--lift", "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk);
    for (const json &j : r.records()) {
        auto m = j["map"].get<SymplecticMap>();
        auto u = j["lift"]["matrix"].get<ScaledMatrix>();
        EXPECT_EQ(symplectic_image(u), m);
        EXPECT_EQ(j["lift"]["signs"].size(), 15u);
    }
}

TEST(Cli, CsvHasHeader) {
    auto lines = run({"list", "states", "--format", "csv"}).lines();
    ASSERT_EQ(lines.size(), 61u);
    EXPECT_EQ(lines[0], "label,coords,triad");
    EXPECT_EQ(lines[1].rfind("1,", 0), 0u);
    auto report = run({"verify", "observables", "--format", "csv"}).lines();
    EXPECT_EQ(report.at(0), "check,pass,detail");
}

TEST(Cli, JsonArray) {
    Result r = run({"list", "squares", "--format", "json-array"});
    json j = json::parse(r.out);
    ASSERT_EQ(j.size(), 10u);
    EXPECT_EQ(j[0]["id"], "S1");
    EXPECT_EQ(j[0].get<MagicSquare>().grid, Kaleidoscope::standard().square(1).grid);
}

TEST(Cli, DumpGolden) {
    Result r = run({"--dump-golden"});
    ASSERT_EQ(r.code, cli::kOk);
    json j = json::parse(r.out);
    EXPECT_EQ(j["all_tetrads"].size(), 105u);
    EXPECT_EQ(j["local_maps"].size(), 8u);
}

TEST(Cli, ExportToFile) {
    auto path = std::filesystem::temp_directory_path() / "kaleido_export_test.json";
    Result r = run({"export", "-o", path.string()});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    std::ifstream in(path);
    json doc = json::parse(in);
    EXPECT_EQ(doc["states"].size(), 60u);
    EXPECT_EQ(doc["squares"].size(), 10u);
    EXPECT_EQ(doc["tetrads"].size(), 105u);
    EXPECT_EQ(doc["apparitions"].size(), 1120u);
    EXPECT_EQ(doc["designs"]["states"].get<QbdSymbol>(), (QbdSymbol{105, 60, 7, 4, {{1, 12}, {3, 3}}}));
    std::filesystem::remove(path);
}

TEST(Cli, OutputIsDeterministic) {
    for (std::vector<std::string> args : {std::vector<std::string>{"list", "tetrads"},
                                          std::vector<std::string>{"apparitions", "--square", "S4"},
                                          std::vector<std::string>{"find-map", "S2", "S9", "--lift"}}) {
        EXPECT_EQ(run(args).out, run(args).out);
    }
}
