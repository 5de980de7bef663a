#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "reference_tables.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "orr");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = orr::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

std::string sample(const char* name) { return std::string(ORR_SAMPLES_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST(Cli, TablesMatchReference) {
    auto r = run({"tables"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "# N_k");
    std::getline(in, line);
    EXPECT_EQ(line, "n\\k\t2\t3\t4\t5\t6\t7\t8\t9");
    for (int n = 2; n <= 9; ++n) {
        std::getline(in, line);
        std::string want = std::to_string(n);
        for (long v : orr::reference::witt[n - 2]) want += "\t" + std::to_string(v);
        EXPECT_EQ(line, want);
    }
    EXPECT_NE(r.out.find("2\t0\t1⊕0\t0⊕3⊕0\t3⊕0⊕6⊕4\n"), std::string::npos);
    EXPECT_NE(r.out.find("\t38747232\n"), std::string::npos);
}

TEST(Cli, TablesToDirectoryWithVerification) {
    auto dir = std::filesystem::temp_directory_path() / "orr_tables_test";
    std::filesystem::create_directories(dir);
    auto r = run({"tables", "--n-max", "3", "--k-max", "4", "--verify-koszul", "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream t3(dir / "table3.tsv");
    std::stringstream s;
    s << t3.rdbuf();
    EXPECT_EQ(s.str(), "n\\k\t2\t3\t4\n2\t0\t1⊕0\t0⊕3⊕0\n3\t1\t6⊕6\t6⊕28⊕36\n");
    auto v = nlohmann::json::parse(r.out);
    ASSERT_EQ(v.size(), 6u);
    for (const auto& cell : v) EXPECT_EQ(cell["status"], "match");
}

TEST(Cli, Checks) {
    EXPECT_EQ(run({"check", "cyclotomic", "--n", "3", "--degree", "12"}).code, 0);
    auto dk = run({"check", "dk-genfun", "--n", "2", "--degree", "12"});
    EXPECT_EQ(dk.code, 1);
    EXPECT_EQ(json_of(dk)["counterexample"]["degree"], 1);
    EXPECT_EQ(run({"check", "massey-dual", "--n", "2", "--k", "3"}).code, 0);
    auto md = run({"check", "massey-dual", "--n", "3", "--k", "3"});
    EXPECT_EQ(md.code, 1);
    EXPECT_EQ(json_of(md)["counterexample"]["row"], "132");
    auto kh = run({"check", "koszul-h3", "--n", "2", "--k", "4"});
    EXPECT_EQ(kh.code, 0);
    EXPECT_EQ(json_of(kh)["cell"], "0⊕3⊕0");
    EXPECT_EQ(run({"check", "jacobi-dim", "--n", "2", "--k", "5"}).code, 0);
    EXPECT_EQ(run({"check", "nonsense"}).code, 2);
}

TEST(Cli, GaloisReports) {
    auto id = run({"galois", "depth", "--config", sample("identity.json")});
    ASSERT_EQ(id.code, 0) << id.err;
    EXPECT_EQ(json_of(id)["depth"], ">=7");

    auto tau = run({"galois", "tau", "--config", sample("depth3.json"), "--k", "3"});
    ASSERT_EQ(tau.code, 0) << tau.err;
    EXPECT_EQ(json_of(tau)["vanishes"], false);
    EXPECT_EQ(json_of(tau)["witness"]["index"], "1221");

    auto n2 = run({"galois", "n2", "--config", sample("depth3.json"), "--k", "3"});
    EXPECT_EQ(json_of(n2)["invariants"]["1221"], "1");

    auto tower = run({"galois", "tower", "--config", sample("depth3.json"), "--m", "3", "--l", "3"});
    EXPECT_EQ(json_of(tower)["agrees"], true);
    EXPECT_EQ(json_of(tower)["levels"][0]["witness"]["index"], "1221");

    auto pre = run({"galois", "tau", "--config", sample("depth3.json"), "--k", "4"});
    EXPECT_EQ(pre.code, 2);
    EXPECT_EQ(json_of(pre)["error"], "precondition");
}

TEST(Cli, ParseErrorsCarryPositions) {
    auto bad_word = write_temp("orr_bad_word.json",
                               "{\n  \"n\": 2, \"K\": 6, \"ell\": 3, \"M\": 4, \"chi\": \"1\",\n"
                               "  \"y\": [\"x1 x3\", \"1\"]\n}\n");
    auto r = run({"galois", "depth", "--config", bad_word});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3, column 14"), std::string::npos) << r.err;

    auto bad_json = write_temp("orr_bad_json.json", "{\n  \"n\": 2,\n  \"K\" 6\n}\n");
    r = run({"galois", "depth", "--config", bad_json});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

    auto strict = write_temp("orr_strict.json",
                             "{\"n\": 2, \"K\": 6, \"ell\": 3, \"M\": 4, \"chi\": \"1\", "
                             "\"y\": [\"[[x1,x2],x2]\", \"1\"], \"strict_x0\": true}");
    EXPECT_EQ(run({"galois", "depth", "--config", strict}).code, 2);
}

TEST(Cli, UsageErrorsAndBudget) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"witt", "--n", "0"}).code, 2);
    EXPECT_EQ(run({"witt", "--n", "two"}).code, 2);
    EXPECT_EQ(run({"witt", "--format", "xml"}).code, 2);
    auto big = run({"homology", "--n", "4", "--k", "6"});
    EXPECT_EQ(big.code, 2);
    EXPECT_NE(big.err.find("over the budget"), std::string::npos);
    EXPECT_EQ(run({"magnus", "coeff", "--n", "2", "--word", "x1 x9", "--index", "1"}).code, 2);
}

TEST(Cli, SmallCommands) {
    auto w = json_of(run({"witt", "--n", "9", "--k", "9"}));
    EXPECT_EQ(w["N_k"], 43046640);
    EXPECT_EQ(w["D_k"], 38747232);
    auto l = json_of(run({"lyndon", "--n", "2", "--k", "3"}));
    EXPECT_EQ(l["words"][0]["word"], "112");
    EXPECT_EQ(l["words"][1]["factorization"], nlohmann::json({"12", "2"}));
    auto c = json_of(run({"magnus", "coeff", "--n", "2", "--word", "[[x1,x2],x2]", "--index", "122", "--ring", "Z"}));
    EXPECT_EQ(c["coefficient"], "1");
    auto e = json_of(run({"magnus", "expand", "--n", "2", "--K", "2", "--word", "x1^3", "--ring", "Z/3^1"}));
    EXPECT_EQ(e["terms"], nlohmann::json({{"", "1"}}));
    // The constant term has the empty key, distinct from the X1 coefficient.
    auto g = json_of(run({"magnus", "expand", "--n", "2", "--K", "1", "--word", "x1", "--ring", "Z"}));
    EXPECT_EQ(g["terms"], nlohmann::json({{"", "1"}, {"1", "1"}}));
    auto m = json_of(run({"massey", "eval", "--n", "2", "--index", "12", "--word", "[x1,x2]"}));
    EXPECT_EQ(m["value"], "-1");
    auto d = json_of(run({"massey", "dual", "--n", "3", "--k", "2"}));
    EXPECT_EQ(d["matrix"][1][1], -1);
    auto j = json_of(run({"jacobi", "dim", "--n", "2", "--k", "5"}));
    EXPECT_EQ(j["dimension"], 3);
    auto p = json_of(run({"jacobi", "phi", "--n", "2", "--diagram", "v:1 | [2,[2,1]]"}));
    EXPECT_EQ(p["legs"][0]["L_v"], "[2,[2,1]]");
    auto h = json_of(run({"homology", "--n", "2", "--k", "3"}));
    EXPECT_EQ(h["cell"], "1⊕0");
    EXPECT_EQ(h["matches_formula"], true);
}

TEST(Cli, Deterministic) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"jacobi", "dim", "--n", "3", "--k", "3"},
             {"galois", "milnor", "--config", sample("cyclotomic_twist.json"), "--length", "3"},
             {"homology", "--n", "3", "--k", "3", "--format", "tsv"},
         }) {
        auto a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}
