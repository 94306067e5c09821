#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "pdom/cli.hpp"
#include "pdom/family.hpp"
#include "testutil.hpp"

using namespace pdom;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& content) {
        path_ = std::string(::testing::TempDir()) + "pdom_cli_" +
                std::to_string(counter_++) + ".txt";
        std::ofstream f(path_);
        f << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    static inline int counter_ = 0;
    std::string path_;
};

}  // namespace

TEST(Cli, GammaMatchesApi) {
    TempFile f2(to_edge_list_text(build_block(BlockKind::kF, 3).graph));
    auto r = run({"gamma", "--p", "3", "--input", f2.path()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "gamma_p = 5\n");

    auto j = run({"gamma", "--p", "3", "--input", f2.path(), "--json"});
    auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(parsed["gamma_p"], 5);
    EXPECT_EQ(parsed["unique"], true);
}

TEST(Cli, ReinforceMethods) {
    TempFile f2(to_edge_list_text(build_block(BlockKind::kF, 3).graph));
    EXPECT_EQ(run({"reinforce", "--p", "3", "--input", f2.path(), "--method", "eta"}).out,
              "r_p = 4\n");
    TempFile p4(to_edge_list_text(testutil::path(4)));
    EXPECT_EQ(run({"reinforce", "--p", "2", "--input", p4.path(), "--method", "definition"}).out,
              "r_p = 1\n");
    EXPECT_EQ(run({"reinforce", "--p", "2", "--input", p4.path()}).out, "r_p = 1\n");
    TempFile k13(to_edge_list_text(testutil::star(3)));
    EXPECT_EQ(run({"reinforce", "--p", "3", "--input", k13.path(), "--method", "eta"}).out,
              "r_p = 0\n");  // convention applies whatever the method
    auto exhausted = run({"reinforce", "--p", "2", "--input", k13.path(), "--method",
                          "definition", "--budget", "1"});
    EXPECT_EQ(exhausted.code, 0);
    EXPECT_NE(exhausted.out.find("exceeds budget"), std::string::npos);
}

TEST(Cli, EtaAndMu) {
    TempFile p4(to_edge_list_text(testutil::path(4)));
    EXPECT_EQ(run({"eta", "--p", "2", "--input", p4.path()}).out, "eta_p = 1\n");
    EXPECT_EQ(run({"eta", "--p", "2", "--input", p4.path(), "--set", "0,2"}).out,
              "eta_p(V, X, G) = 1\n");
    EXPECT_EQ(run({"mu", "--p", "2", "--input", p4.path()}).out, "mu_p = 1\n");
    EXPECT_EQ(run({"mu", "--p", "2", "--input", p4.path(), "--set", "0,2,3", "--vertex", "0"}).out,
              "mu_p(x, X, G) = 3\n");
}

TEST(Cli, FamilySubcommands) {
    auto build = run({"family", "build", "--p", "3", "--kind", "F"});
    EXPECT_EQ(build.code, 0);
    EXPECT_EQ(parse_edge_list(build.out).vertex_count(), 7);

    auto gen1 = run({"family", "gen", "--p", "3", "--ops", "2", "--seed", "11"});
    auto gen2 = run({"family", "gen", "--p", "3", "--ops", "2", "--seed", "11"});
    EXPECT_EQ(gen1.out, gen2.out);

    TempFile member(to_edge_list_text(build_block(BlockKind::kF, 3).graph));
    auto check = run({"family", "check", "--p", "3", "--input", member.path()});
    EXPECT_EQ(check.code, 0);
    EXPECT_EQ(check.out.rfind("member\n", 0), 0u);

    TempFile p7(to_edge_list_text(testutil::path(7)));
    EXPECT_EQ(run({"family", "check", "--p", "3", "--input", p7.path()}).out, "not a member\n");

    auto jcheck = run({"family", "check", "--p", "3", "--input", member.path(), "--json"});
    auto parsed = nlohmann::json::parse(jcheck.out);
    EXPECT_TRUE(parsed["member"].get<bool>());
    auto trace = trace_from_json(parsed["trace"]);
    EXPECT_EQ(replay_trace(trace).tree.vertex_count(), 7);
}

TEST(Cli, EnumerateAndExport) {
    EXPECT_EQ(run({"enumerate", "--n", "7", "--count-only"}).out, "11\n");
    auto listing = run({"enumerate", "--n", "4"});
    EXPECT_NE(listing.out.find("4 3"), std::string::npos);

    TempFile p3(to_edge_list_text(testutil::path(3)));
    auto dot = run({"export", "--input", p3.path(), "--format", "dot"});
    EXPECT_EQ(dot.code, 0);
    EXPECT_NE(dot.out.find("graph G {"), std::string::npos);
}

TEST(Cli, VerifySmallSuite) {
    auto r = run({"verify", "--claim", "obs-1.2", "--p", "2", "--max-n", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    auto json_start = r.out.find('{');
    ASSERT_NE(json_start, std::string::npos);
    auto parsed = nlohmann::json::parse(r.out.substr(json_start));
    EXPECT_EQ(parsed["claim"], "obs-1.2");
    EXPECT_EQ(parsed["violations"].size(), 0u);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"gamma", "--p", "3"}).code, 2);          // missing --input
    EXPECT_EQ(run({"frobnicate"}).code, 2);                 // unknown subcommand
    EXPECT_EQ(run({"gamma", "--p", "3", "--input", "/no/such/file"}).code, 1);
    TempFile p4(to_edge_list_text(testutil::path(4)));
    EXPECT_EQ(run({"gamma", "--p", "3", "--input", p4.path(), "--bogus"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
