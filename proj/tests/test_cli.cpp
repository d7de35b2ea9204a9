#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sct/ballot_file.hpp"
#include "sct/cli.hpp"
#include "sct/errors.hpp"
#include "sct/report.hpp"

using namespace sct;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sct_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

// Every witness profile re-parses and re-evaluates to the recorded outcome.
void expect_round_trip(const Json& report, const std::string& rule_descriptor) {
  auto check = [&](const Json& prof) {
    auto file = parse_ballot_file(prof.at("ballot_file").get<std::string>());
    EXPECT_EQ(file.profile.symbol_names(), prof.at("ballots").get<std::vector<std::string>>());
    auto rule = cli::parse_rule(rule_descriptor, file.alphabet);
    EXPECT_EQ(rule->alphabet().name((*rule)(file.profile)), prof.at("outcome").get<std::string>());
  };
  for (const auto& w : report.at("witnesses")) {
    check(w.at("profile"));
    if (w.contains("moved_to")) check(w.at("moved_to"));
  }
}

}  // namespace

TEST(BallotFile, ParsesHeaderCommentsAndBallots) {
  auto f = parse_ballot_file("# sample\nalternatives: a,b,_ bot: _\n\na\n  b \n# more\n_\n");
  EXPECT_EQ(f.profile.to_string(), "[a,b,_]");
  EXPECT_EQ(f.mode, BallotFile::Mode::single);
  auto g = parse_ballot_file("alternatives: x,y\nx\n");
  EXPECT_EQ(g.alphabet.symbols(), (std::vector<std::string>{"x", "y", "_"}));
  auto h = parse_ballot_file("alternatives: -1,0,1 bot: 0\n1\n0\n");
  EXPECT_TRUE(h.alphabet.is_may());
  auto custom = parse_ballot_file("alternatives: yes,no bot: none\nnone\nyes\n");
  EXPECT_EQ(custom.alphabet.name(custom.alphabet.bot()), "none");
  EXPECT_EQ(custom.profile.to_string(), "[none,yes]");
  auto empty = parse_ballot_file("alternatives: a,b\n");
  EXPECT_TRUE(empty.profile.empty());
}

TEST(BallotFile, RankMode) {
  auto f = parse_ballot_file("alternatives: a,b,c\nrank: a > b = c\nrank: c > b > a\n");
  EXPECT_EQ(f.mode, BallotFile::Mode::rank);
  EXPECT_EQ(f.rank_names, (std::vector<std::string>{"a", "b", "c"}));
  ASSERT_EQ(f.rankings.size(), 2U);
  EXPECT_EQ(f.rankings[0].to_string(f.rank_names), "a > b = c");
  EXPECT_EQ(parse_ballot_file(format_rank_file(f.rank_names, f.rankings)).rankings, f.rankings);
}

TEST(BallotFile, DiagnosticsNameTheLine) {
  auto message = [](const std::string& text) {
    try {
      parse_ballot_file(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("alternatives: a,b\na\nz\n"), "line 3: undeclared symbol 'z'");
  EXPECT_EQ(message("# c\na\n"), "line 2: expected header 'alternatives: <sym>,... bot: <sym>'");
  EXPECT_EQ(message("alternatives: a,b,c\nrank: a > b > c\na\n"), "line 3: single-choice and rank ballots are mixed");
  EXPECT_EQ(message("alternatives: a,,b\n").rfind("line 1:", 0), 0U);
  EXPECT_EQ(message("alternatives: a,a\n").rfind("line 1:", 0), 0U);
  EXPECT_EQ(message("alternatives: a,b,c\nrank: a > b\n").rfind("line 2:", 0), 0U);
  EXPECT_EQ(message(""), "line 1: missing 'alternatives:' header");
}

TEST(BallotFile, FormatRoundTrips) {
  auto a = Alphabet::letters(3);
  auto p = Profile::of(a, {"c", "_", "a"});
  auto back = parse_ballot_file(format_ballot_file(p));
  EXPECT_EQ(back.profile, p);
}

TEST_F(Cli, EvalExamples) {
  auto r = run({"eval", "--rule", "pure-majority", "--profile", write("p.txt", "alternatives: a,b,_ bot: _\na\na\nb\n_\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "a\n");
  r = run({"eval", "--rule", "quorum:literal:3", "--profile", write("q.txt", "alternatives: a,b,_ bot: _\na\na\n")});
  EXPECT_EQ(r.out, "_\n");
  r = run({"eval", "--rule", "may-sign", "--profile", write("m.txt", "alternatives: -1,0,1 bot: 0\n1\n1\n-1\n")});
  EXPECT_EQ(r.out, "1\n");
  r = run({"eval", "--rule", "supermajority:nonbot:2/3", "--profile", path("p.txt")});
  EXPECT_EQ(r.out, "_\n");
}

TEST_F(Cli, EvalErrors) {
  auto r = run({"eval", "--rule", "pure-majority", "--profile", write("bad.txt", "alternatives: a,b\na\nq\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run({"eval", "--rule", "nonsense", "--profile", path("bad.txt")}).code, 2);
  EXPECT_EQ(run({"eval", "--rule", "pure-majority", "--profile", path("missing.txt")}).code, 2);
  EXPECT_EQ(run({"eval", "--rule", "pure-majority"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"eval", "--rule", "quorum:sideways:3", "--profile", write("ok.txt", "alternatives: a,b\na\n")}).code, 2);
  EXPECT_EQ(run({"eval", "--rule", "supermajority:all:1/3", "--profile", path("ok.txt")}).code, 2);
}

TEST_F(Cli, AuditExitCodesAndReport) {
  auto out = path("sm.json");
  auto r = run({"audit", "--rule", "supermajority:all:1/2", "--alternatives", "2", "--max-voters", "5", "--axioms", "C2-C5",
                "--out", out});
  EXPECT_EQ(r.code, 1);
  auto j = Json::parse(read(out));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ((std::vector<std::string>(keys.begin(), keys.begin() + 8)),
            (std::vector<std::string>{"schema", "toolkit_version", "command", "parameters", "bounds", "verdicts", "witnesses",
                                      "counts"}));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["bounds"]["max_voters"], 5);
  EXPECT_EQ(j["verdicts"][2]["axiom"], "C4");
  EXPECT_EQ(j["verdicts"][2]["status"], "fail");
  EXPECT_EQ(j["witnesses"][0]["profile"]["ballots"], Json::array({"a"}));
  expect_round_trip(j, "supermajority:all:1/2");

  EXPECT_EQ(run({"audit", "--rule", "pure-majority", "--alternatives", "2", "--max-voters", "5", "--axioms", "C2-C6",
                 "--out", path("pm.json")})
                .code,
            0);
  EXPECT_EQ(run({"audit", "--rule", "may-sign", "--alternatives", "may", "--max-voters", "4", "--axioms", "Ma2-Ma4",
                 "--out", path("may.json")})
                .code,
            0);
  EXPECT_EQ(run({"audit", "--rule", "negated-sign", "--max-voters", "2", "--ma4-semantics", "flip", "--out", path("neg.json")})
                .code,
            1);
  expect_round_trip(Json::parse(read(path("neg.json"))), "negated-sign");

  auto q = run({"audit", "--rule", "quorum:literal:3", "--max-voters", "5"});
  EXPECT_EQ(q.code, 1);
  expect_round_trip(Json::parse(q.out), "quorum:literal:3");

  EXPECT_EQ(run({"audit", "--rule", "pure-majority", "--axioms", "C9"}).code, 2);
  EXPECT_EQ(run({"audit", "--rule", "pure-majority", "--axioms", "Ma2"}).code, 2);
  EXPECT_EQ(run({"audit", "--rule", "pure-majority", "--ma4-semantics", "sideways"}).code, 2);
}

TEST_F(Cli, AuditHorizonErrorsExitThree) {
  auto doc = path("fam.json");
  ASSERT_EQ(run({"enumerate", "--alternatives", "2", "--horizon", "2", "--with-c6", "--out", doc}).code, 0);
  auto r = run({"audit", "--rule", "tabulated:" + doc + "#0", "--max-voters", "3", "--axioms", "C5"});
  EXPECT_EQ(r.code, 3);
  auto e = run({"eval", "--rule", "tabulated:" + doc + "#0",
                "--profile", write("big.txt", "alternatives: a,b\na\na\na\n")});
  EXPECT_EQ(e.code, 3);
  EXPECT_EQ(run({"eval", "--rule", "tabulated:" + doc + "#7", "--profile", path("big.txt")}).code, 2);
}

TEST_F(Cli, EnumerateReports) {
  auto out = path("e.json");
  auto r = run({"enumerate", "--alternatives", "2", "--horizon", "6", "--out", out});
  EXPECT_EQ(r.code, 0);
  auto j = Json::parse(read(out));
  EXPECT_EQ(j["counts"]["families"], 246);
  EXPECT_EQ(j["counts"]["violations_within_half_horizon"], 0);
  EXPECT_EQ(j["counts"]["maximal_without_artifacts"], 1);
  EXPECT_EQ(j["maximal_without_artifacts"][0], j["pure_majority_index"]);
  EXPECT_EQ(j["bounds"]["plurality_asserted_up_to"], 3);
  auto pm = run({"eval", "--rule", "tabulated:" + out + "#" + std::to_string(j["pure_majority_index"].get<int>()),
                 "--profile", write("p.txt", "alternatives: a,b\na\nb\nb\n")});
  EXPECT_EQ(pm.out, "b\n");

  auto c6 = Json::parse(run({"enumerate", "--horizon", "6", "--with-c6"}).out);
  EXPECT_EQ(c6["counts"]["families"], 1);
  EXPECT_EQ(c6["bounds"]["c6_checked_up_to"], 5);

  EXPECT_EQ(run({"enumerate", "--alternatives", "4", "--horizon", "2"}).code, 3);
  EXPECT_EQ(run({"enumerate", "--horizon", "9"}).code, 3);
  EXPECT_EQ(run({"enumerate", "--horizon", "6", "--max-families", "5"}).code, 3);
}

TEST_F(Cli, MayArrowOrderPairwise) {
  auto may = run({"may", "--voters", "3", "--semantics", "in-favor"});
  EXPECT_EQ(may.code, 0);
  auto mj = Json::parse(may.out);
  EXPECT_EQ(mj["counts"]["tables"], 1);
  EXPECT_EQ(mj["tables"][0]["equals_sign_rule"], true);
  EXPECT_EQ(run({"may", "--voters", "5"}).code, 3);
  EXPECT_EQ(run({"may", "--voters", "2", "--semantics", "odd"}).code, 2);

  auto arrow = run({"arrow-search"});
  EXPECT_EQ(arrow.code, 0);
  auto aj = Json::parse(arrow.out);
  EXPECT_GT(aj["counts"]["survivors"].get<int>(), 0);
  for (const auto& s : aj["swfs"]) EXPECT_FALSE(s["dictator"].is_null());
  EXPECT_EQ(run({"arrow-search", "--voters", "3"}).code, 3);

  auto yes = run({"order", "--rule-a", "quorum:participation:3", "--rule-b", "pure-majority"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out, "a < b: true\n");
  auto no = run({"order", "--rule-a", "pure-majority", "--rule-b", "quorum:participation:3"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "a < b: false\nwitness: [a] a=a b=_\n");

  auto cycle = write("cycle.txt", "alternatives: a,b,c\nrank: a > b > c\nrank: b > c > a\nrank: c > a > b\n");
  auto pw = run({"pairwise", "--profile", cycle});
  EXPECT_EQ(pw.code, 1);
  EXPECT_NE(pw.out.find("transitive: false"), std::string::npos);
  auto ok = run({"pairwise", "--profile", write("ok.txt", "alternatives: a,b,c\nrank: a > b > c\nrank: a > c > b\n")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(run({"pairwise", "--profile", write("s.txt", "alternatives: a,b\na\n")}).code, 2);
}

TEST_F(Cli, Replay) {
  auto p = write("p.txt", "alternatives: a,b\na\na\nb\n");
  auto r = run({"replay", "--rule", "pure-majority", "--profile", p});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["confirmed"], true);
  EXPECT_EQ(run({"replay", "--rule", "pure-majority", "--profile", write("t.txt", "alternatives: a,b\na\nb\n")}).code, 2);
  EXPECT_EQ(run({"replay", "--rule", "first-ballot-dictator", "--profile", write("d.txt", "alternatives: a,b\nb\na\na\n")}).code,
            1);
}

TEST_F(Cli, ReportsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"audit", "--rule", "quorum:literal:3", "--max-voters", "4", "--axioms", "all", "--alternatives", "3"},
      {"enumerate", "--alternatives", "3", "--horizon", "5"},
      {"may", "--voters", "4", "--semantics", "flip"},
      {"arrow-search", "--tables"},
      {"order", "--rule-a", "pure-majority", "--rule-b", "supermajority:nonbot:1/2"},
  };
  for (const auto& c : commands) {
    auto first = run(c);
    auto second = run(c);
    EXPECT_EQ(first.out, second.out) << c[0];
    EXPECT_EQ(first.code, second.code);
  }
  auto threaded = [&](const std::string& cmd, const std::string& t) {
    std::vector<std::string> args{cmd, "--threads", t};
    if (cmd == "enumerate") args.insert(args.end(), {"--alternatives", "3", "--horizon", "5"});
    if (cmd == "audit") args.insert(args.end(), {"--rule", "quorum:literal:2", "--alternatives", "3", "--max-voters", "4"});
    return run(args).out;
  };
  for (const std::string cmd : {"enumerate", "arrow-search", "audit"}) EXPECT_EQ(threaded(cmd, "1"), threaded(cmd, "4")) << cmd;
}

TEST_F(Cli, GoldenReports) {
  const std::string golden = std::string(SCT_TEST_DATA) + "/golden/";
  EXPECT_EQ(run({"enumerate", "--alternatives", "2", "--horizon", "3"}).out, read(golden + "enumerate_2_h3.json"));
  EXPECT_EQ(run({"may", "--voters", "2", "--semantics", "in-favor"}).out, read(golden + "may_n2_in_favor.json"));
  EXPECT_EQ(run({"audit", "--rule", "quorum:literal:3", "--max-voters", "4"}).out, read(golden + "audit_quorum_literal_3.json"));
}

TEST_F(Cli, HelpAndVersion) {
  EXPECT_EQ(run({"--help"}).code, 0);
  auto v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, std::string(kToolkitVersion) + "\n");
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(Cli, BinaryPassesExitCodesThrough) {
  auto status = [&](const std::string& args) {
    int s = std::system((std::string(SCT_TOOL) + " " + args + " > " + path("o.txt") + " 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("audit --rule pure-majority --max-voters 3"), 0);
  EXPECT_EQ(status("audit --rule quorum:literal:3 --max-voters 3"), 1);
  EXPECT_EQ(status("audit --rule bogus"), 2);
  EXPECT_EQ(status("may --voters 9"), 3);
}
