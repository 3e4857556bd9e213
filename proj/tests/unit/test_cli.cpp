#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = acyc::cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ACYC_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, RootSystemInfo) {
  const auto r = run({"rootsys", "info", "--type", "G", "--rank", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["roots"], 12);
  EXPECT_EQ(j["e"], 3);
  EXPECT_EQ(j["weyl_order"], 12);
}

TEST(Cli, QuadrupleLemmaOutputIsExact) {
  const auto r = run({"verify", "lemma", "--id", "e60"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"pass\":true,\"quadruples\":17550}\n");
}

TEST(Cli, FirstConstruction) {
  const auto r = run({"example", "e2x", "--n", "2", "--p", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["fixed_dim"], 3);
  EXPECT_EQ(j["m_s"], 3);
  EXPECT_EQ(j["total"], 9);
  EXPECT_EQ(j["almost_cyclic"], true);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"scan", "--type", "B", "--rank", "2", "--weight", "1,1", "--order", "30",
                                      "--samples", "2000", "--seed", "11"};
  const auto a = run(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const auto b = run(threaded);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run(args).out);
}

TEST(Cli, ErrorsAreStructured) {
  const auto r = run({"weights", "compute", "--type", "E", "--rank", "6", "--weight", "1,0,0,0,0,0,0"});
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.json()["error"]["code"], "rank_mismatch");
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"verify", "lemma", "--id", "zz"}).json()["error"]["code"], "invalid_argument");
  EXPECT_EQ(run({"weights", "compute", "--type", "Q", "--rank", "2", "--weight", "1,0"}).json()["error"]["code"],
            "invalid_type");
  EXPECT_EQ(run({"weights", "compute", "--type", "A", "--rank", "2", "--weight", "-1,0"}).json()["error"]["code"],
            "not_dominant");
  const auto u = run({"bogus"});
  EXPECT_EQ(u.status, 2);
  EXPECT_EQ(u.json()["error"]["code"], "usage");
  EXPECT_EQ(run({"scan", "--type", "A", "--rank", "1", "--weight", "1", "--char", "3", "--order", "12"}).status, 2);
}

TEST(Cli, ListingMismatchIsAViolation) {
  const auto r = run({"verify", "table1", "--type", "B", "--rank", "3"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.json()["pass"], false);
  EXPECT_EQ(run({"verify", "table1", "--type", "G", "--rank", "2"}).status, 0);
}

TEST(Cli, ConfigFileFlagsAndEnvironment) {
  const auto c = run({"--config", data("scan.conf"), "scan"});
  ASSERT_EQ(c.status, 0) << c.out;
  EXPECT_EQ(c.json()["seed"], 5);
  EXPECT_EQ(c.json()["samples"], 400);
  EXPECT_EQ(c.json()["N"], 12);
  EXPECT_EQ(run({"--config", data("scan.conf"), "scan", "--seed", "6"}).json()["seed"], 6);
  ::setenv("ACYC_SEED", "9", 1);
  const auto e = run({"scan", "--type", "A", "--rank", "2", "--weight", "2,0", "--order", "12", "--samples", "10"});
  const auto ce = run({"--config", data("scan.conf"), "scan"});
  ::unsetenv("ACYC_SEED");
  EXPECT_EQ(e.json()["seed"], 9);
  EXPECT_EQ(ce.json()["seed"], 5);
  EXPECT_EQ(run({"--config", data("missing.conf"), "scan"}).status, 2);
}

TEST(Cli, TabularFormats) {
  const std::vector<std::string> base{"weights", "compute", "--type", "A", "--rank", "2", "--weight", "1,1"};
  auto csv = base;
  csv.insert(csv.end(), {"--format", "csv"});
  const auto c = run(csv);
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("# summary\nkey,value\n"), std::string::npos);
  EXPECT_NE(c.out.find("dim,8\n"), std::string::npos);
  EXPECT_NE(c.out.find("\"[0,0]\",2\n"), std::string::npos);
  auto md = base;
  md.insert(md.end(), {"--format", "md"});
  const auto m = run(md);
  EXPECT_NE(m.out.find("### summary"), std::string::npos);
  EXPECT_NE(m.out.find("| dim | 8 |"), std::string::npos);
}

TEST(Cli, SpectrumFromTorusJson) {
  const auto r = run({"spectrum", "eval", "--type", "A", "--rank", "1", "--weight", "2", "--torus",
                      R"({"context":{"torsion":4},"fundamental_values":[1]})"});
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = r.json();
  EXPECT_EQ(j["m_s"], 2);
  EXPECT_EQ(j["exceptional"], "z^2");
  EXPECT_EQ(j["verdict"]["pass"], true);
  const auto f = run({"spectrum", "eval", "--type", "C", "--rank", "2", "--weight", "0,1", "--torus",
                      "@" + data("c2_torus.json")});
  ASSERT_EQ(f.status, 0) << f.out;
  EXPECT_EQ(f.json()["almost_cyclic"], false);
  EXPECT_EQ(f.json()["regular"], false);
  EXPECT_EQ(run({"spectrum", "eval", "--type", "A", "--rank", "1", "--weight", "2", "--torus", "{}"}).status, 2);
}

TEST(Cli, FiniteFieldCommands) {
  const auto z = run({"finite", "zsigmondy", "--q", "8", "--r", "1"}).json();
  EXPECT_EQ(z["status"], "exceptional_power");
  EXPECT_EQ(z["ell"], 3);
  EXPECT_EQ(run({"finite", "zsigmondy", "--q", "6", "--r", "1"}).status, 2);
}
