#include "doctest.h"

#include <array>
#include <cstdio>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "rhomboid/cli.hpp"

using rhomboid::cli::run;

namespace {

struct outcome {
  int code;
  std::string out;
  std::string err;
};

outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary; stdout only.
outcome shell(const std::string& args) {
  std::string cmd = std::string(RHOMBOID_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out, ""};
}

int count_lines(const std::string& s, const std::regex& re) {
  return static_cast<int>(std::distance(
      std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator()));
}

} // namespace

TEST_CASE("gen") {
  auto r = call({"gen", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "(b1+e1*e2+d1*d2)*(b2+e3*e4+d3*d4)+e1*c1*e4+d1*a1*d4\n"
                 "literals: 16\n");
  CHECK(call({"gen", "1", "--count-only"}).out == "0\n");
  CHECK(call({"gen", "10", "--count-only"}).out == "439\n");
  CHECK(call({"gen", "2", "--juxtapose"}).out == "b1+e1e2+d1d2\nliterals: 5\n");
  CHECK(call({"gen", "8", "--sub", "u5,u7", "--count-only"}).out == "11\n");

  auto j = nlohmann::json::parse(call({"gen", "3", "--output", "json", "--ast"}).out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["literals"] == 16);
  CHECK(j["family"] == "SR");
  CHECK(j.contains("ast"));

  CHECK(call({"gen", "0"}).code == 2);
  CHECK(call({"gen", "-3"}).code == 2);
  CHECK(call({"gen", "5", "--sub", "u3"}).code == 2);
  CHECK(call({"gen", "5", "--sub", "x1,b2"}).code == 2);
  CHECK(call({"gen", "5", "--sub", "b4,b2"}).code == 2);
  CHECK(call({"gen", "7", "--sub", "u5,u7"}).code == 2);
  CHECK(call({"gen", "5", "--rounding", "up"}).code == 2);
  CHECK(call({"gen"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
}

TEST_CASE("help") {
  auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("u3") != std::string::npos);
  auto g = call({"gen", "--help"});
  CHECK(g.code == 0);
  CHECK(g.out.find("--count-only") != std::string::npos);
}

TEST_CASE("verify") {
  CHECK(call({"verify", "8", "--mode", "exact"}).code == 0);
  CHECK(call({"verify", "1", "--mode", "exact"}).code == 0);
  auto fp = call({"verify", "64", "--mode", "fingerprint", "--trials", "10",
                  "--seed", "42"});
  CHECK(fp.code == 0);
  CHECK(count_lines(fp.out, std::regex("trial \\d+: digest [0-9a-f]{16}")) == 10);
  CHECK(fp.out == call({"verify", "64", "--mode", "fingerprint", "--trials",
                        "10", "--seed", "42"}).out);

  auto j = nlohmann::json::parse(
      call({"verify", "5", "--output", "json"}).out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["result"] == "pass");

  CHECK(call({"verify", "12", "--mode", "exact", "--limit", "1000"}).code == 2);
  CHECK(call({"verify", "4", "--mode", "fingerprint", "--prime", "100"}).code == 2);
  CHECK(call({"verify", "4", "--mode", "fingerprint", "--trials", "0"}).code == 2);
  CHECK(call({"verify", "4", "--mode", "maybe"}).code == 2);
}

TEST_CASE("table") {
  auto r = call({"table"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out, std::regex("\n")) == 8);
  CHECK(std::regex_search(r.out, std::regex("\\n\\s+4\\s+47\\s+43\\s+43\\s+41\\s+41\\n")));
  CHECK(std::regex_search(r.out, std::regex("\\n\\s+7\\s+252\\s+236\\s+228\\s+172\\s+172\\n")));
  CHECK(std::regex_search(r.out, std::regex("\\n\\s+10\\s+709\\s+665\\s+641\\s+439\\s+439\\n")));

  auto one = call({"table", "--from", "4", "--to", "4"});
  CHECK(count_lines(one.out, std::regex("\n")) == 2);

  auto beyond = call({"table", "--from", "9", "--to", "12"});
  CHECK(beyond.code == 0);
  CHECK(std::regex_search(beyond.out, std::regex("\\n\\s+12\\s+-\\s+-\\s+-\\s+\\d+\\s+\\d+\\n")));

  auto j = nlohmann::json::parse(call({"table", "--output", "json"}).out);
  CHECK(j["rows"].size() == 7);
  CHECK(j["agree"] == true);

  CHECK(call({"table", "--from", "3"}).code == 2);
  CHECK(call({"table", "--from", "8", "--to", "5"}).code == 2);
  // Floor rounding leaves the reference counts behind at n = 9.
  CHECK(call({"table", "--rounding", "floor"}).code == 1);
}

TEST_CASE("closed-form") {
  auto k2 = call({"closed-form", "--k", "2"});
  CHECK(k2.code == 0);
  CHECK(std::regex_search(k2.out, std::regex("T\\s+41\\s+41\\s+41\\n")));
  auto k3 = call({"closed-form", "--k", "3"});
  CHECK(std::regex_search(k3.out, std::regex("T\\s+247\\s+247\\s+247\\n")));
  auto k5 = call({"closed-form", "--k", "5"});
  CHECK(k5.code == 0);
  CHECK(k5.out.find("verdict: match") != std::string::npos);
  CHECK(call({"closed-form", "--k", "1"}).code == 2);
  // Floor rounding already moves the single-leaf count at size 8.
  auto floor3 = call({"closed-form", "--k", "3", "--rounding", "floor"});
  CHECK(floor3.code == 1);
  CHECK(std::regex_search(floor3.out, std::regex("T_hat\\s+265\\s+265\\s+286\\n")));
}

TEST_CASE("dot") {
  auto two = call({"dot", "2"});
  CHECK(two.code == 0);
  // b1, u1, l1, b2
  CHECK(count_lines(two.out, std::regex("\\n  [bul]\\d+;")) == 4);
  CHECK(count_lines(two.out, std::regex(" -> ")) == 5);
  auto sl = call({"dot", "7", "--sub", "b1,u3"});
  CHECK(count_lines(sl.out, std::regex("\\n  [bul]\\d+;")) == 8);
  CHECK(count_lines(sl.out, std::regex(" -> ")) == 14);
  auto trap = call({"dot", "8", "--sub", "u5,u7"});
  CHECK(count_lines(trap.out, std::regex(" -> ")) == 9);
  CHECK(call({"dot", "7", "--sub", "u5,u7"}).code == 2);
  CHECK(call({"dot", "7", "--sub", "b1,q3"}).code == 2);
}

TEST_CASE("report and asymptotic") {
  auto r = call({"report"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out, std::regex("FLAGGED")) == 3);
  auto j = nlohmann::json::parse(call({"report", "--output", "json"}).out);
  CHECK(j["flagged"] == 3);
  auto a = call({"asymptotic"});
  CHECK(a.code == 0);
  CHECK(a.out.find("converging") != std::string::npos);
  CHECK(call({"asymptotic", "--samples", "12"}).code == 2);
}

TEST_CASE("binary") {
  auto g = shell("gen 3");
  CHECK(g.code == 0);
  CHECK(g.out == call({"gen", "3"}).out);
  CHECK(shell("gen 0").code == 2);
  CHECK(shell("verify 6").code == 0);
  CHECK(shell("table").out == shell("table").out);
}
