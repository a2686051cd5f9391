#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "circgraph/cli.hpp"
#include "circgraph/io.hpp"
#include "doctest.h"

using namespace circgraph;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("circgraph-cli-" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

const std::string kK32 =
    R"({"format":"bigraph-v1","u":["u1","u2","u3"],"w":["w1","w2"],
        "edges":[["u1","w1"],["u2","w1"],["u3","w1"],["u1","w2"],["u2","w2"],["u3","w2"]]})";
const std::string kK4 =
    R"({"format":"graph-v1","vertices":["a","b","c","d"],
        "edges":[["a","b"],["a","c"],["a","d"],["b","c"],["b","d"],["c","d"]]})";

}  // namespace

TEST_CASE("exit codes") {
  const TempDir dir;
  const auto t4 = dir.write("t4.json", run({"build", "triangular", "4"}).out);
  const auto s5 = dir.write("s5.json", run({"build", "star", "5"}).out);
  const auto k32 = dir.write("k32.json", kK32);
  const auto k4 = dir.write("k4.json", kK4);
  const auto bad = dir.write("bad.json", "{\"format\": ");
  const auto dot = dir.write("g.dot", "graph G { a -- b; }");

  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"build", "star", "5"}, 0},
      {{"build", "star", "3"}, 2},
      {{"build", "cube", "3"}, 2},
      {{"check", t4}, 0},
      {{"check", s5}, 0},
      {{"check", k32}, 1},
      {{"check", k4}, 2},
      {{"check", bad}, 2},
      {{"check", dot}, 2},
      {{"check", dir.write("none", "") + ".missing"}, 2},
      {{"verify", t4}, 0},
      {{"verify", s5}, 0},
      {{"verify", k32}, 1},
      {{"derive", "neighborhood", k4}, 0},
      {{"derive", "linear", t4, "--pivot", "p1"}, 0},
      {{"derive", "linear", t4}, 2},
      {{"derive", "linear", s5, "--pivot", "u1"}, 2},
      {{"iso", t4, t4}, 0},
      {{"iso", t4, s5}, 1},
      {{"iso", t4, t4, "--respect-parts"}, 0},
      {{"iso", k4, k4, "--respect-parts"}, 2},
      {{"enum", "circular", "--u", "5"}, 0},
      {{"enum", "circular", "--u", "9"}, 2},
      {{"enum", "circular"}, 2},
      {{"enum", "trees", "--max", "5"}, 0},
      {{"enum", "circular", "--u", "4", "--workers", "0"}, 2},
      {{"export", "--format", "dot", t4}, 0},
      {{"export", "--format", "json", k4}, 0},
      {{"export", "--format", "svg", t4}, 2},
      {{}, 2},
      {{"frobnicate"}, 2},
      {{"--version"}, 0},
  };
  for (const auto& c : cases) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    INFO(joined);
    const auto r = run(c.args);
    CHECK(r.code == c.code);
    if (c.code == 2) {
      CHECK(r.out.empty());
      CHECK_FALSE(r.err.empty());
    }
  }
}

TEST_CASE("reports carry tool identity and input digest") {
  const auto built = run({"build", "triangular", "4"});
  const auto r = run({"verify", "-"}, built.out);
  REQUIRE(r.code == 0);
  const auto report = json::parse(r.out);
  CHECK(report["tool"] == "circgraph");
  CHECK(report["version"] == std::string(kToolVersion));
  CHECK(report["command"] == "verify");
  CHECK(report["input_digest"] == "sha256:" + sha256_hex(json::parse(built.out).dump()));
  CHECK(report["classification"]["verdict"] == "NonTrivialCircular");
  CHECK(report["theorems"].size() == 6);
  for (const auto& t : report["theorems"]) CHECK(t["status"] != "Fail");

  const auto neg = json::parse(run({"check", "-"}, kK32).out);
  CHECK(neg["classification"]["witness"]["kind"] == "TripleOvercovered");
  CHECK(neg["classification"]["witness"]["vertices"] == json::array({"u1", "u2", "u3"}));
}

TEST_CASE("JSON round trip through export is byte-identical") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"build", "star", "6"}, {"build", "triangular", "5"}}) {
    const auto built = run(args).out;
    const auto once = run({"export", "--format", "json", "-"}, built);
    REQUIRE(once.code == 0);
    CHECK(once.out == built);
    CHECK(run({"export", "--format", "json", "-"}, once.out).out == built);
  }
  const auto k4 = run({"export", "--format", "json", "-"}, kK4).out;
  CHECK(run({"export", "--format", "json", "-"}, k4).out == k4);
}

TEST_CASE("derive neighborhood of K4 is the triangular graph") {
  const TempDir dir;
  const auto n = dir.write("n.json", run({"derive", "neighborhood", "-"}, kK4).out);
  const auto t4 = dir.write("t4.json", run({"build", "triangular", "4"}).out);
  const auto r = run({"iso", n, t4});
  CHECK(r.code == 0);
  const auto cert = json::parse(r.out)["certificate"];
  CHECK(cert["isomorphic"] == true);
  CHECK(cert["mapping"].size() == 8);
}

TEST_CASE("census output is independent of worker count") {
  const auto one = run({"enum", "circular", "--u", "6", "--workers", "1"});
  const auto four = run({"enum", "circular", "--u", "6", "--workers", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(json::parse(one.out)["count"] == 6);
}

TEST_CASE("installed binary pipes through stdin") {
  const std::string bin = CIRCGRAPH_BINARY;
  const auto status = [&](const std::string& script) {
    const int raw = std::system(("sh -c '" + script + "' >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status(bin + " build triangular 5 | " + bin + " verify -") == 0);
  CHECK(status(bin + " build star 7 | " + bin + " check -") == 0);
  CHECK(status("echo \"{}\" | " + bin + " check -") == 2);
  CHECK(status(bin + " --version") == 0);
  CHECK(status(bin + " build star") == 2);
}
