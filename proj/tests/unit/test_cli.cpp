#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "fppshield");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = fppshield::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze P_12 as JSON") {
  auto r = run({"analyze", "--pm", "12", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["fppGraph"] == true);
  CHECK(j["lShielded"] == true);
  CHECK(j["uShielded"] == true);
  CHECK(j["n"] == 36);
}

TEST_CASE("analyze text output for a family") {
  auto r = run({"analyze", "--family", "chain", "--n", "3"});
  CHECK(r.code == 0);
  CHECK_FALSE(r.out.empty());
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"analyze", "--file", "/nonexistent/poset.txt"}).code == 2);
  CHECK(run({"analyze", "--pm", "5"}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", "--pm", "4", "--family", "chain"}).code == 2);
  CHECK(run({"verify", "--only", "NOPE"}).code == 2);
}

TEST_CASE("covers") {
  auto r = run({"covers", "--family", "antichain", "--n", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["upper"].size() == 2);
  CHECK(j["lower"].size() == 0);
}

TEST_CASE("fpp") {
  auto p2 = run({"fpp", "--pm", "2", "--format", "json"});
  CHECK(p2.code == 0);
  auto j = nlohmann::json::parse(p2.out);
  CHECK(j["fpp"] == false);
  CHECK(j["counterexample"].size() == 6);
  CHECK(nlohmann::json::parse(run({"fpp", "--family", "chain", "--n", "5", "--format", "json"})
                                  .out)["fpp"] == true);
  CHECK(run({"fpp", "--pm", "4", "--budget", "1"}).code == 3);
}

TEST_CASE("generate") {
  auto r = run({"generate", "--family", "chain", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "p 3\ne 0 1\ne 1 2\n");
  auto dot = run({"generate", "--pm", "2", "--format", "dot"});
  CHECK(dot.out.find("digraph") != std::string::npos);
}

TEST_CASE("verify") {
  auto ok = run({"verify", "--max-n", "4", "--only", "THEOREM1,THEOREM2"});
  CHECK(ok.code == 0);
  auto j = nlohmann::json::parse(
      run({"verify", "--max-n", "4", "--only", "THEOREM1", "--format", "json"}).out);
  CHECK(j["posetsTotal"] == 242);
  CHECK(run({"verify", "--max-n", "3", "--only", "LEMMA1"}).code == 1);
  CHECK(run({"verify", "--max-n", "7"}).code == 3);
  CHECK(run({"verify", "--max-n", "6"}).code == 3);
}

} // TEST_SUITE
