#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cli_runner.hpp"
#include "tenscat/category.hpp"
#include "tenscat/io.hpp"

using cliutil::run_cli;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(std::string name) : path("cli_test_" + std::move(name)) {
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("radical subcommand text and JSON output") {
  const auto text = run_cli("radical --lambda [1] --mu [1]");
  CHECK(text.exit_code == 0);
  CHECK(text.output == "layer 0\n([1],[1])  1\nlayer 1\n([],[])  1\n");

  const auto as_json = run_cli("radical --lambda [1] --mu [1] --json");
  REQUIRE(as_json.exit_code == 0);
  const json doc = json::parse(as_json.output);
  CHECK(doc.at("kind") == "layers");
  CHECK(doc.at("meta").at("command") == "radical");
  const json expected = json::array({{{"([1],[1])", 1}}, {{"([],[])", 1}}});
  CHECK(doc.at("payload") == expected);
}

TEST_CASE("integer subcommands") {
  CHECK(run_cli("lr --outer [2] --a [1] --b [1]").output == "1\n");
  CHECK(run_cli("lr --outer [3,2,1] --a [2,1] --b [2,1]").output == "2\n");
  CHECK(run_cli("syt --diagram [2,1]").output == "2\n");
  CHECK(run_cli("hom-dim --src 2,1 --tgt 1,0").output == "2\n");
  CHECK(run_cli("ext --src \"([1],[1])\" --tgt \"([],[])\" --i 1").output == "1\n");
  CHECK(run_cli("weight-mult --p 1 --q 1 --i 2 --j 3 --chi 1:1,3:-1").output == "1\n");
  CHECK(run_cli("weight-mult --p 1 --q 1 --i 2 --j 2 --chi \"\"").output == "2\n");
}

TEST_CASE("dual subcommand prints the swapped label") {
  const auto res = run_cli("dual --label \"([1],[])\"");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "([],[1])\n");
}

TEST_CASE("malformed literals exit 2 with a caret message") {
  const auto res = run_cli("lr --outer [2,x] --a [1] --b [1]");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("error: expected integer in diagram literal") != std::string::npos);
  CHECK(res.output.find("[2,x]") != std::string::npos);
  CHECK(res.output.find("     ^") != std::string::npos);

  CHECK(run_cli("radical --lambda [1,2] --mu []").exit_code == 2);
  CHECK(run_cli("ext --src \"([1],[1]\" --tgt \"([],[])\" --i 0").exit_code == 2);
  CHECK(run_cli("weight-mult --p 1 --q 0 --i 1 --j 1 --chi 1:0").exit_code == 2);
  CHECK(run_cli("hom-dim --src 1 --tgt 1,0").exit_code == 2);
}

TEST_CASE("unknown subcommands and bad flags exit 2 with usage") {
  const auto unknown = run_cli("no-such-command");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.output.find("Usage") != std::string::npos);

  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("lr --outer [2]").exit_code == 2);       // missing required flags
  CHECK(run_cli("lr --bogus 1").exit_code == 2);
}

TEST_CASE("resource bounds exit 3") {
  CHECK(run_cli("lr --outer [21] --a [21] --b []").exit_code == 3);
  CHECK(run_cli("jh-mixed --p 7 --q 0").exit_code == 3);
  CHECK(run_cli("weight-enum --p 6 --q 0 --i 2 --j 2").exit_code == 3);
  CHECK(run_cli("hom-dim --src 7,0 --tgt 7,0").exit_code == 3);
  CHECK(run_cli("syt --diagram [26]").exit_code == 3);

  // bounds are flags with module defaults
  CHECK(run_cli("lr --outer [4] --a [2] --b [2] --max-size 3").exit_code == 3);
  CHECK(run_cli("lr --outer [4] --a [2] --b [2] --max-size 4").output == "1\n");
}

TEST_CASE("JSON output round-trips byte-identically") {
  for (const char* args :
       {"jh-projective --lambda [2] --mu [1] --json",
        "weight-enum --p 1 --q 1 --i 2 --j 2 --json",
        "hom-basis --src 2,1 --tgt 1,0 --json",
        "ext-table --max-boxes 2 --json"}) {
    const auto res = run_cli(args);
    REQUIRE(res.exit_code == 0);
    std::string body = res.output;
    REQUIRE(!body.empty());
    REQUIRE(body.back() == '\n');
    body.pop_back();
    CHECK(json::parse(body).dump(2) == body);
  }
}

TEST_CASE("repeated runs are byte-identical") {
  const std::string args = "ext-table --max-boxes 2 --json";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("ext-table agrees with the radical cross-check identity") {
  const auto res = run_cli("ext-table --max-boxes 2 --json");
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.output);
  std::size_t checked = 0;
  for (const json& entry : doc.at("payload")) {
    const tenscat::SimpleLabel src = tenscat::parse_label(entry.at("src"));
    const tenscat::SimpleLabel tgt = tenscat::parse_label(entry.at("tgt"));
    const int degree = entry.at("i");
    const auto filt = tenscat::radical_layers(src.lam, src.mu.conjugate());
    REQUIRE(degree < static_cast<int>(filt.layers.size()));
    const tenscat::SimpleLabel wanted{tgt.lam, tgt.mu.conjugate()};
    auto it = filt.layers[static_cast<std::size_t>(degree)].find(wanted);
    REQUIRE(it != filt.layers[static_cast<std::size_t>(degree)].end());
    CHECK(it->second == entry.at("dim").get<std::int64_t>());
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("LR cache file: reuse, version gate, corruption") {
  TempFile cache("lr.json");
  const std::string args = "jh-projective --lambda [2,1] --mu [2] --cache " + cache.path;

  const auto cold = run_cli(args);
  REQUIRE(cold.exit_code == 0);
  {
    std::ifstream in(cache.path);
    REQUIRE(in.good());
    const json j = json::parse(in);
    CHECK(j.at("format") == "tenscat-lr-cache");
    CHECK(j.at("version") == 1);
    CHECK(!j.at("records").empty());
  }

  const auto warm = run_cli(args);
  CHECK(warm.exit_code == 0);
  CHECK(warm.output == cold.output);

  // stale version: warned about, ignored, output unchanged
  {
    std::ifstream in(cache.path);
    json j = json::parse(in);
    j["version"] = 99;
    std::ofstream out(cache.path);
    out << j.dump();
  }
  const auto stale = run_cli(args);
  CHECK(stale.exit_code == 0);
  CHECK(stale.output.find("warning:") != std::string::npos);
  CHECK(stale.output.find(cold.output) != std::string::npos);

  // corrupt file: same behaviour
  {
    std::ofstream out(cache.path);
    out << "not json at all";
  }
  const auto corrupt = run_cli(args);
  CHECK(corrupt.exit_code == 0);
  CHECK(corrupt.output.find("warning:") != std::string::npos);
  CHECK(corrupt.output.find(cold.output) != std::string::npos);

  // the TENSCAT_CACHE environment variable selects the cache path too
  TempFile env_cache("lr_env.json");
  const auto via_env =
      run_cli("lr --outer [2] --a [1] --b [1]", "TENSCAT_CACHE=" + env_cache.path);
  CHECK(via_env.exit_code == 0);
  CHECK(via_env.output == "1\n");
  std::ifstream in(env_cache.path);
  CHECK(in.good());
}

TEST_CASE("serial flags yield identical output") {
  const auto parallel = run_cli("ext-table --max-boxes 2");
  const auto serial = run_cli("ext-table --max-boxes 2 --serial");
  CHECK(parallel.exit_code == 0);
  CHECK(parallel.output == serial.output);

  const auto jm_par = run_cli("jh-mixed --p 3 --q 2");
  const auto jm_ser = run_cli("jh-mixed --p 3 --q 2 --serial");
  CHECK(jm_par.output == jm_ser.output);
}
