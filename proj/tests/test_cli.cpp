#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "kgraphkit/cli.hpp"

using namespace kgraphkit;
using Json = nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(KGRAPHKIT_FIXTURES) + "/" + name + ".kg"; }

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = "kgraphkit_cli_" + name;
  std::ofstream(path) << text;
  return path;
}

Json run_json(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  args.push_back("--json");
  const RunResult r = run(args, env);
  REQUIRE_MESSAGE(r.exit_code == 0, r.err << r.out);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("cli usage errors exit 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate", fixture("1-loop")}).exit_code == 2);
  CHECK(run({"validate"}).exit_code == 2);
  CHECK(run({"validate", "no/such/file.kg"}).exit_code == 2);
  CHECK(run({"validate", fixture("1-loop"), "--budget-degree", "1,2"}).exit_code == 2);
  CHECK(run({"validate", fixture("1-loop"), "--budget-degree", "x"}).exit_code == 2);
  CHECK(run({"validate", fixture("1-loop")}, "degree=oops").exit_code == 2);
  CHECK(run({"desourcify", fixture("1-loop"), "--window", "0"}).exit_code == 2);
  const RunResult help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("cli validate") {
  const Json j = run_json({"validate", fixture("omega-2-11")});
  CHECK(j["schema"] == "kgraphkit/1");
  CHECK(j["command"] == "validate");
  CHECK(j["result"]["valid"] == true);
  CHECK(j["result"]["rank"] == 2);
  CHECK(j["result"]["vertices"] == 4);
  CHECK(j["result"]["edges"] == 4);
  CHECK(j["result"]["squares"] == 1);
}

TEST_CASE("cli reports parse errors with exit 1") {
  const std::string path = temp_file("bad.kg", "rank 2\nvertex a\nvertex b\nedge e color=3 range=a source=b\n");
  const RunResult r = run({"validate", path, "--json"});
  CHECK(r.exit_code == 1);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["valid"] == false);
  CHECK(j["result"]["error"]["kind"] == "ParseError");
  CHECK(j["result"]["error"]["message"].get<std::string>().find("line 4") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli rejects non-locally-convex graphs for analysis") {
  const std::string path = temp_file("nlc.kg",
                                     "rank 2\nvertex a\nvertex b\nvertex c\n"
                                     "edge e color=1 range=a source=b\nedge f color=2 range=a source=c\n");
  CHECK(run({"validate", path}).exit_code == 0);
  const RunResult shape = run({"shape", path, "--json"});
  CHECK(shape.exit_code == 1);
  CHECK(Json::parse(shape.out)["result"]["locally_convex"] == false);
  for (const char* cmd : {"ideals", "tails", "periodicity", "prim", "decompose", "chains"}) {
    CAPTURE(cmd);
    CHECK(run({cmd, path}).exit_code == 1);
  }
  std::remove(path.c_str());
}

TEST_CASE("cli output is deterministic") {
  for (const char* cmd : {"validate", "shape", "paths", "ideals", "tails", "periodicity", "prim", "decompose",
                          "desourcify", "chains"}) {
    for (const char* name : {"loop-to-loop", "omega-2-11", "isolated-3"}) {
      CAPTURE(cmd);
      CAPTURE(name);
      const RunResult a = run({cmd, fixture(name)});
      const RunResult b = run({cmd, fixture(name)});
      CHECK(a.exit_code == 0);
      CHECK(a.out == b.out);
      const RunResult ja = run({cmd, fixture(name), "--json"});
      const RunResult jb = run({cmd, fixture(name), "--json"});
      CHECK(ja.out == jb.out);
      CHECK_NOTHROW((void)Json::parse(ja.out));
    }
  }
}

TEST_CASE("cli decompose splits two isolated vertices") {
  const Json j = run_json({"decompose", fixture("isolated-2")});
  CHECK(j["result"]["n"] == 2);
  CHECK(j["result"]["unique"] == true);
  CHECK(j["result"]["components"].size() == 2);
}

TEST_CASE("cli prim on a single loop") {
  const Json j = run_json({"prim", fixture("1-loop")});
  REQUIRE(j["result"]["count"] == 1);
  const Json& rec = j["result"]["records"][0];
  CHECK(rec["per"] == Json::array({Json::array({1})}));
  CHECK(rec["character_rank"] == 1);
  CHECK(rec["verdict"] == "periodic");
  CHECK(rec["flags"]["maximal_ideal"] == true);
}

TEST_CASE("cli periodicity and ideals") {
  const Json p = run_json({"periodicity", fixture("2-cycle")});
  CHECK(p["result"]["per"]["generators"] == Json::array({Json::array({2})}));
  const Json i = run_json({"ideals", fixture("isolated-2")});
  CHECK(i["result"]["size"] == 4);
  CHECK(i["result"]["cofinal"] == false);
  const Json t = run_json({"tails", fixture("2-loop-vertex")});
  REQUIRE(t["result"]["count"] == 1);
  CHECK(t["result"]["tails"][0]["verdict"] == "aperiodic");
}

TEST_CASE("cli budget precedence") {
  const std::string path = temp_file("budget.kg", "rank 1\nvertex v\nedge f color=1 range=v source=v\nbudget degree=4\n");
  CHECK(run_json({"validate", path})["budget"]["degree"] == "4");
  CHECK(run_json({"validate", path}, "degree=3 presentation=5")["budget"]["degree"] == "4");
  CHECK(run_json({"validate", path}, "degree=3 presentation=5")["budget"]["presentation"] == 5);
  CHECK(run_json({"validate", path, "--budget-degree", "2"}, "degree=3")["budget"]["degree"] == "2");
  CHECK(run_json({"validate", fixture("1-loop")}, "degree=3")["budget"]["degree"] == "3");
  CHECK(run_json({"validate", fixture("1-loop")})["budget"]["degree"] == "6");
  std::remove(path.c_str());
}

TEST_CASE("cli desourcify window") {
  const Json j = run_json({"desourcify", fixture("edge-v-w"), "--window", "3"});
  CHECK(j["result"]["window"] == "3");
  CHECK(j["result"]["interior_has_no_sources"] == true);
  CHECK(j["result"]["vertex_count"].get<int>() > 2);
}

TEST_CASE("cli writes DOT") {
  const std::string path = "kgraphkit_cli_out.dot";
  CHECK(run({"decompose", fixture("isolated-2"), "--dot", path}).exit_code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().rfind("digraph decomposition", 0) == 0);
  std::remove(path.c_str());
}

TEST_CASE("cli text report mirrors the JSON") {
  const RunResult r = run({"validate", fixture("1-loop")});
  CHECK(r.out.find("schema: kgraphkit/1\n") != std::string::npos);
  CHECK(r.out.find("  valid: true\n") != std::string::npos);
}
