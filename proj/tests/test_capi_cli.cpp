#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <array>
#include <cstdio>
#include <set>
#include <string>

#include "gkmloc.h"

using json = nlohmann::ordered_json;

namespace {

struct Graph {
  gkm_graph* g = nullptr;
  ~Graph() { gkm_graph_free(g); }
};

std::string take(char* s) {
  std::string r(s);
  gkm_string_free(s);
  return r;
}

// run a CLI command line, capture stdout and the exit code
std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string(GKMLOC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WEXITSTATUS(st), out};
}

}  // namespace

TEST_CASE("schema version") {
  CHECK(std::string(gkm_schema_version()) == "1.0.0");
}

TEST_CASE("graph builders, parse/serialize roundtrip, validation") {
  Graph h;
  REQUIRE(gkm_graph_builder("pn:2", &h.g) == GKM_OK);
  char* txt = nullptr;
  REQUIRE(gkm_graph_serialize(h.g, &txt) == GKM_OK);
  std::string ser = take(txt);
  CHECK(ser.find("rank 3 picard 1") != std::string::npos);
  Graph h2;
  REQUIRE(gkm_graph_parse(ser.c_str(), &h2.g) == GKM_OK);
  char* ser2 = nullptr;
  REQUIRE(gkm_graph_serialize(h2.g, &ser2) == GKM_OK);
  CHECK(take(ser2) == ser);
  char* rep = nullptr;
  CHECK(gkm_graph_validate(h.g, &rep) == GKM_OK);
  json j = json::parse(take(rep));
  CHECK(j["ok"] == true);
  CHECK(j["schema"] == "1.0.0");

  Graph bad;
  CHECK(gkm_graph_builder("pn", &bad.g) == GKM_ERR_INVALID);
  CHECK(gkm_graph_builder("torus:4", &bad.g) == GKM_ERR_INVALID);
  CHECK(gkm_graph_builder("pn:x", &bad.g) == GKM_ERR_INVALID);
  CHECK(std::string(gkm_last_error()).size() > 0);
  CHECK(gkm_graph_parse("rank nonsense", &bad.g) == GKM_ERR_INVALID);
}

TEST_CASE("vertex lookup") {
  Graph h;
  REQUIRE(gkm_graph_builder("slflag:3", &h.g) == GKM_OK);
  CHECK(gkm_graph_find_vertex(h.g, "e") >= 0);
  CHECK(gkm_graph_find_vertex(h.g, "nope") == -1);
  Graph p;
  REQUIRE(gkm_graph_builder("pn:1", &p.g) == GKM_OK);
  CHECK(gkm_graph_find_vertex(p.g, "0") == 0);
  CHECK(gkm_graph_find_vertex(p.g, "1") == 1);
}

TEST_CASE("tree enumeration through the C API") {
  Graph h;
  REQUIRE(gkm_graph_builder("pn:1", &h.g) == GKM_OK);
  long d = 2;
  char* out = nullptr;
  REQUIRE(gkm_trees_json(h.g, 0, &d, 1, &out) == GKM_OK);
  json j = json::parse(take(out));
  CHECK(j["cohomological_count"] == 3);
  CHECK(j["ktree_count"] == 4);
  REQUIRE(gkm_trees_dot(h.g, 0, &d, 1, &out) == GKM_OK);
  std::string dot = take(out);
  CHECK(dot.find("graph ktree") != std::string::npos);
  // bad arguments
  CHECK(gkm_trees_json(h.g, 99, &d, 1, &out) == GKM_ERR_INVALID);
  CHECK(gkm_trees_json(h.g, 0, &d, 2, &out) == GKM_ERR_INVALID);
}

TEST_CASE("contributions and J-function oracle through the C API") {
  Graph h;
  REQUIRE(gkm_graph_builder("pn:1", &h.g) == GKM_OK);
  long d = 2;
  char* out = nullptr;
  REQUIRE(gkm_contrib_json(h.g, 0, &d, 1, GKM_MODE_COTANGENT, 1, 2, &out) ==
          GKM_OK);
  json jc = json::parse(take(out));
  CHECK(jc["trees"].size() == 4);
  CHECK(jc["trees"][0].contains("provenance"));
  CHECK(jc.contains("total"));

  long cap = 2;
  REQUIRE(gkm_jfun_json(h.g, 0, GKM_MODE_COTANGENT, &cap, 1, 1, 2, &out) ==
          GKM_OK);
  json jj = json::parse(take(out));
  CHECK(jj["oracle_all_equal"] == true);
  CHECK(jj["terms"].size() == 3);  // degrees 0, 1, 2

  // oracle is refused off the projective family
  Graph f;
  REQUIRE(gkm_graph_builder("slflag:3", &f.g) == GKM_OK);
  long cap2[2] = {1, 1};
  CHECK(gkm_jfun_json(f.g, 0, GKM_MODE_COTANGENT, cap2, 2, 1, 1, &out) ==
        GKM_ERR_INVALID);
}

TEST_CASE("adelic and balance verdicts through the C API") {
  Graph h;
  REQUIRE(gkm_graph_builder("pn:1", &h.g) == GKM_OK);
  long cap = 2;
  char* out = nullptr;
  REQUIRE(gkm_verify_adelic_json(h.g, 0, GKM_MODE_COTANGENT, &cap, 1, 2,
                                 &out) == GKM_OK);
  json ja = json::parse(take(out));
  CHECK(ja["pass"] == true);
  REQUIRE(gkm_balance_json(h.g, 0, GKM_MODE_COTANGENT, &cap, 1, 2, &out) ==
          GKM_OK);
  json jb = json::parse(take(out));
  CHECK(jb["pass"] == true);

  Graph f;
  REQUIRE(gkm_graph_builder("slflag:3", &f.g) == GKM_OK);
  int e = gkm_graph_find_vertex(f.g, "e");
  long cap2[2] = {1, 1};
  CHECK(gkm_balance_json(f.g, e, GKM_MODE_COTANGENT, cap2, 2, 4, &out) ==
        GKM_ERR_CHECK);
  json ju = json::parse(take(out));
  CHECK(ju["pass"] == false);
  bool witnessed = false;
  for (const auto& d : ju["degrees"])
    if (d["balanced"] == false && !d["witness"].is_null()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("asymptotics table through the C API") {
  Graph f;
  REQUIRE(gkm_graph_builder("slflag:3", &f.g) == GKM_OK);
  int e = gkm_graph_find_vertex(f.g, "e");
  long deg[2] = {1, 1};
  char* out = nullptr;
  REQUIRE(gkm_asymptotics_json(f.g, e, GKM_MODE_COTANGENT, deg, 2,
                               "2,-1,-1;1,1,-2", &out) == GKM_OK);
  json j = json::parse(take(out));
  REQUIRE(j["trees"].size() == 4);
  // the four profile pairs of the degree (1,1) table
  std::multiset<std::pair<std::string, std::string>> profs;
  for (const auto& t : j["trees"])
    profs.insert({t["exact_degrees"][0].get<std::string>(),
                  t["exact_degrees"][1].get<std::string>()});
  std::multiset<std::pair<std::string, std::string>> want = {
      {"0", "0"}, {"3", "0"}, {"3", "3"}, {"0", "3"}};
  CHECK(profs == want);
  CHECK(gkm_asymptotics_json(f.g, e, GKM_MODE_COTANGENT, deg, 2, "1,2", &out) ==
        GKM_ERR_INVALID);
}

TEST_CASE("CLI: jfun oracle, trees, balance, exit codes") {
  auto [rc1, out1] =
      run_cli("jfun --builder pn:1 --root 0 --mode cotangent --cap 2 --oracle");
  CHECK(rc1 == 0);
  CHECK(out1.find("oracle: equal") != std::string::npos);

  auto [rc2, out2] = run_cli("trees --builder slflag:3 --root e --degree 1,1 --dot");
  CHECK(rc2 == 0);
  CHECK(out2.find("graph ktree") != std::string::npos);

  auto [rc3, out3] =
      run_cli("balance --builder slflag:3 --root e --cap 1,1 --jobs 4");
  CHECK(rc3 == 1);
  CHECK(out3.find("unbalanced") != std::string::npos);
  CHECK(out3.find("witness") != std::string::npos);

  auto [rc4, out4] = run_cli("jfun --builder pn:1 --root 0");  // missing --cap
  CHECK(rc4 == 2);
  auto [rc5, out5] = run_cli("jfun --builder nope:1 --root 0 --cap 1");
  CHECK(rc5 == 2);
  auto [rc6, out6] = run_cli("frobnicate");
  CHECK(rc6 == 2);
}

TEST_CASE("CLI: identical config is byte-identical across parallelism widths") {
  auto [rc1, out1] =
      run_cli("jfun --builder pn:1 --root 0 --cap 2 --oracle --json --jobs 1");
  auto [rc2, out2] =
      run_cli("jfun --builder pn:1 --root 0 --cap 2 --oracle --json --jobs 4");
  CHECK(rc1 == 0);
  CHECK(rc2 == 0);
  CHECK(out1 == out2);
  auto [rc3, out3] =
      run_cli("contrib --builder pn:2 --root 0 --degree 1 --json --jobs 1");
  auto [rc4, out4] =
      run_cli("contrib --builder pn:2 --root 0 --degree 1 --json --jobs 3");
  CHECK(rc3 == 0);
  CHECK(out3 == out4);
}
