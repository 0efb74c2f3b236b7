#include <CLI11.hpp>
#include <json.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gkmloc.h"

using json = nlohmann::ordered_json;

namespace {

// exit codes: 0 pass, 1 check failure, 2 usage error, 3 arithmetic abort
int exit_code(int gkm_rc) {
  switch (gkm_rc) {
    case GKM_OK:
      return 0;
    case GKM_ERR_CHECK:
      return 1;
    case GKM_ERR_INVALID:
      return 2;
    default:
      return 3;
  }
}

struct Common {
  std::string builder;
  std::string graph_file;
  std::string root = "0";
  std::string mode = "cotangent";
  std::vector<long> degree;
  int jobs = 1;
  bool as_json = false;
};

void add_common(CLI::App* cmd, Common& c, bool degree_is_cap) {
  cmd->add_option("--builder", c.builder, "builder spec pn:<n> or slflag:<n>");
  cmd->add_option("--graph", c.graph_file, "GKM graph text file");
  cmd->add_option("--root", c.root, "root vertex (index or name)");
  cmd->add_option(degree_is_cap ? "--cap" : "--degree", c.degree,
                  degree_is_cap ? "degree cap, comma separated"
                                : "curve degree, comma separated")
      ->required()
      ->delimiter(',');
  cmd->add_option("--mode", c.mode, "untwisted | cotangent");
  cmd->add_option("--jobs", c.jobs, "parallelism width");
  cmd->add_flag("--json", c.as_json, "machine readable output");
}

int resolve(const Common& c, gkm_graph** g, int* root, int* mode) {
  if (c.builder.empty() == c.graph_file.empty()) {
    std::cerr << "error: exactly one of --builder / --graph is required\n";
    return 2;
  }
  int rc;
  if (!c.builder.empty()) {
    rc = gkm_graph_builder(c.builder.c_str(), g);
  } else {
    std::ifstream in(c.graph_file);
    if (!in) {
      std::cerr << "error: cannot read " << c.graph_file << "\n";
      return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    rc = gkm_graph_parse(ss.str().c_str(), g);
  }
  if (rc != GKM_OK) {
    std::cerr << "error: " << gkm_last_error() << "\n";
    return exit_code(rc);
  }
  *root = gkm_graph_find_vertex(*g, c.root.c_str());
  if (*root < 0) {
    std::cerr << "error: unknown root vertex " << c.root << "\n";
    return 2;
  }
  if (c.mode == "cotangent") {
    *mode = GKM_MODE_COTANGENT;
  } else if (c.mode == "untwisted" || c.mode == "plain") {
    *mode = GKM_MODE_UNTWISTED;
  } else {
    std::cerr << "error: unknown mode " << c.mode << "\n";
    return 2;
  }
  return 0;
}

// consume the C string and parse it
json take(char* s) {
  json j = json::parse(s);
  gkm_string_free(s);
  return j;
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string term_text(const json& jt) {
  std::ostringstream os;
  os << jt["factored"].get<std::string>() << "\n    = ["
     << jt["num"].get<std::string>() << "] / [" << jt["den"].get<std::string>()
     << "]\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact GKM localization engine"};
  app.require_subcommand(1);

  Common c_trees, c_contrib, c_jfun, c_adelic, c_balance, c_asym;
  bool dot = false, per_tree = false, oracle = false;
  std::string dirs;

  auto* cmd_trees = app.add_subcommand("trees", "enumerate fixed-point trees");
  add_common(cmd_trees, c_trees, false);
  cmd_trees->add_flag("--dot", dot, "emit DOT graphs");

  auto* cmd_contrib =
      app.add_subcommand("contrib", "per-tree localization contributions");
  add_common(cmd_contrib, c_contrib, false);
  cmd_contrib->add_flag("--per-tree", per_tree, "include provenance factors");

  auto* cmd_jfun = app.add_subcommand("jfun", "J-function terms");
  add_common(cmd_jfun, c_jfun, true);
  cmd_jfun->add_flag("--oracle", oracle, "compare against the closed form");

  auto* cmd_adelic =
      app.add_subcommand("verify-adelic", "residue recursion and pole checks");
  add_common(cmd_adelic, c_adelic, true);

  auto* cmd_balance = app.add_subcommand("balance", "balancedness of J-terms");
  add_common(cmd_balance, c_balance, true);

  auto* cmd_asym =
      app.add_subcommand("asymptotics", "per-tree growth degree table");
  add_common(cmd_asym, c_asym, false);
  cmd_asym->add_option("--dirs", dirs,
                       "directions, e.g. \"2,-1,-1;1,1,-2\" (default: sample)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  gkm_graph* g = nullptr;
  int root = 0, mode = 0, rc = 0;
  char* out = nullptr;

  if (cmd_trees->parsed()) {
    if (int e = resolve(c_trees, &g, &root, &mode)) return e;
    if (dot) {
      rc = gkm_trees_dot(g, root, c_trees.degree.data(), c_trees.degree.size(),
                         &out);
      if (rc == GKM_OK) {
        std::cout << out;
        gkm_string_free(out);
      }
    } else {
      rc = gkm_trees_json(g, root, c_trees.degree.data(),
                          c_trees.degree.size(), &out);
      if (rc == GKM_OK) {
        json j = take(out);
        std::ostringstream os;
        os << j["cohomological_count"].get<size_t>()
           << " cohomological trees, " << j["ktree_count"].get<size_t>()
           << " K-trees\n";
        for (const auto& t : j["trees"]) {
          os << t["tree"].get<std::string>() << "\n";
          for (const auto& k : t["ktrees"])
            os << "  " << k["tree"].get<std::string>() << "  (orbit "
               << k["orbit"].get<long>() << ")\n";
        }
        emit(j, c_trees.as_json, os.str());
      }
    }
  } else if (cmd_contrib->parsed()) {
    if (int e = resolve(c_contrib, &g, &root, &mode)) return e;
    rc = gkm_contrib_json(g, root, c_contrib.degree.data(),
                          c_contrib.degree.size(), mode, per_tree ? 1 : 0,
                          c_contrib.jobs, &out);
    if (rc == GKM_OK) {
      json j = take(out);
      std::ostringstream os;
      for (const auto& t : j["trees"]) {
        os << t["tree"].get<std::string>() << ":\n  " << term_text(t["value"]);
        if (per_tree)
          for (const auto& p : t["provenance"])
            os << "    " << p["part"].get<std::string>() << ": "
               << p["value"].get<std::string>() << "\n";
      }
      os << "total:\n  " << term_text(j["total"]);
      emit(j, c_contrib.as_json, os.str());
    }
  } else if (cmd_jfun->parsed()) {
    if (int e = resolve(c_jfun, &g, &root, &mode)) return e;
    rc = gkm_jfun_json(g, root, mode, c_jfun.degree.data(),
                       c_jfun.degree.size(), oracle ? 1 : 0, c_jfun.jobs, &out);
    if (rc == GKM_OK || rc == GKM_ERR_CHECK) {
      json j = take(out);
      std::ostringstream os;
      for (const auto& t : j["terms"]) {
        os << "degree " << t["degree"].dump() << ": " << term_text(t["term"]);
        if (t.contains("oracle_equal"))
          os << "  oracle: "
             << (t["oracle_equal"].get<bool>() ? "equal" : "NOT equal") << "\n";
      }
      emit(j, c_jfun.as_json, os.str());
    }
  } else if (cmd_adelic->parsed()) {
    if (int e = resolve(c_adelic, &g, &root, &mode)) return e;
    rc = gkm_verify_adelic_json(g, root, mode, c_adelic.degree.data(),
                                c_adelic.degree.size(), c_adelic.jobs, &out);
    if (rc == GKM_OK || rc == GKM_ERR_CHECK) {
      json j = take(out);
      std::ostringstream os;
      for (const auto& d : j["degrees"]) {
        os << "degree " << d["degree"].dump() << ": no-regular-part "
           << (d["no_regular_part"].get<bool>() ? "pass" : "FAIL") << "\n";
        for (const auto& p : d["poles"])
          os << "  pole " << p["locus"].get<std::string>() << " order "
             << p["order"].get<long>()
             << (p["allowed"].get<bool>() ? " (allowed)" : " (FORBIDDEN)")
             << "\n";
        for (const auto& r : d["recursions"])
          os << "  edge " << r["edge"].get<long>() << " m " << r["m"].get<long>()
             << " sector " << r["sector"].get<long>() << ": "
             << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
      }
      os << (j["pass"].get<bool>() ? "all checks passed\n" : "FAILED\n");
      emit(j, c_adelic.as_json, os.str());
    }
  } else if (cmd_balance->parsed()) {
    if (int e = resolve(c_balance, &g, &root, &mode)) return e;
    rc = gkm_balance_json(g, root, mode, c_balance.degree.data(),
                          c_balance.degree.size(), c_balance.jobs, &out);
    if (rc == GKM_OK || rc == GKM_ERR_CHECK) {
      json j = take(out);
      std::ostringstream os;
      for (const auto& d : j["degrees"]) {
        os << "degree " << d["degree"].dump() << ": "
           << (d["balanced"].get<bool>() ? "balanced" : "unbalanced");
        if (d.contains("witness") && !d["witness"].is_null())
          os << "  witness sigma = " << d["witness"].dump();
        os << "\n";
      }
      emit(j, c_balance.as_json, os.str());
    }
  } else if (cmd_asym->parsed()) {
    if (int e = resolve(c_asym, &g, &root, &mode)) return e;
    rc = gkm_asymptotics_json(g, root, mode, c_asym.degree.data(),
                              c_asym.degree.size(),
                              dirs.empty() ? nullptr : dirs.c_str(), &out);
    if (rc == GKM_OK) {
      json j = take(out);
      std::ostringstream os;
      os << "directions: " << j["directions"].dump() << "\n";
      for (const auto& t : j["trees"])
        os << t["tree"].get<std::string>() << "\n  exact    "
           << t["exact_degrees"].dump() << "\n  predicted "
           << t["predicted_degrees"].dump() << "\n";
      emit(j, c_asym.as_json, os.str());
    }
  }

  if (rc != GKM_OK && rc != GKM_ERR_CHECK)
    std::cerr << "error: " << gkm_last_error() << "\n";
  gkm_graph_free(g);
  return exit_code(rc);
}
