#include "gkmloc.h"

#include <json.hpp>
#include <cstring>
#include <sstream>
#include <string>

#include "../core/adelic.hpp"
#include "../core/asymptotics.hpp"
#include "../core/jfunction.hpp"
#include "../core/trees.hpp"

using json = nlohmann::ordered_json;
using namespace gkmloc;

struct gkm_graph {
  GkmGraph g;
  int pn = -1;  // builder tag, for oracle applicability
};

namespace {

constexpr const char* kSchema = "1.0.0";

thread_local std::string g_last_error;

int fail(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

char* dup_string(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

TwistMode to_mode(int mode) {
  return mode == GKM_MODE_COTANGENT ? TwistMode::cotangent
                                    : TwistMode::untwisted;
}

std::vector<long> to_vec(const long* p, size_t n) {
  return std::vector<long>(p, p + n);
}

// all degree vectors 0 <= d <= cap componentwise, in lexicographic order
std::vector<std::vector<long>> degree_box(const std::vector<long>& cap) {
  std::vector<std::vector<long>> out;
  std::vector<long> d(cap.size(), 0);
  while (true) {
    out.push_back(d);
    size_t i = d.size();
    while (i > 0) {
      i--;
      if (d[i] < cap[i]) {
        d[i]++;
        break;
      }
      d[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool is_zero_deg(const std::vector<long>& d) {
  for (long x : d)
    if (x != 0) return false;
  return true;
}

json rat_json(const Rat& r) { return r.get_str(); }

json ratfun_json(const RatFun& f, size_t na) {
  json j;
  j["factored"] = f.str(na);
  auto [num, den] = f.expand_frac();
  j["num"] = num.str(na);
  j["den"] = den.str(na);
  return j;
}

json degs_json(const std::vector<long>& d) { return json(d); }

// deterministic witness search for an unbalanced function
json witness_direction(const RatFun& f, size_t na) {
  std::vector<std::vector<Rat>> cands;
  for (size_t i = 0; i < na; i++)
    for (int sgn : {1, -1}) {
      std::vector<Rat> s(na, Rat(0));
      s[i] = sgn;
      cands.push_back(s);
    }
  auto sampled = sample_directions(na, 200, 7);
  cands.insert(cands.end(), sampled.begin(), sampled.end());
  for (const auto& s : cands) {
    auto d = f.newton_degree(s, na);
    if (d && *d > 0) {
      json w = json::array();
      for (const auto& x : s) w.push_back(rat_json(x));
      return w;
    }
  }
  return nullptr;
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return fail(GKM_ERR_MATH, e.what());
  }
}

}  // namespace

extern "C" {

const char* gkm_schema_version(void) { return kSchema; }

const char* gkm_last_error(void) { return g_last_error.c_str(); }

void gkm_string_free(char* s) { delete[] s; }

void gkm_graph_free(gkm_graph* g) { delete g; }

int gkm_graph_builder(const char* spec, gkm_graph** out) {
  if (!spec || !out) return fail(GKM_ERR_INVALID, "null argument");
  std::string s(spec);
  auto colon = s.find(':');
  if (colon == std::string::npos)
    return fail(GKM_ERR_INVALID, "builder spec must be pn:<n> or slflag:<n>");
  std::string kind = s.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(s.substr(colon + 1));
  } catch (...) {
    return fail(GKM_ERR_INVALID, "bad builder parameter: " + s);
  }
  return guarded([&]() -> int {
    auto* h = new gkm_graph;
    if (kind == "pn" && n >= 1) {
      h->g = build_projective_space(n);
      h->pn = n;
    } else if (kind == "slflag" && n >= 2) {
      h->g = build_flag_sl(n);
    } else {
      delete h;
      return fail(GKM_ERR_INVALID, "unknown builder: " + s);
    }
    *out = h;
    return GKM_OK;
  });
}

int gkm_graph_parse(const char* text, gkm_graph** out) {
  if (!text || !out) return fail(GKM_ERR_INVALID, "null argument");
  try {
    auto* h = new gkm_graph;
    h->g = parse_graph(text);
    *out = h;
    return GKM_OK;
  } catch (const std::exception& e) {
    return fail(GKM_ERR_INVALID, e.what());
  }
}

int gkm_graph_serialize(const gkm_graph* g, char** out) {
  if (!g || !out) return fail(GKM_ERR_INVALID, "null argument");
  *out = dup_string(serialize_graph(g->g));
  return GKM_OK;
}

int gkm_graph_validate(const gkm_graph* g, char** report) {
  if (!g) return fail(GKM_ERR_INVALID, "null argument");
  ValidationReport r = validate_gkm(g->g);
  if (report) {
    json j;
    j["schema"] = kSchema;
    j["ok"] = r.ok();
    j["violations"] = r.violations;
    *report = dup_string(j.dump(2));
  }
  return r.ok() ? GKM_OK : GKM_ERR_CHECK;
}

int gkm_graph_find_vertex(const gkm_graph* g, const char* name) {
  if (!g || !name) return -1;
  return g->g.find_vertex(name);
}

int gkm_trees_json(const gkm_graph* g, int root, const long* degree,
                   size_t ndeg, char** json_out) {
  if (!g || !degree || !json_out) return fail(GKM_ERR_INVALID, "null argument");
  if (root < 0 || (size_t)root >= g->g.verts.size())
    return fail(GKM_ERR_INVALID, "root vertex out of range");
  if (ndeg != g->g.picard)
    return fail(GKM_ERR_INVALID, "degree length must equal picard rank");
  return guarded([&]() -> int {
    auto deg = to_vec(degree, ndeg);
    json j;
    j["schema"] = kSchema;
    j["root"] = g->g.verts[root];
    j["degree"] = degs_json(deg);
    json trees = json::array();
    size_t nk = 0;
    for (const auto& t : enumerate_trees(g->g, root, deg)) {
      json jt;
      jt["tree"] = canonical_form(t);
      json ks = json::array();
      for (const auto& [kt, orbit] : promote_with_orbits(t)) {
        json jk;
        jk["tree"] = canonical_form(kt);
        jk["orbit"] = orbit;
        ks.push_back(jk);
        nk++;
      }
      jt["ktrees"] = ks;
      trees.push_back(jt);
    }
    j["cohomological_count"] = trees.size();
    j["ktree_count"] = nk;
    j["trees"] = trees;
    *json_out = dup_string(j.dump(2));
    return GKM_OK;
  });
}

int gkm_trees_dot(const gkm_graph* g, int root, const long* degree, size_t ndeg,
                  char** dot_out) {
  if (!g || !degree || !dot_out) return fail(GKM_ERR_INVALID, "null argument");
  if (ndeg != g->g.picard)
    return fail(GKM_ERR_INVALID, "degree length must equal picard rank");
  return guarded([&]() -> int {
    std::ostringstream os;
    for (const auto& t : enumerate_trees(g->g, root, to_vec(degree, ndeg)))
      for (const auto& kt : promote(t)) os << to_dot(g->g, kt) << "\n";
    *dot_out = dup_string(os.str());
    return GKM_OK;
  });
}

int gkm_contrib_json(const gkm_graph* g, int root, const long* degree,
                     size_t ndeg, int mode, int per_tree, int jobs,
                     char** json_out) {
  if (!g || !degree || !json_out) return fail(GKM_ERR_INVALID, "null argument");
  if (ndeg != g->g.picard)
    return fail(GKM_ERR_INVALID, "degree length must equal picard rank");
  return guarded([&]() -> int {
    auto deg = to_vec(degree, ndeg);
    TwistMode m = to_mode(mode);
    size_t na = g->g.rank;
    json j;
    j["schema"] = kSchema;
    j["root"] = g->g.verts[root];
    j["degree"] = degs_json(deg);
    j["mode"] = mode == GKM_MODE_COTANGENT ? "cotangent" : "untwisted";
    json trees = json::array();
    for (const auto& t : enumerate_trees(g->g, root, deg))
      for (const auto& kt : promote(t)) {
        Contribution c = tree_contribution(g->g, kt, m);
        json jt;
        jt["tree"] = canonical_form(kt);
        jt["value"] = ratfun_json(c.value, na);
        if (per_tree) {
          json prov = json::array();
          for (const auto& [label, f] : c.provenance) {
            json jp;
            jp["part"] = label;
            jp["value"] = f.str(na);
            prov.push_back(jp);
          }
          jt["provenance"] = prov;
        }
        trees.push_back(jt);
      }
    j["trees"] = trees;
    j["total"] = ratfun_json(sum_over_trees(g->g, root, deg, m, jobs), na);
    *json_out = dup_string(j.dump(2));
    return GKM_OK;
  });
}

int gkm_jfun_json(const gkm_graph* g, int root, int mode, const long* cap,
                  size_t ncap, int oracle, int jobs, char** json_out) {
  if (!g || !cap || !json_out) return fail(GKM_ERR_INVALID, "null argument");
  if (ncap != g->g.picard)
    return fail(GKM_ERR_INVALID, "cap length must equal picard rank");
  if (oracle && g->pn < 0)
    return fail(GKM_ERR_INVALID,
                "oracle comparison only applies to projective space builders");
  return guarded([&]() -> int {
    auto capv = to_vec(cap, ncap);
    TwistMode m = to_mode(mode);
    size_t na = g->g.rank;
    JSeries s = compute_jseries(g->g, root, m, capv, jobs);
    JSeries orc;
    if (oracle) {
      orc = hypergeometric_I(g->pn, root, capv[0]);
      if (m == TwistMode::untwisted) {
        size_t hv = g->g.rank + 1;
        Monomial zero{Cyclo(0L), ExpVec(orc.terms.begin()->second.nvars())};
        for (auto& [d, t] : orc.terms) t = t.subst_var(hv, zero);
      }
    }
    json j;
    j["schema"] = kSchema;
    j["root"] = g->g.verts[root];
    j["mode"] = mode == GKM_MODE_COTANGENT ? "cotangent" : "untwisted";
    j["cap"] = degs_json(capv);
    bool all_equal = true;
    json terms = json::array();
    for (const auto& [d, t] : s.terms) {
      json jt;
      jt["degree"] = degs_json(d);
      jt["term"] = ratfun_json(t, na);
      if (oracle) {
        bool eq = t == orc.terms.at(d);
        jt["oracle_equal"] = eq;
        if (!eq) all_equal = false;
      }
      terms.push_back(jt);
    }
    j["terms"] = terms;
    if (oracle) j["oracle_all_equal"] = all_equal;
    *json_out = dup_string(j.dump(2));
    if (oracle && !all_equal)
      return fail(GKM_ERR_CHECK, "oracle comparison failed");
    return GKM_OK;
  });
}

int gkm_verify_adelic_json(const gkm_graph* g, int root, int mode,
                           const long* cap, size_t ncap, int jobs,
                           char** json_out) {
  if (!g || !cap || !json_out) return fail(GKM_ERR_INVALID, "null argument");
  if (ncap != g->g.picard)
    return fail(GKM_ERR_INVALID, "cap length must equal picard rank");
  return guarded([&]() -> int {
    auto capv = to_vec(cap, ncap);
    TwistMode m = to_mode(mode);
    bool all_pass = true;
    json j;
    j["schema"] = kSchema;
    j["root"] = g->g.verts[root];
    j["mode"] = mode == GKM_MODE_COTANGENT ? "cotangent" : "untwisted";
    j["cap"] = degs_json(capv);
    json degrees = json::array();
    for (const auto& d : degree_box(capv)) {
      if (is_zero_deg(d)) continue;
      json jd;
      jd["degree"] = degs_json(d);
      RatFun term = sum_over_trees(g->g, root, d, m, jobs);
      bool nrp = check_no_regular_part(term);
      jd["no_regular_part"] = nrp;
      if (!nrp) all_pass = false;
      json poles = json::array();
      for (const auto& ps : pole_locus(term, g->g, root)) {
        json jp;
        jp["locus"] = RatFun::from_monomial(term.nvars(), ps.x).str(g->g.rank);
        jp["m"] = ps.m;
        jp["order"] = ps.order;
        jp["root_of_unity"] = ps.root_of_unity;
        jp["allowed"] = ps.allowed;
        if (!ps.allowed) all_pass = false;
        poles.push_back(jp);
      }
      jd["poles"] = poles;
      json recs = json::array();
      for (const auto& fl : g->g.incident(root)) {
        const auto& cls = g->g.edges[fl.edge].cls;
        for (long mm = 1;; mm++) {
          bool fits = true;
          for (size_t i = 0; i < d.size(); i++)
            if (mm * cls[i] > d[i]) fits = false;
          if (!fits) break;
          auto rep = check_edge_recursion(g->g, root, fl.edge, mm, d, m, jobs);
          for (const auto& sec : rep.sectors) {
            json jr;
            jr["edge"] = fl.edge;
            jr["m"] = mm;
            jr["sector"] = sec.s;
            jr["pass"] = sec.pass;
            if (!sec.pass) all_pass = false;
            recs.push_back(jr);
          }
        }
      }
      jd["recursions"] = recs;
      degrees.push_back(jd);
    }
    j["degrees"] = degrees;
    j["pass"] = all_pass;
    *json_out = dup_string(j.dump(2));
    return all_pass ? GKM_OK : fail(GKM_ERR_CHECK, "adelic check failed");
  });
}

int gkm_balance_json(const gkm_graph* g, int root, int mode, const long* cap,
                     size_t ncap, int jobs, char** json_out) {
  if (!g || !cap || !json_out) return fail(GKM_ERR_INVALID, "null argument");
  if (ncap != g->g.picard)
    return fail(GKM_ERR_INVALID, "cap length must equal picard rank");
  return guarded([&]() -> int {
    auto capv = to_vec(cap, ncap);
    TwistMode m = to_mode(mode);
    size_t na = g->g.rank;
    bool all_balanced = true;
    json j;
    j["schema"] = kSchema;
    j["root"] = g->g.verts[root];
    j["mode"] = mode == GKM_MODE_COTANGENT ? "cotangent" : "untwisted";
    j["cap"] = degs_json(capv);
    json degrees = json::array();
    for (const auto& d : degree_box(capv)) {
      if (is_zero_deg(d)) continue;
      RatFun term = sum_over_trees(g->g, root, d, m, jobs);
      bool bal = is_balanced(term);
      json jd;
      jd["degree"] = degs_json(d);
      jd["balanced"] = bal;
      if (!bal) {
        all_balanced = false;
        jd["witness"] = witness_direction(term, na);
      }
      degrees.push_back(jd);
    }
    j["degrees"] = degrees;
    j["pass"] = all_balanced;
    *json_out = dup_string(j.dump(2));
    return all_balanced ? GKM_OK : fail(GKM_ERR_CHECK, "unbalanced term");
  });
}

int gkm_asymptotics_json(const gkm_graph* g, int root, int mode,
                         const long* degree, size_t ndeg, const char* dirs,
                         char** json_out) {
  if (!g || !degree || !json_out) return fail(GKM_ERR_INVALID, "null argument");
  if (ndeg != g->g.picard)
    return fail(GKM_ERR_INVALID, "degree length must equal picard rank");
  return guarded([&]() -> int {
    auto deg = to_vec(degree, ndeg);
    TwistMode m = to_mode(mode);
    size_t na = g->g.rank;
    std::vector<std::vector<Rat>> sigmas;
    if (dirs && *dirs) {
      std::stringstream ds(dirs);
      std::string part;
      while (std::getline(ds, part, ';')) {
        std::vector<Rat> s;
        std::stringstream ps(part);
        std::string num;
        while (std::getline(ps, num, ',')) {
          Rat r(num);
          r.canonicalize();
          s.push_back(r);
        }
        if (s.size() != na)
          return fail(GKM_ERR_INVALID, "direction length must equal rank");
        sigmas.push_back(s);
      }
    } else {
      sigmas = sample_directions(na, 8, 7);
    }
    Evaluator ev(g->g, m);
    json j;
    j["schema"] = kSchema;
    j["root"] = g->g.verts[root];
    j["degree"] = degs_json(deg);
    json jd = json::array();
    for (const auto& s : sigmas) {
      json row = json::array();
      for (const auto& x : s) row.push_back(rat_json(x));
      jd.push_back(row);
    }
    j["directions"] = jd;
    json trees = json::array();
    for (const auto& t : enumerate_trees(g->g, root, deg))
      for (const auto& kt : promote(t)) {
        RatFun exact = ev.j_prefactor(root) * ev.tree_value(kt);
        AsymptoticClass pred = predict_tree(g->g, kt, m);
        json jt;
        jt["tree"] = canonical_form(kt);
        json ed = json::array(), pd = json::array();
        for (const auto& s : sigmas) {
          auto de = exact.newton_degree(s, na);
          auto dp = pred.value.newton_degree(s, na);
          ed.push_back(de ? rat_json(*de) : json(nullptr));
          pd.push_back(dp ? rat_json(*dp) : json(nullptr));
        }
        jt["exact_degrees"] = ed;
        jt["predicted_degrees"] = pd;
        trees.push_back(jt);
      }
    j["trees"] = trees;
    *json_out = dup_string(j.dump(2));
    return GKM_OK;
  });
}

}  // extern "C"
