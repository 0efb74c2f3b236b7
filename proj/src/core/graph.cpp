#include "graph.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gkmloc {

namespace {

std::vector<long> negv(const std::vector<long>& w) {
  std::vector<long> r(w.size());
  for (size_t i = 0; i < w.size(); i++) r[i] = -w[i];
  return r;
}

bool parallel(const std::vector<long>& a, const std::vector<long>& b) {
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = i + 1; j < a.size(); j++)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

std::vector<GkmGraph::Flag> GkmGraph::incident(int v) const {
  std::vector<Flag> out;
  for (size_t i = 0; i < edges.size(); i++) {
    if (edges[i].v == v)
      out.push_back({i, edges[i].vp, edges[i].w});
    else if (edges[i].vp == v)
      out.push_back({i, edges[i].v, negv(edges[i].w)});
  }
  return out;
}

std::vector<long> GkmGraph::weight_at(size_t ei, int v) const {
  const GkmEdge& e = edges[ei];
  if (e.v == v) return e.w;
  if (e.vp == v) return negv(e.w);
  throw std::runtime_error("weight_at: vertex not on edge");
}

int GkmGraph::other_end(size_t ei, int v) const {
  const GkmEdge& e = edges[ei];
  if (e.v == v) return e.vp;
  if (e.vp == v) return e.v;
  throw std::runtime_error("other_end: vertex not on edge");
}

int GkmGraph::find_vertex(const std::string& name) const {
  for (size_t i = 0; i < verts.size(); i++)
    if (verts[i] == name) return (int)i;
  if (name == "e") {
    // identity permutation alias for flag-manifold graphs
    for (size_t i = 0; i < verts.size(); i++) {
      bool id = !verts[i].empty();
      for (size_t k = 0; k < verts[i].size(); k++)
        if (verts[i][k] != (char)('1' + k)) id = false;
      if (id) return (int)i;
    }
  }
  return -1;
}

FlagData flag_pairing(const GkmGraph& g, size_t ei, int v) {
  int vp = g.other_end(ei, v);
  std::vector<long> we = g.weight_at(ei, v);
  std::vector<long> wep = negv(we);  // weight of e at the far vertex
  std::vector<GkmGraph::Flag> fv, fvp;
  for (const auto& f : g.incident(v))
    if (f.edge != ei) fv.push_back(f);
  for (const auto& f : g.incident(vp))
    if (f.edge != ei) fvp.push_back(f);
  size_t n = fv.size();
  if (fvp.size() != n) throw std::runtime_error("flag_pairing: valency mismatch");
  // cand[i][j]: integer a with w(f'_j, v') = w(f_i, v) * w(e, v')^a, if any
  const long NONE = LONG_MIN;
  std::vector<std::vector<long>> cand(n, std::vector<long>(n, NONE));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) {
      long a = NONE;
      bool ok = true;
      for (size_t k = 0; k < g.rank; k++) {
        long d = fvp[j].w[k] - fv[i].w[k];
        long e = wep[k];
        if (e == 0) {
          if (d != 0) { ok = false; break; }
        } else {
          if (d % e != 0) { ok = false; break; }
          long q = d / e;
          if (a == NONE) a = q;
          else if (a != q) { ok = false; break; }
        }
      }
      if (ok) cand[i][j] = (a == NONE) ? 0 : a;
    }
  // minimum-norm perfect matching over all assignments (valencies are small)
  std::vector<size_t> perm(n), best;
  std::iota(perm.begin(), perm.end(), 0);
  long best_norm = -1;
  do {
    long norm = 0;
    bool ok = true;
    for (size_t i = 0; i < n; i++) {
      long a = cand[i][perm[i]];
      if (a == NONE) { ok = false; break; }
      norm += a * a;
    }
    if (ok && (best_norm < 0 || norm < best_norm)) {
      best_norm = norm;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best_norm < 0) throw std::runtime_error("flag_pairing: no integer pairing");
  FlagData fd;
  fd.vp = vp;
  for (size_t i = 0; i < n; i++)
    fd.pairs.push_back({fv[i].edge, fv[i].w, cand[i][best[i]]});
  fd.pairs.push_back({ei, we, 2});
  return fd;
}

ValidationReport validate_gkm(const GkmGraph& g) {
  ValidationReport rep;
  auto fail = [&rep](const std::string& s) { rep.violations.push_back(s); };
  for (size_t i = 0; i < g.edges.size(); i++) {
    const GkmEdge& e = g.edges[i];
    if (e.w.size() != g.rank) fail("edge " + std::to_string(i) + ": weight length");
    if (e.cls.size() != g.picard) fail("edge " + std::to_string(i) + ": class length");
    bool any = false, neg = false;
    for (long c : e.cls) {
      if (c > 0) any = true;
      if (c < 0) neg = true;
    }
    if (!any || neg) fail("edge " + std::to_string(i) + ": curve class not positive");
    bool wzero = true;
    for (long x : e.w)
      if (x != 0) wzero = false;
    if (wzero) fail("edge " + std::to_string(i) + ": zero weight");
  }
  if (!rep.ok()) return rep;
  for (size_t v = 0; v < g.verts.size(); v++) {
    auto fl = g.incident((int)v);
    for (size_t i = 0; i < fl.size(); i++)
      for (size_t j = i + 1; j < fl.size(); j++)
        if (parallel(fl[i].w, fl[j].w))
          fail("vertex " + g.verts[v] + ": parallel incident weights");
  }
  for (size_t i = 0; i < g.edges.size(); i++) {
    for (int side = 0; side < 2; side++) {
      int v = side ? g.edges[i].vp : g.edges[i].v;
      try {
        FlagData fd = flag_pairing(g, i, v);
        if (fd.pairs.empty() || fd.pairs.back().a != 2)
          fail("edge " + std::to_string(i) + ": tangent degree != 2");
      } catch (const std::exception& ex) {
        fail("edge " + std::to_string(i) + " at " + g.verts[v] + ": " + ex.what());
      }
    }
  }
  return rep;
}

GkmGraph build_projective_space(int n) {
  if (n < 1) throw std::runtime_error("build_projective_space: n >= 1");
  GkmGraph g;
  g.rank = n + 1;
  g.picard = 1;
  for (int i = 0; i <= n; i++) g.verts.push_back(std::to_string(i));
  for (int i = 0; i <= n; i++)
    for (int j = i + 1; j <= n; j++) {
      GkmEdge e;
      e.v = i;
      e.vp = j;
      e.w.assign(n + 1, 0);
      e.w[i] = 1;
      e.w[j] = -1;
      e.cls = {1};
      g.edges.push_back(e);
    }
  return g;
}

GkmGraph build_flag_sl(int n) {
  if (n < 2) throw std::runtime_error("build_flag_sl: n >= 2");
  GkmGraph g;
  g.rank = n;
  g.picard = n - 1;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto name = [](const std::vector<int>& w) {
    std::string s;
    for (int x : w) s += std::to_string(x);
    return s;
  };
  for (const auto& w : perms) g.verts.push_back(name(w));
  auto index_of = [&](const std::vector<int>& w) {
    for (size_t i = 0; i < perms.size(); i++)
      if (perms[i] == w) return (int)i;
    return -1;
  };
  for (size_t vi = 0; vi < perms.size(); vi++) {
    const auto& w = perms[vi];
    for (int i = 1; i <= n; i++)
      for (int j = i + 1; j <= n; j++) {
        // edge w -- w*t_{ij}: swap the entries at positions i, j
        std::vector<int> wp = w;
        std::swap(wp[i - 1], wp[j - 1]);
        int vj = index_of(wp);
        if (vj < (int)vi) continue;  // each pair once
        GkmEdge e;
        e.v = (int)vi;
        e.vp = vj;
        e.w.assign(n, 0);
        e.w[w[i - 1] - 1] += 1;
        e.w[w[j - 1] - 1] -= 1;
        // curve class: sum of the simple coroots between positions i and j
        // (translating by the Weyl group preserves the class)
        e.cls.assign(n - 1, 0);
        for (int ppos = i; ppos < j; ppos++) e.cls[ppos - 1] += 1;
        g.edges.push_back(e);
      }
  }
  return g;
}

std::string serialize_graph(const GkmGraph& g) {
  std::ostringstream os;
  os << "rank " << g.rank << " picard " << g.picard << "\n";
  for (const auto& v : g.verts) os << "v " << v << "\n";
  for (const auto& e : g.edges) {
    os << "e " << g.verts[e.v] << " " << g.verts[e.vp] << " ";
    bool any = false;
    for (size_t i = 0; i < e.w.size(); i++) {
      if (e.w[i] == 0) continue;
      if (any) os << " ";
      any = true;
      os << "a" << (i + 1) << "^" << e.w[i];
    }
    if (!any) os << "1";
    os << " ";
    for (size_t i = 0; i < e.cls.size(); i++) {
      if (i) os << ",";
      os << e.cls[i];
    }
    os << "\n";
  }
  return os.str();
}

GkmGraph parse_graph(const std::string& text) {
  GkmGraph g;
  std::istringstream is(text);
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "rank") {
      std::string pic;
      if (!(ls >> g.rank >> pic >> g.picard) || pic != "picard")
        throw std::runtime_error("parse_graph: bad header");
      have_header = true;
    } else if (tok == "v") {
      std::string id;
      if (!(ls >> id)) throw std::runtime_error("parse_graph: bad vertex line");
      g.verts.push_back(id);
    } else if (tok == "e") {
      if (!have_header) throw std::runtime_error("parse_graph: edge before header");
      std::string a, b;
      if (!(ls >> a >> b)) throw std::runtime_error("parse_graph: bad edge line");
      GkmEdge e;
      e.v = g.find_vertex(a);
      e.vp = g.find_vertex(b);
      if (e.v < 0 || e.vp < 0)
        throw std::runtime_error("parse_graph: unknown vertex on edge");
      e.w.assign(g.rank, 0);
      // remaining tokens: monomial factors a<i>^<e> (or "1"), then class csv
      std::vector<std::string> rest;
      while (ls >> tok) rest.push_back(tok);
      if (rest.empty()) throw std::runtime_error("parse_graph: missing edge data");
      std::string clstok = rest.back();
      rest.pop_back();
      for (const auto& m : rest) {
        if (m == "1") continue;
        size_t caret = m.find('^');
        if (m.size() < 2 || m[0] != 'a' || caret == std::string::npos)
          throw std::runtime_error("parse_graph: bad monomial " + m);
        size_t idx = std::stoul(m.substr(1, caret - 1));
        long ex = std::stol(m.substr(caret + 1));
        if (idx < 1 || idx > g.rank)
          throw std::runtime_error("parse_graph: variable out of range");
        e.w[idx - 1] += ex;
      }
      std::istringstream cs(clstok);
      std::string num;
      while (std::getline(cs, num, ',')) e.cls.push_back(std::stol(num));
      if (e.cls.size() != g.picard)
        throw std::runtime_error("parse_graph: class length mismatch");
      g.edges.push_back(e);
    } else if (tok[0] == '#') {
      continue;
    } else {
      throw std::runtime_error("parse_graph: unknown line " + tok);
    }
  }
  if (!have_header) throw std::runtime_error("parse_graph: missing header");
  return g;
}

}  // namespace gkmloc
