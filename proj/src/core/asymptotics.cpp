#include "asymptotics.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace gkmloc {

bool in_hull(const std::vector<std::vector<Rat>>& pts,
             const std::vector<Rat>& p) {
  size_t n = pts.size();
  if (n == 0) return false;
  size_t d = p.size();
  size_t m = d + 1;  // affine combination: d coordinate rows + weight row
  // phase-1 simplex tableau; columns: n lambdas, m artificials, rhs
  std::vector<std::vector<Rat>> T(m + 1, std::vector<Rat>(n + m + 1));
  for (size_t i = 0; i < m; i++) {
    for (size_t j = 0; j < n; j++) T[i][j] = i < d ? pts[j][i] : Rat(1);
    T[i][n + m] = i < d ? p[i] : Rat(1);
    if (T[i][n + m] < 0)
      for (size_t j = 0; j < n + m + 1; j++) T[i][j] = -T[i][j];
    T[i][n + i] = 1;
  }
  // objective row: sum of artificials, expressed through the constraint rows
  for (size_t j = 0; j < n + m + 1; j++) {
    Rat s = 0;
    for (size_t i = 0; i < m; i++) s += T[i][j];
    T[m][j] = s;
  }
  for (size_t i = 0; i < m; i++) T[m][n + i] = 0;
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; i++) basis[i] = n + i;
  while (true) {
    size_t piv = SIZE_MAX;  // Bland's rule: first improving column
    for (size_t j = 0; j < n + m; j++)
      if (T[m][j] > 0) {
        piv = j;
        break;
      }
    if (piv == SIZE_MAX) break;
    size_t row = SIZE_MAX;
    Rat best;
    for (size_t i = 0; i < m; i++) {
      if (T[i][piv] <= 0) continue;
      Rat ratio = T[i][n + m] / T[i][piv];
      if (row == SIZE_MAX || ratio < best ||
          (ratio == best && basis[i] < basis[row])) {
        row = i;
        best = ratio;
      }
    }
    if (row == SIZE_MAX) return false;
    Rat pv = T[row][piv];
    for (auto& x : T[row]) x /= pv;
    for (size_t i = 0; i < m + 1; i++) {
      if (i == row || T[i][piv] == 0) continue;
      Rat f = T[i][piv];
      for (size_t j = 0; j < n + m + 1; j++) T[i][j] -= f * T[row][j];
    }
    basis[row] = piv;
  }
  return T[m][n + m] == 0;
}

bool is_balanced(const RatFun& f) {
  if (f.is_zero()) return true;
  size_t na = f.nvars() - 2;
  auto [num, den] = f.expand_frac();
  auto project = [na](const Laurent& l) {
    std::set<std::vector<Rat>> s;
    for (const auto& [e, c] : l.t)
      s.insert(std::vector<Rat>(e.e.begin(), e.e.begin() + na));
    return std::vector<std::vector<Rat>>(s.begin(), s.end());
  };
  auto dp = project(den);
  for (const auto& p : project(num))
    if (!in_hull(dp, p)) return false;
  return true;
}

RatFun c_of_vertex(size_t nvars, const std::vector<Monomial>& ws) {
  if (ws.empty()) throw std::runtime_error("c_of_vertex: empty vertex");
  if (ws.size() == 1) return RatFun::binomial_pow(nvars, ws[0], 1);
  if (ws.size() == 2) return RatFun::binomial_pow(nvars, ws[0] * ws[1], -1);
  RatFun r = RatFun::one(nvars);
  for (const auto& w : ws) r = r * RatFun::binomial_pow(nvars, w, -1);
  return r;
}

namespace {

// wedge_{-hbar}T_v (with_h) or wedge_{-1}T_v as a standalone product
RatFun wedge_one(const GkmGraph& g, const Evaluator& ev, int v, bool with_h) {
  RatFun r = RatFun::one(ev.nvars());
  for (const auto& f : g.incident(v)) {
    Monomial w = ev.wval(f.w);
    if (with_h) w = ev.hmono() * w;
    r = r * RatFun::binomial_pow(ev.nvars(), w, 1);
  }
  return r;
}

}  // namespace

AsymptoticClass predict_chain(const GkmGraph& g, const TreeNode& t,
                              TwistMode mode) {
  Evaluator ev(g, mode);
  std::vector<Monomial> ws;  // cover weight of edge i seen from its near end
  const TreeNode* cur = &t;
  int leaf = t.v;
  while (!cur->children.empty()) {
    if (cur->children.size() > 1)
      throw std::runtime_error("predict_chain: tree is not a chain");
    const auto& c = cur->children[0];
    ws.push_back(ev.wgamma(g.weight_at(c.edge, cur->v), c.deg,
                           c.sector < 0 ? 0 : c.sector));
    cur = &c.sub();
    leaf = cur->v;
  }
  if (ws.empty()) throw std::runtime_error("predict_chain: empty chain");
  RatFun r = wedge_one(g, ev, t.v, true) / wedge_one(g, ev, leaf, false);
  for (size_t i = 0; i + 1 < ws.size(); i++)
    r = r * RatFun::binomial_pow(ev.nvars(), ws[i].inv() * ws[i + 1], -1);
  r = r * RatFun::binomial_pow(ev.nvars(), ws.back().inv(), 1);
  return {r};
}

AsymptoticClass predict_tree(const GkmGraph& g, const TreeNode& t,
                             TwistMode mode) {
  Evaluator ev(g, mode);
  RatFun r = RatFun::one(ev.nvars());
  RatFun wedge_p = wedge_one(g, ev, t.v, true);
  // walk the tree: per-vertex outgoing cover weights, and the leaf set
  std::function<void(const TreeNode&, const Monomial*)> walk =
      [&](const TreeNode& n, const Monomial* parent_w) {
        std::vector<Monomial> out;
        if (parent_w) out.push_back(parent_w->inv());
        std::vector<Monomial> child_w;
        for (const auto& c : n.children) {
          Monomial w = ev.wgamma(g.weight_at(c.edge, n.v), c.deg,
                                 c.sector < 0 ? 0 : c.sector);
          out.push_back(w);
          child_w.push_back(w);
        }
        r = r * c_of_vertex(ev.nvars(), out);
        if (parent_w && n.children.empty())
          r = r * wedge_p / wedge_one(g, ev, n.v, false);
        for (size_t i = 0; i < n.children.size(); i++)
          walk(n.children[i].sub(), &child_w[i]);
      };
  if (t.children.empty()) return {RatFun::one(ev.nvars())};
  walk(t, nullptr);
  return {r};
}

CompareReport compare_asymptotics(const RatFun& exact,
                                  const AsymptoticClass& pred,
                                  const std::vector<std::vector<Rat>>& sigmas) {
  CompareReport rep;
  size_t na = exact.nvars() - 2;
  for (const auto& s : sigmas) {
    CompareLine l;
    l.sigma = s;
    auto de = exact.newton_degree(s, na);
    auto dp = pred.value.newton_degree(s, na);
    if (de && dp) {
      l.exact_deg = *de;
      l.pred_deg = *dp;
      l.equal = *de == *dp;
    }
    rep.lines.push_back(std::move(l));
  }
  return rep;
}

std::vector<std::vector<Rat>> sample_directions(size_t na, int count,
                                                unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(-3, 3);
  std::vector<std::vector<Rat>> out;
  while ((int)out.size() < count) {
    std::vector<Rat> s(na);
    bool nonzero = false;
    for (auto& x : s) {
      int v = pick(rng);
      if (v != 0) nonzero = true;
      x = v;
    }
    if (nonzero) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace gkmloc
