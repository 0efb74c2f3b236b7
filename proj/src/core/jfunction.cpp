#include "jfunction.hpp"

#include <stdexcept>

namespace gkmloc {

namespace {

Monomial unit_mono(size_t nv) { return Monomial{Cyclo(1L), ExpVec(nv)}; }

Monomial var(size_t nv, size_t i, long k = 1) {
  Monomial m = unit_mono(nv);
  m.e.e[i] = k;
  return m;
}

// iterate the box [0, cap] componentwise; returns false after the last tuple
bool next_in_box(std::vector<long>& d, const std::vector<long>& cap) {
  for (size_t i = 0; i < d.size(); i++) {
    if (d[i] < cap[i]) {
      d[i]++;
      for (size_t j = 0; j < i; j++) d[j] = 0;
      return true;
    }
  }
  return false;
}

}  // namespace

JSeries compute_jseries(const GkmGraph& g, int root, TwistMode mode,
                        const std::vector<long>& cap, int jobs) {
  if (cap.size() != g.picard)
    throw std::runtime_error("compute_jseries: cap length != picard rank");
  JSeries s;
  s.root = root;
  s.mode = mode;
  s.cap = cap;
  std::vector<long> d(cap.size(), 0);
  do {
    s.terms.emplace(d, sum_over_trees(g, root, d, mode, jobs));
  } while (next_in_box(d, cap));
  return s;
}

JSeries hypergeometric_I(int n, int i, long cap) {
  size_t nv = n + 3;  // a_0..a_n, q, hbar
  size_t qv = n + 1, hv = n + 2;
  JSeries s;
  s.root = i;
  s.mode = TwistMode::cotangent;
  s.cap = {cap};
  Monomial q = var(nv, qv), h = var(nv, hv);
  for (long d = 0; d <= cap; d++) {
    RatFun r = RatFun::one(nv);
    for (int j = 0; j <= n; j++) {
      Monomial w = var(nv, i) * var(nv, j, -1);
      r = r * q_pochhammer(nv, h * w, q, d) / q_pochhammer(nv, q * w, q, d);
    }
    s.terms.emplace(std::vector<long>{d}, r);
  }
  return s;
}

std::map<std::vector<long>, RatFun> quasimap_vertex_V(
    int n, long cap, const std::function<bool(const std::vector<long>&)>& cone) {
  if (n < 2) throw std::runtime_error("quasimap_vertex_V: n must be >= 2");
  size_t nv = n + 2;  // a_1..a_n, q, hbar
  size_t qv = n, hv = n + 1;
  Monomial q = var(nv, qv), h = var(nv, hv);
  size_t dim = (size_t)n * (n - 1) / 2;
  auto idx = [](int i, int j) { return (size_t)i * (i - 1) / 2 + (j - 1); };
  std::map<std::vector<long>, RatFun> out;
  std::vector<long> d(dim, 0);
  std::vector<long> caps(dim, cap);
  do {
    if (cone && !cone(d)) continue;
    auto D = [&](int i, int j) { return i == n ? 0L : d[idx(i, j)]; };
    // tuples with d_{i,j} < d_{i+1,j} hit (q;q)_{m<0} = 1/0: the coefficient
    // is not a rational function, so such tuples fall outside the cone
    bool divergent = false;
    for (int i = 1; i < n && !divergent; i++)
      for (int j = 1; j <= i; j++)
        if (D(i, j) < D(i + 1, j)) {
          divergent = true;
          break;
        }
    if (divergent) continue;
    auto pair_ratio = [&](int j, int k, long m) {
      // (hbar a_j/a_k; q)_m / (q a_j/a_k; q)_m
      Monomial w = var(nv, j - 1) * var(nv, k - 1, -1);
      return q_pochhammer(nv, h * w, q, m) / q_pochhammer(nv, q * w, q, m);
    };
    RatFun r = RatFun::one(nv);
    for (int i = 1; i <= n - 1; i++)
      for (int j = 1; j <= i; j++) {
        for (int k = 1; k <= i; k++) r = r * pair_ratio(j, k, D(i, j) - D(i, k));
        for (int k = 1; k <= i + 1; k++)
          r = r / pair_ratio(j, k, D(i, j) - D(i + 1, k));
      }
    out.emplace(d, r);
  } while (next_in_box(d, caps));
  return out;
}

bool is_self_dual_form(const JSeries& s) {
  for (const auto& [deg, term] : s.terms) {
    if (term.is_zero()) return false;
    size_t nv = term.nvars();
    size_t qv = nv - 2, hv = nv - 1;
    if (!term.unit().c.pow(2).is_one()) return false;  // unit is +-monomial
    // collect each binomial factor as its defining monomial x (1 - x up to
    // unit), oriented so the hbar exponent is >= 0
    std::map<Laurent, long> rem = term.factors();
    auto binom_x = [&](const Laurent& p) -> std::optional<Monomial> {
      if (p.t.size() != 2) return std::nullopt;
      auto it = p.t.begin();
      const auto& [e0, c0] = *it;
      ++it;
      const auto& [e1, c1] = *it;
      Monomial x{-(c1 * c0.inv()), e1 - e0};
      if (x.e.e[hv] < 0) x = x.inv();
      return x;
    };
    for (const auto& [p, e] : term.factors()) {
      if (e <= 0) continue;  // walk numerator factors, match denominators
      auto x = binom_x(p);
      if (!x || x->e.e[hv] != 1) return false;
      Monomial partner = *x;
      partner.e.e[hv] = 0;
      partner.e.e[qv] += 1;
      // find the denominator factor cutting out partner = 1
      bool found = false;
      for (auto& [dp, de] : rem) {
        if (de >= 0) continue;
        auto y = binom_x(dp);
        if (!y) return false;
        Monomial cand = *y;
        if (cand.e.e[hv] != 0) return false;
        for (const Monomial& c : {cand, cand.inv()}) {
          if (c.e == partner.e && c.c == partner.c && -de >= e) {
            found = true;
            break;
          }
        }
        if (found) {
          de += e;
          break;
        }
      }
      if (!found) return false;
    }
    // all denominator multiplicity must have been consumed by matches
    for (const auto& [p, e] : rem)
      if (e < 0) return false;
  }
  return true;
}

std::vector<CompareEntry> compare_series(const JSeries& a, const JSeries& b) {
  std::vector<CompareEntry> out;
  for (const auto& [deg, ta] : a.terms) {
    auto it = b.terms.find(deg);
    if (it == b.terms.end()) continue;
    CompareEntry e;
    e.degree = deg;
    e.difference = ta - it->second;
    e.equal = e.difference.is_zero();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace gkmloc
