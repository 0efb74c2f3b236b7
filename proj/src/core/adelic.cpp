#include "adelic.hpp"

#include <numeric>
#include <stdexcept>

namespace gkmloc {

namespace {

// the monomial x with p proportional to 1 - x, for a two-term factor
std::optional<Monomial> binom_x(const Laurent& p) {
  if (p.t.size() != 2) return std::nullopt;
  auto it = p.t.begin();
  const auto& [e0, c0] = *it;
  ++it;
  const auto& [e1, c1] = *it;
  return Monomial{-(c1 * c0.inv()), e1 - e0};
}

Monomial qvar_mono(size_t nv, size_t qv, long k = 1) {
  Monomial m{Cyclo(1L), ExpVec(nv)};
  m.e.e[qv] = k;
  return m;
}

}  // namespace

std::vector<PoleSpec> pole_locus(const RatFun& f, const GkmGraph& g, int v) {
  std::vector<PoleSpec> out;
  if (f.is_zero()) return out;
  size_t qv = g.rank, hv = g.rank + 1;
  auto inc = g.incident(v);
  for (const auto& [p, e] : f.factors()) {
    if (e >= 0) continue;
    auto x = binom_x(p);
    if (!x) {
      // a denominator that is not a binomial never occurs for J-terms;
      // flag it as a disallowed pole of unknown shape
      PoleSpec ps;
      ps.order = -e;
      out.push_back(ps);
      continue;
    }
    if (x->e.e[qv] == 0) continue;  // no q-dependence: not a q-pole
    if (x->e.e[qv] < 0) *x = x->inv();
    // clear fractional exponents: conjugate factors like 1 -+ t^{1/2} q all
    // describe sub-loci of the integral locus q^2 t = 1, so classify x^k
    long k = 1;
    for (const auto& ee : x->e.e) {
      long den = (long)ee.get_den().get_si();
      k = k / std::gcd(k, den) * den;
    }
    Monomial xn = x->pow(k);
    PoleSpec ps;
    ps.x = xn;
    ps.order = -e;
    ps.m = (long)xn.e.e[qv].get_num().get_si();
    if (xn.e.e[hv] == 0) {
      bool afree = true;
      for (size_t i = 0; i < g.rank; i++)
        if (xn.e.e[i] != 0) afree = false;
      if (afree) {
        ps.root_of_unity = true;
        ps.allowed = xn.c.is_root_of_unity();
      } else {
        // weight-root pole: the a-part must be an incident edge weight
        for (const auto& fl : inc) {
          bool match = true;
          for (size_t i = 0; i < g.rank; i++)
            if (xn.e.e[i] != Rat(fl.w[i])) match = false;
          if (match) ps.allowed = xn.c.is_root_of_unity();
        }
      }
    }
    out.push_back(ps);
  }
  // conjugate factors normalize to the same locus: keep one spec per locus
  std::vector<PoleSpec> merged;
  for (const auto& ps : out) {
    bool found = false;
    for (auto& mp : merged)
      if (mp.x.e == ps.x.e && mp.x.c == ps.x.c && mp.m == ps.m) {
        if (ps.order > mp.order) mp.order = ps.order;
        found = true;
      }
    if (!found) merged.push_back(ps);
  }
  return merged;
}

bool check_no_regular_part(const RatFun& f) {
  if (f.is_zero()) return true;
  return *f.top_degree(f.nvars() - 2) < 0;
}

bool is_zeta_free(const RatFun& f) {
  if (f.is_zero()) return true;
  // the factored form may carry conjugate zeta factor pairs even when the
  // function is rational, so check Galois invariance instead of inspecting
  // the representation
  long N = f.unit().c.order();
  bool all_rat = f.unit().c.is_rational();
  for (const auto& [p, e] : f.factors())
    for (const auto& [ee, c] : p.t) {
      N = std::lcm(N, c.order());
      if (!c.is_rational()) all_rat = false;
    }
  if (all_rat) return true;
  size_t nv = f.nvars();
  for (long k = 2; k < N; k++) {
    if (std::gcd(k, N) != 1) continue;
    RatFun g =
        RatFun::from_monomial(nv, Monomial{f.unit().c.galois(k), f.unit().e});
    for (const auto& [p, e] : f.factors()) {
      Laurent pc;
      for (const auto& [ee, c] : p.t) pc.add_term(ee, c.galois(k));
      g = g * RatFun::from_laurent(nv, pc).pow(e);
    }
    if (!(f == g)) return false;
  }
  return true;
}

RatFun edge_E(const GkmGraph& g, size_t ei, int v, long m, long s,
              TwistMode mode) {
  Evaluator ev(g, mode);
  size_t nv = ev.nvars();
  Monomial wgi = ev.wgamma(g.weight_at(ei, v), m, s).inv();
  FlagData fd = flag_pairing(g, ei, v);
  RatFun r = ev.wedge_A(v) *
             RatFun::from_monomial(nv, Monomial{Cyclo(Rat(1, m)), ExpVec(nv)});
  for (const auto& p : fd.pairs) {
    Monomial wx = ev.wval(p.w);
    if (mode == TwistMode::cotangent)
      r = r * q_pochhammer(nv, ev.hmono() * wx * wgi, wgi, p.a * m - 1) /
          q_pochhammer(nv, wx, wgi, p.a * m + 1, true);
    else
      r = r / q_pochhammer(nv, wx, wgi, p.a * m + 1, true);
  }
  return r;
}

EdgeRecursionReport check_edge_recursion(const GkmGraph& g, int v, size_t ei,
                                         long m, const std::vector<long>& degree,
                                         TwistMode mode, int jobs) {
  EdgeRecursionReport rep;
  rep.edge = ei;
  rep.v = v;
  rep.m = m;
  rep.degree = degree;
  const GkmEdge& e = g.edges[ei];
  std::vector<long> d2 = degree;
  for (size_t i = 0; i < d2.size(); i++) {
    d2[i] -= m * e.cls[i];
    if (d2[i] < 0)
      throw std::runtime_error("check_edge_recursion: m * class exceeds degree");
  }
  int vp = g.other_end(ei, v);
  RatFun jv = sum_over_trees(g, v, degree, mode, jobs);
  RatFun jvp = sum_over_trees(g, vp, d2, mode, jobs);
  Evaluator ev(g, mode);
  size_t qv = g.rank;
  for (long s = 0; s < m; s++) {
    EdgeRecursionReport::Sector sec;
    sec.s = s;
    Monomial q0 = ev.wgamma(g.weight_at(ei, v), m, s).inv();
    sec.lhs = jv.residue_at(qv, q0);
    sec.rhs = -(jvp.subst_var(qv, q0) * edge_E(g, ei, v, m, s, mode));
    sec.pass = sec.lhs == sec.rhs;
    rep.sectors.push_back(std::move(sec));
  }
  return rep;
}

std::vector<RatFun> q_exp_series(size_t nvars, size_t qvar, long order) {
  std::vector<RatFun> out;
  Monomial q = qvar_mono(nvars, qvar);
  for (long n = 0; n <= order; n++)
    out.push_back(q_pochhammer(nvars, q, q, n).inv());
  return out;
}

std::vector<RatFun> pochhammer_transform(const std::vector<RatFun>& f,
                                         size_t qvar, const Monomial& lambda,
                                         long ell, bool divide) {
  std::vector<RatFun> out;
  for (size_t d = 0; d < f.size(); d++) {
    size_t nv = lambda.e.size();
    Monomial q = qvar_mono(nv, qvar);
    RatFun p = q_pochhammer(nv, lambda * q, q, ell * (long)d);
    if (p.is_zero())
      throw std::runtime_error("pochhammer_transform: vanishing factor");
    out.push_back(divide ? f[d] / p : f[d] * p);
  }
  return out;
}

bool check_hypergeometric_ratio(const JSeries& s,
                                const std::vector<Monomial>& ws, size_t qvar,
                                size_t hvar) {
  if (s.terms.empty()) return false;
  size_t nv = s.terms.begin()->second.nvars();
  Monomial q = qvar_mono(nv, qvar);
  Monomial h = qvar_mono(nv, hvar);
  for (const auto& [deg, term] : s.terms) {
    if (deg.size() != 1) return false;
    long d = deg[0];
    auto next = s.terms.find({d + 1});
    if (next == s.terms.end()) continue;
    RatFun want = RatFun::one(nv);
    for (const auto& w : ws)
      want = want * RatFun::binomial_pow(nv, h * w * q.pow(d), 1) /
             RatFun::binomial_pow(nv, w * q.pow(d + 1), 1);
    if (!(next->second == term * want)) return false;
  }
  return true;
}

}  // namespace gkmloc
