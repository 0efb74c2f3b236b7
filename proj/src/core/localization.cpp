#include "localization.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gkmloc {

Monomial Evaluator::wval(const std::vector<long>& w, long frac) const {
  Monomial m{Cyclo(1L), ExpVec(nv_)};
  for (size_t i = 0; i < w.size(); i++) {
    // mpq_class(num, den) does not canonicalize; comparisons need it
    Rat r(w[i] * r_, frac);
    r.canonicalize();
    m.e.e[i] = r;
  }
  return m;
}

Monomial Evaluator::wgamma(const std::vector<long>& w, long d, long s) const {
  Monomial m = wval(w, d);
  m.c = Cyclo::zeta(d, s * r_);
  return m;
}

Monomial Evaluator::qmono() const {
  Monomial m{Cyclo(1L), ExpVec(nv_)};
  m.e.e[qvar()] = r_;
  return m;
}

Monomial Evaluator::hmono() const {
  Monomial m{Cyclo(1L), ExpVec(nv_)};
  m.e.e[hvar()] = r_;
  return m;
}

RatFun Evaluator::wedge_A(int v) const {
  RatFun r = RatFun::one(nv_);
  for (const auto& f : g_.incident(v)) {
    Monomial w = wval(f.w);
    r = r * RatFun::binomial_pow(nv_, w, 1);
    if (mode_ == TwistMode::cotangent)
      r = r * RatFun::binomial_pow(nv_, hmono() * w, 1);
  }
  return r;
}

const FlagData& Evaluator::flags(size_t ei, int v) const {
  // per-evaluator cache; evaluators are not shared between threads
  static thread_local std::map<std::pair<const GkmGraph*, std::pair<size_t, int>>,
                               FlagData>
      cache;
  auto key = std::make_pair(&g_, std::make_pair(ei, v));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, flag_pairing(g_, ei, v)).first;
  return it->second;
}

RatFun Evaluator::edge_factor(size_t ei, int v, long d, long s) const {
  const FlagData& fd = flags(ei, v);
  Monomial wg = wgamma(g_.weight_at(ei, v), d, s);
  Monomial wgi = wg.inv();
  RatFun r = RatFun::from_monomial(nv_, Monomial{Cyclo(Rat(1, d)), ExpVec(nv_)});
  for (const auto& p : fd.pairs) {
    Monomial wx = wval(p.w);
    bool tangent = (p.f_edge == ei);
    if (mode_ == TwistMode::cotangent) {
      RatFun num = q_pochhammer(nv_, hmono() * wx * wgi, wgi, p.a * d - 1, true);
      RatFun den = q_pochhammer(nv_, wx, wgi, p.a * d + 1, true);
      r = r * num / den;
    } else {
      r = r / q_pochhammer(nv_, wx, wgi, p.a * d + 1, tangent);
    }
  }
  return r;
}

RatFun Evaluator::YP(const std::vector<Monomial>& ws) const {
  std::vector<RatFun> parts = {RatFun::one(nv_)};
  RatFun prod = RatFun::one(nv_);
  for (const auto& w : ws) {
    RatFun inv1w = RatFun::binomial_pow(nv_, w, -1);
    parts.push_back(RatFun::from_monomial(nv_, w) * inv1w);
    prod = prod * inv1w;
  }
  return RatFun::sum(parts).pow((long)ws.size() - 3) * prod;
}

RatFun Evaluator::tree_value(
    const TreeNode& kt, std::vector<std::pair<std::string, RatFun>>* prov) const {
  return vertex_rec(kt, std::nullopt, true, prov);
}

RatFun Evaluator::j_prefactor(int root) const {
  return wedge_A(root) / RatFun::binomial_pow(nv_, qmono(), 1);
}

RatFun Evaluator::vertex_rec(
    const TreeNode& st, const std::optional<Monomial>& parent_w, bool marked,
    std::vector<std::pair<std::string, RatFun>>* prov) const {
  // group identical (sectored) children; children are sorted
  std::vector<std::pair<TreeNode::Child, long>> groups;
  for (const auto& c : st.children) {
    if (!groups.empty() && groups.back().first == c)
      groups.back().second++;
    else
      groups.push_back({c, 1});
  }
  RatFun A = wedge_A(st.v);
  std::vector<Slot> fixed;
  std::vector<CycGroup> cgs;
  RatFun outside = RatFun::one(nv_);
  int v = st.v;
  for (const auto& [c, cnt] : groups) {
    auto leg = [this, c, v](const Evaluator& ev) {
      Monomial w = ev.wgamma(ev.g_.weight_at(c.edge, v), c.deg, c.sector);
      return ev.edge_factor(c.edge, v, c.deg, c.sector) *
             ev.vertex_rec(c.sub(), w.inv(), false, nullptr);
    };
    Monomial w = wgamma(g_.weight_at(c.edge, st.v), c.deg, c.sector);
    if (cnt == 1) {
      RatFun ef = edge_factor(c.edge, st.v, c.deg, c.sector);
      if (prov) {
        std::ostringstream os;
        os << "edge " << c.edge << " deg " << c.deg << " sector " << c.sector
           << " at " << g_.verts[st.v];
        prov->push_back({os.str(), ef});
      }
      outside = outside * ef * vertex_rec(c.sub(), w.inv(), false, prov);
      fixed.push_back({A, w});
    } else {
      cgs.push_back(CycGroup{
          cnt,
          [leg, v](const Evaluator& ev) { return leg(ev) * ev.wedge_A(v); },
          [c, v](const Evaluator& ev) {
            return ev.wgamma(ev.g_.weight_at(c.edge, v), c.deg, c.sector);
          }});
    }
  }
  if (parent_w) fixed.push_back({A, *parent_w});
  if (marked) fixed.push_back({RatFun::one(nv_), qmono()});
  RatFun val = perm_vertex(A, fixed, cgs);
  if (prov) {
    std::ostringstream os;
    os << "vertex " << g_.verts[st.v];
    prov->push_back({os.str(), val});
  }
  return outside * val;
}

namespace {

void all_perms(long k, std::vector<std::vector<int>>& out) {
  std::vector<int> p(k);
  for (long i = 0; i < k; i++) p[i] = (int)i;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

RatFun Evaluator::perm_vertex(const RatFun& A, const std::vector<Slot>& fixed,
                              const std::vector<CycGroup>& groups) const {
  if (groups.empty()) {
    RatFun tr = RatFun::one(nv_);
    std::vector<Monomial> ws;
    for (const auto& s : fixed) {
      tr = tr * s.num;
      ws.push_back(s.w);
    }
    return tr * YP(ws) / A;
  }
  long order = 1;
  std::vector<std::vector<std::vector<int>>> perms(groups.size());
  for (size_t gi = 0; gi < groups.size(); gi++) {
    all_perms(groups[gi].k, perms[gi]);
    for (long j = 2; j <= groups[gi].k; j++) order *= j;
  }
  std::vector<RatFun> traces;
  std::vector<std::vector<int>> combo(groups.size());
  std::function<void(size_t)> iter = [&](size_t gi) {
    if (gi == groups.size()) {
      traces.push_back(trace_sigma(fixed, groups, combo));
      return;
    }
    for (const auto& p : perms[gi]) {
      combo[gi] = p;
      iter(gi + 1);
    }
  };
  iter(0);
  return RatFun::sum(traces) / (A * RatFun::from_monomial(
                          nv_, Monomial{Cyclo(Rat(order)), ExpVec(nv_)}));
}

RatFun Evaluator::trace_sigma(const std::vector<Slot>& fixed,
                              const std::vector<CycGroup>& groups,
                              const std::vector<std::vector<int>>& combo) const {
  std::vector<Slot> slots = fixed;
  std::vector<std::pair<long, size_t>> cycles;  // (length, group)
  for (size_t gi = 0; gi < groups.size(); gi++) {
    const auto& perm = combo[gi];
    std::vector<bool> seen(perm.size(), false);
    for (size_t st = 0; st < perm.size(); st++) {
      if (seen[st]) continue;
      long len = 0;
      size_t x = st;
      while (!seen[x]) {
        seen[x] = true;
        x = (size_t)perm[x];
        len++;
      }
      if (len == 1)
        slots.push_back({groups[gi].gammaA(*this), groups[gi].w(*this)});
      else
        cycles.push_back({len, gi});
    }
  }
  if (cycles.empty()) {
    RatFun tr = RatFun::one(nv_);
    std::vector<Monomial> ws;
    for (const auto& s : slots) {
      tr = tr * s.num;
      ws.push_back(s.w);
    }
    return tr * YP(ws);
  }
  if (cycles.size() > 1)
    throw std::runtime_error(
        "perm_vertex: multiple nontrivial cycles unsupported");
  auto [rr, gi] = cycles[0];
  Evaluator evr = powered(rr);
  RatFun gA = groups[gi].gammaA(evr);
  Monomial wr = groups[gi].w(evr);
  RatFun cyc = gA * RatFun::binomial_pow(nv_, wr, -1);
  return cyc * strata_sum(rr, slots);
}

RatFun Evaluator::strata_sum(long rr, const std::vector<Slot>& slots) const {
  // the two distinguished points of the rotating component carry eigenvalues
  // zeta_rr^{-1} and zeta_rr
  Monomial lam0{Cyclo::zeta(rr, rr - 1), ExpVec(nv_)};
  Monomial lam1{Cyclo::zeta(rr, 1), ExpVec(nv_)};
  int n = (int)slots.size();
  std::vector<RatFun> strata;
  // pole occupation: each pole holds at most one slot; for rr == 2 the two
  // poles are exchanged by the rotation, so assignments are counted unordered
  std::vector<std::pair<int, int>> assigns;  // -1 = free
  for (int p0 = -1; p0 < n; p0++)
    for (int p1 = -1; p1 < n; p1++) {
      if (p0 >= 0 && p0 == p1) continue;
      if (rr == 2 && p0 >= 0 && p1 >= 0 && p0 > p1) continue;
      if (rr == 2 && p0 < 0 && p1 >= 0) continue;
      assigns.push_back({p0, p1});
    }
  for (auto [p0, p1] : assigns) {
    std::vector<int> rest;
    for (int i = 0; i < n; i++)
      if (i != p0 && i != p1) rest.push_back(i);
    int s_occ = (p0 >= 0) + (p1 >= 0);
    std::vector<int> free_poles;
    if (p0 < 0) free_poles.push_back(0);
    if (p1 < 0) free_poles.push_back(1);
    // spine placements: all remaining slots distributed over chains hanging
    // off the free poles, each chain needing at least 2 slots
    std::vector<std::vector<std::pair<std::vector<int>, int>>> options;
    if (rest.empty()) {
      options.push_back({});
    } else {
      if (!free_poles.empty()) {
        options.push_back({{rest, free_poles[0]}});
        if (rr >= 3 && free_poles.size() >= 2)
          options.push_back({{rest, free_poles[1]}});
      }
      if (free_poles.size() >= 2 && rest.size() >= 4) {
        int m = (int)rest.size();
        for (int mask = 1; mask < (1 << m) - 1; mask++) {
          std::vector<int> a, b;
          for (int i = 0; i < m; i++)
            ((mask >> i) & 1 ? a : b).push_back(rest[i]);
          if (a.size() < 2 || b.size() < 2) continue;
          if (rr == 2 && a[0] != rest[0]) continue;  // unordered poles
          options.push_back({{a, free_poles[0]}, {b, free_poles[1]}});
        }
      }
    }
    for (const auto& spines : options) {
      int nsp = (int)spines.size();
      if (rr + s_occ + nsp < 3) continue;
      bool bad = false;
      for (const auto& [sl, pole] : spines)
        if (sl.size() < 2) bad = true;
      if (bad) continue;
      long ndef = rr + s_occ + nsp - 3;
      if (ndef > s_occ)
        throw std::runtime_error("perm_vertex: unsupported stratum");
      RatFun val = RatFun::one(nv_);
      std::vector<Monomial> lams;
      for (int side = 0; side < 2; side++) {
        int pi = side == 0 ? p0 : p1;
        if (pi < 0) continue;
        const Monomial& lam = side == 0 ? lam0 : lam1;
        val = val * slots[pi].num *
              RatFun::binomial_pow(nv_, slots[pi].w * lam, -1);
        lams.push_back(lam);
      }
      for (long i = 0; i < ndef; i++)
        val = val * RatFun::binomial_pow(nv_, lams[i], -1);
      for (const auto& [sl, pole] : spines) {
        const Monomial& lam = pole == 0 ? lam0 : lam1;
        std::vector<Monomial> ws;
        for (int i : sl) ws.push_back(slots[i].w);
        ws.push_back(lam);
        RatFun sv = YP(ws);
        for (int i : sl) sv = sv * slots[i].num;
        val = val * sv;
      }
      strata.push_back(val);
    }
  }
  RatFun total = RatFun::sum(strata);
  if (total.is_zero()) return RatFun(nv_);
  return total;
}

Contribution tree_contribution(const GkmGraph& g, const TreeNode& kt,
                               TwistMode mode) {
  Evaluator ev(g, mode);
  Contribution c;
  c.tree = kt;
  c.value = ev.tree_value(kt, &c.provenance);
  return c;
}

RatFun sum_over_trees(const GkmGraph& g, int root,
                      const std::vector<long>& degree, TwistMode mode,
                      int jobs) {
  std::vector<TreeNode> kts;
  std::vector<size_t> group_of;  // cohomological tree index per K-tree
  {
    auto coh = enumerate_trees(g, root, degree);
    std::sort(coh.begin(), coh.end());
    for (size_t ci = 0; ci < coh.size(); ci++)
      for (const auto& kt : promote(coh[ci])) {
        kts.push_back(kt);
        group_of.push_back(ci);
      }
  }
  std::vector<RatFun> vals(kts.size());
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || kts.size() <= 1) {
    Evaluator ev(g, mode);
    for (size_t i = 0; i < kts.size(); i++) vals[i] = ev.tree_value(kts[i]);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; t++)
      pool.emplace_back([&]() {
        Evaluator ev(g, mode);
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= kts.size()) break;
          vals[i] = ev.tree_value(kts[i]);
        }
      });
    for (auto& th : pool) th.join();
  }
  Evaluator ev(g, mode);
  if (kts.empty()) return RatFun::one(ev.nvars());  // degree 0
  // sum sector variants of each cohomological tree first: those subsums
  // collapse the fractional-power factors, keeping the outer sum small
  std::vector<std::vector<RatFun>> buckets(group_of.back() + 1);
  for (size_t i = 0; i < vals.size(); i++)
    buckets[group_of[i]].push_back(vals[i]);
  std::vector<RatFun> partial(buckets.size());
  for (size_t ci = 0; ci < buckets.size(); ci++)
    partial[ci] = RatFun::sum(buckets[ci]);
  return ev.j_prefactor(root) * RatFun::sum(partial);
}

}  // namespace gkmloc
