#pragma once

#include <functional>
#include <optional>

#include "ratfun.hpp"
#include "trees.hpp"

namespace gkmloc {

enum class TwistMode { untwisted, cotangent };

// A localization term: one K-theoretic tree and its raw value (without the
// J-normalization prefactor), plus the factor list it was assembled from.
struct Contribution {
  TreeNode tree;
  RatFun value;
  std::vector<std::pair<std::string, RatFun>> provenance;
};

// Evaluates localization contributions over a fixed GKM graph.  Variables are
// (a_1..a_m, q, hbar); `power` implements Adams operations: an Evaluator of
// power r computes Psi^r of every primitive (variables to the r-th power,
// sector roots zeta -> zeta^r).
class Evaluator {
public:
  Evaluator(const GkmGraph& g, TwistMode mode, long power = 1)
      : g_(g), mode_(mode), r_(power), nv_(g.rank + 2) {}

  size_t nvars() const { return nv_; }
  size_t qvar() const { return g_.rank; }
  size_t hvar() const { return g_.rank + 1; }
  long power() const { return r_; }
  TwistMode mode() const { return mode_; }
  Evaluator powered(long rr) const { return Evaluator(g_, mode_, r_ * rr); }

  // monomial for a weight exponent vector, optionally a frac-th root
  Monomial wval(const std::vector<long>& w, long frac = 1) const;
  // w_Gamma(e, v) = zeta_d^s * w_X^{1/d}, under the Adams power
  Monomial wgamma(const std::vector<long>& w, long d, long s) const;
  Monomial qmono() const;
  Monomial hmono() const;

  // wedge_{-1}T_v (times wedge_{-hbar}T_v in cotangent mode)
  RatFun wedge_A(int v) const;

  // full edge contribution for a degree-d sector-s cover of edge ei seen
  // from v, including the 1/d automorphism factor
  RatFun edge_factor(size_t ei, int v, long d, long s) const;

  // the M_{0,n} vertex integral with slot weights ws (YP closed form,
  // valid for all n >= 1)
  RatFun YP(const std::vector<Monomial>& ws) const;

  struct Slot {
    RatFun num;
    Monomial w;
  };
  // group of k isomorphic legs at a vertex; callbacks produce the leg value
  // times wedge_A and the node weight under a given Adams power
  struct CycGroup {
    long k;
    std::function<RatFun(const Evaluator&)> gammaA;
    std::function<Monomial(const Evaluator&)> w;
  };

  // permutation-equivariant vertex: (1/A)(1/|S_k|) sum over sigma of the
  // Lefschetz trace over sigma-fixed strata
  RatFun perm_vertex(const RatFun& A, const std::vector<Slot>& fixed,
                     const std::vector<CycGroup>& groups) const;

  // raw value of a sectored rooted tree (marked point at the root)
  RatFun tree_value(const TreeNode& kt,
                    std::vector<std::pair<std::string, RatFun>>* prov =
                        nullptr) const;

  // J-normalization prefactor wedge_A(root)/(1-q)
  RatFun j_prefactor(int root) const;

private:
  const GkmGraph& g_;
  TwistMode mode_;
  long r_;
  size_t nv_;

  RatFun vertex_rec(const TreeNode& st, const std::optional<Monomial>& parent_w,
                    bool marked,
                    std::vector<std::pair<std::string, RatFun>>* prov) const;
  RatFun trace_sigma(const std::vector<Slot>& fixed,
                     const std::vector<CycGroup>& groups,
                     const std::vector<std::vector<int>>& combo) const;
  RatFun strata_sum(long rr, const std::vector<Slot>& slots) const;
  const FlagData& flags(size_t ei, int v) const;
};

Contribution tree_contribution(const GkmGraph& g, const TreeNode& kt,
                               TwistMode mode);

// normalized J-term: j_prefactor * sum of raw values over all K-trees of the
// degree; deterministic across `jobs` worker threads
RatFun sum_over_trees(const GkmGraph& g, int root,
                      const std::vector<long>& degree, TwistMode mode,
                      int jobs = 1);

}  // namespace gkmloc
