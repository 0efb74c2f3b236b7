#pragma once

#include "localization.hpp"

namespace gkmloc {

// Predicted growth class of a tree contribution in the equivariant limits.
// Comparable to exact contributions only through newton_degree along
// directions, never by value.
struct AsymptoticClass {
  RatFun value;
};

// exact membership of p in the convex hull of pts (rational simplex method)
bool in_hull(const std::vector<std::vector<Rat>>& pts,
             const std::vector<Rat>& p);

// Newton polytope of the numerator (projected to the a-exponents) contained
// in that of the denominator; equivalently newton_degree(f, sigma) <= 0 for
// every direction sigma
bool is_balanced(const RatFun& f);

// vertex factor of the growth prediction, from the outgoing edge weights:
// 1 - w1 at valency 1, 1/(1 - w1 w2) at valency 2, prod 1/(1 - wi) above
RatFun c_of_vertex(size_t nvars, const std::vector<Monomial>& ws);

// growth class of a chain p = v0 - v1 - ... - vk with cover weights wi:
// wedge_{-hbar}T_p / wedge_{-1}T_q * prod 1/(1 - wi^-1 w_{i+1}) * (1 - wk^-1)
AsymptoticClass predict_chain(const GkmGraph& g, const TreeNode& t,
                              TwistMode mode);

// growth class of a general 1-pointed tree:
// prod_{leaves qi} wedge_{-hbar}T_p / wedge_{-1}T_{qi} * prod_v c(v)
AsymptoticClass predict_tree(const GkmGraph& g, const TreeNode& t,
                             TwistMode mode);

struct CompareLine {
  std::vector<Rat> sigma;
  Rat exact_deg;
  Rat pred_deg;
  bool equal = false;
};

struct CompareReport {
  std::vector<CompareLine> lines;
  bool pass() const {
    for (const auto& l : lines)
      if (!l.equal) return false;
    return true;
  }
};

// per-direction equality of newton_degree between an exact contribution and a
// predicted class
CompareReport compare_asymptotics(const RatFun& exact,
                                  const AsymptoticClass& pred,
                                  const std::vector<std::vector<Rat>>& sigmas);

// deterministic sample of small integer directions in the a-variables
std::vector<std::vector<Rat>> sample_directions(size_t na, int count,
                                                unsigned seed);

}  // namespace gkmloc
