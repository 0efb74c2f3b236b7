#pragma once

#include <map>

#include "localization.hpp"

namespace gkmloc {

// J-series truncated at a multidegree cap: degree vector -> coefficient.
struct JSeries {
  int root = 0;
  TwistMode mode = TwistMode::cotangent;
  std::vector<long> cap;
  std::map<std::vector<long>, RatFun> terms;
};

// localization J-series over the degree box [0, cap]
JSeries compute_jseries(const GkmGraph& g, int root, TwistMode mode,
                        const std::vector<long>& cap, int jobs = 1);

// q-hypergeometric closed form for P^n at fixed point i:
// z^d coefficient = prod_j (hbar a_i/a_j; q)_d / (q a_i/a_j; q)_d
JSeries hypergeometric_I(int n, int i, long cap);

// quasimap vertex series for the cotangent bundle of SL_n/B, summed over the
// cone C = { d_{i,j} >= 0 } with d_{n,j} = 0; keys are the flattened tuples
// (d_{1,1}, d_{2,1}, d_{2,2}, ...).  The cone predicate is pluggable.
std::map<std::vector<long>, RatFun> quasimap_vertex_V(
    int n, long cap,
    const std::function<bool(const std::vector<long>&)>& cone = nullptr);

// structural check that every stored coefficient is a product of paired
// factors (1 - hbar w q^t) / (1 - q w q^t): numerator and denominator factors
// match up under swapping the single hbar for one extra power of q
bool is_self_dual_form(const JSeries& s);

struct CompareEntry {
  std::vector<long> degree;
  bool equal;
  RatFun difference;
};

// degreewise exact comparison over the degrees both series carry
std::vector<CompareEntry> compare_series(const JSeries& a, const JSeries& b);

}  // namespace gkmloc
