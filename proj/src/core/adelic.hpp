#pragma once

#include "jfunction.hpp"

namespace gkmloc {

// A q-pole of a J-term, read off a vanishing denominator binomial: the pole
// set is { q : x = 1 } for a monomial x = c * a^alpha * q^m.
struct PoleSpec {
  Monomial x;            // the vanishing monomial, q-exponent m > 0
  long m = 0;            // q-exponent
  long order = 1;        // multiplicity of the factor
  bool root_of_unity = false;  // x has no a-dependence
  bool allowed = false;  // root of unity, or matches an incident edge weight
};

// classify all q-poles of a J-term computed at vertex v of g
std::vector<PoleSpec> pole_locus(const RatFun& f, const GkmGraph& g, int v);

// numerator q-degree strictly below denominator q-degree
bool check_no_regular_part(const RatFun& f);

// f is fixed by every Galois conjugation zeta -> zeta^k, i.e. it lies in the
// rational-coefficient subfield
bool is_zeta_free(const RatFun& f);

// edge contribution E for a degree-m cover of edge ei in sector s, seen from
// v; the factor multiplying the far J-term in the residue recursion
RatFun edge_E(const GkmGraph& g, size_t ei, int v, long m, long s,
              TwistMode mode);

struct EdgeRecursionReport {
  size_t edge = 0;
  int v = 0;
  long m = 1;
  std::vector<long> degree;
  struct Sector {
    long s;
    bool pass;
    RatFun lhs;  // Res_{q=q0} J^{(d)}_v dq/q
    RatFun rhs;  // -J^{(d-m beta)}_{v'}(q0) * E
  };
  std::vector<Sector> sectors;
  bool pass() const {
    for (const auto& s : sectors)
      if (!s.pass) return false;
    return true;
  }
};

// verify Res_{q=q0} J^{(d)}_v dq/q = -J^{(d-m beta(e))}_{v'}(q0) * E at the
// poles q0 = zeta_m^{-s} w_X(e,v)^{-1/m}, s = 0..m-1
EdgeRecursionReport check_edge_recursion(const GkmGraph& g, int v, size_t ei,
                                         long m, const std::vector<long>& degree,
                                         TwistMode mode, int jobs = 1);

// truncated q-exponential: coefficients 1/(q;q)_n of x^n for n = 0..order
std::vector<RatFun> q_exp_series(size_t nvars, size_t qvar, long order);

// degreewise f_d * (lambda q; q)_{ell d}, or divide
std::vector<RatFun> pochhammer_transform(const std::vector<RatFun>& f,
                                         size_t qvar, const Monomial& lambda,
                                         long ell, bool divide);

// structural q-hypergeometric detector for the P^n family: consecutive
// coefficients satisfy term_{d+1}/term_d = prod_j (1 - hbar w_j q^d) /
// (1 - w_j q^{d+1})
bool check_hypergeometric_ratio(const JSeries& s,
                                const std::vector<Monomial>& ws, size_t qvar,
                                size_t hvar);

}  // namespace gkmloc
