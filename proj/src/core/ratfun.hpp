#pragma once

#include <map>
#include <optional>
#include <string>

#include "laurent.hpp"

namespace gkmloc {

// Rational function kept in factored form:
//   unit (a scalar times one monomial) * prod_i p_i^{e_i}
// with Laurent-polynomial factors p_i and signed integer exponents e_i.
// Every factor is normalized (componentwise-minimal exponent extracted into
// the unit, lex-smallest term scaled to coefficient 1) and the factor list is
// kept sorted, so equal products have identical representations.
//
// Addition forms a common denominator from the union of negative-exponent
// factors and then cancels by trial division, so denominators stay factored
// into the binomials they were built from.
class RatFun {
public:
  RatFun() : nv_(0) {}  // zero with unknown variable count
  explicit RatFun(size_t nvars) : nv_(nvars) {}
  static RatFun one(size_t nvars);
  static RatFun from_monomial(size_t nvars, const Monomial& m);
  static RatFun from_laurent(size_t nvars, const Laurent& p);
  // (1 - m)^k
  static RatFun binomial_pow(size_t nvars, const Monomial& m, long k);

  size_t nvars() const { return nv_; }
  bool is_zero() const { return u_.c.is_zero(); }
  bool is_one() const { return u_.is_one() && f_.empty(); }

  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun operator+(const RatFun& o) const;
  // n-ary sum over one common denominator; much cheaper than folding +
  static RatFun sum(const std::vector<RatFun>& ts);
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun inv() const;
  RatFun pow(long k) const;

  // exact equality of rational functions (by cross multiplication)
  bool equals(const RatFun& o) const;
  bool operator==(const RatFun& o) const { return equals(o); }

  // substitute variable vi by c * x^e (val.e[vi] must be 0); throws if a
  // denominator factor vanishes at the substitution point
  RatFun subst_var(size_t vi, const Monomial& val) const;

  // residue of f dq/q at the point q = q0 (q0.e[vi] == 0), where q is
  // variable vi.  Requires the pole there to be at most simple; returns the
  // zero function if f is regular at q0.
  RatFun residue_at(size_t vi, const Monomial& q0) const;

  // list of denominator factors vanishing at variable vi == q0, with their
  // multiplicities (used to locate poles before taking residues)
  long pole_order(size_t vi, const Monomial& q0) const;

  // top degree in variable vi (degree of numerator minus denominator);
  // additive over factors, no expansion needed.  Zero function: nullopt.
  std::optional<Rat> top_degree(size_t vi) const;
  // valuation of the Laurent expansion around vi = 0
  std::optional<Rat> low_degree(size_t vi) const;

  // max over the support of <sigma, a-exponents> for numerator minus
  // denominator: the growth exponent of f along a(t) = t^sigma
  std::optional<Rat> newton_degree(const std::vector<Rat>& sigma,
                                   size_t na) const;

  // expanded numerator (unit * positive factors) and denominator (product of
  // negative factors); num carries the full unit including its scalar
  std::pair<Laurent, Laurent> expand_frac() const;
  // fully expanded form; nullopt if the denominator does not divide out
  std::optional<Laurent> expand() const;

  // canonical factored text form
  std::string str(size_t na) const;

  const Monomial& unit() const { return u_; }
  const std::map<Laurent, long>& factors() const { return f_; }

private:
  size_t nv_;
  Monomial u_;                 // zero function <=> u_.c == 0 (factors empty)
  std::map<Laurent, long> f_;  // normalized factor -> nonzero exponent

  void mul_factor(const Laurent& p, long k);  // normalizes and merges
  void make_zero();
};

// q-Pochhammer (x; b)_n = prod_{i=0}^{n-1} (1 - x b^i), with the standard
// extension (x; b)_{-n} = 1 / ((x b^{-n}; b)_n) for n > 0.  With `reduced`
// set, factors that vanish identically (x b^i == 1) are skipped.
RatFun q_pochhammer(size_t nvars, const Monomial& x, const Monomial& b, long n,
                    bool reduced = false);

}  // namespace gkmloc
