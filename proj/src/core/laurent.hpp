#pragma once

#include <map>
#include <optional>
#include <string>

#include "expvec.hpp"

namespace gkmloc {

// Multivariate Laurent polynomial: exponent vector -> cyclotomic coefficient.
// Terms are kept in lexicographic order so iteration (and therefore
// serialization and parallel summation) is deterministic.
class Laurent {
public:
  std::map<ExpVec, Cyclo> t;

  Laurent() = default;
  static Laurent zero() { return Laurent(); }
  static Laurent from_monomial(const Monomial& m);
  static Laurent one(size_t nvars);
  // 1 - c * x^e
  static Laurent binomial(size_t nvars, const Monomial& m);

  bool is_zero() const { return t.empty(); }
  size_t nvars() const { return t.empty() ? 0 : t.begin()->first.size(); }

  void add_term(const ExpVec& e, const Cyclo& c);

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator*(const Monomial& m) const;
  bool operator==(const Laurent& o) const { return t == o.t; }
  bool operator<(const Laurent& o) const;  // total order for canonical merging

  // substitute variable `vi` by the value c * x^e (e must have a zero entry
  // at vi); requires integer exponents on vi
  Laurent subst_var(size_t vi, const Monomial& val) const;

  // exact division; nullopt if not divisible
  std::optional<Laurent> divide_exact(const Laurent& d) const;

  // componentwise minimum of exponents over all terms (zero vector if empty)
  ExpVec exp_min() const;

  // max exponent of variable vi over terms (0 if empty)
  Rat max_exp(size_t vi) const;
  Rat min_exp(size_t vi) const;

  // max over terms of <sigma, a-part>
  Rat newton_max(const std::vector<Rat>& sigma, size_t na) const;

  std::string str(size_t na) const;
};

}  // namespace gkmloc
