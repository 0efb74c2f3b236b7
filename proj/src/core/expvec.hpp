#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cyclo.hpp"

namespace gkmloc {

// Exponent vector of a monomial in the torus variables a_1..a_m, then q,
// then hbar. Entries are rationals on a common 1/D lattice; gmp rationals
// keep the lattice exact without tracking D explicitly.
struct ExpVec {
  std::vector<Rat> e;

  ExpVec() = default;
  explicit ExpVec(size_t n) : e(n) {}

  size_t size() const { return e.size(); }
  bool is_zero() const {
    for (const auto& x : e)
      if (x != 0) return false;
    return true;
  }

  ExpVec operator+(const ExpVec& o) const {
    ExpVec r = *this;
    for (size_t i = 0; i < e.size(); i++) r.e[i] += o.e[i];
    return r;
  }
  ExpVec operator-(const ExpVec& o) const {
    ExpVec r = *this;
    for (size_t i = 0; i < e.size(); i++) r.e[i] -= o.e[i];
    return r;
  }
  ExpVec operator-() const {
    ExpVec r = *this;
    for (auto& x : r.e) x = -x;
    return r;
  }
  ExpVec scaled(const Rat& k) const {
    ExpVec r = *this;
    for (auto& x : r.e) x *= k;
    return r;
  }

  bool operator==(const ExpVec& o) const { return e == o.e; }
  bool operator!=(const ExpVec& o) const { return e != o.e; }
  // lexicographic
  bool operator<(const ExpVec& o) const {
    for (size_t i = 0; i < e.size(); i++) {
      if (e[i] != o.e[i]) return e[i] < o.e[i];
    }
    return false;
  }

  // pairing with a direction over the first `na` (a-)variables only
  Rat dot_a(const std::vector<Rat>& sigma, size_t na) const {
    Rat r = 0;
    for (size_t i = 0; i < na && i < e.size(); i++) r += sigma[i] * e[i];
    return r;
  }

  // variable names: a1..am, q, hbar
  std::string str(size_t na) const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < e.size(); i++) {
      if (e[i] == 0) continue;
      if (any) os << " ";
      any = true;
      if (i < na)
        os << "a" << (i + 1);
      else if (i == na)
        os << "q";
      else
        os << "h";
      if (e[i] != 1) os << "^" << e[i].get_str();
    }
    if (!any) return "1";
    return os.str();
  }
};

// A scalar multiple of a single monomial: c * x^e.
struct Monomial {
  Cyclo c;
  ExpVec e;
  Monomial() = default;
  Monomial(Cyclo cc, ExpVec ee) : c(std::move(cc)), e(std::move(ee)) {}
  Monomial operator*(const Monomial& o) const { return {c * o.c, e + o.e}; }
  Monomial inv() const { return {c.inv(), -e}; }
  Monomial pow(long k) const {
    Monomial r = *this;
    r.c = c.pow(k);
    r.e = e.scaled(Rat(k));
    return r;
  }
  bool is_one() const { return c.is_one() && e.is_zero(); }
};

}  // namespace gkmloc
