#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace gkmloc {

using Rat = mpq_class;

// Element of the cyclotomic field Q(zeta_N), stored on the power basis
// 1, z, ..., z^{phi(N)-1} reduced modulo the N-th cyclotomic polynomial.
// Mixed-order arithmetic promotes both operands to the lcm order, which is
// an exact embedding (zeta_M = zeta_N^{N/M} for M | N).
class Cyclo {
public:
  Cyclo() : n_(1) {}
  explicit Cyclo(const Rat& r);
  explicit Cyclo(long v);
  static Cyclo zeta(long n, long k = 1);

  long order() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rat rat() const;  // requires is_rational()
  bool is_one() const;

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo inv() const;  // requires nonzero
  Cyclo pow(long e) const;
  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  bool operator<(const Cyclo& o) const;  // total order, for canonical containers

  // True iff the value is a root of unity (necessarily of order dividing 2N).
  bool is_root_of_unity() const;

  // Galois conjugate zeta_N -> zeta_N^k; requires gcd(k, N) = 1.
  Cyclo galois(long k) const;

  std::string str() const;

private:
  long n_;
  std::vector<Rat> c_;  // trailing zeros trimmed; empty vector = 0

  Cyclo(long n, std::vector<Rat> c);
  Cyclo promoted(long m) const;  // requires n_ | m
  void trim();
};

inline Cyclo operator*(const Rat& r, const Cyclo& c) { return Cyclo(r) * c; }

long euler_phi(long n);

}  // namespace gkmloc
