#include "cyclo.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gkmloc {

namespace {

using Poly = std::vector<Rat>;  // dense, index = degree

int deg(const Poly& p) {
  for (int i = (int)p.size() - 1; i >= 0; i--)
    if (p[i] != 0) return i;
  return -1;
}

void trimp(Poly& p) { p.resize(deg(p) + 1); }

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); j++)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  trimp(r);
  return r;
}

// remainder of p modulo monic m
Poly pmod(Poly p, const Poly& m) {
  int dm = deg(m);
  for (int i = deg(p); i >= dm; i--) {
    if (p[i] == 0) continue;
    Rat c = p[i];
    for (int j = 0; j <= dm; j++) p[i - dm + j] -= c * m[j];
  }
  trimp(p);
  return p;
}

// exact quotient p / m for monic m dividing p
Poly pdiv_exact(Poly p, const Poly& m) {
  int dm = deg(m), dp = deg(p);
  if (dp < dm) {
    if (dp >= 0) throw std::runtime_error("pdiv_exact: not divisible");
    return {};
  }
  Poly q(dp - dm + 1);
  for (int i = dp; i >= dm; i--) {
    Rat c = p[i];
    if (c == 0) continue;
    q[i - dm] = c;
    for (int j = 0; j <= dm; j++) p[i - dm + j] -= c * m[j];
  }
  if (deg(p) >= 0) throw std::runtime_error("pdiv_exact: nonzero remainder");
  return q;
}

// cyclotomic polynomial Phi_n (monic, integer coefficients)
const Poly& cyclotomic_poly(long n) {
  static std::map<long, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::function<const Poly&(long)> get = [&](long k) -> const Poly& {
    auto jt = cache.find(k);
    if (jt != cache.end()) return jt->second;
    Poly p(k + 1);
    p[0] = -1;
    p[k] = 1;  // x^k - 1
    for (long d = 1; d < k; d++)
      if (k % d == 0) p = pdiv_exact(std::move(p), get(d));
    return cache.emplace(k, std::move(p)).first->second;
  };
  return get(n);
}

// extended gcd in Q[x]: returns (g, u) with u*a = g mod m, g = gcd(a, m) monic
std::pair<Poly, Poly> ext_gcd_mod(Poly a, Poly m) {
  Poly r0 = std::move(m), r1 = std::move(a);
  Poly u0 = {}, u1 = {Rat(1)};
  while (deg(r1) >= 0) {
    // divide r0 by r1
    Poly q(std::max(0, deg(r0) - deg(r1) + 1));
    Poly rem = r0;
    int d1 = deg(r1);
    Rat lc = r1[d1];
    for (int i = deg(rem); i >= d1; i--) {
      if (rem[i] == 0) continue;
      Rat c = rem[i] / lc;
      q[i - d1] = c;
      for (int j = 0; j <= d1; j++) rem[i - d1 + j] -= c * r1[j];
    }
    trimp(rem);
    Poly u2 = u0;
    Poly qu = pmul(q, u1);
    if (u2.size() < qu.size()) u2.resize(qu.size());
    for (size_t i = 0; i < qu.size(); i++) u2[i] -= qu[i];
    trimp(u2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // normalize gcd monic
  int d0 = deg(r0);
  if (d0 >= 0) {
    Rat lc = r0[d0];
    for (auto& c : r0) c /= lc;
    for (auto& c : u0) c /= lc;
  }
  return {r0, u0};
}

}  // namespace

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; p++) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

Cyclo::Cyclo(long n, std::vector<Rat> c) : n_(n), c_(std::move(c)) { trim(); }

void Cyclo::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) n_ = std::max(n_, 1L);
}

Cyclo::Cyclo(const Rat& r) : n_(1) {
  if (r != 0) c_.push_back(r);
}

Cyclo::Cyclo(long v) : Cyclo(Rat(v)) {}

Cyclo Cyclo::zeta(long n, long k) {
  k %= n;
  if (k < 0) k += n;
  Poly p(k + 1);
  p[k] = 1;
  p = pmod(std::move(p), cyclotomic_poly(n));
  return Cyclo(n, std::move(p));
}

Rat Cyclo::rat() const {
  if (c_.empty()) return Rat(0);
  if (c_.size() != 1) throw std::runtime_error("Cyclo::rat: not rational");
  return c_[0];
}

bool Cyclo::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Cyclo Cyclo::promoted(long m) const {
  if (m == n_) return *this;
  long step = m / n_;
  Poly p;
  for (size_t i = 0; i < c_.size(); i++) {
    if (c_[i] == 0) continue;
    size_t e = i * step;
    if (p.size() <= e) p.resize(e + 1);
    p[e] += c_[i];
  }
  p = pmod(std::move(p), cyclotomic_poly(m));
  return Cyclo(m, std::move(p));
}

Cyclo Cyclo::operator-() const {
  Poly p = c_;
  for (auto& c : p) c = -c;
  return Cyclo(n_, std::move(p));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  long m = std::lcm(n_, o.n_);
  Cyclo a = promoted(m), b = o.promoted(m);
  if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size());
  for (size_t i = 0; i < b.c_.size(); i++) a.c_[i] += b.c_[i];
  a.trim();
  return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (is_zero() || o.is_zero()) return Cyclo();
  long m = std::lcm(n_, o.n_);
  Cyclo a = promoted(m), b = o.promoted(m);
  Poly p = pmul(a.c_, b.c_);
  p = pmod(std::move(p), cyclotomic_poly(m));
  return Cyclo(m, std::move(p));
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw std::runtime_error("Cyclo::inv: division by zero");
  if (c_.size() == 1) return Cyclo(Rat(1) / c_[0]);
  auto [g, u] = ext_gcd_mod(c_, cyclotomic_poly(n_));
  if (deg(g) != 0) throw std::runtime_error("Cyclo::inv: gcd not constant");
  return Cyclo(n_, std::move(u));
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclo r(Rat(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Cyclo::operator==(const Cyclo& o) const {
  long m = std::lcm(n_, o.n_);
  return promoted(m).c_ == o.promoted(m).c_;
}

bool Cyclo::operator<(const Cyclo& o) const {
  long m = std::lcm(n_, o.n_);
  Cyclo a = promoted(m), b = o.promoted(m);
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t i = 0; i < a.c_.size(); i++)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

Cyclo Cyclo::galois(long k) const {
  if (is_zero() || n_ == 1) return *this;
  k %= n_;
  if (k < 0) k += n_;
  if (std::gcd(k, n_) != 1)
    throw std::runtime_error("Cyclo::galois: exponent not coprime to order");
  Poly p;
  for (size_t i = 0; i < c_.size(); i++) {
    if (c_[i] == 0) continue;
    size_t e = (size_t)((long)i * k % n_);
    if (p.size() <= e) p.resize(e + 1);
    p[e] += c_[i];
  }
  p = pmod(std::move(p), cyclotomic_poly(n_));
  return Cyclo(n_, std::move(p));
}

bool Cyclo::is_root_of_unity() const {
  if (is_zero()) return false;
  return pow(2 * n_).is_one();
}

std::string Cyclo::str() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].get_str();
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t i = 0; i < c_.size(); i++) {
    if (c_[i] == 0) continue;
    if (!first && c_[i] > 0) os << "+";
    first = false;
    if (i == 0) {
      os << c_[i].get_str();
    } else {
      if (c_[i] == -1)
        os << "-";
      else if (c_[i] != 1)
        os << c_[i].get_str() << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
  }
  os << ")";
  return os.str();
}

}  // namespace gkmloc
