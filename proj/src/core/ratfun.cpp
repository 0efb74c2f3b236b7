#include "ratfun.hpp"

#include <sstream>
#include <stdexcept>

namespace gkmloc {

namespace {

// split a nonzero Laurent polynomial into (unit monomial, normalized part):
// p == unit * norm, norm has componentwise-minimal exponent zero and its
// lex-smallest term has coefficient 1
std::pair<Monomial, Laurent> normalize_poly(const Laurent& p) {
  if (p.is_zero()) throw std::runtime_error("normalize_poly: zero polynomial");
  if (p.t.size() == 1) {
    const auto& [e, c] = *p.t.begin();
    return {Monomial{c, e}, Laurent()};
  }
  ExpVec sh = p.exp_min();
  Laurent q = p * Monomial{Cyclo(Rat(1)), -sh};
  Cyclo c0 = q.t.begin()->second;
  q = q * Monomial{c0.inv(), ExpVec(sh.size())};
  return {Monomial{c0, sh}, q};
}

}  // namespace

void RatFun::make_zero() {
  u_ = Monomial();
  f_.clear();
}

RatFun RatFun::one(size_t nvars) {
  RatFun r(nvars);
  r.u_ = Monomial{Cyclo(Rat(1)), ExpVec(nvars)};
  return r;
}

RatFun RatFun::from_monomial(size_t nvars, const Monomial& m) {
  if (m.c.is_zero()) return RatFun(nvars);
  RatFun r(nvars);
  r.u_ = m;
  return r;
}

RatFun RatFun::from_laurent(size_t nvars, const Laurent& p) {
  if (p.is_zero()) return RatFun(nvars);
  RatFun r = one(nvars);
  r.mul_factor(p, 1);
  return r;
}

RatFun RatFun::binomial_pow(size_t nvars, const Monomial& m, long k) {
  Laurent p = Laurent::binomial(nvars, m);
  if (p.is_zero()) {
    if (k > 0) return RatFun(nvars);
    throw std::runtime_error("binomial_pow: vanishing factor in denominator");
  }
  RatFun r = one(nvars);
  if (k != 0) r.mul_factor(p, k);
  return r;
}

void RatFun::mul_factor(const Laurent& p, long k) {
  auto [um, norm] = normalize_poly(p);
  u_ = u_ * Monomial{um.c.pow(k), um.e.scaled(Rat(k))};
  if (norm.is_zero()) return;  // p was a single term, fully absorbed
  auto it = f_.find(norm);
  if (it == f_.end()) {
    f_.emplace(std::move(norm), k);
  } else {
    it->second += k;
    if (it->second == 0) f_.erase(it);
  }
}

RatFun RatFun::operator*(const RatFun& o) const {
  size_t nv = nv_ ? nv_ : o.nv_;
  if (is_zero() || o.is_zero()) return RatFun(nv);
  RatFun r(nv);
  r.u_ = u_ * o.u_;
  r.f_ = f_;
  for (const auto& [p, e] : o.f_) {
    auto it = r.f_.find(p);
    if (it == r.f_.end()) {
      r.f_.emplace(p, e);
    } else {
      it->second += e;
      if (it->second == 0) r.f_.erase(it);
    }
  }
  return r;
}

RatFun RatFun::inv() const {
  if (is_zero()) throw std::runtime_error("RatFun::inv: division by zero");
  RatFun r(nv_);
  r.u_ = u_.inv();
  for (const auto& [p, e] : f_) r.f_.emplace(p, -e);
  return r;
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inv(); }

RatFun RatFun::pow(long k) const {
  if (k == 0) return one(nv_);
  if (k < 0) return inv().pow(-k);
  if (is_zero()) return RatFun(nv_);
  RatFun r(nv_);
  r.u_ = u_.pow(k);
  for (const auto& [p, e] : f_) r.f_.emplace(p, e * k);
  return r;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.u_.c = -r.u_.c;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const { return sum({*this, o}); }

RatFun RatFun::sum(const std::vector<RatFun>& ts) {
  size_t nv = 0;
  for (const auto& t : ts)
    if (t.nvars()) nv = t.nvars();
  std::vector<const RatFun*> live;
  for (const auto& t : ts)
    if (!t.is_zero()) live.push_back(&t);
  if (live.empty()) return RatFun(nv);
  if (live.size() == 1) return *live[0];
  // common denominator: for every factor, the largest denominator multiplicity
  std::map<Laurent, long> den;
  for (const RatFun* t : live)
    for (const auto& [p, e] : t->f_)
      if (e < 0) {
        long m = -e;
        auto it = den.find(p);
        if (it == den.end())
          den.emplace(p, m);
        else if (it->second < m)
          it->second = m;
      }
  // numerator of each term against the common denominator
  Laurent s;
  for (const RatFun* t : live) {
    Laurent n = Laurent::from_monomial(t->u_);
    for (const auto& [p, m] : den) {
      long have = 0;
      auto it = t->f_.find(p);
      if (it != t->f_.end() && it->second < 0) have = -it->second;
      for (long i = 0; i < m - have; i++) n = n * p;
    }
    for (const auto& [p, e] : t->f_)
      for (long i = 0; i < e; i++) n = n * p;
    for (const auto& [e, c] : n.t) s.add_term(e, c);
  }
  RatFun r(nv);
  if (s.is_zero()) return r;
  r.u_ = Monomial{Cyclo(Rat(1)), ExpVec(nv)};
  for (const auto& [p, m] : den) r.f_.emplace(p, -m);
  // extract the numerator's unit, then cancel against denominator factors
  auto [um, sn] = normalize_poly(s);
  r.u_ = r.u_ * um;
  if (!sn.is_zero()) {
    for (auto it = r.f_.begin(); it != r.f_.end();) {
      bool advanced = false;
      while (it->second < 0 && !sn.is_zero()) {
        auto q = sn.divide_exact(it->first);
        if (!q) break;
        auto [qu, qn] = normalize_poly(*q);
        r.u_ = r.u_ * qu;
        sn = std::move(qn);
        it->second++;
      }
      if (it->second == 0) {
        it = r.f_.erase(it);
        advanced = true;
      }
      if (!advanced) ++it;
    }
  }
  if (!sn.is_zero()) r.mul_factor(sn, 1);
  return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

std::pair<Laurent, Laurent> RatFun::expand_frac() const {
  if (is_zero()) return {Laurent(), Laurent::one(nv_)};
  Laurent num = Laurent::from_monomial(u_);
  Laurent den = Laurent::one(nv_);
  for (const auto& [p, e] : f_) {
    long m = e > 0 ? e : -e;
    Laurent& tgt = e > 0 ? num : den;
    for (long i = 0; i < m; i++) tgt = tgt * p;
  }
  return {num, den};
}

std::optional<Laurent> RatFun::expand() const {
  if (is_zero()) return Laurent();
  Laurent num = Laurent::from_monomial(u_);
  for (const auto& [p, e] : f_)
    for (long i = 0; i < e; i++) num = num * p;
  for (const auto& [p, e] : f_)
    for (long i = 0; i < -e; i++) {
      auto q = num.divide_exact(p);
      if (!q) return std::nullopt;
      num = std::move(*q);
    }
  return num;
}

bool RatFun::equals(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  // compare units times cancelled factor multisets first (cheap exact path)
  if (u_.c == o.u_.c && u_.e == o.u_.e && f_ == o.f_) return true;
  auto [na, da] = expand_frac();
  auto [nb, db] = o.expand_frac();
  return na * db == nb * da;
}

RatFun RatFun::subst_var(size_t vi, const Monomial& val) const {
  if (is_zero()) return RatFun(nv_);
  Rat k = u_.e.e[vi];
  if (k.get_den() != 1)
    throw std::runtime_error("subst_var: fractional exponent on variable");
  Monomial vp = val.pow((long)k.get_num().get_si());
  RatFun r = one(nv_);
  ExpVec ue = u_.e;
  ue.e[vi] = 0;
  r.u_ = Monomial{u_.c * vp.c, ue + vp.e};
  for (const auto& [p, e] : f_) {
    Laurent ps = p.subst_var(vi, val);
    if (ps.is_zero()) {
      if (e < 0)
        throw std::runtime_error("subst_var: denominator vanishes");
      return RatFun(nv_);
    }
    r.mul_factor(ps, e);
  }
  return r;
}

long RatFun::pole_order(size_t vi, const Monomial& q0) const {
  if (is_zero()) return 0;
  long ord = 0;
  for (const auto& [p, e] : f_) {
    if (e >= 0) continue;
    if (p.subst_var(vi, q0).is_zero()) ord += -e;
  }
  return ord;
}

RatFun RatFun::residue_at(size_t vi, const Monomial& q0) const {
  long ord = pole_order(vi, q0);
  if (ord == 0) return RatFun(nv_);
  if (ord > 1) throw std::runtime_error("residue_at: pole order exceeds one");
  const Laurent* bp = nullptr;
  for (const auto& [p, e] : f_)
    if (e < 0 && p.subst_var(vi, q0).is_zero()) bp = &p;
  Laurent b = *bp;
  RatFun g = *this;
  g.mul_factor(b, 1);  // remove the vanishing denominator factor
  RatFun gs = g.subst_var(vi, q0);
  // residue of f dq/q at a simple zero q0 of b: g(q0) / (q b'(q))|_{q0}
  Laurent qdb;
  for (const auto& [e, c] : b.t) qdb.add_term(e, c * Cyclo(Rat(e.e[vi])));
  Laurent s = qdb.subst_var(vi, q0);
  if (s.t.size() != 1)
    throw std::runtime_error("residue_at: derivative not monomial at pole");
  Monomial sm{s.t.begin()->second, s.t.begin()->first};
  return gs * from_monomial(nv_, sm.inv());
}

std::optional<Rat> RatFun::top_degree(size_t vi) const {
  if (is_zero()) return std::nullopt;
  Rat r = u_.e.e[vi];
  for (const auto& [p, e] : f_) r += Rat(e) * p.max_exp(vi);
  return r;
}

std::optional<Rat> RatFun::low_degree(size_t vi) const {
  if (is_zero()) return std::nullopt;
  Rat r = u_.e.e[vi];
  // valuation at vi = 0 is additive over factors: val(p^e) = e * min_exp(p)
  for (const auto& [p, e] : f_) r += Rat(e) * p.min_exp(vi);
  return r;
}

std::optional<Rat> RatFun::newton_degree(const std::vector<Rat>& sigma,
                                         size_t na) const {
  if (is_zero()) return std::nullopt;
  Rat r = u_.e.dot_a(sigma, na);
  for (const auto& [p, e] : f_) r += Rat(e) * p.newton_max(sigma, na);
  return r;
}

std::string RatFun::str(size_t na) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << u_.c.str();
  std::string ms = u_.e.str(na);
  if (ms != "1") os << " * " << ms;
  for (const auto& [p, e] : f_) {
    os << " * (" << p.str(na) << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

RatFun q_pochhammer(size_t nvars, const Monomial& x, const Monomial& b, long n,
                    bool reduced) {
  if (n < 0) {
    Monomial xs = x * b.pow(n);
    return q_pochhammer(nvars, xs, b, -n, reduced).inv();
  }
  RatFun r = RatFun::one(nvars);
  Monomial cur = x;
  for (long i = 0; i < n; i++) {
    if (cur.is_one()) {
      if (!reduced) return RatFun(nvars);
    } else {
      r = r * RatFun::binomial_pow(nvars, cur, 1);
    }
    cur = cur * b;
  }
  return r;
}

}  // namespace gkmloc
