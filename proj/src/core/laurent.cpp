#include "laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace gkmloc {

Laurent Laurent::from_monomial(const Monomial& m) {
  Laurent r;
  if (!m.c.is_zero()) r.t.emplace(m.e, m.c);
  return r;
}

Laurent Laurent::one(size_t nvars) {
  return from_monomial({Cyclo(Rat(1)), ExpVec(nvars)});
}

Laurent Laurent::binomial(size_t nvars, const Monomial& m) {
  Laurent r = one(nvars);
  r.add_term(m.e, -m.c);
  return r;
}

void Laurent::add_term(const ExpVec& e, const Cyclo& c) {
  if (c.is_zero()) return;
  auto it = t.find(e);
  if (it == t.end()) {
    t.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.t) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.t) r.add_term(e, -c);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : t) r.t.emplace(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : t)
    for (const auto& [e2, c2] : o.t) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Laurent Laurent::operator*(const Monomial& m) const {
  Laurent r;
  if (m.c.is_zero()) return r;
  for (const auto& [e, c] : t) r.t.emplace(e + m.e, c * m.c);
  return r;
}

bool Laurent::operator<(const Laurent& o) const {
  auto a = t.begin(), b = o.t.begin();
  for (; a != t.end() && b != o.t.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == t.end() && b != o.t.end();
}

Laurent Laurent::subst_var(size_t vi, const Monomial& val) const {
  Laurent r;
  for (const auto& [e, c] : t) {
    Rat k = e.e[vi];
    if (k.get_den() != 1)
      throw std::runtime_error("subst_var: fractional exponent on variable");
    long ki = (long)k.get_num().get_si();
    ExpVec ne = e;
    ne.e[vi] = 0;
    Monomial vp = val.pow(ki);
    r.add_term(ne + vp.e, c * vp.c);
  }
  return r;
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& d) const {
  if (d.is_zero()) throw std::runtime_error("divide_exact: zero divisor");
  Laurent rem = *this;
  Laurent q;
  // leading term of the divisor (lex-largest)
  auto dl = std::prev(d.t.end());
  size_t guard = 4 * (rem.t.size() + 4) * (d.t.size() + 4) + 1000;
  Cyclo dinv = dl->second.inv();
  while (!rem.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    auto rl = std::prev(rem.t.end());
    ExpVec rle = rl->first;
    Monomial m{rl->second * dinv, rl->first - dl->first};
    q.add_term(m.e, m.c);
    // subtract d * m from the remainder in place
    for (const auto& [de, dc] : d.t) rem.add_term(de + m.e, -(dc * m.c));
    if (!rem.is_zero() && !(std::prev(rem.t.end())->first < rle))
      return std::nullopt;  // no progress: not divisible
  }
  return q;
}

ExpVec Laurent::exp_min() const {
  if (t.empty()) return ExpVec();
  ExpVec r = t.begin()->first;
  for (const auto& [e, c] : t)
    for (size_t i = 0; i < r.size(); i++)
      if (e.e[i] < r.e[i]) r.e[i] = e.e[i];
  return r;
}

Rat Laurent::max_exp(size_t vi) const {
  Rat r = 0;
  bool first = true;
  for (const auto& [e, c] : t) {
    if (first || e.e[vi] > r) r = e.e[vi];
    first = false;
  }
  return r;
}

Rat Laurent::min_exp(size_t vi) const {
  Rat r = 0;
  bool first = true;
  for (const auto& [e, c] : t) {
    if (first || e.e[vi] < r) r = e.e[vi];
    first = false;
  }
  return r;
}

Rat Laurent::newton_max(const std::vector<Rat>& sigma, size_t na) const {
  Rat r = 0;
  bool first = true;
  for (const auto& [e, c] : t) {
    Rat v = e.dot_a(sigma, na);
    if (first || v > r) r = v;
    first = false;
  }
  return r;
}

std::string Laurent::str(size_t na) const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    std::string ms = e.str(na);
    if (ms == "1") {
      os << cs;
    } else if (cs == "1") {
      os << ms;
    } else {
      os << cs << "*" << ms;
    }
  }
  return os.str();
}

}  // namespace gkmloc
