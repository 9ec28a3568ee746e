#include "dycktiles/poly.hpp"

#include <sstream>

namespace dycktiles {

MultiPoly MultiPoly::monomial(BigInt c, std::int64_t eq, std::int64_t et,
                              std::int64_t es) {
  MultiPoly p;
  if (c != 0) p.terms_[{eq, et, es}] = std::move(c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      r.add_term({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
  return r;
}

MultiPoly operator*(const BigInt& c, const MultiPoly& p) {
  MultiPoly r;
  if (c == 0) return r;
  for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
  return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& o) const {
  if (o.is_zero()) throw std::domain_error("divide_exact: division by zero");
  // Long division by the lex-leading term of o.  Exactness is required;
  // any nonzero remainder is an error.
  MultiPoly rem = *this;
  MultiPoly quot;
  const auto lead = std::prev(o.terms_.end());
  const Monomial& lm = lead->first;
  const BigInt& lc = lead->second;
  while (!rem.is_zero()) {
    const auto rl = std::prev(rem.terms_.end());
    Monomial m = {rl->first[0] - lm[0], rl->first[1] - lm[1],
                  rl->first[2] - lm[2]};
    if (m[0] < 0 || m[1] < 0 || m[2] < 0 || rl->second % lc != 0)
      throw std::domain_error("divide_exact: inexact division");
    BigInt c = rl->second / lc;
    MultiPoly piece = MultiPoly::monomial(c, m[0], m[1], m[2]);
    quot += piece;
    rem -= piece * o;
  }
  return quot;
}

MultiPoly MultiPoly::subst_q_power(std::int64_t m) const {
  MultiPoly r;
  for (const auto& [mo, c] : terms_) r.terms_[{mo[0] * m, mo[1], mo[2]}] = c;
  return r;
}

BigInt MultiPoly::eval_all_one() const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::int64_t MultiPoly::degree_q() const {
  std::int64_t d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[0]);
  return d;
}

MultiPoly MultiPoly::eval_ts(const BigInt& tval, const BigInt& sval) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    BigInt f = c;
    for (std::int64_t i = 0; i < m[1]; ++i) f *= tval;
    for (std::int64_t i = 0; i < m[2]; ++i) f *= sval;
    r.add_term({m[0], 0, 0}, f);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    auto app = [&vars](const char* v, std::int64_t e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += v;
      if (e != 1) vars += "^" + std::to_string(e);
    };
    app("q", m[0]);
    app("t", m[1]);
    app("s", m[2]);
    if (vars.empty()) {
      out << a.str();
    } else if (a == 1) {
      out << vars;
    } else {
      out << a.str() << "*" << vars;
    }
  }
  return out.str();
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  return RationalFn(num_ * o.num_, den_ * o.den_);
}

std::string RationalFn::str() const {
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

MultiPoly qint(std::int64_t n) { return qint_base(n, 1); }

MultiPoly qint_base(std::int64_t n, std::int64_t m) {
  MultiPoly p;
  for (std::int64_t i = 0; i < n; ++i) p += MultiPoly::monomial(1, i * m);
  return p;
}

MultiPoly qfact(std::int64_t n) { return qfact_base(n, 1); }

MultiPoly qfact_base(std::int64_t n, std::int64_t m) {
  MultiPoly p(1);
  for (std::int64_t i = 1; i <= n; ++i) p = p * qint_base(i, m);
  return p;
}

MultiPoly qbinom(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return MultiPoly(0);
  // [a]!/([a-b]![b]!) computed by exact division.
  return qfact(a).divide_exact(qfact(a - b) * qfact(b));
}

BigInt factorial(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace dycktiles
