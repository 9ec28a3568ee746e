#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dycktiles {

using BigInt = boost::multiprecision::cpp_int;

// Exponent triple (e_q, e_t, e_s), compared lexicographically.
using Monomial = std::array<std::int64_t, 3>;

// Exact polynomial in q, t, s with arbitrary-precision integer coefficients.
// Canonical form: no zero coefficients are stored, so operator== on the term
// map is structural equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(BigInt c) {
    if (c != 0) terms_[{0, 0, 0}] = std::move(c);
  }
  explicit MultiPoly(long c) : MultiPoly(BigInt(c)) {}

  static MultiPoly monomial(BigInt c, std::int64_t eq, std::int64_t et = 0,
                            std::int64_t es = 0);
  static MultiPoly q() { return monomial(1, 1); }
  static MultiPoly t() { return monomial(1, 0, 1); }
  static MultiPoly s() { return monomial(1, 0, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return terms_ != o.terms_; }

  // Exact division; throws std::domain_error when o does not divide *this
  // or when o is zero.  All identities in this project divide exactly.
  MultiPoly divide_exact(const MultiPoly& o) const;

  // Substitute q -> q^m (m >= 1); used for [n]_{q^2} style expressions.
  MultiPoly subst_q_power(std::int64_t m) const;

  // Evaluation at q=t=s=1 (sum of coefficients).
  BigInt eval_all_one() const;

  // Total degree in q of the highest q-power, -1 for the zero polynomial.
  std::int64_t degree_q() const;

  // Set t = value and s = value as integers (partial specialization used by
  // the t=s=0 checks).
  MultiPoly eval_ts(const BigInt& tval, const BigInt& sval) const;

  // Canonical text form: terms sorted by (e_q,e_t,e_s), e.g. "1 + 2*q + q^2*t".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);
  std::map<Monomial, BigInt> terms_;

  friend MultiPoly operator*(const BigInt& c, const MultiPoly& p);
};

MultiPoly operator*(const BigInt& c, const MultiPoly& p);

// Rational function as a numerator/denominator pair; no normalization is
// performed, equality is tested by cross multiplication.
class RationalFn {
 public:
  RationalFn() : num_(MultiPoly(0)), den_(MultiPoly(1)) {}
  RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
  }
  explicit RationalFn(const MultiPoly& p) : num_(p), den_(MultiPoly(1)) {}

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  bool operator==(const RationalFn& o) const {
    return num_ * o.den_ == o.num_ * den_;
  }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  std::string str() const;

 private:
  MultiPoly num_, den_;
};

// q-integer [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
MultiPoly qint(std::int64_t n);
// q-factorial [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
MultiPoly qfact(std::int64_t n);
// Gaussian binomial; 0 when b < 0 or b > a.
MultiPoly qbinom(std::int64_t a, std::int64_t b);
// [n]_{q^m} = 1 + q^m + ... + q^{m(n-1)}.
MultiPoly qint_base(std::int64_t n, std::int64_t m);
// [n]_{q^m}! = prod_i [i]_{q^m}.
MultiPoly qfact_base(std::int64_t n, std::int64_t m);

BigInt factorial(std::int64_t n);
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace dycktiles
