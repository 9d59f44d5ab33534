#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "valgrad/field.hpp"

namespace valgrad {

/**
 * Dense univariate polynomial over a base field, coefficients ascending,
 * trailing zeros trimmed. The zero polynomial has no coefficients and
 * degree -1 (an int sentinel, deliberately not a Value).
 */
template <BaseField F>
class Poly {
 public:
  using Elem = typename F::Elem;

  explicit Poly(F field) : field_(std::move(field)) {}
  Poly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly zero(const F& f) { return Poly(f); }
  static Poly one(const F& f) { return constant(f, f.one()); }
  static Poly x(const F& f) { return Poly(f, {f.zero(), f.one()}); }
  static Poly constant(const F& f, Elem c) { return Poly(f, {std::move(c)}); }
  static Poly monomial(const F& f, Elem c, std::size_t deg) {
    std::vector<Elem> v(deg + 1, f.zero());
    v[deg] = std::move(c);
    return Poly(f, std::move(v));
  }

  const F& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && F::is_one(c_[0]); }
  bool is_monic() const { return !c_.empty() && F::is_one(c_.back()); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  const Elem& leading() const { return c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_field(b);
    std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return Poly(a.field_, std::move(out));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    std::vector<Elem> out;
    out.reserve(c_.size());
    for (const Elem& c : c_) out.push_back(-c);
    return Poly(field_, std::move(out));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_field(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    return Poly(a.field_, std::move(out));
  }

  Poly scaled(const Elem& s) const {
    std::vector<Elem> out;
    out.reserve(c_.size());
    for (const Elem& c : c_) out.push_back(c * s);
    return Poly(field_, std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_) || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (F::is_zero(c_[i])) continue;
      std::string cs = field_.elem_str(c_[i]);
      bool neg = !cs.empty() && cs[0] == '-';
      if (out.empty()) {
        if (neg) { out += "-"; cs = cs.substr(1); }
      } else {
        out += neg ? " - " : " + ";
        if (neg) cs = cs.substr(1);
      }
      if (i == 0) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void check_field(const Poly& other) const {
    if (!(field_ == other.field_)) throw FieldMismatch();
  }
  void trim() {
    while (!c_.empty() && F::is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Elem> c_;
};

template <BaseField F>
Poly<F> pow(const Poly<F>& base, std::size_t e) {
  Poly<F> out = Poly<F>::one(base.field());
  for (std::size_t i = 0; i < e; ++i) out = out * base;
  return out;
}

/// Euclidean division: (quotient, remainder) with deg(rem) < deg(divisor).
template <BaseField F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& num, const Poly<F>& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (!(num.field() == den.field())) throw FieldMismatch();
  const F& field = num.field();
  using Elem = typename F::Elem;
  const Elem lead_inv = field.inv(den.leading());
  const int dd = den.degree();
  std::vector<Elem> rem(num.coeffs());
  std::vector<Elem> quot(num.degree() >= dd ? num.degree() - dd + 1 : 0, field.zero());
  for (int k = num.degree(); k >= dd; --k) {
    if (F::is_zero(rem[k])) continue;
    const Elem factor = rem[k] * lead_inv;
    quot[k - dd] = factor;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] = rem[k - dd + i] - factor * den.coeff(i);
  }
  return {Poly<F>(field, std::move(quot)), Poly<F>(field, std::move(rem))};
}

/**
 * The q-expansion of f: the unique coefficients f_0, ..., f_s with
 * f = sum f_i q^i and deg(f_i) < deg(q). Empty for f = 0. Computed by
 * repeated euclidean division (remainder = f_0, recurse on the quotient).
 */
template <BaseField F>
std::vector<Poly<F>> q_expansion(Poly<F> f, const Poly<F>& q) {
  if (q.degree() < 1) throw ConstantModulus();
  std::vector<Poly<F>> out;
  while (!f.is_zero()) {
    auto [quot, rem] = divrem(f, q);
    out.push_back(std::move(rem));
    f = std::move(quot);
  }
  return out;
}

/**
 * Hasse derivative of order b: x^n maps to C(n, b) x^{n-b} with the binomial
 * coefficient reduced into the base field (mod p in characteristic p).
 */
template <BaseField F>
Poly<F> hasse_derivative(const Poly<F>& f, unsigned long b) {
  if (b == 0) return f;
  const F& field = f.field();
  if (f.degree() < static_cast<int>(b)) return Poly<F>::zero(field);
  std::vector<typename F::Elem> out;
  out.reserve(f.degree() - b + 1);
  for (std::size_t n = b; n <= static_cast<std::size_t>(f.degree()); ++n) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, b);
    out.push_back(field.from_mpz(binom) * f.coeff(n));
  }
  return Poly<F>(field, std::move(out));
}

}  // namespace valgrad
