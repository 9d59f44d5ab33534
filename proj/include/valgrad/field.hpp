#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>

#include "valgrad/errors.hpp"
#include "valgrad/fp.hpp"
#include "valgrad/value.hpp"

namespace valgrad {

/**
 * The field Q with the p-adic valuation, normalized by val(p) = 1.
 * Elements are exact rationals in lowest terms.
 */
struct PadicRationals {
  using Elem = mpq_class;

  explicit PadicRationals(long prime) : p(prime) {
    if (!is_prime(prime)) throw NotPrime(prime);
  }

  long p;

  Value val(const Elem& a) const {
    if (sgn(a) == 0) return Value::pos_inf();
    mpz_class num = a.get_num(), den = a.get_den(), scratch;
    const mpz_class pz(p);
    const long vn = static_cast<long>(mpz_remove(scratch.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
    const long vd = static_cast<long>(mpz_remove(scratch.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
    return Value(vn - vd);
  }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long n) const { return Elem(n); }
  Elem from_mpz(const mpz_class& z) const { return Elem(z); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static bool is_one(const Elem& a) { return a == 1; }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw DivisionByZero();
    return Elem(1 / a);
  }
  std::string elem_str(const Elem& a) const { return a.get_str(); }

  static constexpr const char* kind_name = "rationals";
  friend bool operator==(const PadicRationals&, const PadicRationals&) = default;
};

/**
 * The rational function field F_p(t) with the t-adic valuation,
 * normalized by val(t) = 1.
 */
struct TAdicFunctions {
  using Elem = RatFunc;

  explicit TAdicFunctions(long prime) : p(prime) {
    if (!is_prime(prime)) throw NotPrime(prime);
  }

  long p;

  Value val(const Elem& a) const {
    if (a.is_zero()) return Value::pos_inf();
    return Value(a.t_order());
  }

  Elem zero() const { return Elem(p); }
  Elem one() const { return Elem::from_int(p, 1); }
  Elem from_int(long n) const { return Elem::from_int(p, n); }
  Elem from_mpz(const mpz_class& z) const {
    return Elem::from_int(p, static_cast<long>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p))));
  }
  static bool is_zero(const Elem& a) { return a.is_zero(); }
  static bool is_one(const Elem& a) { return a.is_one(); }
  Elem inv(const Elem& a) const { return a.inverse(); }
  std::string elem_str(const Elem& a) const { return a.str(); }

  static constexpr const char* kind_name = "rational_functions";
  friend bool operator==(const TAdicFunctions&, const TAdicFunctions&) = default;
};

template <class F>
concept BaseField = requires(const F f, const typename F::Elem e) {
  { f.p } -> std::convertible_to<long>;
  { f.val(e) } -> std::same_as<Value>;
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { F::is_zero(e) } -> std::same_as<bool>;
  { f.inv(e) } -> std::same_as<typename F::Elem>;
  { f.elem_str(e) } -> std::same_as<std::string>;
};

}  // namespace valgrad
