#pragma once

#include <string>
#include <utility>
#include <vector>

#include "valgrad/errors.hpp"

namespace valgrad {

bool is_prime(long n);

// Inverse of a modulo the prime p; DivisionByZero when a == 0 (mod p).
long fp_inverse(long a, long p);

/**
 * Dense polynomial in t over the prime field F_p, coefficients in [0, p).
 * Trailing zeros are trimmed; the zero polynomial has an empty coefficient
 * vector and degree -1.
 */
class FpPoly {
 public:
  explicit FpPoly(long p) : p_(check(p)) {}
  FpPoly(long p, std::vector<long> coeffs);
  static FpPoly constant(long p, long c) { return FpPoly(p, {c}); }
  static FpPoly t(long p) { return FpPoly(p, {0, 1}); }

  long p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  long leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return leading() == 1; }
  const std::vector<long>& coeffs() const { return c_; }

  // Index of the lowest nonzero coefficient; the t-adic order. Zero polynomial is an error.
  int order() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly operator-() const;
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

  // Euclidean division; divisor must be nonzero.
  static std::pair<FpPoly, FpPoly> divrem(const FpPoly& num, const FpPoly& den);
  static FpPoly gcd(FpPoly a, FpPoly b);  // monic gcd; gcd(0,0) = 0

  FpPoly monic() const;  // unit-normalized; zero stays zero

  std::string str() const;  // ascending, e.g. "1 + t + 2*t^3"

 private:
  static long check(long p);
  void trim();

  long p_;
  std::vector<long> c_;
};

/**
 * Element of the rational function field F_p(t) in canonical form:
 * numerator and denominator coprime, denominator monic and nonzero.
 */
class RatFunc {
 public:
  explicit RatFunc(long p) : num_(p), den_(FpPoly::constant(p, 1)) {}
  RatFunc(FpPoly num, FpPoly den);
  static RatFunc from_int(long p, long n) { return RatFunc(FpPoly::constant(p, n), FpPoly::constant(p, 1)); }
  static RatFunc t(long p) { return RatFunc(FpPoly::t(p), FpPoly::constant(p, 1)); }

  long p() const { return num_.p(); }
  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  RatFunc inverse() const;  // DivisionByZero on 0

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Order of vanishing at t = 0: ord_t(num) - ord_t(den). Zero is an error.
  int t_order() const;

  std::string str() const;

 private:
  FpPoly num_, den_;
};

}  // namespace valgrad
