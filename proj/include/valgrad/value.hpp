#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "valgrad/errors.hpp"

namespace valgrad {

/**
 * An element of the totally ordered set Q u {+inf, -inf}.
 *
 * Finite values are exact rationals in lowest terms with positive
 * denominator. -inf < every finite value < +inf. +inf is absorbing under
 * addition except against -inf, which is an error.
 */
class Value {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  Value() : kind_(Kind::Finite), q_(0) {}
  Value(long n) : kind_(Kind::Finite), q_(n) {}  // NOLINT: implicit by design
  Value(long num, long den);
  explicit Value(mpq_class q) : kind_(Kind::Finite), q_(std::move(q)) { q_.canonicalize(); }

  static Value pos_inf() { return Value(Kind::PosInf); }
  static Value neg_inf() { return Value(Kind::NegInf); }

  // Accepts "a/b", "a", "+inf", "inf", "-inf".
  static Value parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  // Finite values only.
  const mpq_class& rational() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  Value operator-() const;

  // n * (*this). Throws IndeterminateProduct for 0 * (+-inf).
  Value scaled(std::uint64_t n) const;
  // (*this) / n for n >= 1; infinities pass through.
  Value divided(std::uint64_t n) const;

  friend bool operator==(const Value& a, const Value& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Value& a, const Value& b) { return a.compare(b) != 0; }
  friend bool operator<(const Value& a, const Value& b) { return a.compare(b) < 0; }
  friend bool operator<=(const Value& a, const Value& b) { return a.compare(b) <= 0; }
  friend bool operator>(const Value& a, const Value& b) { return a.compare(b) > 0; }
  friend bool operator>=(const Value& a, const Value& b) { return a.compare(b) >= 0; }

  // "3/2", "-1", "+inf", "-inf". Also the JSON encoding.
  std::string str() const;

 private:
  explicit Value(Kind k) : kind_(k), q_(0) {}
  int compare(const Value& other) const;

  Kind kind_;
  mpq_class q_;
};

struct MinResult {
  Value value;
  std::vector<std::size_t> minimizers;  // indices attaining the minimum, ascending
};

// Least element of a nonempty sequence together with all minimizing indices.
MinResult value_min(const std::vector<Value>& values);

}  // namespace valgrad
