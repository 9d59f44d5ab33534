#include "valgrad/value.hpp"

namespace valgrad {

Value::Value(long num, long den) : kind_(Kind::Finite), q_(num, den) {
  if (den == 0) throw DivisionByZero();
  q_.canonicalize();
}

Value Value::parse(const std::string& text) {
  if (text == "+inf" || text == "inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ParseError("bad value literal '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return Value(q);
}

const mpq_class& Value::rational() const {
  if (!finite()) throw Error("rational() on an infinite value");
  return q_;
}

Value operator+(const Value& a, const Value& b) {
  if (a.finite() && b.finite()) return Value(mpq_class(a.q_ + b.q_));
  if (a.is_pos_inf() && b.is_neg_inf()) throw IndeterminateSum();
  if (a.is_neg_inf() && b.is_pos_inf()) throw IndeterminateSum();
  return a.finite() ? b : a;
}

Value operator-(const Value& a, const Value& b) { return a + (-b); }

Value Value::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
    default: return Value(mpq_class(-q_));
  }
}

Value Value::scaled(std::uint64_t n) const {
  if (!finite()) {
    if (n == 0) throw IndeterminateProduct();
    return *this;
  }
  mpq_class factor(static_cast<unsigned long>(n));
  return Value(mpq_class(q_ * factor));
}

Value Value::divided(std::uint64_t n) const {
  if (n == 0) throw DivisionByZero();
  if (!finite()) return *this;
  mpq_class d(static_cast<unsigned long>(n));
  return Value(mpq_class(q_ / d));
}

int Value::compare(const Value& other) const {
  auto rank = [](Kind k) { return k == Kind::NegInf ? -1 : (k == Kind::PosInf ? 1 : 0); };
  const int ra = rank(kind_), rb = rank(other.kind_);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (kind_ != Kind::Finite) return 0;
  return cmp(q_, other.q_) < 0 ? -1 : (cmp(q_, other.q_) > 0 ? 1 : 0);
}

std::string Value::str() const {
  switch (kind_) {
    case Kind::PosInf: return "+inf";
    case Kind::NegInf: return "-inf";
    default: return q_.get_str();
  }
}

MinResult value_min(const std::vector<Value>& values) {
  if (values.empty()) throw EmptySequence();
  MinResult result{values.front(), {0}};
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < result.value) {
      result.value = values[i];
      result.minimizers.assign(1, i);
    } else if (values[i] == result.value) {
      result.minimizers.push_back(i);
    }
  }
  return result;
}

}  // namespace valgrad
