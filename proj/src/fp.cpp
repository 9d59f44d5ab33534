#include "valgrad/fp.hpp"

#include <algorithm>

namespace valgrad {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

long FpPoly::check(long p) {
  if (!is_prime(p)) throw NotPrime(p);
  return p;
}

FpPoly::FpPoly(long p, std::vector<long> coeffs) : p_(check(p)), c_(std::move(coeffs)) {
  for (long& c : c_) {
    c %= p_;
    if (c < 0) c += p_;
  }
  trim();
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int FpPoly::order() const {
  if (is_zero()) throw Error("t-adic order of zero polynomial");
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;  // unreachable
}

long fp_inverse(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw DivisionByZero();
  long t0 = 0, t1 = 1, r0 = p, r1 = a;
  while (r1 != 0) {
    const long q = r0 / r1;
    t0 = std::exchange(t1, t0 - q * t1);
    r0 = std::exchange(r1, r0 - q * r1);
  }
  return t0 < 0 ? t0 + p : t0;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw FieldMismatch();
  std::vector<long> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
  return FpPoly(a.p_, std::move(out));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly FpPoly::operator-() const {
  std::vector<long> out(c_);
  for (long& c : out) c = (p_ - c) % p_;
  return FpPoly(p_, std::move(out));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw FieldMismatch();
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  std::vector<long> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = (out[i + j] + a.c_[i] * b.c_[j]) % a.p_;
  return FpPoly(a.p_, std::move(out));
}

std::pair<FpPoly, FpPoly> FpPoly::divrem(const FpPoly& num, const FpPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.p_ != den.p_) throw FieldMismatch();
  const long p = num.p_;
  std::vector<long> rem(num.c_);
  std::vector<long> quot;
  const long lead_inv = fp_inverse(den.leading(), p);
  const int dd = den.degree();
  if (static_cast<int>(rem.size()) - 1 >= dd) quot.assign(rem.size() - dd, 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k] == 0) continue;
    const long factor = rem[k] * lead_inv % p;
    quot[k - dd] = factor;
    for (int i = 0; i <= dd; ++i) {
      rem[k - dd + i] = (rem[k - dd + i] - factor * den.c_[i]) % p;
      if (rem[k - dd + i] < 0) rem[k - dd + i] += p;
    }
  }
  return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = divrem(a, b).second;
    a = std::exchange(b, std::move(r));
  }
  return a.monic();
}

FpPoly FpPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  const long inv = fp_inverse(leading(), p_);
  std::vector<long> out(c_);
  for (long& c : out) c = c * inv % p_;
  return FpPoly(p_, std::move(out));
}

std::string FpPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

RatFunc::RatFunc(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.p() != den_.p()) throw FieldMismatch();
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = FpPoly::constant(num_.p(), 1);
    return;
  }
  const FpPoly g = FpPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = FpPoly::divrem(num_, g).first;
    den_ = FpPoly::divrem(den_, g).first;
  }
  if (!den_.is_monic()) {
    const FpPoly unit_inv = FpPoly::constant(num_.p(), fp_inverse(den_.leading(), num_.p()));
    num_ = num_ * unit_inv;
    den_ = den_ * unit_inv;
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFunc(den_, num_);
}

int RatFunc::t_order() const {
  if (is_zero()) throw Error("t-adic order of zero");
  return num_.order() - den_.order();
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace valgrad
