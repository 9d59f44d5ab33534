#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "valgrad/poly.hpp"

namespace valgrad {

/**
 * Deterministic random source. All draws go through next() so that a fixed
 * seed yields the same stream on every platform (std distributions are
 * implementation-defined and are avoided on purpose).
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return bound ? g_() % bound : 0; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(std::uint64_t num, std::uint64_t den) { return next(den) < num; }

 private:
  std::mt19937_64 g_;
};

/**
 * Parameters for reproducible test corpora: the exhaustive height-H
 * coefficient sets plus seeded random draws.
 */
struct CorpusSpec {
  unsigned height = 2;
  int max_degree = 3;
  std::size_t random_count = 200;
  std::uint64_t seed = 0;
  std::size_t enumeration_cap = 4000;
};

inline std::vector<mpq_class> height_coefficients(const PadicRationals& f, unsigned height) {
  std::vector<mpq_class> out{0};
  mpq_class p_pow(1);
  for (unsigned e = 0; e + 1 < height + 1; ++e) {
    out.emplace_back(p_pow);
    out.emplace_back(-p_pow);
    if (e > 0) {
      mpq_class inv = 1 / p_pow;
      out.emplace_back(inv);
      out.emplace_back(-inv);
    }
    p_pow *= f.p;
  }
  return out;
}

inline std::vector<RatFunc> height_coefficients(const TAdicFunctions& f, unsigned height) {
  std::vector<RatFunc> out{f.zero()};
  const RatFunc t = RatFunc::t(f.p);
  RatFunc t_pow = f.one();
  for (unsigned e = 0; e + 1 < height + 1; ++e) {
    out.push_back(t_pow);
    if (e > 0) out.push_back(t_pow.inverse());
    t_pow = t_pow * t;
  }
  out.push_back(f.one() + t);
  return out;
}

template <BaseField F>
typename F::Elem random_elem(const F& field, Rng& rng, unsigned height) {
  if (rng.chance(1, 5)) return field.zero();
  typename F::Elem out = field.from_int(rng.range(1, 9));
  if constexpr (std::same_as<F, PadicRationals>) {
    if (rng.chance(1, 2)) out = -out;
    out = out / field.from_int(rng.range(1, 9));
  } else {
    std::vector<long> unit{rng.range(1, field.p - 1)};
    unit.push_back(rng.range(0, field.p - 1));
    out = RatFunc(FpPoly(field.p, unit), FpPoly::constant(field.p, 1));
  }
  const long e = rng.range(-static_cast<long>(height), static_cast<long>(height));
  typename F::Elem scale = field.one();
  const typename F::Elem uniformizer =
      [&] {
        if constexpr (std::same_as<F, PadicRationals>) return mpq_class(field.p);
        else return RatFunc::t(field.p);
      }();
  for (long i = 0; i < (e < 0 ? -e : e); ++i) scale = scale * uniformizer;
  if (e < 0) scale = field.inv(scale);
  return out * scale;
}

template <BaseField F>
Poly<F> random_poly(const F& field, Rng& rng, int max_degree, unsigned height) {
  std::vector<typename F::Elem> coeffs;
  const int deg = static_cast<int>(rng.next(max_degree + 1));
  for (int i = 0; i <= deg; ++i) coeffs.push_back(random_elem(field, rng, height));
  return Poly<F>(field, std::move(coeffs));
}

template <BaseField F>
Poly<F> random_nonzero_poly(const F& field, Rng& rng, int max_degree, unsigned height) {
  for (;;) {
    Poly<F> f = random_poly(field, rng, max_degree, height);
    if (!f.is_zero()) return f;
  }
}

/// Every nonzero polynomial of degree <= max_degree with height-H coefficients, capped.
template <BaseField F>
std::vector<Poly<F>> enumerate_polys(const F& field, int max_degree, unsigned height, std::size_t cap) {
  const auto coeffs = height_coefficients(field, height);
  std::vector<Poly<F>> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(max_degree) + 1, 0);
  for (;;) {
    std::vector<typename F::Elem> c;
    for (std::size_t i : idx) c.push_back(coeffs[i]);
    Poly<F> f(field, std::move(c));
    if (!f.is_zero()) {
      out.push_back(std::move(f));
      if (out.size() >= cap) return out;
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == coeffs.size()) idx[pos++] = 0;
    if (pos == idx.size()) return out;
  }
}

/// Height-set enumeration up to the cap plus seeded random polynomials.
template <BaseField F>
std::vector<Poly<F>> corpus_polys(const F& field, const CorpusSpec& spec, int max_degree) {
  std::vector<Poly<F>> out = enumerate_polys(field, max_degree, spec.height, spec.enumeration_cap);
  Rng rng(spec.seed);
  for (std::size_t i = 0; i < spec.random_count; ++i)
    out.push_back(random_nonzero_poly(field, rng, max_degree, spec.height));
  return out;
}

/// Pairs (f, g) of nonzero polynomials of degree <= max_degree for product tests.
template <BaseField F>
std::vector<std::pair<Poly<F>, Poly<F>>> corpus_pairs(const F& field, const CorpusSpec& spec,
                                                      int max_degree) {
  std::vector<std::pair<Poly<F>, Poly<F>>> out;
  const auto polys = enumerate_polys(field, max_degree, spec.height, spec.enumeration_cap);
  if (polys.size() * polys.size() <= spec.enumeration_cap) {
    for (const auto& f : polys)
      for (const auto& g : polys) out.emplace_back(f, g);
  } else {
    Rng pick(spec.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 0; i < spec.enumeration_cap; ++i)
      out.emplace_back(polys[pick.next(polys.size())], polys[pick.next(polys.size())]);
  }
  Rng rng(spec.seed);
  for (std::size_t i = 0; i < spec.random_count; ++i)
    out.emplace_back(random_nonzero_poly(field, rng, max_degree, spec.height),
                     random_nonzero_poly(field, rng, max_degree, spec.height));
  return out;
}

}  // namespace valgrad
