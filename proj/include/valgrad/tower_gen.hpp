#pragma once

#include "valgrad/valuation.hpp"

namespace valgrad {

/**
 * Seeded generator of valid random towers, used by the fuzz harnesses.
 *
 * Recipes, all classical augmentation patterns whose minimum formulas are
 * genuine valuations:
 *  - a Gauss valuation with a random rational value on x;
 *  - 2-3 stage chains of degree-one keys x - c (monomial valuations centered
 *    at base-field points), including equal-degree consecutive stages;
 *  - a ramified stage x^b - c over Gauss(a/b) with gcd(a, b) = 1 and
 *    val0(c) = a, optionally re-augmented at the same key with a larger
 *    value. Coprimality makes the initial form of x^b - c a binomial whose
 *    potential factors are single monomials, so it is irreducible in the
 *    graded ring and the augmentation is a valuation.
 */
template <BaseField F>
Tower<F> random_tower(const F& field, Rng& rng) {
  const auto uniformizer = [&] {
    if constexpr (std::same_as<F, PadicRationals>) return mpq_class(field.p);
    else return RatFunc::t(field.p);
  }();
  const auto unit_power = [&](long e) {
    typename F::Elem out = field.one();
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out = out * uniformizer;
    if (e < 0) out = field.inv(out);
    return out;
  };
  const auto increment = [&] { return Value(rng.range(1, 4), rng.range(1, 3)); };
  const auto nonzero_elem = [&] {
    for (;;) {
      auto c = random_elem(field, rng, 2);
      if (!F::is_zero(c)) return c;
    }
  };

  const Poly<F> x = Poly<F>::x(field);
  switch (rng.next(4)) {
    case 0: {  // plain Gauss
      return Tower<F>::gauss(field, Value(rng.range(-4, 6), rng.range(1, 4)));
    }
    case 1: {  // degree-one key chain, 2 or 3 stages
      std::vector<Stage<F>> stages;
      stages.push_back({x, Value(rng.range(-2, 3))});
      typename F::Elem c = nonzero_elem();
      Poly<F> key = x - Poly<F>::constant(field, c);
      Tower<F> t1(field, stages);
      Value gamma = t1.value(key) + increment();
      stages.push_back({key, gamma});
      if (rng.chance(1, 2)) {
        const typename F::Elem d = nonzero_elem();
        Poly<F> key2 = key - Poly<F>::constant(field, d);
        Tower<F> t2(field, stages);
        stages.push_back({key2, t2.value(key2) + increment()});
      }
      return Tower<F>(field, std::move(stages));
    }
    case 2: {  // ramified stage over Gauss(a/b)
      const long b = rng.chance(1, 2) ? 2 : 3;
      long a = rng.range(1, 5);
      while (a % b == 0) a = rng.range(1, 5);
      std::vector<Stage<F>> stages;
      stages.push_back({x, Value(a, b)});
      Poly<F> key = Poly<F>::monomial(field, field.one(), b) - Poly<F>::constant(field, unit_power(a));
      Value gamma = Value(a) + increment();
      stages.push_back({key, gamma});
      if (rng.chance(1, 2))  // re-augment the top key at a larger value
        stages.push_back({key, gamma + increment()});
      return Tower<F>(field, std::move(stages));
    }
    default: {  // Gauss at an integer value plus one linear augmentation
      const Value g0(rng.range(0, 2));
      std::vector<Stage<F>> stages{{x, g0}};
      const typename F::Elem c = unit_power(rng.range(0, 2));
      Poly<F> key = x - Poly<F>::constant(field, c);
      Tower<F> t1(field, stages);
      stages.push_back({key, t1.value(key) + increment()});
      return Tower<F>(field, std::move(stages));
    }
  }
}

}  // namespace valgrad
