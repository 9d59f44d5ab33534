#include "valgrad/field.hpp"

#include "doctest.h"
#include "valgrad/corpus.hpp"

using namespace valgrad;

TEST_CASE("p-adic base valuation") {
  PadicRationals q2(2);
  CHECK(q2.val(mpq_class(12)) == Value(2));
  CHECK(q2.val(mpq_class(0)) == Value::pos_inf());
  CHECK(q2.val(mpq_class(3, 8)) == Value(-3));
  CHECK(q2.val(mpq_class(1)) == Value(0));
  PadicRationals q3(3);
  CHECK(q3.val(mpq_class(18)) == Value(2));
  CHECK(q3.val(mpq_class(-1, 27)) == Value(-3));
}

TEST_CASE("t-adic base valuation") {
  TAdicFunctions f2(2);
  CHECK(f2.val(f2.zero()) == Value::pos_inf());
  CHECK(f2.val(f2.one()) == Value(0));
  CHECK(f2.val(RatFunc::t(2)) == Value(1));
  const RatFunc t = RatFunc::t(2);
  CHECK(f2.val(f2.inv(t * t)) == Value(-2));
  // t/(t+1) * (t+1)/t = 1
  const RatFunc a(FpPoly(2, {0, 1}), FpPoly(2, {1, 1}));
  const RatFunc b(FpPoly(2, {1, 1}), FpPoly(2, {0, 1}));
  CHECK((a * b).is_one());
  CHECK(f2.val(a) == Value(1));
}

TEST_CASE("field arithmetic canonical forms") {
  PadicRationals q2(2);
  CHECK(mpq_class(1, 2) + mpq_class(1, 2) == 1);
  CHECK_THROWS_AS(q2.inv(mpq_class(0)), DivisionByZero);

  TAdicFunctions f3(3);
  const RatFunc half(FpPoly::constant(3, 2), FpPoly::constant(3, 2));
  CHECK(half.is_one());  // 2/2 reduces
  const RatFunc r(FpPoly(3, {0, 2}), FpPoly(3, {0, 0, 2}));  // 2t / 2t^2 = 1/t
  CHECK(r.num().is_one());
  CHECK(r.den() == FpPoly(3, {0, 1}));
  CHECK(r.den().is_monic());
  CHECK_THROWS_AS(f3.inv(f3.zero()), DivisionByZero);
  CHECK_THROWS_AS(RatFunc(FpPoly::constant(3, 1), FpPoly(3)), DivisionByZero);
}

TEST_CASE("prime parameter is verified") {
  CHECK_THROWS_AS(PadicRationals(4), NotPrime);
  CHECK_THROWS_AS(PadicRationals(1), NotPrime);
  CHECK_THROWS_AS(TAdicFunctions(9), NotPrime);
  CHECK_NOTHROW(PadicRationals(7));
  CHECK_NOTHROW(TAdicFunctions(5));
}

template <BaseField F>
static void fuzz_base_axioms(const F& field, std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_elem(field, rng, 2);
    const auto b = random_elem(field, rng, 2);
    const typename F::Elem prod = a * b;
    const typename F::Elem sum = a + b;
    CHECK(field.val(prod) == field.val(a) + field.val(b));
    CHECK(field.val(sum) >= std::min(field.val(a), field.val(b)));
  }
  CHECK(field.val(field.one()) == Value(0));
}

TEST_CASE("base valuation axioms hold on random elements") {
  fuzz_base_axioms(PadicRationals(2), 101);
  fuzz_base_axioms(PadicRationals(5), 102);
  fuzz_base_axioms(TAdicFunctions(2), 103);
  fuzz_base_axioms(TAdicFunctions(3), 104);
}
