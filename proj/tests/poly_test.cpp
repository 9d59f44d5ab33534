#include "valgrad/poly.hpp"

#include "doctest.h"
#include "valgrad/corpus.hpp"

using namespace valgrad;

namespace {

using QPoly = Poly<PadicRationals>;
using TPoly = Poly<TAdicFunctions>;

QPoly qpoly(const PadicRationals& f, std::vector<long> coeffs) {
  std::vector<mpq_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(f, std::move(c));
}

// Independent reconstruction of sum f_i q^i, used as the expansion oracle.
template <BaseField F>
Poly<F> reassemble(const std::vector<Poly<F>>& parts, const Poly<F>& q) {
  Poly<F> acc = Poly<F>::zero(q.field());
  for (std::size_t i = 0; i < parts.size(); ++i) acc = acc + parts[i] * pow(q, i);
  return acc;
}

}  // namespace

TEST_CASE("q-expansion examples") {
  PadicRationals f(2);
  const QPoly x4 = QPoly::monomial(f, f.one(), 4);
  const QPoly q = qpoly(f, {-2, 0, 1});  // x^2 - 2

  const auto parts = q_expansion(x4, q);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == qpoly(f, {4}));
  CHECK(parts[1] == qpoly(f, {4}));
  CHECK(parts[2] == qpoly(f, {1}));
  CHECK(reassemble(parts, q) == x4);

  const auto xparts = q_expansion(qpoly(f, {1, 0, 1}), QPoly::x(f));
  REQUIRE(xparts.size() == 3);
  CHECK(xparts[0] == qpoly(f, {1}));
  CHECK(xparts[1].is_zero());
  CHECK(xparts[2] == qpoly(f, {1}));

  const auto cparts = q_expansion(qpoly(f, {5}), q);
  REQUIRE(cparts.size() == 1);
  CHECK(cparts[0] == qpoly(f, {5}));

  CHECK(q_expansion(QPoly::zero(f), q).empty());
  CHECK_THROWS_AS(q_expansion(x4, qpoly(f, {5})), ConstantModulus);
}

TEST_CASE("q-expansion reconstruction on random inputs") {
  PadicRationals f(3);
  Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    const QPoly poly = random_poly(f, rng, 7, 2);
    QPoly q = random_nonzero_poly(f, rng, 3, 2);
    if (q.degree() < 1) q = q * QPoly::x(f) + QPoly::one(f);
    const auto parts = q_expansion(poly, q);
    for (const auto& part : parts) CHECK(part.degree() < q.degree());
    if (!poly.is_zero()) CHECK_FALSE(parts.back().is_zero());
    CHECK(reassemble(parts, q) == poly);
  }
}

TEST_CASE("hasse derivative examples") {
  PadicRationals f(2);
  const QPoly q = qpoly(f, {-2, 0, 1});
  CHECK(hasse_derivative(q, 1) == qpoly(f, {0, 2}));
  CHECK(hasse_derivative(q, 2) == qpoly(f, {1}));

  TAdicFunctions f2(2);
  const TPoly x4 = TPoly::monomial(f2, f2.one(), 4);
  CHECK(hasse_derivative(x4, 2).is_zero());  // C(4,2) = 6 = 0 mod 2

  for (long p : {2L, 3L, 5L}) {
    TAdicFunctions fp(p);
    const TPoly xp = TPoly::monomial(fp, fp.one(), p);
    CHECK(hasse_derivative(xp, p) == TPoly::one(fp));
  }
}

TEST_CASE("hasse product rule") {
  PadicRationals f(2);
  Rng rng(5);
  for (int i = 0; i < 25; ++i) {
    const QPoly a = random_poly(f, rng, 4, 2);
    const QPoly b = random_poly(f, rng, 4, 2);
    for (unsigned long d = 1; d <= 4; ++d) {
      QPoly lhs = hasse_derivative(a * b, d);
      QPoly rhs = QPoly::zero(f);
      for (unsigned long j = 0; j <= d; ++j)
        rhs = rhs + hasse_derivative(a, j) * hasse_derivative(b, d - j);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("b! times hasse equals iterated derivative over Q") {
  PadicRationals f(5);
  Rng rng(8);
  auto derivative = [&](QPoly g) {
    std::vector<mpq_class> out;
    for (int n = 1; n <= g.degree(); ++n) out.push_back(mpq_class(n) * g.coeff(n));
    return QPoly(f, std::move(out));
  };
  for (int i = 0; i < 25; ++i) {
    const QPoly g = random_poly(f, rng, 5, 2);
    QPoly iterated = g;
    mpz_class factorial(1);
    for (unsigned long b = 1; b <= 3; ++b) {
      iterated = derivative(iterated);
      factorial *= b;
      CHECK(hasse_derivative(g, b).scaled(mpq_class(factorial)) == iterated);
    }
  }
}

TEST_CASE("polynomial arithmetic and division") {
  PadicRationals f(2);
  CHECK(qpoly(f, {1, 1}) * qpoly(f, {-1, 1}) == qpoly(f, {-1, 0, 1}));

  const QPoly x3 = QPoly::monomial(f, f.one(), 3);
  const QPoly q = qpoly(f, {-2, 0, 1});
  const auto [quot, rem] = divrem(x3, q);
  CHECK(quot == QPoly::x(f));
  CHECK(rem == qpoly(f, {0, 2}));
  CHECK(quot * q + rem == x3);

  const auto [q2, r2] = divrem(qpoly(f, {3}), QPoly::x(f));
  CHECK(q2.is_zero());
  CHECK(r2 == qpoly(f, {3}));

  CHECK_THROWS_AS(divrem(x3, QPoly::zero(f)), DivisionByZero);
}

TEST_CASE("division over the function field") {
  TAdicFunctions f(3);
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    const TPoly a = random_poly(f, rng, 5, 2);
    const TPoly b = random_nonzero_poly(f, rng, 3, 2);
    const auto [quot, rem] = divrem(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
  }
}

TEST_CASE("degree sentinel and canonical form") {
  PadicRationals f(2);
  CHECK(QPoly::zero(f).degree() == -1);
  CHECK(QPoly(f, {mpq_class(0), mpq_class(0)}).is_zero());
  CHECK(qpoly(f, {1, 2, 0, 0}).degree() == 1);
  CHECK(qpoly(f, {0, 0, 1}).is_monic());
  CHECK(QPoly::x(f).str() == "x");
  CHECK(qpoly(f, {-2, 0, 1}).str() == "x^2 - 2");
}
