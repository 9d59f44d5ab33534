#include "valgrad/value.hpp"

#include <algorithm>

#include "doctest.h"
#include "valgrad/corpus.hpp"

using namespace valgrad;

TEST_CASE("value addition") {
  CHECK(Value(1, 2) + Value(1, 3) == Value(5, 6));
  CHECK(Value(7, 3) + Value::pos_inf() == Value::pos_inf());
  CHECK(Value(0) + Value(0) == Value(0));
  CHECK(Value::neg_inf() + Value::neg_inf() == Value::neg_inf());
  CHECK(Value::neg_inf() + Value(5) == Value::neg_inf());
  CHECK_THROWS_AS(Value::pos_inf() + Value::neg_inf(), IndeterminateSum);
  CHECK_THROWS_AS(Value::neg_inf() + Value::pos_inf(), IndeterminateSum);
}

TEST_CASE("value minimum with minimizers") {
  auto r = value_min({Value(1), Value(1), Value(3, 2)});
  CHECK(r.value == Value(1));
  CHECK(r.minimizers == std::vector<std::size_t>{0, 1});

  r = value_min({Value::pos_inf()});
  CHECK(r.value == Value::pos_inf());
  CHECK(r.minimizers == std::vector<std::size_t>{0});

  r = value_min({Value(5, 6), Value(1, 2), Value(2)});
  CHECK(r.value == Value(1, 2));
  CHECK(r.minimizers == std::vector<std::size_t>{1});

  CHECK_THROWS_AS(value_min({}), EmptySequence);
}

TEST_CASE("value scaling") {
  CHECK(Value(1, 2).scaled(4) == Value(2));
  CHECK(Value(3, 2).scaled(0) == Value(0));
  CHECK(Value::pos_inf().scaled(2) == Value::pos_inf());
  CHECK_THROWS_AS(Value::pos_inf().scaled(0), IndeterminateProduct);
  CHECK_THROWS_AS(Value::neg_inf().scaled(0), IndeterminateProduct);
}

TEST_CASE("total order") {
  CHECK(Value::neg_inf() < Value(-1000000));
  CHECK(Value(1000000) < Value::pos_inf());
  CHECK(Value(1, 3) < Value(1, 2));
  // trichotomy on random pairs
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Value a(rng.range(-9, 9), rng.range(1, 9));
    Value b(rng.range(-9, 9), rng.range(1, 9));
    int holds = (a < b) + (a == b) + (a > b);
    CHECK(holds == 1);
  }
}

TEST_CASE("group laws on finite values") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Value a(rng.range(-9, 9), rng.range(1, 9));
    Value b(rng.range(-9, 9), rng.range(1, 9));
    Value c(rng.range(-9, 9), rng.range(1, 9));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a + Value(0) == a);
  }
}

TEST_CASE("value_min is permutation invariant") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<Value> xs;
    const int n = static_cast<int>(rng.next(6)) + 1;
    for (int k = 0; k < n; ++k) xs.emplace_back(rng.range(-5, 5), rng.range(1, 4));
    std::vector<Value> ys(xs);
    for (std::size_t k = ys.size(); k > 1; --k) std::swap(ys[k - 1], ys[rng.next(k)]);
    CHECK(value_min(xs).value == value_min(ys).value);
  }
}

TEST_CASE("parse and print round-trip") {
  CHECK(Value::parse("3/2").str() == "3/2");
  CHECK(Value::parse("-7").str() == "-7");
  CHECK(Value::parse("+inf").is_pos_inf());
  CHECK(Value::parse("-inf").is_neg_inf());
  CHECK(Value::parse("6/4") == Value(3, 2));
  CHECK_THROWS_AS(Value::parse("abc"), ParseError);
}
