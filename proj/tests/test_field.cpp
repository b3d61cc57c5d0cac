#include "doctest.h"

#include "rlc/errors.hpp"
#include "rlc/field.hpp"

using namespace rlc;

namespace {

void check_axioms(const Field& f) {
  const unsigned q = f.q();
  for (unsigned a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

}  // namespace

TEST_CASE("small fields satisfy the field axioms") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 256u}) {
    CAPTURE(q);
    check_axioms(Field::of_order(q));
  }
}

TEST_CASE("multiplication distributes and commutes in GF(9)") {
  const auto f = Field::of_order(9);
  for (unsigned a = 0; a < 9; ++a)
    for (unsigned b = 0; b < 9; ++b) {
      CHECK(f.mul(a, b) == f.mul(b, a));
      for (unsigned c = 0; c < 9; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
}

TEST_CASE("x generates the multiplicative group") {
  for (unsigned q : {4u, 8u, 9u, 27u, 1024u}) {
    const auto f = Field::of_order(q);
    const Elem x = static_cast<Elem>(f.characteristic());
    Elem y = 1;
    unsigned order = 0;
    do {
      y = f.mul(y, x);
      ++order;
    } while (y != 1);
    CHECK(order == q - 1);
  }
}

TEST_CASE("GF(4) arithmetic uses x^2 + x + 1") {
  const auto f = Field::of_order(4);
  CHECK(f.mul(2, 2) == 3);
  CHECK(f.mul(2, 3) == 1);
  CHECK(f.add(2, 3) == 1);
}

TEST_CASE("large fields without full tables agree with the table-free path") {
  const auto f = Field::of_order(4096);
  CHECK_FALSE(f.has_full_tables());
  check_axioms(f);
  const auto g = Field::make(3, 7);
  CHECK(g.q() == 2187);
  check_axioms(g);
}

TEST_CASE("non prime powers are rejected") {
  CHECK_THROWS_AS(Field::of_order(6), ParameterError);
  CHECK_THROWS_AS(Field::of_order(1), ParameterError);
  CHECK_THROWS_AS(Field::of_order(100), ParameterError);
}
