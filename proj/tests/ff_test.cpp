#include <doctest.h>

#include <map>

#include "phit/ff.hpp"

using namespace phit;

TEST_CASE("make_field canonical moduli") {
  CHECK(make_field(5, 1)->modulus == std::vector<uint32_t>{0, 1});  // x
  // only irreducible monic quadratic over F_2
  CHECK(make_field(2, 2)->modulus == std::vector<uint32_t>{1, 1, 1});  // x^2+x+1
  // lexicographic scan over the 9 monic quadratics mod 3
  CHECK(make_field(3, 2)->modulus == std::vector<uint32_t>{1, 0, 1});  // x^2+1
  CHECK(make_field(2, 2)->q == 4);
  CHECK(make_field(3, 3)->q == 27);
}

TEST_CASE("make_field exhausts monic quadratics over F_2") {
  // independent oracle: x^2+x+1 is the only monic irreducible quadratic
  Field f2 = make_field(2, 1);
  int irreducible = 0;
  for (uint32_t a0 = 0; a0 < 2; ++a0)
    for (uint32_t a1 = 0; a1 < 2; ++a1) {
      bool has_root = false;
      for (uint32_t r = 0; r < 2; ++r)
        if ((r * r + a1 * r + a0) % 2 == 0) has_root = true;
      if (!has_root) ++irreducible;
    }
  CHECK(irreducible == 1);
}

TEST_CASE("make_field determinism and errors") {
  Field a = make_field(7, 2);
  Field b = make_field(7, 2);
  CHECK(a->modulus == b->modulus);
  CHECK_THROWS_WITH_AS(make_field(6, 1), "not prime", std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_field(5, 0), "bad degree", std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
  Field f5 = make_field(5, 1);
  FqElem two = FqElem::from_int(f5, 2);
  CHECK(two.inv() == FqElem::from_int(f5, 3));  // 2*3 = 6 = 1 mod 5
  CHECK(two.pow(-1) == FqElem::from_int(f5, 3));
  CHECK((two * two.inv()).is_one());
  CHECK(FqElem::from_int(f5, 4) / two == two);
  CHECK(two - two == FqElem::zero(f5));
  CHECK(-two == FqElem::from_int(f5, 3));
  CHECK_THROWS_WITH_AS(FqElem::zero(f5).inv(), "division by zero", std::domain_error);
  CHECK_THROWS_WITH_AS(two / FqElem::zero(f5), "division by zero", std::domain_error);
}

TEST_CASE("extension field arithmetic") {
  Field f4 = make_field(2, 2);
  FqElem alpha = FqElem::gen(f4);
  // alpha^2 = alpha + 1 under x^2+x+1
  CHECK(alpha * alpha == alpha + FqElem::one(f4));

  Field f9 = make_field(3, 2);
  FqElem beta = FqElem::gen(f9);
  // x^3 = -x mod x^2+1, so frobenius(beta) = 2*beta
  CHECK(beta.frobenius() == beta + beta);
  CHECK(beta.frobenius() == beta.pow(3));
}

TEST_CASE("field mismatch is rejected") {
  Field f4 = make_field(2, 2);
  Field f9 = make_field(3, 2);
  CHECK_THROWS_WITH_AS(FqElem::one(f4) * FqElem::one(f9), "field mismatch",
                       std::invalid_argument);
}

TEST_CASE("fermat and frobenius properties") {
  for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 3},
                      {3, 2},
                      {5, 1},
                      {2, 4},
                      {13, 1}}) {
    Field k = make_field(p, e);
    // exhaustive when the field is small
    for (uint64_t idx = 0; idx < k->q; ++idx) {
      FqElem a = FqElem::from_index(k, idx);
      CHECK(a.pow(int64_t(k->q)) == a);  // a^(p^e) = a
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
    Rng rng(99);
    for (int i = 0; i < 25; ++i) {
      FqElem a = random_element(k, rng);
      FqElem b = random_element(k, rng);
      CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
      CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
  }
}

TEST_CASE("random_element determinism and coverage") {
  Field f2 = make_field(2, 1);
  Rng r1(7);
  CHECK(random_element(f2, r1, true).is_one());  // only nonzero element

  Field f5 = make_field(5, 1);
  Rng a(42), b(42);
  CHECK(random_element(f5, a) == random_element(f5, b));

  Field f4 = make_field(2, 2);
  Rng r2(0);
  std::map<uint64_t, int> seen;
  for (int i = 0; i < 4 * 20; ++i) ++seen[random_element(f4, r2).index()];
  CHECK(seen.size() == 4);  // all 4 elements occur
}

TEST_CASE("element enumeration round trips") {
  Field f8 = make_field(2, 3);
  for (uint64_t i = 0; i < 8; ++i) CHECK(FqElem::from_index(f8, i).index() == i);
}
