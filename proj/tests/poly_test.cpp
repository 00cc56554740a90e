#include <doctest.h>

#include "phit/embed.hpp"
#include "phit/linalg.hpp"
#include "phit/poly.hpp"
#include "phit/resultant.hpp"
#include "phit/rng.hpp"

using namespace phit;

namespace {

FqPoly random_poly(const Field& k, int maxdeg, Rng& rng, char var = 'T') {
  FqPoly f(k, var);
  int d = int(rng.below(uint64_t(maxdeg) + 1));
  for (int i = 0; i <= d; ++i) f.set_coeff(size_t(i), random_element(k, rng));
  return f;
}

IntPoly random_int_poly(Rng& rng) {
  IntPoly f = int_poly({});
  int d = int(rng.below(7));
  for (int i = 0; i <= d; ++i)
    f.set_coeff(size_t(i), mpz_class(int64_t(rng.below(21)) - 10));
  return f;
}

}  // namespace

TEST_CASE("freshman's dream powers") {
  // (z + T)^2 over F_2 -> z^2 + T^2
  Field f2 = make_field(2, 1);
  DensePoly<FqPoly> zt(FqPoly::zero(f2), 'z');
  zt.set_coeff(1, FqPoly::one(f2));
  zt.set_coeff(0, FqPoly::variable(f2));
  auto sq = zt.pow(2);
  CHECK(sq.deg() == 2);
  CHECK(sq.coeff(2) == FqPoly::one(f2));
  CHECK(sq.coeff(1).is_zero());
  CHECK(sq.coeff(0) == FqPoly::monomial(FqElem::one(f2), 2));

  // (z + T)^4 over F_3 -> z^4 + z^3 T + z T^3 + T^4
  Field f3 = make_field(3, 1);
  DensePoly<FqPoly> zt3(FqPoly::zero(f3), 'z');
  zt3.set_coeff(1, FqPoly::one(f3));
  zt3.set_coeff(0, FqPoly::variable(f3));
  auto p4 = zt3.pow(4);
  CHECK(p4.coeff(4) == FqPoly::one(f3));
  CHECK(p4.coeff(3) == FqPoly::variable(f3));
  CHECK(p4.coeff(2).is_zero());
  CHECK(p4.coeff(1) == FqPoly::monomial(FqElem::one(f3), 3));
  CHECK(p4.coeff(0) == FqPoly::monomial(FqElem::one(f3), 4));
}

TEST_CASE("integer polynomial arithmetic") {
  // (t - 1)^3 = t^3 - 3t^2 + 3t - 1
  IntPoly cube = int_poly({-1, 1}).pow(3);
  CHECK(cube == int_poly({-1, 3, -3, 1}));
}

TEST_CASE("poly_eval") {
  Field f3 = make_field(3, 1);
  FqPoly f = FqPoly::from_ints(f3, {1, 0, 1});  // T^2 + 1
  CHECK(poly_eval(f, FqElem::one(f3)) == FqElem::from_int(f3, 2));
  CHECK(poly_eval(FqPoly::zero(f3), FqElem::one(f3)).is_zero());

  // T^3 + T over F_2 at beta in F_8, against direct extension arithmetic
  Field f2 = make_field(2, 1);
  Field f8 = make_field(2, 3);
  FqPoly g = FqPoly::from_ints(f2, {0, 1, 0, 1});
  for (uint64_t i = 0; i < 8; ++i) {
    FqElem beta = FqElem::from_index(f8, i);
    CHECK(poly_eval(g, beta) == beta.pow(3) + beta);
  }
}

TEST_CASE("poly_eval needs an embedding") {
  Field f4 = make_field(2, 2);
  Field f8 = make_field(2, 3);  // 2 does not divide 3
  FqPoly f = FqPoly::one(f4);
  CHECK_THROWS_WITH_AS(poly_eval(f, FqElem::one(f8)), "no embedding available",
                       std::invalid_argument);
}

TEST_CASE("resultant sign convention and examples") {
  Field f7 = make_field(7, 1);
  // Res(z - a, z - b) = b - a with the product-over-roots-of-B convention
  for (int64_t a = 0; a < 7; ++a)
    for (int64_t b = 0; b < 7; ++b) {
      FqPoly pa = FqPoly::from_ints(f7, {-a, 1}, 'z');
      FqPoly pb = FqPoly::from_ints(f7, {-b, 1}, 'z');
      CHECK(resultant_univ(pa, pb) == FqElem::from_int(f7, b - a));
    }

  // A = z^2 + 1, B = z + 1 over F_3: A(-1) = 2
  Field f3 = make_field(3, 1);
  CHECK(resultant_univ(FqPoly::from_ints(f3, {1, 0, 1}, 'z'),
                       FqPoly::from_ints(f3, {1, 1}, 'z')) ==
        FqElem::from_int(f3, 2));

  // shared root kills the resultant
  Field f5 = make_field(5, 1);
  CHECK(resultant_univ(FqPoly::from_ints(f5, {-1, 0, 1}, 'z'),
                       FqPoly::from_ints(f5, {-1, 1}, 'z'))
            .is_zero());

  CHECK_THROWS_WITH_AS(resultant_univ(FqPoly::zero(f5), FqPoly::one(f5)),
                       "zero polynomial", std::invalid_argument);
}

TEST_CASE("resultant vanishes exactly on common factors") {
  Field k = make_field(13, 1);
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    FqPoly a = random_poly(k, 4, rng, 'z');
    FqPoly b = random_poly(k, 4, rng, 'z');
    if (a.is_zero() || b.is_zero()) continue;
    bool planted = trial % 2 == 0;
    if (planted) {
      FqPoly common = FqPoly::from_ints(k, {int64_t(trial), 1}, 'z');
      a = a * common;
      b = b * common;
    }
    bool zero = resultant_univ(a, b).is_zero();
    bool nonconst_gcd = poly_gcd(a, b).deg() > 0;
    CHECK(zero == nonconst_gcd);
    if (planted) CHECK(zero);
  }
}

TEST_CASE("nullspace_solve basics") {
  Field f5 = make_field(5, 1);
  FqMatrix id3(f5, 3, 3);
  for (size_t i = 0; i < 3; ++i) id3.set(i, i, FqElem::one(f5));
  CHECK(nullspace_solve(id3).empty());

  Field f2 = make_field(2, 1);
  FqMatrix row(f2, 1, 2);
  row.set(0, 0, FqElem::one(f2));
  row.set(0, 1, FqElem::one(f2));
  auto basis = nullspace_solve(row);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0].is_one());
  CHECK(basis[0][1].is_one());
}

TEST_CASE("nullspace of a planted rank-35 matrix over GF(2^10)") {
  Field k = make_field(2, 10);
  Rng rng(1234);
  // M = P (40x35) * Q (35x36) has rank <= 35; with random factors the
  // nullspace of the 36-column product is 1-dimensional.
  std::vector<FqElem> pm, qm;
  for (int i = 0; i < 40 * 35; ++i) pm.push_back(random_element(k, rng));
  for (int i = 0; i < 35 * 36; ++i) qm.push_back(random_element(k, rng));
  FqMatrix m(k, 40, 36);
  for (size_t r = 0; r < 40; ++r)
    for (size_t c = 0; c < 36; ++c) {
      FqElem acc = FqElem::zero(k);
      for (size_t t = 0; t < 35; ++t) acc += pm[r * 35 + t] * qm[t * 36 + c];
      m.set(r, c, acc);
    }
  auto basis = nullspace_solve(m);
  REQUIRE(basis.size() == 1);
  // M v = 0, re-verified
  for (size_t r = 0; r < 40; ++r) {
    FqElem acc = FqElem::zero(k);
    for (size_t c = 0; c < 36; ++c) acc += m.at(r, c) * basis[0][c];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("laurent lift") {
  Field f2 = make_field(2, 1);
  FqPoly t1 = FqPoly::from_ints(f2, {1, 1});  // T + 1
  CHECK(LaurentPoly(t1, 0).lift() == t1);
  // T^-2 * T^2 = 1 after normalization
  CHECK(LaurentPoly(FqPoly::monomial(FqElem::one(f2), 2), -2).lift() ==
        FqPoly::one(f2));
  CHECK_THROWS_WITH_AS(LaurentPoly(t1, -1).lift(), "nonpolynomial Laurent part",
                       std::domain_error);
}

TEST_CASE("laurent arithmetic keeps offsets consistent") {
  Field f5 = make_field(5, 1);
  LaurentPoly a(FqPoly::from_ints(f5, {1, 2}), -3);  // T^-3 (1 + 2T)
  LaurentPoly b(FqPoly::from_ints(f5, {4}), 3);      // 4 T^3
  LaurentPoly prod = a * b;                          // 4 + 8T = 4 + 3T
  CHECK(prod.offset() == 0);
  CHECK(prod.lift() == FqPoly::from_ints(f5, {4, 3}));
  LaurentPoly sum = a + (-a);
  CHECK(sum.is_zero());
  CHECK(sum.offset() == 0);
}

TEST_CASE("ring axioms on random polynomials") {
  for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 2}, {13, 1}}) {
    Field k = make_field(p, e);
    Rng rng(p * 100 + e);
    for (int i = 0; i < 20; ++i) {
      FqPoly a = random_poly(k, 6, rng);
      FqPoly b = random_poly(k, 6, rng);
      FqPoly c = random_poly(k, 6, rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero() && !b.is_zero()) CHECK((a * b).deg() == a.deg() + b.deg());
    }
  }
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    IntPoly a = random_int_poly(rng);
    IntPoly b = random_int_poly(rng);
    IntPoly c = random_int_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("kronecker and schoolbook paths agree") {
  for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 3}, {5, 2}, {2011, 1}}) {
    Field k = make_field(p, e);
    Rng rng(p + e);
    for (int i = 0; i < 6; ++i) {
      // degrees big enough to cross into the kronecker path
      FqPoly a = random_poly(k, 120, rng);
      FqPoly b = random_poly(k, 95, rng);
      FqPoly prod = a * b;
      // reference: quadratic accumulation through coeff/set_coeff
      FqPoly ref(k);
      for (int x = 0; x <= a.deg(); ++x) {
        FqElem ax = a.coeff(size_t(x));
        if (ax.is_zero()) continue;
        for (int y = 0; y <= b.deg(); ++y) {
          FqElem prodc = ax * b.coeff(size_t(y));
          if (!prodc.is_zero())
            ref.set_coeff(size_t(x + y), ref.coeff(size_t(x + y)) + prodc);
        }
      }
      CHECK(prod == ref);
    }
  }
}

TEST_CASE("charp pow path agrees with naive multiplication") {
  for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 2}, {3, 1}, {5, 1}}) {
    Field k = make_field(p, e);
    Rng rng(31 * p + e);
    for (int i = 0; i < 8; ++i) {
      FqPoly f = random_poly(k, 3, rng);
      uint64_t kexp = rng.below(uint64_t(p) * p * p + 1);
      FqPoly naive = FqPoly::one(k);
      for (uint64_t j = 0; j < kexp; ++j) naive = naive * f;
      CHECK(f.pow(kexp) == naive);
    }
  }
}

TEST_CASE("embedding is a ring homomorphism") {
  for (auto [pe, big] : {std::pair<std::pair<uint32_t, uint32_t>, uint32_t>{{2, 2}, 10},
                         {{3, 2}, 8},
                         {{2, 3}, 9}}) {
    Field from = make_field(pe.first, pe.second);
    Field to = make_field(pe.first, big);
    const Embedding& emb = get_embedding(from, to);
    Rng rng(pe.first * 1000 + big);
    for (int i = 0; i < 30; ++i) {
      FqElem a = random_element(from, rng);
      FqElem b = random_element(from, rng);
      CHECK(emb.apply(a + b) == emb.apply(a) + emb.apply(b));
      CHECK(emb.apply(a * b) == emb.apply(a) * emb.apply(b));
    }
    CHECK(emb.apply(FqElem::one(from)).is_one());
  }
}

TEST_CASE("divrem and gcd over a field") {
  Field k = make_field(7, 1);
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    FqPoly a = random_poly(k, 8, rng, 'z');
    FqPoly b = random_poly(k, 5, rng, 'z');
    if (b.is_zero()) continue;
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.deg() < b.deg()));
  }
  CHECK_THROWS_AS(divrem(FqPoly::one(k), FqPoly::zero(k)), std::invalid_argument);
}
