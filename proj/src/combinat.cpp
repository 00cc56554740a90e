#include "phit/combinat.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace phit {
namespace {

mpz_class binom_nonneg(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::mutex g_catalan_mutex;
std::vector<mpz_class>& catalan_cache() {
  static std::vector<mpz_class> cache;
  return cache;
}

}  // namespace

std::pair<uint32_t, uint32_t> factor_prime_power(uint64_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power");
  uint64_t p = 0, rest = q;
  for (uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {uint32_t(q), 1};  // q itself prime
  uint32_t e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument("not a prime power");
  return {uint32_t(p), e};
}

mpz_class binom_ext(int64_t n, int64_t k) {
  if (k < 0) return 0;
  if (n >= 0) return binom_nonneg(uint64_t(n), uint64_t(k));
  // product formula via the reflection binom(n,k) = (-1)^k binom(k-n-1, k)
  mpz_class r = binom_nonneg(uint64_t(k - n - 1), uint64_t(k));
  if (k & 1) r = -r;
  // assert the defining product/k! division is exact
  mpz_class num = 1;
  for (int64_t i = 0; i < k; ++i) num *= mpz_class(n - i);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), unsigned(k));
  mpz_class quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
  if (sgn(rem) != 0 || quo != r) throw std::logic_error("binomial division not exact");
  return r;
}

uint32_t binom_mod_p(int64_t n, int64_t k, uint32_t p) {
  if (k < 0) return 0;
  if (n < 0) {
    // binom(n, k) = (-1)^k binom(k-n-1, k)
    uint32_t r = binom_mod_p(k - n - 1, k, p);
    return (k & 1) ? (p - r) % p : r;
  }
  // Lucas: product of digit binomials base p
  uint64_t nn = uint64_t(n), kk = uint64_t(k);
  uint64_t r = 1;
  while (kk > 0 || nn > 0) {
    uint64_t nd = nn % p, kd = kk % p;
    if (kd > nd) return 0;
    // binom(nd, kd) mod p with nd, kd < p
    uint64_t num = 1, den = 1;
    for (uint64_t i = 0; i < kd; ++i) {
      num = num * ((nd - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    r = r * num % p * detail::inv_mod_p(uint32_t(den), p) % p;
    nn /= p;
    kk /= p;
  }
  return uint32_t(r);
}

const mpz_class& catalan(size_t i) {
  std::lock_guard<std::mutex> lock(g_catalan_mutex);
  auto& cache = catalan_cache();
  if (i >= cache.size()) {
    for (size_t j = cache.size(); j <= i; ++j) {
      mpz_class b = binom_nonneg(2 * j, j);
      mpz_class c = b / mpz_class(int64_t(j) + 1);
      if (c * mpz_class(int64_t(j) + 1) != b)
        throw std::logic_error("Catalan division not exact");
      if (c != b - binom_nonneg(2 * j, j == 0 ? 0 : j - 1) && j > 0)
        throw std::logic_error("Catalan forms disagree");
      if (j == 0 && c != 1) throw std::logic_error("Catalan forms disagree");
      cache.push_back(std::move(c));
    }
  }
  return cache[i];
}

uint32_t catalan_mod_p(size_t i, uint32_t p) {
  mpz_class r = catalan(i) % mpz_class(p);
  return uint32_t(r.get_ui());
}

uint32_t catalan_mod_via_congruence(uint64_t i, uint64_t q) {
  auto [p, e] = factor_prime_power(q);
  (void)e;
  if (i + 1 >= q) throw std::invalid_argument("index out of Lemma range");
  uint32_t a = binom_mod_p(int64_t(q - 1 - i), int64_t(i), p);
  uint32_t b = binom_mod_p(int64_t(q - i), int64_t(i + 1), p);
  uint32_t sum = (a + b) % p;
  uint32_t val = (i & 1) ? (p - sum) % p : sum;
  if (val != catalan_mod_p(size_t(i), p))
    throw std::logic_error("Catalan congruence disagrees with exact value");
  return val;
}

std::pair<bool, bool> verify_trinomial_and_sum(int64_t r, int64_t m, int64_t n,
                                               int64_t ell) {
  bool trin = binom_ext(r, m) * binom_ext(m, n) ==
              binom_ext(r, n) * binom_ext(r - n, m - n);
  bool sum_ok = false;
  if (ell >= 0) {
    mpz_class acc = 0;
    for (int64_t i = 0; i <= ell; ++i) {
      mpz_class t = binom_ext(r - i, ell) * binom_ext(ell, i);
      if (i & 1) acc -= t;
      else acc += t;
    }
    sum_ok = acc == 1;
  }
  return {trin, sum_ok};
}

Char0Identity verify_char0_identity(unsigned e) {
  if (e < 2) throw std::invalid_argument("out of Proposition range");
  IntPoly lhs = int_poly({});
  lhs.set_coeff(e + 1, mpz_class(1));
  lhs.set_coeff(0, mpz_class((e % 2 == 0) ? -1 : 1));

  IntPoly rhs = int_poly({});
  IntPoly tminus1 = int_poly({-1, 1});
  for (unsigned n = 0; n <= (e + 1) / 2; ++n) {
    mpz_class c = binom_ext(int64_t(e) - n, int64_t(n) - 1) +
                  binom_ext(int64_t(e) - n + 1, int64_t(n));
    IntPoly term = tminus1.pow(e + 1 - 2 * n).shifted(n).times(c);
    rhs += term;
  }
  return Char0Identity{lhs == rhs, lhs, rhs};
}

CatalanIdentity verify_catalan_identity(uint64_t q) {
  auto [p, e] = factor_prime_power(q);
  (void)e;
  Field fp = make_field(p, 1);
  // lhs = sum_{i<= (q-1)/2} C_i (t(1-t))^i, Horner in t(1-t)
  FqPoly t = FqPoly::variable(fp, 't');
  FqPoly t1t = t - t * t;  // t(1-t)
  uint64_t w = (q - 1) / 2;
  FqPoly lhs = FqPoly::constant(FqElem::from_int(fp, catalan_mod_p(size_t(w), p)), 't');
  for (uint64_t i = w; i-- > 0;) {
    lhs = lhs * t1t;
    lhs += FqPoly::constant(FqElem::from_int(fp, catalan_mod_p(size_t(i), p)), 't');
  }
  // rhs = t^(q-1) + (1-t)^(q-1): binomials by Lucas
  FqPoly rhs(fp, 't');
  for (uint64_t j = 0; j < q; ++j) {
    // coefficient of t^j in (1-t)^(q-1)
    uint32_t c = binom_mod_p(int64_t(q - 1), int64_t(j), p);
    if (j & 1) c = (p - c) % p;
    rhs.set_coeff(size_t(j), FqElem::from_int(fp, c));
  }
  rhs.set_coeff(size_t(q - 1), rhs.coeff(size_t(q - 1)) + FqElem::one(fp));
  bool main_form = lhs == rhs;

  // restated form 1 + t + ... + t^(q-2) + 2 t^(q-1)
  FqPoly geo(fp, 't');
  for (uint64_t j = 0; j + 1 < q; ++j) geo.set_coeff(size_t(j), FqElem::one(fp));
  geo.set_coeff(size_t(q - 1), FqElem::from_int(fp, 2));
  bool restated = lhs == geo;

  return CatalanIdentity{main_form && restated, main_form, restated, lhs, rhs};
}

IntPoly power_sum_poly(unsigned k) {
  IntPoly p0 = int_poly({2});
  if (k == 0) return p0;
  IntPoly p1 = int_poly({1});
  if (k == 1) return p1;
  IntPoly t = int_poly({0, 1});
  for (unsigned i = 2; i <= k; ++i) {
    IntPoly next = p1 - t * p0;
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

bool verify_zero_window(uint64_t q) {
  auto [p, e] = factor_prime_power(q);
  (void)e;
  for (uint64_t i = (q - 1) / 2 + 1; i + 1 < q; ++i)
    if (catalan_mod_p(size_t(i), p) != 0) return false;
  return true;
}

bool verify_tower_relation(uint64_t q) {
  auto [p, e] = factor_prime_power(q);
  (void)e;
  Field fp = make_field(p, 1);
  // u = x^q + x
  FqPoly u(fp, 'x');
  u.set_coeff(1, FqElem::one(fp));
  u.set_coeff(size_t(q), FqElem::one(fp));
  // lhs = u^(q+1)
  FqPoly lhs = u.pow(q + 1);
  // rhs = x^(q^2+q) + x^(q+1) + sum_i C_i u^(q-1-2i) x^((q+1)(i+1))
  FqPoly rhs(fp, 'x');
  rhs.set_coeff(size_t(q * q + q), FqElem::one(fp));
  rhs.set_coeff(size_t(q + 1), rhs.coeff(size_t(q + 1)) + FqElem::one(fp));
  FqPoly u2 = u * u;
  uint64_t w = (q - 1) / 2;
  // Horner over u^2: sum_i C_i u^(2(w-i)) x^((q+1)i), then odd-q fixup
  FqPoly s = FqPoly::constant(FqElem::from_int(fp, catalan_mod_p(0, p)), 'x');
  for (uint64_t i = 1; i <= w; ++i) {
    s = s * u2;
    s.add_shifted(
        FqPoly::constant(FqElem::from_int(fp, catalan_mod_p(size_t(i), p)), 'x'),
        size_t((q + 1) * i));
  }
  // s = sum_i C_i u^(2(w-i)) x^((q+1)i); q even needs one extra factor u since
  // q-1-2i = 2(w-i)+1 there
  if (q % 2 == 0) s = s * u;
  rhs.add_shifted(s, size_t(q + 1));
  return lhs == rhs;
}

}  // namespace phit
