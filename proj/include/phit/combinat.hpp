#pragma once

#include <cstdint>
#include <utility>

#include <gmpxx.h>

#include "phit/poly.hpp"

namespace phit {

// Factor a prime power q = p^e; throws std::invalid_argument("not a prime
// power") otherwise.
std::pair<uint32_t, uint32_t> factor_prime_power(uint64_t q);

// Binomial coefficient extended to all integer pairs: 0 for k < 0, otherwise
// n(n-1)...(n-k+1)/k! evaluated exactly (the division is asserted exact).
mpz_class binom_ext(int64_t n, int64_t k);

// binom_ext(n, k) mod p.  Nonnegative n goes through Lucas' base-p digit
// products; negative n is reflected first via
// binom(n, k) = (-1)^k binom(k-n-1, k).
uint32_t binom_mod_p(int64_t n, int64_t k, uint32_t p);

// i-th Catalan number binom(2i, i)/(i+1), cached; the equivalent difference
// form binom(2i, i) - binom(2i, i-1) is asserted on first computation.
const mpz_class& catalan(size_t i);
uint32_t catalan_mod_p(size_t i, uint32_t p);

// Catalan residue through the congruence
//   C_i = (-1)^i (binom(q-1-i, i) + binom(q-i, i+1)) mod p,  0 <= i < q-1.
// Throws std::invalid_argument("index out of Lemma range") outside that
// window.  Always cross-checked against the exact Catalan number.
uint32_t catalan_mod_via_congruence(uint64_t i, uint64_t q);

// Exact-integer checks of the two classical binomial identities
//   binom(r,m) binom(m,n) = binom(r,n) binom(r-n, m-n)
//   sum_i (-1)^i binom(r-i, l) binom(l, i) = 1            (l >= 0)
// Never expected to fail; returned as a pair for test plumbing.
std::pair<bool, bool> verify_trinomial_and_sum(int64_t r, int64_t m, int64_t n,
                                               int64_t ell);

struct Char0Identity {
  bool ok;
  IntPoly lhs, rhs;
};
// t^(e+1) - (-1)^e  ==  sum_n (binom(e-n, n-1) + binom(e-n+1, n)) (t-1)^(e+1-2n) t^n
// over Z[t], e >= 2 (throws std::invalid_argument("out of Proposition range")).
Char0Identity verify_char0_identity(unsigned e);

struct CatalanIdentity {
  bool ok;          // both checks below
  bool main_form;   // sum C_i (t(1-t))^i == t^(q-1) + (1-t)^(q-1) over F_p
  bool restated;    // sum C_i (t(1-t))^i == 1 + t + ... + t^(q-2) + 2 t^(q-1)
  FqPoly lhs, rhs;
};
CatalanIdentity verify_catalan_identity(uint64_t q);

// p_k = s1^k + s2^k in Z[t] for the roots of s^2 - s + t, by the Newton
// recurrence p_0 = 2, p_1 = 1, p_k = p_{k-1} - t p_{k-2}.
IntPoly power_sum_poly(unsigned k);

// C_i = 0 mod p for every (q-1)/2 < i < q-1 (vacuous for q < 4).
bool verify_zero_window(uint64_t q);

// Cleared form of the tower relation between u = x^q + x and
// v = x^(q+1)/(x^q + x): substituting v and multiplying through by u turns
//   u^q = u^(q-1) v^q + v + v sum_i C_i u^(q-1-i) v^i
// into the polynomial identity
//   (x^q+x)^(q+1) = x^(q^2+q) + x^(q+1)
//                   + sum_i C_i (x^q+x)^(q-1-2i) x^((q+1)(i+1))
// over F_p[x], which is what gets checked.
bool verify_tower_relation(uint64_t q);

}  // namespace phit
