#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "phit/poly.hpp"

namespace phit {

// The modular polynomial Phi_T(X, Y): a sparse bivariate polynomial with
// F_q[T] coefficients, keyed by the exponent pair (m, n), 0 <= m, n <= q+1.
// Well-formed instances are symmetric (c_{m,n} = c_{n,m}), have monic
// boundary (c_{q+1,0} = 1 and c_{q+1,n} = 0 for n >= 1, mirrored in Y), and
// satisfy deg_T c_{m,n} <= q^3 + q^2 with equality at (0, 0).
struct ModularPoly {
  Field k;      // F_q
  uint64_t q = 0;
  std::map<std::pair<uint32_t, uint32_t>, FqPoly> terms;  // zero coeffs omitted

  const FqPoly* find(uint32_t m, uint32_t n) const;
  FqPoly coeff(uint32_t m, uint32_t n) const;  // zero polynomial when absent
  void set(uint32_t m, uint32_t n, FqPoly c);  // drops zero coefficients
  int max_deg_t() const;

  friend bool operator==(const ModularPoly& a, const ModularPoly& b) {
    return a.q == b.q && a.k->same(*b.k) && a.terms == b.terms;
  }
};

// j_0 = -T (T^(q-1) - 1)^(q+1), degree exactly q^2.
FqPoly j0_poly(const Field& fq);

// Expand the closed form
//   (X+Y-j0)^(q+1) - X Y^q - X^q Y + (XY)^q (T^(1-q) - 1) + XY (T^(q-1)-1)^(q^2)
//   - T^(1-q) XY sum_i C_i (XY - T^q (X+Y-j0))^(q-1-2i) (XY T^(q^2+1))^i
// exactly, carrying T as Laurent polynomials internally and lifting at the
// end.  A failed lift throws std::runtime_error("cancellation violated").
ModularPoly expand_phi(uint64_t q);

// P_m(Y) = sum_n c_{m,n} Y^n.  For 2 <= m <= q-1 the extraction is
// cross-checked against the closed coefficient formula
//   P_m = T^(1-q) Y sum_i C_i binom(q-1-2i, m-1-i) (Y-T^q)^(m-1-i)
//         (-T^q (Y-j0))^(q-m-i) (T^(q^2+1) Y)^i
// and a mismatch throws.  m out of [0, q+1] throws std::invalid_argument.
DensePoly<FqPoly> coeff_pm(const ModularPoly& phi, uint32_t m);

struct BoundaryReport {
  bool pq1 = false, pq = false, p1 = false, p0 = false;
  bool ok() const { return pq1 && pq && p1 && p0; }
};
// Exact equality of P_{q+1}, P_q, P_1, P_0 against their closed formulas.
BoundaryReport verify_boundary(const ModularPoly& phi);

// Defining property: Phi_T(j(z), j'(z)) = 0 for j = (z+T)^(q+1)/z and
// j' = (z+T^q)^(q+1)/z^q, checked in the denominator-cleared form
//   sum_{m,n} c_{m,n}(T) (z+T)^((q+1)m) (z+T^q)^((q+1)n) z^((q+1)^2-m-qn) = 0.
bool verify_substitution(const ModularPoly& phi);

struct IntermediatesReport {
  bool product_form = false;  // cleared form of XY - T^q(X+Y-j0)
  bool root_pair = false;     // s1+s2 = 1 and s1 s2 = XY T^(q^2+1)/(...)^2, cleared
  bool closing = false;       // the final two-fraction identity, cleared
  bool ok() const { return product_form && root_pair && closing; }
};
IntermediatesReport verify_proof_intermediates(uint64_t q);

// Cross-multiplied ratio identity
//   P_m (Y - T^q)^(q+1-2m) = P_{q+1-m} (T^q (Y - j0))^(q+1-2m)
// for every m with 2 <= m <= q-1 and 2m <= q+1 (the rest is its mirror).
bool verify_ratio(const ModularPoly& phi);

// Specialization of Phi at T = alpha: the (q+2)^2 coefficient grid over
// F_{q^k}, m-major.
std::vector<FqElem> specialize_phi(const ModularPoly& phi, const FqElem& alpha);

struct InterpOracleResult {
  bool ok = false;
  unsigned retries = 0;
  FqElem alpha;
  std::vector<FqElem> specialized;  // interpolated grid, m-major, (q+2)^2
};
// Independent linear-algebra oracle: draws a random specialization T = alpha
// in F_{q^ext_deg} (alpha != 0, alpha^(q-1) != 1), samples the parametrized
// curve at (q+2)^2 + 8 distinct z-values, recovers the coefficient grid as a
// 1-dimensional nullspace normalized at X^(q+1), and compares it entry by
// entry with phi specialized at alpha.  Degenerate sample sets are redrawn up
// to 5 times before std::runtime_error("oracle degenerate").
InterpOracleResult oracle_interpolate(const ModularPoly& phi, unsigned ext_deg,
                                      uint64_t seed);

struct ResultantOracleResult {
  bool ok = false;
  std::vector<int> scalars;  // recorded scalar per trial, each +1 or -1
};
// Resultant oracle: per trial draws alpha and gamma, eliminates z from
//   (z+alpha)^(q+1) - X z   and   (z+alpha^q)^(q+1) - gamma z^q
// through the Euclidean chain with X carried symbolically (polynomials in X
// as coefficients), and requires the result to equal Phi_T(X, gamma)|_{T=alpha}
// up to a recorded scalar in {+1, -1}; also spot-checks one parametrization
// point per trial as a direct root.
ResultantOracleResult oracle_resultant_points(const ModularPoly& phi,
                                              unsigned ext_deg, unsigned trials,
                                              uint64_t seed);

}  // namespace phit
