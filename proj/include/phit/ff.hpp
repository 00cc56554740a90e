#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "phit/rng.hpp"

namespace phit {

// Description of F_{p^e}.  The modulus is the lexicographically smallest
// monic irreducible of degree e over F_p, found by scanning coefficient
// vectors in ascending order with the constant coefficient varying fastest,
// so construction is deterministic: the same (p, e) always yields the same
// field.  Degree-1 convention: the prime field carries modulus x.
//
// Budget: p prime with p < 2^31, and p^e < 2^62 (q up to well beyond the
// 2^20 needed for specialization fields).
class FieldSpec {
 public:
  uint32_t p = 0;
  uint32_t e = 0;
  uint64_t q = 0;                  // p^e
  std::vector<uint32_t> modulus;   // length e+1, ascending exponents, monic

  // Row t holds x^{e+t} mod modulus (e entries); used to fold products.
  std::vector<uint32_t> red;

  bool same(const FieldSpec& o) const {
    return p == o.p && e == o.e && modulus == o.modulus;
  }
  std::string name() const;         // e.g. "GF(9)"
  std::string modulus_str() const;  // e.g. "x^2 + 1"
};

using Field = std::shared_ptr<const FieldSpec>;

// Deterministic field construction; results are cached and shared, so specs
// compare equal by pointer for the common case.
// Throws std::invalid_argument("not prime") / ("bad degree") and
// std::overflow_error("field too large") when p^e exceeds the budget.
Field make_field(uint32_t p, uint32_t e);

// Element of F_{p^e}: residue-class representative of degree < e, stored as
// e coefficients in [0, p).  Value type; all operations are pure.
class FqElem {
 public:
  FqElem() = default;
  FqElem(Field k, std::vector<uint32_t> coeffs);

  static FqElem zero(const Field& k);
  static FqElem one(const Field& k);
  static FqElem gen(const Field& k);  // class of x (equals 0 when e == 1)
  // Reduction of a signed integer into the prime subfield.
  static FqElem from_int(const Field& k, int64_t v);
  // Inverse of the enumeration used by element_index.
  static FqElem from_index(const Field& k, uint64_t idx);

  const Field& field() const { return k_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in the prime subfield F_p.
  bool in_prime_field() const;
  uint64_t index() const;  // little-endian base-p digits

  FqElem operator-() const;
  FqElem& operator+=(const FqElem& o);
  FqElem& operator-=(const FqElem& o);
  friend FqElem operator+(FqElem a, const FqElem& b) { return a += b; }
  friend FqElem operator-(FqElem a, const FqElem& b) { return a -= b; }
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend FqElem operator/(const FqElem& a, const FqElem& b);
  friend bool operator==(const FqElem& a, const FqElem& b);

  FqElem inv() const;           // throws std::domain_error("division by zero")
  FqElem pow(int64_t k) const;  // negative k allowed for nonzero base
  FqElem frobenius() const;     // a^p

  std::string str() const;  // "x^2 + 2" style, "0" for zero

 private:
  Field k_;
  std::vector<uint32_t> c_;  // length e
};

// Uniform over F_{p^e} (excluding 0 when nonzero is set); reproducible from
// the generator state.
FqElem random_element(const Field& k, Rng& rng, bool nonzero = false);

namespace detail {
// Same field check shared by element and polynomial code; throws
// std::invalid_argument("field mismatch").
void require_same_field(const Field& a, const Field& b);
uint32_t inv_mod_p(uint32_t a, uint32_t p);  // throws on a == 0
}  // namespace detail

}  // namespace phit
