#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "phit/ff.hpp"

namespace phit {

// Dense univariate polynomial over F_{p^e}.  Coefficients are stored flat,
// e machine words per coefficient, normalized (no trailing zero
// coefficients; the zero polynomial is the empty vector, degree -1).
// The variable tag is carried for printing and error reporting only.
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(Field k, char var = 'T') : k_(std::move(k)), var_(var) {}

  static FqPoly zero(const Field& k, char var = 'T') { return FqPoly(k, var); }
  static FqPoly one(const Field& k, char var = 'T');
  static FqPoly constant(const FqElem& c, char var = 'T');
  static FqPoly monomial(const FqElem& c, size_t exp, char var = 'T');
  static FqPoly variable(const Field& k, char var = 'T');  // the monomial T
  // Coefficients as signed integers reduced into the prime subfield,
  // ascending exponents.
  static FqPoly from_ints(const Field& k, std::initializer_list<int64_t> cs,
                          char var = 'T');

  const Field& field() const { return k_; }
  char var() const { return var_; }
  int deg() const { return int(c_.size() / k_->e) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  FqElem coeff(size_t i) const;  // zero beyond the degree
  FqElem lc() const;
  void set_coeff(size_t i, const FqElem& v);
  int64_t valuation() const;  // lowest exponent with nonzero coefficient; 0 for zero

  FqPoly operator-() const;
  FqPoly& operator+=(const FqPoly& o) { add_shifted(o, 0); return *this; }
  FqPoly& operator-=(const FqPoly& o) { sub_shifted(o, 0); return *this; }
  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend bool operator==(const FqPoly& a, const FqPoly& b);

  void add_shifted(const FqPoly& o, size_t d);  // += o * T^d
  void sub_shifted(const FqPoly& o, size_t d);  // -= o * T^d
  FqPoly times(const FqElem& s) const;
  FqPoly shifted(size_t d) const;  // * T^d
  FqPoly dilate(size_t m) const;   // T -> T^m, coefficients untouched
  FqPoly frob_p() const;           // f^p: coefficient Frobenius + dilation by p
  // k-th power by base-p digits of k: f^(p^j) pieces from frob_p, digits by
  // square-and-multiply.
  FqPoly pow(uint64_t k) const;
  FqElem eval(const FqElem& a) const;  // Horner; a must live in this field

  bool coeffs_in_prime_field() const;
  // Rewrite over F_p (requires coeffs_in_prime_field) / over an extension of
  // the prime field with the same p.
  FqPoly project_prime() const;
  FqPoly lift_to(const Field& k) const;

  std::string str() const;  // descending powers, e.g. "T^4 + 2*T + 1"

  const std::vector<uint32_t>& raw() const { return c_; }
  std::vector<uint32_t>& raw_mut() { return c_; }
  void normalize();

 private:
  Field k_;
  std::vector<uint32_t> c_;
  char var_ = 'T';
};

// Field-coefficient division with remainder; divisor nonzero.
std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b);
FqPoly poly_gcd(FqPoly a, FqPoly b);  // monic gcd, zero if both zero
FqPoly powmod(const FqPoly& base, uint64_t k, const FqPoly& mod);

// Univariate polynomial with a signed minimum-exponent offset: the value is
// body * T^offset.  Normalized so the body has a nonzero constant term
// (offset 0 for the zero polynomial).  Models the transient T^(1-q) factors.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(FqPoly body, int64_t offset = 0)
      : body_(std::move(body)), off_(offset) {
    normalize();
  }
  static LaurentPoly zero(const Field& k, char var = 'T') {
    return LaurentPoly(FqPoly::zero(k, var));
  }

  const FqPoly& body() const { return body_; }
  int64_t offset() const { return off_; }
  bool is_zero() const { return body_.is_zero(); }

  LaurentPoly operator-() const { return LaurentPoly(-body_, off_); }
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly(a.body_ * b.body_, a.off_ + b.off_);
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.off_ == b.off_ && a.body_ == b.body_;
  }

  LaurentPoly times(const FqElem& s) const { return LaurentPoly(body_.times(s), off_); }
  LaurentPoly shifted(int64_t d) const { return LaurentPoly(body_, off_ + d); }

  // The plain polynomial equal to this value; throws
  // std::domain_error("nonpolynomial Laurent part") if a negative exponent
  // survives normalization.
  FqPoly lift() const;

 private:
  void normalize();
  FqPoly body_;
  int64_t off_ = 0;
};

// ---------------------------------------------------------------------------
// Generic dense univariate polynomials over a coefficient ring C (nested
// polynomials, big integers).  A prototype zero of the ring travels with the
// value so empty polynomials still know their coefficient ring.

inline bool ring_is_zero(const FqElem& a) { return a.is_zero(); }
inline bool ring_is_zero(const FqPoly& a) { return a.is_zero(); }
inline bool ring_is_zero(const mpz_class& a) { return sgn(a) == 0; }

inline FqElem ring_zero(const FqElem& proto) { return FqElem::zero(proto.field()); }
inline FqPoly ring_zero(const FqPoly& proto) { return FqPoly::zero(proto.field(), proto.var()); }
inline mpz_class ring_zero(const mpz_class&) { return mpz_class(0); }

inline FqElem ring_one(const FqElem& proto) { return FqElem::one(proto.field()); }
inline FqPoly ring_one(const FqPoly& proto) { return FqPoly::one(proto.field(), proto.var()); }
inline mpz_class ring_one(const mpz_class&) { return mpz_class(1); }

inline uint32_t ring_char(const FqElem& proto) { return proto.field()->p; }
inline uint32_t ring_char(const FqPoly& proto) { return proto.field()->p; }
inline uint32_t ring_char(const mpz_class&) { return 0; }

inline FqElem ring_frob_p(const FqElem& a) { return a.frobenius(); }
inline FqPoly ring_frob_p(const FqPoly& a) { return a.frob_p(); }
inline mpz_class ring_frob_p(const mpz_class&) {
  throw std::logic_error("no Frobenius in characteristic 0");
}

inline std::string ring_str(const FqElem& a) { return a.str(); }
inline std::string ring_str(const FqPoly& a) { return a.str(); }
inline std::string ring_str(const mpz_class& a) { return a.get_str(); }

template <class C>
class DensePoly {
 public:
  explicit DensePoly(C proto, char var = 'z')
      : proto_(ring_zero(proto)), var_(var) {}
  DensePoly(C proto, std::vector<C> coeffs, char var = 'z')
      : proto_(ring_zero(proto)), c_(std::move(coeffs)), var_(var) {
    normalize();
  }

  static DensePoly monomial(const C& c, size_t exp, char var = 'z') {
    DensePoly r(c, var);
    r.set_coeff(exp, c);
    return r;
  }

  const C& proto() const { return proto_; }
  char var() const { return var_; }
  int deg() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const C& coeff(size_t i) const { return i < c_.size() ? c_[i] : proto_; }
  const C& lc() const {
    if (c_.empty()) throw std::invalid_argument("zero polynomial");
    return c_.back();
  }
  const std::vector<C>& coeffs() const { return c_; }

  void set_coeff(size_t i, C v) {
    if (i >= c_.size()) {
      if (ring_is_zero(v)) return;
      c_.resize(i + 1, proto_);
    }
    c_[i] = std::move(v);
    normalize();
  }

  // Grows as needed and skips normalization; callers normalize when done.
  C& coeff_mut(size_t i) {
    if (i >= c_.size()) c_.resize(i + 1, proto_);
    return c_[i];
  }

  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& c : r.c_) c = ring_zero(proto_) - c;
    return r;
  }
  DensePoly& operator+=(const DensePoly& o) { return add_shifted(o, 0); }
  DensePoly& operator-=(const DensePoly& o) { return sub_shifted(o, 0); }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }

  DensePoly& add_shifted(const DensePoly& o, size_t d) {
    if (o.is_zero()) return *this;
    if (c_.size() < o.c_.size() + d) c_.resize(o.c_.size() + d, proto_);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i + d] += o.c_[i];
    normalize();
    return *this;
  }
  DensePoly& sub_shifted(const DensePoly& o, size_t d) {
    if (o.is_zero()) return *this;
    if (c_.size() < o.c_.size() + d) c_.resize(o.c_.size() + d, proto_);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i + d] -= o.c_[i];
    normalize();
    return *this;
  }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    DensePoly r(a.proto_, a.var_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, a.proto_);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (ring_is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.normalize();
    return r;
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  DensePoly times(const C& s) const {
    DensePoly r(proto_, var_);
    if (ring_is_zero(s)) return r;
    r.c_ = c_;
    for (auto& c : r.c_) c = c * s;
    r.normalize();
    return r;
  }
  DensePoly shifted(size_t d) const {
    DensePoly r(proto_, var_);
    if (is_zero()) return r;
    r.c_.assign(c_.size() + d, proto_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + d] = c_[i];
    return r;
  }
  DensePoly dilate(size_t m) const {
    DensePoly r(proto_, var_);
    if (is_zero()) return r;
    r.c_.assign((c_.size() - 1) * m + 1, proto_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * m] = c_[i];
    r.normalize();
    return r;
  }
  DensePoly frob_p() const {
    uint32_t p = ring_char(proto_);
    DensePoly r(proto_, var_);
    if (is_zero()) return r;
    r.c_.assign((c_.size() - 1) * p + 1, proto_);
    for (size_t i = 0; i < c_.size(); ++i)
      if (!ring_is_zero(c_[i])) r.c_[i * p] = ring_frob_p(c_[i]);
    r.normalize();
    return r;
  }

  DensePoly pow(uint64_t k) const;

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (ring_is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + ring_str(c_[i]) + ")";
      if (i > 0) {
        s += "*";
        s += var_;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

  void normalize() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }

 private:
  C proto_;
  std::vector<C> c_;
  char var_ = 'z';
};

template <class C>
inline bool ring_is_zero(const DensePoly<C>& a) { return a.is_zero(); }
template <class C>
inline DensePoly<C> ring_zero(const DensePoly<C>& proto) {
  return DensePoly<C>(proto.proto(), proto.var());
}
template <class C>
inline DensePoly<C> ring_one(const DensePoly<C>& proto) {
  return DensePoly<C>::monomial(ring_one(proto.proto()), 0, proto.var());
}
template <class C>
inline uint32_t ring_char(const DensePoly<C>& proto) { return ring_char(proto.proto()); }
template <class C>
inline DensePoly<C> ring_frob_p(const DensePoly<C>& a) { return a.frob_p(); }
template <class C>
inline std::string ring_str(const DensePoly<C>& a) { return a.str(); }

template <class P>
P generic_pow_binary(const P& f, uint64_t k) {
  P r = ring_one(f);
  P base = f;
  while (k) {
    if (k & 1) r = r * base;
    if (k >>= 1) base = base * base;
  }
  return r;
}

// Characteristic-p powering: write k in base p, apply Frobenius dilation for
// the p^j pieces and square-and-multiply for the digits.
template <class P>
P generic_pow_charp(const P& f, uint64_t k, uint32_t p) {
  P r = ring_one(f);
  P piece = f;  // f^(p^j)
  while (k) {
    uint64_t digit = k % p;
    k /= p;
    if (digit) r = r * generic_pow_binary(piece, digit);
    if (k) piece = ring_frob_p(piece);
  }
  return r;
}

template <class C>
DensePoly<C> DensePoly<C>::pow(uint64_t k) const {
  if (k == 0) return ring_one(*this);
  uint32_t p = ring_char(proto_);
  return p == 0 ? generic_pow_binary(*this, k) : generic_pow_charp(*this, k, p);
}

// Polynomials with arbitrary-precision integer coefficients.
using IntPoly = DensePoly<mpz_class>;

IntPoly int_poly(std::initializer_list<int64_t> cs);

}  // namespace phit
