#pragma once

#include "phit/poly.hpp"

namespace phit {

// Rational function num/den over one finite field, gcd-reduced with monic
// denominator.  Coefficient field for the symbolic-X resultant chain.
class RatFun {
 public:
  explicit RatFun(FqPoly num)
      : num_(std::move(num)), den_(FqPoly::one(num_.field(), num_.var())) {}
  RatFun(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    reduce();
  }

  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFun operator-() const { return RatFun(-num_, den_, nocheck{}); }
  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return RatFun(den_, num_);
  }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  std::string str() const {
    return is_polynomial() ? num_.str() : "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  struct nocheck {};
  RatFun(FqPoly num, FqPoly den, nocheck) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce() {
    if (num_.is_zero()) {
      den_ = FqPoly::one(den_.field(), den_.var());
      return;
    }
    FqPoly g = poly_gcd(num_, den_);
    if (g.deg() > 0) {
      num_ = divrem(num_, g).first;
      den_ = divrem(den_, g).first;
    }
    FqElem s = den_.lc().inv();
    num_ = num_.times(s);
    den_ = den_.times(s);
  }
  FqPoly num_, den_;
};

inline bool ring_is_zero(const RatFun& a) { return a.is_zero(); }
inline RatFun ring_zero(const RatFun& proto) {
  return RatFun(FqPoly::zero(proto.num().field(), proto.num().var()));
}
inline RatFun ring_one(const RatFun& proto) {
  return RatFun(FqPoly::one(proto.num().field(), proto.num().var()));
}
inline uint32_t ring_char(const RatFun& proto) { return proto.num().field()->p; }
inline std::string ring_str(const RatFun& a) { return a.str(); }

inline FqElem ring_inv(const FqElem& a) { return a.inv(); }
inline RatFun ring_inv(const RatFun& a) { return a.inv(); }

// Division with remainder over a coefficient field C.
template <class C>
std::pair<DensePoly<C>, DensePoly<C>> divrem_generic(const DensePoly<C>& a,
                                                     const DensePoly<C>& b) {
  if (b.is_zero()) throw std::invalid_argument("zero polynomial");
  DensePoly<C> q(a.proto(), a.var());
  DensePoly<C> r = a;
  C lcinv = ring_inv(b.lc());
  while (!r.is_zero() && r.deg() >= b.deg()) {
    size_t shift = size_t(r.deg() - b.deg());
    C c = r.lc() * lcinv;
    q.set_coeff(shift, c);
    r.sub_shifted(b.times(c), shift);
  }
  return {q, r};
}

// Res(A, B) with the product-over-roots-of-B convention
//   Res(A, B) = lc(B)^deg A * prod_{B(rho)=0} A(rho),
// whose sign is fixed by the linear case Res(z - a, z - b) = b - a.  The
// Euclidean chain uses Res(A, B) = (-1)^(deg B * deg R) lc(B)^(deg A - deg R)
// Res(B, R) for R = A mod B, with Res(A, c) = c^deg A for constants.
template <class C>
C resultant_generic(DensePoly<C> a, DensePoly<C> b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("zero polynomial");
  C acc = ring_one(a.proto());
  if (a.deg() < b.deg()) {
    if ((a.deg() & 1) && (b.deg() & 1)) acc = ring_zero(acc) - acc;
    std::swap(a, b);
  }
  for (;;) {
    if (b.deg() == 0) {
      // Res(A, c) = c^deg A
      C c = b.lc();
      C r = acc;
      for (int i = 0; i < a.deg(); ++i) r = r * c;
      return r;
    }
    DensePoly<C> rem = divrem_generic(a, b).second;
    if (rem.is_zero()) return ring_zero(acc);
    int da = a.deg(), db = b.deg(), dr = rem.deg();
    if ((db & 1) && (dr & 1)) acc = ring_zero(acc) - acc;
    C lcb = b.lc();
    for (int i = 0; i < da - dr; ++i) acc = acc * lcb;
    a = std::move(b);
    b = std::move(rem);
  }
}

// Resultant of two nonzero univariate polynomials over one finite field.
FqElem resultant_univ(const FqPoly& a, const FqPoly& b);

}  // namespace phit
