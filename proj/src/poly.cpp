#include "phit/poly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace phit {
namespace {

// Schoolbook product, fine for small operands.
FqPoly mul_schoolbook(const FqPoly& a, const FqPoly& b) {
  const Field& k = a.field();
  uint32_t e = k->e, p = k->p;
  size_t la = size_t(a.deg()) + 1, lb = size_t(b.deg()) + 1;
  FqPoly r(k, a.var());
  if (e == 1) {
    std::vector<uint64_t> acc(la + lb - 1, 0);
    const auto& av = a.raw();
    const auto& bv = b.raw();
    for (size_t i = 0; i < la; ++i) {
      if (av[i] == 0) continue;
      for (size_t j = 0; j < lb; ++j) acc[i + j] = (acc[i + j] + uint64_t(av[i]) * bv[j]) % p;
    }
    auto& out = r.raw_mut();
    out.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) out[i] = uint32_t(acc[i]);
  } else {
    for (size_t i = 0; i < la; ++i) {
      FqElem ai = a.coeff(i);
      if (ai.is_zero()) continue;
      for (size_t j = 0; j < lb; ++j) {
        FqElem prod = ai * b.coeff(j);
        if (!prod.is_zero()) r.set_coeff(i + j, r.coeff(i + j) + prod);
      }
    }
  }
  r.normalize();
  return r;
}

// Kronecker substitution: pack both factors into big integers (one slot per
// (T-exponent, x-exponent) pair, stride 2e-1 in x so products never carry
// across slots), multiply with GMP, unpack, and reduce x-parts by the field
// modulus.  This is the fast path for the long F_q[T] products the expansion
// produces; schoolbook handles everything below the crossover.
FqPoly mul_kronecker(const FqPoly& a, const FqPoly& b) {
  const Field& k = a.field();
  const uint32_t e = k->e, p = k->p;
  const size_t la = size_t(a.deg()) + 1, lb = size_t(b.deg()) + 1;
  const size_t stride = 2 * size_t(e) - 1;

  unsigned __int128 bound =
      (unsigned __int128)(p - 1) * (p - 1) * std::min(la, lb) * e;
  unsigned bits = 0;
  while (bound >> bits) ++bits;
  const size_t slot_bytes = (bits + 7) / 8;

  auto pack = [&](const FqPoly& f, size_t len) {
    std::vector<unsigned char> buf(len * stride * slot_bytes, 0);
    const auto& v = f.raw();
    for (size_t i = 0; i < len; ++i)
      for (size_t j = 0; j < e; ++j) {
        uint32_t c = v[i * e + j];
        unsigned char* dst = buf.data() + (i * stride + j) * slot_bytes;
        for (size_t t = 0; t < slot_bytes && t < 4; ++t) dst[t] = (c >> (8 * t)) & 0xff;
      }
    return buf;
  };

  std::vector<unsigned char> bufa = pack(a, la), bufb = pack(b, lb);
  mpz_class za, zb;
  mpz_import(za.get_mpz_t(), bufa.size(), -1, 1, 0, 0, bufa.data());
  mpz_import(zb.get_mpz_t(), bufb.size(), -1, 1, 0, 0, bufb.data());
  mpz_class zc = za * zb;

  const size_t lr = la + lb - 1;
  std::vector<unsigned char> out(lr * stride * slot_bytes + 16, 0);
  size_t count = 0;
  mpz_export(out.data(), &count, -1, 1, 0, 0, zc.get_mpz_t());

  FqPoly r(k, a.var());
  auto& rc = r.raw_mut();
  rc.assign(lr * e, 0);
  std::vector<uint64_t> slots(stride);
  for (size_t i = 0; i < lr; ++i) {
    for (size_t t = 0; t < stride; ++t) {
      uint64_t v = 0;
      const unsigned char* src = out.data() + (i * stride + t) * slot_bytes;
      for (size_t b2 = slot_bytes; b2-- > 0;) v = (v << 8) | src[b2];
      slots[t] = v % p;
    }
    // fold x^e .. x^(2e-2) with the reduction table
    for (size_t t = stride; t-- > e;) {
      uint64_t c = slots[t];
      if (c == 0) continue;
      const uint32_t* row = k->red.data() + (t - e) * e;
      for (uint32_t j = 0; j < e; ++j) slots[j] = (slots[j] + c * row[j]) % p;
    }
    for (uint32_t j = 0; j < e; ++j) rc[i * e + j] = uint32_t(slots[j]);
  }
  r.normalize();
  return r;
}

}  // namespace

FqPoly FqPoly::one(const Field& k, char var) { return constant(FqElem::one(k), var); }

FqPoly FqPoly::constant(const FqElem& c, char var) {
  FqPoly r(c.field(), var);
  if (!c.is_zero()) r.c_ = c.coeffs();
  return r;
}

FqPoly FqPoly::monomial(const FqElem& c, size_t exp, char var) {
  FqPoly r(c.field(), var);
  if (c.is_zero()) return r;
  r.c_.assign((exp + 1) * c.field()->e, 0);
  std::copy(c.coeffs().begin(), c.coeffs().end(), r.c_.begin() + exp * c.field()->e);
  return r;
}

FqPoly FqPoly::variable(const Field& k, char var) {
  return monomial(FqElem::one(k), 1, var);
}

FqPoly FqPoly::from_ints(const Field& k, std::initializer_list<int64_t> cs, char var) {
  FqPoly r(k, var);
  size_t i = 0;
  for (int64_t v : cs) r.set_coeff(i++, FqElem::from_int(k, v));
  return r;
}

bool FqPoly::is_one() const { return deg() == 0 && coeff(0).is_one(); }

FqElem FqPoly::coeff(size_t i) const {
  if (int(i) > deg()) return FqElem::zero(k_);
  std::vector<uint32_t> v(c_.begin() + i * k_->e, c_.begin() + (i + 1) * k_->e);
  return FqElem(k_, std::move(v));
}

FqElem FqPoly::lc() const {
  if (is_zero()) return FqElem::zero(k_);
  return coeff(size_t(deg()));
}

void FqPoly::set_coeff(size_t i, const FqElem& v) {
  detail::require_same_field(k_, v.field());
  size_t e = k_->e;
  if ((i + 1) * e > c_.size()) {
    if (v.is_zero()) return;
    c_.resize((i + 1) * e, 0);
  }
  std::copy(v.coeffs().begin(), v.coeffs().end(), c_.begin() + i * e);
  normalize();
}

int64_t FqPoly::valuation() const {
  size_t e = k_->e;
  for (size_t i = 0; i * e < c_.size(); ++i)
    for (size_t j = 0; j < e; ++j)
      if (c_[i * e + j]) return int64_t(i);
  return 0;
}

FqPoly FqPoly::operator-() const {
  FqPoly r = *this;
  uint32_t p = k_ ? k_->p : 0;
  for (auto& v : r.c_) v = v == 0 ? 0 : p - v;
  return r;
}

void FqPoly::add_shifted(const FqPoly& o, size_t d) {
  if (o.is_zero()) return;
  detail::require_same_field(k_, o.k_);
  const size_t e = k_->e;
  const uint32_t p = k_->p;
  if (c_.size() < o.c_.size() + d * e) c_.resize(o.c_.size() + d * e, 0);
  uint32_t* dst = c_.data() + d * e;
  const uint32_t* src = o.c_.data();
  const size_t n = o.c_.size();
  for (size_t i = 0; i < n; ++i) {
    uint32_t t = dst[i] + src[i];
    dst[i] = t >= p ? t - p : t;
  }
  normalize();
}

void FqPoly::sub_shifted(const FqPoly& o, size_t d) {
  if (o.is_zero()) return;
  detail::require_same_field(k_, o.k_);
  const size_t e = k_->e;
  const uint32_t p = k_->p;
  if (c_.size() < o.c_.size() + d * e) c_.resize(o.c_.size() + d * e, 0);
  uint32_t* dst = c_.data() + d * e;
  const uint32_t* src = o.c_.data();
  const size_t n = o.c_.size();
  for (size_t i = 0; i < n; ++i) {
    uint32_t t = dst[i] + p - src[i];
    dst[i] = t >= p ? t - p : t;
  }
  normalize();
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  detail::require_same_field(a.field(), b.field());
  if (a.is_zero() || b.is_zero()) return FqPoly::zero(a.field(), a.var());
  size_t la = size_t(a.deg()) + 1, lb = size_t(b.deg()) + 1;
  uint32_t e = a.field()->e;
  // crossover: schoolbook under ~4k coefficient multiplications
  if (la * lb * e * e <= 4096) return mul_schoolbook(a, b);
  return mul_kronecker(a, b);
}

bool operator==(const FqPoly& a, const FqPoly& b) {
  if (!a.k_ || !b.k_) return a.is_zero() && b.is_zero();
  return a.k_->same(*b.k_) && a.c_ == b.c_;
}

FqPoly FqPoly::times(const FqElem& s) const {
  detail::require_same_field(k_, s.field());
  FqPoly r(k_, var_);
  if (is_zero() || s.is_zero()) return r;
  const size_t e = k_->e;
  if (e == 1) {
    uint64_t sv = s.coeffs()[0];
    uint32_t p = k_->p;
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = uint32_t(c_[i] * sv % p);
  } else {
    for (int i = 0; i <= deg(); ++i) {
      FqElem prod = coeff(size_t(i)) * s;
      if (!prod.is_zero()) r.set_coeff(size_t(i), prod);
    }
  }
  r.normalize();
  return r;
}

FqPoly FqPoly::shifted(size_t d) const {
  FqPoly r(k_, var_);
  if (is_zero()) return r;
  r.c_.assign(c_.size() + d * k_->e, 0);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + d * k_->e);
  return r;
}

FqPoly FqPoly::dilate(size_t m) const {
  FqPoly r(k_, var_);
  if (is_zero()) return r;
  const size_t e = k_->e;
  r.c_.assign((size_t(deg()) * m + 1) * e, 0);
  for (size_t i = 0; size_t(i) <= size_t(deg()); ++i)
    std::copy(c_.begin() + i * e, c_.begin() + (i + 1) * e, r.c_.begin() + i * m * e);
  return r;
}

FqPoly FqPoly::frob_p() const {
  const uint32_t p = k_->p;
  FqPoly r(k_, var_);
  if (is_zero()) return r;
  const size_t e = k_->e;
  r.c_.assign((size_t(deg()) * p + 1) * e, 0);
  if (e == 1) {
    for (size_t i = 0; i <= size_t(deg()); ++i) r.c_[i * p] = c_[i];
  } else {
    for (size_t i = 0; i <= size_t(deg()); ++i) {
      FqElem ci = coeff(i);
      if (ci.is_zero()) continue;
      FqElem fr = ci.frobenius();
      std::copy(fr.coeffs().begin(), fr.coeffs().end(), r.c_.begin() + i * p * e);
    }
  }
  r.normalize();
  return r;
}

FqPoly FqPoly::pow(uint64_t k) const {
  if (k == 0) return one(k_, var_);
  return generic_pow_charp(*this, k, k_->p);
}

FqElem FqPoly::eval(const FqElem& a) const {
  detail::require_same_field(k_, a.field());
  FqElem r = FqElem::zero(k_);
  for (int i = deg(); i >= 0; --i) r = r * a + coeff(size_t(i));
  return r;
}

bool FqPoly::coeffs_in_prime_field() const {
  const size_t e = k_->e;
  for (size_t i = 0; i < c_.size(); ++i)
    if (i % e != 0 && c_[i] != 0) return false;
  return true;
}

FqPoly FqPoly::project_prime() const {
  if (!coeffs_in_prime_field())
    throw std::invalid_argument("coefficients not in prime subfield");
  Field fp = make_field(k_->p, 1);
  FqPoly r(fp, var_);
  const size_t e = k_->e;
  r.c_.resize(c_.size() / e);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[i * e];
  r.normalize();
  return r;
}

FqPoly FqPoly::lift_to(const Field& k) const {
  if (k.get() == k_.get() || k->same(*k_)) return *this;
  if (k->p != k_->p || k_->e != 1)
    throw std::invalid_argument("field mismatch");
  FqPoly r(k, var_);
  const size_t e = k->e;
  r.c_.assign(c_.size() * e, 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * e] = c_[i];
  return r;
}

std::string FqPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    FqElem c = coeff(size_t(i));
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c.is_one();
    if (i == 0) {
      os << (c.in_prime_field() ? c.str() : "(" + c.str() + ")");
    } else {
      if (!unit) {
        os << (c.in_prime_field() ? c.str() : "(" + c.str() + ")") << "*";
      }
      os << var_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void FqPoly::normalize() {
  if (!k_) return;
  const size_t e = k_->e;
  while (!c_.empty()) {
    bool zero = true;
    for (size_t j = c_.size() - e; j < c_.size(); ++j)
      if (c_[j]) { zero = false; break; }
    if (!zero) break;
    c_.resize(c_.size() - e);
  }
}

std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("zero polynomial");
  detail::require_same_field(a.field(), b.field());
  FqPoly q(a.field(), a.var());
  FqPoly r = a;
  FqElem lcinv = b.lc().inv();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    size_t shift = size_t(r.deg() - b.deg());
    FqElem c = r.lc() * lcinv;
    q.set_coeff(shift, c);
    r.sub_shifted(b.times(c), shift);
  }
  return {q, r};
}

FqPoly poly_gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && !a.lc().is_one()) a = a.times(a.lc().inv());
  return a;
}

FqPoly powmod(const FqPoly& base, uint64_t k, const FqPoly& mod) {
  FqPoly r = FqPoly::one(base.field(), base.var());
  FqPoly b = divrem(base, mod).second;
  while (k) {
    if (k & 1) r = divrem(r * b, mod).second;
    if (k >>= 1) b = divrem(b * b, mod).second;
  }
  return r;
}

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    off_ = 0;
    return;
  }
  int64_t v = body_.valuation();
  if (v > 0) {
    // strip T^v into the offset
    const size_t e = body_.field()->e;
    auto& c = body_.raw_mut();
    c.erase(c.begin(), c.begin() + size_t(v) * e);
    off_ += v;
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  int64_t base = std::min(off_, o.off_);
  FqPoly sum = body_.shifted(size_t(off_ - base));
  sum.add_shifted(o.body_, size_t(o.off_ - base));
  body_ = std::move(sum);
  off_ = base;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = -o;
    return *this;
  }
  int64_t base = std::min(off_, o.off_);
  FqPoly sum = body_.shifted(size_t(off_ - base));
  sum.sub_shifted(o.body_, size_t(o.off_ - base));
  body_ = std::move(sum);
  off_ = base;
  normalize();
  return *this;
}

FqPoly LaurentPoly::lift() const {
  if (is_zero()) return body_;
  if (off_ < 0) throw std::domain_error("nonpolynomial Laurent part");
  return body_.shifted(size_t(off_));
}

IntPoly int_poly(std::initializer_list<int64_t> cs) {
  IntPoly r(mpz_class(0), 't');
  size_t i = 0;
  for (int64_t v : cs) r.set_coeff(i++, mpz_class(v));
  return r;
}

}  // namespace phit
