#include "phit/ff.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace phit {
namespace {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using FpVec = std::vector<uint32_t>;  // dense poly over F_p, ascending

void fp_normalize(FpVec& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// c = a*b mod mu (mu monic of degree e), schoolbook; all inputs normalized.
FpVec fp_mulmod(const FpVec& a, const FpVec& b, const FpVec& mu, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  size_t e = mu.size() - 1;
  std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + uint64_t(a[i]) * b[j]) % p;
  }
  // reduce by mu from the top
  for (size_t d = acc.size(); d-- > e;) {
    uint64_t c = acc[d] % p;
    if (c == 0) continue;
    acc[d] = 0;
    for (size_t j = 0; j < e; ++j)
      acc[d - e + j] = (acc[d - e + j] + c * (uint64_t(p) - mu[j])) % p;
  }
  FpVec r(std::min(acc.size(), e));
  for (size_t i = 0; i < r.size(); ++i) r[i] = uint32_t(acc[i] % p);
  fp_normalize(r);
  return r;
}

FpVec fp_mod(FpVec a, const FpVec& b, uint32_t p) {
  uint32_t lc_inv = detail::inv_mod_p(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    uint64_t c = uint64_t(a.back()) * lc_inv % p;
    if (c != 0) {
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t sub = c * b[j] % p;
        a[shift + j] = uint32_t((a[shift + j] + p - sub) % p);
      }
    }
    a.pop_back();
    fp_normalize(a);
  }
  return a;
}

FpVec fp_gcd(FpVec a, FpVec b, uint32_t p) {
  fp_normalize(a);
  fp_normalize(b);
  while (!b.empty()) {
    FpVec r = fp_mod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^i) mod mu by i successive p-th powers.
FpVec fp_xq_power(const FpVec& mu, uint32_t p, uint32_t i) {
  FpVec h = {0, 1};  // x
  fp_normalize(h);
  for (uint32_t t = 0; t < i; ++t) {
    // h <- h^p mod mu, square-and-multiply over exponent p
    FpVec base = h;
    FpVec r = {1};
    uint32_t k = p;
    while (k) {
      if (k & 1) r = fp_mulmod(r, base, mu, p);
      base = fp_mulmod(base, base, mu, p);
      k >>= 1;
    }
    h = std::move(r);
  }
  return h;
}

bool is_irreducible(const FpVec& mu, uint32_t p) {
  size_t e = mu.size() - 1;
  if (e == 1) return true;
  if (mu[0] == 0) return false;  // divisible by x, cheap pre-filter
  for (uint32_t i = 1; i <= e / 2; ++i) {
    FpVec h = fp_xq_power(mu, p, i);  // x^(p^i) mod mu
    // h - x
    FpVec d = h;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    fp_normalize(d);
    FpVec g = fp_gcd(d, mu, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::mutex g_field_mutex;
std::map<std::pair<uint32_t, uint32_t>, Field>& field_cache() {
  static std::map<std::pair<uint32_t, uint32_t>, Field> cache;
  return cache;
}

}  // namespace

namespace detail {

void require_same_field(const Field& a, const Field& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same(*b)) throw std::invalid_argument("field mismatch");
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
  if (a % p == 0) throw std::domain_error("division by zero");
  int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    int64_t quo = r / newr;
    std::swap(t -= quo * newt, newt);
    std::swap(r -= quo * newr, newr);
  }
  return uint32_t(t < 0 ? t + p : t);
}

}  // namespace detail

std::string FieldSpec::name() const {
  std::ostringstream os;
  os << "GF(" << q << ")";
  return os.str();
}

std::string FieldSpec::modulus_str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t d = modulus.size(); d-- > 0;) {
    if (modulus[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << modulus[d];
    } else {
      if (modulus[d] != 1) os << modulus[d] << "*";
      os << "x";
      if (d > 1) os << "^" << d;
    }
  }
  if (first) os << "0";
  return os.str();
}

Field make_field(uint32_t p, uint32_t e) {
  {
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto it = field_cache().find({p, e});
    if (it != field_cache().end()) return it->second;
  }
  if (!is_prime_u32(p)) throw std::invalid_argument("not prime");
  if (e < 1) throw std::invalid_argument("bad degree");

  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (q > (uint64_t(1) << 62) / p) throw std::overflow_error("field too large");
    q *= p;
  }

  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->e = e;
  spec->q = q;

  if (e == 1) {
    spec->modulus = {0, 1};  // x
  } else {
    // Scan monic x^e + a_{e-1} x^{e-1} + ... + a_0 with the constant
    // coefficient as the fastest-varying digit.
    FpVec mu(e + 1, 0);
    mu[e] = 1;
    bool found = false;
    for (uint64_t n = 0; n < q && !found; ++n) {
      uint64_t rem = n;
      for (uint32_t i = 0; i < e; ++i) {
        mu[i] = uint32_t(rem % p);
        rem /= p;
      }
      if (is_irreducible(mu, p)) found = true;
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
    spec->modulus = mu;
  }

  // x^{e+t} mod modulus for t in [0, e-1): one row of e residues each.
  if (e > 1) {
    spec->red.resize((e - 1) * e);
    FpVec row(e, 0);
    for (uint32_t j = 0; j < e; ++j) row[j] = (p - spec->modulus[j] % p) % p;
    for (uint32_t t = 0; t + 1 < e; ++t) {
      std::copy(row.begin(), row.end(), spec->red.begin() + size_t(t) * e);
      // row <- row * x mod modulus
      FpVec next(e, 0);
      uint32_t carry = row[e - 1];
      for (uint32_t j = e; j-- > 1;) next[j] = row[j - 1];
      next[0] = 0;
      if (carry) {
        for (uint32_t j = 0; j < e; ++j) {
          uint64_t sub = uint64_t(carry) * (spec->modulus[j] % p) % p;
          next[j] = uint32_t((next[j] + p - sub) % p);
        }
      }
      row = std::move(next);
    }
  }

  Field f = spec;
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto [it, inserted] = field_cache().emplace(std::make_pair(p, e), f);
  return it->second;
}

FqElem::FqElem(Field k, std::vector<uint32_t> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
  if (c_.size() != k_->e) throw std::invalid_argument("bad element length");
  for (auto& v : c_) v %= k_->p;
}

FqElem FqElem::zero(const Field& k) { return FqElem(k, std::vector<uint32_t>(k->e, 0)); }

FqElem FqElem::one(const Field& k) {
  std::vector<uint32_t> c(k->e, 0);
  c[0] = k->p > 1 ? 1 : 0;
  return FqElem(k, std::move(c));
}

FqElem FqElem::gen(const Field& k) {
  std::vector<uint32_t> c(k->e, 0);
  if (k->e > 1) c[1] = 1;
  return FqElem(k, std::move(c));
}

FqElem FqElem::from_int(const Field& k, int64_t v) {
  int64_t r = v % int64_t(k->p);
  if (r < 0) r += k->p;
  std::vector<uint32_t> c(k->e, 0);
  c[0] = uint32_t(r);
  return FqElem(k, std::move(c));
}

FqElem FqElem::from_index(const Field& k, uint64_t idx) {
  std::vector<uint32_t> c(k->e, 0);
  for (uint32_t i = 0; i < k->e; ++i) {
    c[i] = uint32_t(idx % k->p);
    idx /= k->p;
  }
  return FqElem(k, std::move(c));
}

bool FqElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint32_t v) { return v == 0; });
}

bool FqElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](uint32_t v) { return v == 0; });
}

bool FqElem::in_prime_field() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](uint32_t v) { return v == 0; });
}

uint64_t FqElem::index() const {
  uint64_t idx = 0;
  for (size_t i = c_.size(); i-- > 0;) idx = idx * k_->p + c_[i];
  return idx;
}

FqElem FqElem::operator-() const {
  FqElem r = *this;
  for (auto& v : r.c_) v = v == 0 ? 0 : k_->p - v;
  return r;
}

FqElem& FqElem::operator+=(const FqElem& o) {
  detail::require_same_field(k_, o.k_);
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= k_->p) c_[i] -= k_->p;
  }
  return *this;
}

FqElem& FqElem::operator-=(const FqElem& o) {
  detail::require_same_field(k_, o.k_);
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] += k_->p - o.c_[i];
    if (c_[i] >= k_->p) c_[i] -= k_->p;
  }
  return *this;
}

FqElem operator*(const FqElem& a, const FqElem& b) {
  detail::require_same_field(a.k_, b.k_);
  const FieldSpec& k = *a.k_;
  uint32_t e = k.e;
  if (e == 1)
    return FqElem(a.k_, {uint32_t(uint64_t(a.c_[0]) * b.c_[0] % k.p)});
  std::vector<uint64_t> acc(2 * e - 1, 0);
  bool small_p = k.p < (uint32_t(1) << 16);
  for (uint32_t i = 0; i < e; ++i) {
    if (a.c_[i] == 0) continue;
    for (uint32_t j = 0; j < e; ++j) {
      uint64_t prod = uint64_t(a.c_[i]) * b.c_[j];
      acc[i + j] += small_p ? prod : prod % k.p;
    }
  }
  // fold x^{e+t} via the reduction table
  for (uint32_t t = 2 * e - 2; t >= e; --t) {
    uint64_t c = acc[t] % k.p;
    if (c == 0) continue;
    const uint32_t* row = k.red.data() + size_t(t - e) * e;
    for (uint32_t j = 0; j < e; ++j) acc[j] += c * row[j] % k.p;
  }
  std::vector<uint32_t> r(e);
  for (uint32_t j = 0; j < e; ++j) r[j] = uint32_t(acc[j] % k.p);
  return FqElem(a.k_, std::move(r));
}

FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inv(); }

bool operator==(const FqElem& a, const FqElem& b) {
  return a.k_->same(*b.k_) && a.c_ == b.c_;
}

FqElem FqElem::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  const FieldSpec& k = *k_;
  if (k.e == 1) return FqElem(k_, {detail::inv_mod_p(c_[0], k.p)});
  // extended Euclid in F_p[x] against the modulus
  FpVec r0(k.modulus.begin(), k.modulus.end());
  FpVec r1(c_.begin(), c_.end());
  fp_normalize(r1);
  FpVec t0 = {}, t1 = {1};
  uint32_t p = k.p;
  while (!r1.empty()) {
    // quotient/remainder of r0 by r1
    FpVec quo;
    FpVec rem = r0;
    uint32_t lc_inv = detail::inv_mod_p(r1.back(), p);
    while (rem.size() >= r1.size() && !rem.empty()) {
      size_t shift = rem.size() - r1.size();
      uint64_t c = uint64_t(rem.back()) * lc_inv % p;
      if (quo.size() < shift + 1) quo.resize(shift + 1, 0);
      quo[shift] = uint32_t((quo[shift] + c) % p);
      for (size_t j = 0; j < r1.size(); ++j) {
        uint64_t sub = c * r1[j] % p;
        rem[shift + j] = uint32_t((rem[shift + j] + p - sub) % p);
      }
      fp_normalize(rem);
    }
    // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - quo*t1)
    FpVec qt(quo.size() + t1.size(), 0);
    if (!quo.empty() && !t1.empty()) {
      for (size_t i = 0; i < quo.size(); ++i)
        for (size_t j = 0; j < t1.size(); ++j)
          qt[i + j] = uint32_t((qt[i + j] + uint64_t(quo[i]) * t1[j]) % p);
    }
    fp_normalize(qt);
    FpVec nt = t0;
    if (nt.size() < qt.size()) nt.resize(qt.size(), 0);
    for (size_t j = 0; j < qt.size(); ++j) nt[j] = uint32_t((nt[j] + p - qt[j]) % p);
    fp_normalize(nt);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  // r0 is the gcd (a unit since the modulus is irreducible)
  uint32_t scale = detail::inv_mod_p(r0[0], p);
  std::vector<uint32_t> out(k.e, 0);
  for (size_t j = 0; j < t0.size(); ++j) out[j] = uint32_t(uint64_t(t0[j]) * scale % p);
  return FqElem(k_, std::move(out));
}

FqElem FqElem::pow(int64_t k) const {
  if (k < 0) return inv().pow(-k);
  FqElem base = *this;
  FqElem r = one(k_);
  uint64_t n = uint64_t(k);
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

FqElem FqElem::frobenius() const { return pow(int64_t(k_->p)); }

std::string FqElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t d = c_.size(); d-- > 0;) {
    if (c_[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << c_[d];
    } else {
      if (c_[d] != 1) os << c_[d] << "*";
      os << "x";
      if (d > 1) os << "^" << d;
    }
  }
  if (first) os << "0";
  return os.str();
}

FqElem random_element(const Field& k, Rng& rng, bool nonzero) {
  for (;;) {
    std::vector<uint32_t> c(k->e);
    for (auto& v : c) v = uint32_t(rng.below(k->p));
    FqElem x(k, std::move(c));
    if (!nonzero || !x.is_zero()) return x;
  }
}

}  // namespace phit
