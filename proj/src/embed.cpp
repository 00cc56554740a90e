#include "phit/embed.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace phit {
namespace {

// Trace map sum_{i<n} h^(2^i) mod f over a field of characteristic 2 with
// 2^n elements.
FqPoly trace_mod(const FqPoly& h, const FqPoly& f, uint32_t n) {
  FqPoly acc = divrem(h, f).second;
  FqPoly pw = acc;
  for (uint32_t i = 1; i < n; ++i) {
    pw = divrem(pw * pw, f).second;
    acc += pw;
  }
  return acc;
}

}  // namespace

FqElem find_root(const FqPoly& f_in) {
  const Field& k = f_in.field();
  FqPoly f = f_in;
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (!f.lc().is_one()) f = f.times(f.lc().inv());

  // Probe polynomials xi*y + c must vary in xi: maps y + c commute with
  // Frobenius and can never separate conjugate roots.  The probe stream is
  // seeded from the field parameters only, so the chosen root is stable.
  Rng probe_rng(0x524f4f54ULL ^ (uint64_t(k->p) << 32) ^ k->e);
  for (unsigned probe = 0; f.deg() > 1; ++probe) {
    if (probe > 4096) throw std::runtime_error("root search failed to split");
    FqPoly h(k, f.var());
    h.set_coeff(1, random_element(k, probe_rng, true));
    h.set_coeff(0, random_element(k, probe_rng));
    FqPoly g(k, f.var());
    if (k->p == 2) {
      g = poly_gcd(f, trace_mod(h, f, k->e));
    } else {
      FqPoly s = powmod(h, (k->q - 1) / 2, f);
      s -= FqPoly::one(k, f.var());
      g = poly_gcd(f, s);
    }
    if (g.deg() > 0 && g.deg() < f.deg()) {
      // keep the smaller factor, deterministically
      FqPoly other = divrem(f, g).first;
      f = (g.deg() <= other.deg()) ? g : other;
    }
  }
  if (f.deg() != 1) throw std::runtime_error("root search failed to split");
  return -f.coeff(0);
}

Embedding::Embedding(Field from, Field to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p != to_->p || to_->e % from_->e != 0)
    throw std::invalid_argument("no embedding available");
  if (from_->e == 1 || from_->same(*to_)) {
    // prime subfield or identity: powers of the generator of the target
    FqElem g = from_->e == 1 ? FqElem::one(to_) : FqElem::gen(to_);
    FqElem pw = FqElem::one(to_);
    for (uint32_t j = 0; j < from_->e; ++j) {
      gen_pow_.push_back(pw);
      pw = pw * g;
    }
    return;
  }
  // lift the small modulus into the big field and take a root of it
  FqPoly mu(to_, 'y');
  for (uint32_t i = 0; i <= from_->e; ++i)
    mu.set_coeff(i, FqElem::from_int(to_, int64_t(from_->modulus[i])));
  FqElem theta = find_root(mu);
  FqElem pw = FqElem::one(to_);
  for (uint32_t j = 0; j < from_->e; ++j) {
    gen_pow_.push_back(pw);
    pw = pw * theta;
  }
  // sanity: theta really is a root
  if (!mu.eval(theta).is_zero()) throw std::logic_error("embedding root invalid");
}

FqElem Embedding::apply(const FqElem& a) const {
  detail::require_same_field(a.field(), from_);
  FqElem r = FqElem::zero(to_);
  for (uint32_t j = 0; j < from_->e; ++j) {
    uint32_t c = a.coeffs()[j];
    if (c) r += gen_pow_[j] * FqElem::from_int(to_, int64_t(c));
  }
  return r;
}

const Embedding& get_embedding(const Field& from, const Field& to) {
  static std::mutex mu;
  static std::map<std::tuple<uint32_t, uint32_t, uint32_t, uint32_t>,
                  std::unique_ptr<Embedding>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(from->p, from->e, to->p, to->e);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Embedding>(from, to)).first;
  return *it->second;
}

FqElem poly_eval(const FqPoly& f, const FqElem& a) {
  const Field& kf = f.field();
  const Field& ka = a.field();
  if (kf.get() == ka.get() || kf->same(*ka)) return f.eval(a);
  const Embedding& emb = get_embedding(kf, ka);
  FqElem r = FqElem::zero(ka);
  for (int i = f.deg(); i >= 0; --i) r = r * a + emb.apply(f.coeff(size_t(i)));
  return r;
}

}  // namespace phit
