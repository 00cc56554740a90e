#include "phit/linalg.hpp"

#include <algorithm>

namespace phit {
namespace {

// Raw-limb element kernels for the elimination inner loops; one scratch
// convolution buffer is reused across all calls.
struct ElemKernel {
  const FieldSpec& k;
  std::vector<uint64_t> acc;
  std::vector<uint32_t> prod;

  explicit ElemKernel(const FieldSpec& spec)
      : k(spec), acc(2 * spec.e - 1), prod(spec.e) {}

  bool is_zero(const uint32_t* a) const {
    for (uint32_t j = 0; j < k.e; ++j)
      if (a[j]) return false;
    return true;
  }

  void mul(const uint32_t* a, const uint32_t* b, uint32_t* out) {
    const uint32_t e = k.e, p = k.p;
    if (e == 1) {
      out[0] = uint32_t(uint64_t(a[0]) * b[0] % p);
      return;
    }
    std::fill(acc.begin(), acc.end(), 0);
    const bool small_p = p < (uint32_t(1) << 16);
    for (uint32_t i = 0; i < e; ++i) {
      if (a[i] == 0) continue;
      for (uint32_t j = 0; j < e; ++j) {
        uint64_t prod = uint64_t(a[i]) * b[j];
        acc[i + j] += small_p ? prod : prod % p;
      }
    }
    for (uint32_t t = 2 * e - 2; t >= e; --t) {
      uint64_t c = acc[t] % p;
      if (c == 0) continue;
      const uint32_t* row = k.red.data() + size_t(t - e) * e;
      for (uint32_t j = 0; j < e; ++j) acc[j] += c * row[j] % p;
    }
    for (uint32_t j = 0; j < e; ++j) out[j] = uint32_t(acc[j] % p);
  }

  // dst -= f * src, elementwise over n entries of e limbs each
  void submul_row(uint32_t* dst, const uint32_t* src, const uint32_t* f, size_t n) {
    const uint32_t e = k.e, p = k.p;
    for (size_t c = 0; c < n; ++c) {
      const uint32_t* s = src + c * e;
      if (is_zero(s)) continue;
      mul(f, s, prod.data());
      uint32_t* d = dst + c * e;
      for (uint32_t j = 0; j < e; ++j) {
        uint32_t t = d[j] + p - prod[j];
        d[j] = t >= p ? t - p : t;
      }
    }
  }
};

// Characteristic-2 fields up to e = 32 run the elimination on bit-packed
// elements: one word per entry, shift-xor multiplication, xor row updates.
struct Gf2Kernel {
  uint32_t e;
  uint64_t mask;  // modulus bits, including the monic x^e bit

  explicit Gf2Kernel(const FieldSpec& k) : e(k.e), mask(0) {
    for (uint32_t i = 0; i <= k.e; ++i)
      if (k.modulus[i] & 1) mask |= uint64_t(1) << i;
  }

  uint64_t mul(uint64_t a, uint64_t b) const {
    uint64_t acc = 0;
    while (b) {
      unsigned i = unsigned(__builtin_ctzll(b));
      b &= b - 1;
      acc ^= a << i;
    }
    for (uint32_t t = 2 * e - 2; t >= e && t < 64; --t)
      if ((acc >> t) & 1) acc ^= mask << (t - e);
    return acc;
  }

  uint64_t inv(uint64_t a) const {
    // a^(2^e - 2); the caller guarantees a != 0
    uint64_t r = 1, base = a;
    for (uint32_t i = 1; i < e; ++i) {
      base = mul(base, base);
      r = mul(r, base);
    }
    return r;
  }
};

std::vector<std::vector<FqElem>> nullspace_gf2(const FqMatrix& m) {
  const Field& kf = m.field();
  const size_t e = kf->e, rows = m.rows(), cols = m.cols();
  Gf2Kernel ops(*kf);

  std::vector<uint64_t> a(rows * cols, 0);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) {
      const uint32_t* src = m.entry(r, c);
      uint64_t v = 0;
      for (size_t j = 0; j < e; ++j)
        if (src[j] & 1) v |= uint64_t(1) << j;
      a[r * cols + c] = v;
    }

  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pr = rank;
    while (pr < rows && a[pr * cols + col] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != rank)
      std::swap_ranges(a.begin() + rank * cols, a.begin() + (rank + 1) * cols,
                       a.begin() + pr * cols);
    uint64_t inv = ops.inv(a[rank * cols + col]);
    for (size_t c = col; c < cols; ++c) {
      uint64_t& x = a[rank * cols + c];
      if (x) x = ops.mul(x, inv);
    }
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      uint64_t f = a[r * cols + col];
      if (f == 0) continue;
      const uint64_t* piv = a.data() + rank * cols;
      uint64_t* dst = a.data() + r * cols;
      for (size_t c = col; c < cols; ++c)
        if (piv[c]) dst[c] ^= ops.mul(f, piv[c]);
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;

  auto unpack = [&](uint64_t v) {
    std::vector<uint32_t> limbs(e, 0);
    for (size_t j = 0; j < e; ++j) limbs[j] = uint32_t((v >> j) & 1);
    return FqElem(kf, std::move(limbs));
  };

  std::vector<std::vector<FqElem>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FqElem> v(cols, FqElem::zero(kf));
    v[free_col] = FqElem::one(kf);
    for (size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = unpack(a[r * cols + free_col]);  // -x = x in char 2
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

FqElem FqMatrix::at(size_t r, size_t c) const {
  const uint32_t* p = entry(r, c);
  return FqElem(k_, std::vector<uint32_t>(p, p + k_->e));
}

void FqMatrix::set(size_t r, size_t c, const FqElem& v) {
  detail::require_same_field(k_, v.field());
  std::copy(v.coeffs().begin(), v.coeffs().end(), entry(r, c));
}

std::vector<std::vector<FqElem>> nullspace_solve(const FqMatrix& m) {
  const Field& kf = m.field();
  if (kf->p == 2 && kf->e <= 32) return nullspace_gf2(m);
  const size_t e = kf->e, rows = m.rows(), cols = m.cols();
  ElemKernel ops(*kf);

  std::vector<uint32_t> a(rows * cols * e);
  for (size_t r = 0; r < rows; ++r)
    std::copy(m.entry(r, 0), m.entry(r, 0) + cols * e, a.data() + r * cols * e);
  auto elem = [&](size_t r, size_t c) { return a.data() + (r * cols + c) * e; };

  std::vector<size_t> pivot_col;
  std::vector<uint32_t> tmp(e), factor(e);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pr = rank;
    while (pr < rows && ops.is_zero(elem(pr, col))) ++pr;
    if (pr == rows) continue;
    if (pr != rank)
      std::swap_ranges(elem(rank, 0), elem(rank, 0) + cols * e, elem(pr, 0));
    // scale the pivot row so the pivot is 1
    FqElem inv =
        FqElem(kf, std::vector<uint32_t>(elem(rank, col), elem(rank, col) + e)).inv();
    for (size_t c = col; c < cols; ++c) {
      if (ops.is_zero(elem(rank, c))) continue;
      ops.mul(elem(rank, c), inv.coeffs().data(), tmp.data());
      std::copy(tmp.begin(), tmp.end(), elem(rank, c));
    }
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || ops.is_zero(elem(r, col))) continue;
      std::copy(elem(r, col), elem(r, col) + e, factor.begin());
      ops.submul_row(elem(r, col), elem(rank, col), factor.data(), cols - col);
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<FqElem>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FqElem> v(cols, FqElem::zero(kf));
    v[free_col] = FqElem::one(kf);
    for (size_t r = 0; r < rank; ++r) {
      FqElem entry(kf, std::vector<uint32_t>(elem(r, free_col), elem(r, free_col) + e));
      v[pivot_col[r]] = -entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace phit
