#pragma once

#include <vector>

#include "phit/ff.hpp"

namespace phit {

// Row-major matrix over F_{p^e}, flat storage (e words per entry).
class FqMatrix {
 public:
  FqMatrix(Field k, size_t rows, size_t cols)
      : k_(std::move(k)), rows_(rows), cols_(cols), a_(rows * cols * k_->e, 0) {}

  const Field& field() const { return k_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  FqElem at(size_t r, size_t c) const;
  void set(size_t r, size_t c, const FqElem& v);

  uint32_t* entry(size_t r, size_t c) { return a_.data() + (r * cols_ + c) * k_->e; }
  const uint32_t* entry(size_t r, size_t c) const {
    return a_.data() + (r * cols_ + c) * k_->e;
  }

 private:
  Field k_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

// Reduced basis of the right nullspace {v : Mv = 0} by Gauss-Jordan
// elimination with deterministic pivoting (first nonzero entry in column
// order).  Empty result means the nullspace is trivial.
std::vector<std::vector<FqElem>> nullspace_solve(const FqMatrix& m);

}  // namespace phit
