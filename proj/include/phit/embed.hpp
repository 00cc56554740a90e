#pragma once

#include "phit/poly.hpp"

namespace phit {

// Ring embedding F_{p^e} -> F_{p^(e*k)}, realized by a root of the small
// field's modulus inside the big field.  Deterministic for a given pair of
// fields; instances are cached process-wide.
class Embedding {
 public:
  Embedding(Field from, Field to);

  const Field& from() const { return from_; }
  const Field& to() const { return to_; }
  FqElem apply(const FqElem& a) const;

 private:
  Field from_, to_;
  std::vector<FqElem> gen_pow_;  // images of x^j, j < e_from
};

// Cached lookup; throws std::invalid_argument("no embedding available") when
// the characteristics differ or the degrees do not divide.
const Embedding& get_embedding(const Field& from, const Field& to);

// Horner evaluation of f at a point living in f's field or in an extension
// of it (coefficients are mapped through the cached embedding).
FqElem poly_eval(const FqPoly& f, const FqElem& a);

// Deterministic root of a squarefree totally-split polynomial, used for the
// embedding construction (equal-degree splitting with a fixed probe sweep).
FqElem find_root(const FqPoly& f);

}  // namespace phit
