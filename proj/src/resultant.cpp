#include "phit/resultant.hpp"

namespace phit {

FqElem resultant_univ(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("zero polynomial");
  detail::require_same_field(a.field(), b.field());
  DensePoly<FqElem> pa(FqElem::zero(a.field()), a.var());
  for (int i = 0; i <= a.deg(); ++i) pa.set_coeff(size_t(i), a.coeff(size_t(i)));
  DensePoly<FqElem> pb(FqElem::zero(b.field()), b.var());
  for (int i = 0; i <= b.deg(); ++i) pb.set_coeff(size_t(i), b.coeff(size_t(i)));
  return resultant_generic(pa, pb);
}

}  // namespace phit
