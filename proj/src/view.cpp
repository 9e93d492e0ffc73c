#include "hemi/view.hpp"

namespace hemi {

AlgebraView::AlgebraView(const FiniteAlgebra& a) : a_(&a), lat_(a.leq) {}

Elem AlgebraView::meet_or_throw(Elem x, Elem y, const char* what) const {
  auto m = lat_.meet(x, y);
  if (!m)
    throw PreconditionError(std::string(what) + ": meet of " + a_->name(x) + " and " +
                            a_->name(y) + " does not exist");
  return *m;
}

Elem AlgebraView::join_or_throw(Elem x, Elem y, const char* what) const {
  auto j = lat_.join(x, y);
  if (!j)
    throw PreconditionError(std::string(what) + ": join of " + a_->name(x) + " and " +
                            a_->name(y) + " does not exist");
  return *j;
}

void AlgebraView::require(Signature features, const std::string& context) const {
  Signature missing = features & ~signature_of(*a_);
  if (missing) throw PreconditionError(context + " requires " + describe(missing));
}

void AlgebraView::require_total_meet(const std::string& context) const {
  if (!lat_.meets_total()) throw PreconditionError(context + " requires a total meet");
}

void AlgebraView::require_total_join(const std::string& context) const {
  if (!lat_.joins_total()) throw PreconditionError(context + " requires a total join");
}

}  // namespace hemi
