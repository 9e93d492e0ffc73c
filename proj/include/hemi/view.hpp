#pragma once

#include <string>

#include "hemi/algebra.hpp"
#include "hemi/finord.hpp"

namespace hemi {

/// Read-only evaluation context over an algebra: precomputed partial bounds and
/// feature accessors that throw PreconditionError when a feature is missing.
/// Borrows the algebra; it must outlive the view.
class AlgebraView {
 public:
  AlgebraView(const FiniteAlgebra& a);  // NOLINT: implicit on purpose
  AlgebraView(FiniteAlgebra&&) = delete;

  const FiniteAlgebra& algebra() const { return *a_; }
  std::size_t size() const { return a_->size(); }
  bool le(Elem x, Elem y) const { return a_->le(x, y); }
  const PartialLattice& bounds() const { return lat_; }

  MeetResult meet(Elem x, Elem y) const { return lat_.meet(x, y); }
  MeetResult join(Elem x, Elem y) const { return lat_.join(x, y); }

  /// Meet/join that must exist; throws PreconditionError naming `what`.
  Elem meet_or_throw(Elem x, Elem y, const char* what) const;
  Elem join_or_throw(Elem x, Elem y, const char* what) const;

  bool has_arrow() const { return a_->arrow.has_value(); }
  bool has_involution() const { return a_->involution.has_value(); }

  Elem arrow(Elem x, Elem y) const { return (*a_->arrow)(x, y); }
  Elem neg(Elem x) const { return (*a_->involution)[x]; }
  Elem bottom() const { return *a_->bottom; }
  Elem top() const { return *a_->top; }
  Elem center() const { return *a_->center; }

  /// Throws PreconditionError listing the missing features.
  void require(Signature features, const std::string& context) const;
  void require_total_meet(const std::string& context) const;
  void require_total_join(const std::string& context) const;

 private:
  const FiniteAlgebra* a_;
  PartialLattice lat_;
};

}  // namespace hemi
