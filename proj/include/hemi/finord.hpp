#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hemi/algebra.hpp"

namespace hemi {

/// Either the bound exists (holds its index) or it does not.
using MeetResult = std::optional<Elem>;

struct PosetViolation {
  enum class Kind { Reflexivity, Antisymmetry, Transitivity };
  Kind kind;
  std::vector<Elem> witness;

  std::string describe() const;
};

struct PosetReport {
  std::vector<PosetViolation> violations;
  bool ok() const { return violations.empty(); }
};

PosetReport validate_poset(const Order& leq);
/// Ragged input from a parser; throws InputError unless square.
PosetReport validate_poset(const std::vector<std::vector<int>>& rows);

MeetResult glb(const FiniteAlgebra& p, Elem a, Elem b);
MeetResult lub(const FiniteAlgebra& p, Elem a, Elem b);
MeetResult glb(const Order& leq, Elem a, Elem b);
MeetResult lub(const Order& leq, Elem a, Elem b);

/// All pairwise bounds of an order, computed once.
class PartialLattice {
 public:
  PartialLattice() = default;
  explicit PartialLattice(const Order& leq);

  std::size_t size() const { return n_; }
  MeetResult meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  MeetResult join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  bool meets_total() const { return meets_total_; }
  bool joins_total() const { return joins_total_; }
  std::optional<Elem> least() const { return least_; }
  std::optional<Elem> greatest() const { return greatest_; }

  /// Throws PreconditionError unless every meet exists.
  OpTable meet_table() const;
  OpTable join_table() const;

 private:
  std::size_t n_ = 0;
  std::vector<MeetResult> meet_;
  std::vector<MeetResult> join_;
  bool meets_total_ = true;
  bool joins_total_ = true;
  std::optional<Elem> least_;
  std::optional<Elem> greatest_;
};

/// Order on all pairs (a,b), indexed a*n+b: (a,b) <= (d,e) iff a<=d and e<=b.
Order dual_product_order(const Order& leq);
Order dual_product_order(const FiniteAlgebra& p);

Order reverse_order(const Order& leq);

struct DistributivityReport {
  bool distributive = true;
  std::optional<std::array<Elem, 3>> witness;
};

DistributivityReport is_distributive_lattice(const FiniteAlgebra& p);

/// Checks every invariant of FiniteAlgebra; throws ConsistencyError naming
/// the first offending cell.
void validate_algebra(const FiniteAlgebra& a);

/// Lattice built from an order alone: adds meet/join tables and bounds.
/// Throws PreconditionError if the order is not a bounded lattice.
FiniteAlgebra lattice_from_order(const Order& leq);

}  // namespace hemi
