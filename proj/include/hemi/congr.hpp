#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hemi/algebra.hpp"
#include "hemi/view.hpp"

namespace hemi {

/// Equivalence relation stored as a block assignment; the block id of every
/// element is the smallest member of its block.
class Congruence {
 public:
  Congruence() = default;
  /// Any labelling of blocks is accepted and canonicalized.
  explicit Congruence(std::span<const Elem> labels);

  static Congruence identity(std::size_t n);
  static Congruence total(std::size_t n);
  /// Throws InputError unless `rel` is an equivalence relation.
  static Congruence from_relation(const Order& rel);

  std::size_t size() const { return blocks_.size(); }
  Elem block(Elem x) const { return blocks_[x]; }
  bool related(Elem x, Elem y) const { return blocks_[x] == blocks_[y]; }
  const std::vector<Elem>& blocks() const { return blocks_; }
  std::size_t block_count() const;
  /// Block representatives in increasing order.
  std::vector<Elem> representatives() const;
  /// True iff this relation is contained in `other`.
  bool refines(const Congruence& other) const;
  std::string describe() const;

  friend auto operator<=>(const Congruence&, const Congruence&) = default;

 private:
  std::vector<Elem> blocks_;
};

Congruence join(const Congruence& a, const Congruence& b);
Congruence meet(const Congruence& a, const Congruence& b);

using Operation = std::variant<OpTable, std::vector<Elem>>;

/// Every table the algebra carries: meet, join, arrow, neg.
std::vector<Operation> operations_of(const FiniteAlgebra& a);

bool is_compatible(const Congruence& theta, const Operation& op);

/// Least congruence containing the pairs.
Congruence generated_congruence(std::size_t n, std::span<const Operation> ops,
                                std::span<const std::pair<Elem, Elem>> pairs);

/// All congruences, sorted by block vector.
std::vector<Congruence> enumerate_congruences(std::size_t n, std::span<const Operation> ops);
std::vector<Congruence> enumerate_congruences(const FiniteAlgebra& a);

struct WellBehavedReport {
  bool ok = true;
  std::string clause;
  std::vector<Elem> witness;
};

/// C1: compatible with -> and ~. C2: x,y related iff x|c, y|c and ~x|c, ~y|c are.
/// C3: meets of related pairs above c are related; `c3_everywhere` quantifies
/// over the whole carrier instead (diagnostic).
WellBehavedReport is_well_behaved(const AlgebraView& t, const Congruence& theta,
                                  bool c3_everywhere = false);

std::vector<Congruence> enumerate_wb_congruences(const AlgebraView& t);

/// Restriction to C(T), indexed like center_algebra(T).
Congruence gamma_restrict(const AlgebraView& t, const Congruence& theta);
Congruence sigma_expand(const AlgebraView& t, const Congruence& tau);

/// Blocks ordered by x/θ << y/θ; neg and arrow induced blockwise. Throws
/// TheoremViolation if the result is not a poset, fails the KhIS0 battery,
/// or the projection is not monotone.
FiniteAlgebra quotient_wb(const AlgebraView& t, const Congruence& theta);
/// Element x goes to the index of its block in quotient_wb.
std::vector<Elem> quotient_projection(const Congruence& theta);

class Filter {
 public:
  Filter() = default;
  explicit Filter(std::vector<bool> members) : members_(std::move(members)) {}
  static Filter from_elements(std::size_t n, std::span<const Elem> elems);

  std::size_t size() const { return members_.size(); }
  bool contains(Elem x) const { return members_[x]; }
  std::vector<Elem> elements() const;
  std::string describe(const FiniteAlgebra& a) const;

  friend auto operator<=>(const Filter&, const Filter&) = default;

 private:
  std::vector<bool> members_;
};

bool is_filter(const AlgebraView& h, const Filter& f);
/// Nonempty up-closed meet-closed subsets, i.e. the principal up-sets.
std::vector<Filter> enumerate_filters(const AlgebraView& h);

/// a<->b = (a->b)&(b->a).
Elem biconditional(const AlgebraView& h, Elem a, Elem b);
/// (a->b) <-> ((a&f)->(b&f)).
Elem t_term(const AlgebraView& h, Elem a, Elem b, Elem f);

struct CongruentFilterReport {
  bool ok = true;
  std::optional<std::array<Elem, 3>> witness;  // (a, b, f)
};

CongruentFilterReport is_congruent_filter(const AlgebraView& h, const Filter& f);
/// a ~ b iff a&f = b&f for some f in F; checked against a<->b in F and
/// against compatibility with every table of h.
Congruence theta_of_filter(const AlgebraView& h, const Filter& f);
Filter congruent_filter_generated(const AlgebraView& h, std::span<const Elem> x);
/// The block of the top element.
Filter one_class(const AlgebraView& h, const Congruence& theta);

/// Intersection of the well-behaved congruences containing every pair.
Congruence principal_wb_congruence(const AlgebraView& t,
                                   std::span<const std::pair<Elem, Elem>> pairs);
Congruence principal_wb_congruence(std::span<const Congruence> wb,
                                   std::span<const std::pair<Elem, Elem>> pairs);

/// ((x|c)<->(y|c)) & ((~x|c)<->(~y|c)).
Elem q_term(const AlgebraView& t, Elem x, Elem y);

}  // namespace hemi
