#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hemi/algebra.hpp"
#include "hemi/varieties.hpp"
#include "hemi/view.hpp"

namespace hemi {

struct KalmanPair {
  Elem first;
  Elem second;

  friend auto operator<=>(const KalmanPair&, const KalmanPair&) = default;
};

/// Which structure of the source the construction uses.
enum class KalmanLevel {
  Poset,                   // order and bottom
  Semilattice,             // + meet, top
  HemiImplicative,         // + arrow
  Lattice,                 // meet, join, bounds
  HemiImplicativeLattice,  // + arrow
  Heyting,                 // lattice + residuated arrow; adds => and *
};

std::string_view to_string(KalmanLevel level);
/// Accepts poset, ms, his, bdl, hbdl, ha.
KalmanLevel parse_level(std::string_view name);
Signature level_signature(KalmanLevel level);
/// Reduct to the level's signature with meet/join tables and bounds filled in
/// from the order where they exist.
FiniteAlgebra level_reduct(const FiniteAlgebra& h, KalmanLevel level);

struct KalmanAlgebra {
  FiniteAlgebra source;
  std::vector<KalmanPair> pairs;
  FiniteAlgebra algebra;
  std::optional<OpTable> weak_implication;  // Heyting level only
  std::optional<OpTable> star;              // Heyting level only

  std::optional<Elem> index_of(Elem a, Elem b) const;
};

/// Pairs (a,b) whose meet exists and is the bottom, in lexicographic order.
std::vector<KalmanPair> kalman_pairs(const FiniteAlgebra& p);

/// K(-) over whatever the source carries: the order always, arrow via
/// ((a->d)&(e->b), a&e) when an arrow is present, lattice tables when both
/// meet and join tables are present. No axioms are checked.
KalmanAlgebra kalman_construct(const FiniteAlgebra& source);

/// The source is first reduced to the level's signature, then both the
/// precondition and the expected postcondition are checked. A postcondition
/// failure throws TheoremViolation.
KalmanAlgebra kalman_of(const FiniteAlgebra& source, KalmanLevel level);
KalmanAlgebra kalman_of_poset(const FiniteAlgebra& p);
KalmanAlgebra kalman_of_semilattice(const FiniteAlgebra& h);
KalmanAlgebra kalman_of_his(const FiniteAlgebra& h);
KalmanAlgebra kalman_of_bdl(const FiniteAlgebra& h);
KalmanAlgebra kalman_of_hbdl(const FiniteAlgebra& h);
KalmanAlgebra kalman_of_heyting(const FiniteAlgebra& h);

/// Elements above the center, in increasing index order.
std::vector<Elem> center_elements(const FiniteAlgebra& t);

/// {x : x >= c} with the induced order, a meet table when all meets exist,
/// join and arrow restricted when present, bottom = c and top = top.
FiniteAlgebra center_algebra(const FiniteAlgebra& t);

struct PreservationReport {
  bool total = true;
  bool injective = true;
  bool surjective = true;
  bool order_preserving = true;
  bool order_reflecting = true;
  bool existing_meets = true;  // f(a&b) = f(a)&f(b) whenever a&b exists
  bool existing_joins = true;
  std::optional<bool> meet;  // tables present on both sides
  std::optional<bool> join;
  std::optional<bool> arrow;
  std::optional<bool> involution;
  std::optional<bool> bottom;
  std::optional<bool> top;
  std::optional<bool> center;

  bool operations_preserved() const;
  /// Bijective, order in both directions, every shared feature preserved.
  bool isomorphism() const;
  std::string describe() const;
};

class Morphism {
 public:
  Morphism(FiniteAlgebra dom, FiniteAlgebra cod, std::vector<Elem> map);

  const FiniteAlgebra& dom() const { return dom_; }
  const FiniteAlgebra& cod() const { return cod_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem x) const { return map_[x]; }

  /// Recomputed on every call.
  PreservationReport report() const;

 private:
  FiniteAlgebra dom_;
  FiniteAlgebra cod_;
  std::vector<Elem> map_;
};

Morphism compose(const Morphism& g, const Morphism& f);

/// a -> (a,0) into C(K(H)) at the given level; throws TheoremViolation
/// unless the map is an isomorphism of the level's signature.
Morphism alpha_map(const FiniteAlgebra& h, KalmanLevel level);

/// x -> (x|c, ~x|c) into a freshly built K(C(T)). Throws TheoremViolation
/// if the map is not an injective order embedding preserving the shared
/// features, or if surjectivity disagrees with check_ck.
Morphism beta_map(const FiniteAlgebra& t);

struct CkResult {
  bool holds = true;
  std::optional<std::pair<Elem, Elem>> witness;
};

/// For all x,y >= c with x&y = c there is z with z|c = x and ~z|c = y.
CkResult check_ck(const AlgebraView& t);

enum class KCondition { K1, K2, K3, K4, K5, K6, K7 };

CheckReport check_k_conditions(const AlgebraView& t, std::span<const KCondition> which);
/// KM1-KM4.
CheckReport check_kms(const AlgebraView& t);
/// KMS together with K1-K5.
CheckReport check_khis0(const AlgebraView& t);
/// KHil1-KHil5; requires K1-K5 to pass.
CheckReport check_khil_conditions(const AlgebraView& t);
/// KSH3 and KHil4; requires a centered Kleene algebra passing K1-K5.
/// When both pass, K6 and CK are asserted.
CheckReport check_ksh_condition(const AlgebraView& t);

/// The four-case arrow defined on any centered Kleene algebra.
OpTable khil_default_arrow(const AlgebraView& t);

/// (a,b) -> (f a, f b). Throws InputError if a pair leaves the target set.
Morphism kalman_of_morphism(const Morphism& f, const KalmanAlgebra& kdom,
                            const KalmanAlgebra& kcod);

}  // namespace hemi
