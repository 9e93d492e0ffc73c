#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hemi/algebra.hpp"
#include "hemi/view.hpp"

namespace hemi {

enum class VarietyLabel {
  MS,
  BDL,
  hIS0,
  Hil0,
  IS0,
  hBDL,
  SH,
  HA,
  DeMorgan,
  Kleene,
  CenteredKleene,
  KleenePoset,
  NelsonLattice,
  NelsonAlgebra,
};

inline constexpr std::array<VarietyLabel, 14> kAllLabels = {
    VarietyLabel::MS,       VarietyLabel::BDL,         VarietyLabel::hIS0,
    VarietyLabel::Hil0,     VarietyLabel::IS0,         VarietyLabel::hBDL,
    VarietyLabel::SH,       VarietyLabel::HA,          VarietyLabel::DeMorgan,
    VarietyLabel::Kleene,   VarietyLabel::CenteredKleene, VarietyLabel::KleenePoset,
    VarietyLabel::NelsonLattice, VarietyLabel::NelsonAlgebra};

std::string_view to_string(VarietyLabel label);
/// Throws InputError on an unknown name.
VarietyLabel parse_label(std::string_view name);

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
  std::string detail;
};

/// Result of running an axiom battery. `label` names the battery, which is
/// either a variety or one of the Kalman condition sets ("KMS", "KhIS0", ...).
struct CheckReport {
  std::string label;
  bool ok = true;
  std::vector<Violation> violations;

  const Violation* find(std::string_view axiom) const;
  void merge(const CheckReport& other);
  std::string summary() const;
};

CheckReport check_bounded_semilattice(const AlgebraView& h);
CheckReport check_distributive_lattice(const AlgebraView& h);
CheckReport check_hemi_implicative_semilattice(const AlgebraView& h);
CheckReport check_hilbert_with_infimum(const AlgebraView& h);
CheckReport check_implicative_semilattice(const AlgebraView& h);
CheckReport check_hemi_implicative_lattice(const AlgebraView& h);
CheckReport check_semi_heyting(const AlgebraView& h);
CheckReport check_heyting(const AlgebraView& h);
CheckReport check_de_morgan(const AlgebraView& t);
CheckReport check_kleene(const AlgebraView& t);
CheckReport check_centered_kleene(const AlgebraView& t);
CheckReport check_kleene_poset(const AlgebraView& t);
CheckReport check_nelson_lattice(const AlgebraView& t);
/// Reads `arrow` as the weak implication and `neg` as the Nelson negation;
/// membership is decided through the lattice translation and back.
CheckReport check_nelson_algebra(const AlgebraView& t);

CheckReport check(VarietyLabel label, const AlgebraView& a);

/// Every label whose checker passes; missing features count as failure.
std::vector<VarietyLabel> classify(const FiniteAlgebra& a);

/// True iff the witness still violates the named axiom when evaluated again.
bool witness_violates(const AlgebraView& a, const Violation& v);

struct NelsonAlgebraOps {
  OpTable weak_implication;
  std::vector<Elem> negation;
};

struct NelsonLatticeOps {
  OpTable star;
  OpTable arrow;
};

/// x => y is (x*x) -> y and ~x is x -> 0.
NelsonAlgebraOps nelson_lattice_to_algebra_ops(const AlgebraView& t);
/// Uses `arrow` as => and `neg` as ~.
NelsonLatticeOps nelson_algebra_to_lattice_ops(const AlgebraView& t);

/// x * y = not(x -> not y) with not x = x -> 0.
OpTable nelson_star(const AlgebraView& t);

/// Largest x with x & a <= b, when it exists.
std::optional<Elem> relative_pseudocomplement(const AlgebraView& h, Elem a, Elem b);

}  // namespace hemi
