#include "hemi/varieties.hpp"

#include <sstream>

#include "axioms.hpp"
#include "hemi/document.hpp"

namespace hemi {

using detail::run_battery;

namespace {

struct LabelName {
  VarietyLabel label;
  std::string_view name;
};

constexpr LabelName kLabelNames[] = {
    {VarietyLabel::MS, "MS"},
    {VarietyLabel::BDL, "BDL"},
    {VarietyLabel::hIS0, "hIS0"},
    {VarietyLabel::Hil0, "Hil0"},
    {VarietyLabel::IS0, "IS0"},
    {VarietyLabel::hBDL, "hBDL"},
    {VarietyLabel::SH, "SH"},
    {VarietyLabel::HA, "HA"},
    {VarietyLabel::DeMorgan, "DeMorgan"},
    {VarietyLabel::Kleene, "Kleene"},
    {VarietyLabel::CenteredKleene, "CenteredKleene"},
    {VarietyLabel::KleenePoset, "KleenePoset"},
    {VarietyLabel::NelsonLattice, "NelsonLattice"},
    {VarietyLabel::NelsonAlgebra, "NelsonAlgebra"},
};

std::string label_str(VarietyLabel l) { return std::string(to_string(l)); }

void require_semilattice_arrow(const AlgebraView& h, const std::string& what) {
  h.require(kArrow | kTop, what);
  h.require_total_meet(what);
}

void require_lattice(const AlgebraView& h, const std::string& what, Signature extra) {
  h.require(kBottom | kTop | extra, what);
  h.require_total_meet(what);
  h.require_total_join(what);
}

}  // namespace

std::string_view to_string(VarietyLabel label) {
  for (const auto& ln : kLabelNames)
    if (ln.label == label) return ln.name;
  return "?";
}

VarietyLabel parse_label(std::string_view name) {
  for (const auto& ln : kLabelNames)
    if (ln.name == name) return ln.label;
  throw InputError("unknown variety label: " + std::string(name));
}

const Violation* CheckReport::find(std::string_view axiom) const {
  for (const auto& v : violations)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

void CheckReport::merge(const CheckReport& other) {
  ok = ok && other.ok;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << label << ": " << (ok ? "ok" : "fails");
  for (const auto& v : violations) out << "\n  " << v.detail;
  return out.str();
}

CheckReport check_bounded_semilattice(const AlgebraView& h) {
  return run_battery(label_str(VarietyLabel::MS), h,
                     {"meet-exists", "least-element", "greatest-element"});
}

CheckReport check_distributive_lattice(const AlgebraView& h) {
  auto r = run_battery(label_str(VarietyLabel::BDL), h,
                       {"meet-exists", "join-exists", "least-element", "greatest-element"});
  if (r.ok) r.merge(run_battery(r.label, h, {"distributive"}));
  return r;
}

CheckReport check_hemi_implicative_semilattice(const AlgebraView& h) {
  require_semilattice_arrow(h, "hIS0 check");
  return run_battery(label_str(VarietyLabel::hIS0), h, {"least-element", "W2", "W3"});
}

CheckReport check_hilbert_with_infimum(const AlgebraView& h) {
  require_semilattice_arrow(h, "Hil0 check");
  return run_battery(label_str(VarietyLabel::Hil0), h,
                     {"least-element", "Hil1", "Hil2", "Hil3", "Hil-meet", "Hil-distrib"});
}

CheckReport check_implicative_semilattice(const AlgebraView& h) {
  require_semilattice_arrow(h, "IS0 check");
  auto r = run_battery(label_str(VarietyLabel::IS0), h, {"least-element", "residuation"});
  auto clauses = run_battery(r.label, h, {"lis1", "lis2", "lis3", "lis4"});
  const bool residuated = r.find("residuation") == nullptr;
  if (residuated != clauses.ok)
    throw TheoremViolation("residuation and the four-clause characterization disagree",
                           serialize_algebra(h.algebra()));
  r.merge(clauses);
  return r;
}

CheckReport check_hemi_implicative_lattice(const AlgebraView& h) {
  require_lattice(h, "hBDL check", kArrow);
  return run_battery(label_str(VarietyLabel::hBDL), h, {"distributive", "W2", "W3"});
}

CheckReport check_semi_heyting(const AlgebraView& h) {
  require_lattice(h, "SH check", kArrow);
  return run_battery(label_str(VarietyLabel::SH), h, {"SH1", "SH2", "SH3", "SH4"});
}

CheckReport check_heyting(const AlgebraView& h) {
  require_lattice(h, "HA check", kArrow);
  return run_battery(label_str(VarietyLabel::HA), h, {"HA"});
}

CheckReport check_de_morgan(const AlgebraView& t) {
  require_lattice(t, "De Morgan check", kInvolution);
  return run_battery(label_str(VarietyLabel::DeMorgan), t,
                     {"distributive", "DM-involutive", "DM-law"});
}

CheckReport check_kleene(const AlgebraView& t) {
  require_lattice(t, "Kleene check", kInvolution);
  return run_battery(label_str(VarietyLabel::Kleene), t,
                     {"distributive", "DM-involutive", "DM-law", "Kleene"});
}

CheckReport check_centered_kleene(const AlgebraView& t) {
  require_lattice(t, "centered Kleene check", kInvolution);
  return run_battery(label_str(VarietyLabel::CenteredKleene), t,
                     {"distributive", "DM-involutive", "DM-law", "Kleene", "center"});
}

CheckReport check_kleene_poset(const AlgebraView& t) {
  t.require(kInvolution | kCenter, "Kleene poset check");
  return run_battery(label_str(VarietyLabel::KleenePoset), t,
                     {"KP1", "KP2", "KP3", "KP4", "KP5", "KP6"});
}

CheckReport check_nelson_lattice(const AlgebraView& t) {
  require_lattice(t, "Nelson lattice check", kArrow);
  return run_battery(label_str(VarietyLabel::NelsonLattice), t,
                     {"NL-residuation", "NL-commutative", "NL-associative", "NL-unit",
                      "NL-involutive", "NL-nelson"});
}

CheckReport check_nelson_algebra(const AlgebraView& t) {
  require_lattice(t, "Nelson algebra check", kArrow | kInvolution);
  auto r = run_battery(label_str(VarietyLabel::NelsonAlgebra), t, {"NA-translate"});
  if (r.ok) r.merge(run_battery(r.label, t, {"NA-neg", "NA-weak"}));
  return r;
}

CheckReport check(VarietyLabel label, const AlgebraView& a) {
  switch (label) {
    case VarietyLabel::MS: return check_bounded_semilattice(a);
    case VarietyLabel::BDL: return check_distributive_lattice(a);
    case VarietyLabel::hIS0: return check_hemi_implicative_semilattice(a);
    case VarietyLabel::Hil0: return check_hilbert_with_infimum(a);
    case VarietyLabel::IS0: return check_implicative_semilattice(a);
    case VarietyLabel::hBDL: return check_hemi_implicative_lattice(a);
    case VarietyLabel::SH: return check_semi_heyting(a);
    case VarietyLabel::HA: return check_heyting(a);
    case VarietyLabel::DeMorgan: return check_de_morgan(a);
    case VarietyLabel::Kleene: return check_kleene(a);
    case VarietyLabel::CenteredKleene: return check_centered_kleene(a);
    case VarietyLabel::KleenePoset: return check_kleene_poset(a);
    case VarietyLabel::NelsonLattice: return check_nelson_lattice(a);
    case VarietyLabel::NelsonAlgebra: return check_nelson_algebra(a);
  }
  throw InputError("unknown variety label");
}

std::vector<VarietyLabel> classify(const FiniteAlgebra& a) {
  AlgebraView v(a);
  std::vector<VarietyLabel> out;
  for (auto label : kAllLabels) {
    try {
      if (check(label, v).ok) out.push_back(label);
    } catch (const PreconditionError&) {
    }
  }
  return out;
}

bool witness_violates(const AlgebraView& a, const Violation& v) {
  const auto& ax = detail::axiom(v.axiom);
  if (v.witness.size() != static_cast<std::size_t>(ax.arity)) return false;
  for (Elem x : v.witness)
    if (x >= a.size()) return false;
  return !detail::holds(detail::Ev(a), ax, v.witness.data());
}

std::optional<Elem> relative_pseudocomplement(const AlgebraView& h, Elem a, Elem b) {
  const auto n = static_cast<Elem>(h.size());
  auto admissible = [&](Elem x) {
    auto m = h.meet(x, a);
    return m && h.le(*m, b);
  };
  for (Elem y = 0; y < n; ++y) {
    if (!admissible(y)) continue;
    bool largest = true;
    for (Elem x = 0; x < n && largest; ++x)
      if (admissible(x) && !h.le(x, y)) largest = false;
    if (largest) return y;
  }
  return std::nullopt;
}

OpTable nelson_star(const AlgebraView& t) {
  t.require(kArrow | kBottom, "Nelson product");
  detail::Ev ev(t);
  const auto n = static_cast<Elem>(t.size());
  OpTable star(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) star(x, y) = ev.star(x, y);
  return star;
}

NelsonAlgebraOps nelson_lattice_to_algebra_ops(const AlgebraView& t) {
  if (!check_nelson_lattice(t).ok)
    throw PreconditionError("translation to a Nelson algebra needs a Nelson lattice");
  detail::Ev ev(t);
  const auto n = static_cast<Elem>(t.size());
  NelsonAlgebraOps ops{OpTable(n), std::vector<Elem>(n)};
  for (Elem x = 0; x < n; ++x) {
    ops.negation[x] = ev.lneg(x);
    for (Elem y = 0; y < n; ++y) ops.weak_implication(x, y) = ev.to(ev.star(x, x), y);
  }
  return ops;
}

NelsonLatticeOps nelson_algebra_to_lattice_ops(const AlgebraView& t) {
  t.require(kArrow | kInvolution, "translation to a Nelson lattice");
  t.require_total_meet("translation to a Nelson lattice");
  t.require_total_join("translation to a Nelson lattice");
  detail::Ev ev(t);
  const auto n = static_cast<Elem>(t.size());
  NelsonLatticeOps ops{OpTable(n), OpTable(n)};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      ops.star(x, y) = ev.j(ev.neg(ev.to(x, ev.neg(y))), ev.neg(ev.to(y, ev.neg(x))));
      ops.arrow(x, y) = ev.m(ev.to(x, y), ev.to(ev.neg(y), ev.neg(x)));
    }
  return ops;
}

}  // namespace hemi
