#include "axioms.hpp"

#include <sstream>
#include <vector>

#include "hemi/finord.hpp"

namespace hemi::detail {

namespace {

using E = const Ev&;
using W = const Elem*;

bool implies(bool p, bool q) { return !p || q; }

// Lattice-level structure.
bool meet_exists(E e, W w) { return e.view().meet(w[0], w[1]).has_value(); }
bool join_exists(E e, W w) { return e.view().join(w[0], w[1]).has_value(); }
bool least_element(E e, W) {
  auto least = e.view().bounds().least();
  const auto& a = e.view().algebra();
  return least && (!a.bottom || *a.bottom == *least);
}
bool greatest_element(E e, W) {
  auto greatest = e.view().bounds().greatest();
  const auto& a = e.view().algebra();
  return greatest && (!a.top || *a.top == *greatest);
}
bool distributive(E e, W w) {
  return e.m(w[0], e.j(w[1], w[2])) == e.j(e.m(w[0], w[1]), e.m(w[0], w[2]));
}

// Hemi-implicative semilattices.
bool w2(E e, W w) { return e.le(e.m(w[0], e.to(w[0], w[1])), w[1]); }
bool w3(E e, W w) { return e.to(w[0], w[0]) == e.one(); }

// Hilbert algebras with infimum.
bool hil1(E e, W w) { return e.to(w[0], e.to(w[1], w[0])) == e.one(); }
bool hil2(E e, W w) {
  Elem a = w[0], b = w[1], d = w[2];
  return e.to(a, e.to(b, d)) == e.to(e.to(a, b), e.to(a, d));
}
bool hil3(E e, W w) {
  return implies(e.to(w[0], w[1]) == e.one() && e.to(w[1], w[0]) == e.one(), w[0] == w[1]);
}
bool hil_meet(E e, W w) { return e.m(w[0], e.to(w[0], w[1])) == e.m(w[0], w[1]); }
bool hil_distrib(E e, W w) {
  Elem a = w[0], b = w[1], d = w[2];
  return e.le(e.to(a, e.m(b, d)), e.m(e.to(a, b), e.to(a, d)));
}

// Implicative semilattices.
bool residuation(E e, W w) {
  Elem a = w[0], b = w[1], d = w[2];
  return e.le(a, e.to(b, d)) == e.le(e.m(a, b), d);
}
bool lis3(E e, W w) {
  Elem a = w[0], b = w[1], d = w[2];
  return e.to(a, e.m(b, d)) == e.m(e.to(a, b), e.to(a, d));
}
bool lis4(E e, W w) { return e.le(w[0], e.to(w[1], e.m(w[0], w[1]))); }

// Semi-Heyting algebras.
bool sh3(E e, W w) {
  Elem a = w[0], b = w[1], d = w[2];
  return e.m(a, e.to(b, d)) == e.m(a, e.to(e.m(a, b), e.m(a, d)));
}

// Heyting algebras.
bool ha_residuum(E e, W w) {
  auto r = relative_pseudocomplement(e.view(), w[0], w[1]);
  return r && *r == e.to(w[0], w[1]);
}

// De Morgan and Kleene algebras.
bool dm_involutive(E e, W w) { return e.neg(e.neg(w[0])) == w[0]; }
bool dm_law(E e, W w) { return e.neg(e.j(w[0], w[1])) == e.m(e.neg(w[0]), e.neg(w[1])); }
bool kleene(E e, W w) {
  return e.le(e.m(w[0], e.neg(w[0])), e.j(w[1], e.neg(w[1])));
}
bool center_fixed(E e, W) {
  const auto& a = e.view().algebra();
  return a.center && e.neg(*a.center) == *a.center;
}

// Kleene posets.
bool kp1(E e, W) { return validate_poset(e.view().algebra().leq).ok(); }
bool kp2(E e, W w) {
  Elem x = w[0], y = w[1];
  return e.neg(e.neg(x)) == x && implies(e.le(x, y), e.le(e.neg(y), e.neg(x)));
}
bool kp4(E e, W w) { return e.view().join(w[0], e.c()).has_value(); }
bool kp5(E e, W w) { return e.m(e.jc(w[0]), e.jc(e.neg(w[0]))) == e.c(); }
bool kp6(E e, W w) {
  Elem x = w[0], y = w[1];
  Elem xc = e.neg(e.jc(e.neg(x))), yc = e.neg(e.jc(e.neg(y)));
  return implies(e.le(xc, yc) && e.le(e.jc(x), e.jc(y)), e.le(x, y));
}

// Nelson lattices.
bool nl_residuation(E e, W w) {
  Elem x = w[0], y = w[1], z = w[2];
  return e.le(e.star(x, y), z) == e.le(x, e.to(y, z));
}
bool nl_commutative(E e, W w) { return e.star(w[0], w[1]) == e.star(w[1], w[0]); }
bool nl_associative(E e, W w) {
  Elem x = w[0], y = w[1], z = w[2];
  return e.star(e.star(x, y), z) == e.star(x, e.star(y, z));
}
bool nl_unit(E e, W w) { return e.star(w[0], e.one()) == w[0]; }
bool nl_involutive(E e, W w) { return e.lneg(e.lneg(w[0])) == w[0]; }
bool nl_nelson(E e, W w) {
  Elem x = w[0], y = w[1];
  Elem ny = e.lneg(y);
  Elem lhs = e.m(e.to(e.star(x, x), y), e.to(e.star(ny, ny), e.lneg(x)));
  return e.le(lhs, e.to(x, y));
}

// Nelson algebras, through the lattice translation. The back translation
// is evaluated pointwise on the translated arrow.
FiniteAlgebra translated(E e) {
  FiniteAlgebra t = e.view().algebra();
  t.arrow = nelson_algebra_to_lattice_ops(e.view()).arrow;
  return t;
}
bool na_translate(E e, W) {
  FiniteAlgebra t = translated(e);
  return check_nelson_lattice(AlgebraView(t)).ok;
}
bool na_neg(E e, W w) {
  FiniteAlgebra t = translated(e);
  AlgebraView tv(t);
  return Ev(tv).lneg(w[0]) == e.neg(w[0]);
}
bool na_weak(E e, W w) {
  FiniteAlgebra t = translated(e);
  AlgebraView tv(t);
  Ev te(tv);
  return te.to(te.star(w[0], w[0]), w[1]) == e.to(w[0], w[1]);
}

// Kleene semilattices (KMS).
bool km1(E e, W) { return check_kleene_poset(e.view()).ok; }
bool km2(E e, W w) { return least_element(e, w) && greatest_element(e, w); }
bool km3(E e, W w) { return implies(e.le(e.c(), w[0]), e.view().meet(w[0], w[1]).has_value()); }
bool km4(E e, W w) {
  Elem x = w[0], y = w[1];
  if (!e.le(e.c(), x)) return true;
  return e.jc(e.m(x, y)) == e.m(x, e.jc(y));
}

// Conditions on the implication of Kalman-type structures.
bool k1(E e, W w) { return e.le(e.c(), e.to(w[0], e.jc(w[1]))); }
bool k2(E e, W w) {
  Elem x = w[0], y = w[1];
  return e.le(e.m(x, e.to(e.jc(x), e.jc(y))), e.jc(y));
}
bool k3(E e, W w) { return e.to(w[0], w[0]) == e.one(); }
bool k4(E e, W w) {
  Elem x = w[0], y = w[1];
  return e.mc(e.to(x, y)) == e.j(e.mc(e.neg(x)), e.mc(y));
}
bool k5(E e, W w) {
  Elem x = w[0], y = w[1];
  Elem lhs = e.jc(e.to(x, e.neg(y)));
  Elem rhs = e.m(e.to(e.jc(x), e.jc(e.neg(y))), e.to(e.jc(y), e.jc(e.neg(x))));
  return lhs == rhs;
}
bool k6(E e, W w) {
  Elem x = w[0], y = w[1];
  return e.le(x, e.to(e.jc(y), e.m(e.jc(x), e.jc(y))));
}
bool k7(E e, W w) {
  Elem x = w[0], y = w[1], z = w[2];
  return e.to(x, e.m(e.jc(y), e.jc(z))) == e.m(e.to(x, e.jc(y)), e.to(x, e.jc(z)));
}
bool khil1(E e, W w) {
  Elem xc = e.jc(w[0]);
  return e.to(xc, e.to(w[1], xc)) == e.one();
}
bool khil2(E e, W w) {
  Elem x = w[0], yc = e.jc(w[1]), zc = e.jc(w[2]);
  return e.to(x, e.to(yc, zc)) == e.to(e.to(x, yc), e.to(x, zc));
}
bool khil3(E e, W w) { return hil3(e, w); }
bool khil4(E e, W w) {
  Elem x = w[0], y = w[1];
  return e.m(x, e.to(e.jc(x), e.jc(y))) == e.m(x, e.jc(y));
}
bool khil5(E e, W w) {
  Elem x = w[0], yc = e.jc(w[1]), zc = e.jc(w[2]);
  return e.le(e.to(x, e.m(yc, zc)), e.m(e.to(x, yc), e.to(x, zc)));
}
bool ksh3(E e, W w) {
  Elem x = w[0], xc = e.jc(w[0]), yc = e.jc(w[1]), zc = e.jc(w[2]);
  return e.m(x, e.to(yc, zc)) == e.m(x, e.to(e.m(xc, yc), e.m(xc, zc)));
}

const std::vector<Axiom>& registry() {
  static const std::vector<Axiom> axioms = {
      {"meet-exists", 2, "a&b exists", meet_exists},
      {"join-exists", 2, "a|b exists", join_exists},
      {"least-element", 0, "a least element exists and is the bottom", least_element},
      {"greatest-element", 0, "a greatest element exists and is the top", greatest_element},
      {"distributive", 3, "a&(b|d) = (a&b)|(a&d)", distributive},
      {"W2", 2, "a&(a->b) <= b", w2},
      {"W3", 1, "a->a = 1", w3},
      {"Hil1", 2, "a->(b->a) = 1", hil1},
      {"Hil2", 3, "a->(b->d) = (a->b)->(a->d)", hil2},
      {"Hil3", 2, "a->b = b->a = 1 implies a = b", hil3},
      {"Hil-meet", 2, "a&(a->b) = a&b", hil_meet},
      {"Hil-distrib", 3, "a->(b&d) <= (a->b)&(a->d)", hil_distrib},
      {"residuation", 3, "a <= b->d iff a&b <= d", residuation},
      {"lis1", 2, "a&(a->b) <= b", w2},
      {"lis2", 1, "a->a = 1", w3},
      {"lis3", 3, "a->(b&d) = (a->b)&(a->d)", lis3},
      {"lis4", 2, "a <= b->(a&b)", lis4},
      {"SH1", 3, "a&(b|d) = (a&b)|(a&d)", distributive},
      {"SH2", 2, "a&(a->b) = a&b", hil_meet},
      {"SH3", 3, "a&(b->d) = a&((a&b)->(a&d))", sh3},
      {"SH4", 1, "a->a = 1", w3},
      {"HA", 2, "a->b is the largest t with t&a <= b", ha_residuum},
      {"DM-involutive", 1, "~~x = x", dm_involutive},
      {"DM-law", 2, "~(x|y) = ~x&~y", dm_law},
      {"Kleene", 2, "x&~x <= y|~y", kleene},
      {"center", 0, "a center c = ~c is given", center_fixed},
      {"KP1", 0, "leq is a partial order", kp1},
      {"KP2", 2, "~ is an order-reversing involution", kp2},
      {"KP3", 0, "c = ~c", center_fixed},
      {"KP4", 1, "x|c exists", kp4},
      {"KP5", 1, "(x|c)&(~x|c) = c", kp5},
      {"KP6", 2, "x&c <= y&c and x|c <= y|c imply x <= y", kp6},
      {"NL-residuation", 3, "x*y <= z iff x <= y->z", nl_residuation},
      {"NL-commutative", 2, "x*y = y*x", nl_commutative},
      {"NL-associative", 3, "(x*y)*z = x*(y*z)", nl_associative},
      {"NL-unit", 1, "x*1 = x", nl_unit},
      {"NL-involutive", 1, "not not x = x", nl_involutive},
      {"NL-nelson", 2, "(x*x->y)&((not y)*(not y)->not x) <= x->y", nl_nelson},
      {"NA-translate", 0, "the translated (*,->) structure is a Nelson lattice", na_translate},
      {"NA-neg", 1, "translating back recovers ~x", na_neg},
      {"NA-weak", 2, "translating back recovers x=>y", na_weak},
      {"KM1", 0, "the reduct is a Kleene poset", km1},
      {"KM2", 0, "0 and 1 exist", km2},
      {"KM3", 2, "x >= c implies x&y exists", km3},
      {"KM4", 2, "x >= c implies (x&y)|c = x&(y|c)", km4},
      {"K1", 2, "c <= x->(y|c)", k1},
      {"K2", 2, "x&((x|c)->(y|c)) <= y|c", k2},
      {"K3", 1, "x->x = 1", k3},
      {"K4", 2, "(x->y)&c = (~x&c)|(y&c)", k4},
      {"K5", 2, "(x->~y)|c = ((x|c)->(~y|c))&((y|c)->(~x|c))", k5},
      {"K6", 2, "x <= (y|c)->((x|c)&(y|c))", k6},
      {"K7", 3, "x->((y|c)&(z|c)) = (x->(y|c))&(x->(z|c))", k7},
      {"KHil1", 2, "(x|c)->(y->(x|c)) = 1", khil1},
      {"KHil2", 3, "x->((y|c)->(z|c)) = (x->(y|c))->(x->(z|c))", khil2},
      {"KHil3", 2, "x->y = y->x = 1 implies x = y", khil3},
      {"KHil4", 2, "x&((x|c)->(y|c)) = x&(y|c)", khil4},
      {"KHil5", 3, "x->((y|c)&(z|c)) <= (x->(y|c))&(x->(z|c))", khil5},
      {"KSH3", 3, "x&((y|c)->(z|c)) = x&(((x|c)&(y|c))->((x|c)&(z|c)))", ksh3},
  };
  return axioms;
}

}  // namespace

const Axiom& axiom(std::string_view name) {
  for (const auto& ax : registry())
    if (ax.name == name) return ax;
  throw InputError("unknown axiom: " + std::string(name));
}

bool holds(const Ev& ev, const Axiom& ax, const Elem* w) {
  try {
    return ax.pred(ev, w);
  } catch (const MissingBound&) {
    return false;
  }
}

std::string format_witness(const AlgebraView& v, const Axiom& ax, const Elem* w) {
  const bool letters_abd = ax.statement.find("a") != std::string_view::npos &&
                           ax.statement.find("y") == std::string_view::npos;
  std::string_view vars = letters_abd ? "abd" : "xyz";
  std::ostringstream out;
  out << ax.name << " (" << ax.statement << ") fails";
  for (int i = 0; i < ax.arity; ++i)
    out << (i == 0 ? " at " : ", ") << vars[i] << "=" << v.algebra().name(w[i]);
  return out.str();
}

CheckReport run_battery(const std::string& label, const AlgebraView& v,
                        std::initializer_list<std::string_view> names) {
  CheckReport report;
  report.label = label;
  const Ev ev(v);
  const auto n = static_cast<Elem>(v.size());
  for (auto name : names) {
    const Axiom& ax = axiom(name);
    Elem w[3] = {0, 0, 0};
    bool failed = false;
    // Odometer over n^arity tuples, last coordinate fastest.
    while (true) {
      if (!holds(ev, ax, w)) {
        failed = true;
        break;
      }
      int k = ax.arity - 1;
      while (k >= 0 && ++w[k] == n) w[k--] = 0;
      if (k < 0) break;
    }
    if (failed) {
      report.ok = false;
      report.violations.push_back({std::string(ax.name),
                                   std::vector<Elem>(w, w + ax.arity),
                                   format_witness(v, ax, w)});
    }
  }
  return report;
}

}  // namespace hemi::detail
