#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "hemi/constructions.hpp"
#include "hemi/finord.hpp"
#include "hemi/kalman.hpp"
#include "hemi/search.hpp"
#include "hemi/varieties.hpp"
#include "oracle.hpp"

using namespace hemi;

namespace {

bool passes(VarietyLabel l, const FiniteAlgebra& a) {
  try {
    return check(l, AlgebraView(a)).ok;
  } catch (const PreconditionError&) {
    return false;
  }
}

// Random arrow with a->a = 1 and a&(a->b) <= b, drawn cell by cell.
FiniteAlgebra random_hemi(const FiniteAlgebra& lattice, std::mt19937& rng) {
  FiniteAlgebra a = lattice;
  const auto n = static_cast<Elem>(a.size());
  OpTable t(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (x == y) {
        t(x, y) = *a.top;
        continue;
      }
      std::vector<Elem> ok;
      for (Elem z = 0; z < n; ++z)
        if (a.le((*a.meet)(x, z), y)) ok.push_back(z);
      t(x, y) = ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)];
    }
  a.arrow = t;
  return a;
}

// Every map T -> U preserving order, meet, join, ~ and c.
std::vector<std::vector<Elem>> ck_morphisms(const FiniteAlgebra& t, const FiniteAlgebra& u) {
  std::vector<std::vector<Elem>> out;
  const auto n = static_cast<Elem>(t.size());
  std::vector<Elem> f(n);
  std::function<void(Elem)> rec = [&](Elem i) {
    if (i == n) {
      for (Elem x = 0; x < n; ++x) {
        if (f[(*t.involution)[x]] != (*u.involution)[f[x]]) return;
        for (Elem y = 0; y < n; ++y)
          if (f[(*t.meet)(x, y)] != (*u.meet)(f[x], f[y]) || f[(*t.join)(x, y)] != (*u.join)(f[x], f[y])) return;
      }
      if (f[*t.center] != *u.center) return;
      out.push_back(f);
      return;
    }
    for (Elem v = 0; v < u.size(); ++v) {
      f[i] = v;
      bool ok = true;
      for (Elem x = 0; x < i && ok; ++x)
        if (t.le(x, i) && !u.le(f[x], v)) ok = false;
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("inclusion tower over enumerated algebras") {
  std::size_t n_is = 0, n_ha = 0;
  for (const auto& a : population(VarietyLabel::hIS0, 4, true).collect()) {
    const bool is = passes(VarietyLabel::IS0, a), hil = passes(VarietyLabel::Hil0, a),
               his = passes(VarietyLabel::hIS0, a);
    CHECK(his);
    if (is) CHECK(hil);
    if (hil) CHECK(his);
    n_is += is;
    const bool ha = passes(VarietyLabel::HA, a), sh = passes(VarietyLabel::SH, a),
               hbdl = passes(VarietyLabel::hBDL, a);
    if (ha) CHECK(sh);
    if (sh) CHECK(hbdl);
    n_ha += ha;
  }
  CHECK(n_is > 0);
  CHECK(n_ha > 0);
}

TEST_CASE("semi-Heyting algebras satisfy a <= b->(a&b)") {
  std::size_t seen = 0;
  for (const auto& a : population(VarietyLabel::SH, 5, true)) {
    ++seen;
    const auto n = static_cast<Elem>(a.size());
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) CHECK(a.le(x, (*a.arrow)(y, (*a.meet)(x, y))));
  }
  CHECK(seen == 10921);
}

TEST_CASE("W2 in equational and conditional form agree") {
  std::mt19937 rng(11);
  for (std::size_t size = 2; size <= 5; ++size)
    for (const auto& l : enumerate_lattices(size).collect()) {
      for (int trial = 0; trial < 20; ++trial) {
        FiniteAlgebra a = l;
        OpTable t(size);
        std::uniform_int_distribution<Elem> any(0, static_cast<Elem>(size - 1));
        for (Elem x = 0; x < size; ++x)
          for (Elem y = 0; y < size; ++y) t(x, y) = any(rng);
        a.arrow = t;
        bool equational = true, conditional = true;
        for (Elem x = 0; x < size; ++x)
          for (Elem y = 0; y < size; ++y) {
            equational = equational && a.le((*a.meet)(x, t(x, y)), y);
            for (Elem z = 0; z < size; ++z)
              if (a.le(z, x) && a.le(z, t(x, y)) && !a.le(z, y)) conditional = false;
          }
        CHECK(equational == conditional);
      }
    }
}

TEST_CASE("Nelson translations invert on every small Nelson lattice") {
  // brute force: every arrow table over every Kleene algebra of size <= 3
  std::size_t found = 0;
  for (std::size_t size = 1; size <= 3; ++size)
    for (const auto& k : population(VarietyLabel::Kleene, size, false)) {
      if (k.size() != size) continue;
      const auto n = static_cast<Elem>(size);
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < size * size; ++i) total *= size;
      for (std::uint64_t code = 0; code < total; ++code) {
        OpTable t(n);
        auto c = code;
        for (std::size_t i = 0; i < size * size; ++i, c /= size) t(i / n, i % n) = static_cast<Elem>(c % size);
        FiniteAlgebra a = k;
        a.arrow = t;
        a.center.reset();
        AlgebraView v(a);
        if (!check_nelson_lattice(v).ok) continue;
        ++found;
        auto na = nelson_lattice_to_algebra_ops(v);
        FiniteAlgebra b = a;
        b.arrow = na.weak_implication;
        b.involution = na.negation;
        AlgebraView bv(b);
        CHECK(check_nelson_algebra(bv).ok);
        auto back = nelson_algebra_to_lattice_ops(bv);
        CHECK(back.arrow == t);
        CHECK(back.star == nelson_star(v));
      }
    }
  CHECK(found >= 2);  // K of the one- and two-element Heyting algebras
  // K(H) for Heyting H up to size 4
  for (const auto& h : population(VarietyLabel::HA, 4, true)) {
    const auto k = kalman_of_heyting(h);
    AlgebraView kv(k.algebra);
    REQUIRE(check_nelson_lattice(kv).ok);
    auto na = nelson_lattice_to_algebra_ops(kv);
    FiniteAlgebra b = k.algebra;
    b.arrow = na.weak_implication;
    b.involution = na.negation;
    AlgebraView bv(b);
    CHECK(check_nelson_algebra(bv).ok);
    auto back = nelson_algebra_to_lattice_ops(bv);
    CHECK(back.arrow == *k.algebra.arrow);
  }
}

TEST_CASE("alpha is an isomorphism across the source classes") {
  auto alpha_ok = find_predicate("alpha-iso");
  auto beta_ok = find_predicate("beta-iso");
  const std::pair<VarietyLabel, std::size_t> plan[] = {
      {VarietyLabel::MS, 6}, {VarietyLabel::BDL, 6}, {VarietyLabel::IS0, 6}, {VarietyLabel::HA, 6},
      {VarietyLabel::Hil0, 6}, {VarietyLabel::SH, 5}, {VarietyLabel::hIS0, 3}, {VarietyLabel::hBDL, 3}};
  for (auto [label, size] : plan) {
    INFO(to_string(label), " up to ", size);
    std::size_t seen = 0;
    for (const auto& h : population(label, size, true)) {
      ++seen;
      auto a = alpha_ok(h, label);
      CHECK_MESSAGE(!a.has_value(), a.value_or(""));
      auto b = beta_ok(h, label);
      CHECK_MESSAGE(!b.has_value(), b.value_or(""));
    }
    CHECK(seen > 0);
  }
}

TEST_CASE("alpha on randomly drawn hemi-implicative arrows of size 5 and 6") {
  std::mt19937 rng(2024);
  auto alpha_ok = find_predicate("alpha-iso");
  for (std::size_t size : {5, 6}) {
    const auto bases = enumerate_lattices(size).collect();
    for (int trial = 0; trial < 200; ++trial) {
      const auto& base = bases[trial % bases.size()];
      const auto h = random_hemi(base, rng);
      REQUIRE(passes(VarietyLabel::hIS0, h));
      auto r = alpha_ok(h, VarietyLabel::hIS0);
      CHECK_MESSAGE(!r.has_value(), r.value_or(""));
      if (is_distributive_lattice(base).distributive) {
        auto s = alpha_ok(h, VarietyLabel::hBDL);
        CHECK_MESSAGE(!s.has_value(), s.value_or(""));
      }
    }
  }
}

TEST_CASE("K(C(T)) is T exactly when CK holds") {
  std::size_t with = 0, without = 0;
  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto& t : enumerate_centered_kleene(n)) {
      const bool ck = check_ck(AlgebraView(t)).holds;
      const auto c = center_algebra(t);
      const auto k = kalman_of_bdl(reduct(c, kMeet | kJoin | kBottom | kTop));
      const Signature sig = kMeet | kJoin | kBottom | kTop | kInvolution | kCenter;
      const bool iso = k.algebra.size() == t.size() && are_isomorphic(reduct(k.algebra, sig), reduct(t, sig)).isomorphic;
      CHECK(iso == ck);
      (ck ? with : without)++;
    }
  CHECK(with > 0);
  CHECK(without > 0);
}

TEST_CASE("centered Kleene morphisms are determined on the center") {
  std::vector<FiniteAlgebra> objs;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_centered_kleene(n)) objs.push_back(t);
  std::size_t maps = 0;
  for (const auto& t : objs)
    for (const auto& u : objs) {
      const auto ms = ck_morphisms(t, u);
      maps += ms.size();
      const auto cen = center_elements(t);
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
          const bool agree = std::all_of(cen.begin(), cen.end(), [&](Elem x) { return ms[i][x] == ms[j][x]; });
          CHECK_FALSE(agree);
        }
    }
  CHECK(maps > objs.size());
}

TEST_CASE("the center is the unique fixed point and bounds x&c") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& t : population(VarietyLabel::Kleene, n, true)) {
      if (t.size() != n) continue;
      std::size_t fixed = 0;
      for (Elem x = 0; x < n; ++x) fixed += (*t.involution)[x] == x;
      CHECK(fixed <= 1);
      if (!t.center) continue;
      const Elem c = *t.center;
      for (Elem x = 0; x < n; ++x) {
        const Elem nx = (*t.involution)[x];
        CHECK((*t.meet)(x, c) == (*t.involution)[(*t.join)(nx, c)]);
      }
    }
}

TEST_CASE("every reported witness is a genuine violation") {
  std::size_t violations = 0;
  auto sweep = [&](const FiniteAlgebra& a) {
    AlgebraView v(a);
    for (auto l : kAllLabels) {
      CheckReport r;
      try {
        r = check(l, v);
      } catch (const PreconditionError&) {
        continue;
      }
      CHECK(r.ok == r.violations.empty());
      for (const auto& viol : r.violations) {
        ++violations;
        INFO(to_string(l), " ", viol.axiom);
        CHECK(witness_violates(v, viol));
      }
    }
  };
  std::mt19937 rng(5);
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& l : enumerate_lattices(n).collect())
      for (int i = 0; i < 5; ++i) {
        auto a = random_hemi(l, rng);
        sweep(a);
      }
  for (const auto& t : population(VarietyLabel::DeMorgan, 6, true)) sweep(t);
  CHECK(violations > 0);
}

TEST_CASE("order duality and the product order") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const Order leq = oracle::random_poset(rng, n, 0.4);
    const Order rev = reverse_order(leq);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) CHECK(glb(leq, a, b) == lub(rev, a, b));
    const Order d = dual_product_order(leq);
    for (Elem j = 0; j < n; ++j)
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) CHECK(d(a * n + j, b * n + j) == leq(a, b));
  }
  for (const auto& l : enumerate_lattices(6).collect())
    for (Elem a = 0; a < 6; ++a)
      for (Elem b = 0; b < 6; ++b) CHECK(glb(l, a, b) == (*l.meet)(a, b));
}

TEST_CASE("streams are deterministic across runs and worker counts") {
  auto a = population(VarietyLabel::SH, 4, true).collect();
  auto b = population(VarietyLabel::SH, 4, true).collect();
  auto c = population(VarietyLabel::SH, 4, true, 4).collect();
  CHECK(a == b);
  CHECK(a == c);
  auto d = population(VarietyLabel::CenteredKleene, 9, true).collect();
  auto e = population(VarietyLabel::CenteredKleene, 9, true, 3).collect();
  CHECK(d == e);
}

TEST_CASE("generator and checker agree on populations") {
  for (auto label : {VarietyLabel::MS, VarietyLabel::BDL, VarietyLabel::hIS0, VarietyLabel::Hil0, VarietyLabel::IS0,
                     VarietyLabel::hBDL, VarietyLabel::SH, VarietyLabel::HA, VarietyLabel::DeMorgan,
                     VarietyLabel::Kleene, VarietyLabel::CenteredKleene}) {
    INFO(to_string(label));
    const std::size_t size = (label == VarietyLabel::hIS0 || label == VarietyLabel::hBDL) ? 3 : 5;
    for (const auto& a : population(label, size, true)) CHECK(passes(label, a));
  }
}

TEST_CASE("modulo-isomorphism populations hold one member per class") {
  for (auto label : {VarietyLabel::SH, VarietyLabel::Hil0, VarietyLabel::hBDL, VarietyLabel::Kleene}) {
    INFO(to_string(label));
    const std::size_t size = label == VarietyLabel::hBDL ? 3 : label == VarietyLabel::Kleene ? 6 : 4;
    auto reps = population(label, size, true).collect();
    auto all = population(label, size, false).collect();
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        if (reps[i].size() == reps[j].size()) CHECK_FALSE(oracle::isomorphic(reps[i], reps[j]));
    for (const auto& a : all)
      CHECK(std::any_of(reps.begin(), reps.end(),
                        [&](const FiniteAlgebra& r) { return r.size() == a.size() && oracle::isomorphic(r, a); }));
  }
}
