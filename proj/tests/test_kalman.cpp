#include <doctest.h>

#include "hemi/constructions.hpp"
#include "hemi/document.hpp"
#include "hemi/finord.hpp"
#include "hemi/kalman.hpp"
#include "hemi/search.hpp"
#include "oracle.hpp"

using namespace hemi;

namespace {

FiniteAlgebra fixture(const std::string& name) {
  return load_algebra_file(std::string(HEMI_FIXTURES) + "/" + name);
}

}  // namespace

TEST_CASE("pairs with bottom meet") {
  CHECK(kalman_pairs(chain(2)).size() == 3);
  CHECK(kalman_pairs(chain(3)).size() == 5);
  CHECK(kalman_pairs(boolean_lattice(2)).size() == 9);
  // bottom plus two atoms: (0,0), (0,a), (0,b), (a,0), (b,0), (a,b), (b,a)
  CHECK(kalman_pairs(bottom_with_antichain(2)).size() == 7);
  auto pairs = kalman_pairs(chain(2));
  CHECK(pairs[0] == KalmanPair{0, 0});
  CHECK(pairs[1] == KalmanPair{0, 1});
  CHECK(pairs[2] == KalmanPair{1, 0});
}

TEST_CASE("K of the four-element Boolean lattice") {
  const auto k = kalman_of_bdl(boolean_lattice(2));
  const auto& t = k.algebra;
  REQUIRE(t.size() == 9);
  CHECK(t.name(*k.index_of(1, 2)) == "(a,b)");
  const Elem c = *t.center;
  CHECK(k.pairs[c] == KalmanPair{0, 0});
  CHECK(k.pairs[*t.bottom] == KalmanPair{0, 3});
  CHECK(k.pairs[*t.top] == KalmanPair{3, 0});
  for (Elem x = 0; x < t.size(); ++x) {
    const auto [a, b] = k.pairs[x];
    CHECK(k.pairs[(*t.involution)[x]] == KalmanPair{b, a});
    for (Elem y = 0; y < t.size(); ++y) {
      const auto [d, e] = k.pairs[y];
      const bool expect = k.source.le(a, d) && k.source.le(e, b);
      CHECK(t.le(x, y) == expect);
    }
  }
  AlgebraView v(t);
  CHECK(check_centered_kleene(v).ok);
  CHECK(check_ck(v).holds);
}

TEST_CASE("K of a poset with bottom") {
  const auto p = bottom_with_antichain(2);
  const auto k = kalman_of_poset(p);
  CHECK(k.algebra.size() == 7);
  AlgebraView v(k.algebra);
  CHECK(check_kleene_poset(v).ok);
  CHECK(check_ck(v).holds);
  Order two(2);
  two(0, 0) = two(1, 1) = 1;
  CHECK_THROWS_AS(kalman_of_poset(FiniteAlgebra(two)), PreconditionError);
}

TEST_CASE("bounds in K(P) against the source") {
  for (const auto& p : {bottom_with_antichain(3), chain(3), pentagon(), boolean_lattice(2)}) {
    const auto k = kalman_construct(reduct(p, kBottom));
    const auto& t = k.algebra;
    const Elem c = *t.center;
    for (Elem x = 0; x < t.size(); ++x) {
      const auto [b, d] = k.pairs[x];
      // (b,d) & (0,0) = (0,d) and (b,d) | (0,0) = (b,0)
      CHECK(glb(t, x, c) == k.index_of(0, d));
      CHECK(lub(t, x, c) == k.index_of(b, 0));
      for (Elem a = 0; a < p.size(); ++a) {
        auto a0 = k.index_of(a, 0);
        REQUIRE(a0.has_value());
        auto m = glb(t, *a0, x);
        auto src = glb(p, a, b);
        CHECK(m.has_value() == src.has_value());
        if (m && src) CHECK(*m == *k.index_of(*src, d));
      }
    }
  }
}

TEST_CASE("meet with the center is determined by the involution") {
  for (const auto& p : {bottom_with_antichain(2), chain(4), boolean_lattice(2)}) {
    const auto k = kalman_of_poset(reduct(p, kBottom));
    const auto& t = k.algebra;
    const Elem c = *t.center;
    const auto& neg = *t.involution;
    std::size_t fixed = 0;
    for (Elem x = 0; x < t.size(); ++x) {
      auto m = glb(t, x, c);
      REQUIRE(m.has_value());
      auto j = lub(t, neg[x], c);
      REQUIRE(j.has_value());
      CHECK(*m == neg[*j]);
      if (neg[x] == x) ++fixed;
    }
    CHECK(fixed == 1);
  }
}

TEST_CASE("alpha and beta are isomorphisms on constructed algebras") {
  const auto h = with_heyting_arrow(boolean_lattice(2));
  for (auto level : {KalmanLevel::Semilattice, KalmanLevel::Lattice, KalmanLevel::HemiImplicative,
                     KalmanLevel::HemiImplicativeLattice, KalmanLevel::Heyting}) {
    INFO(to_string(level));
    auto alpha = alpha_map(h, level);
    CHECK(alpha.report().isomorphism());
    auto k = kalman_of(h, level);
    auto beta = beta_map(k.algebra);
    CHECK(beta.report().isomorphism());
  }
}

TEST_CASE("beta on an algebra without CK is an embedding but not onto") {
  const auto t = fixture("kleene7_no_ck.json");
  AlgebraView v(t);
  auto ck = check_ck(v);
  CHECK_FALSE(ck.holds);
  REQUIRE(ck.witness.has_value());
  auto r = beta_map(t).report();
  CHECK(r.injective);
  CHECK(r.order_preserving);
  CHECK(r.order_reflecting);
  CHECK_FALSE(r.surjective);
}

TEST_CASE("center algebra recovers the source") {
  const auto b4 = boolean_lattice(2);
  const auto c = center_algebra(kalman_of_bdl(b4).algebra);
  CHECK(c.size() == 4);
  auto iso = are_isomorphic(reduct(c, kMeet | kJoin | kBottom | kTop), b4);
  CHECK(iso.isomorphic);
  CHECK(oracle::isomorphic(reduct(c, kMeet | kJoin | kBottom | kTop), b4));
}

TEST_CASE("center algebra needs the arrow to stay above the center") {
  auto t = kleene_chain3();
  OpTable arrow(3);
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y) arrow(x, y) = 0;
  t.arrow = arrow;
  CHECK_THROWS_AS(center_algebra(t), PreconditionError);
}

TEST_CASE("default arrow on the three-element Kleene chain") {
  const auto t = kleene_chain3();
  const auto arrow = khil_default_arrow(AlgebraView(t));
  CHECK(arrow(2, 0) == 0);  // 1 -> 0
  CHECK(arrow(1, 0) == 1);  // c -> 0
  FiniteAlgebra with = t;
  with.arrow = arrow;
  AlgebraView v(with);
  const KCondition k15[] = {KCondition::K1, KCondition::K2, KCondition::K3, KCondition::K4, KCondition::K5};
  CHECK(check_k_conditions(v, k15).ok);
  CHECK(check_khil_conditions(v).ok);
}

TEST_CASE("condition batteries on K of the example algebras") {
  {
    const auto k = kalman_of_his(three_chain_hemi());
    CHECK(check_khis0(AlgebraView(k.algebra)).ok);
  }
  {
    const auto k = kalman_of_his(boolean4_hilbert());
    AlgebraView v(k.algebra);
    CHECK(check_khil_conditions(v).ok);
  }
  {
    const auto k = kalman_of_hbdl(two_chain_semi_heyting());
    AlgebraView v(k.algebra);
    CHECK(check_ksh_condition(v).ok);
    const KCondition k6[] = {KCondition::K6};
    CHECK(check_k_conditions(v, k6).ok);
  }
}

TEST_CASE("level preconditions") {
  CHECK_THROWS_AS(kalman_of_bdl(pentagon()), PreconditionError);
  CHECK_THROWS_AS(kalman_of_heyting(three_chain_hemi()), PreconditionError);
  CHECK_THROWS_AS(kalman_of_his(chain(3)), PreconditionError);
  CHECK(parse_level("hbdl") == KalmanLevel::HemiImplicativeLattice);
  CHECK_THROWS_AS(parse_level("boolean"), InputError);
}

TEST_CASE("morphisms and their image under K") {
  const auto c2 = chain(2);
  const auto c3 = chain(3);
  Morphism f(c2, c3, {0, 2});
  auto r = f.report();
  CHECK(r.injective);
  CHECK_FALSE(r.surjective);
  CHECK(r.order_preserving);
  CHECK(*r.meet);
  CHECK(*r.bottom);

  Morphism g(c3, c3, {0, 1, 2});
  auto gf = compose(g, f);
  CHECK(gf.map() == f.map());

  const auto k2 = kalman_of_bdl(c2);
  const auto k3 = kalman_of_bdl(c3);
  auto kf = kalman_of_morphism(f, k2, k3);
  auto kr = kf.report();
  CHECK(kr.injective);
  CHECK(kr.order_preserving);
  CHECK(*kr.involution);
  CHECK(*kr.center);

  Morphism shift(c2, c3, {1, 2});
  CHECK_THROWS_AS(kalman_of_morphism(shift, k2, k3), InputError);
}
