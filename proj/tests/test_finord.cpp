#include <doctest.h>

#include <random>

#include "hemi/constructions.hpp"
#include "hemi/finord.hpp"
#include "oracle.hpp"

using namespace hemi;

namespace {

Order order_from(std::initializer_list<std::initializer_list<int>> rows) {
  Order o(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (int v : r) o(i, j++) = static_cast<std::uint8_t>(v);
    ++i;
  }
  return o;
}

}  // namespace

TEST_CASE("validate_poset accepts chains and antichains") {
  CHECK(validate_poset(chain(4).leq).ok());
  CHECK(validate_poset(bottom_with_antichain(3).leq).ok());
  Order one(1);
  one(0, 0) = 1;
  CHECK(validate_poset(one).ok());
}

TEST_CASE("validate_poset names each failing law") {
  auto refl = validate_poset(order_from({{0, 1}, {0, 1}}));
  REQUIRE_FALSE(refl.ok());
  CHECK(refl.violations[0].kind == PosetViolation::Kind::Reflexivity);
  CHECK(refl.violations[0].witness == std::vector<Elem>{0});

  auto anti = validate_poset(order_from({{1, 1}, {1, 1}}));
  REQUIRE_FALSE(anti.ok());
  CHECK(anti.violations[0].kind == PosetViolation::Kind::Antisymmetry);

  auto trans = validate_poset(order_from({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  REQUIRE_FALSE(trans.ok());
  CHECK(trans.violations[0].kind == PosetViolation::Kind::Transitivity);
  CHECK(trans.violations[0].witness == std::vector<Elem>{0, 1, 2});
}

TEST_CASE("ragged order input is an input error") {
  std::vector<std::vector<int>> rows{{1, 0}, {1}};
  CHECK_THROWS_AS(validate_poset(rows), InputError);
  CHECK(validate_poset(std::vector<std::vector<int>>{{1, 1}, {0, 1}}).ok());
}

TEST_CASE("glb and lub on small shapes") {
  auto v = bottom_with_antichain(2);
  CHECK(glb(v, 1, 2) == Elem{0});
  CHECK_FALSE(lub(v, 1, 2).has_value());
  CHECK(glb(v, 1, 1) == Elem{1});

  auto b4 = boolean_lattice(2);
  CHECK(glb(b4, 1, 2) == Elem{0});
  CHECK(lub(b4, 1, 2) == Elem{3});

  // two incomparable lower bounds: no glb
  auto bowtie = order_from({{1, 0, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_FALSE(glb(bowtie, 2, 3).has_value());
  CHECK_FALSE(lub(bowtie, 0, 1).has_value());
  CHECK_THROWS_AS(glb(bowtie, 0, 7), InputError);
}

TEST_CASE("PartialLattice tables and bounds") {
  PartialLattice lat(pentagon().leq);
  CHECK(lat.meets_total());
  CHECK(lat.joins_total());
  CHECK(lat.least() == Elem{0});
  CHECK(lat.greatest() == Elem{4});
  CHECK(lat.meet(1, 3) == Elem{0});
  CHECK(lat.join(1, 3) == Elem{4});

  PartialLattice partial(bottom_with_antichain(2).leq);
  CHECK_FALSE(partial.joins_total());
  CHECK_FALSE(partial.greatest().has_value());
  CHECK_THROWS_AS(partial.join_table(), PreconditionError);
}

TEST_CASE("distributivity") {
  CHECK(is_distributive_lattice(boolean_lattice(2)).distributive);
  CHECK(is_distributive_lattice(chain(5)).distributive);

  auto n5 = is_distributive_lattice(pentagon());
  CHECK_FALSE(n5.distributive);
  REQUIRE(n5.witness.has_value());
  auto [a, b, c] = *n5.witness;
  auto p = pentagon();
  PartialLattice lat(p.leq);
  CHECK(*lat.meet(a, *lat.join(b, c)) != *lat.join(*lat.meet(a, b), *lat.meet(a, c)));

  CHECK_FALSE(is_distributive_lattice(antichain_with_bounds(3)).distributive);
  CHECK_THROWS_AS(is_distributive_lattice(bottom_with_antichain(2)), PreconditionError);
}

TEST_CASE("validate_algebra names the offending cell") {
  auto a = chain(3);
  (*a.meet)(1, 2) = 0;
  try {
    validate_algebra(a);
    FAIL("expected a consistency error");
  } catch (const ConsistencyError& e) {
    CHECK(std::string(e.what()).find("meet[1][2]") != std::string::npos);
  }
  auto b = chain(3);
  b.bottom = 2;
  CHECK_THROWS_AS(validate_algebra(b), ConsistencyError);
  CHECK_NOTHROW(validate_algebra(chain(3)));
}

TEST_CASE("dual product order") {
  auto p = chain(3);
  Order d = dual_product_order(p);
  REQUIRE(d.size() == 9);
  CHECK(validate_poset(d).ok());
  // (a,b) <= (e,f) iff a <= e and f <= b
  CHECK(d(0 * 3 + 2, 2 * 3 + 0));
  CHECK_FALSE(d(2 * 3 + 0, 0 * 3 + 2));
}

TEST_CASE("glb/lub match definition-level scans on random posets") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  for (int trial = 0; trial < 300; ++trial) {
    Order leq = oracle::random_poset(rng, size(rng), density(rng));
    REQUIRE(validate_poset(leq).ok());
    PartialLattice lat(leq);
    for (Elem a = 0; a < leq.size(); ++a)
      for (Elem b = 0; b < leq.size(); ++b) {
        CHECK(glb(leq, a, b) == oracle::scan_glb(leq, a, b));
        CHECK(lub(leq, a, b) == oracle::scan_lub(leq, a, b));
        CHECK(lat.meet(a, b) == oracle::scan_glb(leq, a, b));
        CHECK(lat.join(a, b) == oracle::scan_lub(leq, a, b));
      }
  }
}
