#include "hemi/constructions.hpp"

#include "hemi/finord.hpp"
#include "hemi/varieties.hpp"

namespace hemi {

FiniteAlgebra chain(std::size_t n) {
  Order leq(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq(i, j) = 1;
  return lattice_from_order(leq);
}

FiniteAlgebra boolean_lattice(std::size_t atoms) {
  const std::size_t n = std::size_t{1} << atoms;
  Order leq(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq(i, j) = (i & ~j) == 0;
  auto a = lattice_from_order(leq);
  if (atoms == 2) a.names = {"0", "a", "b", "1"};
  return a;
}

FiniteAlgebra antichain_with_bounds(std::size_t k) {
  const std::size_t n = k + 2;
  Order leq(n);
  for (std::size_t i = 0; i < n; ++i) {
    leq(0, i) = 1;
    leq(i, n - 1) = 1;
    leq(i, i) = 1;
  }
  return lattice_from_order(leq);
}

FiniteAlgebra pentagon() {
  // 0, a, b, c, 1 with a < b.
  Order leq(5);
  for (std::size_t i = 0; i < 5; ++i) {
    leq(0, i) = 1;
    leq(i, 4) = 1;
    leq(i, i) = 1;
  }
  leq(1, 2) = 1;
  auto a = lattice_from_order(leq);
  a.names = {"0", "a", "b", "c", "1"};
  return a;
}

FiniteAlgebra bottom_with_antichain(std::size_t k) {
  Order leq(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    leq(0, i) = 1;
    leq(i, i) = 1;
  }
  FiniteAlgebra a{leq};
  a.bottom = 0;
  return a;
}

FiniteAlgebra with_heyting_arrow(FiniteAlgebra lattice) {
  const auto n = static_cast<Elem>(lattice.size());
  OpTable arrow(n);
  {
    AlgebraView v(lattice);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        auto r = relative_pseudocomplement(v, a, b);
        if (!r) throw PreconditionError("relative pseudocomplement does not exist");
        arrow(a, b) = *r;
      }
  }
  lattice.arrow = std::move(arrow);
  return lattice;
}

FiniteAlgebra with_hilbert_arrow(FiniteAlgebra lattice) {
  if (!lattice.top) throw PreconditionError("Hilbert arrow needs a top");
  const auto n = static_cast<Elem>(lattice.size());
  OpTable arrow(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) arrow(a, b) = lattice.le(a, b) ? *lattice.top : b;
  lattice.arrow = std::move(arrow);
  return lattice;
}

FiniteAlgebra three_chain_hemi() {
  auto a = chain(3);
  a.names = {"0", "a", "1"};
  OpTable arrow(3);
  const Elem rows[3][3] = {{2, 1, 2}, {0, 2, 2}, {0, 0, 2}};
  for (Elem i = 0; i < 3; ++i)
    for (Elem j = 0; j < 3; ++j) arrow(i, j) = rows[i][j];
  a.arrow = arrow;
  return a;
}

FiniteAlgebra two_chain_semi_heyting() {
  auto a = chain(2);
  OpTable arrow(2);
  arrow(0, 0) = 1;
  arrow(0, 1) = 0;
  arrow(1, 0) = 0;
  arrow(1, 1) = 1;
  a.arrow = arrow;
  return a;
}

FiniteAlgebra boolean4_hilbert() { return with_hilbert_arrow(boolean_lattice(2)); }

FiniteAlgebra kleene_chain3() {
  auto a = chain(3);
  a.names = {"0", "c", "1"};
  a.involution = std::vector<Elem>{2, 1, 0};
  a.center = 1;
  return a;
}

}  // namespace hemi
