#pragma once

#include <cstddef>

#include "hemi/algebra.hpp"

namespace hemi {

/// 0 < 1 < ... < n-1 with meet, join and bounds.
FiniteAlgebra chain(std::size_t n);

/// Subsets of a k-element set ordered by inclusion; element i is the bitmask i.
FiniteAlgebra boolean_lattice(std::size_t atoms);

/// 0, k pairwise incomparable atoms, 1.  k = 3 gives M3.
FiniteAlgebra antichain_with_bounds(std::size_t k);

/// The pentagon 0 < a < b < 1, 0 < c < 1.
FiniteAlgebra pentagon();

/// A bottom below k incomparable elements, nothing else (a poset, not a lattice).
FiniteAlgebra bottom_with_antichain(std::size_t k);

/// Adds the relative pseudocomplement as arrow; throws PreconditionError if
/// some residuum does not exist.
FiniteAlgebra with_heyting_arrow(FiniteAlgebra lattice);

/// Adds a->b = 1 if a <= b, otherwise b.
FiniteAlgebra with_hilbert_arrow(FiniteAlgebra lattice);

/// Three-element chain 0 < a < 1 whose arrow has rows [1,a,1], [0,1,1], [0,0,1].
FiniteAlgebra three_chain_hemi();

/// Two-element chain with arrow rows [1,0], [0,1].
FiniteAlgebra two_chain_semi_heyting();

/// Four-element Boolean lattice with the Hilbert arrow.
FiniteAlgebra boolean4_hilbert();

/// 0 < c < 1 with ~0 = 1 and ~c = c.
FiniteAlgebra kleene_chain3();

}  // namespace hemi
