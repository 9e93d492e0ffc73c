#pragma once

#include <cstddef>
#include <vector>

#include "hemi/search.hpp"

namespace hemi::detail {

enum class InvolutionKind { DeMorgan, Kleene, CenteredKleene };

}  // namespace hemi::detail

namespace hemi {

using detail::InvolutionKind;

/// Order-reversing involutions of a distributive lattice, optionally one per
/// conjugacy class under lattice automorphisms.
std::vector<FiniteAlgebra> involutive_expansions(const FiniteAlgebra& lattice, InvolutionKind kind,
                                                 bool modulo_iso);
AlgebraStream enumerate_involutive(std::size_t n, InvolutionKind kind, bool modulo_iso);

}  // namespace hemi
