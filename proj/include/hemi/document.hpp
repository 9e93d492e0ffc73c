#pragma once

#include <string>
#include <string_view>

#include "hemi/algebra.hpp"

namespace hemi {

/// Reads the JSON algebra format:
///   {"size": n, "names": [...], "leq": [[0/1...]...],
///    "ops": {"meet", "join", "arrow": matrices, "neg": array},
///    "consts": {"bottom", "top", "center": indices}}
/// Unknown keys are rejected. Syntax and shape problems raise ParseError;
/// when `validate` is set, semantic problems raise ConsistencyError.
FiniteAlgebra parse_algebra(std::string_view text, bool validate = true);

/// Canonical text: fixed key order, one matrix row per line, names always
/// written (indices when the algebra has none).
std::string serialize_algebra(const FiniteAlgebra& a);

FiniteAlgebra load_algebra_file(const std::string& path, bool validate = true);

}  // namespace hemi
