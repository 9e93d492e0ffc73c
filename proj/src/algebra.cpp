#include "hemi/algebra.hpp"

#include <sstream>

namespace hemi {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                 ": " + msg),
      line_(line),
      column_(column) {}

ParseError::ParseError(const std::string& msg) : InputError(msg) {}

TheoremViolation::TheoremViolation(const std::string& msg, std::string witness_document)
    : Error(msg), witness_(std::move(witness_document)) {}

std::string FiniteAlgebra::name(Elem x) const {
  if (x < names.size()) return names[x];
  return std::to_string(x);
}

Signature signature_of(const FiniteAlgebra& a) {
  Signature s = 0;
  if (a.meet) s |= kMeet;
  if (a.join) s |= kJoin;
  if (a.arrow) s |= kArrow;
  if (a.involution) s |= kInvolution;
  if (a.bottom) s |= kBottom;
  if (a.top) s |= kTop;
  if (a.center) s |= kCenter;
  return s;
}

FiniteAlgebra reduct(const FiniteAlgebra& a, Signature keep) {
  FiniteAlgebra r = a;
  if (!(keep & kMeet)) r.meet.reset();
  if (!(keep & kJoin)) r.join.reset();
  if (!(keep & kArrow)) r.arrow.reset();
  if (!(keep & kInvolution)) r.involution.reset();
  if (!(keep & kBottom)) r.bottom.reset();
  if (!(keep & kTop)) r.top.reset();
  if (!(keep & kCenter)) r.center.reset();
  return r;
}

std::string describe(Signature s) {
  static const char* const kNames[] = {"meet", "join",   "arrow", "neg",
                                       "bottom", "top", "center"};
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (unsigned bit = 0; bit < 7; ++bit) {
    if (!(s & (1u << bit))) continue;
    if (!first) out << ",";
    out << kNames[bit];
    first = false;
  }
  out << "}";
  return out.str();
}

FiniteAlgebra relabel(const FiniteAlgebra& a, std::span<const Elem> perm) {
  const std::size_t n = a.size();
  if (perm.size() != n) throw InputError("relabel: permutation has wrong length");
  std::vector<Elem> inv(n, static_cast<Elem>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || inv[perm[i]] != n) throw InputError("relabel: not a permutation");
    inv[perm[i]] = static_cast<Elem>(i);
  }
  FiniteAlgebra r{Order(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.leq(i, j) = a.leq(perm[i], perm[j]);
  auto table = [&](const std::optional<OpTable>& t) -> std::optional<OpTable> {
    if (!t) return std::nullopt;
    OpTable out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = inv[(*t)(perm[i], perm[j])];
    return out;
  };
  r.meet = table(a.meet);
  r.join = table(a.join);
  r.arrow = table(a.arrow);
  if (a.involution) {
    std::vector<Elem> neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = inv[(*a.involution)[perm[i]]];
    r.involution = std::move(neg);
  }
  if (a.bottom) r.bottom = inv[*a.bottom];
  if (a.top) r.top = inv[*a.top];
  if (a.center) r.center = inv[*a.center];
  if (!a.names.empty()) {
    r.names.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.names[i] = a.names[perm[i]];
  }
  return r;
}

}  // namespace hemi
