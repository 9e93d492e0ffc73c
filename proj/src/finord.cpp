#include "hemi/finord.hpp"

#include <set>
#include <sstream>

namespace hemi {

namespace {

void check_index(std::size_t n, Elem a, Elem b) {
  if (a >= n || b >= n)
    throw InputError("element index out of range: (" + std::to_string(a) + ", " +
                     std::to_string(b) + ") with carrier size " + std::to_string(n));
}

// Greatest element of the common lower bounds; `down` counts are used to pick
// the only possible candidate.
MeetResult greatest_common(const Order& leq, Elem a, Elem b, bool lower,
                           const std::vector<std::size_t>& rank) {
  const std::size_t n = leq.size();
  auto below = [&](Elem x, Elem y) { return lower ? leq(x, y) != 0 : leq(y, x) != 0; };
  std::optional<Elem> best;
  for (Elem x = 0; x < n; ++x) {
    if (!below(x, a) || !below(x, b)) continue;
    if (!best || rank[x] > rank[*best]) best = x;
  }
  if (!best) return std::nullopt;
  for (Elem x = 0; x < n; ++x)
    if (below(x, a) && below(x, b) && !below(x, *best)) return std::nullopt;
  return best;
}

std::vector<std::size_t> down_counts(const Order& leq, bool lower) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (lower ? leq(y, x) : leq(x, y)) ++rank[x];
  return rank;
}

}  // namespace

std::string PosetViolation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Reflexivity:
      out << "reflexivity fails at " << witness[0];
      break;
    case Kind::Antisymmetry:
      out << "antisymmetry fails at (" << witness[0] << ", " << witness[1] << ")";
      break;
    case Kind::Transitivity:
      out << "transitivity fails at (" << witness[0] << ", " << witness[1] << ", "
          << witness[2] << ")";
      break;
  }
  return out.str();
}

PosetReport validate_poset(const Order& leq) {
  using K = PosetViolation::Kind;
  PosetReport report;
  const std::size_t n = leq.size();
  for (Elem i = 0; i < n; ++i)
    if (!leq(i, i)) report.violations.push_back({K::Reflexivity, {i}});
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (leq(i, j) && leq(j, i)) report.violations.push_back({K::Antisymmetry, {i, j}});
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      if (!leq(i, j)) continue;
      for (Elem k = 0; k < n; ++k)
        if (leq(j, k) && !leq(i, k)) report.violations.push_back({K::Transitivity, {i, j, k}});
    }
  return report;
}

PosetReport validate_poset(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  Order leq(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw InputError("order matrix is not square: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1)
        throw InputError("order matrix entries must be 0 or 1");
      leq(i, j) = static_cast<std::uint8_t>(rows[i][j]);
    }
  }
  return validate_poset(leq);
}

MeetResult glb(const Order& leq, Elem a, Elem b) {
  check_index(leq.size(), a, b);
  return greatest_common(leq, a, b, true, down_counts(leq, true));
}

MeetResult lub(const Order& leq, Elem a, Elem b) {
  check_index(leq.size(), a, b);
  return greatest_common(leq, a, b, false, down_counts(leq, false));
}

MeetResult glb(const FiniteAlgebra& p, Elem a, Elem b) {
  check_index(p.size(), a, b);
  if (p.meet) return (*p.meet)(a, b);
  return glb(p.leq, a, b);
}

MeetResult lub(const FiniteAlgebra& p, Elem a, Elem b) {
  check_index(p.size(), a, b);
  if (p.join) return (*p.join)(a, b);
  return lub(p.leq, a, b);
}

PartialLattice::PartialLattice(const Order& leq)
    : n_(leq.size()), meet_(n_ * n_), join_(n_ * n_) {
  const auto down = down_counts(leq, true);
  const auto up = down_counts(leq, false);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a; b < n_; ++b) {
      auto m = greatest_common(leq, a, b, true, down);
      auto j = greatest_common(leq, a, b, false, up);
      meet_[a * n_ + b] = meet_[b * n_ + a] = m;
      join_[a * n_ + b] = join_[b * n_ + a] = j;
      meets_total_ = meets_total_ && m.has_value();
      joins_total_ = joins_total_ && j.has_value();
    }
  for (Elem x = 0; x < n_; ++x) {
    if (down[x] == 1 && up[x] == n_) least_ = x;
    if (up[x] == 1 && down[x] == n_) greatest_ = x;
  }
}

OpTable PartialLattice::meet_table() const {
  if (!meets_total_) throw PreconditionError("meet is not total");
  OpTable t(n_);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) t(a, b) = *meet(a, b);
  return t;
}

OpTable PartialLattice::join_table() const {
  if (!joins_total_) throw PreconditionError("join is not total");
  OpTable t(n_);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) t(a, b) = *join(a, b);
  return t;
}

Order dual_product_order(const Order& leq) {
  const std::size_t n = leq.size();
  Order out(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t e = 0; e < n; ++e)
          out(a * n + b, d * n + e) = leq(a, d) && leq(e, b);
  return out;
}

Order dual_product_order(const FiniteAlgebra& p) { return dual_product_order(p.leq); }

Order reverse_order(const Order& leq) {
  Order out(leq.size());
  for (std::size_t i = 0; i < leq.size(); ++i)
    for (std::size_t j = 0; j < leq.size(); ++j) out(i, j) = leq(j, i);
  return out;
}

DistributivityReport is_distributive_lattice(const FiniteAlgebra& p) {
  if (!p.bottom || !p.top) throw PreconditionError("distributivity test needs bottom and top");
  PartialLattice lat(p.leq);
  if (!lat.meets_total() || !lat.joins_total())
    throw PreconditionError("distributivity test needs total meet and join");
  const std::size_t n = p.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = *lat.meet(x, *lat.join(y, z));
        Elem rhs = *lat.join(*lat.meet(x, y), *lat.meet(x, z));
        if (lhs != rhs) return {false, std::array<Elem, 3>{x, y, z}};
      }
  return {true, std::nullopt};
}

void validate_algebra(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  if (n == 0) throw ConsistencyError("carrier must be nonempty");
  auto poset = validate_poset(a.leq);
  if (!poset.ok()) throw ConsistencyError("leq is not a partial order: " + poset.violations[0].describe());
  if (!a.names.empty()) {
    if (a.names.size() != n) throw ConsistencyError("names has wrong length");
    std::set<std::string> seen(a.names.begin(), a.names.end());
    if (seen.size() != n) throw ConsistencyError("names are not distinct");
  }
  PartialLattice lat(a.leq);
  auto cell = [&](const char* op, Elem i, Elem j) {
    return std::string(op) + "[" + a.name(i) + "][" + a.name(j) + "]";
  };
  enum class Bound { Meet, Join, None };
  auto check_table = [&](const std::optional<OpTable>& t, const char* op, Bound bound) {
    if (!t) return;
    if (t->size() != n) throw ConsistencyError(std::string(op) + " table has wrong size");
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j) {
        Elem v = (*t)(i, j);
        if (v >= n) throw ConsistencyError(cell(op, i, j) + " is out of range");
        if (bound == Bound::None) continue;
        const bool is_meet = bound == Bound::Meet;
        MeetResult expect = is_meet ? lat.meet(i, j) : lat.join(i, j);
        if (!expect)
          throw ConsistencyError(cell(op, i, j) + " = " + a.name(v) + " but the " +
                                 (is_meet ? "glb" : "lub") + " does not exist");
        if (*expect != v)
          throw ConsistencyError(cell(op, i, j) + " = " + a.name(v) + " but the " +
                                 (is_meet ? "glb" : "lub") + " is " + a.name(*expect));
      }
  };
  check_table(a.meet, "meet", Bound::Meet);
  check_table(a.join, "join", Bound::Join);
  check_table(a.arrow, "arrow", Bound::None);
  if (a.bottom) {
    if (*a.bottom >= n) throw ConsistencyError("bottom is out of range");
    for (Elem j = 0; j < n; ++j)
      if (!a.le(*a.bottom, j)) throw ConsistencyError("bottom is not below " + a.name(j));
  }
  if (a.top) {
    if (*a.top >= n) throw ConsistencyError("top is out of range");
    for (Elem j = 0; j < n; ++j)
      if (!a.le(j, *a.top)) throw ConsistencyError("top is not above " + a.name(j));
  }
  if (a.involution) {
    const auto& neg = *a.involution;
    if (neg.size() != n) throw ConsistencyError("neg has wrong length");
    for (Elem i = 0; i < n; ++i) {
      if (neg[i] >= n) throw ConsistencyError("neg[" + a.name(i) + "] is out of range");
      if (neg[neg[i]] != i) throw ConsistencyError("neg is not self-inverse at " + a.name(i));
    }
  }
  if (a.center) {
    if (*a.center >= n) throw ConsistencyError("center is out of range");
    if (a.involution && (*a.involution)[*a.center] != *a.center)
      throw ConsistencyError("neg does not fix the center");
  }
}

FiniteAlgebra lattice_from_order(const Order& leq) {
  PartialLattice lat(leq);
  if (!lat.meets_total() || !lat.joins_total() || !lat.least() || !lat.greatest())
    throw PreconditionError("order is not a bounded lattice");
  FiniteAlgebra a{leq};
  a.meet = lat.meet_table();
  a.join = lat.join_table();
  a.bottom = lat.least();
  a.top = lat.greatest();
  return a;
}

}  // namespace hemi
