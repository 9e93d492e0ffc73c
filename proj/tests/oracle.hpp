#pragma once

// Definition-level reference implementations. Nothing here calls into the
// library's algorithms; only the data types are shared.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "hemi/algebra.hpp"

namespace oracle {

using hemi::Elem;
using hemi::FiniteAlgebra;
using hemi::OpTable;
using hemi::Order;

inline std::optional<Elem> scan_glb(const Order& leq, Elem a, Elem b) {
  std::vector<Elem> lower;
  for (Elem x = 0; x < leq.size(); ++x)
    if (leq(x, a) && leq(x, b)) lower.push_back(x);
  for (Elem m : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](Elem x) { return leq(x, m) != 0; })) return m;
  return std::nullopt;
}

inline std::optional<Elem> scan_lub(const Order& leq, Elem a, Elem b) {
  std::vector<Elem> upper;
  for (Elem x = 0; x < leq.size(); ++x)
    if (leq(a, x) && leq(b, x)) upper.push_back(x);
  for (Elem m : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](Elem x) { return leq(m, x) != 0; })) return m;
  return std::nullopt;
}

inline bool is_partial_order(const Order& leq) {
  const auto n = leq.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq(a, a)) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (leq(a, b) && leq(b, c) && !leq(a, c)) return false;
    }
  }
  return true;
}

inline bool is_lattice(const Order& leq) {
  for (Elem a = 0; a < leq.size(); ++a)
    for (Elem b = 0; b < leq.size(); ++b)
      if (!scan_glb(leq, a, b) || !scan_lub(leq, a, b)) return false;
  return leq.size() > 0;
}

inline bool is_distributive(const Order& leq) {
  const auto n = static_cast<Elem>(leq.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem l = *scan_glb(leq, a, *scan_lub(leq, b, c));
        Elem r = *scan_lub(leq, *scan_glb(leq, a, b), *scan_glb(leq, a, c));
        if (l != r) return false;
      }
  return true;
}

/// Random poset: random upper-triangular relation, transitively closed, then
/// the labels shuffled.
inline Order random_poset(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  Order base(n);
  for (std::size_t i = 0; i < n; ++i) {
    base(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) base(i, j) = edge(rng);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (base(i, k) && base(k, j)) base(i, j) = 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Order out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(perm[i], perm[j]) = base(i, j);
  return out;
}

/// Set partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<Elem>> partitions(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> rgs(n, 0);
  std::function<void(std::size_t, Elem)> rec = [&](std::size_t i, Elem max) {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (Elem v = 0; v <= max + 1; ++v) {
      rgs[i] = v;
      rec(i + 1, std::max(max, v));
    }
  };
  if (n == 0) return {{}};
  rec(1, 0);
  return out;
}

/// Is the partition compatible with every binary table and unary map?
inline bool compatible(const std::vector<Elem>& blocks, const std::vector<OpTable>& binary,
                       const std::vector<std::vector<Elem>>& unary) {
  const auto n = static_cast<Elem>(blocks.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (blocks[a] != blocks[b]) continue;
      for (const auto& g : unary)
        if (blocks[g[a]] != blocks[g[b]]) return false;
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          if (blocks[c] != blocks[d]) continue;
          for (const auto& t : binary)
            if (blocks[t(a, c)] != blocks[t(b, d)]) return false;
        }
    }
  return true;
}

/// Every congruence, as canonical blocks (smallest member of each block).
inline std::set<std::vector<Elem>> congruences(std::size_t n, const std::vector<OpTable>& binary,
                                               const std::vector<std::vector<Elem>>& unary) {
  std::set<std::vector<Elem>> out;
  for (const auto& p : partitions(n)) {
    if (!compatible(p, binary, unary)) continue;
    std::vector<Elem> canon(n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (p[y] == p[x]) {
          canon[x] = y;
          break;
        }
    out.insert(canon);
  }
  return out;
}

/// Nonempty up-closed meet-closed subsets, by scanning all subsets.
inline std::set<std::vector<bool>> filters(const Order& leq) {
  const auto n = leq.size();
  std::set<std::vector<bool>> out;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::vector<bool> in(n);
    for (std::size_t x = 0; x < n; ++x) in[x] = (s >> x) & 1u;
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      if (!in[x]) continue;
      for (Elem y = 0; y < n && ok; ++y) {
        if (leq(x, y) && !in[y]) ok = false;
        if (in[y]) {
          auto m = scan_glb(leq, x, y);
          if (!m || !in[*m]) ok = false;
        }
      }
    }
    if (ok) out.insert(in);
  }
  return out;
}

/// max{x : x & a <= b}.
inline std::optional<Elem> residuum(const Order& leq, Elem a, Elem b) {
  std::optional<Elem> best;
  std::vector<Elem> ok;
  for (Elem x = 0; x < leq.size(); ++x) {
    auto m = scan_glb(leq, x, a);
    if (m && leq(*m, b)) ok.push_back(x);
  }
  for (Elem x : ok)
    if (std::all_of(ok.begin(), ok.end(), [&](Elem y) { return leq(y, x) != 0; })) best = x;
  return best;
}

/// Isomorphism by trying every permutation.
inline bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size()) return false;
  const auto n = a.size();
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  auto same_table = [&](const std::optional<OpTable>& x, const std::optional<OpTable>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j)
        if (p[(*x)(i, j)] != (*y)(p[i], p[j])) return false;
    return true;
  };
  auto same_const = [&](const std::optional<Elem>& x, const std::optional<Elem>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || p[*x] == *y;
  };
  do {
    bool ok = true;
    for (Elem i = 0; i < n && ok; ++i)
      for (Elem j = 0; j < n && ok; ++j) ok = a.leq(i, j) == b.leq(p[i], p[j]);
    if (!ok) continue;
    if (!same_table(a.meet, b.meet) || !same_table(a.join, b.join) || !same_table(a.arrow, b.arrow)) continue;
    if (!same_const(a.bottom, b.bottom) || !same_const(a.top, b.top) || !same_const(a.center, b.center)) continue;
    if (a.involution.has_value() != b.involution.has_value()) continue;
    if (a.involution) {
      for (Elem i = 0; i < n && ok; ++i) ok = p[(*a.involution)[i]] == (*b.involution)[p[i]];
      if (!ok) continue;
    }
    return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Lattices with bottom 0 and top n-1 whose order extends the index order,
/// found by scanning every relation on the middle elements.
inline std::vector<Order> naturally_labelled_lattices(std::size_t n) {
  std::vector<Order> out;
  if (n == 1) {
    Order o(1);
    o(0, 0) = 1;
    return {o};
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j) cells.emplace_back(i, j);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << cells.size()); ++s) {
    Order o(n);
    for (std::size_t i = 0; i < n; ++i) {
      o(i, i) = 1;
      o(0, i) = 1;
      o(i, n - 1) = 1;
    }
    for (std::size_t k = 0; k < cells.size(); ++k)
      if ((s >> k) & 1u) o(cells[k].first, cells[k].second) = 1;
    if (is_partial_order(o) && is_lattice(o)) out.push_back(o);
  }
  return out;
}

/// Number of lattices on n elements up to isomorphism, by brute force.
inline std::size_t lattice_classes(std::size_t n, bool distributive) {
  std::vector<FiniteAlgebra> reps;
  for (const auto& o : naturally_labelled_lattices(n)) {
    if (distributive && !is_distributive(o)) continue;
    FiniteAlgebra a{o};
    bool seen = std::any_of(reps.begin(), reps.end(), [&](const FiniteAlgebra& r) { return isomorphic(r, a); });
    if (!seen) reps.push_back(a);
  }
  return reps.size();
}

}  // namespace oracle
