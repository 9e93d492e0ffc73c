#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <memory>

#include "hemi/finord.hpp"
#include "hemi/search.hpp"

namespace hemi {

namespace {

using Mask = std::uint32_t;
// shape[i]: i together with everything below it. Labels are natural.
using Shape = std::vector<Mask>;

constexpr std::size_t kMaxElements = 31;
constexpr Mask kNone = std::numeric_limits<Mask>::max();

// Lexicographically least down-set sequence over natural labellings.
class MinLabeller {
 public:
  MinLabeller(std::vector<Mask> strict_down, std::vector<Mask> strict_up)
      : down_(std::move(strict_down)), up_(std::move(strict_up)), perm_(down_.size()) {}

  std::vector<Elem> run() {
    best_.assign(down_.size(), kNone);
    early_ = false;
    dfs(0, 0);
    return best_perm_;
  }

  /// True iff some labelling beats `keys`.
  bool beats(std::vector<Mask> keys) {
    best_ = std::move(keys);
    early_ = true;
    beaten_ = false;
    dfs(0, 0);
    return beaten_;
  }

 private:
  void dfs(std::size_t i, Mask used) {
    const std::size_t m = down_.size();
    if (i == m) {
      if (dirty_) {
        best_perm_ = perm_;
        dirty_ = false;
      }
      return;
    }
    std::vector<Elem> tried;
    for (Elem e = 0; e < m; ++e) {
      if ((used >> e) & 1u) continue;
      if (down_[e] & ~used) continue;
      bool twin = std::any_of(tried.begin(), tried.end(), [&](Elem f) {
        return down_[f] == down_[e] && up_[f] == up_[e];
      });
      if (twin) continue;
      tried.push_back(e);
      Mask key = 0;
      for (std::size_t j = 0; j < i; ++j)
        if ((down_[e] >> perm_[j]) & 1u) key |= Mask{1} << (i - 1 - j);
      if (key > best_[i]) continue;
      if (key < best_[i]) {
        if (early_) {
          beaten_ = true;
          return;
        }
        best_[i] = key;
        std::fill(best_.begin() + static_cast<std::ptrdiff_t>(i) + 1, best_.end(), kNone);
        dirty_ = true;
      }
      perm_[i] = e;
      dfs(i + 1, used | (Mask{1} << e));
      if (beaten_) return;
    }
  }

  std::vector<Mask> down_;
  std::vector<Mask> up_;
  std::vector<Elem> perm_;
  std::vector<Mask> best_;
  std::vector<Elem> best_perm_;
  bool early_ = false;
  bool beaten_ = false;
  bool dirty_ = false;
};

std::vector<Mask> strict_up_of(const std::vector<Mask>& strict_down) {
  std::vector<Mask> up(strict_down.size(), 0);
  for (std::size_t j = 0; j < strict_down.size(); ++j)
    for (std::size_t i = 0; i < strict_down.size(); ++i)
      if ((strict_down[j] >> i) & 1u) up[i] |= Mask{1} << j;
  return up;
}

bool shape_is_canonical(const Shape& s) {
  std::vector<Mask> down(s.size());
  std::vector<Mask> keys(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    down[i] = s[i] & ~(Mask{1} << i);
    for (std::size_t j = 0; j < i; ++j)
      if ((down[i] >> j) & 1u) keys[i] |= Mask{1} << (i - 1 - j);
  }
  MinLabeller labeller(down, strict_up_of(down));
  return !labeller.beats(std::move(keys));
}

// d is the strict down-set of the new element.
bool can_extend(const Shape& s, Mask d) {
  for (std::size_t x = 0; x < s.size(); ++x)
    if (((d >> x) & 1u) && (s[x] & ~d)) return false;
  for (const Mask sy : s) {
    const Mask inter = d & sy;
    bool principal = false;
    for (std::size_t z = 0; z < s.size() && !principal; ++z)
      principal = ((inter >> z) & 1u) && s[z] == inter;
    if (!principal) return false;
  }
  return true;
}

std::vector<Shape> children(const Shape& s, bool modulo_iso) {
  std::vector<Shape> out;
  const std::size_t k = s.size();
  for (Mask d = 1; d < (Mask{1} << k); d += 2) {
    if (!can_extend(s, d)) continue;
    Shape child = s;
    child.push_back(d | (Mask{1} << k));
    if (modulo_iso && !shape_is_canonical(child)) continue;
    out.push_back(std::move(child));
  }
  return out;
}

std::optional<FiniteAlgebra> leaf(const Shape& s, bool distributive) {
  const std::size_t n = s.size() + 1;
  Order leq(n);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) leq(i, j) = (s[j] >> i) & 1u;
  for (std::size_t i = 0; i < n; ++i) leq(i, n - 1) = 1;
  auto a = lattice_from_order(leq);
  if (distributive && !is_distributive_lattice(a).distributive) return std::nullopt;
  return a;
}

void expand(const Shape& s, std::size_t m, const LatticeOptions& o, std::vector<FiniteAlgebra>& out) {
  if (s.size() == m) {
    if (auto a = leaf(s, o.distributive)) out.push_back(std::move(*a));
    return;
  }
  for (const auto& c : children(s, o.modulo_iso)) expand(c, m, o, out);
}

class SerialLattices {
 public:
  SerialLattices(std::size_t m, LatticeOptions o) : m_(m), o_(o) { stack_.push_back({{Shape{1}}, 0}); }

  std::optional<FiniteAlgebra> operator()() {
    while (!stack_.empty()) {
      auto& frame = stack_.back();
      if (frame.next == frame.shapes.size()) {
        stack_.pop_back();
        continue;
      }
      const Shape& s = frame.shapes[frame.next++];
      if (s.size() == m_) {
        if (auto a = leaf(s, o_.distributive)) return a;
        continue;
      }
      auto kids = children(s, o_.modulo_iso);
      stack_.push_back({std::move(kids), 0});
    }
    return std::nullopt;
  }

 private:
  struct Frame {
    std::vector<Shape> shapes;
    std::size_t next;
  };
  std::size_t m_;
  LatticeOptions o_;
  std::vector<Frame> stack_;
};

// Breadth-first frontier, then chunks of subtrees expanded in parallel and
// emitted in frontier order.
class ParallelLattices {
 public:
  ParallelLattices(std::size_t m, LatticeOptions o) : m_(m), o_(o) {
    std::vector<Shape> level{Shape{1}};
    const std::size_t want = 8 * static_cast<std::size_t>(o.jobs);
    while (level.front().size() < m && level.size() < want) {
      std::vector<Shape> next;
      for (const auto& s : level)
        for (auto& c : children(s, o.modulo_iso)) next.push_back(std::move(c));
      level = std::move(next);
      if (level.empty()) break;
    }
    frontier_ = std::move(level);
  }

  std::optional<FiniteAlgebra> operator()() {
    while (buffer_.empty() && cursor_ < frontier_.size()) fill();
    if (buffer_.empty()) return std::nullopt;
    auto a = std::move(buffer_.front());
    buffer_.pop_front();
    return a;
  }

 private:
  void fill() {
    const std::size_t chunk = std::min(frontier_.size() - cursor_, 4 * static_cast<std::size_t>(o_.jobs));
    std::vector<std::vector<FiniteAlgebra>> parts(chunk);
#pragma omp parallel for schedule(dynamic) num_threads(o_.jobs)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(chunk); ++i)
      expand(frontier_[cursor_ + static_cast<std::size_t>(i)], m_, o_, parts[static_cast<std::size_t>(i)]);
    cursor_ += chunk;
    for (auto& p : parts)
      for (auto& a : p) buffer_.push_back(std::move(a));
  }

  std::size_t m_;
  LatticeOptions o_;
  std::vector<Shape> frontier_;
  std::size_t cursor_ = 0;
  std::deque<FiniteAlgebra> buffer_;
};

}  // namespace

std::vector<FiniteAlgebra> AlgebraStream::collect() {
  std::vector<FiniteAlgebra> out;
  while (auto a = next()) out.push_back(std::move(*a));
  return out;
}

AlgebraStream enumerate_lattices(std::size_t n, LatticeOptions options) {
  if (n == 0) throw InputError("lattice size must be at least 1");
  if (n > kMaxElements) throw InputError("lattice size too large");
  if (options.jobs < 1) throw InputError("jobs must be at least 1");
  if (n == 1) {
    auto done = std::make_shared<bool>(false);
    return AlgebraStream([done]() -> std::optional<FiniteAlgebra> {
      if (*done) return std::nullopt;
      *done = true;
      Order leq(1);
      leq(0, 0) = 1;
      return lattice_from_order(leq);
    });
  }
  if (options.jobs == 1) return AlgebraStream(SerialLattices(n - 1, options));
  return AlgebraStream(ParallelLattices(n - 1, options));
}

std::vector<Elem> canonical_labelling(const FiniteAlgebra& lattice) {
  const std::size_t n = lattice.size();
  PartialLattice lat(lattice.leq);
  if (n == 0 || !lat.meets_total() || !lat.joins_total())
    throw PreconditionError("canonical labelling needs a lattice");
  if (n > kMaxElements) throw InputError("lattice too large for canonical labelling");
  const Elem top = *lat.greatest();
  std::vector<Elem> local;
  for (Elem x = 0; x < n; ++x)
    if (x != top) local.push_back(x);
  std::vector<Mask> down(local.size(), 0);
  for (std::size_t i = 0; i < local.size(); ++i)
    for (std::size_t j = 0; j < local.size(); ++j)
      if (i != j && lattice.le(local[j], local[i])) down[i] |= Mask{1} << j;
  std::vector<Elem> perm;
  if (!local.empty()) {
    MinLabeller labeller(down, strict_up_of(down));
    for (Elem e : labeller.run()) perm.push_back(local[e]);
  }
  perm.push_back(top);
  return perm;
}

bool is_canonical(const FiniteAlgebra& lattice) {
  const auto perm = canonical_labelling(lattice);
  return relabel(lattice, perm).leq == lattice.leq;
}

}  // namespace hemi
