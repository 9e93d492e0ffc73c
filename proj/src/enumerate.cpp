#include <algorithm>
#include <memory>

#include "hemi/finord.hpp"
#include "hemi/search.hpp"
#include "hemi/varieties.hpp"
#include "search_internal.hpp"

namespace hemi {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

class IsoSearch {
 public:
  IsoSearch(const FiniteAlgebra& a, const FiniteAlgebra& b, bool all)
      : a_(a), b_(b), all_(all), f_(a.size(), kUnset), used_(b.size(), false) {
    inv_a_ = invariants(a);
    inv_b_ = invariants(b);
  }

  std::vector<std::vector<Elem>> run() {
    if (a_.size() == b_.size()) {
      auto sa = inv_a_, sb = inv_b_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa == sb) dfs(0);
    }
    return std::move(found_);
  }

 private:
  using Invariant = std::array<std::size_t, 3>;

  static std::vector<Invariant> invariants(const FiniteAlgebra& x) {
    std::vector<Invariant> out(x.size(), Invariant{0, 0, 0});
    for (Elem i = 0; i < x.size(); ++i) {
      for (Elem j = 0; j < x.size(); ++j) {
        if (x.le(j, i)) ++out[i][0];
        if (x.le(i, j)) ++out[i][1];
      }
      if (x.involution && (*x.involution)[i] == i) out[i][2] = 1;
    }
    return out;
  }

  bool constant_ok(const std::optional<Elem>& ca, const std::optional<Elem>& cb, Elem x, Elem y) const {
    if (!ca) return true;
    return (*ca == x) == (*cb == y);
  }

  bool consistent(Elem x, Elem y) const {
    if (inv_a_[x] != inv_b_[y]) return false;
    if (!constant_ok(a_.bottom, b_.bottom, x, y) || !constant_ok(a_.top, b_.top, x, y) ||
        !constant_ok(a_.center, b_.center, x, y))
      return false;
    for (Elem p = 0; p < x; ++p) {
      if (a_.le(x, p) != b_.le(y, f_[p])) return false;
      if (a_.le(p, x) != b_.le(f_[p], y)) return false;
    }
    if (a_.involution) {
      const Elem nx = (*a_.involution)[x];
      const Elem ny = (*b_.involution)[y];
      if (nx == x && ny != y) return false;
      if (nx < x && ny != f_[nx]) return false;
    }
    return true;
  }

  bool tables_ok() const {
    auto check = [&](const std::optional<OpTable>& ta, const std::optional<OpTable>& tb) {
      if (!ta) return true;
      for (Elem p = 0; p < a_.size(); ++p)
        for (Elem q = 0; q < a_.size(); ++q)
          if (f_[(*ta)(p, q)] != (*tb)(f_[p], f_[q])) return false;
      return true;
    };
    return check(a_.meet, b_.meet) && check(a_.join, b_.join) && check(a_.arrow, b_.arrow);
  }

  bool dfs(Elem x) {
    if (x == a_.size()) {
      if (!tables_ok()) return false;
      found_.push_back(f_);
      return !all_;
    }
    for (Elem y = 0; y < b_.size(); ++y) {
      if (used_[y] || !consistent(x, y)) continue;
      f_[x] = y;
      used_[y] = true;
      const bool stop = dfs(x + 1);
      used_[y] = false;
      f_[x] = kUnset;
      if (stop) return true;
    }
    return false;
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  bool all_;
  std::vector<Elem> f_;
  std::vector<bool> used_;
  std::vector<Invariant> inv_a_;
  std::vector<Invariant> inv_b_;
  std::vector<std::vector<Elem>> found_;
};

bool is_implicative_label(VarietyLabel label) {
  switch (label) {
    case VarietyLabel::hIS0:
    case VarietyLabel::Hil0:
    case VarietyLabel::IS0:
    case VarietyLabel::hBDL:
    case VarietyLabel::SH:
    case VarietyLabel::HA:
      return true;
    default:
      return false;
  }
}

bool needs_join(VarietyLabel label) {
  return label == VarietyLabel::hBDL || label == VarietyLabel::SH || label == VarietyLabel::HA;
}

// Per-cell candidate values; necessary conditions shared by each class.
std::vector<std::vector<Elem>> arrow_domains(const FiniteAlgebra& base, VarietyLabel label) {
  AlgebraView v(base);
  const auto n = static_cast<Elem>(base.size());
  const Elem top = *base.top;
  std::vector<std::vector<Elem>> dom(std::size_t{n} * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      auto& d = dom[std::size_t{x} * n + y];
      if (x == y) {
        d = {top};
        continue;
      }
      const Elem xy = *v.meet(x, y);
      if (label == VarietyLabel::IS0 || label == VarietyLabel::HA) {
        if (auto r = relative_pseudocomplement(v, x, y)) d = {*r};
        continue;
      }
      const bool equality = label == VarietyLabel::Hil0 || label == VarietyLabel::SH;
      for (Elem z = 0; z < n; ++z) {
        const Elem xz = *v.meet(x, z);
        if (equality ? xz == xy : base.le(xz, y)) d.push_back(z);
      }
    }
  return dom;
}

// Least under conjugation by every automorphism.
bool table_is_orbit_min(const OpTable& t, const std::vector<std::vector<Elem>>& autos) {
  const auto n = static_cast<Elem>(t.size());
  for (const auto& s : autos) {
    std::vector<Elem> inv(n);
    for (Elem x = 0; x < n; ++x) inv[s[x]] = x;
    for (Elem x = 0; x < n; ++x) {
      bool decided = false;
      for (Elem y = 0; y < n; ++y) {
        const Elem c = s[t(inv[x], inv[y])];
        if (c < t(x, y)) return false;
        if (c > t(x, y)) {
          decided = true;
          break;
        }
      }
      if (decided) break;
    }
  }
  return true;
}

bool involution_is_orbit_min(const std::vector<Elem>& neg, const std::vector<std::vector<Elem>>& autos) {
  const auto n = static_cast<Elem>(neg.size());
  for (const auto& s : autos) {
    std::vector<Elem> inv(n);
    for (Elem x = 0; x < n; ++x) inv[s[x]] = x;
    for (Elem x = 0; x < n; ++x) {
      const Elem c = s[neg[inv[x]]];
      if (c < neg[x]) return false;
      if (c > neg[x]) break;
    }
  }
  return true;
}

// Instances of the multi-cell laws whose arrow cells are all assigned. Used
// only to prune; the full checker still judges every complete table.
class PartialArrowLaws {
 public:
  PartialArrowLaws(const FiniteAlgebra& base, VarietyLabel label)
      : n_(static_cast<Elem>(base.size())), top_(*base.top), meet_(*base.meet), leq_(base.leq), label_(label) {}

  bool consistent(const OpTable& t, const std::vector<bool>& set) const {
    auto get = [&](std::optional<Elem> x, std::optional<Elem> y) -> std::optional<Elem> {
      if (!x || !y || !set[std::size_t{*x} * n_ + *y]) return std::nullopt;
      return t(*x, *y);
    };
    switch (label_) {
      case VarietyLabel::SH:
        for (Elem a = 0; a < n_; ++a)
          for (Elem b = 0; b < n_; ++b)
            for (Elem d = 0; d < n_; ++d) {
              auto l = get(b, d), r = get(meet_(a, b), meet_(a, d));
              if (l && r && meet_(a, *l) != meet_(a, *r)) return false;
            }
        return true;
      case VarietyLabel::Hil0:
        for (Elem a = 0; a < n_; ++a)
          for (Elem b = 0; b < n_; ++b) {
            if (auto v = get(a, get(b, a)); v && *v != top_) return false;
            if (a != b) {
              auto ab = get(a, b), ba = get(b, a);
              if (ab && ba && *ab == top_ && *ba == top_) return false;
            }
            for (Elem d = 0; d < n_; ++d) {
              auto l = get(a, get(b, d)), r = get(get(a, b), get(a, d));
              if (l && r && *l != *r) return false;
              auto m = get(a, meet_(b, d)), ab = get(a, b), ad = get(a, d);
              if (m && ab && ad && !leq_(*m, meet_(*ab, *ad))) return false;
            }
          }
        return true;
      default:
        return true;
    }
  }

 private:
  Elem n_;
  Elem top_;
  const OpTable& meet_;
  const Order& leq_;
  VarietyLabel label_;
};

// Depth-first over cells in row-major order.
class ArrowTables {
 public:
  ArrowTables(FiniteAlgebra base, VarietyLabel label, bool modulo_iso)
      : base_(std::move(base)), label_(label), dom_(arrow_domains(base_, label)) {
    done_ = std::any_of(dom_.begin(), dom_.end(), [](const auto& d) { return d.empty(); });
    if (modulo_iso) autos_ = automorphisms(base_);
    n_ = static_cast<Elem>(base_.size());
    t_ = OpTable(n_);
    set_.assign(dom_.size(), false);
    idx_.assign(dom_.size(), 0);
    laws_.emplace(base_, label_);
  }

  ArrowTables(const ArrowTables& o)
      : base_(o.base_), label_(o.label_), dom_(o.dom_), autos_(o.autos_), n_(o.n_), t_(o.t_), set_(o.set_),
        idx_(o.idx_), depth_(o.depth_), started_(o.started_), done_(o.done_) {
    laws_.emplace(base_, label_);
  }

  std::optional<FiniteAlgebra> operator()() {
    while (!done_) {
      if (!step()) continue;
      if (!autos_.empty() && !table_is_orbit_min(t_, autos_)) continue;
      FiniteAlgebra a = base_;
      a.arrow = t_;
      AlgebraView v(a);
      if (check(label_, v).ok) return a;
    }
    return std::nullopt;
  }

 private:
  // Advances to the next complete, locally consistent table; false if the
  // search is exhausted before one is found.
  bool step() {
    const std::size_t cells = dom_.size();
    if (!started_) {
      started_ = true;
      depth_ = 0;
      idx_[0] = 0;
    } else {
      // resume after the last leaf
      depth_ = cells - 1;
      ++idx_[depth_];
    }
    while (true) {
      if (idx_[depth_] >= dom_[depth_].size()) {
        set_[depth_] = false;
        if (depth_ == 0) {
          done_ = true;
          return false;
        }
        --depth_;
        ++idx_[depth_];
        continue;
      }
      t_(depth_ / n_, depth_ % n_) = dom_[depth_][idx_[depth_]];
      set_[depth_] = true;
      if (!laws_->consistent(t_, set_)) {
        ++idx_[depth_];
        continue;
      }
      if (depth_ + 1 == cells) return true;
      ++depth_;
      idx_[depth_] = 0;
    }
  }

  FiniteAlgebra base_;
  VarietyLabel label_;
  std::vector<std::vector<Elem>> dom_;
  std::vector<std::vector<Elem>> autos_;
  Elem n_ = 0;
  OpTable t_;
  std::vector<bool> set_;
  std::vector<std::size_t> idx_;
  std::size_t depth_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::optional<PartialArrowLaws> laws_;
};

class Involutions {
 public:
  Involutions(const FiniteAlgebra& lattice, InvolutionKind kind) : a_(lattice), kind_(kind), neg_(lattice.size(), kUnset) {}

  std::vector<std::vector<Elem>> run() {
    dfs();
    return std::move(found_);
  }

 private:
  bool reverses(Elem p) const {
    for (Elem q = 0; q < a_.size(); ++q) {
      if (neg_[q] == kUnset) continue;
      if (a_.le(p, q) != a_.le(neg_[q], neg_[p])) return false;
      if (a_.le(q, p) != a_.le(neg_[p], neg_[q])) return false;
    }
    return true;
  }

  bool accept() const {
    if (kind_ == InvolutionKind::DeMorgan) return true;
    const auto n = static_cast<Elem>(a_.size());
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (!a_.le((*a_.meet)(x, neg_[x]), (*a_.join)(y, neg_[y]))) return false;
    if (kind_ == InvolutionKind::Kleene) return true;
    for (Elem x = 0; x < n; ++x)
      if (neg_[x] == x) return true;
    return false;
  }

  void dfs() {
    auto it = std::find(neg_.begin(), neg_.end(), kUnset);
    if (it == neg_.end()) {
      if (accept()) found_.push_back(neg_);
      return;
    }
    const auto x = static_cast<Elem>(it - neg_.begin());
    for (Elem v = x; v < a_.size(); ++v) {
      if (neg_[v] != kUnset) continue;
      neg_[x] = v;
      neg_[v] = x;
      if (reverses(x) && reverses(v)) dfs();
      neg_[x] = kUnset;
      neg_[v] = kUnset;
    }
  }

  const FiniteAlgebra& a_;
  InvolutionKind kind_;
  std::vector<Elem> neg_;
  std::vector<std::vector<Elem>> found_;
};

}  // namespace

IsomorphismResult are_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (signature_of(a) != signature_of(b))
    throw InputError("cannot compare algebras with signatures " + describe(signature_of(a)) +
                     " and " + describe(signature_of(b)));
  auto maps = IsoSearch(a, b, false).run();
  if (maps.empty()) return {};
  return {true, std::move(maps.front())};
}

std::vector<std::vector<Elem>> automorphisms(const FiniteAlgebra& a) {
  return IsoSearch(a, a, true).run();
}

AlgebraStream enumerate_arrow_tables(const FiniteAlgebra& base, VarietyLabel label, bool modulo_iso) {
  if (!is_implicative_label(label))
    throw InputError("arrow tables are enumerated only for hIS0, Hil0, IS0, hBDL, SH and HA");
  PartialLattice lat(base.leq);
  if (!lat.meets_total() || !lat.least() || !lat.greatest())
    throw PreconditionError("arrow enumeration needs a bounded meet-semilattice");
  Signature keep = kMeet | kBottom | kTop;
  if (needs_join(label)) {
    if (!lat.joins_total()) throw PreconditionError("arrow enumeration for this class needs a lattice");
    keep |= kJoin;
  }
  FiniteAlgebra b = reduct(base, keep);
  b.meet = lat.meet_table();
  if (needs_join(label)) b.join = lat.join_table();
  b.bottom = lat.least();
  b.top = lat.greatest();
  return AlgebraStream(ArrowTables(std::move(b), label, modulo_iso));
}

std::vector<FiniteAlgebra> involutive_expansions(const FiniteAlgebra& lattice, InvolutionKind kind,
                                                 bool modulo_iso) {
  std::vector<std::vector<Elem>> autos;
  if (modulo_iso) autos = automorphisms(reduct(lattice, 0));
  std::vector<FiniteAlgebra> out;
  for (auto& neg : Involutions(lattice, kind).run()) {
    if (modulo_iso && !involution_is_orbit_min(neg, autos)) continue;
    FiniteAlgebra a = lattice;
    if (kind == InvolutionKind::CenteredKleene)
      for (Elem x = 0; x < neg.size(); ++x)
        if (neg[x] == x) a.center = x;
    a.involution = std::move(neg);
    out.push_back(std::move(a));
  }
  return out;
}

AlgebraStream enumerate_involutive(std::size_t n, InvolutionKind kind, bool modulo_iso) {
  struct State {
    AlgebraStream lattices;
    std::vector<FiniteAlgebra> pending;
    std::size_t next = 0;
  };
  auto st = std::make_shared<State>();
  st->lattices = enumerate_lattices(n, {.distributive = true, .modulo_iso = modulo_iso});
  return AlgebraStream([st, kind, modulo_iso]() -> std::optional<FiniteAlgebra> {
    while (st->next == st->pending.size()) {
      auto l = st->lattices.next();
      if (!l) return std::nullopt;
      st->pending = involutive_expansions(*l, kind, modulo_iso);
      st->next = 0;
    }
    return std::move(st->pending[st->next++]);
  });
}

AlgebraStream enumerate_centered_kleene(std::size_t n, bool modulo_iso) {
  return enumerate_involutive(n, InvolutionKind::CenteredKleene, modulo_iso);
}

}  // namespace hemi
