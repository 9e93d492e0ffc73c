#include "hemi/congr.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hemi/document.hpp"
#include "hemi/kalman.hpp"

namespace hemi {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  Elem find(Elem x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(Elem x, Elem y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
    return true;
  }
  std::vector<Elem> labels() {
    std::vector<Elem> out(parent_.size());
    for (Elem x = 0; x < out.size(); ++x) out[x] = find(x);
    return out;
  }

 private:
  std::vector<Elem> parent_;
};

[[noreturn]] void violated(const std::string& what, const FiniteAlgebra& a) {
  throw TheoremViolation(what, serialize_algebra(a));
}

void require_khis0(const AlgebraView& t, const std::string& context) {
  auto r = check_khis0(t);
  if (!r.ok)
    throw PreconditionError(context + " requires a KhIS0 structure: " + r.violations[0].detail);
}

std::vector<std::optional<Elem>> center_positions(const FiniteAlgebra& t) {
  std::vector<std::optional<Elem>> pos(t.size());
  const auto elems = center_elements(t);
  for (Elem i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  return pos;
}

std::vector<Operation> center_operations(const FiniteAlgebra& c) {
  std::vector<Operation> ops;
  if (c.meet) ops.emplace_back(*c.meet);
  if (c.arrow) ops.emplace_back(*c.arrow);
  return ops;
}

bool compatible_with_all(const Congruence& theta, std::span<const Operation> ops) {
  return std::all_of(ops.begin(), ops.end(),
                     [&](const Operation& op) { return is_compatible(theta, op); });
}

std::vector<Operation> hemi_operations(const AlgebraView& h) {
  std::vector<Operation> ops;
  ops.emplace_back(h.bounds().meet_table());
  if (h.has_arrow()) ops.emplace_back(*h.algebra().arrow);
  if (h.algebra().join) ops.emplace_back(*h.algebra().join);
  return ops;
}

}  // namespace

Congruence::Congruence(std::span<const Elem> labels) : blocks_(labels.size()) {
  std::map<Elem, Elem> first;
  for (Elem x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = first.emplace(labels[x], x);
    blocks_[x] = it->second;
  }
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<Elem> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return Congruence(labels);
}

Congruence Congruence::total(std::size_t n) { return Congruence(std::vector<Elem>(n, 0)); }

Congruence Congruence::from_relation(const Order& rel) {
  const std::size_t n = rel.size();
  std::vector<Elem> labels(n);
  for (Elem x = 0; x < n; ++x) {
    if (!rel(x, x)) throw InputError("relation is not reflexive");
    labels[x] = x;
    for (Elem y = 0; y < n; ++y) {
      if (rel(x, y) != rel(y, x)) throw InputError("relation is not symmetric");
      if (rel(x, y) && y < labels[x]) labels[x] = y;
    }
  }
  Congruence c(labels);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (c.related(x, y) != static_cast<bool>(rel(x, y)))
        throw InputError("relation is not transitive");
  return c;
}

std::size_t Congruence::block_count() const {
  std::size_t count = 0;
  for (Elem x = 0; x < blocks_.size(); ++x)
    if (blocks_[x] == x) ++count;
  return count;
}

std::vector<Elem> Congruence::representatives() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < blocks_.size(); ++x)
    if (blocks_[x] == x) out.push_back(x);
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  for (Elem x = 0; x < blocks_.size(); ++x)
    if (!other.related(x, blocks_[x])) return false;
  return true;
}

std::string Congruence::describe() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < blocks_.size(); ++i) out << (i ? ", " : "") << blocks_[i];
  out << "]";
  return out.str();
}

Congruence join(const Congruence& a, const Congruence& b) {
  UnionFind uf(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    uf.unite(x, a.block(x));
    uf.unite(x, b.block(x));
  }
  return Congruence(uf.labels());
}

Congruence meet(const Congruence& a, const Congruence& b) {
  std::map<std::pair<Elem, Elem>, Elem> ids;
  std::vector<Elem> labels(a.size());
  for (Elem x = 0; x < a.size(); ++x)
    labels[x] = ids.emplace(std::pair{a.block(x), b.block(x)}, x).first->second;
  return Congruence(labels);
}

std::vector<Operation> operations_of(const FiniteAlgebra& a) {
  std::vector<Operation> ops;
  if (a.meet) ops.emplace_back(*a.meet);
  if (a.join) ops.emplace_back(*a.join);
  if (a.arrow) ops.emplace_back(*a.arrow);
  if (a.involution) ops.emplace_back(*a.involution);
  return ops;
}

bool is_compatible(const Congruence& theta, const Operation& op) {
  const auto n = static_cast<Elem>(theta.size());
  if (const auto* t = std::get_if<OpTable>(&op)) {
    for (Elem x = 0; x < n; ++x) {
      const Elem bx = theta.block(x);
      if (bx == x) continue;
      for (Elem z = 0; z < n; ++z) {
        if (!theta.related((*t)(x, z), (*t)(bx, z))) return false;
        if (!theta.related((*t)(z, x), (*t)(z, bx))) return false;
      }
    }
    return true;
  }
  const auto& g = std::get<std::vector<Elem>>(op);
  for (Elem x = 0; x < n; ++x)
    if (!theta.related(g[x], g[theta.block(x)])) return false;
  return true;
}

Congruence generated_congruence(std::size_t n, std::span<const Operation> ops,
                                std::span<const std::pair<Elem, Elem>> pairs) {
  UnionFind uf(n);
  std::deque<std::pair<Elem, Elem>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (!uf.unite(x, y)) continue;
    for (const auto& op : ops) {
      if (const auto* t = std::get_if<OpTable>(&op)) {
        for (Elem z = 0; z < n; ++z) {
          work.emplace_back((*t)(x, z), (*t)(y, z));
          work.emplace_back((*t)(z, x), (*t)(z, y));
        }
      } else {
        const auto& g = std::get<std::vector<Elem>>(op);
        work.emplace_back(g[x], g[y]);
      }
    }
  }
  return Congruence(uf.labels());
}

std::vector<Congruence> enumerate_congruences(std::size_t n, std::span<const Operation> ops) {
  std::set<Congruence> principals;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      const std::pair<Elem, Elem> p{x, y};
      principals.insert(generated_congruence(n, ops, std::span(&p, 1)));
    }
  std::set<Congruence> all{Congruence::identity(n)};
  std::deque<Congruence> work{Congruence::identity(n)};
  while (!work.empty()) {
    Congruence theta = std::move(work.front());
    work.pop_front();
    for (const auto& p : principals) {
      Congruence j = join(theta, p);
      if (all.insert(j).second) work.push_back(std::move(j));
    }
  }
  return {all.begin(), all.end()};
}

std::vector<Congruence> enumerate_congruences(const FiniteAlgebra& a) {
  const auto ops = operations_of(a);
  return enumerate_congruences(a.size(), ops);
}

WellBehavedReport is_well_behaved(const AlgebraView& t, const Congruence& theta,
                                  bool c3_everywhere) {
  t.require(kArrow | kInvolution | kCenter, "well-behaved congruence test");
  if (theta.size() != t.size()) throw InputError("congruence has the wrong carrier size");
  const auto n = static_cast<Elem>(t.size());
  const Elem c = t.center();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!theta.related(x, y)) continue;
      if (!theta.related(t.neg(x), t.neg(y))) return {false, "C1", {x, y}};
      for (Elem z = 0; z < n; ++z) {
        if (!theta.related(t.arrow(x, z), t.arrow(y, z))) return {false, "C1", {x, y, z}};
        if (!theta.related(t.arrow(z, x), t.arrow(z, y))) return {false, "C1", {z, x, y}};
      }
    }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem xc = t.join_or_throw(x, c, "C2"), yc = t.join_or_throw(y, c, "C2");
      Elem nxc = t.join_or_throw(t.neg(x), c, "C2"), nyc = t.join_or_throw(t.neg(y), c, "C2");
      const bool rhs = theta.related(xc, yc) && theta.related(nxc, nyc);
      if (theta.related(x, y) != rhs) return {false, "C2", {x, y}};
    }
  std::vector<Elem> scope;
  for (Elem x = 0; x < n; ++x)
    if (c3_everywhere || t.le(c, x)) scope.push_back(x);
  for (Elem x : scope)
    for (Elem y : scope) {
      if (!theta.related(x, y)) continue;
      for (Elem z : scope)
        for (Elem w : scope) {
          if (!theta.related(z, w)) continue;
          auto xz = t.meet(x, z), yw = t.meet(y, w);
          if (!xz || !yw) {
            if (c3_everywhere) continue;
            return {false, "C3", {x, y, z, w}};
          }
          if (!theta.related(*xz, *yw)) return {false, "C3", {x, y, z, w}};
        }
    }
  return {};
}

std::vector<Congruence> enumerate_wb_congruences(const AlgebraView& t) {
  require_khis0(t, "well-behaved congruence enumeration");
  const auto& a = t.algebra();
  const std::vector<Operation> ops{*a.arrow, *a.involution};
  std::vector<Congruence> out;
  for (auto& theta : enumerate_congruences(a.size(), ops))
    if (is_well_behaved(t, theta).ok) out.push_back(std::move(theta));
  return out;
}

Congruence gamma_restrict(const AlgebraView& t, const Congruence& theta) {
  if (!is_well_behaved(t, theta).ok) throw PreconditionError("gamma needs a well-behaved congruence");
  const auto elems = center_elements(t.algebra());
  std::vector<Elem> labels(elems.size());
  for (Elem i = 0; i < elems.size(); ++i) labels[i] = theta.block(elems[i]);
  Congruence g(labels);
  const auto c = center_algebra(t.algebra());
  if (!compatible_with_all(g, center_operations(c)))
    violated("gamma(theta) is not a congruence of C(T)", t.algebra());
  return g;
}

Congruence sigma_expand(const AlgebraView& t, const Congruence& tau) {
  const auto& a = t.algebra();
  const auto c = center_algebra(a);
  if (tau.size() != c.size()) throw InputError("tau has the wrong carrier size");
  if (!compatible_with_all(tau, center_operations(c)))
    throw PreconditionError("sigma needs a congruence of C(T)");
  const auto pos = center_positions(a);
  const auto n = static_cast<Elem>(t.size());
  const Elem cc = t.center();
  auto up = [&](Elem x) { return *pos[t.join_or_throw(x, cc, "sigma")]; };
  Order rel(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      rel(x, y) = tau.related(up(x), up(y)) && tau.related(up(t.neg(x)), up(t.neg(y)));
  Congruence s;
  try {
    s = Congruence::from_relation(rel);
  } catch (const InputError& e) {
    violated(std::string("sigma(tau) is not an equivalence: ") + e.what(), a);
  }
  auto wb = is_well_behaved(t, s);
  if (!wb.ok) violated("sigma(tau) is not well-behaved: " + wb.clause, a);
  return s;
}

std::vector<Elem> quotient_projection(const Congruence& theta) {
  const auto reps = theta.representatives();
  std::vector<Elem> pos(theta.size());
  for (Elem i = 0; i < reps.size(); ++i) pos[reps[i]] = i;
  std::vector<Elem> out(theta.size());
  for (Elem x = 0; x < theta.size(); ++x) out[x] = pos[theta.block(x)];
  return out;
}

FiniteAlgebra quotient_wb(const AlgebraView& t, const Congruence& theta) {
  const auto& a = t.algebra();
  require_khis0(t, "quotient");
  auto wb = is_well_behaved(t, theta);
  if (!wb.ok) throw PreconditionError("quotient needs a well-behaved congruence (" + wb.clause + " fails)");
  const auto n = static_cast<Elem>(t.size());
  const Elem c = t.center();
  const auto reps = theta.representatives();
  const auto proj = quotient_projection(theta);
  const auto m = static_cast<Elem>(reps.size());

  auto below = [&](Elem x, Elem y) {
    Elem xc = t.join_or_throw(x, c, "quotient"), yc = t.join_or_throw(y, c, "quotient");
    Elem nxc = t.join_or_throw(t.neg(x), c, "quotient");
    Elem nyc = t.join_or_throw(t.neg(y), c, "quotient");
    return theta.related(t.meet_or_throw(xc, yc, "quotient"), xc) &&
           theta.related(t.meet_or_throw(nyc, nxc, "quotient"), nyc);
  };
  FiniteAlgebra q{Order(m)};
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) q.leq(i, j) = below(reps[i], reps[j]);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (below(x, y) != static_cast<bool>(q.leq(proj[x], proj[y])))
        violated("<< depends on the choice of representatives", a);
  auto poset = validate_poset(q.leq);
  if (!poset.ok()) violated("<< is not a partial order: " + poset.violations[0].describe(), a);

  std::vector<Elem> neg(m);
  OpTable arrow(m);
  for (Elem i = 0; i < m; ++i) {
    neg[i] = proj[t.neg(reps[i])];
    for (Elem j = 0; j < m; ++j) arrow(i, j) = proj[t.arrow(reps[i], reps[j])];
  }
  q.involution = std::move(neg);
  q.arrow = std::move(arrow);
  q.center = proj[c];
  q.bottom = proj[t.bottom()];
  q.top = proj[t.top()];
  for (Elem r : reps) q.names.push_back("[" + a.name(r) + "]");

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (t.le(x, y) && !q.le(proj[x], proj[y])) violated("projection is not monotone", a);
  AlgebraView qv(q);
  auto battery = check_khis0(qv);
  if (!battery.ok) violated("quotient fails KhIS0: " + battery.violations[0].detail, a);
  return q;
}

Filter Filter::from_elements(std::size_t n, std::span<const Elem> elems) {
  std::vector<bool> members(n, false);
  for (Elem x : elems) {
    if (x >= n) throw InputError("filter element out of range");
    members[x] = true;
  }
  return Filter(std::move(members));
}

std::vector<Elem> Filter::elements() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < members_.size(); ++x)
    if (members_[x]) out.push_back(x);
  return out;
}

std::string Filter::describe(const FiniteAlgebra& a) const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (Elem x : elements()) {
    out << (first ? "" : ", ") << a.name(x);
    first = false;
  }
  out << "}";
  return out.str();
}

bool is_filter(const AlgebraView& h, const Filter& f) {
  const auto n = static_cast<Elem>(h.size());
  if (f.size() != n) return false;
  bool nonempty = false;
  for (Elem x = 0; x < n; ++x) {
    if (!f.contains(x)) continue;
    nonempty = true;
    for (Elem y = 0; y < n; ++y) {
      if (h.le(x, y) && !f.contains(y)) return false;
      if (f.contains(y)) {
        auto m = h.meet(x, y);
        if (!m || !f.contains(*m)) return false;
      }
    }
  }
  return nonempty;
}

std::vector<Filter> enumerate_filters(const AlgebraView& h) {
  h.require_total_meet("filter enumeration");
  const auto n = static_cast<Elem>(h.size());
  std::vector<Filter> out;
  for (Elem a = 0; a < n; ++a) {
    std::vector<bool> members(n);
    for (Elem x = 0; x < n; ++x) members[x] = h.le(a, x);
    out.emplace_back(std::move(members));
  }
  return out;
}

Elem biconditional(const AlgebraView& h, Elem a, Elem b) {
  return h.meet_or_throw(h.arrow(a, b), h.arrow(b, a), "biconditional");
}

Elem t_term(const AlgebraView& h, Elem a, Elem b, Elem f) {
  h.require(kArrow, "t-term");
  h.require_total_meet("t-term");
  Elem af = *h.meet(a, f), bf = *h.meet(b, f);
  return biconditional(h, h.arrow(a, b), h.arrow(af, bf));
}

CongruentFilterReport is_congruent_filter(const AlgebraView& h, const Filter& f) {
  if (!is_filter(h, f)) throw PreconditionError("congruent filter test needs a filter");
  const auto n = static_cast<Elem>(h.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem x = 0; x < n; ++x)
        if (f.contains(x) && !f.contains(t_term(h, a, b, x)))
          return {false, std::array<Elem, 3>{a, b, x}};
  return {};
}

Congruence theta_of_filter(const AlgebraView& h, const Filter& f) {
  if (!is_congruent_filter(h, f).ok) throw PreconditionError("theta needs a congruent filter");
  const auto n = static_cast<Elem>(h.size());
  Order rel(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem x = 0; x < n && !rel(a, b); ++x)
        if (f.contains(x) && *h.meet(a, x) == *h.meet(b, x)) rel(a, b) = 1;
  Congruence theta;
  try {
    theta = Congruence::from_relation(rel);
  } catch (const InputError& e) {
    violated(std::string("theta(F) is not an equivalence: ") + e.what(), h.algebra());
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (theta.related(a, b) != f.contains(biconditional(h, a, b)))
        violated("the two descriptions of theta(F) disagree", h.algebra());
  if (!compatible_with_all(theta, hemi_operations(h)))
    violated("theta(F) is not a congruence", h.algebra());
  return theta;
}

Filter congruent_filter_generated(const AlgebraView& h, std::span<const Elem> x) {
  h.require(kArrow | kTop, "congruent filter generation");
  h.require_total_meet("congruent filter generation");
  const auto n = static_cast<Elem>(h.size());
  Elem least = h.top();
  for (Elem e : x) {
    if (e >= n) throw InputError("generator out of range");
    least = *h.meet(least, e);
  }
  while (true) {
    Elem next = least;
    for (Elem f = 0; f < n; ++f) {
      if (!h.le(least, f)) continue;
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) next = *h.meet(next, t_term(h, a, b, f));
    }
    if (next == least) break;
    least = next;
  }
  std::vector<bool> members(n);
  for (Elem e = 0; e < n; ++e) members[e] = h.le(least, e);
  return Filter(std::move(members));
}

Filter one_class(const AlgebraView& h, const Congruence& theta) {
  h.require(kTop, "1/theta");
  std::vector<bool> members(h.size());
  for (Elem x = 0; x < h.size(); ++x) members[x] = theta.related(x, h.top());
  return Filter(std::move(members));
}

Congruence principal_wb_congruence(std::span<const Congruence> wb,
                                   std::span<const std::pair<Elem, Elem>> pairs) {
  if (wb.empty()) throw InputError("empty congruence list");
  std::optional<Congruence> out;
  for (const auto& theta : wb) {
    bool contains = std::all_of(pairs.begin(), pairs.end(),
                                [&](const auto& p) { return theta.related(p.first, p.second); });
    if (!contains) continue;
    out = out ? meet(*out, theta) : theta;
  }
  if (!out) throw InputError("no congruence in the list contains the pairs");
  return *out;
}

Congruence principal_wb_congruence(const AlgebraView& t,
                                   std::span<const std::pair<Elem, Elem>> pairs) {
  for (const auto& [x, y] : pairs)
    if (x >= t.size() || y >= t.size()) throw InputError("pair out of range");
  const auto wb = enumerate_wb_congruences(t);
  return principal_wb_congruence(wb, pairs);
}

Elem q_term(const AlgebraView& t, Elem x, Elem y) {
  t.require(kArrow | kInvolution | kCenter, "q-term");
  const Elem c = t.center();
  auto up = [&](Elem e) {
    auto j = t.join(e, c);
    if (!j) throw InputError("q-term: " + t.algebra().name(e) + "|c does not exist");
    return *j;
  };
  auto iff = [&](Elem a, Elem b) {
    auto m = t.meet(t.arrow(a, b), t.arrow(b, a));
    if (!m) throw InputError("q-term: a required meet does not exist");
    return *m;
  };
  auto m = t.meet(iff(up(x), up(y)), iff(up(t.neg(x)), up(t.neg(y))));
  if (!m) throw InputError("q-term: a required meet does not exist");
  return *m;
}

}  // namespace hemi
