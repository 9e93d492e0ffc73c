#include "hemi/kalman.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "axioms.hpp"
#include "hemi/document.hpp"
#include "hemi/finord.hpp"

namespace hemi {

namespace {

struct LevelName {
  KalmanLevel level;
  std::string_view name;
};

constexpr LevelName kLevelNames[] = {
    {KalmanLevel::Poset, "poset"},
    {KalmanLevel::Semilattice, "ms"},
    {KalmanLevel::HemiImplicative, "his"},
    {KalmanLevel::Lattice, "bdl"},
    {KalmanLevel::HemiImplicativeLattice, "hbdl"},
    {KalmanLevel::Heyting, "ha"},
};

[[noreturn]] void violated(const std::string& what, const FiniteAlgebra& witness) {
  throw TheoremViolation(what, serialize_algebra(witness));
}

std::string pair_name(const FiniteAlgebra& src, Elem a, Elem b) {
  return "(" + src.name(a) + "," + src.name(b) + ")";
}

KalmanAlgebra construct(const FiniteAlgebra& source, bool heyting, bool asserted) {
  KalmanAlgebra k;
  k.source = source;
  k.pairs = kalman_pairs(source);
  const auto n = static_cast<Elem>(source.size());
  const auto m = static_cast<Elem>(k.pairs.size());
  std::vector<std::optional<Elem>> index(std::size_t{n} * n);
  for (Elem i = 0; i < m; ++i) index[k.pairs[i].first * n + k.pairs[i].second] = i;

  auto fail = [&](const std::string& what) {
    if (asserted) violated("Kalman construction: " + what, source);
    throw PreconditionError("Kalman construction: " + what);
  };
  auto at = [&](Elem a, Elem b, const char* op) -> Elem {
    auto i = index[a * n + b];
    if (!i) fail(std::string(op) + " produced " + pair_name(source, a, b) + ", which is not a Kalman pair");
    return *i;
  };

  FiniteAlgebra& t = k.algebra;
  t.leq = Order(m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      const auto [a, b] = k.pairs[i];
      const auto [d, e] = k.pairs[j];
      t.leq(i, j) = source.le(a, d) && source.le(e, b);
    }
  t.names.reserve(m);
  for (const auto& p : k.pairs) t.names.push_back(pair_name(source, p.first, p.second));

  std::vector<Elem> neg(m);
  for (Elem i = 0; i < m; ++i) neg[i] = at(k.pairs[i].second, k.pairs[i].first, "~");
  t.involution = std::move(neg);
  const Elem zero = *source.bottom;
  t.center = at(zero, zero, "c");
  if (source.top) {
    t.bottom = at(zero, *source.top, "0");
    t.top = at(*source.top, zero, "1");
  }

  PartialLattice lat(source.leq);
  auto sm = [&](Elem x, Elem y) {
    auto r = lat.meet(x, y);
    if (!r) fail("source meet of " + source.name(x) + " and " + source.name(y) + " does not exist");
    return *r;
  };
  auto sj = [&](Elem x, Elem y) {
    auto r = lat.join(x, y);
    if (!r) fail("source join of " + source.name(x) + " and " + source.name(y) + " does not exist");
    return *r;
  };

  if (source.meet && source.join) {
    OpTable meet(m), join(m);
    for (Elem i = 0; i < m; ++i)
      for (Elem j = 0; j < m; ++j) {
        const auto [a, b] = k.pairs[i];
        const auto [d, e] = k.pairs[j];
        join(i, j) = at(sj(a, d), sm(b, e), "join");
        meet(i, j) = at(sm(a, d), sj(b, e), "meet");
      }
    t.meet = std::move(meet);
    t.join = std::move(join);
  }

  if (source.arrow) {
    const OpTable& to = *source.arrow;
    OpTable arrow(m);
    for (Elem i = 0; i < m; ++i)
      for (Elem j = 0; j < m; ++j) {
        const auto [a, b] = k.pairs[i];
        const auto [d, e] = k.pairs[j];
        arrow(i, j) = at(sm(to(a, d), to(e, b)), sm(a, e), "->");
      }
    t.arrow = std::move(arrow);
    if (heyting) {
      OpTable weak(m), star(m);
      for (Elem i = 0; i < m; ++i)
        for (Elem j = 0; j < m; ++j) {
          const auto [a, b] = k.pairs[i];
          const auto [d, e] = k.pairs[j];
          weak(i, j) = at(to(a, d), sm(a, e), "=>");
          star(i, j) = at(sm(a, d), sm(to(a, e), to(d, b)), "*");
        }
      k.weak_implication = std::move(weak);
      k.star = std::move(star);
    }
  }
  return k;
}

void require_ok(const CheckReport& r, const std::string& context) {
  if (!r.ok) {
    std::string why = r.violations.empty() ? "" : ": " + r.violations[0].detail;
    throw PreconditionError(context + " requires " + r.label + why);
  }
}

void assert_ok(const CheckReport& r, const std::string& context, const FiniteAlgebra& w) {
  if (!r.ok) {
    std::string why = r.violations.empty() ? "" : ": " + r.violations[0].detail;
    violated(context + " fails " + r.label + why, w);
  }
}

void assert_ck(const AlgebraView& v, const std::string& context) {
  auto ck = check_ck(v);
  if (!ck.holds)
    violated(context + " fails CK at (" + v.algebra().name(ck.witness->first) + ", " +
                 v.algebra().name(ck.witness->second) + ")",
             v.algebra());
}

// Reduces to the level's signature and fills tables and bounds the order
// determines but the document omitted.
FiniteAlgebra prepare_source(const FiniteAlgebra& h, KalmanLevel level) {
  const Signature sig = level_signature(level);
  FiniteAlgebra src = reduct(h, sig);
  PartialLattice lat(src.leq);
  if ((sig & kMeet) && !src.meet && lat.meets_total()) src.meet = lat.meet_table();
  if ((sig & kJoin) && !src.join && lat.joins_total()) src.join = lat.join_table();
  if ((sig & kBottom) && !src.bottom) src.bottom = lat.least();
  if ((sig & kTop) && !src.top) src.top = lat.greatest();
  return src;
}

std::vector<std::optional<Elem>> center_index(const FiniteAlgebra& t,
                                               const std::vector<Elem>& elems) {
  std::vector<std::optional<Elem>> idx(t.size());
  for (Elem i = 0; i < elems.size(); ++i) idx[elems[i]] = i;
  return idx;
}

}  // namespace

std::string_view to_string(KalmanLevel level) {
  for (const auto& ln : kLevelNames)
    if (ln.level == level) return ln.name;
  return "?";
}

FiniteAlgebra level_reduct(const FiniteAlgebra& h, KalmanLevel level) {
  return prepare_source(h, level);
}

KalmanLevel parse_level(std::string_view name) {
  for (const auto& ln : kLevelNames)
    if (ln.name == name) return ln.level;
  throw InputError("unknown level: " + std::string(name) +
                   " (expected poset, ms, his, bdl, hbdl or ha)");
}

Signature level_signature(KalmanLevel level) {
  switch (level) {
    case KalmanLevel::Poset: return kBottom | kTop;
    case KalmanLevel::Semilattice: return kMeet | kBottom | kTop;
    case KalmanLevel::HemiImplicative: return kMeet | kArrow | kBottom | kTop;
    case KalmanLevel::Lattice: return kMeet | kJoin | kBottom | kTop;
    case KalmanLevel::HemiImplicativeLattice:
    case KalmanLevel::Heyting: return kMeet | kJoin | kArrow | kBottom | kTop;
  }
  return 0;
}

std::optional<Elem> KalmanAlgebra::index_of(Elem a, Elem b) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), KalmanPair{a, b});
  if (it == pairs.end() || *it != KalmanPair{a, b}) return std::nullopt;
  return static_cast<Elem>(it - pairs.begin());
}

std::vector<KalmanPair> kalman_pairs(const FiniteAlgebra& p) {
  if (!p.bottom) throw PreconditionError("Kalman pairs need a bottom element");
  PartialLattice lat(p.leq);
  std::vector<KalmanPair> out;
  const auto n = static_cast<Elem>(p.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (lat.meet(a, b) == p.bottom) out.push_back({a, b});
  return out;
}

KalmanAlgebra kalman_construct(const FiniteAlgebra& source) {
  return construct(source, false, false);
}

KalmanAlgebra kalman_of(const FiniteAlgebra& h, KalmanLevel level) {
  const FiniteAlgebra src = prepare_source(h, level);
  const std::string context = "K(-) at level " + std::string(to_string(level));
  AlgebraView sv(src);
  switch (level) {
    case KalmanLevel::Poset: {
      auto poset = validate_poset(src.leq);
      if (!poset.ok()) throw PreconditionError(context + " requires a poset");
      if (!src.bottom) throw PreconditionError(context + " requires a bottom");
      auto k = construct(src, false, true);
      AlgebraView kv(k.algebra);
      assert_ok(check_kleene_poset(kv), context, k.algebra);
      assert_ck(kv, context);
      return k;
    }
    case KalmanLevel::Semilattice: {
      require_ok(check_bounded_semilattice(sv), context);
      auto k = construct(src, false, true);
      AlgebraView kv(k.algebra);
      assert_ok(check_kms(kv), context, k.algebra);
      assert_ck(kv, context);
      return k;
    }
    case KalmanLevel::HemiImplicative: {
      require_ok(check_hemi_implicative_semilattice(sv), context);
      auto k = construct(src, false, true);
      AlgebraView kv(k.algebra);
      assert_ok(check_khis0(kv), context, k.algebra);
      assert_ck(kv, context);
      return k;
    }
    case KalmanLevel::Lattice: {
      require_ok(check_distributive_lattice(sv), context);
      auto k = construct(src, false, true);
      AlgebraView kv(k.algebra);
      assert_ok(check_centered_kleene(kv), context, k.algebra);
      assert_ck(kv, context);
      return k;
    }
    case KalmanLevel::HemiImplicativeLattice: {
      require_ok(check_hemi_implicative_lattice(sv), context);
      auto k = construct(src, false, true);
      AlgebraView kv(k.algebra);
      assert_ok(check_centered_kleene(kv), context, k.algebra);
      assert_ok(check_khis0(kv), context, k.algebra);
      assert_ck(kv, context);
      return k;
    }
    case KalmanLevel::Heyting: {
      require_ok(check_heyting(sv), context);
      auto k = construct(src, true, true);
      AlgebraView kv(k.algebra);
      assert_ok(check_centered_kleene(kv), context, k.algebra);
      assert_ok(check_nelson_lattice(kv), context, k.algebra);
      assert_ck(kv, context);
      return k;
    }
  }
  throw InputError("unknown level");
}

KalmanAlgebra kalman_of_poset(const FiniteAlgebra& p) { return kalman_of(p, KalmanLevel::Poset); }
KalmanAlgebra kalman_of_semilattice(const FiniteAlgebra& h) {
  return kalman_of(h, KalmanLevel::Semilattice);
}
KalmanAlgebra kalman_of_his(const FiniteAlgebra& h) {
  return kalman_of(h, KalmanLevel::HemiImplicative);
}
KalmanAlgebra kalman_of_bdl(const FiniteAlgebra& h) { return kalman_of(h, KalmanLevel::Lattice); }
KalmanAlgebra kalman_of_hbdl(const FiniteAlgebra& h) {
  return kalman_of(h, KalmanLevel::HemiImplicativeLattice);
}
KalmanAlgebra kalman_of_heyting(const FiniteAlgebra& h) {
  return kalman_of(h, KalmanLevel::Heyting);
}

std::vector<Elem> center_elements(const FiniteAlgebra& t) {
  if (!t.center) throw PreconditionError("center construction needs a center");
  std::vector<Elem> out;
  for (Elem x = 0; x < t.size(); ++x)
    if (t.le(*t.center, x)) out.push_back(x);
  return out;
}

FiniteAlgebra center_algebra(const FiniteAlgebra& t) {
  const auto elems = center_elements(t);
  const auto idx = center_index(t, elems);
  const auto m = static_cast<Elem>(elems.size());
  FiniteAlgebra c{Order(m)};
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) c.leq(i, j) = t.leq(elems[i], elems[j]);
  if (!t.names.empty())
    for (Elem x : elems) c.names.push_back(t.names[x]);

  PartialLattice lat(t.leq);
  bool meets = true;
  OpTable meet(m);
  for (Elem i = 0; i < m && meets; ++i)
    for (Elem j = 0; j < m && meets; ++j) {
      auto r = lat.meet(elems[i], elems[j]);
      if (!r) meets = false;
      else meet(i, j) = *idx[*r];
    }
  if (meets) c.meet = std::move(meet);
  if (t.join) {
    OpTable join(m);
    for (Elem i = 0; i < m; ++i)
      for (Elem j = 0; j < m; ++j) join(i, j) = *idx[(*t.join)(elems[i], elems[j])];
    c.join = std::move(join);
  }
  if (t.arrow) {
    OpTable arrow(m);
    for (Elem i = 0; i < m; ++i)
      for (Elem j = 0; j < m; ++j) {
        Elem r = (*t.arrow)(elems[i], elems[j]);
        if (!idx[r])
          throw PreconditionError("C(T) is not closed under ->: " + t.name(elems[i]) + "->" +
                                  t.name(elems[j]) + " = " + t.name(r) +
                                  " is not above c (K1 fails)");
        arrow(i, j) = *idx[r];
      }
    c.arrow = std::move(arrow);
  }
  c.bottom = *idx[*t.center];
  if (t.top) c.top = idx[*t.top];
  return c;
}

bool PreservationReport::operations_preserved() const {
  for (const auto& f : {meet, join, arrow, involution, bottom, top, center})
    if (f && !*f) return false;
  return true;
}

bool PreservationReport::isomorphism() const {
  return total && injective && surjective && order_preserving && order_reflecting &&
         existing_meets && existing_joins && operations_preserved();
}

std::string PreservationReport::describe() const {
  std::ostringstream out;
  auto flag = [&](const char* name, bool v) { out << name << "=" << (v ? "yes" : "no") << " "; };
  auto opt = [&](const char* name, const std::optional<bool>& v) {
    if (v) flag(name, *v);
  };
  flag("injective", injective);
  flag("surjective", surjective);
  flag("monotone", order_preserving);
  flag("reflects-order", order_reflecting);
  flag("meets", existing_meets);
  flag("joins", existing_joins);
  opt("meet-table", meet);
  opt("join-table", join);
  opt("arrow", arrow);
  opt("neg", involution);
  opt("bottom", bottom);
  opt("top", top);
  opt("center", center);
  auto s = out.str();
  if (!s.empty()) s.pop_back();
  return s;
}

Morphism::Morphism(FiniteAlgebra dom, FiniteAlgebra cod, std::vector<Elem> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (map_.size() != dom_.size()) throw InputError("morphism map is not total on its domain");
  for (Elem y : map_)
    if (y >= cod_.size()) throw InputError("morphism map leaves its codomain");
}

PreservationReport Morphism::report() const {
  PreservationReport r;
  const auto n = static_cast<Elem>(dom_.size());
  const auto m = static_cast<Elem>(cod_.size());
  const auto& f = map_;
  std::vector<bool> hit(m, false);
  for (Elem x = 0; x < n; ++x) {
    if (hit[f[x]]) r.injective = false;
    hit[f[x]] = true;
  }
  for (Elem y = 0; y < m; ++y)
    if (!hit[y]) r.surjective = false;
  PartialLattice dl(dom_.leq), cl(cod_.leq);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const bool le = dom_.le(x, y), fle = cod_.le(f[x], f[y]);
      if (le && !fle) r.order_preserving = false;
      if (fle && !le) r.order_reflecting = false;
      if (auto mm = dl.meet(x, y); mm && cl.meet(f[x], f[y]) != f[*mm]) r.existing_meets = false;
      if (auto jj = dl.join(x, y); jj && cl.join(f[x], f[y]) != f[*jj]) r.existing_joins = false;
    }
  auto table = [&](const std::optional<OpTable>& a, const std::optional<OpTable>& b)
      -> std::optional<bool> {
    if (!a || !b) return std::nullopt;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (f[(*a)(x, y)] != (*b)(f[x], f[y])) return false;
    return true;
  };
  auto constant = [&](const std::optional<Elem>& a, const std::optional<Elem>& b)
      -> std::optional<bool> {
    if (!a || !b) return std::nullopt;
    return f[*a] == *b;
  };
  r.meet = table(dom_.meet, cod_.meet);
  r.join = table(dom_.join, cod_.join);
  r.arrow = table(dom_.arrow, cod_.arrow);
  if (dom_.involution && cod_.involution) {
    bool ok = true;
    for (Elem x = 0; x < n; ++x)
      if (f[(*dom_.involution)[x]] != (*cod_.involution)[f[x]]) ok = false;
    r.involution = ok;
  }
  r.bottom = constant(dom_.bottom, cod_.bottom);
  r.top = constant(dom_.top, cod_.top);
  r.center = constant(dom_.center, cod_.center);
  return r;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.cod().size() != g.dom().size()) throw InputError("compose: morphisms do not match");
  std::vector<Elem> map(f.dom().size());
  for (Elem x = 0; x < map.size(); ++x) map[x] = g(f(x));
  return Morphism(f.dom(), g.cod(), std::move(map));
}

Morphism alpha_map(const FiniteAlgebra& h, KalmanLevel level) {
  const FiniteAlgebra src = prepare_source(h, level);
  auto k = kalman_of(h, level);
  FiniteAlgebra c = reduct(center_algebra(k.algebra), level_signature(level));
  const auto elems = center_elements(k.algebra);
  const auto idx = center_index(k.algebra, elems);
  std::vector<Elem> map(src.size());
  for (Elem a = 0; a < src.size(); ++a) {
    auto p = k.index_of(a, *src.bottom);
    if (!p || !idx[*p]) violated("alpha: (a,0) is not above the center", src);
    map[a] = *idx[*p];
  }
  Morphism alpha(src, std::move(c), std::move(map));
  auto rep = alpha.report();
  if (!rep.isomorphism()) violated("alpha is not an isomorphism: " + rep.describe(), src);
  return alpha;
}

Morphism beta_map(const FiniteAlgebra& t) {
  AlgebraView tv(t);
  if (!check_kleene_poset(tv).ok) throw PreconditionError("beta needs a Kleene poset");
  const auto elems = center_elements(t);
  const auto idx = center_index(t, elems);
  FiniteAlgebra c = center_algebra(t);
  auto k = construct(c, false, true);
  const Elem cc = *t.center;
  std::vector<Elem> map(t.size());
  for (Elem x = 0; x < t.size(); ++x) {
    Elem a = *idx[tv.join_or_throw(x, cc, "beta")];
    Elem b = *idx[tv.join_or_throw(tv.neg(x), cc, "beta")];
    auto p = k.index_of(a, b);
    if (!p) violated("beta: (x|c, ~x|c) is not a Kalman pair of C(T)", t);
    map[x] = *p;
  }
  Morphism beta(t, k.algebra, std::move(map));
  auto rep = beta.report();
  if (!rep.injective || !rep.order_preserving || !rep.order_reflecting ||
      !rep.operations_preserved())
    violated("beta is not an injective morphism: " + rep.describe(), t);
  if (rep.surjective != check_ck(tv).holds)
    violated("beta surjectivity disagrees with CK", t);
  return beta;
}

CkResult check_ck(const AlgebraView& t) {
  if (!check_kleene_poset(t).ok) throw PreconditionError("CK check needs a Kleene poset");
  const auto n = static_cast<Elem>(t.size());
  const Elem c = t.center();
  std::set<std::pair<Elem, Elem>> reachable;
  for (Elem z = 0; z < n; ++z)
    reachable.insert({*t.join(z, c), *t.join(t.neg(z), c)});
  for (Elem x = 0; x < n; ++x) {
    if (!t.le(c, x)) continue;
    for (Elem y = 0; y < n; ++y) {
      if (!t.le(c, y) || t.meet(x, y) != c) continue;
      if (!reachable.count({x, y})) return {false, std::pair{x, y}};
    }
  }
  return {};
}

CheckReport check_k_conditions(const AlgebraView& t, std::span<const KCondition> which) {
  t.require(kArrow | kInvolution | kCenter | kTop, "K conditions");
  static const std::string_view kNames[] = {"K1", "K2", "K3", "K4", "K5", "K6", "K7"};
  CheckReport r;
  std::string label;
  for (auto k : which) {
    auto name = kNames[static_cast<int>(k)];
    label += (label.empty() ? "" : ",") + std::string(name);
    r.merge(detail::run_battery("", t, {name}));
  }
  r.label = label;
  return r;
}

CheckReport check_kms(const AlgebraView& t) {
  t.require(kInvolution | kCenter, "KMS check");
  return detail::run_battery("KMS", t, {"KM1", "KM2", "KM3", "KM4"});
}

CheckReport check_khis0(const AlgebraView& t) {
  t.require(kArrow | kInvolution | kCenter | kTop, "KhIS0 check");
  auto r = detail::run_battery("KhIS0", t, {"KM1", "KM2", "KM3", "KM4"});
  r.merge(detail::run_battery("KhIS0", t, {"K1", "K2", "K3", "K4", "K5"}));
  return r;
}

namespace {

constexpr KCondition kBase[] = {KCondition::K1, KCondition::K2, KCondition::K3, KCondition::K4,
                                KCondition::K5};

}  // namespace

CheckReport check_khil_conditions(const AlgebraView& t) {
  require_ok(check_k_conditions(t, kBase), "KHil check");
  return detail::run_battery("KHil0", t, {"KHil1", "KHil2", "KHil3", "KHil4", "KHil5"});
}

CheckReport check_ksh_condition(const AlgebraView& t) {
  require_ok(check_centered_kleene(t), "KSH check");
  require_ok(check_k_conditions(t, kBase), "KSH check");
  auto r = detail::run_battery("KSH", t, {"KSH3", "KHil4"});
  if (r.ok) {
    constexpr KCondition k6[] = {KCondition::K6};
    assert_ok(check_k_conditions(t, k6), "a KSH structure", t.algebra());
    assert_ck(t, "a KSH structure");
  }
  return r;
}

OpTable khil_default_arrow(const AlgebraView& t) {
  require_ok(check_centered_kleene(t), "default KHil arrow");
  detail::Ev e(t);
  const auto n = static_cast<Elem>(t.size());
  const Elem c = e.c();
  OpTable arrow(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const bool upper = e.le(e.jc(x), e.jc(y));
      const bool lower = e.le(e.mc(x), e.mc(y));
      Elem r;
      if (upper && lower) r = e.one();
      else if (upper) r = e.j(e.neg(x), e.mc(y));
      else if (lower) r = e.j(y, e.m(e.neg(x), c));
      else r = e.j(e.m(e.jc(y), e.neg(x)), e.m(e.jc(e.neg(x)), y));
      arrow(x, y) = r;
    }
  return arrow;
}

Morphism kalman_of_morphism(const Morphism& f, const KalmanAlgebra& kdom,
                            const KalmanAlgebra& kcod) {
  if (f.dom().size() != kdom.source.size() || f.cod().size() != kcod.source.size())
    throw InputError("K(f): morphism does not match the Kalman algebras");
  std::vector<Elem> map(kdom.pairs.size());
  for (Elem i = 0; i < map.size(); ++i) {
    const auto [a, b] = kdom.pairs[i];
    auto j = kcod.index_of(f(a), f(b));
    if (!j)
      throw InputError("source-morphism defect: " + pair_name(kcod.source, f(a), f(b)) +
                       " is not a Kalman pair");
    map[i] = *j;
  }
  return Morphism(kdom.algebra, kcod.algebra, std::move(map));
}

}  // namespace hemi
