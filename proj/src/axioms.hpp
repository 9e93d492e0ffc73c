#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include "hemi/varieties.hpp"
#include "hemi/view.hpp"

namespace hemi::detail {

// Thrown by Ev when a partial bound a formula needs does not exist; the
// formula then counts as violated.
struct MissingBound {};

class Ev {
 public:
  explicit Ev(const AlgebraView& v) : v_(v) {}

  const AlgebraView& view() const { return v_; }
  std::size_t n() const { return v_.size(); }
  bool le(Elem x, Elem y) const { return v_.le(x, y); }

  Elem m(Elem x, Elem y) const {
    auto r = v_.meet(x, y);
    if (!r) throw MissingBound{};
    return *r;
  }
  Elem j(Elem x, Elem y) const {
    auto r = v_.join(x, y);
    if (!r) throw MissingBound{};
    return *r;
  }
  Elem to(Elem x, Elem y) const { return v_.arrow(x, y); }
  Elem neg(Elem x) const { return v_.neg(x); }
  Elem jc(Elem x) const { return j(x, c()); }
  Elem mc(Elem x) const { return m(x, c()); }
  Elem iff(Elem x, Elem y) const { return m(to(x, y), to(y, x)); }

  Elem c() const { return v_.center(); }
  Elem one() const { return v_.top(); }
  Elem zero() const { return v_.bottom(); }

  // Nelson-lattice negation and product.
  Elem lneg(Elem x) const { return to(x, zero()); }
  Elem star(Elem x, Elem y) const { return lneg(to(x, lneg(y))); }

 private:
  const AlgebraView& v_;
};

using Predicate = bool (*)(const Ev&, const Elem*);

struct Axiom {
  std::string_view name;
  int arity;
  std::string_view statement;
  Predicate pred;
};

const Axiom& axiom(std::string_view name);

bool holds(const Ev& ev, const Axiom& ax, const Elem* w);

/// Scans every tuple lexicographically and records the first failure of each axiom.
CheckReport run_battery(const std::string& label, const AlgebraView& v,
                        std::initializer_list<std::string_view> axioms);

std::string format_witness(const AlgebraView& v, const Axiom& ax, const Elem* w);

}  // namespace hemi::detail
