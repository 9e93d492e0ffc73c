#include <omp.h>

#include <exception>
#include <map>
#include <memory>

#include "hemi/document.hpp"
#include "hemi/kalman.hpp"
#include "hemi/search.hpp"
#include "search_internal.hpp"

namespace hemi {

namespace {

bool is_involutive_label(VarietyLabel t) {
  return t == VarietyLabel::DeMorgan || t == VarietyLabel::Kleene || t == VarietyLabel::CenteredKleene;
}

KalmanLevel level_for(VarietyLabel t) {
  switch (t) {
    case VarietyLabel::MS: return KalmanLevel::Semilattice;
    case VarietyLabel::BDL: return KalmanLevel::Lattice;
    case VarietyLabel::hIS0:
    case VarietyLabel::Hil0:
    case VarietyLabel::IS0: return KalmanLevel::HemiImplicative;
    case VarietyLabel::hBDL:
    case VarietyLabel::SH: return KalmanLevel::HemiImplicativeLattice;
    case VarietyLabel::HA: return KalmanLevel::Heyting;
    default:
      throw InputError("this predicate needs a source class (MS, BDL, hIS0, Hil0, IS0, hBDL, SH or HA), got " +
                       std::string(to_string(t)));
  }
}

void require_involutive(VarietyLabel t, const char* predicate) {
  if (!is_involutive_label(t))
    throw InputError(std::string(predicate) + " needs DeMorgan, Kleene or CenteredKleene, got " +
                     std::string(to_string(t)));
}

std::optional<std::string> first_failure(const CheckReport& r) {
  if (r.ok) return std::nullopt;
  return r.label + ": " + r.violations.front().detail;
}

FiniteAlgebra with_default_arrow(const FiniteAlgebra& t) {
  FiniteAlgebra out = t;
  out.arrow = khil_default_arrow(AlgebraView(t));
  return out;
}

std::optional<std::string> pred_kalman_battery(const FiniteAlgebra& h, VarietyLabel t) {
  const auto level = level_for(t);
  try {
    kalman_of(h, level);
  } catch (const TheoremViolation& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

std::optional<std::string> pred_k_ck(const FiniteAlgebra& h, VarietyLabel t) {
  const auto k = kalman_construct(level_reduct(h, level_for(t)));
  auto r = check_ck(AlgebraView(k.algebra));
  if (r.holds) return std::nullopt;
  return "K(H) fails CK at " + k.algebra.name(r.witness->first) + ", " + k.algebra.name(r.witness->second);
}

std::optional<std::string> pred_k6_ck(const FiniteAlgebra& h, VarietyLabel t) {
  FiniteAlgebra obj = is_involutive_label(t) ? with_default_arrow(h)
                                              : kalman_construct(level_reduct(h, level_for(t))).algebra;
  AlgebraView v(obj);
  if (!check_khis0(v).ok) return std::nullopt;
  const KCondition k6[] = {KCondition::K6};
  if (!check_k_conditions(v, k6).ok) return std::nullopt;
  auto r = check_ck(v);
  if (r.holds) return std::nullopt;
  return "K6 holds but CK fails at " + obj.name(r.witness->first) + ", " + obj.name(r.witness->second);
}

std::optional<std::string> pred_ck(const FiniteAlgebra& a, VarietyLabel t) {
  require_involutive(t, "ck");
  auto r = check_ck(AlgebraView(a));
  if (r.holds) return std::nullopt;
  return "CK fails at x = " + a.name(r.witness->first) + ", y = " + a.name(r.witness->second);
}

std::optional<std::string> pred_khil_default(const FiniteAlgebra& a, VarietyLabel t) {
  require_involutive(t, "khil-default");
  const FiniteAlgebra obj = with_default_arrow(a);
  AlgebraView v(obj);
  const KCondition k15[] = {KCondition::K1, KCondition::K2, KCondition::K3, KCondition::K4, KCondition::K5};
  if (auto f = first_failure(check_k_conditions(v, k15))) return f;
  return first_failure(check_khil_conditions(v));
}

std::optional<std::string> pred_alpha(const FiniteAlgebra& h, VarietyLabel t) {
  try {
    alpha_map(h, level_for(t));
  } catch (const TheoremViolation& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

std::optional<std::string> pred_beta(const FiniteAlgebra& h, VarietyLabel t) {
  const auto k = kalman_construct(level_reduct(h, level_for(t)));
  try {
    auto r = beta_map(k.algebra).report();
    if (!r.isomorphism()) return "beta is not an isomorphism: " + r.describe();
  } catch (const TheoremViolation& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

std::optional<std::string> pred_roundtrip(const FiniteAlgebra& h, VarietyLabel t) {
  const auto src = level_reduct(h, level_for(t));
  const auto c = center_algebra(kalman_construct(src).algebra);
  const Signature want = signature_of(src);
  if (want & ~signature_of(c)) return "C(K(H)) lacks " + describe(want & ~signature_of(c));
  if (!are_isomorphic(reduct(c, want), reduct(src, want)).isomorphic) return "C(K(H)) is not isomorphic to H";
  return std::nullopt;
}

const std::map<std::string, Predicate, std::less<>>& registry() {
  static const std::map<std::string, Predicate, std::less<>> r = {
      {"alpha-iso", pred_alpha},
      {"beta-iso", pred_beta},
      {"ck", pred_ck},
      {"k-satisfies-ck", pred_k_ck},
      {"k6-implies-ck", pred_k6_ck},
      {"kalman-battery", pred_kalman_battery},
      {"khil-default", pred_khil_default},
      {"roundtrip", pred_roundtrip},
  };
  return r;
}

// Streams produced one after another; `make(i)` for i = 1, 2, ... until it returns nothing.
AlgebraStream concat(std::function<std::optional<AlgebraStream>(std::size_t)> make) {
  struct State {
    std::function<std::optional<AlgebraStream>(std::size_t)> make;
    std::optional<AlgebraStream> current;
    std::size_t index = 0;
  };
  auto st = std::make_shared<State>();
  st->make = std::move(make);
  return AlgebraStream([st]() -> std::optional<FiniteAlgebra> {
    while (true) {
      if (st->current)
        if (auto a = st->current->next()) return a;
      st->current = st->make(++st->index);
      if (!st->current) return std::nullopt;
    }
  });
}

AlgebraStream flat_map(AlgebraStream outer, std::function<AlgebraStream(const FiniteAlgebra&)> f) {
  auto src = std::make_shared<AlgebraStream>(std::move(outer));
  return concat([src, f](std::size_t) -> std::optional<AlgebraStream> {
    auto a = src->next();
    if (!a) return std::nullopt;
    return f(*a);
  });
}

AlgebraStream map_stream(AlgebraStream s, std::function<FiniteAlgebra(FiniteAlgebra)> f) {
  auto src = std::make_shared<AlgebraStream>(std::move(s));
  return AlgebraStream([src, f]() -> std::optional<FiniteAlgebra> {
    auto a = src->next();
    if (!a) return std::nullopt;
    return f(std::move(*a));
  });
}

}  // namespace

std::vector<std::string> predicate_names() {
  std::vector<std::string> out;
  for (const auto& [name, p] : registry()) out.push_back(name);
  return out;
}

Predicate find_predicate(std::string_view name) {
  auto it = registry().find(name);
  if (it == registry().end()) {
    std::string known;
    for (const auto& n : predicate_names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown predicate '" + std::string(name) + "' (known: " + known + ")");
  }
  return it->second;
}

AlgebraStream population(VarietyLabel target, std::size_t max_size, bool modulo_iso, int jobs) {
  if (max_size < 1) throw InputError("max size must be at least 1");
  auto sized = [max_size](std::function<AlgebraStream(std::size_t)> f) {
    return concat([max_size, f](std::size_t n) -> std::optional<AlgebraStream> {
      if (n > max_size) return std::nullopt;
      return f(n);
    });
  };
  auto lattices = [=](bool distributive) {
    return sized([=](std::size_t n) {
      return enumerate_lattices(n, {.distributive = distributive, .modulo_iso = modulo_iso, .jobs = jobs});
    });
  };
  switch (target) {
    case VarietyLabel::MS:
      return map_stream(lattices(false), [](FiniteAlgebra a) { return reduct(a, kMeet | kBottom | kTop); });
    case VarietyLabel::BDL:
      return lattices(true);
    case VarietyLabel::hIS0:
    case VarietyLabel::Hil0:
    case VarietyLabel::IS0:
    case VarietyLabel::hBDL:
    case VarietyLabel::SH:
    case VarietyLabel::HA: {
      const bool distributive = target == VarietyLabel::hBDL || target == VarietyLabel::SH ||
                                target == VarietyLabel::HA;
      return flat_map(lattices(distributive), [target, modulo_iso](const FiniteAlgebra& base) {
        return enumerate_arrow_tables(base, target, modulo_iso);
      });
    }
    case VarietyLabel::DeMorgan:
    case VarietyLabel::Kleene:
    case VarietyLabel::CenteredKleene: {
      const InvolutionKind kind = target == VarietyLabel::DeMorgan ? InvolutionKind::DeMorgan
                                  : target == VarietyLabel::Kleene ? InvolutionKind::Kleene
                                                                   : InvolutionKind::CenteredKleene;
      return sized([=](std::size_t n) { return enumerate_involutive(n, kind, modulo_iso); });
    }
    default:
      throw InputError("no search population for " + std::string(to_string(target)));
  }
}

SearchOutcome find_counterexample(const EnumerationSpec& spec) {
  if (spec.jobs < 1) throw InputError("jobs must be at least 1");
  const Predicate pred = find_predicate(spec.predicate);
  AlgebraStream stream = population(spec.target, spec.max_size, spec.modulo_iso, spec.jobs);
  SearchOutcome out;
  const std::size_t batch = spec.jobs == 1 ? 1 : 8 * static_cast<std::size_t>(spec.jobs);

  while (true) {
    std::vector<FiniteAlgebra> items;
    while (items.size() < batch) {
      auto a = stream.next();
      if (!a) break;
      items.push_back(std::move(*a));
    }
    if (items.empty()) break;

    std::vector<std::optional<std::string>> results(items.size());
    std::vector<std::exception_ptr> errors(items.size());
#pragma omp parallel for schedule(dynamic) num_threads(spec.jobs) if (spec.jobs > 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(items.size()); ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        results[k] = pred(items[k], spec.target);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }

    for (std::size_t k = 0; k < items.size(); ++k) {
      if (errors[k]) std::rethrow_exception(errors[k]);
      ++out.examined;
      if (!results[k]) {
        ++out.retained;
        continue;
      }
      // The witness must fail again after a trip through the document format.
      FiniteAlgebra reloaded = parse_algebra(serialize_algebra(items[k]));
      if (!pred(reloaded, spec.target))
        throw TheoremViolation("witness does not re-fail " + spec.predicate, serialize_algebra(items[k]));
      out.status = SearchOutcome::Status::CounterexampleFound;
      out.witness = std::move(reloaded);
      out.detail = *results[k];
      return out;
    }
  }
  return out;
}

}  // namespace hemi
