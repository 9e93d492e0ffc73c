#pragma once

#include <cstddef>
#include <functional>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hemi/algebra.hpp"
#include "hemi/varieties.hpp"

namespace hemi {

/// Lazily produced sequence of algebras. Single pass.
class AlgebraStream {
 public:
  using Source = std::function<std::optional<FiniteAlgebra>()>;

  AlgebraStream() = default;
  explicit AlgebraStream(Source source) : source_(std::move(source)) {}

  std::optional<FiniteAlgebra> next() { return source_ ? source_() : std::nullopt; }
  std::vector<FiniteAlgebra> collect();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FiniteAlgebra;
    using difference_type = std::ptrdiff_t;
    using pointer = const FiniteAlgebra*;
    using reference = const FiniteAlgebra&;

    iterator() = default;
    explicit iterator(AlgebraStream* s) : s_(s) { ++*this; }
    reference operator*() const { return *cur_; }
    pointer operator->() const { return &*cur_; }
    iterator& operator++() {
      cur_ = s_->next();
      if (!cur_) s_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.s_ == b.s_; }

   private:
    AlgebraStream* s_ = nullptr;
    std::optional<FiniteAlgebra> cur_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  Source source_;
};

struct LatticeOptions {
  bool distributive = false;
  bool modulo_iso = true;
  /// Worker threads for subtree expansion; 1 selects the serial path.
  int jobs = 1;
};

/// Bounded lattices on n elements, element 0 the bottom and n-1 the top,
/// every other element numbered after all of its lower covers. With
/// modulo_iso only the canonical labelling of each class is emitted.
AlgebraStream enumerate_lattices(std::size_t n, LatticeOptions options = {});

/// The canonical labelling: lexicographically least down-set sequence over
/// all natural labellings with bottom first and top last. `perm[i]` is the
/// old index of new element i. Requires a lattice.
std::vector<Elem> canonical_labelling(const FiniteAlgebra& lattice);
bool is_canonical(const FiniteAlgebra& lattice);

/// Every arrow table making `base` a member of `label` (one of the eight
/// implicative classes). With modulo_iso, tables conjugate under an
/// automorphism of base are reported once.
AlgebraStream enumerate_arrow_tables(const FiniteAlgebra& base, VarietyLabel label,
                                     bool modulo_iso = false);

/// Centered Kleene algebras of size n over distributive lattices.
AlgebraStream enumerate_centered_kleene(std::size_t n, bool modulo_iso = true);

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<Elem> mapping;  // a -> b
};

/// Throws InputError if the feature signatures differ.
IsomorphismResult are_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);
std::vector<std::vector<Elem>> automorphisms(const FiniteAlgebra& a);

/// Returns a failure description, or nothing when the property holds.
using Predicate = std::function<std::optional<std::string>(const FiniteAlgebra&, VarietyLabel)>;

std::vector<std::string> predicate_names();
/// Throws InputError on an unknown name.
Predicate find_predicate(std::string_view name);

/// Objects the search draws from for a target class, all sizes 1..max_size.
AlgebraStream population(VarietyLabel target, std::size_t max_size, bool modulo_iso, int jobs = 1);

struct EnumerationSpec {
  VarietyLabel target = VarietyLabel::BDL;
  std::size_t max_size = 4;
  bool modulo_iso = true;
  std::string predicate;
  int jobs = 1;
};

struct SearchOutcome {
  enum class Status { AllSatisfy, CounterexampleFound };
  Status status = Status::AllSatisfy;
  std::optional<FiniteAlgebra> witness;
  std::string detail;
  std::size_t examined = 0;
  std::size_t retained = 0;  // instances that satisfied the predicate
};

/// First failing instance in population order. jobs > 1 evaluates batches
/// in parallel; the result does not depend on jobs.
SearchOutcome find_counterexample(const EnumerationSpec& spec);

}  // namespace hemi
