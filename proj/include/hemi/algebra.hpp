#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hemi {

using Elem = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input supplied by a caller.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  explicit ParseError(const std::string& msg);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

/// A supplied table disagrees with the order or with the structural invariants.
class ConsistencyError : public InputError {
 public:
  using InputError::InputError;
};

/// An operation was called on an algebra lacking a required feature or axiom.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction produced a result contradicting a theorem it should satisfy.
/// Carries a serialized copy of the offending algebra.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& msg, std::string witness_document);

  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * n_, n_);
  }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using Order = SquareMatrix<std::uint8_t>;
using OpTable = SquareMatrix<Elem>;

enum Feature : unsigned {
  kMeet = 1u << 0,
  kJoin = 1u << 1,
  kArrow = 1u << 2,
  kInvolution = 1u << 3,
  kBottom = 1u << 4,
  kTop = 1u << 5,
  kCenter = 1u << 6,
};
using Signature = unsigned;

struct FiniteAlgebra {
  std::vector<std::string> names;  // empty means "use indices"
  Order leq;
  std::optional<OpTable> meet;
  std::optional<OpTable> join;
  std::optional<OpTable> arrow;
  std::optional<std::vector<Elem>> involution;
  std::optional<Elem> bottom;
  std::optional<Elem> top;
  std::optional<Elem> center;

  FiniteAlgebra() = default;
  explicit FiniteAlgebra(Order order) : leq(std::move(order)) {}

  std::size_t size() const { return leq.size(); }
  bool le(Elem a, Elem b) const { return leq(a, b) != 0; }
  std::string name(Elem x) const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;
};

Signature signature_of(const FiniteAlgebra& a);

/// Drops every optional feature not in `keep`.
FiniteAlgebra reduct(const FiniteAlgebra& a, Signature keep);

std::string describe(Signature s);

/// Relabels: element i of the result is element perm[i] of `a`.
FiniteAlgebra relabel(const FiniteAlgebra& a, std::span<const Elem> perm);

}  // namespace hemi
