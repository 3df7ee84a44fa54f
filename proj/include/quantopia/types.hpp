//  Copyright 2026 The Quantopia Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef QUANTOPIA_TYPES_HPP_
#define QUANTOPIA_TYPES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace quantopia {

/// Index of an element of a finite quantale (position in its element list).
using Elem = std::uint16_t;
/// Index of a point of a finite carrier (or of an element of a module lattice).
using Point = std::uint32_t;

// -- Errors -------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: missing table entries, unknown identifiers, wrong sizes.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but does not satisfy the axioms an operation needs.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured search bound.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// -- Limits -------------------------------------------------------------------

struct Limits {
  /// Upper bound on |Q|^|X| for any map enumeration.
  std::uint64_t enumeration_cap = 1'000'000;
  /// Upper bound on search nodes visited while looking for module points.
  std::uint64_t point_search_cap = 20'000'000;
};

/// Computes base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

/// Throws CapExceeded when |values|^|arity| exceeds the enumeration cap.
void require_enumerable(std::size_t values, std::size_t arity, const Limits& limits,
                        const std::string& what);

// -- Matrix -------------------------------------------------------------------

/// Dense row-major matrix. Booleans are stored as bytes so cells are addressable.
template <class T>
class Matrix {
  using Cell = std::conditional_t<std::is_same_v<T, bool>, unsigned char, T>;

 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cell& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Cell& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Cell>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cell> data_;
};

// -- Q-valued functions ---------------------------------------------------------

/// A map from a finite carrier (by point index) into a finite quantale.
/// The same value type serves as weight, coweight, open set, or module point,
/// depending on which predicate it is checked against.
struct QFun {
  std::vector<Elem> values;

  QFun() = default;
  explicit QFun(std::vector<Elem> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  Elem operator[](std::size_t i) const { return values[i]; }
  Elem& operator[](std::size_t i) { return values[i]; }

  auto operator<=>(const QFun&) const = default;
  bool operator==(const QFun&) const = default;
};

struct QFunHash {
  std::size_t operator()(const QFun& f) const noexcept {
    std::size_t h = 14695981039346656037ull;
    for (Elem e : f.values) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

enum class Variance { weight, coweight, plain };

// -- Validation reports ---------------------------------------------------------

/// One failed axiom together with the elements that witness the failure.
struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<std::string> structural;
  std::vector<Violation> violations;

  bool ok() const { return structural.empty() && violations.empty(); }
  bool has_violation(const std::string& axiom) const;
  /// First violation of the named axiom, or nullptr.
  const Violation* find(const std::string& axiom) const;
  std::string summary() const;
};

}  // namespace quantopia

#endif  // QUANTOPIA_TYPES_HPP_
