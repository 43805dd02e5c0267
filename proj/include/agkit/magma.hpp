#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace agkit {

/// Elements of an order-n magma are the indices 0..n-1.
using Element = std::uint8_t;

inline constexpr std::size_t kMaxOrder = 8;

/// A bijection on {0,...,n-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection on 0..n-1.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  Element operator()(Element a) const noexcept { return images_[a]; }
  std::span<const Element> images() const noexcept { return images_; }

  Permutation inverse() const;
  /// (p * q)(a) = p(q(a)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

/// Finite groupoid given by its Cayley table; entry (a, b) is a*b.
///
/// Immutable once built. Cells are stored row-major with stride `order()`,
/// which is also the linearization used to order tables.
class Magma {
 public:
  using Cells = std::array<Element, kMaxOrder * kMaxOrder>;

  /// Builds from a row-major cell list of length n*n. Throws
  /// std::invalid_argument on a bad order, size, or out-of-range entry.
  Magma(std::size_t order, std::span<const Element> row_major);
  Magma(std::size_t order, std::initializer_list<int> row_major);

  static Magma constant(std::size_t order, Element value = 0);

  std::size_t order() const noexcept { return order_; }

  Element apply(Element a, Element b) const noexcept {
    return cells_[a * order_ + b];
  }
  Element operator()(Element a, Element b) const noexcept {
    return apply(a, b);
  }

  std::span<const Element> linear() const noexcept {
    return {cells_.data(), order_ * order_};
  }

  /// Digits of the row-major linearization, e.g. "0001" for order 2.
  std::string linear_string() const;

  /// Tables of equal order compare lexicographically by linearization;
  /// smaller orders sort first.
  friend std::strong_ordering operator<=>(const Magma& x, const Magma& y);
  friend bool operator==(const Magma& x, const Magma& y);

 private:
  Magma() = default;

  std::size_t order_ = 0;
  Cells cells_{};
};

/// Isomorphic image r with r(p(a), p(b)) = p(a*b). Throws
/// std::invalid_argument if the sizes differ.
Magma relabel(const Magma& m, const Permutation& p);

/// Every e with e*a == a for all a, ascending.
std::vector<Element> find_left_identities(const Magma& m);

// ---------------------------------------------------------------------------
// Text format
//
//   # comment lines may appear anywhere
//   n
//   row 0: n space-separated integers
//   ...
//   row n-1
// ---------------------------------------------------------------------------

enum class ParseErrorKind { MalformedHeader, DimensionMismatch, OutOfRangeEntry };

std::string_view to_string(ParseErrorKind kind);

/// Raised by parse_magma. `line` is the 1-based line of the input text.
/// For errors tied to a table cell, `row` and `column` are the 1-based table
/// row and entry position; for header errors `row` is 0 and `column` is the
/// character offset on the line.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t row,
             std::size_t column, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t row_;
  std::size_t column_;
  std::string detail_;
};

Magma parse_magma(std::string_view text);
std::string render_magma(const Magma& m);

/// Reads and parses a table file; I/O failures throw std::runtime_error
/// naming the path.
Magma read_magma_file(const std::string& path);

}  // namespace agkit
