#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agkit/magma.hpp"

namespace agkit {

/// Identities known to the catalog. The enumerator order is the catalog
/// order used for reports.
enum class IdentityId : std::uint8_t {
  LeftInvertive,
  Associative,
  Commutative,
  Medial,
  Paramedial,
  RightCommutative,
  SelfDual,
  LeftDistributive,
  RightDistributive,
  AgStarStar,
  Flexible,
  Lad,
  Rad,
  LeftNuclearSquare,
};

inline constexpr std::size_t kIdentityCount = 14;

inline constexpr std::array<IdentityId, kIdentityCount> kAllIdentities = {
    IdentityId::LeftInvertive,    IdentityId::Associative,
    IdentityId::Commutative,      IdentityId::Medial,
    IdentityId::Paramedial,       IdentityId::RightCommutative,
    IdentityId::SelfDual,         IdentityId::LeftDistributive,
    IdentityId::RightDistributive, IdentityId::AgStarStar,
    IdentityId::Flexible,         IdentityId::Lad,
    IdentityId::Rad,              IdentityId::LeftNuclearSquare,
};

/// Stable kebab-case name, e.g. "left-invertive", "ag-star-star".
std::string_view name(IdentityId id);
/// Inverse of name(); std::nullopt for unknown names.
std::optional<IdentityId> identity_from_name(std::string_view name);

/// Variables are numbered 0..3 and printed as a, b, c, d.
inline constexpr std::size_t kMaxVariables = 4;

/// A groupoid term: a variable or a product of two terms.
///
/// Stored in postfix form: each token is either a variable index or
/// kProduct, which multiplies the two most recent values.
class Term {
 public:
  static constexpr std::uint8_t kProduct = 0xff;

  static Term var(std::uint8_t index);
  friend Term operator*(const Term& left, const Term& right);

  std::span<const std::uint8_t> postfix() const noexcept { return tokens_; }
  /// Bit i is set iff variable i occurs.
  unsigned variable_mask() const noexcept;

  /// Evaluates under `assignment` (indexed by variable number).
  Element evaluate(const Magma& m, std::span<const Element> assignment) const;

  /// Juxtaposition notation with minimal parentheses: "a(bc)", "(ab)(ca)".
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::vector<std::uint8_t> tokens_;
};

/// lhs = rhs, universally quantified over `variables()`.
class TermEquation {
 public:
  TermEquation(Term lhs, Term rhs);

  const Term& lhs() const noexcept { return lhs_; }
  const Term& rhs() const noexcept { return rhs_; }
  /// Variable indices occurring on either side, ascending.
  std::span<const std::uint8_t> variables() const noexcept {
    return variables_;
  }
  std::string to_string() const;

 private:
  Term lhs_;
  Term rhs_;
  std::vector<std::uint8_t> variables_;
};

struct CatalogEntry {
  IdentityId id;
  TermEquation equation;
};

/// The fixed catalog, one entry per IdentityId in enumerator order.
std::span<const CatalogEntry> catalog();
const TermEquation& equation(IdentityId id);

/// A falsifying assignment. `assignment` pairs each variable name with its
/// value, in variable order.
struct Witness {
  std::vector<std::pair<char, Element>> assignment;
  Element lhs_value = 0;
  Element rhs_value = 0;

  /// Assignment values indexed by variable number (unused slots are 0).
  std::array<Element, kMaxVariables> values() const;
};

bool satisfies(const Magma& m, const TermEquation& eq);
bool satisfies(const Magma& m, IdentityId id);

/// The lexicographically first falsifying assignment (first variable most
/// significant), or std::nullopt when the identity holds.
std::optional<Witness> witness_failure(const Magma& m, const TermEquation& eq);
std::optional<Witness> witness_failure(const Magma& m, IdentityId id);

/// Set of identities, iterated in catalog order.
class PropertySet {
 public:
  PropertySet() = default;
  PropertySet(std::initializer_list<IdentityId> ids);

  bool contains(IdentityId id) const noexcept {
    return bits_.test(static_cast<std::size_t>(id));
  }
  void insert(IdentityId id) noexcept {
    bits_.set(static_cast<std::size_t>(id));
  }
  void erase(IdentityId id) noexcept {
    bits_.reset(static_cast<std::size_t>(id));
  }
  bool empty() const noexcept { return bits_.none(); }
  std::size_t size() const noexcept { return bits_.count(); }

  bool includes(const PropertySet& other) const noexcept {
    return (bits_ & other.bits_) == other.bits_;
  }
  bool disjoint(const PropertySet& other) const noexcept {
    return (bits_ & other.bits_).none();
  }

  std::vector<IdentityId> ids() const;
  /// Comma-separated kebab-case names in catalog order.
  std::string to_string() const;

  friend PropertySet operator|(PropertySet x, const PropertySet& y) {
    x.bits_ |= y.bits_;
    return x;
  }
  friend bool operator==(const PropertySet&, const PropertySet&) = default;

 private:
  std::bitset<kIdentityCount> bits_;
};

/// Evaluates only the identities in `which`.
PropertySet classify(const Magma& m, const PropertySet& which);
PropertySet classify(const Magma& m);

inline bool is_ag_groupoid(const Magma& m) {
  return satisfies(m, IdentityId::LeftInvertive);
}

}  // namespace agkit
