#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agkit/enumerator.hpp"
#include "agkit/identity.hpp"
#include "agkit/magma.hpp"

namespace agkit {

/// "Every AG-groupoid satisfying `antecedent` satisfies `consequent`."
/// The antecedent always contains left-invertive.
struct Implication {
  std::string name;
  PropertySet antecedent;
  PropertySet consequent;
  std::string source;
  /// Set when a consequent relies on the imported left-nuclear-square
  /// definition rather than one stated with the theorem.
  bool imported_definition = false;

  Implication(std::string name, PropertySet antecedent, PropertySet consequent,
              std::string source);
};

/// The eight implications claimed for LAD, RAD and AD AG-groupoids.
std::vector<Implication> paper_implications();

struct ImplicationReport {
  Implication implication;
  std::size_t max_order = 0;
  std::uint64_t classes_checked = 0;
  std::uint64_t antecedent_classes = 0;
  /// First class (by order, then canonical order) satisfying the
  /// antecedent but not the whole consequent.
  std::optional<Magma> counterexample;

  bool holds() const { return !counterexample.has_value(); }
};

/// Exhausts every AG-groupoid class of order 1..max_order. Orders at or
/// above kLongRunOrder throw OrderTooLarge unless options.allow_long_run.
ImplicationReport check_implication(const Implication& impl,
                                    std::size_t max_order,
                                    const EnumerationOptions& options = {});

/// Same as check_implication for each entry, sharing one enumeration pass
/// per order.
std::vector<ImplicationReport> check_implications(
    const std::vector<Implication>& impls, std::size_t max_order,
    const EnumerationOptions& options = {});

/// First class (by order, then canonical order) that satisfies every
/// required identity and none of the forbidden ones.
std::optional<Magma> find_counterexample(const PropertySet& required,
                                         const PropertySet& forbidden,
                                         std::size_t max_order,
                                         const EnumerationOptions& options = {});

/// Multi-line text block: name, source, sets, bound, verdict and the
/// counterexample (if any) in the table file format.
std::string render_implication_report(const ImplicationReport& r);

}  // namespace agkit
