#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "agkit/identity.hpp"
#include "agkit/magma.hpp"

namespace agkit {

/// Lexicographically least relabeling of `m` under the row-major
/// linearization. Two magmas are isomorphic iff their canonical forms agree.
Magma canonical_form(const Magma& m);
bool is_canonical(const Magma& m);

/// All permutations of 0..n-1 in lexicographic order (identity first).
const std::vector<Permutation>& all_permutations(std::size_t n);

/// A table being filled in row-major order.
class PartialTable {
 public:
  static constexpr Element kUnset = 0xff;

  explicit PartialTable(std::size_t order);
  /// Takes the first `filled` cells of `m` and leaves the rest unset.
  PartialTable(const Magma& m, std::size_t filled);

  std::size_t order() const noexcept { return order_; }
  std::size_t fill_index() const noexcept { return fill_index_; }
  bool complete() const noexcept { return fill_index_ == order_ * order_; }

  Element at(Element a, Element b) const noexcept {
    return cells_[a * order_ + b];
  }
  bool is_set(Element a, Element b) const noexcept {
    return at(a, b) != kUnset;
  }

  /// Sets the cell at fill_index and advances.
  void push(Element value);
  void pop();

  /// Requires complete().
  Magma to_magma() const;

 private:
  std::size_t order_;
  std::size_t fill_index_ = 0;
  Magma::Cells cells_;
};

/// False iff some instance (ab)c = (cb)a whose cells are all set is
/// violated. Instances touching an unset cell are ignored.
bool propagate(const PartialTable& p);

/// Class filter: required identities must hold, forbidden ones must fail.
struct CensusFilter {
  std::string name;
  PropertySet required;
  PropertySet forbidden;

  /// Throws std::invalid_argument if required and forbidden overlap.
  CensusFilter(std::string name, PropertySet required,
               PropertySet forbidden = {});

  bool matches(const PropertySet& properties) const {
    return properties.includes(required) && properties.disjoint(forbidden);
  }
  /// Identities a classifier must evaluate to decide matches().
  PropertySet relevant() const;
};

/// Passes every AG-groupoid.
CensusFilter all_ag_filter();
/// Rows of the census: non-associative RAD, LAD and AD classes, named
/// "rad_na", "lad_na" and "ad_na".
std::vector<CensusFilter> census_filters();

struct CensusReport {
  std::size_t order = 0;
  std::uint64_t total_ag = 0;
  std::vector<std::pair<std::string, std::uint64_t>> per_filter;
  std::chrono::duration<double> wall_time{};
  std::uint64_t generated_nodes = 0;

  /// Throws std::out_of_range for an unknown filter name.
  std::uint64_t count(const std::string& filter_name) const;
};

class OrderTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  unsigned jobs = 1;
  /// Required for orders >= kLongRunOrder.
  bool allow_long_run = false;
};

inline constexpr std::size_t kLongRunOrder = 6;

/// Throws OrderTooLarge / std::invalid_argument for unsupported orders.
void check_order(std::size_t order, bool allow_long_run);

using MagmaSink = std::function<void(const Magma&)>;

/// Orderly generation of AG-groupoids of the given order up to isomorphism.
///
/// Every class is counted in total_ag; classes matching `filter` are passed
/// to `sink` (which may be empty) on the calling thread in ascending
/// canonical order, and counted under filter.name. Results do not depend on
/// options.jobs.
CensusReport enumerate_ag(std::size_t order, const CensusFilter& filter,
                          const MagmaSink& sink,
                          const EnumerationOptions& options = {});

/// Counts every class against several filters in one pass; `sink`, when
/// set, receives every class.
CensusReport enumerate_ag(std::size_t order,
                          const std::vector<CensusFilter>& filters,
                          const MagmaSink& sink,
                          const EnumerationOptions& options = {});

/// Census rows "rad_na", "lad_na", "ad_na" plus the AG total.
CensusReport census(std::size_t order, const EnumerationOptions& options = {});

}  // namespace agkit
