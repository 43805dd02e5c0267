#include "agkit/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace agkit {

// ---------------------------------------------------------------------------
// PartialTable
// ---------------------------------------------------------------------------

PartialTable::PartialTable(std::size_t order) : order_(order) {
  if (order == 0 || order > kMaxOrder) {
    throw std::invalid_argument("partial table order out of range");
  }
  cells_.fill(kUnset);
}

PartialTable::PartialTable(const Magma& m, std::size_t filled)
    : PartialTable(m.order()) {
  if (filled > order_ * order_) {
    throw std::invalid_argument("more filled cells than the table holds");
  }
  for (std::size_t i = 0; i < filled; ++i) push(m.linear()[i]);
}

void PartialTable::push(Element value) {
  if (complete()) throw std::logic_error("partial table already complete");
  if (value >= order_) throw std::invalid_argument("cell value out of range");
  cells_[fill_index_++] = value;
}

void PartialTable::pop() {
  if (fill_index_ == 0) throw std::logic_error("partial table is empty");
  cells_[--fill_index_] = kUnset;
}

Magma PartialTable::to_magma() const {
  if (!complete()) throw std::logic_error("partial table is incomplete");
  return Magma(order_, std::span<const Element>(cells_.data(), order_ * order_));
}

bool propagate(const PartialTable& p) {
  const std::size_t n = p.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!p.is_set(a, b)) continue;
      const Element ab = p.at(a, b);
      for (Element c = 0; c < n; ++c) {
        if (!p.is_set(ab, c) || !p.is_set(c, b)) continue;
        const Element cb = p.at(c, b);
        if (!p.is_set(cb, a)) continue;
        if (p.at(ab, c) != p.at(cb, a)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Filters and reports
// ---------------------------------------------------------------------------

CensusFilter::CensusFilter(std::string filter_name, PropertySet req,
                           PropertySet forb)
    : name(std::move(filter_name)),
      required(std::move(req)),
      forbidden(std::move(forb)) {
  if (!required.disjoint(forbidden)) {
    throw std::invalid_argument("filter '" + name +
                                "' both requires and forbids an identity");
  }
}

PropertySet CensusFilter::relevant() const {
  PropertySet out = required;
  for (auto id : forbidden.ids()) out.insert(id);
  out.erase(IdentityId::LeftInvertive);  // holds for every enumerated table
  return out;
}

CensusFilter all_ag_filter() {
  return {"ag", {IdentityId::LeftInvertive}};
}

std::vector<CensusFilter> census_filters() {
  using I = IdentityId;
  return {
      {"rad_na", {I::LeftInvertive, I::Rad}, {I::Associative}},
      {"lad_na", {I::LeftInvertive, I::Lad}, {I::Associative}},
      {"ad_na", {I::LeftInvertive, I::Lad, I::Rad}, {I::Associative}},
  };
}

std::uint64_t CensusReport::count(const std::string& filter_name) const {
  for (const auto& [name, n] : per_filter) {
    if (name == filter_name) return n;
  }
  throw std::out_of_range("no census row named '" + filter_name + "'");
}

void check_order(std::size_t order, bool allow_long_run) {
  if (order == 0 || order > kMaxOrder) {
    throw std::invalid_argument("order must be in 1.." +
                                std::to_string(kMaxOrder));
  }
  if (order >= kLongRunOrder && !allow_long_run) {
    throw OrderTooLarge("order " + std::to_string(order) +
                        " needs the long-run flag");
  }
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

namespace {

constexpr Element kUnset = PartialTable::kUnset;

// Backtracking over cells in row-major order. A branch is cut when the new
// cell completes a violated left-invertive instance, or when some relabeling
// is already known to be lexicographically smaller on the filled prefix.
class Search {
 public:
  explicit Search(std::size_t order) : n_(order), size_(order * order) {
    cells_.fill(kUnset);
    for (const auto& p : all_permutations(n_)) {
      if (p == Permutation::identity(n_)) continue;
      Relabeling r;
      const Permutation inv = p.inverse();
      for (std::size_t a = 0; a < n_; ++a) {
        r.forward[a] = p(static_cast<Element>(a));
      }
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          r.source[i * n_ + j] = static_cast<Element>(
              inv(static_cast<Element>(i)) * n_ + inv(static_cast<Element>(j)));
        }
      }
      relabelings_.push_back(r);
    }
  }

  void load_prefix(std::span<const Element> prefix) {
    cells_.fill(kUnset);
    std::copy(prefix.begin(), prefix.end(), cells_.begin());
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

  // Visits every surviving table filled up to `stop` cells, starting at
  // cell `pos` (cells before it are already set).
  template <typename Visit>
  void run(std::size_t pos, std::size_t stop, Visit&& visit) {
    if (pos == stop) {
      visit(std::span<const Element>(cells_.data(), stop));
      return;
    }
    const Element a = static_cast<Element>(pos / n_);
    const Element b = static_cast<Element>(pos % n_);
    for (Element v = 0; v < n_; ++v) {
      cells_[pos] = v;
      ++nodes_;
      if (consistent(a, b, v) && !refuted(pos + 1)) run(pos + 1, stop, visit);
    }
    cells_[pos] = kUnset;
  }

 private:
  struct Relabeling {
    std::array<Element, kMaxOrder> forward;
    // Linear index in the original table of relabeled cell k.
    std::array<Element, kMaxOrder * kMaxOrder> source;
  };

  Element at(std::size_t a, std::size_t b) const noexcept {
    return cells_[a * n_ + b];
  }

  // Every instance (xy)z = (zy)x containing cell (a, b) = v, up to the
  // symmetry x <-> z: either (a, b) is the inner product xy, or it is the
  // outer product with xy = a and z = b.
  bool consistent(Element a, Element b, Element v) const noexcept {
    for (std::size_t c = 0; c < n_; ++c) {
      const Element lhs = at(v, c);
      if (lhs == kUnset) continue;
      const Element cb = at(c, b);
      if (cb == kUnset) continue;
      const Element rhs = at(cb, a);
      if (rhs != kUnset && lhs != rhs) return false;
    }
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (at(x, y) != a) continue;
        const Element by = at(b, y);
        if (by == kUnset) continue;
        const Element rhs = at(by, x);
        if (rhs != kUnset && rhs != v) return false;
      }
    }
    return true;
  }

  // True if some relabeling is provably smaller than every completion of
  // the first `filled` cells.
  bool refuted(std::size_t filled) const noexcept {
    for (const auto& r : relabelings_) {
      for (std::size_t k = 0; k < filled; ++k) {
        const Element src = cells_[r.source[k]];
        if (src == kUnset) break;
        const Element image = r.forward[src];
        if (image < cells_[k]) return true;
        if (image > cells_[k]) break;
      }
    }
    return false;
  }

  std::size_t n_;
  std::size_t size_;
  Magma::Cells cells_;
  std::vector<Relabeling> relabelings_;
  std::uint64_t nodes_ = 0;
};

std::size_t split_depth(std::size_t order) {
  return std::min(order * order, order + 1);
}

struct TaskResult {
  std::vector<std::uint64_t> counts;  // [0] = total, then one per filter
  std::vector<Magma> emitted;
  std::uint64_t nodes = 0;
};

constexpr std::size_t kEmitAll = static_cast<std::size_t>(-1);

// Counts classes against `filters`; passes to `sink` every class matching
// filters[emit] (or every class for kEmitAll).
CensusReport run_enumeration(std::size_t order,
                             const std::vector<CensusFilter>& filters,
                             std::size_t emit, const MagmaSink& sink,
                             const EnumerationOptions& options) {
  check_order(order, options.allow_long_run);
  const auto started = std::chrono::steady_clock::now();

  PropertySet relevant;
  for (const auto& f : filters) {
    for (auto id : f.relevant().ids()) relevant.insert(id);
  }

  // Independent subtrees, one per surviving prefix of fixed depth.
  const std::size_t depth = split_depth(order);
  std::vector<std::vector<Element>> prefixes;
  std::uint64_t prefix_nodes = 0;
  {
    Search s(order);
    s.run(0, depth, [&](std::span<const Element> cells) {
      prefixes.emplace_back(cells.begin(), cells.end());
    });
    prefix_nodes = s.nodes();
  }

  auto run_task = [&](Search& s, const std::vector<Element>& prefix) {
    TaskResult out;
    out.counts.assign(filters.size() + 1, 0);
    const std::uint64_t before = s.nodes();
    s.load_prefix(prefix);
    s.run(depth, order * order, [&](std::span<const Element> cells) {
      const Magma m(order, cells);
      const PropertySet props = classify(m, relevant) |
                                PropertySet{IdentityId::LeftInvertive};
      ++out.counts[0];
      bool emit_this = emit == kEmitAll;
      for (std::size_t f = 0; f < filters.size(); ++f) {
        if (!filters[f].matches(props)) continue;
        ++out.counts[f + 1];
        emit_this = emit_this || f == emit;
      }
      if (sink && emit_this) out.emitted.push_back(m);
    });
    out.nodes = s.nodes() - before;
    return out;
  };

  std::vector<std::uint64_t> totals(filters.size() + 1, 0);
  std::uint64_t nodes = prefix_nodes;
  auto absorb = [&](TaskResult& r) {
    for (std::size_t i = 0; i < totals.size(); ++i) totals[i] += r.counts[i];
    nodes += r.nodes;
    if (sink) {
      for (const auto& m : r.emitted) sink(m);
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || prefixes.size() < 2) {
    Search s(order);
    for (const auto& prefix : prefixes) {
      TaskResult r = run_task(s, prefix);
      absorb(r);
    }
  } else {
    // Workers claim tasks in index order; the calling thread absorbs
    // results strictly in index order so output is schedule-independent.
    std::vector<std::optional<TaskResult>> results(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable ready;
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        Search s(order);
        for (std::size_t t; (t = next.fetch_add(1)) < prefixes.size();) {
          TaskResult r = run_task(s, prefixes[t]);
          {
            std::lock_guard lock(mu);
            results[t] = std::move(r);
          }
          ready.notify_all();
        }
      });
    }
    for (std::size_t t = 0; t < prefixes.size(); ++t) {
      TaskResult r;
      {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return results[t].has_value(); });
        r = std::move(*results[t]);
        results[t].reset();
      }
      absorb(r);
    }
  }

  CensusReport report;
  report.order = order;
  report.total_ag = totals[0];
  for (std::size_t f = 0; f < filters.size(); ++f) {
    report.per_filter.emplace_back(filters[f].name, totals[f + 1]);
  }
  report.generated_nodes = nodes;
  report.wall_time = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace

CensusReport enumerate_ag(std::size_t order,
                          const std::vector<CensusFilter>& filters,
                          const MagmaSink& sink,
                          const EnumerationOptions& options) {
  return run_enumeration(order, filters, kEmitAll, sink, options);
}

CensusReport enumerate_ag(std::size_t order, const CensusFilter& filter,
                          const MagmaSink& sink,
                          const EnumerationOptions& options) {
  return run_enumeration(order, std::vector{filter}, 0, sink, options);
}

CensusReport census(std::size_t order, const EnumerationOptions& options) {
  return enumerate_ag(order, census_filters(), {}, options);
}

}  // namespace agkit
