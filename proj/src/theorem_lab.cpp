#include "agkit/theorem_lab.hpp"

#include <sstream>

namespace agkit {

Implication::Implication(std::string impl_name, PropertySet ante,
                         PropertySet cons, std::string impl_source)
    : name(std::move(impl_name)),
      antecedent(std::move(ante)),
      consequent(std::move(cons)),
      source(std::move(impl_source)) {
  if (antecedent.empty() || consequent.empty()) {
    throw std::invalid_argument("implication sides must be nonempty");
  }
  antecedent.insert(IdentityId::LeftInvertive);
  imported_definition = consequent.contains(IdentityId::LeftNuclearSquare) ||
                        antecedent.contains(IdentityId::LeftNuclearSquare);
}

std::vector<Implication> paper_implications() {
  using I = IdentityId;
  const PropertySet lad{I::LeftInvertive, I::Lad};
  return {
      {"LAD=>RC", lad, {I::RightCommutative}, "LAD characterization (i)"},
      {"LAD=>self-dual", lad, {I::SelfDual}, "LAD characterization (ii)"},
      {"LAD=>AG**", lad, {I::AgStarStar}, "LAD characterization (iii)"},
      {"LAD=>LD", lad, {I::LeftDistributive}, "LAD characterization (iv)"},
      {"LAD=>paramedial", lad, {I::Paramedial}, "LAD corollary"},
      {"LAD=>left-nuclear-square", lad, {I::LeftNuclearSquare},
       "LAD corollary"},
      {"RAD=>RD", {I::LeftInvertive, I::Rad}, {I::RightDistributive},
       "RAD theorem"},
      {"AD=>semigroup", {I::LeftInvertive, I::Lad, I::Rad}, {I::Associative},
       "AD theorem"},
  };
}

std::vector<ImplicationReport> check_implications(
    const std::vector<Implication>& impls, std::size_t max_order,
    const EnumerationOptions& options) {
  check_order(max_order, options.allow_long_run);
  std::vector<ImplicationReport> reports;
  PropertySet relevant;
  for (const auto& impl : impls) {
    reports.push_back({impl, max_order, 0, 0, std::nullopt});
    relevant = relevant | impl.antecedent | impl.consequent;
  }
  for (std::size_t order = 1; order <= max_order; ++order) {
    enumerate_ag(
        order, std::vector<CensusFilter>{}, [&](const Magma& m) {
          const PropertySet props = classify(m, relevant);
          for (auto& r : reports) {
            ++r.classes_checked;
            if (!props.includes(r.implication.antecedent)) continue;
            ++r.antecedent_classes;
            if (!r.counterexample && !props.includes(r.implication.consequent)) {
              r.counterexample = m;
            }
          }
        },
        options);
  }
  return reports;
}

ImplicationReport check_implication(const Implication& impl,
                                    std::size_t max_order,
                                    const EnumerationOptions& options) {
  return check_implications({impl}, max_order, options).front();
}

std::optional<Magma> find_counterexample(const PropertySet& required,
                                         const PropertySet& forbidden,
                                         std::size_t max_order,
                                         const EnumerationOptions& options) {
  check_order(max_order, options.allow_long_run);
  const CensusFilter filter("search", required | PropertySet{IdentityId::LeftInvertive},
                            forbidden);
  std::optional<Magma> found;
  for (std::size_t order = 1; order <= max_order && !found; ++order) {
    enumerate_ag(
        order, filter,
        [&](const Magma& m) {
          if (!found) found = m;
        },
        options);
  }
  return found;
}

std::string render_implication_report(const ImplicationReport& r) {
  const Implication& impl = r.implication;
  std::ostringstream os;
  os << "implication: " << impl.name << '\n'
     << "source: " << impl.source << '\n'
     << "antecedent: " << impl.antecedent.to_string() << '\n'
     << "consequent: " << impl.consequent.to_string() << '\n'
     << "orders: 1.." << r.max_order << '\n'
     << "classes_checked: " << r.classes_checked << '\n'
     << "antecedent_classes: " << r.antecedent_classes << '\n'
     << "verdict: " << (r.holds() ? "holds" : "counterexample") << '\n';
  if (impl.imported_definition) {
    os << "caveat: left-nuclear-square uses the imported definition "
       << equation(IdentityId::LeftNuclearSquare).to_string() << '\n';
  }
  if (r.counterexample) {
    os << "counterexample:\n" << render_magma(*r.counterexample);
  }
  return os.str();
}

}  // namespace agkit
