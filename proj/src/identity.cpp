#include "agkit/identity.hpp"

#include <stdexcept>

namespace agkit {

namespace {

constexpr std::array<std::string_view, kIdentityCount> kNames = {
    "left-invertive",     "associative",        "commutative",
    "medial",             "paramedial",         "right-commutative",
    "self-dual",          "left-distributive",  "right-distributive",
    "ag-star-star",       "flexible",           "lad",
    "rad",                "left-nuclear-square",
};

constexpr std::size_t kMaxStack = 16;

std::vector<CatalogEntry> build_catalog() {
  const Term a = Term::var(0);
  const Term b = Term::var(1);
  const Term c = Term::var(2);
  const Term d = Term::var(3);
  using I = IdentityId;
  std::vector<CatalogEntry> out;
  out.push_back({I::LeftInvertive, {(a * b) * c, (c * b) * a}});
  out.push_back({I::Associative, {(a * b) * c, a * (b * c)}});
  out.push_back({I::Commutative, {a * b, b * a}});
  out.push_back({I::Medial, {(a * b) * (c * d), (a * c) * (b * d)}});
  out.push_back({I::Paramedial, {(a * b) * (c * d), (d * b) * (c * a)}});
  out.push_back({I::RightCommutative, {a * (b * c), a * (c * b)}});
  out.push_back({I::SelfDual, {a * (b * c), c * (b * a)}});
  out.push_back({I::LeftDistributive, {a * (b * c), (a * b) * (a * c)}});
  out.push_back({I::RightDistributive, {(a * b) * c, (a * c) * (b * c)}});
  out.push_back({I::AgStarStar, {a * (b * c), b * (a * c)}});
  out.push_back({I::Flexible, {a * (b * a), (a * b) * a}});
  out.push_back({I::Lad, {a * (b * c), (a * b) * (c * a)}});
  out.push_back({I::Rad, {(a * b) * c, (c * a) * (b * c)}});
  // Imported definition: a^2 lies in the left nucleus.
  out.push_back({I::LeftNuclearSquare, {(a * a) * (b * c), ((a * a) * b) * c}});
  return out;
}

// Advances `values` over the positions listed in `vars` like an odometer
// whose first variable is most significant. Returns false after the last
// assignment.
bool next_assignment(std::array<Element, kMaxVariables>& values,
                     std::span<const std::uint8_t> vars, std::size_t n) {
  for (std::size_t i = vars.size(); i-- > 0;) {
    Element& v = values[vars[i]];
    if (++v < n) return true;
    v = 0;
  }
  return false;
}

}  // namespace

std::string_view name(IdentityId id) {
  return kNames[static_cast<std::size_t>(id)];
}

std::optional<IdentityId> identity_from_name(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return static_cast<IdentityId>(i);
  }
  return std::nullopt;
}

Term Term::var(std::uint8_t index) {
  if (index >= kMaxVariables) {
    throw std::invalid_argument("term variable index out of range");
  }
  Term t;
  t.tokens_.push_back(index);
  return t;
}

Term operator*(const Term& left, const Term& right) {
  Term t;
  t.tokens_.reserve(left.tokens_.size() + right.tokens_.size() + 1);
  t.tokens_ = left.tokens_;
  t.tokens_.insert(t.tokens_.end(), right.tokens_.begin(), right.tokens_.end());
  t.tokens_.push_back(Term::kProduct);
  if (t.tokens_.size() > 2 * kMaxStack) {
    throw std::invalid_argument("term too deep");
  }
  return t;
}

unsigned Term::variable_mask() const noexcept {
  unsigned mask = 0;
  for (auto tok : tokens_) {
    if (tok != kProduct) mask |= 1u << tok;
  }
  return mask;
}

Element Term::evaluate(const Magma& m,
                       std::span<const Element> assignment) const {
  std::array<Element, kMaxStack> stack;
  std::size_t top = 0;
  for (auto tok : tokens_) {
    if (tok == kProduct) {
      --top;
      stack[top - 1] = m(stack[top - 1], stack[top]);
    } else {
      stack[top++] = assignment[tok];
    }
  }
  return stack[0];
}

std::string Term::to_string() const {
  struct Piece {
    std::string text;
    bool product;
  };
  std::vector<Piece> stack;
  for (auto tok : tokens_) {
    if (tok == kProduct) {
      Piece right = std::move(stack.back());
      stack.pop_back();
      Piece left = std::move(stack.back());
      stack.pop_back();
      auto wrap = [](const Piece& p) {
        return p.product ? "(" + p.text + ")" : p.text;
      };
      stack.push_back({wrap(left) + wrap(right), true});
    } else {
      stack.push_back({std::string(1, static_cast<char>('a' + tok)), false});
    }
  }
  return stack.back().text;
}

TermEquation::TermEquation(Term lhs, Term rhs)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  const unsigned mask = lhs_.variable_mask() | rhs_.variable_mask();
  for (std::uint8_t v = 0; v < kMaxVariables; ++v) {
    if (mask & (1u << v)) variables_.push_back(v);
  }
}

std::string TermEquation::to_string() const {
  return lhs_.to_string() + " = " + rhs_.to_string();
}

std::span<const CatalogEntry> catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const TermEquation& equation(IdentityId id) {
  return catalog()[static_cast<std::size_t>(id)].equation;
}

std::array<Element, kMaxVariables> Witness::values() const {
  std::array<Element, kMaxVariables> out{};
  for (auto [var, value] : assignment) out[var - 'a'] = value;
  return out;
}

std::optional<Witness> witness_failure(const Magma& m, const TermEquation& eq) {
  std::array<Element, kMaxVariables> values{};
  const auto vars = eq.variables();
  do {
    const Element l = eq.lhs().evaluate(m, values);
    const Element r = eq.rhs().evaluate(m, values);
    if (l != r) {
      Witness w;
      for (auto v : vars) {
        w.assignment.emplace_back(static_cast<char>('a' + v), values[v]);
      }
      w.lhs_value = l;
      w.rhs_value = r;
      return w;
    }
  } while (next_assignment(values, vars, m.order()));
  return std::nullopt;
}

std::optional<Witness> witness_failure(const Magma& m, IdentityId id) {
  return witness_failure(m, equation(id));
}

bool satisfies(const Magma& m, const TermEquation& eq) {
  return !witness_failure(m, eq).has_value();
}

bool satisfies(const Magma& m, IdentityId id) {
  return satisfies(m, equation(id));
}

PropertySet::PropertySet(std::initializer_list<IdentityId> ids) {
  for (auto id : ids) insert(id);
}

std::vector<IdentityId> PropertySet::ids() const {
  std::vector<IdentityId> out;
  for (auto id : kAllIdentities) {
    if (contains(id)) out.push_back(id);
  }
  return out;
}

std::string PropertySet::to_string() const {
  std::string out;
  for (auto id : ids()) {
    if (!out.empty()) out += ',';
    out += name(id);
  }
  return out;
}

PropertySet classify(const Magma& m, const PropertySet& which) {
  PropertySet out;
  for (auto id : which.ids()) {
    if (satisfies(m, id)) out.insert(id);
  }
  return out;
}

PropertySet classify(const Magma& m) {
  PropertySet all;
  for (auto id : kAllIdentities) all.insert(id);
  return classify(m, all);
}

}  // namespace agkit
