#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// calls into the enumerator or the term evaluator.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "agkit/identity.hpp"
#include "agkit/magma.hpp"

namespace agkit::oracle {

using Linear = std::vector<Element>;

inline Linear linear_of(const Magma& m) {
  return Linear(m.linear().begin(), m.linear().end());
}

inline Magma magma_of(std::size_t n, const Linear& cells) {
  return Magma(n, std::span<const Element>(cells));
}

/// Lexicographically least relabeling, by direct minimization over S_n.
inline Linear canonical(std::size_t n, const Linear& t) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  Linear best;
  do {
    Linear r(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        r[p[a] * n + p[b]] = p[t[a * n + b]];
      }
    }
    if (best.empty() || r < best) best = r;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool left_invertive(std::size_t n, const Linear& t) {
  auto m = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(m(c, b), a)) return false;
  return true;
}

/// Every n x n table, in lexicographic order.
inline void for_each_table(std::size_t n,
                           const std::function<void(const Linear&)>& visit) {
  Linear t(n * n, 0);
  for (;;) {
    visit(t);
    std::size_t i = t.size();
    while (i > 0) {
      if (++t[i - 1] < n) break;
      t[--i] = 0;
    }
    if (i == 0) return;
  }
}

/// Canonical representatives of all AG-groupoid classes of order n.
inline std::set<Linear> ag_classes(std::size_t n) {
  std::set<Linear> out;
  for_each_table(n, [&](const Linear& t) {
    if (left_invertive(n, t)) out.insert(canonical(n, t));
  });
  return out;
}

/// Hand-written check of one catalog identity with explicit loops.
inline bool holds(const Magma& mg, IdentityId id) {
  const std::size_t n = mg.order();
  auto m = [&](std::size_t a, std::size_t b) -> std::size_t {
    return mg(static_cast<Element>(a), static_cast<Element>(b));
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          bool ok = true;
          switch (id) {
            case IdentityId::LeftInvertive:
              ok = m(m(a, b), c) == m(m(c, b), a);
              break;
            case IdentityId::Associative:
              ok = m(m(a, b), c) == m(a, m(b, c));
              break;
            case IdentityId::Commutative:
              ok = m(a, b) == m(b, a);
              break;
            case IdentityId::Medial:
              ok = m(m(a, b), m(c, d)) == m(m(a, c), m(b, d));
              break;
            case IdentityId::Paramedial:
              ok = m(m(a, b), m(c, d)) == m(m(d, b), m(c, a));
              break;
            case IdentityId::RightCommutative:
              ok = m(a, m(b, c)) == m(a, m(c, b));
              break;
            case IdentityId::SelfDual:
              ok = m(a, m(b, c)) == m(c, m(b, a));
              break;
            case IdentityId::LeftDistributive:
              ok = m(a, m(b, c)) == m(m(a, b), m(a, c));
              break;
            case IdentityId::RightDistributive:
              ok = m(m(a, b), c) == m(m(a, c), m(b, c));
              break;
            case IdentityId::AgStarStar:
              ok = m(a, m(b, c)) == m(b, m(a, c));
              break;
            case IdentityId::Flexible:
              ok = m(a, m(b, a)) == m(m(a, b), a);
              break;
            case IdentityId::Lad:
              ok = m(a, m(b, c)) == m(m(a, b), m(c, a));
              break;
            case IdentityId::Rad:
              ok = m(m(a, b), c) == m(m(c, a), m(b, c));
              break;
            case IdentityId::LeftNuclearSquare:
              ok = m(m(a, a), m(b, c)) == m(m(m(a, a), b), c);
              break;
          }
          if (!ok) return false;
        }
      }
    }
  }
  return true;
}

inline Magma random_magma(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, static_cast<int>(n) - 1);
  Linear cells(n * n);
  for (auto& c : cells) c = static_cast<Element>(dist(rng));
  return magma_of(n, cells);
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace agkit::oracle
