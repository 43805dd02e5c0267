#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

#include "agkit/enumerator.hpp"

namespace agkit {

const std::vector<Permutation>& all_permutations(std::size_t n) {
  if (n > kMaxOrder) {
    throw std::invalid_argument("permutation degree exceeds maximum order");
  }
  static std::array<std::vector<Permutation>, kMaxOrder + 1> cache;
  static std::array<std::once_flag, kMaxOrder + 1> once;
  std::call_once(once[n], [n] {
    std::vector<Element> images(n);
    std::iota(images.begin(), images.end(), Element{0});
    do {
      cache[n].emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
  });
  return cache[n];
}

namespace {

// Compares relabel(m, p) against `best` cell by cell without building it.
std::strong_ordering compare_relabeled(const Magma& m, const Permutation& p,
                                       const Permutation& p_inv,
                                       std::span<const Element> best) {
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = p(m(p_inv(static_cast<Element>(i)),
                            p_inv(static_cast<Element>(j))));
      if (auto c = v <=> best[i * n + j]; c != 0) return c;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

Magma canonical_form(const Magma& m) {
  Magma best = m;
  for (const auto& p : all_permutations(m.order())) {
    const Permutation p_inv = p.inverse();
    if (compare_relabeled(m, p, p_inv, best.linear()) < 0) {
      best = relabel(m, p);
    }
  }
  return best;
}

bool is_canonical(const Magma& m) {
  for (const auto& p : all_permutations(m.order())) {
    if (compare_relabeled(m, p, p.inverse(), m.linear()) < 0) return false;
  }
  return true;
}

}  // namespace agkit
