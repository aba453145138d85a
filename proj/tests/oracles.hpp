#pragma once

// Independent brute-force references used by the unit and acceptance tests.

#include <set>
#include <unordered_set>
#include <vector>

#include "weylcells/coxeter.hpp"

namespace weylcells::testing {

/// u <= w iff u is the product of some subword of a fixed reduced word of w.
inline bool bruhat_leq_subword(const RootSystem& rs, const WeylElement& u, const WeylElement& w) {
  const auto word = rs.reduced_word(w);
  const std::size_t n = word.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    WeylElement x = rs.identity();
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1u) x = x * rs.simple_reflection(word[k]);
    if (x == u) return true;
  }
  return false;
}

/// Closure of the identity under right multiplication by the generators in `subset`.
inline std::vector<WeylElement> generated_subgroup(const RootSystem& rs, SimpleSubset subset) {
  std::unordered_set<WeylElement, WeylElementHash> seen{rs.identity()};
  std::vector<WeylElement> frontier{rs.identity()};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int i : subset.indices()) {
        const auto x = w * rs.simple_reflection(i);
        if (seen.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Length as the number of positive roots sent negative, by direct action.
inline int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int c = 0;
  for (const auto& r : rs.positive_roots())
    if (!RootSystem::is_positive(rs.act(w, r))) ++c;
  return c;
}

/// Conjugacy class by brute force over all group elements.
inline std::set<WeylElement> conjugacy_class_brute(const RootSystem& rs, const std::vector<WeylElement>& group,
                                                   const WeylElement& w) {
  std::set<WeylElement> out;
  for (const auto& x : group) out.insert(x * w * rs.inverse(x));
  return out;
}

}  // namespace weylcells::testing
