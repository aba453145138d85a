#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weylcells/coxeter.hpp"

namespace weylcells {

/// Permutation of the simple-root indices preserving the Cartan integers.
class DiagramAutomorphism {
 public:
  /// Throws std::invalid_argument unless `images` is a permutation of the
  /// simple roots of `rs` that preserves every Cartan integer.
  DiagramAutomorphism(const RootSystem& rs, std::vector<int> images);

  static DiagramAutomorphism identity(const RootSystem& rs);
  /// alpha -> -w0(alpha).
  static DiagramAutomorphism delta0(const RootSystem& rs);

  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  /// Induced automorphism of W: s_i -> s_{delta(i)}.
  WeylElement apply(const RootSystem& rs, const WeylElement& w) const;

  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;

 private:
  std::vector<int> images_;
};

/// Elements sorted canonically together with their extremal-length sublists.
struct ConjClass {
  WeylElement representative;
  std::vector<WeylElement> elements;
  std::vector<WeylElement> max_length;
  std::vector<WeylElement> min_length;
  int max_len = 0;
  int min_len = 0;

  std::size_t size() const { return elements.size(); }
  bool contains(const WeylElement& w) const;
};

struct TwistedConjClass : ConjClass {
  std::vector<int> delta;
};

/// Orbit of w under conjugation, by BFS over the simple reflections.
/// Throws GuardExceeded if the orbit grows past `limit`.
ConjClass conj_class(const RootSystem& rs, const WeylElement& w, std::uint64_t limit = kDefaultEnumerationLimit);

/// Orbit of w under u . w = delta(u) w u^{-1}.
TwistedConjClass twisted_class(const RootSystem& rs, const WeylElement& w, const DiagramAutomorphism& delta,
                               std::uint64_t limit = kDefaultEnumerationLimit);

/// Partition of the whole group into conjugacy classes, ordered by smallest element.
std::vector<ConjClass> conjugacy_classes(const RootSystem& rs, std::uint64_t limit = kDefaultEnumerationLimit);

inline const std::vector<WeylElement>& max_length_elements(const ConjClass& c) { return c.max_length; }
inline const std::vector<WeylElement>& min_length_elements(const ConjClass& c) { return c.min_length; }
inline bool is_unique_max(const ConjClass& c) { return c.max_length.size() == 1; }
inline bool is_unique_min(const ConjClass& c) { return c.min_length.size() == 1; }

/// The set of unique-maximal-length elements (or, for the primed variant,
/// maximal-length involutions) together with their fixed simple roots.
struct MaximalSet {
  CartanType type;
  std::vector<WeylElement> members;
  std::vector<SimpleSubset> fixed_subsets;  ///< J_m, parallel to members

  bool contains(const WeylElement& w) const;
};

enum class MaximalSetMode {
  kInvolutions,  ///< scan only classes of involutions
  kExhaustive,   ///< scan every conjugacy class
};

MaximalSet compute_M(const RootSystem& rs, MaximalSetMode mode = MaximalSetMode::kInvolutions,
                     std::uint64_t limit = kDefaultEnumerationLimit);
MaximalSet compute_M_prime(const RootSystem& rs, std::uint64_t limit = kDefaultEnumerationLimit);

/// s_i w s_i when that does not decrease length.
std::optional<WeylElement> ascent_step(const RootSystem& rs, const WeylElement& w, int i);
/// Reflexive-transitive closure of ascent_step: is `target` reachable from w?
bool ascent_reachable(const RootSystem& rs, const WeylElement& w, const WeylElement& target);

/// w ~x w': equal lengths, w' = x w x^{-1}, and l(w') = l(xw) + l(x) or
/// l(w') = l(x) + l(w x^{-1}).
bool sim_step(const RootSystem& rs, const WeylElement& w, const WeylElement& w_prime, const WeylElement& x);

inline constexpr std::uint64_t kSimSearchLimit = 10'000;

/// Closure of sim_step over chains; x ranges over the whole group, so
/// |W| <= kSimSearchLimit is required (GuardExceeded otherwise).
bool sim_reachable(const RootSystem& rs, const WeylElement& w, const WeylElement& w_prime);

/// Elements reachable from `start` by sim_step chains, given the full group.
std::vector<WeylElement> sim_component(const RootSystem& rs, const std::vector<WeylElement>& group,
                                       const WeylElement& start);

/// J is delta0-invariant and w0 agrees with w_{0,J} on J.
bool w0_compatible(const RootSystem& rs, SimpleSubset j);

/// No isolated alpha in J admits a simple beta != alpha with equal length,
/// <beta, alpha> != 0, beta orthogonal to J \ {alpha}, and -w0(beta) = beta.
bool isolation_condition(const RootSystem& rs, SimpleSubset j);

/// Subsets with the w0-compatibility condition, sorted by bitmask.
std::vector<SimpleSubset> enumerate_J_prime(const RootSystem& rs);
/// Subsets with both the w0-compatibility and isolation conditions, sorted by bitmask.
std::vector<SimpleSubset> enumerate_J(const RootSystem& rs);

/// w0 * w_{0,J}.
WeylElement m_of_J(const RootSystem& rs, SimpleSubset j);
/// Simple roots fixed by m.
SimpleSubset J_of_m(const RootSystem& rs, const WeylElement& m);

/// Tabulated classification: the non-trivial subsets per family plus the
/// empty set and the full set, sorted by bitmask.
std::vector<SimpleSubset> catalog_J(CartanType t);

}  // namespace weylcells
