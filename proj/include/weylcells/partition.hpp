#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "weylcells/permutation.hpp"

namespace weylcells {

/// Integer partition: a non-increasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if a part is non-positive or the
  /// sequence increases.
  explicit Partition(std::vector<int> parts);

  /// Parses "2,2,1".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  /// 0 past the last part.
  int part(int k) const { return k < length() ? parts_[static_cast<std::size_t>(k)] : 0; }

  /// Comma-separated parts, e.g. "2,2,1"; "" for the empty partition.
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Transpose of the Young diagram.
Partition dual(const Partition& lambda);

/// Dominance order with zero padding: every partial sum of lambda is at most
/// the corresponding partial sum of mu. Throws std::invalid_argument on
/// unequal weights.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// (2^l, 1^{p-2l}); throws std::invalid_argument unless 0 <= l <= p/2.
Partition two_one_shape(int p, int l);

/// Both sides of the criterion comparing (2^l, 1^{p-2l}) with mu.
struct TwoOneCriterion {
  bool dominance = false;       ///< (2^l, 1^{p-2l}) <= mu
  bool length_bound = false;    ///< length(mu) <= p - l
  bool agree() const { return dominance == length_bound; }
};

TwoOneCriterion two_one_criterion(int p, int l, const Partition& mu);

/// Cycle type of a permutation, fixed points included.
Partition cycle_type(const Permutation& w);

/// All partitions of p in reverse lexicographic order, starting with (p).
std::vector<Partition> partitions_of(int p);

}  // namespace weylcells
