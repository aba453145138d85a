#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylcells/partition.hpp"
#include "weylcells/permutation.hpp"

namespace weylcells {

/// Jordan blocks attached to one eigenvalue label.
struct EigenBlocks {
  std::string label;
  std::vector<int> blocks;  ///< non-increasing, positive

  friend bool operator==(const EigenBlocks&, const EigenBlocks&) = default;
};

/// Conjugacy class of SL(n+1) over an algebraically closed field, described
/// by its Jordan data. Eigenvalues are opaque labels; concrete values are
/// optional and only consulted by the finite-field oracle.
class JordanClass {
 public:
  /// Blocks are sorted non-increasingly. Throws std::invalid_argument on
  /// empty or duplicate labels, non-positive blocks, a block total other
  /// than n+1, or values for unknown labels.
  JordanClass(int n_plus_1, std::vector<EigenBlocks> eigen_data,
              std::optional<std::map<std::string, int>> values = std::nullopt);

  int n_plus_1() const { return n_plus_1_; }
  const std::vector<EigenBlocks>& eigen_data() const { return eigen_data_; }
  const std::optional<std::map<std::string, int>>& values() const { return values_; }

  /// Number of Jordan blocks for the label with the most blocks.
  int max_block_count() const;
  bool is_central() const;

  /// Throws std::invalid_argument unless every label has a value, values are
  /// pairwise distinct and non-zero mod p, and the determinant is 1 mod p.
  void validate_values(int p) const;

  /// Compact form, e.g. "SL4 a:[2,1,1]" or "SL3 1:[2] 3:[1]" with values.
  std::string describe() const;

  nlohmann::json to_json() const;
  /// {"n_plus_1": int, "eigen_data": [{"label": str, "blocks": [int]}],
  ///  "values": {label: int}?}
  static JordanClass from_json(const nlohmann::json& j);

  friend bool operator==(const JordanClass&, const JordanClass&) = default;

 private:
  int n_plus_1_;
  std::vector<EigenBlocks> eigen_data_;
  std::optional<std::map<std::string, int>> values_;
};

/// Every Jordan datum of total size n+1 up to relabelling, with labels
/// c1, c2, ... in order of listing.
std::vector<JordanClass> all_jordan_types(int n_plus_1);

/// An involution of S_{n+1} with its cached 2-cycle count.
class InvolutionPerm {
 public:
  /// Throws std::invalid_argument if p is not an involution.
  explicit InvolutionPerm(Permutation p);

  const Permutation& perm() const { return perm_; }
  int l2() const { return l2_; }
  int degree() const { return perm_.degree(); }

  friend bool operator==(const InvolutionPerm&, const InvolutionPerm&) = default;

 private:
  Permutation perm_;
  int l2_;
};

/// (n+1) - max over labels of the number of blocks.
int r_of(const JordanClass& c);
/// min(r(C), floor((n+1)/2)).
int l_of(const JordanClass& c);

/// Partition whose t-th part sums the t-th largest block over all labels,
/// for t up to the largest block count.
Partition nu_tilde_star(const JordanClass& c);

/// (1, n+1)(2, n)...(l, n+2-l); throws std::invalid_argument unless
/// 0 <= l <= floor((n+1)/2).
InvolutionPerm m_l_element(int n_plus_1, int l);

/// m_{l(C)}.
InvolutionPerm m_C(const JordanClass& c);

/// C meets BwB for the involution w iff l2(w) <= l(C).
/// Throws std::invalid_argument on a degree mismatch.
bool decide_involution_cell(const JordanClass& c, const InvolutionPerm& w);

/// l2(w) <= r(C); false certifies that C misses BwB.
bool necessary_condition(const JordanClass& c, const Permutation& w);

/// The full class of permutations with cycle type lambda lies in W_C iff
/// lambda is dominated by nu~*(C). Throws on a weight mismatch.
bool class_in_WC(const JordanClass& c, const Partition& lambda);

inline constexpr int kMaxEnumerationDegree = 8;
inline constexpr int kMaxSphericalDegree = 10;

/// {w in S_{n+1} : w <= m_C}, sorted. GuardExceeded past degree 8.
std::vector<Permutation> enumerate_WC_minus(const JordanClass& c);

/// Semisimple with exactly two eigenvalues, or a single eigenvalue with all
/// blocks of size at most 2 that is not central.
bool is_spherical(const JordanClass& c);

struct SphericalResult {
  std::vector<Permutation> elements;
  std::string caveat;
};

/// {w : w^2 = 1, l2(w) <= r(C)} for a spherical class; the result carries
/// the characteristic-2 caveat. Throws std::invalid_argument for
/// non-spherical input and GuardExceeded past degree 10.
SphericalResult spherical_WC(const JordanClass& c);

struct ClosureConsequences {
  bool involution_implication = false;  ///< w in W_{C'} implies w in W_C for all involutions
  bool bruhat_monotone = false;         ///< m_{C'} <= m_C
  bool holds() const { return involution_implication && bruhat_monotone; }
};

/// Combinatorial consequences of C' lying in the closure of C; the closure
/// relation itself is the caller's assertion.
ClosureConsequences monotone_under_closure(const JordanClass& c_prime, const JordanClass& c);

/// All involutions of S_n, sorted.
std::vector<Permutation> involutions(int degree);

}  // namespace weylcells
