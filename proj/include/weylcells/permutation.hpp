#pragma once

#include <compare>
#include <optional>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weylcells/coxeter.hpp"

namespace weylcells {

/// Permutation of {0, ..., n-1}, stored in one-line form (images).
/// Text I/O is 1-based: cycle notation "(1 4)(2 3)" or one-line "4 3 2 1".
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Whitespace-insensitive 1-based cycle notation; "()" or "e" is the identity.
  static Permutation parse_cycles(std::string_view text, int degree);
  /// 1-based one-line form, space or comma separated.
  static Permutation parse_one_line(std::string_view text);
  /// Accepts either notation; cycle notation when the text contains '('.
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;

  /// Number of i with w(i) > i; the number of 2-cycles for an involution.
  int l2() const;
  /// Inversion count, which is the Coxeter length in S_n.
  int inversions() const;
  /// Cycle lengths, including fixed points, sorted non-increasingly.
  std::vector<int> cycle_lengths() const;

  /// 1-based cycle notation with fixed points omitted; "e" for the identity.
  std::string cycle_string() const;
  std::string one_line_string() const;

  /// Composition as functions: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All permutations of the given degree in lexicographic one-line order.
std::vector<Permutation> all_permutations(int degree);

/// The permutation i -> n-1-i, the longest element of S_n.
Permutation reversal(int degree);

/// Transport between S_{n+1} and the Weyl group of A_n, where s_i is the
/// transposition (i, i+1) and w(e_j - e_k) = e_{w(j)} - e_{w(k)}.
WeylElement to_weyl(const RootSystem& type_a, const Permutation& p);
Permutation to_permutation(const RootSystem& type_a, const WeylElement& w);

/// Bruhat order on S_n by the rank-matrix (tableau) criterion. Independent of
/// the lifting-property route used by RootSystem::bruhat_leq.
bool bruhat_leq_tableau(const Permutation& u, const Permutation& w);

/// Bruhat order on S_n computed in the Weyl group of A_{n-1}.
class PermutationBruhat {
 public:
  explicit PermutationBruhat(int degree);
  int degree() const { return degree_; }
  bool leq(const Permutation& u, const Permutation& w) const;

 private:
  int degree_;
  std::optional<RootSystem> type_a_;
};

/// Cycle notation for type A, the 1-based reduced word otherwise.
std::string element_string(const RootSystem& rs, const WeylElement& w);

}  // namespace weylcells
