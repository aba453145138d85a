#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace weylcells {

inline constexpr int kMaxRank = 8;

/// Default ceiling on |W| for operations that materialize the whole group.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/// Thrown when a computation would exceed a configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Cartan type such as A3 or E6. Bourbaki node labelling throughout.
struct CartanType {
  Family family = Family::A;
  int rank = 0;

  /// Parses "A3", "e6", ... and validates the rank bounds.
  static CartanType parse(std::string_view text);

  std::string name() const;

  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

/// Throws std::invalid_argument unless the rank is legal for the family
/// (A n>=1, B/C n>=2, D n>=4, E 6..8, F 4, G 2).
void validate(CartanType t);

std::uint64_t weyl_group_order(CartanType t);

/// Coordinates of a root-lattice vector in the simple-root basis.
/// Entries past the rank are zero.
using RootCoords = std::array<int, kMaxRank>;

struct RootCoordsHash {
  std::size_t operator()(const RootCoords& r) const noexcept;
};

/// A set of simple roots, stored as a bitmask over 0-based indices.
class SimpleSubset {
 public:
  constexpr SimpleSubset() = default;
  constexpr explicit SimpleSubset(std::uint32_t bits) : bits_(bits) {}
  static SimpleSubset from_indices(std::initializer_list<int> zero_based);
  static SimpleSubset from_indices(std::span<const int> zero_based);
  static constexpr SimpleSubset full(int rank) { return SimpleSubset((1u << rank) - 1u); }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr SimpleSubset with(int i) const { return SimpleSubset(bits_ | (1u << i)); }
  constexpr SimpleSubset without(int i) const { return SimpleSubset(bits_ & ~(1u << i)); }
  int size() const;
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }
  std::vector<int> indices() const;

  /// 1-based set notation, e.g. "{2,3}".
  std::string to_string() const;

  friend constexpr auto operator<=>(SimpleSubset, SimpleSubset) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Weyl group element stored as the integer matrix of its action on the
/// simple roots: column j holds the coordinates of w(alpha_j).
/// The matrix is the canonical form, so equality and hashing are by entries.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(CartanType t);

  CartanType type() const { return type_; }
  int rank() const { return type_.rank; }

  /// Coefficient of alpha_row in w(alpha_col).
  int entry(int row, int col) const { return m_[col * kMaxRank + row]; }
  RootCoords column(int col) const;
  bool is_identity() const;

  std::span<const std::int8_t> raw() const { return m_; }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b);

  friend WeylElement operator*(const WeylElement& u, const WeylElement& v);

 private:
  friend class RootSystem;
  void set(int row, int col, int value) { m_[col * kMaxRank + row] = static_cast<std::int8_t>(value); }

  CartanType type_{};
  std::array<std::int8_t, kMaxRank * kMaxRank> m_{};
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

/// Positive roots spanned by J together with the longest element of W_J.
struct Parabolic {
  SimpleSubset subset;
  WeylElement longest;
  std::vector<RootCoords> positive_roots;
};

/// Root system of a simple Cartan type with the symmetrized invariant form
/// normalized so short roots have squared length 2.
class RootSystem {
 public:
  explicit RootSystem(CartanType t);

  CartanType type() const { return type_; }
  int rank() const { return type_.rank; }

  const std::vector<RootCoords>& roots() const { return roots_; }
  /// Sorted by height, then lexicographically.
  const std::vector<RootCoords>& positive_roots() const { return positive_; }
  RootCoords simple_root(int i) const;

  /// Symmetric invariant form on the root lattice.
  int pairing(const RootCoords& a, const RootCoords& b) const;
  int simple_pairing(int i, int j) const { return gram_[i][j]; }
  /// 2<alpha_j, alpha_i>/<alpha_i, alpha_i>.
  int cartan_integer(int i, int j) const { return 2 * gram_[i][j] / gram_[i][i]; }

  bool is_root(const RootCoords& r) const { return root_index_.contains(r); }
  static bool is_positive(const RootCoords& r);

  WeylElement identity() const { return WeylElement::identity(type_); }
  /// 0-based index; throws std::out_of_range.
  WeylElement simple_reflection(int i) const;
  WeylElement from_word(std::span<const int> word) const;

  RootCoords act(const WeylElement& w, const RootCoords& root) const;
  int length(const WeylElement& w) const;
  WeylElement inverse(const WeylElement& w) const;

  /// l(w s_i) < l(w), i.e. w(alpha_i) is negative.
  bool is_right_descent(const WeylElement& w, int i) const;
  bool is_left_descent(const WeylElement& w, int i) const;
  WeylElement times_simple(const WeylElement& w, int i) const;  // w s_i
  WeylElement simple_times(int i, const WeylElement& w) const;  // s_i w
  WeylElement conjugate_by_simple(const WeylElement& w, int i) const;  // s_i w s_i

  /// Word of 0-based indices whose product is w, of length l(w).
  std::vector<int> reduced_word(const WeylElement& w) const;

  WeylElement longest_element() const { return w0_; }
  WeylElement longest_element(SimpleSubset j) const;
  Parabolic parabolic(SimpleSubset j) const;

  bool bruhat_leq(const WeylElement& u, const WeylElement& w) const;

  /// Index of -w0(alpha_i).
  int delta0_index(int i) const { return delta0_[i]; }
  const std::vector<int>& delta0_permutation() const { return delta0_; }
  RootCoords delta0_root(const RootCoords& root) const;
  WeylElement delta0(const WeylElement& w) const;

  /// Products of all simple reflections in every order, deduplicated and sorted.
  std::vector<WeylElement> coxeter_elements() const;

  /// Every element of W, sorted. Throws GuardExceeded when |W| exceeds the limit.
  std::vector<WeylElement> elements(std::uint64_t limit = kDefaultEnumerationLimit) const;

  std::uint64_t order() const { return weyl_group_order(type_); }

 private:
  void check_type(const WeylElement& w) const;

  CartanType type_;
  std::array<std::array<int, kMaxRank>, kMaxRank> gram_{};
  std::vector<RootCoords> roots_;
  std::vector<RootCoords> positive_;
  std::unordered_map<RootCoords, int, RootCoordsHash> root_index_;
  WeylElement w0_;
  std::vector<int> delta0_;
};

/// Space-separated 1-based reduced word; "e" for the identity.
std::string word_string(const RootSystem& rs, const WeylElement& w);

}  // namespace weylcells

template <>
struct std::hash<weylcells::WeylElement> : weylcells::WeylElementHash {};
