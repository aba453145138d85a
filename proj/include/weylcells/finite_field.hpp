#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace weylcells {

/// The prime field F_p for prime p <= 31, with tabulated inverses.
class PrimeField {
 public:
  static constexpr int kMaxPrime = 31;

  /// Throws std::invalid_argument unless p is a prime <= 31.
  explicit PrimeField(int p);

  int p() const { return p_; }
  int normalize(long long x) const {
    const long long r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int mul(int a, int b) const { return (a * b) % p_; }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  /// Throws std::domain_error for 0.
  int inv(int a) const;
  int pow(int a, long long e) const;
  /// Smallest generator of the multiplicative group.
  int primitive_root() const { return primitive_root_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  int p_;
  int primitive_root_ = 1;
  std::array<int, kMaxPrime> inverse_{};
};

bool is_prime(int p);

/// Shared instance for a prime <= 31; throws like the constructor.
const PrimeField& prime_field(int p);

/// Square matrix over F_p of dimension at most 6. Entries are stored as
/// bytes in row-major order so the storage doubles as the hash key.
class MatrixFq {
 public:
  static constexpr int kMaxDim = 6;

  /// Zero matrix. Throws std::invalid_argument for a bad dimension or prime.
  MatrixFq(int n, int p);
  static MatrixFq identity(int n, int p);
  /// Row-major entries, reduced mod p.
  static MatrixFq from_rows(int p, const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  int p() const { return p_; }
  int at(int i, int j) const { return data_[static_cast<std::size_t>(i * kMaxDim + j)]; }
  void set(int i, int j, int v);

  int det() const;
  bool invertible() const { return det() != 0; }
  /// Throws std::domain_error if singular.
  MatrixFq inverse() const;

  /// Elementary operations used by elimination and conjugation.
  void add_row_multiple(int target, int source, int c);  ///< row target += c * row source
  void add_col_multiple(int target, int source, int c);  ///< col target += c * col source

  bool is_upper_triangular() const;

  /// "[[1,0],[0,1]]".
  std::string to_string() const;
  std::size_t hash() const;

  friend MatrixFq operator*(const MatrixFq& a, const MatrixFq& b);
  friend bool operator==(const MatrixFq&, const MatrixFq&) = default;
  friend auto operator<=>(const MatrixFq&, const MatrixFq&) = default;

 private:
  std::uint8_t n_;
  std::uint8_t p_;
  std::array<std::uint8_t, kMaxDim * kMaxDim> data_{};
};

struct MatrixFqHash {
  std::size_t operator()(const MatrixFq& m) const { return m.hash(); }
};

/// |GL(n, F_q)| and |SL(n, F_q)|.
std::uint64_t gl_order(int n, int q);
std::uint64_t sl_order(int n, int q);
/// Order of the upper-triangular subgroup of SL(n, F_q).
std::uint64_t sl_borel_order(int n, int q);

/// Calls visit(g) for every g in SL(n, F_p), in lexicographic entry order.
void for_each_sl(int n, int p, const std::function<void(const MatrixFq&)>& visit);

}  // namespace weylcells
