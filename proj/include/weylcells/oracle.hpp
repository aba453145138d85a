#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "weylcells/finite_field.hpp"
#include "weylcells/permutation.hpp"
#include "weylcells/report.hpp"
#include "weylcells/sl_criteria.hpp"

namespace weylcells {

/// Brute-force ground truth over prime fields. Matrices of dimension n
/// represent SL(n, F_q); permutations act on {1..n}. B is the upper
/// triangular subgroup and B^- the lower one.

/// g = left * perm_matrix * right with left and right upper triangular.
struct BruhatFactors {
  Permutation w;
  MatrixFq left;
  MatrixFq perm_matrix;  ///< 0/1 matrix with entry (w(j), j)
  MatrixFq right;
};

/// Permutation matrix sending e_j to e_{w(j)}.
MatrixFq permutation_matrix(const Permutation& w, int p);

/// Pivot elimination. Throws std::domain_error for a singular matrix.
BruhatFactors bruhat_decompose(const MatrixFq& g);

/// The w with g in BwB.
Permutation bruhat_bb(const MatrixFq& g);

/// Antidiagonal representative of the longest element with determinant 1:
/// entries 1 except (-1)^floor(n/2) in column 1.
MatrixFq w0_representative(int n, int p);

/// The w with g in BwB^-, computed as bruhat_bb(g * w0dot) * w0.
Permutation bruhat_b_bminus(const MatrixFq& g);

inline constexpr std::uint64_t kOracleStateLimit = 10'000'000;

/// (n, q) pairs run without an explicit override.
bool in_default_guard(int n, int q);
const std::vector<std::pair<int, int>>& default_guard_pairs();

/// Block-diagonal Jordan form for a class with concrete eigenvalues.
/// Throws std::invalid_argument if values are missing or invalid mod q.
MatrixFq jordan_representative(const JordanClass& c, int q);

/// GL(n, F_q)-conjugation orbit of the Jordan representative, sorted.
/// Throws GuardExceeded when the orbit outgrows `limit`.
std::vector<MatrixFq> geometric_class(const JordanClass& c, int q, std::uint64_t limit = kOracleStateLimit);

/// Every JordanClass of SL(n, F_q) whose eigenvalues lie in F_q. Labels are
/// the eigenvalues in decimal.
std::vector<JordanClass> split_classes(int n, int q);

struct EmpiricalIntersectionTable {
  JordanClass cls;
  int q = 0;
  std::size_t orbit_size = 0;
  std::vector<Permutation> wc;        ///< {w : C meets BwB}, sorted
  std::vector<Permutation> wc_minus;  ///< {w : C meets BwB^-}, sorted
  std::optional<Permutation> bruhat_max;

  nlohmann::json to_json() const;
};

EmpiricalIntersectionTable empirical_WC(const JordanClass& c, int q, std::uint64_t limit = kOracleStateLimit);

/// SOUND records hold for every run; COMPLETE records assert equality with
/// the predicted sets and are added only when `complete` is set.
Report validate_predictions(const EmpiricalIntersectionTable& table, bool complete);

/// Decomposes every element of SL(n, F_q): cell sizes must equal
/// |B| q^{l(w)} and sum to |SL(n, F_q)|, and every factorization must
/// reconstruct g.
Report check_cell_sizes(int n, int q, std::uint64_t limit = kOracleStateLimit);

/// Products g*b with g in BwB^- and b in B land in cells Bw'B with w <= w'.
/// Exhaustive when |BwB^-| * |B| fits the budget, in which case the attained
/// set must be all of {w' >= w}; otherwise a seeded sample of that size.
Report check_deodhar(const Permutation& w, int q, std::uint64_t sample_budget = 2'000'000);

}  // namespace weylcells
