#include <doctest.h>

#include <random>
#include <unordered_set>

#include "weylcells/finite_field.hpp"
#include "weylcells/permutation.hpp"

using namespace weylcells;

namespace {

// Leibniz expansion, independent of the elimination routine.
int det_leibniz(const MatrixFq& m) {
  const int p = m.p();
  long long total = 0;
  for (const auto& s : all_permutations(m.n())) {
    long long term = (s.inversions() % 2 == 0) ? 1 : p - 1;
    for (int i = 0; i < m.n(); ++i) term = term * m.at(s(i), i) % p;
    total = (total + term) % p;
  }
  return static_cast<int>(total);
}

MatrixFq random_matrix(std::mt19937& rng, int n, int p) {
  std::uniform_int_distribution<int> d(0, p - 1);
  MatrixFq m(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, d(rng));
  return m;
}

}  // namespace

TEST_CASE("prime fields") {
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(37), std::invalid_argument);
  CHECK_THROWS_AS(prime_field(9), std::invalid_argument);
  for (int p : {2, 3, 5, 7, 11, 13, 31}) {
    const PrimeField& f = prime_field(p);
    CAPTURE(p);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    for (int a = 1; a < p; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.pow(a, p - 1) == 1);  // Fermat
    }
    const int g = f.primitive_root();
    std::unordered_set<int> powers;
    for (int k = 0; k < p - 1; ++k) powers.insert(f.pow(g, k));
    CHECK(static_cast<int>(powers.size()) == p - 1);
    CHECK(f.normalize(-1) == p - 1);
    if (p > 2) CHECK(f.pow(2, -1) == f.inv(2));
  }
}

TEST_CASE("determinant and inverse against the Leibniz formula") {
  std::mt19937 rng(7);
  for (int p : {2, 3, 5, 7}) {
    for (int n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 40; ++trial) {
        const auto m = random_matrix(rng, n, p);
        CHECK(m.det() == det_leibniz(m));
        if (m.invertible()) {
          CHECK(m * m.inverse() == MatrixFq::identity(n, p));
          CHECK(m.inverse() * m == MatrixFq::identity(n, p));
        } else {
          CHECK_THROWS_AS(m.inverse(), std::domain_error);
        }
      }
    }
  }
}

TEST_CASE("matrix basics") {
  const auto a = MatrixFq::from_rows(5, {{1, 2}, {3, 4}});
  CHECK(a.to_string() == "[[1,2],[3,4]]");
  CHECK(a.det() == 3);  // 4 - 6 = -2
  const auto b = MatrixFq::from_rows(5, {{-1, 7}, {0, 1}});
  CHECK(b.at(0, 0) == 4);
  CHECK(b.at(0, 1) == 2);
  CHECK(b.is_upper_triangular());
  CHECK_FALSE(a.is_upper_triangular());
  CHECK(a * MatrixFq::identity(2, 5) == a);
  CHECK_THROWS_AS(a * MatrixFq::identity(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(MatrixFq(7, 5), std::invalid_argument);
  CHECK_THROWS_AS(MatrixFq(2, 6), std::invalid_argument);
  CHECK_THROWS_AS(MatrixFq::from_rows(5, {{1, 2}, {3}}), std::invalid_argument);

  auto c = a;
  c.add_row_multiple(0, 1, 1);
  CHECK(c == MatrixFq::from_rows(5, {{4, 6}, {3, 4}}));
  c.add_col_multiple(1, 0, -1);
  CHECK(c == MatrixFq::from_rows(5, {{4, 2}, {3, 1}}));
  CHECK(a.hash() == MatrixFq::from_rows(5, {{1, 2}, {3, 4}}).hash());
  CHECK(a != c);
}

TEST_CASE("group orders") {
  CHECK(gl_order(2, 3) == 48);
  CHECK(sl_order(2, 3) == 24);
  CHECK(sl_order(3, 2) == 168);
  CHECK(sl_order(3, 5) == 372000);
  CHECK(gl_order(3, 5) == 1488000);
  CHECK(sl_order(4, 2) == 20160);
  CHECK(sl_borel_order(2, 3) == 6);
  CHECK(sl_borel_order(3, 2) == 8);
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 2}, {2, 7}}) {
    std::uint64_t count = 0;
    for_each_sl(n, p, [&](const MatrixFq& g) {
      CHECK(g.det() == 1);
      ++count;
    });
    CHECK(count == sl_order(n, p));
  }
}
