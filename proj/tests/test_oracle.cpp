#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "weylcells/oracle.hpp"

using namespace weylcells;

namespace {

Permutation cyc(const char* text, int n) { return Permutation::parse_cycles(text, n); }

JordanClass with_values(int n, std::vector<std::pair<int, std::vector<int>>> data) {
  std::vector<EigenBlocks> eigen;
  std::map<std::string, int> values;
  for (auto& [v, blocks] : data) {
    eigen.push_back({std::to_string(v), blocks});
    values[std::to_string(v)] = v;
  }
  return JordanClass(n, eigen, values);
}

MatrixFq random_sl(std::mt19937& rng, int n, int p) {
  std::uniform_int_distribution<int> d(0, p - 1);
  while (true) {
    MatrixFq m(n, p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, d(rng));
    if (m.det() == 1) return m;
  }
}

}  // namespace

TEST_CASE("Bruhat decomposition examples") {
  CHECK(bruhat_bb(MatrixFq::identity(3, 5)).is_identity());
  CHECK(bruhat_bb(MatrixFq::from_rows(5, {{0, 1}, {-1, 0}})) == cyc("(1 2)", 2));
  CHECK(bruhat_bb(MatrixFq::from_rows(3, {{1, 0}, {1, 1}})) == cyc("(1 2)", 2));
  CHECK(bruhat_bb(MatrixFq::from_rows(3, {{1, 1}, {0, 1}})).is_identity());
  CHECK_THROWS_AS(bruhat_bb(MatrixFq::from_rows(3, {{1, 1}, {1, 1}})), std::domain_error);
}

TEST_CASE("factors reconstruct every element") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 5}}) {
    std::uint64_t count = 0;
    for_each_sl(n, q, [&](const MatrixFq& g) {
      const auto f = bruhat_decompose(g);
      CHECK(f.left.is_upper_triangular());
      CHECK(f.right.is_upper_triangular());
      CHECK(f.perm_matrix == permutation_matrix(f.w, q));
      CHECK(f.left * f.perm_matrix * f.right == g);
      CHECK(bruhat_bb(g) == f.w);
      ++count;
    });
    CHECK(count == sl_order(n, q));
  }
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto g = random_sl(rng, 4, 7);
    const auto f = bruhat_decompose(g);
    CHECK(f.left * f.perm_matrix * f.right == g);
  }
}

TEST_CASE("cells have the predicted sizes") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 7}, {3, 3}}) {
    const auto rep = check_cell_sizes(n, q);
    CAPTURE(rep.to_text());
    CHECK(rep.passed());
  }
  CHECK_THROWS_AS(check_cell_sizes(4, 3), GuardExceeded);
}

TEST_CASE("opposite Borel decomposition") {
  for (int n = 2; n <= 6; ++n) CHECK(w0_representative(n, 7).det() == 1);
  CHECK(w0_representative(2, 5) == MatrixFq::from_rows(5, {{0, 1}, {-1, 0}}));
  CHECK(bruhat_b_bminus(MatrixFq::from_rows(5, {{2, 0}, {0, 3}})).is_identity());
  CHECK(bruhat_b_bminus(w0_representative(3, 5)) == reversal(3));
  // g in BuB and g in BwB^- force w <= u.
  std::mt19937 rng(3);
  for (int k = 0; k < 500; ++k) {
    const auto g = random_sl(rng, 4, 5);
    CHECK(bruhat_leq_tableau(bruhat_b_bminus(g), bruhat_bb(g)));
  }
  // Lower-triangular matrices lie in B^- = B e B^-.
  CHECK(bruhat_b_bminus(MatrixFq::from_rows(5, {{1, 0, 0}, {2, 1, 0}, {3, 4, 1}})).is_identity());
}

TEST_CASE("geometric classes") {
  CHECK(geometric_class(with_values(3, {{1, {1, 1, 1}}}), 5).size() == 1);
  CHECK(geometric_class(with_values(2, {{1, {2}}}), 3).size() == 8);
  const auto orbit = geometric_class(with_values(3, {{1, {1}}, {2, {1}}, {3, {1}}}), 5);
  CHECK(orbit.size() == gl_order(3, 5) / 64);
  std::set<int> traces;
  for (const auto& g : orbit) {
    CHECK(g.det() == 1);
    traces.insert((g.at(0, 0) + g.at(1, 1) + g.at(2, 2)) % 5);
  }
  CHECK(traces == std::set<int>{1});
  // Closed under conjugation by an arbitrary invertible matrix.
  const auto x = MatrixFq::from_rows(5, {{1, 2, 0}, {0, 3, 1}, {4, 0, 1}});
  REQUIRE(x.invertible());
  for (std::size_t k = 0; k < orbit.size(); k += 101)
    CHECK(std::binary_search(orbit.begin(), orbit.end(), x * orbit[k] * x.inverse()));

  CHECK_THROWS_AS(geometric_class(with_values(2, {{1, {2}}}), 4), std::invalid_argument);
  CHECK_THROWS_AS(geometric_class(with_values(2, {{2, {2}}}), 5), std::invalid_argument);  // det 4
  CHECK_THROWS_AS(geometric_class(with_values(3, {{1, {2, 1}}}), 5, 1000), GuardExceeded);
  CHECK_THROWS_AS(geometric_class(JordanClass(2, {{"a", {2}}}), 5), std::invalid_argument);
}

TEST_CASE("split classes") {
  const auto classes = split_classes(2, 3);
  CHECK(classes.size() == 4);
  for (const auto& c : classes) CHECK_NOTHROW(c.validate_values(3));
  // Over F_2 only the unipotent classes remain.
  CHECK(split_classes(4, 2).size() == 5);
  for (auto [n, q] : default_guard_pairs())
    for (const auto& c : split_classes(n, q)) {
      CHECK(c.n_plus_1() == n);
      CHECK_NOTHROW(c.validate_values(q));
    }
}

TEST_CASE("empirical intersections") {
  const auto central = empirical_WC(with_values(2, {{1, {1, 1}}}), 5);
  CHECK(central.wc == std::vector<Permutation>{Permutation::identity(2)});
  const auto trans = empirical_WC(with_values(2, {{1, {2}}}), 5);
  CHECK(trans.orbit_size == 24);
  CHECK(trans.wc == std::vector<Permutation>{Permutation::identity(2), cyc("(1 2)", 2)});

  const auto u = empirical_WC(with_values(3, {{1, {2, 1}}}), 5);
  std::vector<Permutation> invs;
  for (const auto& w : u.wc)
    if (w.is_involution()) invs.push_back(w);
  std::vector<Permutation> expected{Permutation::identity(3), cyc("(1 2)", 3), cyc("(2 3)", 3), cyc("(1 3)", 3)};
  std::sort(expected.begin(), expected.end());
  CHECK(invs == expected);
  REQUIRE(u.bruhat_max.has_value());
  CHECK(*u.bruhat_max == cyc("(1 3)", 3));

  const auto j = u.to_json();
  CHECK(j.at("bruhat_max") == "(1 3)");
  CHECK(j.at("q") == 5);
}

TEST_CASE("predictions hold on SL(3, F_3)") {
  for (const auto& c : split_classes(3, 3)) {
    const auto rep = validate_predictions(empirical_WC(c, 3), true);
    CAPTURE(rep.to_text());
    CHECK(rep.passed());
  }
}

TEST_CASE("corrupted tables are caught") {
  auto t = empirical_WC(with_values(4, {{1, {2, 1, 1}}}), 2);
  REQUIRE(validate_predictions(t, true).passed());
  t.wc.push_back(cyc("(1 2)(3 4)", 4));
  std::sort(t.wc.begin(), t.wc.end());
  const auto rep = validate_predictions(t, false);
  CHECK_FALSE(rep.passed());
  bool saw_l2 = false;
  for (const auto& r : rep.records())
    if (r.check == "l2-bound" && r.verdict == Verdict::kFail) saw_l2 = true;
  CHECK(saw_l2);

  auto s = empirical_WC(with_values(3, {{1, {3}}}), 3);
  s.wc_minus.erase(s.wc_minus.begin());
  CHECK(validate_predictions(s, false).passed() == false);  // W_C no longer inside W_C^-
}

TEST_CASE("Deodhar product decomposition") {
  const auto e_rep = check_deodhar(Permutation::identity(2), 3);
  CHECK(e_rep.passed());
  const auto w0_rep = check_deodhar(reversal(2), 3);
  CHECK(w0_rep.passed());
  CHECK(w0_rep.records().size() == 2);
  const auto s1 = check_deodhar(cyc("(1 2)", 3), 2);
  CHECK(s1.passed());
  const auto sampled = check_deodhar(cyc("(2 3)", 3), 5, 20000);
  CHECK(sampled.passed());
  CHECK(sampled.records().size() == 1);
}

TEST_CASE("default guard") {
  CHECK(in_default_guard(3, 5));
  CHECK(in_default_guard(4, 2));
  CHECK_FALSE(in_default_guard(4, 3));
  CHECK(default_guard_pairs().size() == 7);
}
