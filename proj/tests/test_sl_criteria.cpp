#include <doctest.h>

#include <algorithm>

#include "weylcells/sl_criteria.hpp"

using namespace weylcells;

namespace {

JordanClass single(int n1, std::vector<int> blocks) { return JordanClass(n1, {{"a", std::move(blocks)}}); }

JordanClass central(int n1) { return single(n1, std::vector<int>(static_cast<std::size_t>(n1), 1)); }

JordanClass regular_semisimple(int n1) {
  std::vector<EigenBlocks> data;
  for (int k = 0; k < n1; ++k) data.push_back({"c" + std::to_string(k + 1), {1}});
  return JordanClass(n1, data);
}

Permutation cyc(const char* text, int n) { return Permutation::parse_cycles(text, n); }

}  // namespace

TEST_CASE("JordanClass validation") {
  CHECK_THROWS_AS(JordanClass(3, {{"a", {2}}}), std::invalid_argument);
  CHECK_THROWS_AS(JordanClass(3, {{"a", {2}}, {"a", {1}}}), std::invalid_argument);
  CHECK_THROWS_AS(JordanClass(3, {{"a", {3, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(JordanClass(3, {{"", {3}}}), std::invalid_argument);
  CHECK_THROWS_AS(JordanClass(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(JordanClass(0, {{"a", {}}}), std::invalid_argument);
  CHECK_THROWS_AS(JordanClass(3, {{"a", {3}}}, std::map<std::string, int>{{"b", 1}}), std::invalid_argument);
  // Blocks are normalized to non-increasing order.
  CHECK(JordanClass(3, {{"a", {1, 2}}}).eigen_data().front().blocks == std::vector<int>{2, 1});
}

TEST_CASE("concrete values") {
  const JordanClass c(3, {{"x", {2}}, {"y", {1}}}, std::map<std::string, int>{{"x", 1}, {"y", 1}});
  CHECK_THROWS_AS(c.validate_values(5), std::invalid_argument);  // not distinct
  const JordanClass d(3, {{"x", {1}}, {"y", {1}}, {"z", {1}}}, std::map<std::string, int>{{"x", 1}, {"y", 2}, {"z", 3}});
  CHECK_NOTHROW(d.validate_values(5));  // 1*2*3 = 6 = 1 mod 5
  CHECK_THROWS_AS(d.validate_values(7), std::invalid_argument);
  const JordanClass z(2, {{"x", {1}}, {"y", {1}}}, std::map<std::string, int>{{"x", 0}, {"y", 1}});
  CHECK_THROWS_AS(z.validate_values(5), std::invalid_argument);
  CHECK_THROWS_AS(single(2, {2}).validate_values(5), std::invalid_argument);
  CHECK(d.describe() == "SL3 1:[1] 2:[1] 3:[1]");
  CHECK(single(4, {2, 1, 1}).describe() == "SL4 a:[2,1,1]");
}

TEST_CASE("JSON round trip and malformed input") {
  const JordanClass d(3, {{"x", {2}}, {"y", {1}}}, std::map<std::string, int>{{"x", 2}, {"y", 4}});
  CHECK(JordanClass::from_json(d.to_json()) == d);
  const auto j = nlohmann::json::parse(R"({"n_plus_1": 4, "eigen_data": [{"label": "a", "blocks": [1,2,1]}]})");
  const auto c = JordanClass::from_json(j);
  CHECK(c == single(4, {2, 1, 1}));
  CHECK(r_of(c) == 1);
  for (const char* bad : {R"([])", R"({"eigen_data": []})", R"({"n_plus_1": "4", "eigen_data": []})",
                          R"({"n_plus_1": 2, "eigen_data": [{"label": "a"}]})",
                          R"({"n_plus_1": 2, "eigen_data": [{"label": "a", "blocks": [1.5]}]})",
                          R"({"n_plus_1": 2, "eigen_data": [{"label": "a", "blocks": [2]}], "values": {"a": "x"}})",
                          R"({"n_plus_1": 3, "eigen_data": [{"label": "a", "blocks": [2]}]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(JordanClass::from_json(nlohmann::json::parse(bad)), std::invalid_argument);
  }
}

TEST_CASE("r and l") {
  CHECK(r_of(central(4)) == 0);
  CHECK(r_of(regular_semisimple(4)) == 3);
  CHECK(r_of(single(4, {2, 1, 1})) == 1);
  CHECK(l_of(central(4)) == 0);
  CHECK(l_of(regular_semisimple(4)) == 2);
  CHECK(l_of(single(4, {2, 1, 1})) == 1);
}

TEST_CASE("nu tilde star") {
  CHECK(nu_tilde_star(JordanClass(5, {{"c1", {2, 1}}, {"c2", {2}}})) == Partition({4, 1}));
  CHECK(nu_tilde_star(central(4)) == Partition({1, 1, 1, 1}));
  CHECK(nu_tilde_star(single(4, {4})) == Partition({4}));
  // Label order does not matter.
  CHECK(nu_tilde_star(JordanClass(5, {{"c2", {2}}, {"c1", {2, 1}}})) == Partition({4, 1}));
}

TEST_CASE("m_l elements") {
  CHECK(m_l_element(4, 0).perm().is_identity());
  CHECK(m_l_element(4, 2).perm() == cyc("(1 4)(2 3)", 4));
  CHECK(m_l_element(4, 2).perm() == reversal(4));
  CHECK(m_l_element(5, 1).perm() == cyc("(1 5)", 5));
  CHECK(m_l_element(5, 2).l2() == 2);
  CHECK_THROWS_AS(m_l_element(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(m_l_element(4, -1), std::invalid_argument);
  CHECK_THROWS_AS(InvolutionPerm(cyc("(1 2 3)", 3)), std::invalid_argument);
}

TEST_CASE("m_C") {
  CHECK(m_C(central(3)).perm().is_identity());
  CHECK(m_C(regular_semisimple(3)).perm() == cyc("(1 3)", 3));
  CHECK(m_C(single(4, {2, 1, 1})).perm() == cyc("(1 4)", 4));
}

TEST_CASE("involution cells") {
  const auto t = single(4, {2, 1, 1});
  CHECK(decide_involution_cell(t, InvolutionPerm(Permutation::identity(4))));
  CHECK(decide_involution_cell(t, InvolutionPerm(cyc("(1 2)", 4))));
  CHECK_FALSE(decide_involution_cell(t, InvolutionPerm(cyc("(1 2)(3 4)", 4))));
  CHECK_THROWS_AS(decide_involution_cell(t, InvolutionPerm(cyc("(1 2)", 3))), std::invalid_argument);
  for (int n1 = 1; n1 <= 6; ++n1)
    for (const auto& c : all_jordan_types(n1)) CHECK(decide_involution_cell(c, InvolutionPerm(Permutation::identity(n1))));
}

TEST_CASE("necessary condition") {
  CHECK_FALSE(necessary_condition(central(4), cyc("(1 2)", 4)));
  for (const auto& w : all_permutations(4)) CHECK(necessary_condition(regular_semisimple(4), w));
  CHECK_FALSE(necessary_condition(single(4, {2, 1, 1}), cyc("(1 2 3)", 4)));
}

TEST_CASE("whole-class membership") {
  const auto u = single(3, {2, 1});
  CHECK(class_in_WC(u, Partition({2, 1})));
  CHECK_FALSE(class_in_WC(u, Partition({3})));
  for (const auto& c : all_jordan_types(5)) CHECK(class_in_WC(c, Partition({1, 1, 1, 1, 1})));
  CHECK_THROWS_AS(class_in_WC(u, Partition({2, 2})), std::invalid_argument);
}

TEST_CASE("W_C^- enumeration") {
  CHECK(enumerate_WC_minus(central(4)) == std::vector<Permutation>{Permutation::identity(4)});
  CHECK(enumerate_WC_minus(regular_semisimple(4)).size() == 24);
  CHECK(enumerate_WC_minus(single(3, {2, 1})).size() == 6);
  CHECK_THROWS_AS(enumerate_WC_minus(central(9)), GuardExceeded);

  // Down-closed with maximum m_C, checked with the tableau criterion.
  for (const auto& c : all_jordan_types(5)) {
    const auto set = enumerate_WC_minus(c);
    const auto top = m_C(c).perm();
    CHECK(std::binary_search(set.begin(), set.end(), top));
    for (const auto& w : all_permutations(5))
      CHECK(std::binary_search(set.begin(), set.end(), w) == bruhat_leq_tableau(w, top));
  }
}

TEST_CASE("spherical classes") {
  CHECK(spherical_WC(single(4, {2, 1, 1})).elements.size() == 7);
  CHECK(spherical_WC(JordanClass(4, {{"a", {1, 1}}, {"b", {1, 1}}})).elements.size() == 10);
  CHECK_FALSE(spherical_WC(single(4, {2, 2})).caveat.empty());
  CHECK_THROWS_AS(spherical_WC(central(4)), std::invalid_argument);
  CHECK_THROWS_AS(spherical_WC(single(4, {3, 1})), std::invalid_argument);
  CHECK_THROWS_AS(spherical_WC(regular_semisimple(3)), std::invalid_argument);
  CHECK_THROWS_AS(spherical_WC(single(11, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1})), GuardExceeded);
  CHECK(is_spherical(JordanClass(3, {{"a", {1, 1}}, {"b", {1}}})));
  CHECK_FALSE(is_spherical(JordanClass(3, {{"a", {2}}, {"b", {1}}})));
}

TEST_CASE("closure consequences") {
  const auto a = single(4, {2, 1, 1});
  const auto b = single(4, {2, 2});
  CHECK(monotone_under_closure(a, a).holds());
  CHECK(monotone_under_closure(central(4), a).holds());
  CHECK(monotone_under_closure(a, b).holds());
  // Reversed arguments expose the failure of both consequences.
  const auto rev = monotone_under_closure(b, a);
  CHECK_FALSE(rev.involution_implication);
  CHECK_FALSE(rev.bruhat_monotone);
  CHECK_THROWS_AS(monotone_under_closure(a, central(3)), std::invalid_argument);
}

TEST_CASE("enumeration of Jordan types") {
  const std::vector<std::size_t> counts{1, 3, 6, 14, 27, 58, 111, 223};
  for (int n1 = 1; n1 <= 8; ++n1) CHECK(all_jordan_types(n1).size() == counts[static_cast<std::size_t>(n1 - 1)]);
  const std::vector<std::size_t> inv{1, 2, 4, 10, 26, 76, 232, 764};
  for (int n1 = 1; n1 <= 8; ++n1) CHECK(involutions(n1).size() == inv[static_cast<std::size_t>(n1 - 1)]);
}

TEST_CASE("structural invariants over all Jordan types") {
  for (int n1 = 1; n1 <= 7; ++n1) {
    const auto invs = involutions(n1);
    for (const auto& c : all_jordan_types(n1)) {
      CAPTURE(c.describe());
      CHECK(nu_tilde_star(c).length() == n1 - r_of(c));
      CHECK(nu_tilde_star(c).weight() == n1);
      CHECK(m_C(c).perm().is_identity() == c.is_central());
      CHECK(c.is_central() == (c.eigen_data().size() == 1 && c.max_block_count() == n1));
      CHECK(m_C(c).perm().is_identity() == (l_of(c) == 0));
      CHECK((m_C(c).perm() == reversal(n1)) == (r_of(c) >= n1 / 2));
      if (n1 > 6) continue;
      // Larger l accepts a superset of involutions.
      bool monotone = true;
      for (const auto& d : all_jordan_types(n1)) {
        if (l_of(d) > l_of(c)) continue;
        for (const auto& w : invs) {
          const InvolutionPerm iw(w);
          if (decide_involution_cell(d, iw) && !decide_involution_cell(c, iw)) monotone = false;
        }
      }
      CHECK(monotone);
    }
  }
}
