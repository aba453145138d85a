#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>

#include "oracles.hpp"
#include "weylcells/coxeter.hpp"

using namespace weylcells;
using weylcells::testing::bruhat_leq_subword;
using weylcells::testing::generated_subgroup;
using weylcells::testing::inversion_count;

namespace {

std::vector<CartanType> small_types() {
  std::vector<CartanType> out;
  for (const char* s : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "B4", "D4", "D5", "G2", "F4"})
    out.push_back(CartanType::parse(s));
  return out;
}

}  // namespace

TEST_CASE("CartanType parsing and validation") {
  CHECK(CartanType::parse("A3").rank == 3);
  CHECK(CartanType::parse("e6").family == Family::E);
  CHECK(CartanType::parse("G2").name() == "G2");
  CHECK_THROWS_AS(CartanType::parse("H3"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("F5"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("A"), std::invalid_argument);
  CHECK_THROWS_AS(CartanType::parse("A0"), std::invalid_argument);
}

TEST_CASE("group orders from the product formula") {
  CHECK(weyl_group_order(CartanType::parse("A3")) == 24);
  CHECK(weyl_group_order(CartanType::parse("B3")) == 48);
  CHECK(weyl_group_order(CartanType::parse("D4")) == 192);
  CHECK(weyl_group_order(CartanType::parse("G2")) == 12);
  CHECK(weyl_group_order(CartanType::parse("F4")) == 1152);
  CHECK(weyl_group_order(CartanType::parse("E6")) == 51840);
  CHECK(weyl_group_order(CartanType::parse("E7")) == 2903040);
  CHECK(weyl_group_order(CartanType::parse("E8")) == 696729600);
}

TEST_CASE("positive root counts") {
  const std::map<std::string, std::size_t> expected{{"A1", 1},  {"A4", 10}, {"B3", 9},  {"C4", 16},
                                                    {"D4", 12}, {"D6", 30}, {"E6", 36}, {"E7", 63},
                                                    {"E8", 120}, {"F4", 24}, {"G2", 6}};
  for (const auto& [name, count] : expected) {
    const RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    CHECK(rs.positive_roots().size() == count);
    CHECK(rs.roots().size() == 2 * count);
    CHECK(rs.length(rs.longest_element()) == static_cast<int>(count));
  }
}

TEST_CASE("Cartan integers follow the standard labelling") {
  const RootSystem b3(CartanType::parse("B3"));
  CHECK(b3.cartan_integer(1, 2) == -1);  // <alpha_3, alpha_2^vee>
  CHECK(b3.cartan_integer(2, 1) == -2);  // short alpha_3
  const RootSystem c3(CartanType::parse("C3"));
  CHECK(c3.cartan_integer(1, 2) == -2);
  CHECK(c3.cartan_integer(2, 1) == -1);
  const RootSystem g2(CartanType::parse("G2"));
  CHECK(g2.cartan_integer(0, 1) == -3);  // short alpha_1
  CHECK(g2.cartan_integer(1, 0) == -1);
  const RootSystem f4(CartanType::parse("F4"));
  CHECK(f4.cartan_integer(2, 1) == -2);
  CHECK(f4.cartan_integer(1, 2) == -1);
  const RootSystem d4(CartanType::parse("D4"));
  for (int leaf : {0, 2, 3}) CHECK(d4.cartan_integer(1, leaf) == -1);
  const RootSystem e6(CartanType::parse("E6"));
  CHECK(e6.cartan_integer(1, 3) == -1);  // alpha_2 joins alpha_4
  CHECK(e6.cartan_integer(0, 2) == -1);
  CHECK(e6.cartan_integer(0, 1) == 0);
}

TEST_CASE("enumeration matches group order and brute-force closure") {
  for (const auto t : small_types()) {
    const RootSystem rs(t);
    CAPTURE(t.name());
    const auto elems = rs.elements();
    CHECK(elems.size() == rs.order());
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    CHECK(elems == generated_subgroup(rs, SimpleSubset::full(t.rank)));
  }
}

TEST_CASE("elements() honours its guard") {
  const RootSystem rs(CartanType::parse("E6"));
  CHECK_THROWS_AS(rs.elements(1000), GuardExceeded);
}

TEST_CASE("simple reflections, products and inverses") {
  const RootSystem rs(CartanType::parse("B3"));
  CHECK_THROWS_AS(rs.simple_reflection(3), std::out_of_range);
  CHECK_THROWS_AS(rs.simple_reflection(-1), std::out_of_range);
  for (int i = 0; i < 3; ++i) {
    const auto s = rs.simple_reflection(i);
    CHECK((s * s).is_identity());
    CHECK(rs.length(s) == 1);
    auto neg = rs.simple_root(i);
    for (auto& x : neg) x = -x;
    CHECK(rs.act(s, rs.simple_root(i)) == neg);
  }
  // Braid relation orders m_ij: 3 for single bonds, 4 for the double bond.
  auto order_of = [&](const WeylElement& w) {
    int k = 1;
    for (auto x = w; !x.is_identity(); x = x * w) ++k;
    return k;
  };
  CHECK(order_of(rs.simple_reflection(0) * rs.simple_reflection(1)) == 3);
  CHECK(order_of(rs.simple_reflection(1) * rs.simple_reflection(2)) == 4);
  CHECK(order_of(rs.simple_reflection(0) * rs.simple_reflection(2)) == 2);
  const RootSystem g2(CartanType::parse("G2"));
  CHECK(order_of(g2.simple_reflection(0) * g2.simple_reflection(1)) == 6);

  for (const auto& w : rs.elements()) {
    CHECK((w * rs.inverse(w)).is_identity());
    CHECK(rs.length(rs.inverse(w)) == rs.length(w));
  }
}

TEST_CASE("mixing types is rejected") {
  const RootSystem a3(CartanType::parse("A3"));
  const RootSystem b3(CartanType::parse("B3"));
  CHECK_THROWS_AS(a3.simple_reflection(0) * b3.simple_reflection(0), std::invalid_argument);
  CHECK_THROWS_AS(a3.length(b3.simple_reflection(0)), std::invalid_argument);
}

TEST_CASE("length, descents and reduced words") {
  for (const auto t : small_types()) {
    if (t.rank > 4) continue;
    const RootSystem rs(t);
    CAPTURE(t.name());
    for (const auto& w : rs.elements()) {
      const int l = rs.length(w);
      CHECK(l == inversion_count(rs, w));
      const auto word = rs.reduced_word(w);
      CHECK(static_cast<int>(word.size()) == l);
      CHECK(rs.from_word(word) == w);
      for (int i = 0; i < t.rank; ++i) {
        const auto ws = rs.times_simple(w, i);
        CHECK(ws == w * rs.simple_reflection(i));
        CHECK(rs.simple_times(i, w) == rs.simple_reflection(i) * w);
        CHECK(rs.is_right_descent(w, i) == (rs.length(ws) == l - 1));
        CHECK(rs.is_left_descent(w, i) == (rs.length(rs.simple_times(i, w)) == l - 1));
        CHECK(std::abs(rs.length(ws) - l) == 1);
        CHECK(rs.conjugate_by_simple(w, i) == rs.simple_reflection(i) * w * rs.simple_reflection(i));
      }
    }
  }
}

TEST_CASE("longest element of the group and of parabolic subgroups") {
  for (const auto t : small_types()) {
    if (t.rank > 4) continue;
    const RootSystem rs(t);
    CAPTURE(t.name());
    const auto w0 = rs.longest_element();
    CHECK((w0 * w0).is_identity());
    for (int i = 0; i < t.rank; ++i) CHECK(rs.is_right_descent(w0, i));
    for (std::uint32_t bits = 0; bits < (1u << t.rank); ++bits) {
      const SimpleSubset j(bits);
      const auto sub = generated_subgroup(rs, j);
      const auto best = *std::max_element(sub.begin(), sub.end(), [&](const WeylElement& a, const WeylElement& b) {
        return rs.length(a) < rs.length(b);
      });
      CAPTURE(j.to_string());
      CHECK(rs.longest_element(j) == best);
      const auto par = rs.parabolic(j);
      CHECK(par.longest == best);
      CHECK(static_cast<int>(par.positive_roots.size()) == rs.length(best));
    }
  }
}

TEST_CASE("delta0 is the opposition involution") {
  auto perm = [](const char* name) { return RootSystem(CartanType::parse(name)).delta0_permutation(); };
  CHECK(perm("A4") == std::vector<int>{3, 2, 1, 0});
  CHECK(perm("B3") == std::vector<int>{0, 1, 2});
  CHECK(perm("C4") == std::vector<int>{0, 1, 2, 3});
  CHECK(perm("D4") == std::vector<int>{0, 1, 2, 3});
  CHECK(perm("D5") == std::vector<int>{0, 1, 2, 4, 3});
  CHECK(perm("E6") == std::vector<int>{5, 1, 4, 3, 2, 0});
  CHECK(perm("E7") == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(perm("F4") == std::vector<int>{0, 1, 2, 3});
  CHECK(perm("G2") == std::vector<int>{0, 1});

  const RootSystem rs(CartanType::parse("A3"));
  const auto w0 = rs.longest_element();
  for (const auto& w : rs.elements()) CHECK(rs.delta0(w) == w0 * w * w0);
  for (int i = 0; i < 3; ++i) CHECK(rs.delta0_root(rs.simple_root(i)) == rs.simple_root(rs.delta0_index(i)));
}

TEST_CASE("Bruhat order agrees with the subword criterion") {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    const RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    const auto elems = rs.elements();
    for (const auto& u : elems)
      for (const auto& w : elems) CHECK(rs.bruhat_leq(u, w) == bruhat_leq_subword(rs, u, w));
  }
}

TEST_CASE("Bruhat order is a graded partial order") {
  const RootSystem rs(CartanType::parse("B3"));
  const auto elems = rs.elements();
  const auto e = rs.identity();
  const auto w0 = rs.longest_element();
  for (const auto& u : elems) {
    CHECK(rs.bruhat_leq(e, u));
    CHECK(rs.bruhat_leq(u, w0));
    CHECK(rs.bruhat_leq(u, u));
    for (const auto& w : elems) {
      if (rs.bruhat_leq(u, w) && rs.bruhat_leq(w, u)) CHECK(u == w);
      if (rs.bruhat_leq(u, w)) {
        CHECK(rs.length(u) <= rs.length(w));
        // Inversion and conjugation by w0 are order automorphisms.
        CHECK(rs.bruhat_leq(rs.inverse(u), rs.inverse(w)));
        CHECK(rs.bruhat_leq(w0 * u * w0, w0 * w * w0));
        // Multiplication by w0 reverses the order.
        CHECK(rs.bruhat_leq(w0 * w, w0 * u));
      }
    }
  }
}

TEST_CASE("Coxeter elements") {
  // A Dynkin tree with r nodes has 2^(r-1) acyclic orientations.
  for (const char* name : {"A3", "B3", "G2", "D4", "F4"}) {
    const RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    const auto cox = rs.coxeter_elements();
    CHECK(cox.size() == (std::size_t{1} << (rs.rank() - 1)));
    for (const auto& c : cox) CHECK(rs.length(c) == rs.rank());
  }
}

TEST_CASE("word strings") {
  const RootSystem rs(CartanType::parse("G2"));
  CHECK(word_string(rs, rs.identity()) == "e");
  CHECK(word_string(rs, rs.simple_reflection(1)) == "2");
  CHECK(rs.reduced_word(rs.longest_element()).size() == 6);
}

TEST_CASE("SimpleSubset basics") {
  const auto j = SimpleSubset::from_indices({1, 2});
  CHECK(j.to_string() == "{2,3}");
  CHECK(j.size() == 2);
  CHECK(j.contains(1));
  CHECK_FALSE(j.contains(0));
  CHECK(j.with(0).size() == 3);
  CHECK(j.without(1).to_string() == "{3}");
  CHECK(SimpleSubset().to_string() == "{}");
  CHECK(SimpleSubset::full(4).indices() == std::vector<int>{0, 1, 2, 3});
}
