// Tabulated classification of the subsets J with both the w0-compatibility and isolation conditions
// for each simple type. Index lists below are 1-based, as on the Dynkin
// diagrams in Bourbaki numbering.

#include <algorithm>

#include "weylcells/conjugacy.hpp"

namespace weylcells {

namespace {

class SubsetBuilder {
 public:
  SubsetBuilder& add(int one_based) {
    bits_ |= 1u << (one_based - 1);
    return *this;
  }
  SubsetBuilder& range(int first, int last) {
    for (int i = first; i <= last; ++i) add(i);
    return *this;
  }
  /// alpha_1, alpha_3, ..., alpha_last (last odd).
  SubsetBuilder& odds(int last) {
    for (int i = 1; i <= last; i += 2) add(i);
    return *this;
  }
  SimpleSubset build() const { return SimpleSubset(bits_); }

 private:
  std::uint32_t bits_ = 0;
};

SimpleSubset of(std::initializer_list<int> one_based) {
  SubsetBuilder b;
  for (int i : one_based) b.add(i);
  return b.build();
}

// Types B_n and C_n share the same index sets.
void classical_bc(int n, std::vector<SimpleSubset>& out) {
  for (int l = 2; l <= n; ++l) out.push_back(SubsetBuilder().range(l, n).build());
  for (int l = 1; 2 * l <= n - 2; ++l) out.push_back(SubsetBuilder().odds(2 * l - 1).range(2 * l + 1, n).build());
  if (n % 2 == 0) {
    out.push_back(SubsetBuilder().odds(n - 1).build());  // J_3
  } else {
    out.push_back(SubsetBuilder().odds(n).build());  // J_4
  }
}

void type_d(int n, std::vector<SimpleSubset>& out) {
  const int m = n / 2;
  for (int l = 2; l <= m; ++l) out.push_back(SubsetBuilder().range(2 * l - 1, n).build());
  for (int l = 1; l <= m - 1; ++l) out.push_back(SubsetBuilder().odds(2 * l - 1).range(2 * l + 1, n).build());
  if (n % 2 == 0) {
    out.push_back(SubsetBuilder().odds(2 * m - 3).add(2 * m - 1).build());  // J_3
    out.push_back(SubsetBuilder().odds(2 * m - 3).add(2 * m).build());      // J_4
  } else {
    out.push_back(SubsetBuilder().odds(2 * m - 1).build());  // J_3
  }
}

}  // namespace

std::vector<SimpleSubset> catalog_J(CartanType t) {
  validate(t);
  const int n = t.rank;
  std::vector<SimpleSubset> out{SimpleSubset(), SimpleSubset::full(n)};
  switch (t.family) {
    case Family::A:
      for (int l = 1; l <= (n + 1) / 2 - 1; ++l) out.push_back(SubsetBuilder().range(l + 1, n - l).build());
      break;
    case Family::B:
    case Family::C:
      classical_bc(n, out);
      break;
    case Family::D:
      type_d(n, out);
      break;
    case Family::E:
      if (n == 6) {
        out.push_back(of({1, 3, 4, 5, 6}));
        out.push_back(of({3, 4, 5}));
      } else if (n == 7) {
        out.push_back(of({2, 3, 4, 5, 6, 7}));
        out.push_back(of({2, 3, 4, 5, 7}));
        out.push_back(of({2, 3, 4, 5}));
        out.push_back(of({2, 5, 7}));
      } else {
        out.push_back(of({1, 2, 3, 4, 5, 6, 7}));
        out.push_back(of({2, 3, 4, 5, 6, 7}));
        out.push_back(of({2, 3, 4, 5}));
      }
      break;
    case Family::F:
      out.push_back(of({1, 2, 3}));
      out.push_back(of({2, 3, 4}));
      out.push_back(of({2, 3}));
      break;
    case Family::G:
      out.push_back(of({2}));
      out.push_back(of({1}));
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace weylcells
