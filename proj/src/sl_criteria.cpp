#include "weylcells/sl_criteria.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weylcells {

namespace {

int mod_pow(long long base, int exp, int p) {
  long long r = 1;
  base %= p;
  if (base < 0) base += p;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
  }
  return static_cast<int>(r);
}

void require_degree(const JordanClass& c, int degree) {
  if (degree != c.n_plus_1()) {
    throw std::invalid_argument("permutation degree " + std::to_string(degree) + " does not match n+1 = " +
                                std::to_string(c.n_plus_1()));
  }
}

}  // namespace

JordanClass::JordanClass(int n_plus_1, std::vector<EigenBlocks> eigen_data,
                         std::optional<std::map<std::string, int>> values)
    : n_plus_1_(n_plus_1), eigen_data_(std::move(eigen_data)), values_(std::move(values)) {
  if (n_plus_1_ < 1) throw std::invalid_argument("n_plus_1 must be positive");
  if (eigen_data_.empty()) throw std::invalid_argument("eigen_data must not be empty");
  std::set<std::string> labels;
  int total = 0;
  for (auto& e : eigen_data_) {
    if (e.label.empty()) throw std::invalid_argument("empty eigenvalue label");
    if (!labels.insert(e.label).second) throw std::invalid_argument("duplicate eigenvalue label '" + e.label + "'");
    if (e.blocks.empty()) throw std::invalid_argument("label '" + e.label + "' has no blocks");
    for (int b : e.blocks) {
      if (b <= 0) throw std::invalid_argument("block sizes must be positive");
      total += b;
    }
    std::sort(e.blocks.rbegin(), e.blocks.rend());
  }
  if (total != n_plus_1_) {
    throw std::invalid_argument("block sizes sum to " + std::to_string(total) + ", expected " +
                                std::to_string(n_plus_1_));
  }
  if (values_) {
    for (const auto& [label, v] : *values_) {
      (void)v;
      if (!labels.count(label)) throw std::invalid_argument("value given for unknown label '" + label + "'");
    }
  }
}

int JordanClass::max_block_count() const {
  std::size_t best = 0;
  for (const auto& e : eigen_data_) best = std::max(best, e.blocks.size());
  return static_cast<int>(best);
}

bool JordanClass::is_central() const { return r_of(*this) == 0; }

void JordanClass::validate_values(int p) const {
  if (!values_) throw std::invalid_argument("class has no concrete eigenvalues");
  std::set<int> seen;
  long long det = 1;
  for (const auto& e : eigen_data_) {
    const auto it = values_->find(e.label);
    if (it == values_->end()) throw std::invalid_argument("label '" + e.label + "' has no value");
    const int v = ((it->second % p) + p) % p;
    if (v == 0) throw std::invalid_argument("eigenvalue for '" + e.label + "' is zero mod " + std::to_string(p));
    if (!seen.insert(v).second) throw std::invalid_argument("eigenvalues are not distinct mod " + std::to_string(p));
    const int mult = std::accumulate(e.blocks.begin(), e.blocks.end(), 0);
    det = det * mod_pow(v, mult, p) % p;
  }
  if (det != 1) throw std::invalid_argument("determinant is " + std::to_string(det) + " mod " + std::to_string(p) + ", not 1");
}

std::string JordanClass::describe() const {
  std::ostringstream os;
  os << "SL" << n_plus_1_;
  for (const auto& e : eigen_data_) {
    os << ' ';
    if (values_ && values_->count(e.label)) {
      os << values_->at(e.label);
    } else {
      os << e.label;
    }
    os << ":[";
    for (std::size_t k = 0; k < e.blocks.size(); ++k) os << (k ? "," : "") << e.blocks[k];
    os << ']';
  }
  return os.str();
}

std::vector<JordanClass> all_jordan_types(int n_plus_1) {
  if (n_plus_1 < 1) throw std::invalid_argument("n_plus_1 must be positive");
  std::vector<Partition> pieces;
  for (int w = n_plus_1; w >= 1; --w)
    for (auto& p : partitions_of(w)) pieces.push_back(std::move(p));

  std::vector<JordanClass> out;
  std::vector<std::size_t> chosen;
  // Multisets of pieces with total weight n+1, as non-decreasing index lists.
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      std::vector<EigenBlocks> data;
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        data.push_back({"c" + std::to_string(k + 1), pieces[chosen[k]].parts()});
      }
      out.emplace_back(n_plus_1, std::move(data));
      return;
    }
    for (std::size_t i = start; i < pieces.size(); ++i) {
      if (pieces[i].weight() > remaining) continue;
      chosen.push_back(i);
      self(self, i, remaining - pieces[i].weight());
      chosen.pop_back();
    }
  };
  rec(rec, 0, n_plus_1);
  return out;
}

InvolutionPerm::InvolutionPerm(Permutation p) : perm_(std::move(p)) {
  if (!perm_.is_involution()) throw std::invalid_argument("permutation " + perm_.cycle_string() + " is not an involution");
  l2_ = perm_.l2();
}

int r_of(const JordanClass& c) { return c.n_plus_1() - c.max_block_count(); }

int l_of(const JordanClass& c) { return std::min(r_of(c), c.n_plus_1() / 2); }

Partition nu_tilde_star(const JordanClass& c) {
  std::vector<const EigenBlocks*> order;
  for (const auto& e : c.eigen_data()) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](const EigenBlocks* a, const EigenBlocks* b) { return a->blocks.size() > b->blocks.size(); });
  const std::size_t parts = order.front()->blocks.size();
  std::vector<int> xi(parts, 0);
  for (const auto* e : order)
    for (std::size_t t = 0; t < e->blocks.size(); ++t) xi[t] += e->blocks[t];
  return Partition(std::move(xi));
}

InvolutionPerm m_l_element(int n_plus_1, int l) {
  if (n_plus_1 < 1) throw std::invalid_argument("n_plus_1 must be positive");
  if (l < 0 || l > n_plus_1 / 2) {
    throw std::invalid_argument("l = " + std::to_string(l) + " outside [0, " + std::to_string(n_plus_1 / 2) + "]");
  }
  std::vector<int> im(static_cast<std::size_t>(n_plus_1));
  std::iota(im.begin(), im.end(), 0);
  for (int i = 0; i < l; ++i) std::swap(im[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(n_plus_1 - 1 - i)]);
  return InvolutionPerm(Permutation(std::move(im)));
}

InvolutionPerm m_C(const JordanClass& c) { return m_l_element(c.n_plus_1(), l_of(c)); }

bool decide_involution_cell(const JordanClass& c, const InvolutionPerm& w) {
  require_degree(c, w.degree());
  return w.l2() <= l_of(c);
}

bool necessary_condition(const JordanClass& c, const Permutation& w) {
  require_degree(c, w.degree());
  return w.l2() <= r_of(c);
}

bool class_in_WC(const JordanClass& c, const Partition& lambda) {
  if (lambda.weight() != c.n_plus_1()) {
    throw std::invalid_argument("cycle type weight " + std::to_string(lambda.weight()) + " does not match n+1 = " +
                                std::to_string(c.n_plus_1()));
  }
  return dominance_leq(lambda, nu_tilde_star(c));
}

std::vector<Permutation> enumerate_WC_minus(const JordanClass& c) {
  if (c.n_plus_1() > kMaxEnumerationDegree) {
    throw GuardExceeded("enumerating S_" + std::to_string(c.n_plus_1()) + " exceeds the degree guard of " +
                        std::to_string(kMaxEnumerationDegree));
  }
  const PermutationBruhat order(c.n_plus_1());
  const Permutation top = m_C(c).perm();
  std::vector<Permutation> out;
  for (auto& w : all_permutations(c.n_plus_1()))
    if (order.leq(w, top)) out.push_back(std::move(w));
  return out;
}

bool is_spherical(const JordanClass& c) {
  const auto& data = c.eigen_data();
  if (data.size() == 2) {
    return std::all_of(data.begin(), data.end(), [](const EigenBlocks& e) {
      return std::all_of(e.blocks.begin(), e.blocks.end(), [](int b) { return b == 1; });
    });
  }
  if (data.size() == 1) {
    const auto& b = data.front().blocks;
    return b.front() == 2;  // blocks are sorted, so all are <= 2 and one is 2
  }
  return false;
}

SphericalResult spherical_WC(const JordanClass& c) {
  if (c.n_plus_1() > kMaxSphericalDegree) {
    throw GuardExceeded("S_" + std::to_string(c.n_plus_1()) + " exceeds the spherical degree guard of " +
                        std::to_string(kMaxSphericalDegree));
  }
  if (!is_spherical(c)) throw std::invalid_argument("class " + c.describe() + " is not spherical");
  SphericalResult res;
  const int r = r_of(c);
  for (auto& w : involutions(c.n_plus_1()))
    if (w.l2() <= r) res.elements.push_back(std::move(w));
  res.caveat = "valid in characteristic other than 2";
  return res;
}

ClosureConsequences monotone_under_closure(const JordanClass& c_prime, const JordanClass& c) {
  if (c_prime.n_plus_1() != c.n_plus_1()) throw std::invalid_argument("classes live in different SL(n+1)");
  if (c.n_plus_1() > kMaxSphericalDegree) {
    throw GuardExceeded("S_" + std::to_string(c.n_plus_1()) + " exceeds the involution scan guard of " +
                        std::to_string(kMaxSphericalDegree));
  }
  ClosureConsequences out;
  out.involution_implication = true;
  for (const auto& w : involutions(c.n_plus_1())) {
    const InvolutionPerm inv(w);
    if (decide_involution_cell(c_prime, inv) && !decide_involution_cell(c, inv)) {
      out.involution_implication = false;
      break;
    }
  }
  out.bruhat_monotone = bruhat_leq_tableau(m_C(c_prime).perm(), m_C(c).perm());
  return out;
}

std::vector<Permutation> involutions(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<Permutation> out;
  std::vector<int> im(static_cast<std::size_t>(degree), -1);
  auto rec = [&](auto&& self, int i) -> void {
    while (i < degree && im[static_cast<std::size_t>(i)] != -1) ++i;
    if (i == degree) {
      out.emplace_back(im);
      return;
    }
    im[static_cast<std::size_t>(i)] = i;
    self(self, i + 1);
    for (int j = i + 1; j < degree; ++j) {
      if (im[static_cast<std::size_t>(j)] != -1) continue;
      im[static_cast<std::size_t>(i)] = j;
      im[static_cast<std::size_t>(j)] = i;
      self(self, i + 1);
      im[static_cast<std::size_t>(j)] = -1;
    }
    im[static_cast<std::size_t>(i)] = -1;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace weylcells
