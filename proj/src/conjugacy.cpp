#include "weylcells/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace weylcells {

namespace {

using ElementSet = std::unordered_set<WeylElement, WeylElementHash>;

void finalize(const RootSystem& rs, ConjClass& c, const ElementSet& members) {
  c.elements.assign(members.begin(), members.end());
  std::sort(c.elements.begin(), c.elements.end());
  c.max_len = -1;
  c.min_len = 1 << 30;
  std::vector<int> lengths(c.elements.size());
  for (std::size_t k = 0; k < c.elements.size(); ++k) {
    lengths[k] = rs.length(c.elements[k]);
    c.max_len = std::max(c.max_len, lengths[k]);
    c.min_len = std::min(c.min_len, lengths[k]);
  }
  for (std::size_t k = 0; k < c.elements.size(); ++k) {
    if (lengths[k] == c.max_len) c.max_length.push_back(c.elements[k]);
    if (lengths[k] == c.min_len) c.min_length.push_back(c.elements[k]);
  }
}

// BFS over w -> left(i) * w * s_i for each simple index i.
template <typename LeftIndex>
ElementSet orbit(const RootSystem& rs, const WeylElement& w, LeftIndex left, std::uint64_t limit) {
  ElementSet seen{w};
  std::vector<WeylElement> frontier{w};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& x : frontier) {
      for (int i = 0; i < rs.rank(); ++i) {
        WeylElement y = rs.simple_times(left(i), rs.times_simple(x, i));
        if (seen.insert(y).second) {
          if (seen.size() > limit) throw GuardExceeded("class orbit exceeds the enumeration limit");
          next.push_back(std::move(y));
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

// ---------------------------------------------------------------------------
// DiagramAutomorphism

DiagramAutomorphism::DiagramAutomorphism(const RootSystem& rs, std::vector<int> images) : images_(std::move(images)) {
  const int n = rs.rank();
  if (static_cast<int>(images_.size()) != n) throw std::invalid_argument("diagram automorphism has wrong size");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("diagram automorphism is not a permutation of the simple roots");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.cartan_integer((*this)(i), (*this)(j)) != rs.cartan_integer(i, j)) {
        throw std::invalid_argument("permutation does not preserve the Cartan integers");
      }
}

DiagramAutomorphism DiagramAutomorphism::identity(const RootSystem& rs) {
  std::vector<int> im(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i) im[static_cast<std::size_t>(i)] = i;
  return DiagramAutomorphism(rs, std::move(im));
}

DiagramAutomorphism DiagramAutomorphism::delta0(const RootSystem& rs) {
  return DiagramAutomorphism(rs, rs.delta0_permutation());
}

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

WeylElement DiagramAutomorphism::apply(const RootSystem& rs, const WeylElement& w) const {
  auto word = rs.reduced_word(w);
  for (int& i : word) i = (*this)(i);
  return rs.from_word(word);
}

// ---------------------------------------------------------------------------
// Classes

bool ConjClass::contains(const WeylElement& w) const { return std::binary_search(elements.begin(), elements.end(), w); }

ConjClass conj_class(const RootSystem& rs, const WeylElement& w, std::uint64_t limit) {
  ConjClass c;
  c.representative = w;
  finalize(rs, c, orbit(rs, w, [](int i) { return i; }, limit));
  return c;
}

TwistedConjClass twisted_class(const RootSystem& rs, const WeylElement& w, const DiagramAutomorphism& delta,
                               std::uint64_t limit) {
  TwistedConjClass c;
  c.representative = w;
  c.delta = delta.images();
  finalize(rs, c, orbit(rs, w, [&](int i) { return delta(i); }, limit));
  return c;
}

std::vector<ConjClass> conjugacy_classes(const RootSystem& rs, std::uint64_t limit) {
  const auto group = rs.elements(limit);
  ElementSet assigned;
  std::vector<ConjClass> out;
  for (const auto& w : group) {
    if (assigned.contains(w)) continue;
    ConjClass c = conj_class(rs, w, limit);
    assigned.insert(c.elements.begin(), c.elements.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool MaximalSet::contains(const WeylElement& w) const { return std::binary_search(members.begin(), members.end(), w); }

namespace {

std::vector<ConjClass> involution_classes(const RootSystem& rs, std::uint64_t limit) {
  const auto group = rs.elements(limit);
  const WeylElement e = rs.identity();
  ElementSet assigned;
  std::vector<ConjClass> out;
  for (const auto& w : group) {
    if (assigned.contains(w) || !(w * w == e)) continue;
    ConjClass c = conj_class(rs, w, limit);
    assigned.insert(c.elements.begin(), c.elements.end());
    out.push_back(std::move(c));
  }
  return out;
}

MaximalSet make_set(const RootSystem& rs, std::vector<WeylElement> members) {
  std::sort(members.begin(), members.end());
  MaximalSet m{rs.type(), std::move(members), {}};
  for (const auto& w : m.members) m.fixed_subsets.push_back(J_of_m(rs, w));
  return m;
}

}  // namespace

MaximalSet compute_M(const RootSystem& rs, MaximalSetMode mode, std::uint64_t limit) {
  const auto classes =
      mode == MaximalSetMode::kInvolutions ? involution_classes(rs, limit) : conjugacy_classes(rs, limit);
  std::vector<WeylElement> members;
  for (const auto& c : classes)
    if (is_unique_max(c)) members.push_back(c.max_length.front());
  return make_set(rs, std::move(members));
}

MaximalSet compute_M_prime(const RootSystem& rs, std::uint64_t limit) {
  std::vector<WeylElement> members;
  for (const auto& c : involution_classes(rs, limit))
    members.insert(members.end(), c.max_length.begin(), c.max_length.end());
  return make_set(rs, std::move(members));
}

// ---------------------------------------------------------------------------
// Ascents and strong conjugacy

std::optional<WeylElement> ascent_step(const RootSystem& rs, const WeylElement& w, int i) {
  if (i < 0 || i >= rs.rank()) throw std::out_of_range("simple index out of range");
  WeylElement v = rs.conjugate_by_simple(w, i);
  if (rs.length(v) >= rs.length(w)) return v;
  return std::nullopt;
}

bool ascent_reachable(const RootSystem& rs, const WeylElement& w, const WeylElement& target) {
  if (w == target) return true;
  const int target_len = rs.length(target);
  ElementSet seen{w};
  std::deque<WeylElement> queue{w};
  while (!queue.empty()) {
    WeylElement x = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      auto y = ascent_step(rs, x, i);
      if (!y || rs.length(*y) > target_len) continue;
      if (*y == target) return true;
      if (seen.insert(*y).second) queue.push_back(*y);
    }
  }
  return false;
}

bool sim_step(const RootSystem& rs, const WeylElement& w, const WeylElement& w_prime, const WeylElement& x) {
  const int lw = rs.length(w);
  if (lw != rs.length(w_prime)) return false;
  const WeylElement x_inv = rs.inverse(x);
  if (!(x * w * x_inv == w_prime)) return false;
  const int lx = rs.length(x);
  return lw == rs.length(x * w) + lx || lw == lx + rs.length(w * x_inv);
}

std::vector<WeylElement> sim_component(const RootSystem& rs, const std::vector<WeylElement>& group,
                                       const WeylElement& start) {
  std::vector<WeylElement> inverses;
  inverses.reserve(group.size());
  std::vector<int> lengths;
  lengths.reserve(group.size());
  for (const auto& x : group) {
    inverses.push_back(rs.inverse(x));
    lengths.push_back(rs.length(x));
  }
  const int len = rs.length(start);
  ElementSet seen{start};
  std::deque<WeylElement> queue{start};
  while (!queue.empty()) {
    const WeylElement w = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < group.size(); ++k) {
      const WeylElement xw = group[k] * w;
      const WeylElement next = xw * inverses[k];
      if (seen.contains(next) || rs.length(next) != len) continue;
      if (len == rs.length(xw) + lengths[k] || len == lengths[k] + rs.length(w * inverses[k])) {
        seen.insert(next);
        queue.push_back(next);
      }
    }
  }
  std::vector<WeylElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool sim_reachable(const RootSystem& rs, const WeylElement& w, const WeylElement& w_prime) {
  if (rs.order() > kSimSearchLimit) {
    throw GuardExceeded("sim_reachable searches all of W; |W(" + rs.type().name() + ")| exceeds " +
                        std::to_string(kSimSearchLimit));
  }
  if (rs.length(w) != rs.length(w_prime)) return false;
  const auto component = sim_component(rs, rs.elements(), w);
  return std::binary_search(component.begin(), component.end(), w_prime);
}

// ---------------------------------------------------------------------------
// Conditions on subsets J of simple roots

bool w0_compatible(const RootSystem& rs, SimpleSubset j) {
  for (int i : j.indices())
    if (!j.contains(rs.delta0_index(i))) return false;
  const WeylElement w0 = rs.longest_element();
  const WeylElement w0j = rs.longest_element(j);
  for (int i : j.indices())
    if (w0.column(i) != w0j.column(i)) return false;
  return true;
}

bool isolation_condition(const RootSystem& rs, SimpleSubset j) {
  const int n = rs.rank();
  for (int a : j.indices()) {
    bool isolated = true;
    for (int other : j.indices())
      if (other != a && rs.simple_pairing(a, other) != 0) isolated = false;
    if (!isolated) continue;
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      const bool cond_a = rs.simple_pairing(a, a) == rs.simple_pairing(b, b) && rs.simple_pairing(b, a) != 0;
      bool cond_b = true;
      for (int other : j.indices())
        if (other != a && rs.simple_pairing(b, other) != 0) cond_b = false;
      const bool cond_c = rs.delta0_index(b) == b;
      if (cond_a && cond_b && cond_c) return false;
    }
  }
  return true;
}

std::vector<SimpleSubset> enumerate_J_prime(const RootSystem& rs) {
  std::vector<SimpleSubset> out;
  for (std::uint32_t bits = 0; bits < (1u << rs.rank()); ++bits)
    if (w0_compatible(rs, SimpleSubset(bits))) out.emplace_back(bits);
  return out;
}

std::vector<SimpleSubset> enumerate_J(const RootSystem& rs) {
  std::vector<SimpleSubset> out;
  for (SimpleSubset j : enumerate_J_prime(rs))
    if (isolation_condition(rs, j)) out.push_back(j);
  return out;
}

WeylElement m_of_J(const RootSystem& rs, SimpleSubset j) { return rs.longest_element() * rs.longest_element(j); }

SimpleSubset J_of_m(const RootSystem& rs, const WeylElement& m) {
  SimpleSubset j;
  for (int i = 0; i < rs.rank(); ++i)
    if (m.column(i) == rs.simple_root(i)) j = j.with(i);
  return j;
}

}  // namespace weylcells
