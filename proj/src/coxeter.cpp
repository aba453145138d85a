#include "weylcells/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace weylcells {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::size_t fnv1a(const void* data, std::size_t size, std::size_t seed = 1469598103934665603ull) {
  auto* p = static_cast<const unsigned char*>(data);
  std::size_t h = seed;
  for (std::size_t k = 0; k < size; ++k) {
    h ^= p[k];
    h *= 1099511628211ull;
  }
  return h;
}

struct DynkinData {
  std::vector<int> squared_lengths;
  std::vector<std::pair<int, int>> edges;
};

DynkinData dynkin(CartanType t) {
  const int n = t.rank;
  DynkinData d;
  d.squared_lengths.assign(n, 2);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n);
      for (int i = 0; i + 1 < n; ++i) d.squared_lengths[i] = 4;
      break;
    case Family::C:
      chain(n);
      d.squared_lengths[n - 1] = 4;
      break;
    case Family::D:
      chain(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-6(-7-8), with 2 attached to 4.
      d.edges.emplace_back(0, 2);
      d.edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case Family::F:
      chain(n);
      d.squared_lengths[0] = d.squared_lengths[1] = 4;
      break;
    case Family::G:
      chain(n);
      d.squared_lengths[1] = 6;
      break;
  }
  return d;
}

int root_height(const RootCoords& r) { return std::accumulate(r.begin(), r.end(), 0); }

}  // namespace

// ---------------------------------------------------------------------------
// CartanType

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad Cartan type: '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos) {
    throw std::invalid_argument("unknown Cartan family in '" + std::string(text) + "'");
  }
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad Cartan rank in '" + std::string(text) + "'");
    }
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw std::invalid_argument("bad Cartan rank in '" + std::string(text) + "'");
  }
  CartanType t{static_cast<Family>(letter), rank};
  validate(t);
  return t;
}

std::string CartanType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

void validate(CartanType t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw std::invalid_argument("invalid rank for Cartan type " + t.name());
  if (n > kMaxRank) throw std::invalid_argument("rank above " + std::to_string(kMaxRank) + " unsupported: " + t.name());
}

std::uint64_t weyl_group_order(CartanType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840ull : n == 7 ? 2903040ull : 696729600ull;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::size_t RootCoordsHash::operator()(const RootCoords& r) const noexcept { return fnv1a(r.data(), sizeof(r)); }

// ---------------------------------------------------------------------------
// SimpleSubset

SimpleSubset SimpleSubset::from_indices(std::initializer_list<int> zero_based) {
  return from_indices(std::span<const int>(zero_based.begin(), zero_based.size()));
}

SimpleSubset SimpleSubset::from_indices(std::span<const int> zero_based) {
  std::uint32_t bits = 0;
  for (int i : zero_based) {
    if (i < 0 || i >= kMaxRank) throw std::out_of_range("simple root index out of range");
    bits |= 1u << i;
  }
  return SimpleSubset(bits);
}

int SimpleSubset::size() const { return std::popcount(bits_); }

std::vector<int> SimpleSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string SimpleSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// WeylElement

WeylElement WeylElement::identity(CartanType t) {
  WeylElement w;
  w.type_ = t;
  for (int i = 0; i < t.rank; ++i) w.set(i, i, 1);
  return w;
}

RootCoords WeylElement::column(int col) const {
  RootCoords r{};
  for (int row = 0; row < rank(); ++row) r[row] = entry(row, col);
  return r;
}

bool WeylElement::is_identity() const {
  for (int c = 0; c < rank(); ++c)
    for (int r = 0; r < rank(); ++r)
      if (entry(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b) {
  if (auto c = a.type_ <=> b.type_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.m_.begin(), a.m_.end(), b.m_.begin(), b.m_.end());
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  if (u.type_ != v.type_) throw std::invalid_argument("multiplying Weyl elements of different root systems");
  const int n = u.rank();
  WeylElement out;
  out.type_ = u.type_;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const int vkj = v.entry(k, j);
      if (vkj == 0) continue;
      for (int i = 0; i < n; ++i) out.m_[j * kMaxRank + i] += static_cast<std::int8_t>(u.entry(i, k) * vkj);
    }
  }
  return out;
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  return fnv1a(w.raw().data(), w.raw().size(), static_cast<std::size_t>(w.rank()) * 31u + 7u);
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(CartanType t) : type_(t) {
  validate(t);
  const int n = t.rank;
  const DynkinData d = dynkin(t);
  for (int i = 0; i < n; ++i) gram_[i][i] = d.squared_lengths[i];
  for (auto [i, j] : d.edges) {
    const int v = -std::max(d.squared_lengths[i], d.squared_lengths[j]) / 2;
    gram_[i][j] = gram_[j][i] = v;
  }

  // Close the simple roots under the simple reflections.
  std::deque<RootCoords> queue;
  for (int i = 0; i < n; ++i) {
    RootCoords r = simple_root(i);
    root_index_.emplace(r, 0);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    RootCoords r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int dot = 0;
      for (int k = 0; k < n; ++k) dot += r[k] * gram_[k][i];
      RootCoords s = r;
      s[i] -= 2 * dot / gram_[i][i];
      if (root_index_.emplace(s, 0).second) queue.push_back(s);
    }
  }
  for (const auto& [r, idx] : root_index_) {
    roots_.push_back(r);
    if (is_positive(r)) positive_.push_back(r);
  }
  auto by_height = [](const RootCoords& a, const RootCoords& b) {
    const int ha = root_height(a), hb = root_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  };
  std::sort(positive_.begin(), positive_.end(), by_height);
  std::sort(roots_.begin(), roots_.end(), by_height);
  for (std::size_t k = 0; k < roots_.size(); ++k) root_index_[roots_[k]] = static_cast<int>(k);

  w0_ = longest_element(SimpleSubset::full(n));
  delta0_.resize(n);
  for (int i = 0; i < n; ++i) {
    RootCoords image = act(w0_, simple_root(i));
    for (auto& c : image) c = -c;
    int found = -1;
    for (int k = 0; k < n; ++k)
      if (image == simple_root(k)) found = k;
    if (found < 0) throw std::logic_error("-w0 does not permute the simple roots");
    delta0_[i] = found;
  }
}

RootCoords RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("simple root index out of range");
  RootCoords r{};
  r[i] = 1;
  return r;
}

bool RootSystem::is_positive(const RootCoords& r) { return root_height(r) > 0; }

int RootSystem::pairing(const RootCoords& a, const RootCoords& b) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

void RootSystem::check_type(const WeylElement& w) const {
  if (w.type() != type_) throw std::invalid_argument("Weyl element belongs to a different root system");
}

WeylElement RootSystem::simple_reflection(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("simple reflection index out of range");
  WeylElement s = identity();
  for (int j = 0; j < rank(); ++j) s.set(i, j, s.entry(i, j) - cartan_integer(i, j));
  return s;
}

WeylElement RootSystem::from_word(std::span<const int> word) const {
  WeylElement w = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) throw std::out_of_range("simple reflection index out of range");
    w = times_simple(w, i);
  }
  return w;
}

RootCoords RootSystem::act(const WeylElement& w, const RootCoords& root) const {
  check_type(w);
  RootCoords out{};
  for (int j = 0; j < rank(); ++j) {
    if (root[j] == 0) continue;
    for (int i = 0; i < rank(); ++i) out[i] += w.entry(i, j) * root[j];
  }
  return out;
}

int RootSystem::length(const WeylElement& w) const {
  check_type(w);
  const int n = rank();
  std::array<int, kMaxRank> col_height{};
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) col_height[j] += w.entry(i, j);
  int len = 0;
  for (const auto& beta : positive_) {
    int h = 0;
    for (int j = 0; j < n; ++j) h += beta[j] * col_height[j];
    if (h < 0) ++len;
  }
  return len;
}

bool RootSystem::is_right_descent(const WeylElement& w, int i) const {
  int h = 0;
  for (int r = 0; r < rank(); ++r) h += w.entry(r, i);
  return h < 0;
}

bool RootSystem::is_left_descent(const WeylElement& w, int i) const {
  return length(simple_times(i, w)) < length(w);
}

WeylElement RootSystem::times_simple(const WeylElement& w, int i) const {
  check_type(w);
  WeylElement out = w;
  const int n = rank();
  for (int j = 0; j < n; ++j) {
    const int a = cartan_integer(i, j);
    if (a == 0) continue;
    for (int r = 0; r < n; ++r) out.set(r, j, out.entry(r, j) - a * w.entry(r, i));
  }
  return out;
}

WeylElement RootSystem::simple_times(int i, const WeylElement& w) const {
  check_type(w);
  WeylElement out = w;
  const int n = rank();
  for (int j = 0; j < n; ++j) {
    int dot = 0;
    for (int r = 0; r < n; ++r) dot += w.entry(r, j) * gram_[r][i];
    out.set(i, j, out.entry(i, j) - 2 * dot / gram_[i][i]);
  }
  return out;
}

WeylElement RootSystem::conjugate_by_simple(const WeylElement& w, int i) const {
  return times_simple(simple_times(i, w), i);
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
  check_type(w);
  std::vector<int> word;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    int i = 0;
    while (!is_right_descent(cur, i)) ++i;
    word.push_back(i);
    cur = times_simple(cur, i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
  auto word = reduced_word(w);
  std::reverse(word.begin(), word.end());
  return from_word(word);
}

WeylElement RootSystem::longest_element(SimpleSubset j) const {
  WeylElement w = identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : j.indices()) {
      if (i >= rank()) throw std::out_of_range("subset index out of range");
      if (!is_right_descent(w, i)) {
        w = times_simple(w, i);
        grew = true;
      }
    }
  }
  return w;
}

Parabolic RootSystem::parabolic(SimpleSubset j) const {
  Parabolic p{j, longest_element(j), {}};
  for (const auto& beta : positive_) {
    bool inside = true;
    for (int i = 0; i < rank(); ++i)
      if (beta[i] != 0 && !j.contains(i)) inside = false;
    if (inside) p.positive_roots.push_back(beta);
  }
  return p;
}

bool RootSystem::bruhat_leq(const WeylElement& u, const WeylElement& w) const {
  check_type(u);
  check_type(w);
  // Right-handed lifting property: for a right descent s of w,
  // u <= w  iff  us <= ws (when s is a descent of u) or u <= ws (otherwise).
  WeylElement a = u, b = w;
  int la = length(a), lb = length(b);
  while (true) {
    if (la > lb) return false;
    if (la == lb) return a == b;
    int i = 0;
    while (!is_right_descent(b, i)) ++i;
    if (is_right_descent(a, i)) {
      a = times_simple(a, i);
      --la;
    }
    b = times_simple(b, i);
    --lb;
  }
}

RootCoords RootSystem::delta0_root(const RootCoords& root) const {
  RootCoords out = act(w0_, root);
  for (auto& c : out) c = -c;
  return out;
}

WeylElement RootSystem::delta0(const WeylElement& w) const { return w0_ * w * w0_; }

std::vector<WeylElement> RootSystem::coxeter_elements() const {
  std::vector<int> order(rank());
  std::iota(order.begin(), order.end(), 0);
  std::unordered_set<WeylElement, WeylElementHash> seen;
  do {
    seen.insert(from_word(order));
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<WeylElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElement> RootSystem::elements(std::uint64_t limit) const {
  if (order() > limit) {
    throw GuardExceeded("|W(" + type_.name() + ")| = " + std::to_string(order()) + " exceeds the enumeration limit " +
                        std::to_string(limit));
  }
  std::unordered_set<WeylElement, WeylElementHash> seen;
  seen.reserve(order());
  std::vector<WeylElement> frontier{identity()};
  seen.insert(identity());
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (int i = 0; i < rank(); ++i) {
        WeylElement v = times_simple(w, i);
        if (seen.insert(v).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string word_string(const RootSystem& rs, const WeylElement& w) {
  const auto word = rs.reduced_word(w);
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << word[k] + 1;
  return os.str();
}

}  // namespace weylcells
