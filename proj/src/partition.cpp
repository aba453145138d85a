#include "weylcells/partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace weylcells {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    weight_ += parts_[k];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t k = 0;
  while (k < text.size()) {
    const char c = text[k];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad partition text");
    int v = 0;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
      v = v * 10 + (text[k++] - '0');
      if (v > 100000) throw std::invalid_argument("partition part too large");
    }
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts_[k]);
  }
  return s;
}

Partition dual(const Partition& lambda) {
  std::vector<int> out;
  for (int k = 1; k <= lambda.part(0); ++k) {
    int count = 0;
    for (int p : lambda.parts())
      if (p >= k) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw std::invalid_argument("dominance order compares partitions of equal weight (" + lambda.to_string() +
                                " vs " + mu.to_string() + ")");
  }
  int sl = 0, sm = 0;
  const int upto = std::max(lambda.length(), mu.length());
  for (int k = 0; k < upto; ++k) {
    sl += lambda.part(k);
    sm += mu.part(k);
    if (sl > sm) return false;
  }
  return true;
}

Partition two_one_shape(int p, int l) {
  if (p <= 0) throw std::invalid_argument("two_one_shape needs p > 0");
  if (l < 0 || 2 * l > p) throw std::invalid_argument("two_one_shape needs 0 <= l <= p/2");
  std::vector<int> parts(static_cast<std::size_t>(l), 2);
  parts.resize(static_cast<std::size_t>(p - l), 1);
  return Partition(std::move(parts));
}

TwoOneCriterion two_one_criterion(int p, int l, const Partition& mu) {
  if (mu.weight() != p) throw std::invalid_argument("two_one_criterion: mu must have weight p");
  return {dominance_leq(two_one_shape(p, l), mu), mu.length() <= p - l};
}

Partition cycle_type(const Permutation& w) { return Partition(w.cycle_lengths()); }

std::vector<Partition> partitions_of(int p) {
  std::vector<Partition> out;
  if (p < 0) return out;
  std::vector<int> cur;
  // Depth-first over non-increasing sequences, largest parts first.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, p, p);
  return out;
}

}  // namespace weylcells
