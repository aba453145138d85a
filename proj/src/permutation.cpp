#include "weylcells/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylcells {

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t k = 0;
  while (k < text.size()) {
    const char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++k;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in permutation");
    }
    int v = 0;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
      v = v * 10 + (text[k] - '0');
      if (v > 1000) throw std::invalid_argument("permutation point too large");
      ++k;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::parse_cycles(std::string_view text, int degree) {
  if (degree <= 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty() || compact == "e" || compact == "()") return Permutation(std::move(im));

  std::size_t k = 0;
  while (k < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
      continue;
    }
    if (text[k] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    const std::size_t close = text.find(')', k);
    if (close == std::string_view::npos) throw std::invalid_argument("unbalanced '(' in cycle notation");
    const auto body = text.substr(k + 1, close - k - 1);
    if (body.find('(') != std::string_view::npos) throw std::invalid_argument("nested '(' in cycle notation");
    const auto points = parse_ints(body);
    for (std::size_t a = 0; a < points.size(); ++a) {
      const int p = points[a];
      if (p < 1 || p > degree) throw std::invalid_argument("point " + std::to_string(p) + " out of range");
      if (used[static_cast<std::size_t>(p - 1)]) throw std::invalid_argument("point repeated in cycle notation");
      used[static_cast<std::size_t>(p - 1)] = true;
      im[static_cast<std::size_t>(p - 1)] = points[(a + 1) % points.size()] - 1;
    }
    k = close + 1;
  }
  return Permutation(std::move(im));
}

Permutation Permutation::parse_one_line(std::string_view text) {
  auto values = parse_ints(text);
  if (values.empty()) throw std::invalid_argument("empty permutation");
  for (auto& v : values) v -= 1;
  return Permutation(std::move(values));
}

Permutation Permutation::parse(std::string_view text, int degree) {
  const bool cycles = text.find('(') != std::string_view::npos || text == "e";
  if (cycles) return parse_cycles(text, degree);
  Permutation p = parse_one_line(text);
  if (p.degree() != degree) {
    throw std::invalid_argument("one-line permutation has degree " + std::to_string(p.degree()) + ", expected " +
                                std::to_string(degree));
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < degree(); ++i)
    if ((*this)((*this)(i)) != i) return false;
  return true;
}

int Permutation::l2() const {
  int c = 0;
  for (int i = 0; i < degree(); ++i)
    if ((*this)(i) > i) ++c;
  return c;
}

int Permutation::inversions() const {
  int c = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if ((*this)(i) > (*this)(j)) ++c;
  return c;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
    os << '(';
    bool first = true;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "e";
}

std::string Permutation::one_line_string() const {
  std::ostringstream os;
  for (int i = 0; i < degree(); ++i) os << (i ? " " : "") << (*this)(i) + 1;
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> im(static_cast<std::size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) im[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation reversal(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = degree - 1 - i;
  return Permutation(std::move(im));
}

WeylElement to_weyl(const RootSystem& type_a, const Permutation& p) {
  if (type_a.type().family != Family::A || type_a.rank() + 1 != p.degree()) {
    throw std::invalid_argument("permutation degree does not match the type A root system");
  }
  // Bubble-sort p into the identity by adjacent transpositions on the right.
  std::vector<int> im = p.images();
  std::vector<int> word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 0; i + 1 < p.degree(); ++i) {
      if (im[static_cast<std::size_t>(i)] > im[static_cast<std::size_t>(i + 1)]) {
        std::swap(im[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(i + 1)]);
        word.push_back(i);
        swapped = true;
      }
    }
  }
  // p * s_{i1} * ... * s_{ik} = e, so p = s_{ik} ... s_{i1}.
  std::reverse(word.begin(), word.end());
  return type_a.from_word(word);
}

Permutation to_permutation(const RootSystem& type_a, const WeylElement& w) {
  if (type_a.type().family != Family::A || w.type() != type_a.type()) {
    throw std::invalid_argument("Weyl element is not of the given type A");
  }
  Permutation p = Permutation::identity(type_a.rank() + 1);
  for (int i : type_a.reduced_word(w)) {
    std::vector<int> im(static_cast<std::size_t>(p.degree()));
    std::iota(im.begin(), im.end(), 0);
    std::swap(im[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(i + 1)]);
    p = p * Permutation(std::move(im));
  }
  return p;
}

bool bruhat_leq_tableau(const Permutation& u, const Permutation& w) {
  if (u.degree() != w.degree()) throw std::invalid_argument("comparing permutations of different degree");
  const int n = u.degree();
  // u <= w iff |{a <= i : u(a) >= j}| <= |{a <= i : w(a) >= j}| for all i, j.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int cu = 0, cw = 0;
      for (int a = 0; a <= i; ++a) {
        if (u(a) >= j) ++cu;
        if (w(a) >= j) ++cw;
      }
      if (cu > cw) return false;
    }
  }
  return true;
}

PermutationBruhat::PermutationBruhat(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  if (degree > 1) type_a_.emplace(CartanType{Family::A, degree - 1});
}

bool PermutationBruhat::leq(const Permutation& u, const Permutation& w) const {
  if (u.degree() != degree_ || w.degree() != degree_) throw std::invalid_argument("permutation degree mismatch");
  if (!type_a_) return true;
  return type_a_->bruhat_leq(to_weyl(*type_a_, u), to_weyl(*type_a_, w));
}

std::string element_string(const RootSystem& rs, const WeylElement& w) {
  if (rs.type().family == Family::A) return to_permutation(rs, w).cycle_string();
  return word_string(rs, w);
}

}  // namespace weylcells
