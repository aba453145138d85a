#include "weylcells/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "weylcells/conjugacy.hpp"
#include "weylcells/permutation.hpp"

namespace weylcells {

namespace {

using ElementSet = std::unordered_set<WeylElement, WeylElementHash>;

std::string subsets_string(const std::vector<SimpleSubset>& js) {
  std::string s;
  for (std::size_t k = 0; k < js.size(); ++k) s += (k ? " " : "") + js[k].to_string();
  return s.empty() ? "(none)" : s;
}

std::vector<WeylElement> m_images(const RootSystem& rs, const std::vector<SimpleSubset>& js) {
  std::vector<WeylElement> out;
  for (auto j : js) out.push_back(m_of_J(rs, j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// First element of `a` missing from `b`, or of `b` missing from `a`.
std::optional<std::string> set_difference_witness(const RootSystem& rs, const std::vector<WeylElement>& a,
                                                  const std::vector<WeylElement>& b) {
  for (const auto& w : a)
    if (!std::binary_search(b.begin(), b.end(), w)) return element_string(rs, w) + " only on left";
  for (const auto& w : b)
    if (!std::binary_search(a.begin(), a.end(), w)) return element_string(rs, w) + " only on right";
  return std::nullopt;
}

void require_small(const RootSystem& rs, const char* what) {
  if (rs.order() > kSimSearchLimit) {
    throw GuardExceeded(std::string(what) + " searches all of W; |W(" + rs.type().name() + ")| = " +
                        std::to_string(rs.order()) + " exceeds " + std::to_string(kSimSearchLimit));
  }
}

}  // namespace

Report verify_theorem_main(const RootSystem& rs, std::uint64_t limit) {
  const std::string subject = rs.type().name();
  Report report;

  const auto enumerated = enumerate_J(rs);
  const auto catalog = catalog_J(rs.type());
  {
    std::vector<SimpleSubset> missing, extra;
    std::set_difference(enumerated.begin(), enumerated.end(), catalog.begin(), catalog.end(),
                        std::back_inserter(missing));
    std::set_difference(catalog.begin(), catalog.end(), enumerated.begin(), enumerated.end(),
                        std::back_inserter(extra));
    const bool ok = missing.empty() && extra.empty();
    report.add(subject, "J-catalog", ok, "|J| = " + std::to_string(enumerated.size()),
               "not in catalog: " + subsets_string(missing) + "; catalog only: " + subsets_string(extra));
  }

  const MaximalSet m = compute_M(rs, MaximalSetMode::kInvolutions, limit);
  {
    auto diff = set_difference_witness(rs, m.members, m_images(rs, enumerated));
    report.add(subject, "m-classification", !diff, "|M| = " + std::to_string(m.members.size()), diff);
  }
  {
    auto diff = set_difference_witness(rs, m.members, m_images(rs, catalog));
    report.add(subject, "m-catalog", !diff, "M = {m_J : J in catalog}", diff);
  }
  {
    const WeylElement e = rs.identity();
    std::optional<std::string> witness;
    for (const auto& w : m.members)
      if (!(w * w == e)) witness = element_string(rs, w);
    report.add(subject, "m-involutions", !witness, "every m in M squares to 1", witness);
  }
  {
    std::optional<std::string> witness;
    for (auto j : enumerated)
      if (J_of_m(rs, m_of_J(rs, j)) != j) witness = j.to_string();
    report.add(subject, "psi-inverse", !witness, "J_{m_J} = J on the classified subsets", witness);
  }
  return report;
}

Report verify_m_prime(const RootSystem& rs, std::uint64_t limit) {
  const std::string subject = rs.type().name();
  Report report;
  const MaximalSet m = compute_M(rs, MaximalSetMode::kInvolutions, limit);
  const MaximalSet mp = compute_M_prime(rs, limit);

  std::optional<std::string> not_in_prime;
  for (const auto& w : m.members)
    if (!mp.contains(w)) not_in_prime = element_string(rs, w);
  report.add(subject, "M-subset-M'", !not_in_prime,
             "|M| = " + std::to_string(m.members.size()) + ", |M'| = " + std::to_string(mp.members.size()),
             not_in_prime);

  std::optional<std::string> bad;
  for (std::size_t k = 0; k < mp.members.size(); ++k) {
    const auto j = mp.fixed_subsets[k];
    if (!w0_compatible(rs, j) || !(m_of_J(rs, j) == mp.members[k])) bad = element_string(rs, mp.members[k]);
  }
  report.add(subject, "M'-form", !bad, "m = w0 w_{0,J_m} with J_m having the w0-compatibility condition", bad);

  auto diff = set_difference_witness(rs, mp.members, m_images(rs, enumerate_J_prime(rs)));
  report.add(subject, "M'-bijection", !diff, "M' = {m_J : J with the w0-compatibility condition}", diff);
  return report;
}

Report verify_m_modes(const RootSystem& rs, std::uint64_t limit) {
  Report report;
  const auto fast = compute_M(rs, MaximalSetMode::kInvolutions, limit);
  const auto slow = compute_M(rs, MaximalSetMode::kExhaustive, limit);
  auto diff = set_difference_witness(rs, fast.members, slow.members);
  report.add(rs.type().name(), "m-modes", !diff, "involution scan agrees with the scan over all classes", diff);
  return report;
}

Report verify_conjugate_J(const RootSystem& rs) {
  require_small(rs, "verify_conjugate_J");
  const std::string subject = rs.type().name();
  const auto group = rs.elements();
  std::vector<WeylElement> fixed;
  for (const auto& w : group)
    if (rs.delta0(w) == w) fixed.push_back(w);

  const auto js = enumerate_J_prime(rs);
  std::vector<ConjClass> classes;
  for (auto j : js) classes.push_back(conj_class(rs, m_of_J(rs, j)));

  auto maps_onto = [&](const WeylElement& w, SimpleSubset j, SimpleSubset k) {
    if (j.size() != k.size()) return false;
    for (int i : j.indices()) {
      const RootCoords image = rs.act(w, rs.simple_root(i));
      bool hit = false;
      for (int t : k.indices())
        if (image == rs.simple_root(t)) hit = true;
      if (!hit) return false;
    }
    return true;
  };

  std::optional<std::string> witness;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < js.size(); ++a) {
    for (std::size_t b = 0; b < js.size(); ++b) {
      ++pairs;
      const bool conjugate = classes[a].contains(m_of_J(rs, js[b]));
      const bool mapped =
          std::any_of(fixed.begin(), fixed.end(), [&](const WeylElement& w) { return maps_onto(w, js[a], js[b]); });
      if (conjugate != mapped && !witness) witness = "J = " + js[a].to_string() + ", K = " + js[b].to_string();
    }
  }
  Report report;
  report.add(subject, "conjugate-J", !witness, std::to_string(pairs) + " pairs of the w0-compatibility condition subsets", witness);
  return report;
}

Report verify_cor_min_twisted(const RootSystem& rs, std::uint64_t limit) {
  const std::string subject = rs.type().name();
  const auto delta0 = DiagramAutomorphism::delta0(rs);
  const auto m = compute_M(rs, MaximalSetMode::kInvolutions, limit);
  std::optional<std::string> witness;
  for (const auto& x : m.members) {
    const WeylElement start = rs.longest_element() * x;
    const auto tc = twisted_class(rs, start, delta0, limit);
    if (!(tc.min_length.size() == 1 && tc.min_length.front() == start) && !witness) witness = element_string(rs, x);
  }
  Report report;
  report.add(subject, "twisted-min", !witness,
             "w0 m is the unique minimal element of its twisted class for " + std::to_string(m.members.size()) +
                 " m",
             witness);
  return report;
}

Report verify_phi(const RootSystem& rs, std::uint64_t limit) {
  const std::string subject = rs.type().name();
  const auto delta0 = DiagramAutomorphism::delta0(rs);
  const WeylElement w0 = rs.longest_element();
  std::optional<std::string> witness;
  const auto classes = conjugacy_classes(rs, limit);
  for (const auto& c : classes) {
    const auto tc = twisted_class(rs, w0 * c.representative, delta0, limit);
    std::vector<WeylElement> image;
    for (const auto& u : c.max_length) image.push_back(w0 * u);
    std::sort(image.begin(), image.end());
    if (image != tc.min_length && !witness) witness = element_string(rs, c.representative);
  }
  Report report;
  report.add(subject, "phi", !witness, std::to_string(classes.size()) + " classes", witness);
  return report;
}

Report verify_coxeter_below_M(const RootSystem& rs, int max_rank, std::uint64_t limit) {
  if (rs.rank() > max_rank) {
    throw GuardExceeded("Coxeter-element check limited to rank <= " + std::to_string(max_rank));
  }
  const std::string subject = rs.type().name();
  const auto m = compute_M(rs, MaximalSetMode::kInvolutions, limit);
  const auto coxeter = rs.coxeter_elements();
  std::optional<std::string> witness;
  std::size_t comparisons = 0;
  for (const auto& x : m.members) {
    if (x.is_identity()) continue;
    for (const auto& c : coxeter) {
      ++comparisons;
      if (!rs.bruhat_leq(c, x) && !witness) witness = element_string(rs, c) + " not below " + element_string(rs, x);
    }
  }
  Report report;
  report.add(subject, "coxeter-bound", !witness,
             std::to_string(coxeter.size()) + " Coxeter elements, " + std::to_string(comparisons) + " comparisons",
             witness);
  return report;
}

Report verify_ascent(const RootSystem& rs, std::uint64_t limit) {
  const std::string subject = rs.type().name();
  std::optional<std::string> witness;
  const auto classes = conjugacy_classes(rs, limit);
  for (const auto& c : classes) {
    // Reverse ascent edges, then flood backwards from the maximal-length elements.
    std::unordered_map<WeylElement, std::vector<WeylElement>, WeylElementHash> reverse;
    for (const auto& x : c.elements)
      for (int i = 0; i < rs.rank(); ++i)
        if (auto y = ascent_step(rs, x, i); y && !(*y == x)) reverse[*y].push_back(x);
    ElementSet reached(c.max_length.begin(), c.max_length.end());
    std::deque<WeylElement> queue(c.max_length.begin(), c.max_length.end());
    while (!queue.empty()) {
      const WeylElement y = queue.front();
      queue.pop_front();
      for (const auto& x : reverse[y])
        if (reached.insert(x).second) queue.push_back(x);
    }
    if (reached.size() != c.size() && !witness) {
      for (const auto& x : c.elements)
        if (!reached.contains(x)) {
          witness = element_string(rs, x);
          break;
        }
    }
  }
  Report report;
  report.add(subject, "ascent", !witness, std::to_string(classes.size()) + " classes", witness);
  return report;
}

Report verify_sim(const RootSystem& rs) {
  require_small(rs, "verify_sim");
  const std::string subject = rs.type().name();
  const auto group = rs.elements();
  std::optional<std::string> witness;
  const auto classes = conjugacy_classes(rs);
  for (const auto& c : classes) {
    if (c.max_length.size() < 2) continue;
    const auto component = sim_component(rs, group, c.max_length.front());
    for (const auto& w : c.max_length)
      if (!std::binary_search(component.begin(), component.end(), w) && !witness) {
        witness = element_string(rs, c.max_length.front()) + " !~ " + element_string(rs, w);
      }
  }
  Report report;
  report.add(subject, "sim", !witness, std::to_string(classes.size()) + " classes", witness);
  return report;
}

Report verify_bruhat_maximal(const RootSystem& rs) {
  require_small(rs, "verify_bruhat_maximal");
  const std::string subject = rs.type().name();
  std::optional<std::string> witness;
  for (const auto& c : conjugacy_classes(rs)) {
    std::vector<WeylElement> maximal;
    for (const auto& x : c.elements) {
      bool dominated = false;
      for (const auto& y : c.elements)
        if (!(x == y) && rs.bruhat_leq(x, y)) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(x);
    }
    if (maximal != c.max_length && !witness) witness = element_string(rs, c.representative);
  }
  Report report;
  report.add(subject, "bruhat-max", !witness, "Bruhat-maximal = maximal length in every class", witness);
  return report;
}

const std::vector<std::string>& weyl_check_names() {
  static const std::vector<std::string> names{"m-classification", "m-prime", "m-modes", "conjugate-J",
                                              "twisted-min",      "phi",     "coxeter-bound", "ascent",
                                              "sim",              "bruhat-max"};
  return names;
}

Report run_weyl_checks(const RootSystem& rs, const std::vector<std::string>& names, std::uint64_t limit) {
  using Suite = std::function<Report()>;
  const std::map<std::string, Suite> suites{
      {"m-classification", [&] { return verify_theorem_main(rs, limit); }},
      {"m-prime", [&] { return verify_m_prime(rs, limit); }},
      {"m-modes", [&] { return verify_m_modes(rs, limit); }},
      {"conjugate-J", [&] { return verify_conjugate_J(rs); }},
      {"twisted-min", [&] { return verify_cor_min_twisted(rs, limit); }},
      {"phi", [&] { return verify_phi(rs, limit); }},
      {"coxeter-bound", [&] { return verify_coxeter_below_M(rs, 6, limit); }},
      {"ascent", [&] { return verify_ascent(rs, limit); }},
      {"sim", [&] { return verify_sim(rs); }},
      {"bruhat-max", [&] { return verify_bruhat_maximal(rs); }},
  };

  bool all = false;
  std::vector<std::string> selected;
  for (const auto& n : names) {
    if (n == "all") {
      all = true;
    } else if (!suites.contains(n)) {
      throw std::invalid_argument("unknown check '" + n + "'");
    } else {
      selected.push_back(n);
    }
  }
  if (all) selected = weyl_check_names();

  Report report;
  for (const auto& n : weyl_check_names()) {
    if (std::find(selected.begin(), selected.end(), n) == selected.end()) continue;
    try {
      report.append(suites.at(n)());
    } catch (const GuardExceeded& e) {
      if (!all) throw;
      report.add(CheckRecord{rs.type().name(), n, Verdict::kSkip, {}, e.what(), std::nullopt});
    }
  }
  return report;
}

}  // namespace weylcells
