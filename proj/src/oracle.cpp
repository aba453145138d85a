#include "weylcells/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "weylcells/partition.hpp"

namespace weylcells {

namespace {

struct Elimination {
  std::vector<int> pivot_row;  // pivot_row[j] = w(j)
  std::optional<MatrixFq> left_inv;
  std::optional<MatrixFq> right_inv;
  std::optional<MatrixFq> monomial;
};

// Reduces L g R to a monomial matrix with L, R upper unitriangular. When
// tracking, keeps L^{-1} and R^{-1} so that g = L^{-1} M R^{-1}.
Elimination eliminate(const MatrixFq& g, bool track) {
  const int n = g.n();
  const PrimeField& f = prime_field(g.p());
  MatrixFq a = g;
  Elimination out;
  if (track) {
    out.left_inv = MatrixFq::identity(n, g.p());
    out.right_inv = MatrixFq::identity(n, g.p());
  }
  std::vector<bool> claimed(static_cast<std::size_t>(n), false);
  out.pivot_row.assign(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    int piv = -1;
    for (int r = n - 1; r >= 0; --r) {
      if (!claimed[static_cast<std::size_t>(r)] && a.at(r, j) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw std::domain_error("matrix is singular");
    claimed[static_cast<std::size_t>(piv)] = true;
    out.pivot_row[static_cast<std::size_t>(j)] = piv;
    const int iv = f.inv(a.at(piv, j));
    for (int r = 0; r < piv; ++r) {
      if (a.at(r, j) == 0) continue;
      const int c = f.neg(f.mul(a.at(r, j), iv));
      a.add_row_multiple(r, piv, c);
      // L <- (I + c E_{r,piv}) L, so L^{-1} <- L^{-1} (I - c E_{r,piv}).
      if (track) out.left_inv->add_col_multiple(piv, r, f.neg(c));
    }
    for (int k = j + 1; k < n; ++k) {
      if (a.at(piv, k) == 0) continue;
      const int c = f.neg(f.mul(a.at(piv, k), iv));
      a.add_col_multiple(k, j, c);
      // R <- R (I + c E_{j,k}), so R^{-1} <- (I - c E_{j,k}) R^{-1}.
      if (track) out.right_inv->add_row_multiple(j, k, f.neg(c));
    }
  }
  if (track) out.monomial = a;
  return out;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void require_field(int q) {
  if (!is_prime(q) || q > PrimeField::kMaxPrime) {
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime <= " + std::to_string(PrimeField::kMaxPrime));
  }
}

void require_enumerable(int n, int q, std::uint64_t limit) {
  require_field(q);
  if (n < 1 || n > MatrixFq::kMaxDim) throw std::invalid_argument("matrix dimension must be in [1, 6]");
  // Full enumeration walks all q^{n^2} matrices.
  if (n * n > 40 || ipow(static_cast<std::uint64_t>(q), n * n) > limit) {
    throw GuardExceeded("enumerating SL(" + std::to_string(n) + ", F_" + std::to_string(q) + ") exceeds the guard");
  }
}

std::vector<MatrixFq> upper_borel(int n, int q) {
  std::vector<MatrixFq> out;
  const int free = n * (n + 1) / 2 - 1;  // the last diagonal entry is forced
  std::vector<int> digits(static_cast<std::size_t>(free), 0);
  const PrimeField& f = prime_field(q);
  while (true) {
    MatrixFq b(n, q);
    std::size_t k = 0;
    int det = 1;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i; j < n; ++j) {
        if (i == n - 1 && j == n - 1) {
          b.set(i, j, f.inv(det));
          continue;
        }
        const int v = digits[k++];
        if (i == j) {
          if (v == 0) {
            ok = false;
            break;
          }
          det = f.mul(det, v);
        }
        b.set(i, j, v);
      }
    }
    if (ok) out.push_back(b);
    int pos = free - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == q - 1) digits[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace

MatrixFq permutation_matrix(const Permutation& w, int p) {
  MatrixFq m(w.degree(), p);
  for (int j = 0; j < w.degree(); ++j) m.set(w(j), j, 1);
  return m;
}

BruhatFactors bruhat_decompose(const MatrixFq& g) {
  auto e = eliminate(g, true);
  Permutation w(e.pivot_row);
  MatrixFq diag(g.n(), g.p());
  for (int j = 0; j < g.n(); ++j) diag.set(j, j, e.monomial->at(w(j), j));
  return BruhatFactors{w, *e.left_inv, permutation_matrix(w, g.p()), diag * *e.right_inv};
}

Permutation bruhat_bb(const MatrixFq& g) { return Permutation(eliminate(g, false).pivot_row); }

MatrixFq w0_representative(int n, int p) {
  MatrixFq m(n, p);
  for (int j = 0; j < n; ++j) m.set(n - 1 - j, j, 1);
  if ((n / 2) % 2 == 1) m.set(n - 1, 0, -1);
  return m;
}

Permutation bruhat_b_bminus(const MatrixFq& g) {
  return bruhat_bb(g * w0_representative(g.n(), g.p())) * reversal(g.n());
}

const std::vector<std::pair<int, int>>& default_guard_pairs() {
  static const std::vector<std::pair<int, int>> pairs{{2, 3}, {2, 5}, {2, 7}, {3, 2}, {3, 3}, {3, 5}, {4, 2}};
  return pairs;
}

bool in_default_guard(int n, int q) {
  const auto& pairs = default_guard_pairs();
  return std::find(pairs.begin(), pairs.end(), std::pair{n, q}) != pairs.end();
}

MatrixFq jordan_representative(const JordanClass& c, int q) {
  require_field(q);
  c.validate_values(q);
  const int n = c.n_plus_1();
  if (n > MatrixFq::kMaxDim) throw std::invalid_argument("matrix dimension must be at most 6");
  MatrixFq m(n, q);
  int pos = 0;
  for (const auto& e : c.eigen_data()) {
    const int v = c.values()->at(e.label);
    for (int b : e.blocks) {
      for (int k = 0; k < b; ++k) {
        m.set(pos + k, pos + k, v);
        if (k + 1 < b) m.set(pos + k, pos + k + 1, 1);
      }
      pos += b;
    }
  }
  return m;
}

std::vector<MatrixFq> geometric_class(const JordanClass& c, int q, std::uint64_t limit) {
  const MatrixFq start = jordan_representative(c, q);
  const int n = start.n();
  if (sl_order(n, q) > limit) {
    throw GuardExceeded("|SL(" + std::to_string(n) + ", F_" + std::to_string(q) + ")| exceeds the guard of " +
                        std::to_string(limit));
  }
  // GL(n, F_q) is generated by the unit transvections and diag(z, 1, ..., 1)
  // for a primitive root z.
  std::vector<std::pair<MatrixFq, MatrixFq>> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      MatrixFq t = MatrixFq::identity(n, q);
      t.set(i, j, 1);
      MatrixFq ti = MatrixFq::identity(n, q);
      ti.set(i, j, -1);
      gens.emplace_back(t, ti);
    }
  if (q > 2) {
    MatrixFq d = MatrixFq::identity(n, q);
    d.set(0, 0, prime_field(q).primitive_root());
    gens.emplace_back(d, d.inverse());
  }

  std::unordered_set<MatrixFq, MatrixFqHash> seen{start};
  std::deque<MatrixFq> frontier{start};
  while (!frontier.empty()) {
    const MatrixFq g = frontier.front();
    frontier.pop_front();
    for (const auto& [x, xi] : gens) {
      MatrixFq h = x * g * xi;
      if (seen.insert(h).second) {
        if (seen.size() > limit) throw GuardExceeded("orbit exceeds the guard of " + std::to_string(limit));
        frontier.push_back(std::move(h));
      }
    }
  }
  std::vector<MatrixFq> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<JordanClass> split_classes(int n, int q) {
  require_field(q);
  if (n < 1 || n > MatrixFq::kMaxDim) throw std::invalid_argument("matrix dimension must be in [1, 6]");
  const PrimeField& f = prime_field(q);
  std::vector<JordanClass> out;
  std::vector<std::pair<int, Partition>> chosen;
  auto rec = [&](auto&& self, int value, int remaining) -> void {
    if (remaining == 0) {
      int det = 1;
      for (const auto& [v, part] : chosen) det = f.mul(det, f.pow(v, part.weight()));
      if (det != 1) return;
      std::vector<EigenBlocks> data;
      std::map<std::string, int> values;
      for (const auto& [v, part] : chosen) {
        data.push_back({std::to_string(v), part.parts()});
        values[std::to_string(v)] = v;
      }
      out.emplace_back(n, std::move(data), std::move(values));
      return;
    }
    if (value >= q) return;
    for (int w = remaining; w >= 1; --w) {
      for (const auto& part : partitions_of(w)) {
        chosen.emplace_back(value, part);
        self(self, value + 1, remaining - w);
        chosen.pop_back();
      }
    }
    self(self, value + 1, remaining);
  };
  rec(rec, 1, n);
  return out;
}

nlohmann::json EmpiricalIntersectionTable::to_json() const {
  nlohmann::json j;
  j["class"] = cls.describe();
  j["jordan"] = cls.to_json();
  j["q"] = q;
  j["orbit_size"] = orbit_size;
  j["W_C"] = nlohmann::json::array();
  for (const auto& w : wc) j["W_C"].push_back(w.cycle_string());
  j["W_C_minus"] = nlohmann::json::array();
  for (const auto& w : wc_minus) j["W_C_minus"].push_back(w.cycle_string());
  j["bruhat_max"] = bruhat_max ? nlohmann::json(bruhat_max->cycle_string()) : nlohmann::json(nullptr);
  return j;
}

EmpiricalIntersectionTable empirical_WC(const JordanClass& c, int q, std::uint64_t limit) {
  const auto orbit = geometric_class(c, q, limit);
  std::set<Permutation> wc, wc_minus;
  for (const auto& g : orbit) {
    wc.insert(bruhat_bb(g));
    wc_minus.insert(bruhat_b_bminus(g));
  }
  EmpiricalIntersectionTable t{c, q, orbit.size(), {wc.begin(), wc.end()}, {wc_minus.begin(), wc_minus.end()},
                               std::nullopt};
  for (const auto& top : t.wc) {
    if (std::all_of(t.wc.begin(), t.wc.end(), [&](const Permutation& u) { return bruhat_leq_tableau(u, top); })) {
      t.bruhat_max = top;
      break;
    }
  }
  return t;
}

Report validate_predictions(const EmpiricalIntersectionTable& t, bool complete) {
  Report rep;
  const JordanClass& c = t.cls;
  const int n = c.n_plus_1();
  const int r = r_of(c);
  const int l = l_of(c);
  const Permutation m = m_C(c).perm();
  const Partition nu = nu_tilde_star(c);
  const std::string subject = c.describe() + " q=" + std::to_string(t.q);
  const std::set<Permutation> wc(t.wc.begin(), t.wc.end());
  const std::set<Permutation> wc_minus(t.wc_minus.begin(), t.wc_minus.end());
  const auto all = all_permutations(n);

  auto first_failure = [](const auto& range, auto pred) -> std::optional<std::string> {
    for (const auto& w : range)
      if (!pred(w)) return w.cycle_string();
    return std::nullopt;
  };
  auto add = [&](const std::string& check, const std::string& kind, std::optional<std::string> witness,
                 const std::string& detail) { rep.add(subject, check, !witness, detail, witness, kind); };

  add("wc-subset-wc-minus", "SOUND",
      first_failure(t.wc, [&](const Permutation& w) { return wc_minus.count(w) > 0; }),
      "W_C (" + std::to_string(wc.size()) + ") inside W_C^- (" + std::to_string(wc_minus.size()) + ")");
  add("l2-bound", "SOUND", first_failure(t.wc, [&](const Permutation& w) { return w.l2() <= r; }),
      "l2(w) <= r(C) = " + std::to_string(r));
  add("involution-bound", "SOUND",
      first_failure(t.wc, [&](const Permutation& w) { return !w.is_involution() || w.l2() <= l; }),
      "involutions in W_C have l2 <= l(C) = " + std::to_string(l));
  add("wc-below-mC", "SOUND", first_failure(t.wc, [&](const Permutation& w) { return bruhat_leq_tableau(w, m); }),
      "W_C below m_C = " + m.cycle_string());
  add("wc-minus-below-mC", "SOUND",
      first_failure(t.wc_minus, [&](const Permutation& w) { return bruhat_leq_tableau(w, m); }),
      "W_C^- below m_C = " + m.cycle_string());

  // Group S_n into classes by cycle type.
  std::map<Partition, std::vector<Permutation>> classes;
  for (const auto& w : all) classes[cycle_type(w)].push_back(w);
  {
    std::optional<std::string> witness;
    for (const auto& [lambda, members] : classes) {
      const bool contained =
          std::all_of(members.begin(), members.end(), [&](const Permutation& w) { return wc.count(w) > 0; });
      if (contained && !dominance_leq(lambda, nu)) {
        witness = "cycle type " + lambda.to_string();
        break;
      }
    }
    add("full-class-dominance", "SOUND", witness, "contained classes dominated by nu~* = " + nu.to_string());
  }

  if (!complete) return rep;

  {
    std::set<Permutation> empirical, predicted;
    for (const auto& w : t.wc)
      if (w.is_involution()) empirical.insert(w);
    for (const auto& w : involutions(n))
      if (w.l2() <= l) predicted.insert(w);
    std::optional<std::string> witness;
    for (const auto& w : predicted)
      if (!empirical.count(w)) witness = "missing " + w.cycle_string();
    for (const auto& w : empirical)
      if (!predicted.count(w)) witness = "unexpected " + w.cycle_string();
    add("involution-cells", "COMPLETE", witness,
        std::to_string(empirical.size()) + " involutions, predicted " + std::to_string(predicted.size()));
  }
  {
    std::optional<std::string> witness;
    if (!t.bruhat_max) {
      witness = "no unique Bruhat maximum";
    } else if (*t.bruhat_max != m) {
      witness = t.bruhat_max->cycle_string();
    }
    add("bruhat-max", "COMPLETE", witness, "Bruhat maximum equals m_C = " + m.cycle_string());
  }
  {
    std::optional<std::string> witness;
    for (const auto& w : all) {
      if (bruhat_leq_tableau(w, m) != (wc_minus.count(w) > 0)) {
        witness = w.cycle_string();
        break;
      }
    }
    add("wc-minus-interval", "COMPLETE", witness, "W_C^- = {w <= " + m.cycle_string() + "}");
  }
  {
    std::optional<std::string> witness;
    for (const auto& [lambda, members] : classes) {
      const bool contained =
          std::all_of(members.begin(), members.end(), [&](const Permutation& w) { return wc.count(w) > 0; });
      if (contained != dominance_leq(lambda, nu)) {
        witness = "cycle type " + lambda.to_string();
        break;
      }
    }
    add("full-class-criterion", "COMPLETE", witness, "class in W_C iff dominated by " + nu.to_string());
  }
  {
    std::optional<std::string> witness;
    for (const auto& w : all) {
      const bool below = std::any_of(t.wc.begin(), t.wc.end(), [&](const Permutation& u) { return bruhat_leq_tableau(w, u); });
      if (below != (wc_minus.count(w) > 0)) {
        witness = w.cycle_string();
        break;
      }
    }
    add("wc-minus-downset", "COMPLETE", witness, "W_C^- is the Bruhat down-set of W_C");
  }
  {
    std::optional<std::string> witness;
    for (const auto& [lambda, members] : classes) {
      if (!members.front().is_involution()) continue;
      const auto hits = std::count_if(members.begin(), members.end(), [&](const Permutation& w) { return wc.count(w) > 0; });
      if (hits > 0 && static_cast<std::size_t>(hits) != members.size()) {
        witness = "cycle type " + lambda.to_string();
        break;
      }
    }
    add("involution-class-closed", "COMPLETE", witness, "involution classes meeting W_C lie in W_C");
  }
  {
    std::optional<std::string> witness;
    for (const auto& w : t.wc) {
      for (const auto& u : classes.at(cycle_type(w))) {
        if (!wc_minus.count(u)) {
          witness = u.cycle_string();
          break;
        }
      }
      if (witness) break;
    }
    add("class-in-wc-minus", "COMPLETE", witness, "classes of W_C elements lie in W_C^-");
  }
  return rep;
}

Report check_cell_sizes(int n, int q, std::uint64_t limit) {
  require_enumerable(n, q, limit);
  const std::string subject = "SL(" + std::to_string(n) + ", F_" + std::to_string(q) + ")";
  std::map<Permutation, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::optional<std::string> bad_factor;
  for_each_sl(n, q, [&](const MatrixFq& g) {
    ++total;
    if (bad_factor) {
      ++counts[bruhat_bb(g)];
      return;
    }
    const auto fac = bruhat_decompose(g);
    ++counts[fac.w];
    if (!fac.left.is_upper_triangular() || !fac.right.is_upper_triangular() ||
        fac.left * fac.perm_matrix * fac.right != g) {
      bad_factor = g.to_string();
    }
  });
  Report rep;
  rep.add(subject, "reconstruction", !bad_factor, "g = b1 w b2 for all " + std::to_string(total) + " elements",
          bad_factor, "SOUND");
  const std::uint64_t borel = sl_borel_order(n, q);
  std::optional<std::string> bad_cell;
  std::uint64_t sum = 0;
  for (const auto& w : all_permutations(n)) {
    const std::uint64_t expected = borel * ipow(static_cast<std::uint64_t>(q), w.inversions());
    const auto it = counts.find(w);
    const std::uint64_t got = it == counts.end() ? 0 : it->second;
    sum += got;
    if (got != expected && !bad_cell) bad_cell = w.cycle_string() + " has " + std::to_string(got) + ", expected " + std::to_string(expected);
  }
  rep.add(subject, "cell-sizes", !bad_cell, "|BwB| = |B| q^l(w)", bad_cell, "SOUND");
  const bool sums = sum == sl_order(n, q) && total == sl_order(n, q);
  rep.add(subject, "cell-sum", sums, std::to_string(sum) + " = |SL| = " + std::to_string(sl_order(n, q)),
          sums ? std::nullopt : std::optional<std::string>(std::to_string(sum)), "SOUND");
  return rep;
}

Report check_deodhar(const Permutation& w, int q, std::uint64_t sample_budget) {
  const int n = w.degree();
  require_enumerable(n, q, kOracleStateLimit);
  const std::string subject =
      "SL(" + std::to_string(n) + ", F_" + std::to_string(q) + ") w=" + w.cycle_string();
  std::vector<MatrixFq> cell;
  for_each_sl(n, q, [&](const MatrixFq& g) {
    if (bruhat_b_bminus(g) == w) cell.push_back(g);
  });
  const auto borel = upper_borel(n, q);
  const std::uint64_t pairs = static_cast<std::uint64_t>(cell.size()) * borel.size();
  const bool exhaustive = pairs <= sample_budget;

  std::set<Permutation> attained;
  std::optional<std::string> below;
  auto visit = [&](const MatrixFq& g, const MatrixFq& b) {
    const Permutation u = bruhat_bb(g * b);
    if (attained.insert(u).second && !below && !bruhat_leq_tableau(w, u)) below = u.cycle_string();
  };
  if (exhaustive) {
    for (const auto& g : cell)
      for (const auto& b : borel) visit(g, b);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick_g(0, cell.size() - 1), pick_b(0, borel.size() - 1);
    for (std::uint64_t k = 0; k < sample_budget; ++k) visit(cell[pick_g(rng)], borel[pick_b(rng)]);
  }
  Report rep;
  rep.add(subject, "deodhar-lower-bound", !below,
          std::string(exhaustive ? "all " : "sampled ") + std::to_string(exhaustive ? pairs : sample_budget) +
              " products land in cells >= w",
          below, "SOUND");
  if (exhaustive) {
    std::optional<std::string> missing;
    for (const auto& u : all_permutations(n))
      if (bruhat_leq_tableau(w, u) && !attained.count(u)) {
        missing = u.cycle_string();
        break;
      }
    rep.add(subject, "deodhar-attained", !missing, "every w' >= w is attained", missing, "COMPLETE");
  }
  return rep;
}

}  // namespace weylcells
