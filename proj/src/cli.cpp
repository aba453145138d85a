#include "weylcells/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "weylcells/conjugacy.hpp"
#include "weylcells/oracle.hpp"
#include "weylcells/partition.hpp"
#include "weylcells/permutation.hpp"
#include "weylcells/sl_criteria.hpp"
#include "weylcells/verify.hpp"

namespace weylcells::cli {

namespace {

using nlohmann::json;

constexpr int kHasseDegree = 6;

// Raised for malformed input detected after parsing; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  bool allow_large = false;

  std::string type;
  std::string checks = "all";

  std::string class_file;
  std::string class_json;
  std::string perm;
  std::string out_file;

  int q = 0;
  int dim = 0;
  std::string oracle_checks = "sound";
};

bool as_json(const Options& o) { return o.format == "json"; }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

JordanClass load_class(const Options& o) {
  if (o.class_file.empty() == o.class_json.empty()) throw UsageError("give exactly one of --class or --class-json");
  json j;
  try {
    if (!o.class_json.empty()) {
      j = json::parse(o.class_json);
    } else {
      std::ifstream in(o.class_file);
      if (!in) throw UsageError("cannot open " + o.class_file);
      j = json::parse(in);
    }
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return JordanClass::from_json(j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

CartanType load_type(const std::string& text) {
  try {
    return CartanType::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ---- catalog --------------------------------------------------------------

int cmd_catalog(const Options& o, std::ostream& out) {
  const CartanType t = load_type(o.type);
  const RootSystem rs(t);
  const auto subsets = catalog_J(t);
  if (as_json(o)) {
    json entries = json::array();
    for (const auto j : subsets) {
      const auto m = m_of_J(rs, j);
      json idx = json::array();
      for (int i : j.indices()) idx.push_back(i + 1);
      entries.push_back({{"J", idx}, {"m", element_string(rs, m)}, {"length", rs.length(m)}});
    }
    out << json{{"type", t.name()}, {"order", rs.order()}, {"entries", entries}}.dump(2) << '\n';
    return kExitPass;
  }
  out << "type " << t.name() << "  |W| = " << rs.order() << "  entries = " << subsets.size() << '\n';
  for (const auto j : subsets) {
    const auto m = m_of_J(rs, j);
    out << "  J = " << std::left << std::setw(20) << j.to_string() << " m_J = " << element_string(rs, m)
        << "  (length " << rs.length(m) << ")\n";
  }
  return kExitPass;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const CartanType t = load_type(o.type);
  const std::uint64_t order = weyl_group_order(t);
  if (order > kDefaultEnumerationLimit && !o.allow_large) {
    err << "error: |W(" << t.name() << ")| = " << order << " exceeds the enumeration guard of "
        << kDefaultEnumerationLimit << "; pass --allow-large to override\n";
    return kExitUsage;
  }
  const auto names = split_list(o.checks);
  if (names.empty()) throw UsageError("--checks is empty");
  const std::uint64_t limit = o.allow_large ? std::numeric_limits<std::uint64_t>::max() : kDefaultEnumerationLimit;
  const RootSystem rs(t);
  Report rep;
  try {
    rep = run_weyl_checks(rs, names, limit);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (as_json(o)) {
    json j = rep.to_json();
    j["type"] = t.name();
    out << j.dump(2) << '\n';
  } else {
    out << rep.to_text();
    out << (rep.passed() ? "PASS" : "FAIL") << ' ' << t.name() << ": " << rep.records().size() << " checks, "
        << rep.failures() << " failed\n";
  }
  return rep.passed() ? kExitPass : kExitViolation;
}

// ---- query ----------------------------------------------------------------

int cmd_query(const Options& o, std::ostream& out) {
  const JordanClass c = load_class(o);
  Permutation w;
  try {
    w = Permutation::parse(o.perm, c.n_plus_1());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int r = r_of(c);
  const int l = l_of(c);
  const Partition nu = nu_tilde_star(c);
  const Permutation m = m_C(c).perm();
  const Partition lambda = cycle_type(w);
  const bool whole_class = class_in_WC(c, lambda);

  json j{{"class", c.describe()}, {"r", r}, {"l", l}, {"nu_tilde_star", nu.parts()}, {"m_C", m.cycle_string()},
         {"w", w.cycle_string()}, {"l2", w.l2()}, {"involution", w.is_involution()},
         {"cycle_type", lambda.parts()}, {"class_in_W_C", whole_class}};
  std::string cell_line;
  if (w.is_involution()) {
    const bool meets = decide_involution_cell(c, InvolutionPerm(w));
    j["cell_meets_class"] = meets;
    cell_line = std::string("involution cell: ") + (meets ? "nonempty" : "empty") + " (l2 = " +
                std::to_string(w.l2()) + ", l(C) = " + std::to_string(l) + ")";
  } else {
    const bool nec = necessary_condition(c, w);
    j["necessary_condition"] = nec;
    cell_line = std::string("necessary condition l2 <= r(C): ") + (nec ? "holds (inconclusive)" : "fails, cell is empty") +
                " (l2 = " + std::to_string(w.l2()) + ", r(C) = " + std::to_string(r) + ")";
  }
  if (as_json(o)) {
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  out << "class: " << c.describe() << '\n'
      << "r(C) = " << r << '\n'
      << "l(C) = " << l << '\n'
      << "nu~*(C) = (" << nu.to_string() << ")\n"
      << "m_C = " << m.cycle_string() << '\n'
      << "w = " << w.cycle_string() << '\n'
      << cell_line << '\n'
      << "full class of cycle type (" << lambda.to_string() << "): "
      << (whole_class ? "contained in W_C" : "not contained in W_C") << '\n';
  return kExitPass;
}

// ---- hasse ----------------------------------------------------------------

int cmd_hasse(const Options& o, std::ostream& out, std::ostream& err) {
  const JordanClass c = load_class(o);
  const int degree_limit = o.allow_large ? kMaxEnumerationDegree : kHasseDegree;
  if (c.n_plus_1() > degree_limit) {
    err << "error: n+1 = " << c.n_plus_1() << " exceeds the diagram guard of " << degree_limit
        << (o.allow_large ? "" : "; pass --allow-large to raise it") << '\n';
    return kExitUsage;
  }
  auto elems = enumerate_WC_minus(c);
  std::stable_sort(elems.begin(), elems.end(),
                   [](const Permutation& a, const Permutation& b) { return a.inversions() < b.inversions(); });
  const PermutationBruhat order(c.n_plus_1());
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      if (elems[b].inversions() == elems[a].inversions() + 1 && order.leq(elems[a], elems[b])) covers.emplace_back(a, b);

  std::ostringstream dot;
  dot << "digraph bruhat {\n  rankdir=BT;\n  node [shape=box];\n";
  dot << "  label=\"" << c.describe() << "  m_C = " << m_C(c).perm().cycle_string() << "\";\n";
  for (std::size_t k = 0; k < elems.size(); ++k) dot << "  n" << k << " [label=\"" << elems[k].cycle_string() << "\"];\n";
  for (const auto& [a, b] : covers) dot << "  n" << a << " -> n" << b << ";\n";
  dot << "}\n";

  if (o.out_file.empty()) {
    out << dot.str();
  } else {
    std::ofstream f(o.out_file);
    if (!f) throw UsageError("cannot write " + o.out_file);
    f << dot.str();
    out << "wrote " << elems.size() << " nodes and " << covers.size() << " edges to " << o.out_file << '\n';
  }
  return kExitPass;
}

// ---- oracle ---------------------------------------------------------------

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  if (!is_prime(o.q) || o.q > PrimeField::kMaxPrime) throw UsageError("--q must be a prime <= 31");
  bool complete = false;
  bool cells = false;
  for (const auto& name : split_list(o.oracle_checks)) {
    if (name == "sound") {
    } else if (name == "complete") {
      complete = true;
    } else if (name == "cells") {
      cells = true;
    } else if (name == "all") {
      complete = cells = true;
    } else {
      throw UsageError("unknown oracle check '" + name + "' (expected sound, complete, cells, all)");
    }
  }

  std::vector<JordanClass> classes;
  int n = o.dim;
  if (!o.class_file.empty() || !o.class_json.empty()) {
    classes.push_back(load_class(o));
    if (n != 0 && n != classes.front().n_plus_1()) throw UsageError("--n disagrees with the class");
    n = classes.front().n_plus_1();
    try {
      classes.front().validate_values(o.q);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    if (n < 1) throw UsageError("give --class, --class-json or --n");
    if (n > MatrixFq::kMaxDim) throw UsageError("--n must be at most 6");
    classes = split_classes(n, o.q);
  }
  if (!in_default_guard(n, o.q) && !o.allow_large) {
    err << "error: (n, q) = (" << n << ", " << o.q << ") is outside the default oracle guard; pass --allow-large\n";
    return kExitUsage;
  }
  const std::uint64_t limit = o.allow_large ? std::numeric_limits<std::uint64_t>::max() : kOracleStateLimit;

  Report all;
  json tables = json::array();
  try {
    if (cells) all.append(check_cell_sizes(n, o.q, limit));
    for (const auto& c : classes) {
      const auto table = empirical_WC(c, o.q, limit);
      const Report rep = validate_predictions(table, complete);
      all.append(rep);
      if (as_json(o)) {
        json t = table.to_json();
        t["checks"] = rep.to_json();
        tables.push_back(std::move(t));
      } else {
        out << table.cls.describe() << "  q=" << o.q << "  orbit " << table.orbit_size << '\n'
            << "  W_C   (" << table.wc.size() << "):";
        for (const auto& w : table.wc) out << ' ' << w.cycle_string();
        out << "\n  W_C^- (" << table.wc_minus.size() << "):";
        for (const auto& w : table.wc_minus) out << ' ' << w.cycle_string();
        out << "\n  bruhat max: " << (table.bruhat_max ? table.bruhat_max->cycle_string() : "none") << '\n';
        std::istringstream lines(rep.to_text());
        for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
      }
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (as_json(o)) {
    out << json{{"n", n}, {"q", o.q}, {"passed", all.passed()}, {"tables", tables}, {"global", all.to_json()}}.dump(2)
        << '\n';
  } else {
    out << (all.passed() ? "PASS" : "FAIL") << ": " << classes.size() << " classes, " << all.records().size()
        << " checks, " << all.failures() << " failed\n";
  }
  return all.passed() ? kExitPass : kExitViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy classes, Bruhat cells and maximal-length Weyl group elements"};
  app.name("weylcells");
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--allow-large", o.allow_large, "Lift enumeration guards");

  auto* catalog = app.add_subcommand("catalog", "List the catalog of subsets J and the elements m_J");
  catalog->add_option("--type,-t", o.type, "Cartan type such as A3, B4, E6")->required();

  auto* verify = app.add_subcommand("verify", "Run exhaustive verification suites");
  verify->add_option("--type,-t", o.type, "Cartan type")->required();
  std::string check_help = "Comma-separated suites or 'all':";
  for (const auto& name : weyl_check_names()) check_help += " " + name;
  verify->add_option("--checks,-c", o.checks, check_help);

  auto add_class = [&](CLI::App* sub) {
    sub->add_option("--class", o.class_file, "JordanClass JSON file");
    sub->add_option("--class-json", o.class_json, "JordanClass JSON text");
  };
  auto* query = app.add_subcommand("query", "Evaluate the SL(n+1) criteria for a class and a permutation");
  add_class(query);
  query->add_option("--perm,-w", o.perm, "Permutation, cycle notation or one-line")->required();

  auto* hasse = app.add_subcommand("hasse", "DOT Hasse diagram of {w <= m_C}");
  add_class(hasse);
  hasse->add_option("--out,-o", o.out_file, "Write DOT to this file");

  auto* oracle = app.add_subcommand("oracle", "Finite-field ground truth for W_C and W_C^-");
  add_class(oracle);
  oracle->add_option("--q", o.q, "Prime field size")->required();
  oracle->add_option("--n", o.dim, "Matrix dimension; runs every split class when no class is given");
  oracle->add_option("--checks", o.oracle_checks, "sound, complete, cells or all");

  for (auto* sub : {catalog, verify, query, hasse, oracle}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--allow-large", o.allow_large, "Lift enumeration guards");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*catalog) return cmd_catalog(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*query) return cmd_query(o, out);
    if (*hasse) return cmd_hasse(o, out, err);
    if (*oracle) return cmd_oracle(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"weylcells"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace weylcells::cli
