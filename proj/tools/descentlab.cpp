// Command-line front end: emits the project's tables (idempotents, Lie
// dimensions, ideal slice ranks, decomposition multiplicities), runs the
// verification sweeps, and exposes the word-combinatorics utilities.
//
// Exit codes: 0 ok, 2 invariant failure, 3 missing data, 4 bad config.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "descentlab/checks.hpp"
#include "descentlab/version.hpp"

using namespace descentlab;
using nlohmann::json;

namespace {

constexpr int kExitInvariant = 2;
constexpr int kExitMissingData = 3;
constexpr int kExitBadConfig = 4;

struct Output {
  std::string format = "pretty";  // json | csv | pretty
  std::string path;               // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
  }
};

json meta_json(const std::string& p, int n) {
  return json{{"tool", "descentlab"},
              {"version", kVersion},
              {"order", kOrderId},
              {"p", p},
              {"n", n}};
}
json meta_json(int p, int n) { return meta_json(std::to_string(p), n); }

std::string meta_line(const std::string& p, int n) {
  std::ostringstream os;
  os << "# descentlab " << kVersion << " order=" << kOrderId << " p=" << p << " n=" << n << "\n";
  return os.str();
}
std::string meta_line(int p, int n) { return meta_line(std::to_string(p), n); }

json parts_json(const Parts& parts) { return json(parts); }

std::string parts_str(const Parts& parts) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(parts[i]);
  }
  return s;
}

Composition parse_composition(const std::string& s) {
  Parts p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(std::stoi(item));
  return Composition(p);
}

std::string brauer_dir() {
  const char* env = std::getenv("DESCENTLAB_DATA");
  return env ? env : "data/brauer";
}

int guard_large(int n, bool allow_large) {
  if (n > 8 && !allow_large) {
    std::cerr << "degree " << n
              << " needs a group-algebra rank; pass --allow-large to override the guard\n";
    return kExitBadConfig;
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_idempotents(int n, int p, const Output& out) {
  IdempotentSet set = modular_idempotents(n, static_cast<uint32_t>(p));
  if (auto bad = verify_idempotent_set(set)) {
    std::cerr << "invariant failure: " << *bad << "\n";
    return kExitInvariant;
  }
  std::vector<Partition> display(set.order.rbegin(), set.order.rend());

  if (out.format == "json") {
    json rows = json::array();
    for (auto& la : display) {
      json terms = json::array();
      for (auto& [q, c] : set.of(la).coeff)
        terms.push_back({{"q", parts_json(q.parts)}, {"c", c.str()}});
      rows.push_back({{"lambda", parts_json(la.parts)}, {"terms", terms}});
    }
    out.write(json{{"meta", meta_json(p, n)}, {"idempotents", rows}}.dump(2) + "\n");
  } else if (out.format == "csv") {
    std::ostringstream os;
    os << meta_line(p, n) << "lambda,q,coefficient\n";
    for (auto& la : display)
      for (auto& [q, c] : set.of(la).coeff)
        os << parts_str(la.parts) << "," << parts_str(q.parts) << "," << c.str() << "\n";
    out.write(os.str());
  } else {
    std::ostringstream os;
    os << meta_line(p, n);
    for (auto& la : display) {
      os << "e_" << la.str() << " =";
      bool first = true;
      for (auto& [q, c] : set.of(la).coeff) {
        os << (first ? " " : " + ");
        if (!(c == GF(static_cast<uint32_t>(p)).one())) os << c.str() << "*";
        os << "Xi^" << q.str();
        first = false;
      }
      os << "\n";
    }
    out.write(os.str());
  }
  return 0;
}

int cmd_lie_dims(int n, std::vector<int> ps, int jobs, const Output& out) {
  std::string plist_label;
  for (size_t k = 0; k < ps.size(); ++k)
    plist_label += (k ? "," : "") + std::to_string(ps[k]);
  auto parts = enumerate_partitions(n);
  std::vector<std::vector<long long>> dims(parts.size(),
                                           std::vector<long long>(ps.size(), 0));
  parallel_for(parts.size(), jobs, [&](size_t i) {
    for (size_t k = 0; k < ps.size(); ++k)
      dims[i][k] = lie_dimension(parts[i].as_composition(), ps[k]);
  });

  if (out.format == "json") {
    json rows = json::array();
    for (size_t i = 0; i < parts.size(); ++i) {
      json row = {{"q", parts_json(parts[i].parts)}};
      json per_p = json::object();
      for (size_t k = 0; k < ps.size(); ++k)
        per_p[std::to_string(ps[k])] = std::to_string(dims[i][k]);
      row["dim"] = per_p;
      rows.push_back(row);
    }
    out.write(json{{"meta", meta_json(plist_label, n)}, {"lie_dimensions", rows}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << meta_line(plist_label, n);
    if (out.format == "csv") {
      os << "q";
      for (int p : ps) os << ",p" << p;
      os << "\n";
      for (size_t i = 0; i < parts.size(); ++i) {
        os << parts_str(parts[i].parts);
        for (size_t k = 0; k < ps.size(); ++k) os << "," << dims[i][k];
        os << "\n";
      }
    } else {
      os << "dim Lie(q)\n";
      for (size_t i = 0; i < parts.size(); ++i) {
        os << "  " << parts[i].str() << ":";
        for (size_t k = 0; k < ps.size(); ++k)
          os << "  p=" << ps[k] << ": " << dims[i][k];
        os << "\n";
      }
    }
    out.write(os.str());
  }
  return 0;
}

int cmd_xi_table(int n, int p, int jobs, const Output& out) {
  IdempotentSet idem = modular_idempotents(n, static_cast<uint32_t>(p));
  GF field(static_cast<uint32_t>(p));
  auto parts = enumerate_partitions(n);
  std::vector<Partition> mus(idem.order.rbegin(), idem.order.rend());

  struct Row {
    long long dim_x;
    std::vector<ConjectureReport> slices;
  };
  std::vector<Row> rows(parts.size());
  parallel_for(parts.size(), jobs, [&](size_t i) {
    Composition la = parts[i].as_composition();
    rows[i].dim_x = right_ideal_rank(field, xi_expand(field, la));
    for (auto& mu : mus) rows[i].slices.push_back(conjecture_checker(la, mu, idem));
  });
  std::string failure;
  for (size_t i = 0; i < parts.size(); ++i)
    for (auto& rep : rows[i].slices)
      if (!rep.verdict && failure.empty())
        failure = "census mismatch at lambda=" + parts[i].str() + " mu=" + rep.mu.str() +
                  ": rank " + std::to_string(rep.rank) + " vs predicted " +
                  std::to_string(rep.predicted);

  if (out.format == "json") {
    json jrows = json::array();
    for (size_t i = 0; i < parts.size(); ++i) {
      json slices = json::array();
      for (auto& rep : rows[i].slices)
        slices.push_back({{"mu", parts_json(rep.mu.parts)},
                          {"rank", rep.rank},
                          {"predicted", rep.predicted},
                          {"verdict", rep.verdict}});
      jrows.push_back({{"lambda", parts_json(parts[i].parts)},
                       {"dim_x", rows[i].dim_x},
                       {"slices", slices}});
    }
    out.write(json{{"meta", meta_json(p, n)}, {"xi_table", jrows}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << meta_line(p, n);
    if (out.format == "csv") {
      os << "lambda,dim_x";
      for (auto& mu : mus) os << ",e_" << parts_str(mu.parts);
      os << ",verdict\n";
      for (size_t i = 0; i < parts.size(); ++i) {
        os << parts_str(parts[i].parts) << "," << rows[i].dim_x;
        bool ok = true;
        for (auto& rep : rows[i].slices) {
          os << "," << rep.rank;
          ok = ok && rep.verdict;
        }
        os << "," << (ok ? "ok" : "MISMATCH") << "\n";
      }
    } else {
      os << "dim X^lambda and dim Xi^lambda e_mu F S_n\n";
      for (size_t i = 0; i < parts.size(); ++i) {
        os << "  " << parts[i].str() << ": dim " << rows[i].dim_x;
        for (auto& rep : rows[i].slices)
          os << "  e_" << rep.mu.str() << ": " << rep.rank
             << (rep.verdict ? "" : " (census MISMATCH)");
        os << "\n";
      }
    }
    out.write(os.str());
  }
  if (!failure.empty()) {
    std::cerr << "invariant failure: " << failure << "\n";
    return kExitInvariant;
  }
  return 0;
}

int cmd_multiplicities(const Composition& q, int p, const Output& out) {
  std::string path = brauer_dir() + "/" + brauer_table_filename(p, q.n());
  BrauerTable table;
  try {
    table = load_brauer_table(path);
  } catch (const std::exception& e) {
    std::cerr << "missing or invalid Brauer data: " << e.what() << "\n";
    return kExitMissingData;
  }
  auto mult = tilting_multiplicities(q, p, table);
  auto proj = projective_dimensions(table);

  std::string convention;
  if (q.length() == 1) {
    DEDecomposition de = de_multiplicities(q.n(), p, table);
    convention = de.convention;
    if (de.n_nu != mult) {
      std::cerr << "invariant failure: single-row multiplicities disagree with the "
                   "Moebius form\n";
      return kExitInvariant;
    }
  }

  if (out.format == "json") {
    json rows = json::array();
    for (auto& [ga, m] : mult)
      rows.push_back({{"gamma", parts_json(ga.parts)},
                      {"multiplicity", m},
                      {"dim_projective", proj.at(ga)}});
    json j = {{"meta", meta_json(p, q.n())}, {"q", parts_json(q.parts)}, {"multiplicities", rows}};
    if (!convention.empty()) j["meta"]["sigma_convention"] = convention;
    out.write(j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << meta_line(p, q.n());
    if (!convention.empty()) os << "# " << convention << "\n";
    if (out.format == "csv") {
      os << "gamma,multiplicity,dim_projective\n";
      for (auto& [ga, m] : mult)
        os << parts_str(ga.parts) << "," << m << "," << proj.at(ga) << "\n";
    } else {
      os << "Lie" << q.str() << " = ";
      bool first = true;
      for (auto& [ga, m] : mult) {
        if (m == 0) continue;
        if (!first) os << " + ";
        if (m > 1) os << m << "*";
        os << "P" << ga.str();
        first = false;
      }
      if (first) os << "0";
      os << "\n";
      for (auto& [ga, m] : mult)
        os << "  m_" << ga.str() << " = " << m << "  (dim P = " << proj.at(ga) << ")\n";
    }
    out.write(os.str());
  }
  return 0;
}

int cmd_check(const std::string& suite, int jobs, const Output& out) {
  std::vector<CheckResult> results;
  auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
  bool known = suite == "all";
  if (want("conjecture")) {
    known = true;
    std::vector<ConjectureReport> evidence;
    results.push_back(check_conjecture_sweep(6, jobs, &evidence));
    if (out.format == "csv") {
      std::ostringstream os;
      write_conjecture_csv(os, evidence);
      out.write(os.str());
      return results.back().pass ? 0 : kExitInvariant;
    }
  }
  if (want("structure")) known = true, results.push_back(check_structure_constants(5, jobs));
  if (want("idempotents")) {
    known = true;
    results.push_back(check_idempotent_table(2, "data/goldens/idempotents_p2.json"));
    results.push_back(check_idempotent_table(3, "data/goldens/idempotents_p3.json"));
    results.push_back(check_idempotent_invariants(6, jobs));
  }
  if (want("cascade")) known = true, results.push_back(check_worked_cascade());
  if (want("lie-dims")) known = true, results.push_back(check_lie_dimension_table(jobs));
  if (want("xi-table")) known = true, results.push_back(check_xi_slice_table(jobs));
  if (want("plethysm")) known = true, results.push_back(check_plethysm_example(brauer_dir()));
  if (want("ranks")) known = true, results.push_back(check_basis_ranks(6, jobs));
  if (want("fibers")) known = true, results.push_back(check_fibers_and_rewriting(6, 100, jobs));
  if (want("decomposition")) known = true, results.push_back(check_ordinary_decomposition(5, jobs));
  if (want("formulas")) known = true, results.push_back(check_dimension_formulas(6));
  if (want("identities")) known = true, results.push_back(check_module_identities(6, jobs));
  if (!known) {
    std::cerr << "unknown suite '" << suite
              << "'; use conjecture|structure|idempotents|cascade|lie-dims|xi-table|plethysm|ranks|"
                 "fibers|decomposition|formulas|identities|all\n";
    return kExitBadConfig;
  }

  std::ostringstream os;
  bool all_pass = true;
  for (auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) os << " -- " << r.detail;
    os << "\n";
    all_pass = all_pass && r.pass;
  }
  out.write(os.str());
  return all_pass ? 0 : kExitInvariant;
}

int cmd_express(const Composition& q, const std::string& word, int p, const Output& out) {
  Permutation sigma = Permutation::parse(word);
  if (sigma.degree() != q.n()) {
    std::cerr << "word degree does not match the composition\n";
    return kExitBadConfig;
  }
  auto run = [&](auto field) -> int {
    XiBasis<decltype(field)> basis(field, q);
    auto coords = express_in_basis(basis, sigma);
    if (!(coords == express_by_solve(basis, sigma))) {
      std::cerr << "invariant failure: rewriting disagrees with the linear solve\n";
      return kExitInvariant;
    }
    if (out.format == "json") {
      json rows = json::array();
      for (auto& [w, c] : coords) rows.push_back({{"w", w.str()}, {"c", c.str()}});
      out.write(json{{"meta", meta_json(p, q.n())},
                     {"q", parts_json(q.parts)},
                     {"sigma", sigma.str()},
                     {"coordinates", rows}}
                    .dump(2) +
                "\n");
    } else if (out.format == "csv") {
      std::ostringstream os;
      os << meta_line(p, q.n()) << "w,coefficient\n";
      for (auto& [w, c] : coords) os << w.str() << "," << c.str() << "\n";
      out.write(os.str());
    } else {
      std::ostringstream os;
      os << meta_line(p, q.n()) << "Xi^" << q.str() << " * " << sigma.str() << " =";
      bool first = true;
      for (auto& [w, c] : coords) {
        os << (first ? " " : " + ") << c.str() << "*Xi^" << q.str() << "*" << w.str();
        first = false;
      }
      if (first) os << " 0";
      os << "\n";
      out.write(os.str());
    }
    return 0;
  };
  return p == 0 ? run(QQ{}) : run(GF(static_cast<uint32_t>(p)));
}

int cmd_pivots(const std::string& word, const std::string& qspec, const Output& out) {
  Permutation w = Permutation::parse(word);
  PivotDecomposition d = pivot_decompose(w);
  json j = {{"meta", meta_json("-", w.degree())},
            {"word", w.str()},
            {"pivot_positions", d.pivot_positions},
            {"pivot_type", parts_json(d.cycle_type.parts)}};
  json words = json::array();
  for (auto& pw : d.pivot_words) {
    std::string s;
    for (uint8_t x : pw) s += static_cast<char>('0' + x);
    words.push_back(s);
  }
  j["pivot_words"] = words;
  std::ostringstream pretty;
  pretty << meta_line("-", w.degree());
  pretty << "word " << w.str() << ": pivot words";
  for (auto& pw : words) pretty << " " << pw.get<std::string>();
  pretty << ", type " << d.cycle_type.str() << "\n";

  if (!qspec.empty()) {
    Composition q = parse_composition(qspec);
    if (q.n() != w.degree()) {
      std::cerr << "composition size does not match the word\n";
      return kExitBadConfig;
    }
    Permutation u = upsilon(q, w);
    j["q"] = parts_json(q.parts);
    j["upsilon"] = u.str();
    json fib = json::array();
    for (auto& v : fiber(q, u)) fib.push_back(v.str());
    j["fiber_of_image"] = fib;
    j["in_basis"] = is_weak_refinement(d.cycle_type, q);
    pretty << "upsilon_" << q.str() << " = " << u.str() << ", fiber size " << fib.size()
           << (j["in_basis"].get<bool>() ? " (word lies in the basis set)" : "") << "\n";
  }

  if (out.format == "json") {
    out.write(j.dump(2) + "\n");
  } else {
    out.write(pretty.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"descentlab: exact computations in the descent algebras of symmetric groups"};
  app.require_subcommand(1);

  int n = 0, p = 0, jobs = 1;
  std::string qspec, word, format = "pretty", outpath, suite = "all", plist = "0,2,3";
  bool allow_large = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--out", outpath);
    cmd->add_flag("--allow-large", allow_large);
    cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 64));
  };

  CLI::App* idem = app.add_subcommand("idempotents", "modular idempotent table");
  idem->add_option("--n", n)->required()->check(CLI::Range(1, 9));
  idem->add_option("--p", p)->required()->check(CLI::IsMember({2, 3, 5, 7}));
  add_common(idem);

  CLI::App* dims = app.add_subcommand("lie-dims", "dimensions of the higher Lie modules");
  dims->add_option("--n", n)->required()->check(CLI::Range(1, 9));
  dims->add_option("--p", plist, "comma-separated characteristics")->capture_default_str();
  add_common(dims);

  CLI::App* xitab = app.add_subcommand("xi-table", "idempotent slice ranks of the descent ideals");
  xitab->add_option("--n", n)->required()->check(CLI::Range(1, 9));
  xitab->add_option("--p", p)->required()->check(CLI::IsMember({2, 3, 5, 7}));
  add_common(xitab);

  CLI::App* mult = app.add_subcommand("multiplicities", "projective decomposition of Lie(q)");
  mult->add_option("--q", qspec, "composition, e.g. 2,2,1")->required();
  mult->add_option("--p", p)->required()->check(CLI::IsMember({2, 3, 5, 7}));
  add_common(mult);

  CLI::App* check = app.add_subcommand("check", "verification sweeps");
  check->add_option("--suite", suite)->capture_default_str();
  add_common(check);

  CLI::App* express = app.add_subcommand("express", "coordinates in the free basis");
  express->add_option("--q", qspec, "composition, e.g. 2,1")->required();
  express->add_option("--w", word, "one-line word, e.g. 231")->required();
  express->add_option("--p", p)->check(CLI::IsMember({0, 2, 3, 5, 7}));
  add_common(express);

  CLI::App* piv = app.add_subcommand("pivots", "pivot decomposition of a word");
  piv->add_option("--w", word, "one-line word")->required();
  piv->add_option("--q", qspec, "optional composition for the segment map");
  add_common(piv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadConfig;
  }

  Output out{format, outpath};
  try {
    if (idem->parsed()) return cmd_idempotents(n, p, out);
    if (dims->parsed()) {
      std::vector<int> ps;
      std::stringstream ss(plist);
      std::string item;
      while (std::getline(ss, item, ',')) {
        int v = std::stoi(item);
        if (v != 0 && v != 2 && v != 3 && v != 5 && v != 7) {
          std::cerr << "unsupported characteristic " << v << "\n";
          return kExitBadConfig;
        }
        ps.push_back(v);
      }
      if (int rc = guard_large(n, allow_large)) return rc;
      return cmd_lie_dims(n, ps, jobs, out);
    }
    if (xitab->parsed()) {
      if (int rc = guard_large(n, allow_large)) return rc;
      return cmd_xi_table(n, p, jobs, out);
    }
    if (mult->parsed()) {
      Composition q = parse_composition(qspec);
      if (q.n() > 9) {
        std::cerr << "degree out of range\n";
        return kExitBadConfig;
      }
      if (int rc = guard_large(q.n(), allow_large)) return rc;
      if (!is_coprime(q, p) || !is_p_regular(sort_to_partition(q), p)) {
        std::cerr << "the decomposition formula needs (q,p)=1 with a p-regular "
                     "rearrangement\n";
        return kExitBadConfig;
      }
      return cmd_multiplicities(q, p, out);
    }
    if (check->parsed()) return cmd_check(suite, jobs, out);
    if (express->parsed()) {
      Composition q = parse_composition(qspec);
      if (int rc = guard_large(q.n(), allow_large)) return rc;
      return cmd_express(q, word, p, out);
    }
    if (piv->parsed()) return cmd_pivots(word, qspec, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad config: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "bad config: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitBadConfig;
}
