#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "branchlaw/branching.hpp"
#include "branchlaw/character_table.hpp"
#include "branchlaw/error.hpp"
#include "branchlaw/group.hpp"
#include "branchlaw/oracle.hpp"
#include "branchlaw/parallel.hpp"
#include "branchlaw/tensor.hpp"
#include "branchlaw/text.hpp"

namespace branchlaw::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kRuleDimensionBound = 6;

struct Pipeline {
  GroupSource source;
  GroupData group;
  CharacterTable table;
  std::string table_source;
  TensorMatrices tensors;
};

struct SeriesRun {
  BranchingSeries series;
  RatFun p_t;  // P(t,0,0)_0
  RatFun p_w;  // P(0,0,t)_0, renamed to t
  RatFun molien;
  std::optional<MultiplicityTable> multiplicities;
};

GroupSource resolve_group(const std::string& spec) {
  const auto names = builtin_group_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return builtin_group(spec);
  if (!std::filesystem::is_regular_file(spec)) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw IoError("'" + spec + "' is neither a built-in group (" + list + ") nor a readable file");
  }
  return read_group_file(spec);
}

GroupData load_group(const RunConfig& c, GroupSource& source) {
  source = resolve_group(c.group);
  return build_group(source);
}

Pipeline load_pipeline(const RunConfig& c) {
  Pipeline p;
  p.group = load_group(c, p.source);
  if (!c.table.empty()) {
    p.table = load_table(read_text_file(c.table), p.group);
    p.table_source = c.table;
  } else {
    p.table = dixon_character_table(p.group);
    p.table_source = "dixon";
  }
  p.tensors = build_tensor_matrices(p.table, p.group);
  return p;
}

std::vector<std::string> strings(const std::vector<Cyclotomic>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.descended().to_string());
  return out;
}

std::string triple(const Monomial& m) {
  return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + ")";
}

// ------------------------------------------------------------ JSON pieces

Json group_json(const GroupSource& source, const GroupData& g) {
  return Json{{"name", source.name},
              {"order", g.order()},
              {"classes", g.num_classes()},
              {"exponent", g.exponent()},
              {"class_sizes", g.class_sizes()},
              {"element_orders", g.class_element_orders()},
              {"natural_character", strings(natural_character(g))}};
}

Json table_json(const Pipeline& p) {
  Json rows = Json::array();
  for (const auto& row : p.table.values) rows.push_back(strings(row));
  return Json{{"source", p.table_source}, {"degrees", p.table.degrees}, {"rows", rows}};
}

Json tensors_json(const TensorMatrices& m) {
  return Json{{"A1", m.a1},
              {"A2", m.a2},
              {"A3", m.a3},
              {"eigenvalues", Json{{"A1", strings(m.l1)}, {"A2", strings(m.l2)}, {"A3", strings(m.l3)}}}};
}

Json factors_json(const FactoredDen& d) {
  Json out = Json::array();
  for (const auto& f : d.factors()) {
    out.push_back(Json{{"var", std::string(1, var_name(f.poly.var))},
                       {"coefficients", strings(f.poly.coeffs)},
                       {"multiplicity", f.mult}});
  }
  return out;
}

Json ratfun_json(const RatFun& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.num().terms()) {
    terms.push_back(Json{{"exponents", {m[0], m[1], m[2]}}, {"coefficient", c.descended().to_string()}});
  }
  return Json{{"text", f.to_string()}, {"numerator", terms}, {"denominator", factors_json(f.den())}};
}

Json checks_json(const CheckList& checks, int degree) {
  Json list = Json::array();
  for (const auto& c : checks.checks) list.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"check_degree", degree}, {"checks", list}, {"passed", checks.passed()}};
}

Json multiplicities_json(const MultiplicityTable& t) {
  Json values = Json::array();
  for (const Monomial& m : triples_up_to(t.max_degree)) {
    values.push_back(Json{{"triple", {m[0], m[1], m[2]}}, {"m", t.values.at(m)}});
  }
  return Json{{"max_degree", t.max_degree}, {"method", t.method}, {"values", values}};
}

// ------------------------------------------------------------ text pieces

void text_group(std::ostream& os, const Json& g) {
  os << "group " << g["name"].get<std::string>() << ": order " << g["order"] << ", " << g["classes"]
     << " classes, exponent " << g["exponent"] << "\n";
  auto line = [&](const char* label, const Json& arr) {
    os << "  " << label << ":";
    for (const auto& x : arr) os << " " << (x.is_string() ? x.get<std::string>() : x.dump());
    os << "\n";
  };
  line("class sizes", g["class_sizes"]);
  line("element orders", g["element_orders"]);
  line("natural character", g["natural_character"]);
}

void text_matrix(std::ostream& os, const std::string& label, const IntMatrix& a) {
  os << label << ":\n";
  std::istringstream lines(format_matrix(a));
  for (std::string l; std::getline(lines, l);) os << "  " << l << "\n";
}

void text_checks(std::ostream& os, const CheckList& checks, int degree) {
  os << "verification (degree " << degree << "):\n";
  for (const auto& c : checks.checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
  os << "result: " << (checks.passed() ? "PASS" : "FAIL") << "\n";
}

// ------------------------------------------------------------ verification

// Runs `body`, turning a library error into a failed check named `name`.
template <typename Body>
void guarded(CheckList& out, const std::string& name, Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    out.add(name, false, e.what());
  }
}

SeriesRun run_series(const Pipeline& p, const std::string& name) {
  SeriesRun r;
  r.series = compute_series(p.table, p.tensors, name);
  const Cyclotomic zero(0);
  r.p_t = specialize(r.series.coords.at(0), {{Var::kU, zero}, {Var::kW, zero}});
  r.p_w = specialize(r.series.coords.at(0), {{Var::kT, zero}, {Var::kU, zero}}).renamed(Var::kW, Var::kT);
  r.molien = molien_series(p.group);
  return r;
}

CheckList verification_suite(const Pipeline& p, const RunConfig& c, SeriesRun& r) {
  CheckList out;
  const int n = c.check_degree;
  out.append(check_tensor_structure(p.tensors, p.table));
  out.append(check_series_invariants(r.series));
  out.add("P(t,0,0)_0 = P(0,0,t)_0", equal(r.p_t, r.p_w));
  out.add("Molien series = P(t,0,0)_0", equal(r.molien, r.p_t));

  guarded(out, "series coefficients are non-negative integers", [&] {
    r.multiplicities = extract_multiplicities(r.series, n);
    out.add("series coefficients are non-negative integers", true,
            std::to_string(r.multiplicities->values.size()) + " triples");
    out.checks.push_back(check_conservation(*r.multiplicities, p.table.degrees));
  });

  std::optional<MultiplicityTable> reference;
  if (c.oracles) {
    guarded(out, "recurrence oracle", [&] {
      const auto cg = cg_table(p.tensors, n);
      const auto sc = schur_table(p.table, p.group, n);
      out.checks.push_back(check_conservation(cg, p.table.degrees));
      out.checks.push_back(check_conservation(sc, p.table.degrees));
      const auto cs = table_mismatches(cg, sc, n);
      out.add("recurrence oracle = Schur oracle", cs.empty(), cs.empty() ? "" : "first mismatch at " + triple(cs[0]));
      if (r.multiplicities) {
        const auto ss = table_mismatches(*r.multiplicities, sc, n);
        out.add("series = Schur oracle", ss.empty(), ss.empty() ? "" : "first mismatch at " + triple(ss[0]));
      }
      reference = sc;
    });
  }
  if (c.key_relation) {
    const std::optional<MultiplicityTable>& table = reference ? reference : r.multiplicities;
    if (table) {
      const auto report = key_relation_check(p.tensors, *table, n);
      std::string detail = std::to_string(report.entries.size()) + " monomials against " + table->method;
      for (const auto& e : report.entries) {
        if (!e.passed) {
          detail = std::to_string(report.failures()) + " failures, first at " + triple(e.monomial) + " coordinate " +
                   std::to_string(e.coordinate);
          break;
        }
      }
      out.add("key relation", report.passed(), detail);
    } else {
      out.add("key relation", false, "no multiplicity table available");
    }
  }
  return out;
}

// ------------------------------------------------------------ commands

struct Document {
  Json json;
  std::string text;
  bool passed = true;
};

Document cmd_info(const RunConfig& c) {
  GroupSource source;
  const GroupData g = load_group(c, source);
  Document d;
  d.json = Json{{"schema", "branchlaw.info/1"}, {"version", kPipelineVersion}, {"group", group_json(source, g)}};
  std::ostringstream os;
  text_group(os, d.json["group"]);
  d.text = os.str();
  return d;
}

Document cmd_series(const RunConfig& c) {
  const Pipeline p = load_pipeline(c);
  SeriesRun r = run_series(p, p.source.name);
  const CheckList checks = verification_suite(p, c, r);

  Document d;
  Json coords = Json::array();
  for (std::size_t i = 0; i < r.series.coords.size(); ++i) {
    Json entry{{"irrep", r.series.irrep_labels[i]}, {"degree", r.series.degrees[i]}};
    entry.update(ratfun_json(r.series.coords[i]));
    coords.push_back(entry);
  }
  Json specs{{"P(t,0,0)_0", ratfun_json(r.p_t)}, {"P(0,0,t)_0", ratfun_json(r.p_w)}, {"molien", ratfun_json(r.molien)}};
  Json user = Json::array();
  if (!c.specialize.empty()) {
    const auto assignments = parse_assignments(c.specialize);
    for (std::size_t i = 0; i < r.series.coords.size(); ++i) {
      Json entry{{"irrep", r.series.irrep_labels[i]}};
      entry.update(ratfun_json(specialize(r.series.coords[i], assignments)));
      user.push_back(entry);
    }
  }
  d.json = Json{{"schema", "branchlaw.series/1"},
                {"version", r.series.version},
                {"group", group_json(p.source, p.group)},
                {"character_table", table_json(p)},
                {"tensor_matrices", tensors_json(p.tensors)},
                {"series",
                 Json{{"common_denominator", factors_json(r.series.common_denominator())}, {"coordinates", coords}}},
                {"specializations", specs}};
  if (!c.specialize.empty()) d.json["user_specialization"] = Json{{"assignments", c.specialize}, {"coordinates", user}};
  if (r.multiplicities) d.json["multiplicities"] = multiplicities_json(*r.multiplicities);
  d.json["verification"] = checks_json(checks, c.check_degree);
  d.passed = checks.passed();

  std::ostringstream os;
  text_group(os, d.json["group"]);
  os << "character table (" << p.table_source << "):\n";
  for (std::size_t i = 0; i < p.table.size(); ++i) {
    os << "  chi_" << i << ":";
    for (const auto& s : strings(p.table.values[i])) os << " " << s;
    os << "\n";
  }
  text_matrix(os, "A1", p.tensors.a1);
  text_matrix(os, "A2", p.tensors.a2);
  text_matrix(os, "A3", p.tensors.a3);
  os << "common denominator: " << r.series.common_denominator().to_string() << "\n";
  for (std::size_t i = 0; i < r.series.coords.size(); ++i) {
    os << "P_" << i << " = " << r.series.coords[i].to_string() << "\n";
  }
  os << "P(t,0,0)_0 = " << r.p_t.to_string() << "\n";
  os << "P(0,0,t)_0 = " << r.p_w.to_string() << "\n";
  if (!c.specialize.empty()) {
    os << "specialization " << c.specialize << ":\n";
    for (const auto& e : user) os << "  " << e["irrep"].get<std::string>() << " = " << e["text"].get<std::string>() << "\n";
  }
  if (r.multiplicities) {
    os << "multiplicities up to degree " << c.check_degree << ":\n";
    for (const Monomial& m : triples_up_to(c.check_degree)) {
      os << "  " << triple(m) << ":";
      for (long v : r.multiplicities->values.at(m)) os << " " << v;
      os << "\n";
    }
  }
  text_checks(os, checks, c.check_degree);
  d.text = os.str();
  return d;
}

Document cmd_molien(const RunConfig& c) {
  const Pipeline p = load_pipeline(c);
  const RatFun molien = molien_series(p.group);
  const BranchingSeries s = compute_series(p.table, p.tensors, p.source.name);
  const Cyclotomic zero(0);
  const RatFun p_t = specialize(s.coords.at(0), {{Var::kU, zero}, {Var::kW, zero}});
  const bool same = equal(molien, p_t);
  const auto coeffs = molien.series(c.check_degree);
  std::vector<std::string> head;
  for (int k = 0; k <= c.check_degree; ++k) head.push_back(coeffs.coeff(Monomial{k, 0, 0}).to_string());

  Document d;
  d.passed = same;
  d.json = Json{{"schema", "branchlaw.molien/1"},
                {"version", kPipelineVersion},
                {"group", group_json(p.source, p.group)},
                {"molien", ratfun_json(molien)},
                {"coefficients", head},
                {"equals_specialization", same}};
  std::ostringstream os;
  os << "Molien series of " << p.source.name << ": " << molien.to_string() << "\n";
  os << "coefficients:";
  for (const auto& x : head) os << " " << x;
  os << "\n";
  os << "equal to P(t,0,0)_0: " << (same ? "yes" : "no") << "\n";
  d.text = os.str();
  return d;
}

Document cmd_verify(const RunConfig& c) {
  CheckList checks;
  Document d;
  std::optional<Pipeline> p;
  try {
    p = load_pipeline(c);
  } catch (const TableError& e) {
    checks.add("character table valid", false, e.what());
  }
  if (p) {
    guarded(checks, "character table valid", [&] {
      validate_table(p->table);
      long sum = 0;
      for (long deg : p->table.degrees) sum += deg * deg;
      checks.add("character table valid", true,
                 "orthogonality exact, sum of squared degrees " + std::to_string(sum) + " = |G|");
    });
    checks.append(check_tensor_rule_dimensions(kRuleDimensionBound));
    guarded(checks, "series pipeline", [&] {
      SeriesRun r = run_series(*p, p->source.name);
      checks.append(verification_suite(*p, c, r));
    });
  }
  d.passed = checks.passed();
  Json head{{"schema", "branchlaw.verify/1"}, {"version", kPipelineVersion}};
  if (p) head["group"] = group_json(p->source, p->group);
  head["verification"] = checks_json(checks, c.check_degree);
  d.json = head;
  std::ostringstream os;
  if (p) text_group(os, d.json["group"]);
  text_checks(os, checks, c.check_degree);
  d.text = os.str();
  return d;
}

void add_common_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--group", c.group, "built-in group (trivial, cyclic4, typeII) or generator file")->required();
  sub->add_option("--table", c.table, "character table file to use instead of computing one");
  sub->add_option("--check-degree", c.check_degree, "maximal total degree p+q+r to verify")
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("--no-oracles{false}", c.oracles, "skip the recurrence and Schur oracles");
  sub->add_flag("--no-key-relation{false}", c.key_relation, "skip the key-relation check");
  sub->add_option("--specialize", c.specialize, "substitutions such as u=0,w=0");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", c.out, "write the document to this file");
  sub->add_option("--threads", c.threads, "OpenMP worker threads (0: runtime default)")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    set_num_threads(c.threads);
    Document d;
    if (c.command == "info") d = cmd_info(c);
    else if (c.command == "series") d = cmd_series(c);
    else if (c.command == "molien") d = cmd_molien(c);
    else if (c.command == "verify") d = cmd_verify(c);
    else {
      err << "unknown command " << c.command << "\n";
      return kExitUsage;
    }
    const std::string content = c.format == "json" ? d.json.dump(2) + "\n" : d.text;
    if (c.out.empty()) out << content;
    else write_text_file(c.out, content);
    return d.passed ? kExitOk : kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branching multiplicity series for finite subgroups of SL4(C)", "branchlaw"};
  app.require_subcommand(1, 1);
  RunConfig c;
  const std::pair<const char*, const char*> commands[] = {
      {"info", "group order, classes and natural character"},
      {"series", "compute P(t,u,w) with all enabled verifications"},
      {"molien", "Molien series and its agreement with P(t,0,0)_0"},
      {"verify", "run every verification and report"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common_options(sub, c);
    sub->callback([&c, name = std::string(name)] { c.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return run(c, out, err);
}

}  // namespace branchlaw::cli
