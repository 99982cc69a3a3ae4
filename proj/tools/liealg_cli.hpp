#pragma once

// Command-line front end. run() is separate from main() so the tests can
// drive it with captured streams.

#include "liealg/liealg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace liealg::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::size_t max_order = kDefaultWeylCap;
  bool enumerate_weyl = false;
  bool unicode = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Json rational_json(const Rational& q) { return q.get_str(); }

inline Json vector_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

inline Json int_matrix_json(const CartanMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m.entries) a.push_back(row);
  return a;
}

inline std::string matrix_text(const CartanMatrix& m, const std::string& indent = "  ") {
  std::size_t w = 1;
  for (const auto& row : m.entries)
    for (int x : row) w = std::max(w, std::to_string(x).size());
  std::string out;
  for (const auto& row : m.entries) {
    out += indent + "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string s = std::to_string(row[j]);
      out += (j ? " " : "") + std::string(w - s.size(), ' ') + s;
    }
    out += "]\n";
  }
  return out;
}

inline std::string indent_block(const std::string& text, const std::string& indent = "  ") {
  std::string out = indent;
  for (char c : text) {
    out += c;
    if (c == '\n') out += indent;
  }
  return out + "\n";
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string weights_text(const std::vector<Weight>& ws) {
  std::vector<std::string> parts;
  for (const auto& w : ws) parts.push_back(weight_str(w));
  return join(parts);
}

inline Json weights_json(const std::vector<Weight>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(vector_json(w));
  return a;
}

inline AlgebraSpec parse_spec(const std::string& family, int n) {
  const auto f = parse_family(family);
  if (!f) throw UsageError("unknown family '" + family + "' (expected sl, sp, so-even or so-odd)");
  try {
    return AlgebraSpec(*f, n);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

inline void emit(std::ostream& out, const Options& opt, const Json& doc, const std::string& text) {
  if (opt.format == "json") out << doc.dump(2) << "\n";
  else out << text;
}

// ---------------------------------------------------------------------------
// info

struct WeylOrder {
  std::optional<std::uint64_t> value;
  std::string method;  // "closed form", "enumerated", or why it is missing
};

inline WeylOrder weyl_order(const RootDatum& rd, const Options& opt) {
  if (opt.enumerate_weyl) {
    try {
      return {generate(simple_reflections(rd), opt.max_order).size(), "enumerated"};
    } catch (const WeylOverflow&) {
      return {std::nullopt, "exceeds max order " + std::to_string(opt.max_order)};
    }
  }
  const auto w = weyl_order_closed_form(rd.spec());
  if (w > opt.max_order) return {std::nullopt, "exceeds max order " + std::to_string(opt.max_order)};
  return {w, "closed form"};
}

inline int cmd_info(const AlgebraSpec& spec, const Options& opt, std::ostream& out) {
  const RootDatum rd = cartan_decompose(spec);
  const auto& r = rd.realization();
  const auto inner = killing_inner_product(rd);
  const CartanMatrix a = cartan_matrix(rd.fundamental_roots(), inner);
  const DynkinDiagram d = build_diagram(a, root_lengths(rd.fundamental_roots(), inner));
  const Classification cls = classify(d);
  const KillingConstants kc = killing_constants(rd);
  const WeylOrder w = weyl_order(rd, opt);
  const std::string diagram = render(d, opt.unicode);

  std::vector<std::string> coroots;
  Json coroots_json = Json::array();
  for (const auto& h : rd.fundamental_coroots()) {
    coroots.push_back(edge_label(h));
    coroots_json.push_back(vector_json(h.diagonal_entries()));
  }

  Json doc;
  doc["schema"] = "liealg/1";
  doc["command"] = "info";
  doc["algebra"] = spec.name();
  doc["family"] = family_name(spec.family);
  doc["n"] = spec.n;
  doc["rank"] = spec.lie_rank();
  doc["matrix_size"] = spec.realization_dim();
  doc["dimension"] = r.dimension();
  doc["root_count"] = rd.roots().size();
  doc["positive_roots"] = weights_json(rd.positive_roots());
  doc["fundamental_roots"] = weights_json(rd.fundamental_roots());
  doc["fundamental_coroots"] = coroots_json;
  doc["fundamental_weights"] = weights_json(rd.fundamental_weights());
  doc["cartan_matrix"] = int_matrix_json(a);
  doc["diagram"] = diagram;
  doc["classification"] = cls.str();
  doc["weyl_order"] = w.value ? Json(*w.value) : Json(nullptr);
  doc["weyl_order_method"] = w.method;
  doc["killing"] = {{"sigma_coefficient", kc.sigma_coefficient ? rational_json(*kc.sigma_coefficient) : Json(nullptr)},
                    {"trace_coefficient", kc.trace_coefficient ? rational_json(*kc.trace_coefficient) : Json(nullptr)}};

  std::ostringstream t;
  t << "algebra: " << spec.name() << "\n"
    << "family: " << family_name(spec.family) << "\n"
    << "n: " << spec.n << "\n"
    << "rank: " << spec.lie_rank() << "\n"
    << "matrix size: " << spec.realization_dim() << "\n"
    << "dimension: " << r.dimension() << "\n"
    << "roots: " << rd.roots().size() << "\n"
    << "positive roots: " << weights_text(rd.positive_roots()) << "\n"
    << "fundamental roots: " << weights_text(rd.fundamental_roots()) << "\n"
    << "fundamental coroots: " << join(coroots, "; ") << "\n"
    << "fundamental weights: " << weights_text(rd.fundamental_weights()) << "\n"
    << "cartan matrix:\n"
    << matrix_text(a) << "dynkin diagram:\n"
    << indent_block(diagram) << "classification: " << cls.str() << "\n"
    << "weyl group order: " << (w.value ? std::to_string(*w.value) + " (" + w.method + ")" : w.method) << "\n"
    << "killing sigma coefficient: " << (kc.sigma_coefficient ? kc.sigma_coefficient->get_str() : "none") << "\n"
    << "killing trace coefficient: " << (kc.trace_coefficient ? kc.trace_coefficient->get_str() : "none") << "\n";
  emit(out, opt, doc, t.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline const std::vector<std::string>& verify_selectors() {
  static const std::vector<std::string> s{"axioms", "sl2", "serre", "killing", "weyl", "invariants", "all"};
  return s;
}

inline void verify_axioms(const RootDatum& rd, std::vector<Check>& out) {
  const auto report = verify_root_axioms(rd.roots(), killing_inner_product(rd), rd.ambient_dimension());
  for (const auto& c : report.checks) out.push_back({"axioms", c.name, c.passed, c.detail});
}

inline void verify_sl2(const RootDatum& rd, std::vector<Check>& out) {
  for (const auto& a : rd.roots()) out.push_back({"sl2", weight_str(a), verify_sl2_triple(rd, a), ""});
}

inline void verify_serre_suite(const RootDatum& rd, std::vector<Check>& out) {
  const auto report = verify_serre(rd);
  for (const auto& c : report.checks) out.push_back({"serre", c.relation.str(), c.passed, ""});
}

inline void verify_killing(const RootDatum& rd, std::vector<Check>& out) {
  const auto& r = rd.realization();
  bool agree = true;
  std::string detail;
  for (std::size_t i = 0; i < r.cartan_size() && agree; ++i)
    for (std::size_t j = 0; j < r.cartan_size(); ++j) {
      const Rational ad = killing_form_ad(r, r.element(i), r.element(j));
      const Rational roots = killing_form_roots(rd, r.element(i), r.element(j));
      if (ad != roots) {
        agree = false;
        detail = "h" + std::to_string(i + 1) + ", h" + std::to_string(j + 1) + ": " + ad.get_str() +
                 " != " + roots.get_str();
        break;
      }
    }
  out.push_back({"killing", "ad route equals root sum on the Cartan basis", agree, detail});
  const auto kc = killing_constants(rd);
  const Rational expected = killing_sigma_closed_form(rd.spec());
  const bool ok = kc.sigma_coefficient && *kc.sigma_coefficient == expected;
  out.push_back({"killing", "sigma coefficient " + expected.get_str(), ok,
                 kc.sigma_coefficient ? "found " + kc.sigma_coefficient->get_str() : "no single constant"});
}

inline void verify_weyl(const RootDatum& rd, const Options& opt, std::vector<Check>& out) {
  const auto gens = simple_reflections(rd);
  const std::uint64_t expected = weyl_order_closed_form(rd.spec());
  try {
    const auto w = generate(gens, opt.max_order);
    out.push_back({"weyl", "|W| = " + std::to_string(expected), w.size() == expected,
                   "enumerated " + std::to_string(w.size())});
  } catch (const WeylOverflow& e) {
    out.push_back({"weyl", "|W| = " + std::to_string(expected), false, e.what()});
  }
  std::set<Weight> phi(rd.roots().begin(), rd.roots().end());
  bool permutes = true, involutions = true;
  for (const auto& g : gens) {
    involutions = involutions && order(g) == 2;
    std::set<Weight> image;
    for (const auto& a : rd.roots()) image.insert(liealg::apply(g, a));
    permutes = permutes && image == phi;
  }
  out.push_back({"weyl", "simple reflections have order 2", involutions, ""});
  out.push_back({"weyl", "simple reflections permute the roots", permutes, ""});
  const CartanMatrix a = cartan_matrix(rd);
  bool braid = true;
  std::string detail;
  for (std::size_t i = 0; i < gens.size() && braid; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto m = coxeter_exponent(a(i, j) * a(j, i));
      if (order(compose(gens[i], gens[j])) != m) {
        braid = false;
        detail = "S" + std::to_string(i + 1) + " S" + std::to_string(j + 1);
        break;
      }
    }
  out.push_back({"weyl", "braid orders follow the Cartan matrix", braid, detail});
}

inline void verify_invariants(const RootDatum& rd, std::vector<Check>& out) {
  const auto suite = build_suite(rd.spec().family, static_cast<std::size_t>(rd.spec().lie_rank()));
  const auto gens = simple_reflections(rd);
  out.push_back({"invariants", "invariant under simple reflections", check_invariance(suite, gens), ""});
  const auto expected = weyl_order_closed_form(rd.spec());
  out.push_back({"invariants", "degree product = |W|", suite.degree_product() == expected,
                 std::to_string(suite.degree_product()) + " vs " + std::to_string(expected)});
  out.push_back({"invariants", "jacobian is nonzero", jacobian_criterion(suite), ""});
}

inline int cmd_verify(const AlgebraSpec& spec, const std::string& selector, const Options& opt, std::ostream& out) {
  const auto& sel = verify_selectors();
  if (std::find(sel.begin(), sel.end(), selector) == sel.end())
    throw UsageError("unknown suite '" + selector + "' (expected " + join(sel, ", ") + ")");
  const RootDatum rd = cartan_decompose(spec);
  std::vector<Check> checks;
  auto wants = [&](const char* s) { return selector == "all" || selector == s; };
  if (wants("axioms")) verify_axioms(rd, checks);
  if (wants("sl2")) verify_sl2(rd, checks);
  if (wants("serre")) verify_serre_suite(rd, checks);
  if (wants("killing")) verify_killing(rd, checks);
  if (wants("weyl")) verify_weyl(rd, opt, checks);
  if (wants("invariants")) verify_invariants(rd, checks);

  std::size_t failed = 0;
  Json list = Json::array();
  std::ostringstream t;
  t << "verify " << spec.name() << " (" << selector << ")\n";
  for (const auto& c : checks) {
    if (!c.passed) ++failed;
    list.push_back({{"suite", c.suite}, {"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    t << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
    if (!c.detail.empty()) t << " [" << c.detail << "]";
    t << "\n";
  }
  t << "summary: " << checks.size() - failed << " passed, " << failed << " failed\n";
  Json doc;
  doc["schema"] = "liealg/1";
  doc["command"] = "verify";
  doc["algebra"] = spec.name();
  doc["selector"] = selector;
  doc["checks"] = list;
  doc["passed"] = failed == 0;
  emit(out, opt, doc, t.str());
  return failed == 0 ? kOk : kFailure;
}

// ---------------------------------------------------------------------------
// serre

inline int cmd_serre(const AlgebraSpec& spec, const Options& opt, std::ostream& out) {
  const RootDatum rd = cartan_decompose(spec);
  const CartanMatrix a = cartan_matrix(rd);
  const auto p = serre_presentation(a);
  const auto name = classify(build_diagram(a, root_lengths(rd))).str();
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(r.str());
  Json doc;
  doc["schema"] = "liealg/1";
  doc["command"] = "serre";
  doc["algebra"] = spec.name();
  doc["classification"] = name;
  doc["cartan_matrix"] = int_matrix_json(a);
  doc["relations"] = rels;
  std::ostringstream t;
  t << "serre presentation of " << spec.name() << " (" << name << ")\n"
    << "cartan matrix:\n"
    << matrix_text(a) << "relations:\n"
    << indent_block(p.str().substr(0, p.str().size() - 1));
  emit(out, opt, doc, t.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// invariants

inline int cmd_invariants(const AlgebraSpec& spec, const Options& opt, std::ostream& out) {
  const auto rank = static_cast<std::size_t>(spec.lie_rank());
  const auto suite = build_suite(spec.family, rank);
  const auto j = jacobian(suite);
  const auto c = jacobian_constant(suite);
  Json polys = Json::array();
  std::ostringstream t;
  t << "invariants of the Weyl group of " << spec.name() << "\n"
    << "variables: " << suite.nvars << (suite.sum_zero_restriction ? " (restricted to coordinate sum zero)" : "")
    << "\n";
  for (std::size_t i = 0; i < suite.polys.size(); ++i) {
    polys.push_back({{"degree", suite.degrees[i]}, {"polynomial", suite.polys[i].str()}});
    t << "f" << i + 1 << " = " << suite.polys[i].str() << "  (degree " << suite.degrees[i] << ")\n";
  }
  t << "degree product: " << suite.degree_product() << "\n"
    << "jacobian: " << j.str() << "\n"
    << "closed form: " << jacobian_closed_form(spec.family, rank).str() << "\n"
    << "jacobian / closed form: " << (c ? c->get_str() : "not proportional") << "\n";
  Json doc;
  doc["schema"] = "liealg/1";
  doc["command"] = "invariants";
  doc["algebra"] = spec.name();
  doc["variables"] = suite.nvars;
  doc["sum_zero_restriction"] = suite.sum_zero_restriction;
  doc["polynomials"] = polys;
  doc["degree_product"] = suite.degree_product();
  doc["jacobian"] = j.str();
  doc["closed_form"] = jacobian_closed_form(spec.family, rank).str();
  doc["closed_form_constant"] = c ? rational_json(*c) : Json(nullptr);
  emit(out, opt, doc, t.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// classify

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Json parse_input(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw ParseError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

inline Rational json_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ParseError("rational entries must be strings such as \"1/2\" or integers");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// Simple roots of the lexicographic positive system: positive roots that
/// are not sums of two positive roots.
inline std::vector<Weight> simple_system(const std::vector<Weight>& roots) {
  std::vector<Weight> pos;
  for (const auto& a : roots)
    if (is_positive(a)) pos.push_back(a);
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  std::set<Weight> posset(pos.begin(), pos.end());
  std::vector<Weight> simple;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos)
      if (b != a && posset.count(a - b)) decomposable = true;
    if (!decomposable) simple.push_back(a);
  }
  // Largest first, so that chains come out in their usual order.
  std::reverse(simple.begin(), simple.end());
  return simple;
}

inline int cmd_classify(const std::string& path, const Options& opt, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const Json input = parse_input(buf.str());
  if (!input.is_object() || (input.contains("vectors") == input.contains("cartan")))
    throw ParseError("input must be an object with exactly one of \"vectors\" or \"cartan\"");

  Json doc;
  doc["schema"] = "liealg/1";
  doc["command"] = "classify";
  std::ostringstream t;
  CartanMatrix a;
  RationalVector lengths;

  if (input.contains("vectors")) {
    const Json& vs = input["vectors"];
    if (!vs.is_array() || vs.empty()) throw ParseError("\"vectors\" must be a non-empty array");
    std::vector<Weight> roots;
    for (const auto& v : vs) {
      if (!v.is_array()) throw ParseError("each vector must be an array");
      Weight w;
      for (const auto& x : v) w.push_back(json_rational(x));
      if (!roots.empty() && w.size() != roots.front().size()) throw ParseError("vectors have different lengths");
      if (w.empty()) throw ParseError("vectors must be non-empty");
      roots.push_back(std::move(w));
    }
    doc["input"] = "vectors";
    doc["vector_count"] = roots.size();
    t << "input: " << roots.size() << " vectors of length " << roots.front().size() << "\n";
    const auto inner = BilinearForm::standard(roots.front().size());
    const auto report = verify_root_axioms(roots, inner, rank(roots));
    Json axioms = Json::array();
    t << "axioms:\n";
    for (const auto& c : report.checks) {
      axioms.push_back({{"axiom", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      t << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]")
        << "\n";
    }
    doc["axioms"] = axioms;
    if (!report.all_passed()) {
      for (const auto& c : report.checks)
        if (!c.passed) {
          doc["classification"] = "NotRootSystem: " + c.name + " axiom fails";
          t << "classification: NotRootSystem: " << c.name << " axiom fails\n";
          break;
        }
      emit(out, opt, doc, t.str());
      return kFailure;
    }
    const auto simple = simple_system(roots);
    doc["simple_roots"] = weights_json(simple);
    t << "simple roots: " << weights_text(simple) << "\n";
    a = cartan_matrix(simple, inner);
    lengths = root_lengths(simple, inner);
  } else {
    const Json& m = input["cartan"];
    if (!m.is_array() || m.empty()) throw ParseError("\"cartan\" must be a non-empty array of rows");
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != m.size()) throw ParseError("\"cartan\" must be a square matrix");
      std::vector<int> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw ParseError("Cartan matrix entries must be integers");
        r.push_back(x.get<int>());
      }
      a.entries.push_back(std::move(r));
    }
    doc["input"] = "cartan";
    t << "input: " << a.rank() << "x" << a.rank() << " Cartan matrix\n";
  }

  doc["cartan_matrix"] = int_matrix_json(a);
  t << "cartan matrix:\n" << matrix_text(a);
  auto finish = [&](const std::string& verdict, int code) {
    doc["classification"] = verdict;
    t << "classification: " << verdict << "\n";
    emit(out, opt, doc, t.str());
    return code;
  };
  if (const auto problems = a.problems(); !problems.empty())
    return finish("NotSimple: " + problems.front(), kFailure);
  if (input.contains("cartan")) {
    const auto d = symmetrizing_lengths(a);
    if (!d) return finish("NotSimple: Cartan matrix is not symmetrizable", kFailure);
    lengths = *d;
  }
  DynkinDiagram d;
  try {
    d = build_diagram(a, lengths);
  } catch (const std::invalid_argument& e) {
    return finish(std::string("NotSimple: ") + e.what(), kFailure);
  }
  const bool pd = check_positive_definite(d, a, lengths);
  doc["diagram"] = render(d, opt.unicode);
  doc["positive_definite"] = pd;
  t << "dynkin diagram:\n" << indent_block(render(d, opt.unicode)) << "positive definite: " << (pd ? "yes" : "no") << "\n";
  if (!pd) return finish("NotSimple: positive definiteness fails", kFailure);
  const auto cls = classify(d);
  Json comps = Json::array();
  for (const auto& c : cls.components) {
    std::vector<std::size_t> one_based;
    for (auto v : c.vertices) one_based.push_back(v + 1);
    comps.push_back({{"type", c.name}, {"vertices", one_based}});
  }
  doc["components"] = comps;
  return finish(cls.str(), cls.all_simple() ? kOk : kFailure);
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root systems, Cartan matrices, Weyl groups and invariants of the classical Lie algebras"};
  app.name("liealg");
  app.require_subcommand(1);
  Options opt;
  std::string family, selector = "all", path;
  int n = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-order", opt.max_order, "Largest Weyl group order to report or enumerate")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--unicode", opt.unicode, "Draw diagrams with unicode arrows");
  };
  auto algebra = [&](CLI::App* sub) {
    sub->add_option("family", family, "sl, sp, so-even or so-odd")->required();
    sub->add_option("n", n,
                    "Family index: sl n is sl_n (rank n-1); sp n is sp_2n; so-even n is so_2n; so-odd n is so_2n+1")
        ->required();
  };
  auto* info = app.add_subcommand("info", "Summary of one algebra");
  algebra(info);
  common(info);
  info->add_flag("--enumerate-weyl", opt.enumerate_weyl, "Enumerate the Weyl group instead of using the closed form");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  algebra(verify);
  verify->add_option("suite", selector, "axioms, sl2, serre, killing, weyl, invariants or all");
  common(verify);
  auto* classify_cmd = app.add_subcommand("classify", "Classify a root system or Cartan matrix read from JSON");
  classify_cmd->add_option("input", path, "JSON file with \"vectors\" or \"cartan\"")->required();
  common(classify_cmd);
  auto* serre = app.add_subcommand("serre", "Print the Serre presentation");
  algebra(serre);
  common(serre);
  auto* inv = app.add_subcommand("invariants", "Basic invariants of the Weyl group and their Jacobian");
  algebra(inv);
  common(inv);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      for (auto* sub : app.get_subcommands()) out << sub->help();
      return kOk;
    }
    err << "liealg: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (info->parsed()) return cmd_info(parse_spec(family, n), opt, out);
    if (verify->parsed()) return cmd_verify(parse_spec(family, n), selector, opt, out);
    if (serre->parsed()) return cmd_serre(parse_spec(family, n), opt, out);
    if (inv->parsed()) return cmd_invariants(parse_spec(family, n), opt, out);
    if (classify_cmd->parsed()) return cmd_classify(path, opt, out);
  } catch (const UsageError& e) {
    err << "liealg: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "liealg: " << path << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace liealg::cli
