// orbh: graded Frobenius series, plethysms, standard monomials, ideals and
// named checks from the command line.

#include "orbh/loci.hpp"
#include "orbh/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace orbh;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kBudget = 2, kUsage = 3 };

struct Common {
  std::string order = "grevlex";
  std::string var_order = "paper-example";
  std::optional<int> max_degree;
  int kron_cap = 12;
  std::string format = "text";
  std::size_t budget_pairs = 2'000'000;
  unsigned threads = 0;

  MonomialOrder monomial_order() const { return MonomialOrder::parse(order, var_order); }
  json echo(const std::string& command) const {
    json j = {{"command", command}, {"order", order},   {"var_order", var_order},
              {"kron_cap", kron_cap}, {"format", format}, {"budget_pairs", budget_pairs}};
    j["max_degree"] = max_degree ? json(*max_degree) : json(nullptr);
    return j;
  }
  PipelineOptions pipeline() const {
    PipelineOptions p;
    p.max_degree = max_degree;
    p.buchberger.max_pairs = budget_pairs;
    p.threads = threads;
    return p;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_order = true) {
  if (with_order) {
    cmd->add_option("--order", c.order, "Monomial order")
        ->check(CLI::IsMember({"grevlex", "grlex", "lex"}))
        ->capture_default_str();
    cmd->add_option("--var-order", c.var_order, "Variable precedence")
        ->check(CLI::IsMember({"paper-example", "reverse"}))
        ->capture_default_str();
    cmd->add_option("--max-degree", c.max_degree, "Stop the quotient at this degree");
    cmd->add_option("--budget-pairs", c.budget_pairs, "S-pair cap for Buchberger")->capture_default_str();
    cmd->add_option("--threads", c.threads, "Trace workers (0 = hardware count)");
  }
  cmd->add_option("--kron-cap", c.kron_cap, "Largest n for Kronecker products")->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void emit(const Common& c, const std::string& command, const json& result, const std::string& text) {
  if (c.format == "json") {
    json out = {{"config", c.echo(command)}, {"result", result}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  }
}

// A quotient source: a locus ("pi:2^3", "pinm:5,3") or an ideal
// ("ideal:I7", "ideal:J7", "ideal:Inm:n=5,m=3", or any preset after "ideal:").
struct Source {
  std::optional<Locus> locus;
  std::optional<IdealPreset> ideal;
  std::string label;
};

Source parse_source(const std::string& spec) {
  Source s;
  s.label = spec;
  if (spec.rfind("ideal:", 0) == 0) {
    std::string rest = spec.substr(6);
    if (rest.size() >= 2 && (rest[0] == 'I' || rest[0] == 'J') && rest.find(':') == std::string::npos) {
      std::size_t used = 0;
      int n = std::stoi(rest.substr(1), &used);
      if (used + 1 != rest.size()) throw std::invalid_argument("malformed ideal spec " + spec);
      rest = std::string(1, rest[0]) + ":n=" + std::to_string(n);
    }
    s.ideal = parse_preset(rest);
    return s;
  }
  if (spec.rfind("pi:", 0) == 0 || spec.rfind("pinm:", 0) == 0) {
    s.locus = parse_locus(spec);
    return s;
  }
  // Bare preset names are accepted too.
  s.ideal = parse_preset(spec);
  return s;
}

GroebnerBasis quotient_basis(const Source& s, const MonomialOrder& order, const Common& c) {
  if (s.locus) {
    if (order.is_graded()) return associated_graded(ideal_of_points(*s.locus, order));
    GroebnerBasis graded =
        associated_graded(ideal_of_points(*s.locus, MonomialOrder(MonomialOrder::Kind::grevlex, order.reversed())));
    BuchbergerOptions opts;
    opts.max_pairs = c.budget_pairs;
    return buchberger(graded.generators(), order, opts, s.locus->n);
  }
  BuchbergerOptions opts;
  opts.max_pairs = c.budget_pairs;
  return buchberger(s.ideal->generators, order, opts, s.ideal->n);
}

int cmd_grfrob(const Common& c, const std::string& spec) {
  Source s = parse_source(spec);
  MonomialOrder order = c.monomial_order();
  GradedModuleReport rep;
  if (s.locus) {
    rep = graded_character(*s.locus, order, c.pipeline());
  } else {
    rep = graded_character_of_ideal(s.ideal->generators, s.ideal->n, order, c.pipeline(), s.label);
  }
  std::string text = rep.grfrob.to_string();
  if (!rep.complete) text += "\n# truncated at degree " + std::to_string(*c.max_degree);
  emit(c, "grfrob", rep.to_json(), text);
  return kOk;
}

int cmd_plethysm(const Common& c, const std::vector<std::string>& args, const std::string& basis) {
  if (args.size() != 4) throw std::invalid_argument("plethysm expects: BASIS PARTITION BASIS PARTITION");
  SymFunc f = SymFunc::single(parse_basis(args[0]), Partition::parse(args[1]));
  SymFunc g = SymFunc::single(parse_basis(args[2]), Partition::parse(args[3]));
  SymFunc out = to_basis(parse_basis(basis), plethysm(f, g));
  emit(c, "plethysm", {{"f", f.to_string()}, {"g", g.to_string()}, {"value", out.to_json()}, {"text", out.to_string()}},
       out.to_string());
  return kOk;
}

int cmd_standard(const Common& c, const std::string& spec) {
  Source s = parse_source(spec);
  GroebnerBasis gb = quotient_basis(s, c.monomial_order(), c);
  StandardMonomialSet set = standard_monomials(gb, c.max_degree);
  json degrees = json::array();
  std::string text;
  for (std::size_t d = 0; d < set.by_degree.size(); ++d) {
    json monos = json::array();
    text += "degree " + std::to_string(d) + " (" + std::to_string(set.by_degree[d].size()) + "):";
    for (const auto& m : set.by_degree[d]) {
      monos.push_back(m.to_string());
      text += " " + m.to_string();
    }
    text += "\n";
    degrees.push_back({{"d", d}, {"monomials", monos}});
  }
  emit(c, "standard", {{"source", spec}, {"count", set.size()}, {"degrees", degrees}}, text);
  return kOk;
}

int cmd_ideal(const Common& c, const std::string& spec, bool groebner, const std::vector<std::string>& reduce) {
  Source s = parse_source(spec);
  MonomialOrder order = c.monomial_order();
  json result = {{"source", spec}};
  std::string text;
  if (!groebner && reduce.empty() && s.ideal) {
    json gens = json::array();
    for (const auto& g : s.ideal->generators) {
      gens.push_back(g.to_string());
      text += g.to_string() + "\n";
    }
    result["generators"] = gens;
    emit(c, "ideal", result, text);
    return kOk;
  }
  GroebnerBasis gb = quotient_basis(s, order, c);
  if (reduce.empty()) {
    json gens = json::array();
    for (const auto& g : gb.generators()) gens.push_back(g.to_string(order));
    result["groebner"] = gens;
    emit(c, "ideal", result, gb.to_text());
    return kOk;
  }
  json forms = json::array();
  for (const auto& text_poly : reduce) {
    Poly f = Poly::parse(text_poly, gb.n());
    Poly nf = gb.normal_form(f);
    forms.push_back({{"input", f.to_string()}, {"normal_form", nf.to_string(order)}, {"member", nf.is_zero()}});
    text += f.to_string() + " -> " + nf.to_string(order) + "\n";
  }
  result["reductions"] = forms;
  emit(c, "ideal", result, text);
  return kOk;
}

int cmd_character_table(const Common& c, int n) {
  const auto& table = character_table(n);
  json rows = json::array();
  for (const auto& lambda : table.partitions()) {
    json values = json::array();
    for (const auto& mu : table.partitions()) values.push_back(table.value(lambda, mu));
    rows.push_back({{"lambda", lambda.to_string()}, {"values", values}});
  }
  json cols = json::array();
  for (const auto& mu : table.partitions()) cols.push_back(mu.to_string());
  emit(c, "character-table", {{"n", n}, {"classes", cols}, {"rows", rows}}, table.to_csv());
  return kOk;
}

int cmd_check(const Common& c, const std::string& id, const json& params, bool expect_refuted) {
  CheckResult r = run_check(id, params);
  std::string text = r.summary();
  if (r.witness) text += "\nwitness: " + r.witness->dump();
  json result = r.to_json();
  result["expect_refuted"] = expect_refuted;
  emit(c, "check", result, text);
  if (r.verdict == Verdict::budget_exceeded) return kBudget;
  const bool ok = expect_refuted ? r.verdict == Verdict::refuted : r.verdict == Verdict::verified;
  return ok ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Orbit harmonics for set-partition loci.\n"
      "Locus grammar: pi:2^3 | pinm:5,3 | ideal:I7 | ideal:J7 | ideal:<preset>\n"
      "Presets: gr2a:a=3 | gra2:a=3 | I:n=7 | J:n=7 | Inm:n=5,m=3"};
  app.require_subcommand(1);

  Common common;

  auto* grfrob = app.add_subcommand("grfrob", "Graded Frobenius series of a quotient");
  std::string locus;
  grfrob->add_option("--locus,locus", locus, "Locus or ideal spec")->required();
  add_common(grfrob, common);

  auto* pleth = app.add_subcommand("plethysm", "f[g] for basis elements, e.g. plethysm h 2 h 4");
  std::vector<std::string> pleth_args;
  std::string basis = "s";
  pleth->add_option("args", pleth_args, "BASIS PARTITION BASIS PARTITION")->expected(4)->required();
  pleth->add_option("--basis", basis, "Output basis (m, h, e, p, s)")->capture_default_str();
  add_common(pleth, common, false);

  auto* standard = app.add_subcommand("standard", "Standard monomials of a quotient");
  standard->add_option("--locus,locus", locus, "Locus or ideal spec")->required();
  add_common(standard, common);

  auto* ideal = app.add_subcommand("ideal", "Generators, Groebner basis or normal forms");
  bool want_groebner = false;
  std::vector<std::string> reduce;
  ideal->add_option("spec", locus, "Preset, ideal or locus spec")->required();
  ideal->add_flag("--groebner", want_groebner, "Print the reduced Groebner basis");
  ideal->add_option("--reduce", reduce, "Polynomial to reduce, e.g. \"x{1,2}*x{3,4} - x{1,3}*x{2,4}\"");
  add_common(ideal, common);

  auto* table = app.add_subcommand("character-table", "Character table of S_n (CSV in text mode)");
  int table_n = 0;
  table->add_option("--n,n", table_n, "n")->required();
  add_common(table, common, false);

  auto* check = app.add_subcommand("check", "Run a named check");
  std::string check_id;
  bool expect_refuted = false;
  std::optional<int> pa, pb, pn, pm, pj;
  std::string family;
  check->add_option("id", check_id, "Check id")->required()->check(CLI::IsMember(check_ids()));
  check->add_option("--a", pa);
  check->add_option("--b", pb);
  check->add_option("--n", pn);
  check->add_option("--m", pm);
  check->add_option("--j", pj);
  check->add_option("--family", family, "I | J | Pinm for log-concavity; gr2a | gra2 | Inm for generators");
  check->add_flag("--expect-refuted", expect_refuted, "Succeed only on a refutation");
  add_common(check, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (common.max_degree && *common.max_degree < 0) throw std::invalid_argument("--max-degree must be >= 0");
    if (*grfrob) return cmd_grfrob(common, locus);
    if (*pleth) return cmd_plethysm(common, pleth_args, basis);
    if (*standard) return cmd_standard(common, locus);
    if (*ideal) return cmd_ideal(common, locus, want_groebner, reduce);
    if (*table) return cmd_character_table(common, table_n);
    if (*check) {
      json params = json::object();
      if (pa) params["a"] = *pa;
      if (pb) params["b"] = *pb;
      if (pn) params["n"] = *pn;
      if (pm) params["m"] = *pm;
      if (pj) params["j"] = *pj;
      if (!family.empty()) params["family"] = family;
      if (check_id == "standard-monomials") {
        params["order"] = common.order;
        params["var_order"] = common.var_order;
      }
      if (check_id == "log-concavity") params["kron_cap"] = common.kron_cap;
      return cmd_check(common, check_id, params, expect_refuted);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
