// Command-line front end: builds modules, runs verification suites, and
// emits JSON reports. Exit codes: 0 all checks pass, 1 a mathematical
// check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skewbi/json_io.hpp"
#include "skewbi/suite.hpp"

namespace {

using nlohmann::json;
using namespace skewbi;

int emit(const json& report, const std::string& out_path, bool passed) {
  json full = report;
  full["schema"] = 1;
  const std::string text = full.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return passed ? 0 : 1;
}

Rational parse_flag_rational(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(flag) + ": not a rational: " + text);
  }
}

int run_verify_ring(unsigned max_degree, unsigned words, unsigned seed,
                    const std::string& out) {
  SuiteCaps caps;
  caps.ring_degree = max_degree;
  caps.ring_words = words;
  caps.hopf_words = words / 5 + 1;
  caps.seed = seed;
  // Only the two ring criteria are wanted here; shrink the other sweeps
  // to their cheapest settings.
  caps.module_n_max = 0;
  caps.powerset_max = 0;
  caps.recurrence_max = 0;
  caps.cg_max = 0;
  caps.v1_max = 0;
  caps.grid_n_max = 0;
  caps.max_d = 0;
  const SuiteReport report = run_acceptance(caps);
  json rows = json::array();
  bool ok = true;
  for (const auto& c : report.criteria)
    if (c.index == 1 || c.index == 2) {
      rows.push_back({{"name", c.name}, {"passed", c.passed},
                      {"detail", c.detail}});
      ok = ok && c.passed;
    }
  return emit({{"checks", rows}, {"all_pass", ok}}, out, ok);
}

int run_module(const std::string& family, unsigned n, const std::string& sign,
               unsigned omega, const std::string& out) {
  Representation rep;
  json header;
  if (family == "irr") {
    const IrrLabel label{n, sign == "-" ? -1 : +1};
    rep = build_irreducible(label);
    header = {{"family", "irr"}, {"label", to_json(label)}};
  } else {
    rep = powerset_rep(omega);
    header = {{"family", "powerset"}, {"omega", omega}};
  }
  const RelationReport relations = verify_defining_relations(rep);
  json report = {{"module", std::move(header)},
                 {"dim", rep.dim},
                 {"relations", to_json(relations)}};
  if (family == "irr") {
    const Rational scalar = Rational(n) * (Rational(n) + 2) / 2;
    report["casimir"] = to_string(scalar);
    report["casimir_ok"] =
        act(rep, casimir()) == Matrix::identity(rep.dim) * scalar;
  }
  const bool ok = relations.all_pass() &&
                  (family != "irr" || report["casimir_ok"].get<bool>());
  return emit(report, out, ok);
}

int run_cg(unsigned m, unsigned n, const std::string& delta,
           const std::string& epsilon, const std::string& out) {
  const IrrLabel a{m, delta == "-" ? -1 : +1};
  const IrrLabel b{n, epsilon == "-" ? -1 : +1};
  const auto summands = cg_decompose(a, b);
  json rows = json::array();
  std::size_t total = 0;
  for (const auto& s : summands) {
    rows.push_back({{"label", to_json(s.label)}, {"dim", s.label.n + 1}});
    total += s.label.n + 1;
  }
  const bool ok = total == (m + 1) * (n + 1);
  return emit({{"left", to_json(a)},
               {"right", to_json(b)},
               {"summands", rows},
               {"total_dim", total},
               {"dimension_ok", ok}},
              out, ok);
}

int run_v1(unsigned m, unsigned n, const std::string& delta,
           const std::string& epsilon, bool swap, const std::string& out) {
  const int ds = delta == "-" ? -1 : +1;
  const int es = epsilon == "-" ? -1 : +1;
  const IrrLabel first{swap ? n : m, ds};
  const IrrLabel second{swap ? m : n, es};
  const TensorRepresentation t =
      tensor_rep(build_irreducible(first), build_irreducible(second));
  const V1Module v1 = bi_on_v1(t);
  json report = {{"left", to_json(first)},
                 {"right", to_json(second)},
                 {"dim", v1.basis.dim()},
                 {"triple", to_json(v1.triple)}};
  bool ok = true;
  if (v1.basis.dim() > 0) {
    const CentralElements ce = central_elements(v1.triple);
    report["kappa_zero"] = ce.kappa == Matrix(v1.basis.dim(), v1.basis.dim());
    report["lambda_zero"] = ce.lambda == Matrix(v1.basis.dim(), v1.basis.dim());
    ok = report["kappa_zero"].get<bool>() && report["lambda_zero"].get<bool>();
  }
  if (v1.identification) report["identification"] = to_json(*v1.identification);
  if ((m + n) % 2 == 1 && m <= n) {
    const BIModuleParams predicted = identify_v1(
        m, n, ds, es, swap ? FactorOrder::Swapped : FactorOrder::AsGiven);
    report["predicted"] = to_json(predicted);
    const bool match =
        v1.identification &&
        identification_consistent(predicted, *v1.identification);
    report["identification_consistent"] = match;
    ok = ok && match;
  }
  return emit(report, out, ok);
}

int run_bi(const std::string& parity, unsigned n, const std::string& a,
           const std::string& b, const std::string& c, int eps, int eps_prime,
           const std::string& out) {
  BIModuleParams p;
  p.parity = parity == "even" ? Parity::Even : Parity::Odd;
  p.n = n;
  p.a = parse_flag_rational(a, "--a");
  p.b = parse_flag_rational(b, "--b");
  p.c = parse_flag_rational(c, "--c");
  p.twist = {eps, eps_prime};
  const BITriple t = build_bi_module(p);
  const ScalarCentrals scalars = module_central_scalars(p);
  json report = {{"params", to_json(p)},
                 {"triple", to_json(t)},
                 {"kappa", to_string(scalars.kappa)},
                 {"lambda", to_string(scalars.lambda)},
                 {"mu", to_string(scalars.mu)},
                 {"irreducible_params", is_irreducible_params(p)},
                 {"irreducible_matrix", is_irreducible_matrix(t)}};
  const bool ok = report["irreducible_params"].get<bool>() ==
                  report["irreducible_matrix"].get<bool>();
  report["irreducibility_consistent"] = ok;
  return emit(report, out, ok);
}

int run_leonard(const std::string& parity, unsigned n, const std::string& a,
                const std::string& b, const std::string& c,
                const std::string& out) {
  BIModuleParams p;
  p.parity = parity == "even" ? Parity::Even : Parity::Odd;
  p.n = n;
  p.a = parse_flag_rational(a, "--a");
  p.b = parse_flag_rational(b, "--b");
  p.c = parse_flag_rational(c, "--c");
  const BITriple t = build_bi_module(p);
  const LeonardVerdict verdict = leonard_check(t);
  json report = {{"params", to_json(p)}, {"leonard", to_json(verdict)}};
  bool ok = true;
  if (is_irreducible_params(p)) {
    const bool predicted = leonard_predict(p);
    report["predicted"] = predicted;
    ok = predicted == verdict.is_leonard;
    report["prediction_consistent"] = ok;
  }
  return emit(report, out, ok);
}

int run_oddgraph(unsigned d, const std::string& base, const std::string& out) {
  const OddGraph g = build_odd_graph(d);
  std::uint32_t mask = 0;
  if (base.empty()) {
    mask = g.vertices.front();
  } else {
    std::stringstream ss(base);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const unsigned e = static_cast<unsigned>(std::stoul(item));
      if (e > 2 * d) throw CLI::ValidationError("--base: element out of range");
      mask |= 1u << e;
    }
  }
  std::size_t x0 = g.vertices.size();
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (g.vertices[i] == mask) x0 = i;
  if (x0 == g.vertices.size())
    throw CLI::ValidationError("--base: not a d-subset of the ground set");

  const RelationReport relations =
      verify_homomorphism(terwilliger_images(g, x0));
  const MatchReport match = match_with_v1(d, x0);
  const DecompositionReport decomposition = decompose_standard_module(d, x0);

  json report = to_json(decomposition);
  report["relations"] = to_json(relations);
  report["v1_match"] = to_json(match);
  const bool ok = relations.all_pass() && match.all_pass() &&
                  decomposition.dimension_ok &&
                  decomposition.spectrum_partition_ok;
  return emit(report, out, ok);
}

int run_suite(unsigned cap_d, bool include_d5, const std::string& out) {
  SuiteCaps caps;
  caps.max_d = cap_d;
  caps.include_d5 = include_d5;
  const SuiteReport report = run_acceptance(caps);
  for (const auto& c : report.criteria)
    std::cerr << (c.passed ? "PASS" : "FAIL") << " criterion " << c.index
              << ": " << c.name << " (" << c.detail << ")\n";
  return emit(to_json(report), out, report.all_pass());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification tool for the skew group ring "
               "U(sl2) x| Z/2Z, its Bannai-Ito modules, and odd graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --out appear after the subcommand
  std::string out;
  app.add_option("--out", out, "write the JSON report to a file");

  auto* ring = app.add_subcommand("verify-ring", "PBW and Hopf law checks");
  unsigned max_degree = 6, words = 500, seed = 20260826;
  ring->add_option("--max-degree", max_degree, "maximum word degree")
      ->check(CLI::Range(1u, 12u));
  ring->add_option("--words", words, "number of random words");
  ring->add_option("--seed", seed, "RNG seed");

  auto* module = app.add_subcommand("module", "build a module, check relations");
  std::string family = "irr", sign = "+";
  unsigned n = 0, omega = 0;
  module->add_option("--family", family)->check(CLI::IsMember({"irr", "powerset"}));
  module->add_option("--n", n, "highest weight");
  module->add_option("--sign", sign)->check(CLI::IsMember({"+", "-"}));
  module->add_option("--omega", omega, "ground set size")->check(CLI::Range(0u, 16u));

  auto* cg = app.add_subcommand("cg", "Clebsch-Gordan decomposition");
  unsigned cg_m = 0, cg_n = 0;
  std::string delta = "+", epsilon = "+";
  cg->add_option("--m", cg_m)->required();
  cg->add_option("--n", cg_n)->required();
  cg->add_option("--delta", delta)->check(CLI::IsMember({"+", "-"}));
  cg->add_option("--epsilon", epsilon)->check(CLI::IsMember({"+", "-"}));

  auto* v1 = app.add_subcommand("v1", "V(1) of a tensor of irreducibles");
  unsigned v1_m = 0, v1_n = 0;
  std::string v1_delta = "+", v1_epsilon = "+";
  bool swap = false;
  v1->add_option("--m", v1_m)->required();
  v1->add_option("--n", v1_n)->required();
  v1->add_option("--delta", v1_delta)->check(CLI::IsMember({"+", "-"}));
  v1->add_option("--epsilon", v1_epsilon)->check(CLI::IsMember({"+", "-"}));
  v1->add_flag("--swap", swap, "tensor the larger factor first");

  auto* bi = app.add_subcommand("bi", "build a Bannai-Ito module");
  auto* leonard = app.add_subcommand("leonard", "Leonard triple check");
  std::string parity = "odd", a = "0", b = "0", c = "0";
  unsigned bi_n = 0;
  int eps = 1, eps_prime = 1;
  for (CLI::App* cmd : {bi, leonard}) {
    cmd->add_option("--parity", parity)->check(CLI::IsMember({"odd", "even"}))->required();
    cmd->add_option("--n", bi_n)->required();
    cmd->add_option("--a", a, "rational p/q")->required();
    cmd->add_option("--b", b, "rational p/q")->required();
    cmd->add_option("--c", c, "rational p/q")->required();
  }
  bi->add_option("--eps", eps)->check(CLI::IsMember({1, -1}));
  bi->add_option("--eps-prime", eps_prime)->check(CLI::IsMember({1, -1}));

  auto* oddgraph = app.add_subcommand("oddgraph", "Terwilliger algebra report");
  unsigned d = 2;
  std::string base;
  oddgraph->add_option("--d", d, "d must be >= 1 (odd graph O_{d+1})")
      ->required()
      ->check(CLI::Range(1u, 5u));
  oddgraph->add_option("--base", base, "base vertex, e.g. 0,1");

  auto* suite = app.add_subcommand("suite", "full acceptance battery");
  unsigned cap_d = 4;
  bool include_d5 = false;
  suite->add_option("--cap-d", cap_d, "largest odd graph")->check(CLI::Range(0u, 4u));
  suite->add_flag("--include-d5", include_d5, "also run d=5 (minutes)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (ring->parsed()) return run_verify_ring(max_degree, words, seed, out);
    if (module->parsed()) return run_module(family, n, sign, omega, out);
    if (cg->parsed()) return run_cg(cg_m, cg_n, delta, epsilon, out);
    if (v1->parsed()) return run_v1(v1_m, v1_n, v1_delta, v1_epsilon, swap, out);
    if (bi->parsed()) return run_bi(parity, bi_n, a, b, c, eps, eps_prime, out);
    if (leonard->parsed()) return run_leonard(parity, bi_n, a, b, c, out);
    if (oddgraph->parsed()) return run_oddgraph(d, base, out);
    if (suite->parsed()) return run_suite(cap_d, include_d5, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
