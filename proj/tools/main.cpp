#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tropspec/io.hpp"
#include "tropspec/tropical_core.hpp"

namespace {

using namespace tropspec;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

void write_text(const std::optional<std::string>& path, const std::string& text) {
  if (!path) return;
  std::ofstream out(*path);
  if (!out) throw ParseError("cannot write '" + *path + "'");
  out << text;
}

void emit_json(const std::optional<std::string>& path, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (path) {
    write_text(path, text);
  } else {
    std::cout << text;
  }
}

Complex parse_complex_flag(const std::string& raw) {
  std::istringstream in(raw);
  double re = 0.0, im = 0.0;
  char sep = 0;
  if (!(in >> re)) throw ParseError("--mu expects RE or RE,IM");
  if (in >> sep) {
    if (sep != ',' || !(in >> im))
      throw ParseError("--mu expects RE or RE,IM");
  }
  return Complex(re, im);
}

struct Options {
  std::string input;
  std::optional<std::string> out_json;
  std::optional<std::string> out_dot;
  std::optional<std::string> out_csv;
};

void add_common(CLI::App* cmd, Options& opt, bool dot, bool csv) {
  cmd->add_option("input", opt.input, "input JSON file")->required();
  cmd->add_option("-o,--json", opt.out_json, "write the JSON result here");
  if (dot) cmd->add_option("--dot", opt.out_dot, "write graphs in DOT format");
  if (csv) cmd->add_option("--csv", opt.out_csv, "write plot data as CSV");
}

int run_tropeig(const Options& opt) {
  TropMatrix a = trop_matrix_from_json(read_json(opt.input));
  TropScalar rho = min_circuit_mean(a);
  auto gens = trop_eigenvectors(a);
  Digraph crit = critical_graph(a);

  Json vecs = Json::array();
  for (const auto& v : gens) {
    Json jv = Json::array();
    for (const auto& s : v) jv.push_back(trop_scalar_to_json(s));
    vecs.push_back(jv);
  }
  Json classes = Json::array();
  for (const auto& comp : sccs(crit)) {
    Json jc = Json::array();
    for (int v : comp) jc.push_back(v + 1);
    classes.push_back(jc);
  }
  Json result{{"rho_min", trop_scalar_to_json(rho)},
              {"critical_classes", classes},
              {"eigenvectors", vecs}};
  emit_json(opt.out_json ? opt.out_json : std::optional<std::string>{}, result);
  write_text(opt.out_dot, digraph_to_dot(crit, "critical"));
  return 0;
}

int run_charpoly(const Options& opt) {
  TropMatrix a = trop_matrix_from_json(read_json(opt.input));
  RootSequence roots = char_poly_roots(a);
  TropPoly formal;
  formal.coeffs.assign(a.n() + 1, TropScalar::zero());
  formal.coeffs[a.n()] = TropScalar::one();
  // reconstruct the convex coefficients from the roots
  TropScalar acc = TropScalar::one();
  for (int i = 1; i <= a.n(); ++i) {
    acc = otimes(acc, roots[i - 1]);
    formal.coeffs[a.n() - i] = acc;
  }
  Json jroots = Json::array();
  for (const auto& r : roots) jroots.push_back(trop_scalar_to_json(r));
  emit_json(opt.out_json ? opt.out_json : std::optional<std::string>{},
            Json{{"roots", jroots}, {"newton_polygon", trop_poly_to_json(formal)}});
  write_text(opt.out_csv, newton_polygon_csv(formal));
  return 0;
}

int run_critical(const Options& opt) {
  TropMatrix a = trop_matrix_from_json(read_json(opt.input));
  CriticalDecomposition dec = critical_sequence(a);
  std::vector<bool> covers;
  for (int ell = 1; ell <= dec.k; ++ell)
    covers.push_back(disjoint_circuit_cover(dec.crit_graphs[ell - 1]));
  std::cout << critical_table(dec, covers);
  if (opt.out_json) emit_json(opt.out_json, critical_to_json(dec, covers));
  if (opt.out_dot) {
    std::ostringstream all;
    for (int ell = 1; ell <= dec.k; ++ell)
      all << digraph_to_dot(dec.crit_graphs[ell - 1],
                            "critical_order_" + std::to_string(ell));
    write_text(opt.out_dot, all.str());
  }
  return 0;
}

int run_asymptotics(const Options& opt, const Config& cfg) {
  PerturbedMatrix p = perturbed_from_json(read_json(opt.input));
  EigAsymptotics asym = eig_asymptotics(p, cfg);
  emit_json(opt.out_json ? opt.out_json : std::optional<std::string>{},
            eig_asymptotics_to_json(asym));
  return 0;
}

int run_eigvec(const Options& opt, int level, const std::string& mu_raw,
               const Config& cfg) {
  PerturbedMatrix p = perturbed_from_json(read_json(opt.input));
  EigvecAsymptotics vec = eigvec_asymptotics(p, level, parse_complex_flag(mu_raw), cfg);
  emit_json(opt.out_json ? opt.out_json : std::optional<std::string>{},
            eigvec_to_json(vec));
  return 0;
}

int run_lidskii(const Options& opt, const Config& cfg) {
  auto [spec, b] = nil_problem_from_json(read_json(opt.input));
  EigAsymptotics asym = lidskii(spec, b, cfg);
  emit_json(opt.out_json ? opt.out_json : std::optional<std::string>{},
            eig_asymptotics_to_json(asym));
  return 0;
}

int run_puiseux(const Options& opt) {
  auto coeffs = first_order_from_json(read_json(opt.input));
  auto branches = newton_puiseux_first_order(coeffs);
  emit_json(opt.out_json ? opt.out_json : std::optional<std::string>{},
            branches_to_json(branches));
  return 0;
}

int run_verify(const Options& opt, const std::vector<double>& grid,
               const Config& cfg) {
  PerturbedMatrix p = perturbed_from_json(read_json(opt.input));
  EigAsymptotics asym = eig_asymptotics(p, cfg);
  VerificationReport report =
      numeric_check(p, asym, grid.empty() ? default_grid() : grid, cfg);
  std::cout << verification_table(report);
  if (opt.out_json) emit_json(opt.out_json, verification_to_json(report));
  write_text(opt.out_csv, verification_csv(report));
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first-order eigenvalue asymptotics of perturbed matrices "
               "via min-plus spectral theory"};
  app.require_subcommand(1);
  app.footer(
      "input schemas (all indices 1-based, rationals \"p/q\" or integers,\n"
      "\"inf\" for structural zeros):\n"
      "  min-plus matrix   {\"n\": int, \"entries\": [[entry, ...], ...]}\n"
      "  perturbed matrix  {\"n\": int, \"entries\": [{\"i\", \"j\",\n"
      "                     \"coeff\": [re, im], \"exp\": entry}, ...]}\n"
      "                    omitted positions are identically zero\n"
      "  polynomial family {\"coeffs\": [{\"coeff\": [re, im], \"exp\": entry},\n"
      "                     ...]}  (lowest degree first, monic)\n"
      "  nil problem       {\"m\": [int...], \"q\": [int...],\n"
      "                     \"b\": [[[re, im], ...], ...]}\n"
      "tolerance overrides: TROPSPEC_PIVOT_TOL, TROPSPEC_NULLSPACE_TOL,\n"
      "TROPSPEC_ZERO_EIG_TOL, TROPSPEC_SIMPLE_EIG_TOL, TROPSPEC_SLOPE_TOL,\n"
      "TROPSPEC_COEFF_TOL; TROPSPEC_CHECKS=1 forces internal assertions.");
  Config cfg = Config::from_env();

  Options tropeig_opt, charpoly_opt, critical_opt, asym_opt, eigvec_opt,
      lidskii_opt, puiseux_opt, verify_opt;
  int eigvec_level = 1;
  std::string eigvec_mu = "1";
  std::vector<double> verify_grid;

  add_common(app.add_subcommand("tropeig",
                                "min-plus eigenvalue, eigenvectors and "
                                "critical graph of a matrix"),
             tropeig_opt, true, false);
  add_common(app.add_subcommand("charpoly",
                                "roots and Newton polygon of the min-plus "
                                "characteristic polynomial"),
             charpoly_opt, false, true);
  add_common(app.add_subcommand("critical",
                                "critical values, classes and order-l "
                                "critical graphs"),
             critical_opt, true, false);
  add_common(app.add_subcommand("asymptotics",
                                "eigenvalue asymptotics of a perturbed matrix"),
             asym_opt, false, false);
  auto* eigvec_cmd = app.add_subcommand(
      "eigvec", "eigenvector asymptotics for one eigenvalue equivalent");
  add_common(eigvec_cmd, eigvec_opt, false, false);
  eigvec_cmd->add_option("--level", eigvec_level, "critical level (1-based)")
      ->required();
  eigvec_cmd->add_option("--mu", eigvec_mu, "eigenvalue of t^level, RE or RE,IM")
      ->required();
  add_common(app.add_subcommand("lidskii",
                                "classical Jordan-structure asymptotics of "
                                "Nil + eps b"),
             lidskii_opt, false, false);
  add_common(app.add_subcommand("puiseux",
                                "first-order branch asymptotics of a "
                                "polynomial family"),
             puiseux_opt, false, false);
  auto* verify_cmd = app.add_subcommand(
      "verify", "check predicted asymptotics against dense eigensolves");
  add_common(verify_cmd, verify_opt, false, true);
  verify_cmd->add_option("--grid", verify_grid, "explicit eps grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand("tropeig")) return run_tropeig(tropeig_opt);
    if (app.got_subcommand("charpoly")) return run_charpoly(charpoly_opt);
    if (app.got_subcommand("critical")) return run_critical(critical_opt);
    if (app.got_subcommand("asymptotics")) return run_asymptotics(asym_opt, cfg);
    if (app.got_subcommand("eigvec"))
      return run_eigvec(eigvec_opt, eigvec_level, eigvec_mu, cfg);
    if (app.got_subcommand("lidskii")) return run_lidskii(lidskii_opt, cfg);
    if (app.got_subcommand("puiseux")) return run_puiseux(puiseux_opt);
    if (app.got_subcommand("verify"))
      return run_verify(verify_opt, verify_grid, cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
