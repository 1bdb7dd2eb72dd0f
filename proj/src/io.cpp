#include "tropspec/io.hpp"

#include <cmath>
#include <sstream>

namespace tropspec {

namespace {

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(s));
    }
    std::int64_t num = std::stoll(s.substr(0, slash));
    std::int64_t den = std::stoll(s.substr(slash + 1));
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (...) {
    throw ParseError("malformed rational '" + s + "'");
  }
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex values must be [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

std::string join_nodes(const std::vector<int>& nodes) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out << ",";
    out << nodes[i] + 1;
  }
  out << "}";
  return out.str();
}

}  // namespace

Json trop_scalar_to_json(const TropScalar& s) {
  if (s.is_zero()) return "inf";
  const Rational& r = s.value();
  if (r.is_integer()) return r.num();
  return r.to_string();
}

TropScalar trop_scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return TropScalar(Rational(j.get<std::int64_t>()));
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf") return TropScalar::zero();
    return TropScalar(rational_from_string(s));
  }
  throw ParseError("scalar must be an integer, \"p/q\" or \"inf\"");
}

Json trop_matrix_to_json(const TropMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.n(); ++j) row.push_back(trop_scalar_to_json(a.at(i, j)));
    rows.push_back(row);
  }
  return Json{{"n", a.n()}, {"entries", rows}};
}

TropMatrix trop_matrix_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("entries"))
    throw ParseError("matrix needs \"n\" and \"entries\"");
  int n = j.at("n").get<int>();
  const Json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError("entry rows do not match \"n\"");
  TropMatrix a(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("entry row of wrong length");
    for (int k = 0; k < n; ++k) a.at(i, k) = trop_scalar_from_json(rows[i][k]);
  }
  return a;
}

Json trop_poly_to_json(const TropPoly& p) {
  Json coeffs = Json::array();
  for (const TropScalar& c : p.coeffs) coeffs.push_back(trop_scalar_to_json(c));
  return Json{{"coeffs", coeffs}};
}

TropPoly trop_poly_from_json(const Json& j) {
  if (!j.contains("coeffs") || !j.at("coeffs").is_array())
    throw ParseError("polynomial needs a \"coeffs\" array");
  TropPoly p;
  for (const Json& c : j.at("coeffs")) p.coeffs.push_back(trop_scalar_from_json(c));
  return p;
}

Json perturbed_to_json(const PerturbedMatrix& p) {
  Json entries = Json::array();
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j) {
      if (p.exponents().at(i, j).is_zero()) continue;
      entries.push_back(Json{{"i", i + 1},
                             {"j", j + 1},
                             {"coeff", complex_to_json(p.coeffs().at(i, j))},
                             {"exp", trop_scalar_to_json(p.exponents().at(i, j))}});
    }
  return Json{{"n", p.n()}, {"entries", entries}};
}

PerturbedMatrix perturbed_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("entries"))
    throw ParseError("perturbed matrix needs \"n\" and \"entries\"");
  int n = j.at("n").get<int>();
  CMatrix coeffs(n, n);
  TropMatrix expo(n);
  for (const Json& e : j.at("entries")) {
    int i = e.at("i").get<int>(), jj = e.at("j").get<int>();
    if (i < 1 || i > n || jj < 1 || jj > n)
      throw ParseError("entry index out of range");
    coeffs.at(i - 1, jj - 1) = complex_from_json(e.at("coeff"));
    expo.at(i - 1, jj - 1) = trop_scalar_from_json(e.at("exp"));
  }
  return PerturbedMatrix(std::move(coeffs), std::move(expo));
}

std::pair<NilSpec, CMatrix> nil_problem_from_json(const Json& j) {
  if (!j.contains("m") || !j.contains("q") || !j.contains("b"))
    throw ParseError("nil problem needs \"m\", \"q\" and \"b\"");
  NilSpec spec;
  for (const Json& v : j.at("m")) spec.m.push_back(v.get<int>());
  for (const Json& v : j.at("q")) spec.q.push_back(v.get<int>());
  spec.validate();
  int n = spec.size();
  const Json& rows = j.at("b");
  if (static_cast<int>(rows.size()) != n)
    throw ParseError("perturbation rows do not match the spec size");
  CMatrix b(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("perturbation row of wrong length");
    for (int k = 0; k < n; ++k) b.at(i, k) = complex_from_json(rows[i][k]);
  }
  return {spec, b};
}

std::vector<FirstOrderCoeff> first_order_from_json(const Json& j) {
  if (!j.contains("coeffs") || !j.at("coeffs").is_array())
    throw ParseError("expected a \"coeffs\" array");
  std::vector<FirstOrderCoeff> out;
  for (const Json& c : j.at("coeffs")) {
    FirstOrderCoeff f;
    f.coeff = complex_from_json(c.at("coeff"));
    f.exponent = trop_scalar_from_json(c.at("exp"));
    out.push_back(f);
  }
  return out;
}

Json branches_to_json(const std::vector<Branch>& branches) {
  Json arr = Json::array();
  for (const Branch& b : branches)
    arr.push_back(Json{{"coeff", complex_to_json(b.coeff)},
                       {"exponent", trop_scalar_to_json(b.exponent)}});
  return Json{{"branches", arr}};
}

Json eig_asymptotics_to_json(const EigAsymptotics& asym) {
  Json levels = Json::array();
  for (const EigLevel& lvl : asym.levels) {
    Json equivalents = Json::array();
    for (const Complex& z : lvl.equivalents)
      equivalents.push_back(Json{{"lambda", complex_to_json(z)},
                                 {"exponent", trop_scalar_to_json(lvl.alpha)}});
    Json cls = Json::array();
    for (int v : asym.dec.classes[lvl.level - 1]) cls.push_back(v + 1);
    levels.push_back(Json{{"level", lvl.level},
                          {"alpha", trop_scalar_to_json(lvl.alpha)},
                          {"class", cls},
                          {"r_invertible", lvl.r_invertible},
                          {"t_invertible", lvl.t_invertible},
                          {"equivalents", equivalents},
                          {"omega_count", lvl.omega_count},
                          {"o_count", lvl.small_o_count}});
  }
  return Json{{"levels", levels},
              {"all_levels_resolved", asym.all_levels_resolved}};
}

Json eigvec_to_json(const EigvecAsymptotics& vec) {
  Json w = Json::array(), v = Json::array(), zeros = Json::array();
  for (const Complex& z : vec.w) w.push_back(complex_to_json(z));
  for (const TropScalar& s : vec.V) v.push_back(trop_scalar_to_json(s));
  for (int i : vec.zero_positions) zeros.push_back(i + 1);
  return Json{{"w", w},
              {"V", v},
              {"anchor", vec.anchor + 1},
              {"zero_positions", zeros}};
}

Json critical_to_json(const CriticalDecomposition& dec,
                      const std::vector<bool>& covers) {
  Json levels = Json::array();
  for (int ell = 1; ell <= dec.k; ++ell) {
    Json cls = Json::array();
    for (int v : dec.classes[ell - 1]) cls.push_back(v + 1);
    levels.push_back(Json{{"level", ell},
                          {"alpha", trop_scalar_to_json(dec.alphas[ell - 1])},
                          {"class", cls},
                          {"cover", static_cast<bool>(covers[ell - 1])}});
  }
  Json beta = Json::array();
  for (const TropScalar& s : dec.beta) beta.push_back(trop_scalar_to_json(s));
  return Json{{"levels", levels}, {"beta", beta}};
}

Json generic_exponents_to_json(const GenericExponents& ge) {
  Json roots = Json::array();
  for (const TropScalar& s : ge.roots) roots.push_back(trop_scalar_to_json(s));
  return Json{{"roots", roots},
              {"cover_conditions_hold", ge.cover_conditions_hold}};
}

Json verification_to_json(const VerificationReport& report) {
  Json preds = Json::array();
  for (const PredictionCheck& c : report.predictions)
    preds.push_back(Json{{"lambda", complex_to_json(c.lambda)},
                         {"exponent", trop_scalar_to_json(c.exponent)},
                         {"fitted_slope", c.fitted_slope},
                         {"fitted_coeff", complex_to_json(c.fitted_coeff)},
                         {"slope_error", c.slope_error},
                         {"coeff_rel_error", c.coeff_rel_error},
                         {"residuals", c.residuals},
                         {"pass", c.pass}});
  Json leftovers = Json::array();
  for (const LeftoverBranch& b : report.leftovers)
    leftovers.push_back(Json{{"fitted_slope", b.fitted_slope}});
  Json counts = Json::array();
  for (const LevelCountCheck& c : report.level_counts)
    counts.push_back(Json{{"level", c.level},
                          {"alpha", c.alpha},
                          {"expected", Json::array({c.expected_omega,
                                                    c.expected_on_level,
                                                    c.expected_small_o})},
                          {"got", Json::array({c.got_omega, c.got_on_level,
                                               c.got_small_o})},
                          {"pass", c.pass}});
  return Json{{"grid_used", report.grid_used},
              {"grid_skipped", report.grid_skipped},
              {"predictions", preds},
              {"leftover_branches", leftovers},
              {"level_counts", counts},
              {"pass", report.pass}};
}

std::string digraph_to_dot(const Digraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v : g.nodes()) out << "  " << v + 1 << ";\n";
  for (const auto& [u, v] : g.arcs())
    out << "  " << u + 1 << " -> " << v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string newton_polygon_csv(const TropPoly& p) {
  std::ostringstream out;
  out << "k,coeff\n";
  TropPoly hull = convexify(p);
  for (int k = 0; k < static_cast<int>(hull.coeffs.size()); ++k)
    out << k << "," << hull.coeffs[k].to_string() << "\n";
  out << "root,multiplicity\n";
  RootSequence roots = trop_roots(p);
  std::size_t i = 0;
  while (i < roots.size()) {
    std::size_t j = i;
    while (j < roots.size() && roots[j] == roots[i]) ++j;
    out << roots[i].to_string() << "," << (j - i) << "\n";
    i = j;
  }
  return out.str();
}

std::string verification_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "branch,log10_eps,log10_modulus\n";
  for (std::size_t b = 0; b < report.branch_data.size(); ++b)
    for (const auto& [log_eps, log_mod] : report.branch_data[b])
      out << b << "," << log_eps / std::log(10.0) << ","
          << log_mod / std::log(10.0) << "\n";
  return out.str();
}

std::string critical_table(const CriticalDecomposition& dec,
                           const std::vector<bool>& covers) {
  std::ostringstream out;
  out << "level  alpha  class  cover\n";
  for (int ell = 1; ell <= dec.k; ++ell) {
    out << ell << "  " << dec.alphas[ell - 1].to_string() << "  "
        << join_nodes(dec.classes[ell - 1]) << "  "
        << (covers[ell - 1] ? "yes" : "no") << "\n";
  }
  return out.str();
}

std::string verification_table(const VerificationReport& report) {
  std::ostringstream out;
  out << "prediction  exponent  fitted_slope  coeff_rel_error  status\n";
  for (std::size_t i = 0; i < report.predictions.size(); ++i) {
    const PredictionCheck& c = report.predictions[i];
    out << "(" << c.lambda.real() << (c.lambda.imag() < 0 ? "-" : "+")
        << std::abs(c.lambda.imag()) << "i)"
        << "  " << c.exponent.to_string() << "  " << c.fitted_slope << "  "
        << c.coeff_rel_error << "  " << (c.pass ? "pass" : "FAIL") << "\n";
  }
  for (const LeftoverBranch& b : report.leftovers)
    out << "(unmatched)  -  " << b.fitted_slope << "  -  noted\n";
  for (const LevelCountCheck& c : report.level_counts)
    out << "level " << c.level << " counts (omega/on/o): got " << c.got_omega
        << "/" << c.got_on_level << "/" << c.got_small_o << " expected "
        << c.expected_omega << "/" << c.expected_on_level << "/"
        << c.expected_small_o << "  " << (c.pass ? "pass" : "FAIL") << "\n";
  out << "overall: " << (report.pass ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace tropspec
