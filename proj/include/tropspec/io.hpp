#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tropspec/asymptotics.hpp"
#include "tropspec/critical_values.hpp"
#include "tropspec/tropical_poly.hpp"
#include "tropspec/verify.hpp"

namespace tropspec {

using Json = nlohmann::json;

// Scalars serialize as "inf", a plain integer, or "p/q" in lowest terms.
Json trop_scalar_to_json(const TropScalar& s);
TropScalar trop_scalar_from_json(const Json& j);

// {"n": int, "entries": [[row entries]]}
Json trop_matrix_to_json(const TropMatrix& a);
TropMatrix trop_matrix_from_json(const Json& j);

// {"coeffs": [lowest degree first]}
Json trop_poly_to_json(const TropPoly& p);
TropPoly trop_poly_from_json(const Json& j);

// {"n": int, "entries": [{"i","j" 1-based, "coeff": [re,im], "exp": ...}]};
// omitted entries default to "inf".
Json perturbed_to_json(const PerturbedMatrix& p);
PerturbedMatrix perturbed_from_json(const Json& j);

// {"m": [...], "q": [...], "b": [[[re,im], ...] rows]}
std::pair<NilSpec, CMatrix> nil_problem_from_json(const Json& j);

// {"coeffs": [{"coeff": [re,im], "exp": ...} lowest degree first]}
std::vector<FirstOrderCoeff> first_order_from_json(const Json& j);

Json branches_to_json(const std::vector<Branch>& branches);
Json eig_asymptotics_to_json(const EigAsymptotics& asym);
Json eigvec_to_json(const EigvecAsymptotics& vec);
Json critical_to_json(const CriticalDecomposition& dec,
                      const std::vector<bool>& covers);
Json generic_exponents_to_json(const GenericExponents& ge);
Json verification_to_json(const VerificationReport& report);

std::string digraph_to_dot(const Digraph& g, const std::string& name);

// "k,coeff" rows of the Newton polygon followed by "root,multiplicity" rows
std::string newton_polygon_csv(const TropPoly& p);
// "branch,log10_eps,log10_modulus" rows
std::string verification_csv(const VerificationReport& report);

std::string critical_table(const CriticalDecomposition& dec,
                           const std::vector<bool>& covers);
std::string verification_table(const VerificationReport& report);

}  // namespace tropspec
