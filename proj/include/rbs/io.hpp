#pragma once

#include <json.hpp>
#include <string>

#include "rbs/algebra.hpp"
#include "rbs/cohomology.hpp"
#include "rbs/deformation.hpp"
#include "rbs/rota_baxter.hpp"

// JSON readers and writers for the file formats consumed by the command
// line front end.  Readers are strict: unknown fields, wrong types, bad
// indices, and shape mismatches all raise input_error with a message that
// names the offending location.  Writers emit the canonical form (sorted
// keys, rationals as "p/q" strings), so serialize(parse(x)) is
// byte-identical for canonical inputs.
namespace rbs::io {

using json = nlohmann::json;

json load_file(const std::string& path);

LeibnizAlgebra<Rational> algebra_from_json(const json& j, const std::string& ctx);
Representation<Rational> representation_from_json(const json& j, std::size_t dimg, const std::string& ctx);
RbsPair<Rational> pair_from_json(const json& j, const std::string& ctx);
BilinearForm<Rational> form_from_json(const json& j, const std::string& ctx);
Dialgebra<Rational> dialgebra_from_json(const json& j, const std::string& ctx);
TruncatedDeformation<Rational> deformation_from_json(const json& j, const std::string& ctx);
Matrix<Rational> endomap_from_json(const json& j, const std::string& ctx);

Rational rational_from_json(const json& j, const std::string& ctx);
Matrix<Rational> matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& ctx);

json matrix_to_json(const Matrix<Rational>& m);
json matrix_to_json(const Matrix<Fp>& m);
json vec_to_json(const Vec<Rational>& v);
json vec_to_json(const Vec<Fp>& v);
json tensor_to_json(const Tensor<Rational>& t);
json algebra_to_json(const LeibnizAlgebra<Rational>& a);
json pair_to_json(const RbsPair<Rational>& p);
json pair_to_json(const RbsPair<Fp>& p);
json cochain_to_json(const Cochain<Rational>& c);
json witness_to_json(const AxiomWitness<Rational>& w);
json witness_to_json(const AxiomWitness<Fp>& w);

}  // namespace rbs::io
