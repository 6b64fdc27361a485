#include "rbs/io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>

namespace rbs::io {

namespace {

[[noreturn]] void fail(const std::string& ctx, const std::string& what) {
  throw input_error(ctx + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object()) fail(ctx, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ctx, std::string("missing field '") + key + "'");
  return *it;
}

void strict_fields(const json& j, std::initializer_list<const char*> keys, const std::string& ctx) {
  if (!j.is_object()) fail(ctx, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) fail(ctx, "unknown field '" + it.key() + "'");
}

std::size_t need_count(const json& j, const std::string& ctx) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(ctx, "expected a nonnegative integer");
  long long v = j.get<long long>();
  if (v < 0) fail(ctx, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::size_t need_index(const json& j, std::size_t bound, const std::string& ctx) {
  std::size_t v = need_count(j, ctx);
  if (v >= bound) fail(ctx, "index " + std::to_string(v) + " out of range for dimension " + std::to_string(bound));
  return v;
}

// Shared reader for the {i, j, k, c} structure-constant lists used by
// algebra and dialgebra files.
Tensor<Rational> constants_from_json(const json& j, std::size_t dim, const std::string& ctx) {
  Tensor<Rational> t({dim, dim, dim});
  if (!j.is_array()) fail(ctx, "expected an array of {i,j,k,c} entries");
  for (std::size_t n = 0; n < j.size(); ++n) {
    const std::string ectx = ctx + "[" + std::to_string(n) + "]";
    const json& e = j[n];
    strict_fields(e, {"i", "j", "k", "c"}, ectx);
    std::size_t i = need_index(need(e, "i", ectx), dim, ectx + ".i");
    std::size_t jj = need_index(need(e, "j", ectx), dim, ectx + ".j");
    std::size_t k = need_index(need(e, "k", ectx), dim, ectx + ".k");
    t.at({i, jj, k}) = t.at({i, jj, k}) + rational_from_json(need(e, "c", ectx), ectx + ".c");
  }
  return t;
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error(path + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
  return j;
}

Rational rational_from_json(const json& j, const std::string& ctx) {
  if (j.is_string()) {
    try {
      return rational_from_string(j.get<std::string>());
    } catch (const input_error& e) {
      fail(ctx, e.what());
    }
  }
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(j.get<long long>());
  fail(ctx, "expected a rational as a \"p/q\" string or an integer");
}

Matrix<Rational> matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& ctx) {
  if (!j.is_array() || j.size() != rows)
    fail(ctx, "expected a matrix with " + std::to_string(rows) + " rows");
  Matrix<Rational> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string rctx = ctx + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != cols)
      fail(rctx, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rational_from_json(row[c], rctx + "[" + std::to_string(c) + "]");
  }
  return m;
}

LeibnizAlgebra<Rational> algebra_from_json(const json& j, const std::string& ctx) {
  strict_fields(j, {"dim", "bracket"}, ctx);
  std::size_t dim = need_count(need(j, "dim", ctx), ctx + ".dim");
  if (dim == 0) fail(ctx + ".dim", "dimension must be at least 1");
  LeibnizAlgebra<Rational> a(dim);
  a.c = constants_from_json(need(j, "bracket", ctx), dim, ctx + ".bracket");
  return a;
}

Representation<Rational> representation_from_json(const json& j, std::size_t dimg, const std::string& ctx) {
  strict_fields(j, {"dimV", "rhoL", "rhoR"}, ctx);
  std::size_t dv = need_count(need(j, "dimV", ctx), ctx + ".dimV");
  if (dv == 0) fail(ctx + ".dimV", "dimension must be at least 1");
  Representation<Rational> rep;
  rep.dimV = dv;
  for (const char* name : {"rhoL", "rhoR"}) {
    const json& arr = need(j, name, ctx);
    const std::string actx = ctx + "." + name;
    if (!arr.is_array() || arr.size() != dimg)
      fail(actx, "expected one matrix per algebra basis vector (" + std::to_string(dimg) + ")");
    auto& dst = std::string(name) == "rhoL" ? rep.rhoL : rep.rhoR;
    for (std::size_t i = 0; i < dimg; ++i)
      dst.push_back(matrix_from_json(arr[i], dv, dv, actx + "[" + std::to_string(i) + "]"));
  }
  return rep;
}

RbsPair<Rational> pair_from_json(const json& j, const std::string& ctx) {
  strict_fields(j, {"R", "S"}, ctx);
  const json& rj = need(j, "R", ctx);
  if (!rj.is_array() || rj.empty() || !rj[0].is_array()) fail(ctx + ".R", "expected a nonempty matrix");
  std::size_t rows = rj.size(), cols = rj[0].size();
  RbsPair<Rational> p;
  p.R = matrix_from_json(rj, rows, cols, ctx + ".R");
  p.S = matrix_from_json(need(j, "S", ctx), rows, cols, ctx + ".S");
  return p;
}

BilinearForm<Rational> form_from_json(const json& j, const std::string& ctx) {
  strict_fields(j, {"omega"}, ctx);
  const json& oj = need(j, "omega", ctx);
  if (!oj.is_array() || oj.empty()) fail(ctx + ".omega", "expected a nonempty square matrix");
  std::size_t n = oj.size();
  BilinearForm<Rational> f;
  f.dim = n;
  f.omega = matrix_from_json(oj, n, n, ctx + ".omega");
  return f;
}

Dialgebra<Rational> dialgebra_from_json(const json& j, const std::string& ctx) {
  strict_fields(j, {"dim", "left", "right"}, ctx);
  std::size_t dim = need_count(need(j, "dim", ctx), ctx + ".dim");
  if (dim == 0) fail(ctx + ".dim", "dimension must be at least 1");
  Dialgebra<Rational> d(dim);
  d.left = constants_from_json(need(j, "left", ctx), dim, ctx + ".left");
  d.right = constants_from_json(need(j, "right", ctx), dim, ctx + ".right");
  return d;
}

TruncatedDeformation<Rational> deformation_from_json(const json& j, const std::string& ctx) {
  strict_fields(j, {"order", "coeffs"}, ctx);
  std::size_t order = need_count(need(j, "order", ctx), ctx + ".order");
  const json& cs = need(j, "coeffs", ctx);
  if (!cs.is_array() || cs.size() != order + 1)
    fail(ctx + ".coeffs", "expected " + std::to_string(order + 1) + " coefficient pairs for order " +
                              std::to_string(order));
  std::vector<RbsPair<Rational>> coeffs;
  for (std::size_t n = 0; n < cs.size(); ++n)
    coeffs.push_back(pair_from_json(cs[n], ctx + ".coeffs[" + std::to_string(n) + "]"));
  return TruncatedDeformation<Rational>(std::move(coeffs));
}

Matrix<Rational> endomap_from_json(const json& j, const std::string& ctx) {
  strict_fields(j, {"matrix"}, ctx);
  const json& mj = need(j, "matrix", ctx);
  if (!mj.is_array() || mj.empty() || !mj[0].is_array()) fail(ctx + ".matrix", "expected a nonempty matrix");
  return matrix_from_json(mj, mj.size(), mj[0].size(), ctx + ".matrix");
}

json matrix_to_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const Matrix<Fp>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vec_to_json(const Vec<Rational>& v) {
  json out = json::array();
  for (const Rational& x : v) out.push_back(rational_to_string(x));
  return out;
}

json vec_to_json(const Vec<Fp>& v) {
  json out = json::array();
  for (const Fp& x : v) out.push_back(scalar_to_string(x));
  return out;
}

namespace {

json tensor_slice_to_json(const Tensor<Rational>& t, std::vector<std::size_t>& idx, std::size_t axis) {
  json out = json::array();
  if (axis + 1 == t.shape().size()) {
    for (std::size_t v = 0; v < t.shape()[axis]; ++v) {
      idx[axis] = v;
      out.push_back(rational_to_string(t.at(idx)));
    }
    return out;
  }
  for (std::size_t v = 0; v < t.shape()[axis]; ++v) {
    idx[axis] = v;
    out.push_back(tensor_slice_to_json(t, idx, axis + 1));
  }
  return out;
}

}  // namespace

json tensor_to_json(const Tensor<Rational>& t) {
  std::vector<std::size_t> idx(t.shape().size(), 0);
  return tensor_slice_to_json(t, idx, 0);
}

json algebra_to_json(const LeibnizAlgebra<Rational>& a) {
  json entries = json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t jj = 0; jj < a.dim; ++jj)
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Rational& c = a.cst(i, jj, k);
        if (is_zero(c)) continue;
        entries.push_back({{"i", i}, {"j", jj}, {"k", k}, {"c", rational_to_string(c)}});
      }
  return {{"dim", a.dim}, {"bracket", std::move(entries)}};
}

json pair_to_json(const RbsPair<Rational>& p) {
  return {{"R", matrix_to_json(p.R)}, {"S", matrix_to_json(p.S)}};
}

json pair_to_json(const RbsPair<Fp>& p) {
  return {{"R", matrix_to_json(p.R)}, {"S", matrix_to_json(p.S)}};
}

json cochain_to_json(const Cochain<Rational>& c) {
  return {{"arity", c.arity}, {"P", tensor_to_json(c.P)}, {"Q", tensor_to_json(c.Q)}};
}

json witness_to_json(const AxiomWitness<Rational>& w) {
  return {{"indices", w.indices}, {"identity", w.identity}, {"residual", vec_to_json(w.residual)}};
}

json witness_to_json(const AxiomWitness<Fp>& w) {
  return {{"indices", w.indices}, {"identity", w.identity}, {"residual", vec_to_json(w.residual)}};
}

}  // namespace rbs::io
