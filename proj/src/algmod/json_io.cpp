#include "pyracat/algmod/json_io.hpp"

#include <stdexcept>

#include "pyracat/pyramid/json_io.hpp"

namespace pyracat {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
  throw std::invalid_argument("expected a \"p/q\" string or an integer");
}

Vector vector_from_json(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw std::invalid_argument(std::string(what) + " has wrong length");
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_string(x));
  return out;
}

}  // namespace

Algebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("algebra must be a JSON object");
  if (j.contains("char") && j.at("char") != 0)
    throw std::invalid_argument("only characteristic 0 is supported");
  if (!j.contains("basis") || !j.at("basis").is_array()) throw std::invalid_argument("missing basis");
  std::vector<std::string> basis;
  for (const auto& b : j.at("basis")) {
    if (!b.is_string()) throw std::invalid_argument("basis labels must be strings");
    basis.push_back(b.get<std::string>());
  }
  const std::size_t n = basis.size();
  if (j.contains("dim") && (!j.at("dim").is_number_integer() || j.at("dim").get<std::size_t>() != n))
    throw std::invalid_argument("dim does not match the basis");
  if (!j.contains("unit")) throw std::invalid_argument("missing unit");
  Vector unit = vector_from_json(j.at("unit"), n, "unit");
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> mul;
  if (!j.contains("mul") || !j.at("mul").is_array()) throw std::invalid_argument("missing mul");
  for (const auto& e : j.at("mul")) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("mul entries are [i, j, k, c]");
    for (int t = 0; t < 3; ++t)
      if (!e[t].is_number_integer() || e[t].get<std::int64_t>() < 0)
        throw std::invalid_argument("mul indices must be nonnegative integers");
    mul.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>(), scalar_from_json(e[3]));
  }
  std::vector<Vector> idem;
  if (j.contains("idempotents"))
    for (const auto& e : j.at("idempotents")) idem.push_back(vector_from_json(e, n, "idempotent"));
  return algebra_from_structure_constants(j.value("name", std::string("algebra")), basis, unit, mul, idem);
}

json algebra_to_json(const Algebra& a) {
  json mul = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t jj = 0; jj < a.dim(); ++jj)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (sgn(a.left_mult[i](k, jj)) != 0) mul.push_back({i, jj, k, scalar_to_string(a.left_mult[i](k, jj))});
  json idem = json::array();
  for (const auto& e : a.idempotents) idem.push_back(vector_to_json(e));
  return {{"name", a.name}, {"dim", a.dim()}, {"basis", a.basis}, {"unit", vector_to_json(a.unit)},
          {"mul", mul},     {"idempotents", idem}, {"char", 0}};
}

json bimodule_to_json(const Bimodule& m) {
  json left = json::array(), right = json::array();
  for (const auto& l : m.left) left.push_back(matrix_to_json(l));
  for (const auto& r : m.right) right.push_back(matrix_to_json(r));
  return {{"dim", m.dim}, {"left", left}, {"right", right}};
}

Bimodule bimodule_from_json(const json& j, std::size_t algebra_dim) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("left") || !j.contains("right"))
    throw std::invalid_argument("bimodule needs dim, left and right");
  Bimodule m;
  m.dim = j.at("dim").get<std::size_t>();
  for (const char* side : {"left", "right"}) {
    const auto& arr = j.at(side);
    if (!arr.is_array() || arr.size() != algebra_dim) throw std::invalid_argument("one action matrix per basis element");
    auto& dest = std::string(side) == "left" ? m.left : m.right;
    for (const auto& mat : arr) dest.push_back(matrix_from_json(mat, m.dim, m.dim));
  }
  return m;
}

}  // namespace pyracat
