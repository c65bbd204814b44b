#include "pyracat/pyramid/json_io.hpp"

#include <stdexcept>

namespace pyracat {

using nlohmann::json;

namespace {

IndexVector index_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("index must be an integer array");
  std::vector<std::int64_t> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("index entries must be integers");
    v.push_back(e.get<std::int64_t>());
  }
  return IndexVector::from_dense(v);
}

std::size_t rank_from_json(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw std::invalid_argument("object must be a nonnegative rank");
  return j.get<std::size_t>();
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field ") + name);
  return j.at(name);
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(scalar_to_string(m(i, k)));
    rows.push_back(std::move(r));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw std::invalid_argument("matrix row count mismatch");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix column count mismatch");
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& e = j[i][k];
      if (e.is_string()) {
        m(i, k) = parse_scalar(e.get<std::string>());
      } else if (e.is_number_integer()) {
        m(i, k) = static_cast<long>(e.get<std::int64_t>());
      } else {
        throw std::invalid_argument("matrix entries must be \"p/q\" strings or integers");
      }
    }
  }
  return m;
}

json pyramid_to_json(const Pyramid<MatCat>& p) {
  json cells = json::array();
  for (const auto& [a, x] : p.cells) cells.push_back({{"index", a.to_dense()}, {"object", x}});
  json diffs = json::array();
  for (const auto& [key, m] : p.diffs)
    diffs.push_back({{"at", key.first.to_dense()}, {"dir", key.second}, {"mor", matrix_to_json(m)}});
  return {{"width", p.width}, {"cells", cells}, {"diffs", diffs}};
}

Pyramid<MatCat> pyramid_from_json(const json& j) {
  Pyramid<MatCat> p;
  const auto& w = field(j, "width");
  if (!w.is_number_integer() || w.get<std::int64_t>() < 0) throw std::invalid_argument("width must be >= 0");
  p.width = w.get<std::size_t>();
  for (const auto& c : field(j, "cells")) {
    const auto a = index_from_json(field(c, "index"));
    if (!p.cells.emplace(a, rank_from_json(field(c, "object"))).second)
      throw std::invalid_argument("duplicate cell " + a.to_string());
  }
  if (j.contains("diffs"))
    for (const auto& d : j.at("diffs")) {
      const auto a = index_from_json(field(d, "at"));
      const auto& dir = field(d, "dir");
      if (!dir.is_number_integer()) throw std::invalid_argument("dir must be an integer");
      const int i = dir.get<int>();
      if (i < 1) throw std::invalid_argument("dir must be >= 1");
      const auto* x = p.cell(a);
      const auto* y = p.cell(a + IndexVector::epsilon(i));
      if (!x || !y) throw std::invalid_argument("differential at " + a.to_string() + " between missing cells");
      p.diffs.emplace(std::pair{a, i}, matrix_from_json(field(d, "mor"), *y, *x));
    }
  return p;
}

json complex_to_json(const Complex<MatCat>& c) {
  json objects = json::array();
  for (const auto& [k, x] : c.objects) objects.push_back({{"degree", k}, {"object", x}});
  json diffs = json::array();
  for (const auto& [k, m] : c.diffs) diffs.push_back({{"degree", k}, {"mor", matrix_to_json(m)}});
  return {{"objects", objects}, {"diffs", diffs}};
}

Complex<MatCat> complex_from_json(const json& j) {
  Complex<MatCat> c;
  for (const auto& o : field(j, "objects")) c.objects[field(o, "degree").get<std::int64_t>()] = rank_from_json(field(o, "object"));
  if (j.contains("diffs"))
    for (const auto& d : j.at("diffs")) {
      const auto k = field(d, "degree").get<std::int64_t>();
      const std::size_t src = c.objects.count(k) ? c.objects.at(k) : 0;
      const std::size_t tgt = c.objects.count(k + 1) ? c.objects.at(k + 1) : 0;
      c.diffs[k] = matrix_from_json(field(d, "mor"), tgt, src);
    }
  return c;
}

}  // namespace pyracat
