#include "pyracat/exactla/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace pyracat {

namespace {

SparseRow normalize(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, std::move(v));
  }
  std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
  return out;
}

// row - factor * other, both sorted.
SparseRow axpy(const SparseRow& row, const Scalar& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  auto a = row.begin();
  auto b = other.begin();
  while (a != row.end() || b != other.end()) {
    if (b == other.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Scalar v = a->second - factor * b->second;
      if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

SparseRow LinearSystem::reduce(SparseRow row) const {
  while (!row.empty() && row.front().first < n_) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const Scalar factor = row.front().second;
    row = axpy(row, factor, it->second);
  }
  return row;
}

void LinearSystem::add_equation(SparseRow coeffs, const Scalar& rhs) {
  for (const auto& [c, v] : coeffs)
    if (c >= n_) throw std::out_of_range("LinearSystem: column out of range");
  if (sgn(rhs) != 0) coeffs.emplace_back(n_, rhs);
  SparseRow row = reduce(normalize(std::move(coeffs)));
  if (row.empty()) return;
  if (row.front().first == n_) {
    consistent_ = false;
    return;
  }
  const Scalar inv = 1 / row.front().second;
  for (auto& e : row) e.second *= inv;
  const std::size_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
}

void LinearSystem::add_equation(const std::map<std::size_t, Scalar>& coeffs, const Scalar& rhs) {
  add_equation(SparseRow(coeffs.begin(), coeffs.end()), rhs);
}

Vector LinearSystem::back_substitute(const std::vector<std::pair<std::size_t, Scalar>>& fixed,
                                     bool with_rhs) const {
  Vector x(n_);
  for (const auto& [c, v] : fixed) x[c] = v;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const auto& row = it->second;
    Scalar value;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const auto& [c, v] = row[k];
      if (c == n_) {
        if (with_rhs) value += v;
      } else if (sgn(x[c]) != 0) {
        value -= v * x[c];
      }
    }
    x[it->first] = value;
  }
  return x;
}

std::optional<Vector> LinearSystem::solve() const {
  if (!consistent_) return std::nullopt;
  return back_substitute({}, true);
}

std::vector<Vector> LinearSystem::nullspace() const {
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n_; ++f) {
    if (pivots_.count(f)) continue;
    basis.push_back(back_substitute({{f, Scalar(1)}}, false));
  }
  return basis;
}

}  // namespace pyracat
