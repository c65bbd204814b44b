#include "pyracat/index.hpp"

#include <algorithm>
#include <stdexcept>

namespace pyracat {

IndexVector::IndexVector(std::initializer_list<std::int64_t> values) {
  int coord = 1;
  for (auto v : values) {
    if (v != 0) entries_.emplace_back(coord, v);
    ++coord;
  }
}

IndexVector IndexVector::from_dense(const std::vector<std::int64_t>& values) {
  IndexVector out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) out.entries_.emplace_back(static_cast<int>(i) + 1, values[i]);
  return out;
}

IndexVector IndexVector::epsilon(int i) {
  if (i < 1) throw std::invalid_argument("epsilon: coordinate must be >= 1");
  IndexVector out;
  out.entries_.emplace_back(i, 1);
  return out;
}

std::int64_t IndexVector::operator[](int coord) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), coord,
                             [](const Entry& e, int c) { return e.first < c; });
  return (it != entries_.end() && it->first == coord) ? it->second : 0;
}

void IndexVector::set(int coord, std::int64_t value) {
  if (coord < 1) throw std::invalid_argument("IndexVector: coordinate must be >= 1");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), coord,
                             [](const Entry& e, int c) { return e.first < c; });
  if (it != entries_.end() && it->first == coord) {
    if (value == 0)
      entries_.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    entries_.insert(it, Entry{coord, value});
  }
}

std::int64_t IndexVector::height() const {
  std::int64_t h = 0;
  for (const auto& [c, v] : entries_) h += v;
  return h;
}

IndexVector IndexVector::truncate(int k, TruncSide side) const {
  IndexVector out;
  for (const auto& [c, v] : entries_) {
    if (side == TruncSide::low && c <= k) out.entries_.emplace_back(c, v);
    if (side == TruncSide::high && c > k) out.entries_.emplace_back(c - k, v);
  }
  return out;
}

IndexVector IndexVector::shift(int k) const {
  IndexVector out;
  for (const auto& [c, v] : entries_) out.entries_.emplace_back(c + k, v);
  return out;
}

std::vector<std::int64_t> IndexVector::to_dense() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(support_end()), 0);
  for (const auto& [c, v] : entries_) out[static_cast<std::size_t>(c - 1)] = v;
  return out;
}

std::string IndexVector::to_string() const {
  std::string s = "(";
  auto dense = to_dense();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dense[i]);
  }
  return s + ")";
}

IndexVector IndexVector::operator+(const IndexVector& other) const {
  IndexVector out;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      if (auto s = a->second + b->second; s != 0) out.entries_.emplace_back(a->first, s);
      ++a;
      ++b;
    }
  }
  return out;
}

IndexVector IndexVector::operator-() const {
  IndexVector out = *this;
  for (auto& e : out.entries_) e.second = -e.second;
  return out;
}

IndexVector IndexVector::operator-(const IndexVector& other) const { return *this + (-other); }

std::strong_ordering IndexVector::operator<=>(const IndexVector& other) const {
  // First differing coordinate decides; absent entries read as 0.
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first))
      return a->second <=> 0;
    if (a == entries_.end() || b->first < a->first) return 0 <=> b->second;
    if (a->second != b->second) return a->second <=> b->second;
    ++a;
    ++b;
  }
  return std::strong_ordering::equal;
}

}  // namespace pyracat
