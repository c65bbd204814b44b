#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace pyracat {

enum class TruncSide { low, high };

/// A finitely supported integer vector (a_1, a_2, ...) with 1-based coordinates.
///
/// Stored sparsely as (coordinate, value) pairs sorted by coordinate with no
/// zero values, so structural equality coincides with equality of vectors.
class IndexVector {
 public:
  using Entry = std::pair<int, std::int64_t>;

  IndexVector() = default;
  /// Dense constructor: values[0] is coordinate 1.
  IndexVector(std::initializer_list<std::int64_t> values);
  static IndexVector from_dense(const std::vector<std::int64_t>& values);

  /// The i-th standard basis vector; throws std::invalid_argument for i < 1.
  static IndexVector epsilon(int i);

  std::int64_t operator[](int coord) const;
  void set(int coord, std::int64_t value);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  /// Largest coordinate with a nonzero entry, 0 for the zero vector.
  int support_end() const { return entries_.empty() ? 0 : entries_.back().first; }

  std::int64_t height() const;
  IndexVector truncate(int k, TruncSide side) const;
  /// Reindex coordinate i to i + k.
  IndexVector shift(int k) const;

  /// Dense form trimmed of trailing zeros.
  std::vector<std::int64_t> to_dense() const;
  std::string to_string() const;

  IndexVector operator+(const IndexVector& other) const;
  IndexVector operator-(const IndexVector& other) const;
  IndexVector operator-() const;

  bool operator==(const IndexVector& other) const = default;
  /// Lexicographic order on (a_1, a_2, ...).
  std::strong_ordering operator<=>(const IndexVector& other) const;

 private:
  std::vector<Entry> entries_;
};

inline IndexVector epsilon(int i) { return IndexVector::epsilon(i); }
inline std::int64_t height(const IndexVector& a) { return a.height(); }
inline IndexVector truncate(const IndexVector& a, int k, TruncSide side) {
  return a.truncate(k, side);
}

}  // namespace pyracat
