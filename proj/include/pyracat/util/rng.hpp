#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>

namespace pyracat {

/// Reproducible trial generator: std::mt19937_64 (whose output sequence the
/// C++ standard fixes) with bounded draws taken as `lo + raw % (hi - lo + 1)`.
/// Standard distributions are avoided because their outputs are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }
  /// Integer uniformly reduced into [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(raw() % span);
  }
  bool coin() { return (raw() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Seed from PYRACAT_SEED when set and parseable, else `fallback`.
inline std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("PYRACAT_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && end != s) return v;
  }
  return fallback;
}

}  // namespace pyracat
