#pragma once

#include <cstdint>
#include <string>

namespace agu {

/// Size class of a (word or tree) language.
struct Cardinality {
  enum class Kind { empty, one, finite, infinite };

  Kind kind = Kind::empty;
  /// Exact count for finite languages, saturating at UINT64_MAX.
  std::uint64_t count = 0;

  static Cardinality of_count(std::uint64_t n) {
    if (n == 0) return {Kind::empty, 0};
    if (n == 1) return {Kind::one, 1};
    return {Kind::finite, n};
  }
  static Cardinality infinite() { return {Kind::infinite, 0}; }

  bool is_finite() const { return kind != Kind::infinite; }

  /// "empty", "one", "finite(n)" or "infinite".
  std::string to_string() const {
    switch (kind) {
      case Kind::empty: return "empty";
      case Kind::one: return "one";
      case Kind::finite:
        return "finite(" + (count == UINT64_MAX ? std::string(">=2^64") : std::to_string(count)) + ")";
      case Kind::infinite: return "infinite";
    }
    return "?";
  }

  bool operator==(const Cardinality&) const = default;
};

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

/// Sum of two language sizes (disjoint union).
inline Cardinality operator+(const Cardinality& a, const Cardinality& b) {
  if (!a.is_finite() || !b.is_finite()) return Cardinality::infinite();
  return Cardinality::of_count(saturating_add(a.count, b.count));
}

}  // namespace agu
