#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace purespec {

// The ring of integers, restricted to ideal-generator arithmetic. The ideal
// nZ is stored by its non-negative generator n; there are no spectra or
// lattices for this backend.
struct SymbolicZ {
  static constexpr const char* label = "Z";
};

struct ZIdeal {
  std::uint64_t generator = 0;

  bool is_whole() const { return generator == 1; }
  std::string to_string() const {
    if (generator == 1) return "Z";
    return std::to_string(generator) + "Z";
  }
  friend bool operator==(ZIdeal, ZIdeal) = default;
};

inline ZIdeal zsum(ZIdeal a, ZIdeal b) { return {std::gcd(a.generator, b.generator)}; }

inline ZIdeal zintersect(ZIdeal a, ZIdeal b) {
  if (a.generator == 0 || b.generator == 0) return {0};
  std::uint64_t g = std::gcd(a.generator, b.generator);
  std::uint64_t q = a.generator / g;
  if (q > std::numeric_limits<std::uint64_t>::max() / b.generator)
    throw InvalidArgument("ideal generator overflow");
  return {q * b.generator};
}

inline ZIdeal zproduct(ZIdeal a, ZIdeal b) {
  if (a.generator != 0 && b.generator > std::numeric_limits<std::uint64_t>::max() / a.generator)
    throw InvalidArgument("ideal generator overflow");
  return {a.generator * b.generator};
}

// Z is a domain: its only pure ideals are 0 and Z.
inline bool is_pure_symz(std::uint64_t n) { return n == 0 || n == 1; }

inline ZIdeal pure_part_symz(std::uint64_t n) { return {n == 1 ? 1u : 0u}; }

inline ZIdeal pure_part_symz(ZIdeal i) { return pure_part_symz(i.generator); }

}  // namespace purespec
