#pragma once

#include <cstdint>

namespace dpv {

/// Arithmetic in F_p for a word-sized prime p. Elements are kept in [0, p).
namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);

/// Multiplicative inverse; throws std::domain_error on zero.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

/// Reduce an arbitrary signed integer into [0, p).
std::uint32_t from_int(long long v, std::uint32_t p);

bool is_prime(std::uint64_t n);

}  // namespace fp
}  // namespace dpv
