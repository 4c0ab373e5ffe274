#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sidon2d {

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Result in [0, |m|).
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  if (m < 0) m = -m;
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

struct ExtendedGcd {
  std::int64_t g, x, y;  // a*x + b*y = g >= 0
};

constexpr ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  const auto e = extended_gcd(floor_mod(a, m), m);
  if (e.g != 1) throw std::invalid_argument("value is not invertible modulo " + std::to_string(m));
  return floor_mod(e.x, m);
}

/// Distinct prime factors, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

}  // namespace sidon2d
