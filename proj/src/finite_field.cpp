#include "sidon2d/finite_field.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "sidon2d/numeric.hpp"

namespace sidon2d {
namespace {

using Poly = std::vector<std::uint64_t>;  // constant term first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// a mod f, f monic or not (leading coefficient inverted).
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod_prime(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test for a monic f of degree k.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  // xp[j] = x^(p^j) mod f
  std::vector<Poly> xp(k + 1);
  xp[0] = poly_mod(Poly{0, 1}, f, p);
  for (std::size_t j = 1; j <= k; ++j) xp[j] = poly_powmod(xp[j - 1], p, f, p);
  if (poly_sub(xp[k], xp[0], p).size() != 0) return false;
  for (std::uint64_t r : prime_factors(k)) {
    Poly g = poly_gcd(f, poly_sub(xp[k / r], xp[0], p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Digits of the i-th vector in lexicographic order (c0 most significant).
std::vector<std::uint32_t> lex_digits(std::uint64_t index, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> c(k, 0);
  for (std::uint32_t i = k; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return c;
}

Poly to_poly(const std::vector<std::uint32_t>& coeffs) {
  Poly a(coeffs.begin(), coeffs.end());
  trim(a);
  return a;
}

std::uint32_t pack(const Poly& a, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  const std::uint64_t p = factors.front();
  std::uint32_t k = 0;
  while (q > 1) {
    q /= p;
    ++k;
  }
  return std::make_pair(static_cast<std::uint32_t>(p), k);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t k, std::uint64_t max_order) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > max_order) {
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(k) +
                                  " exceeds the limit " + std::to_string(max_order));
    }
  }

  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint32_t>(q);

  Poly modulus;
  // Candidates with a zero constant term are divisible by x.
  const std::uint64_t first_candidate = k == 1 ? 0 : q / p;
  for (std::uint64_t index = first_candidate; index < q; ++index) {
    const auto digits = lex_digits(index, p, k);
    Poly candidate(digits.begin(), digits.end());
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) {
      modulus = std::move(candidate);
      break;
    }
  }
  if (modulus.empty()) throw std::logic_error("no irreducible polynomial found");
  f.modulus_.assign(modulus.begin(), modulus.end());

  const std::uint64_t group = q - 1;
  const auto divisors = prime_factors(group);
  Poly generator;
  for (std::uint64_t index = 0; index < q && generator.empty(); ++index) {
    Poly a = to_poly(lex_digits(index, p, k));
    if (a.empty()) continue;
    bool primitive = true;
    for (std::uint64_t r : divisors) {
      if (poly_powmod(a, group / r, modulus, p) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = std::move(a);
  }

  f.exp_.resize(group);
  f.log_.assign(q, 0);
  Poly cur{1};
  for (std::uint64_t i = 0; i < group; ++i) {
    const std::uint32_t packed = pack(cur, p);
    f.exp_[i] = packed;
    f.log_[packed] = static_cast<std::uint32_t>(i);
    cur = poly_mulmod(generator, cur, modulus, p);
  }
  return f;
}

void Field::check(const FieldElement& a) const {
  if (a.coeffs.size() != k_) {
    throw std::invalid_argument("field element has " + std::to_string(a.coeffs.size()) +
                                " coefficients, expected " + std::to_string(k_));
  }
  for (std::uint32_t c : a.coeffs) {
    if (c >= p_) throw std::invalid_argument("field element coefficient out of range");
  }
}

std::uint32_t Field::encode(const FieldElement& a) const {
  check(a);
  std::uint64_t v = 0;
  for (std::size_t i = k_; i-- > 0;) v = v * p_ + a.coeffs[i];
  return static_cast<std::uint32_t>(v);
}

FieldElement Field::decode(std::uint32_t packed) const {
  FieldElement a;
  a.coeffs.resize(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    a.coeffs[i] = packed % p_;
    packed /= p_;
  }
  return a;
}

FieldElement Field::zero() const { return decode(0); }
FieldElement Field::one() const { return decode(1); }
FieldElement Field::constant(std::uint64_t c) const { return decode(static_cast<std::uint32_t>(c % p_)); }

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(FieldElement{lex_digits(i, p_, k_)});
  return out;
}

std::uint32_t Field::add_packed(std::uint32_t a, std::uint32_t b, bool subtract) const {
  std::uint32_t result = 0, place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t x = a % p_, y = b % p_;
    const std::uint32_t digit = subtract ? (x + p_ - y) % p_ : (x + y) % p_;
    result += digit * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return result;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  return decode(add_packed(encode(a), encode(b), false));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  return decode(add_packed(encode(a), encode(b), true));
}

FieldElement Field::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  const std::uint32_t x = encode(a), y = encode(b);
  if (x == 0 || y == 0) return zero();
  return decode(exp_[(static_cast<std::uint64_t>(log_[x]) + log_[y]) % (q_ - 1)]);
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
  const std::uint32_t x = encode(a), y = encode(b);
  if (y == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
  if (x == 0) return zero();
  const std::uint64_t n = q_ - 1;
  return decode(exp_[(log_[x] + n - log_[y]) % n]);
}

FieldElement Field::pow(const FieldElement& a, std::int64_t e) const {
  const std::uint32_t x = encode(a);
  if (x == 0) {
    if (e < 0) throw std::domain_error("zero raised to a negative power");
    return e == 0 ? one() : zero();
  }
  const std::int64_t n = q_ - 1;
  const std::int64_t r = floor_mod(static_cast<std::int64_t>(log_[x]) * floor_mod(e, n), n);
  return decode(exp_[static_cast<std::size_t>(r)]);
}

FieldElement Field::exp(std::int64_t e) const {
  return decode(exp_[static_cast<std::size_t>(floor_mod(e, static_cast<std::int64_t>(q_ - 1)))]);
}

std::uint32_t Field::multiplicative_order(const FieldElement& a) const {
  const std::uint32_t x = encode(a);
  if (x == 0) throw std::domain_error("zero has no multiplicative order");
  const std::uint64_t n = q_ - 1;
  return static_cast<std::uint32_t>(n / std::gcd<std::uint64_t>(log_[x], n));
}

bool Field::is_primitive(const FieldElement& a) const {
  return encode(a) != 0 && multiplicative_order(a) == q_ - 1;
}

std::vector<FieldElement> Field::primitive_elements() const {
  std::vector<FieldElement> out;
  const std::uint64_t n = q_ - 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (std::gcd(i, n) == 1 || n == 1) out.push_back(decode(exp_[i]));
  }
  return out;
}

std::uint32_t Field::discrete_log(const FieldElement& x) const {
  const std::uint32_t v = encode(x);
  if (v == 0) throw std::domain_error("discrete log of zero");
  return log_[v];
}

std::uint32_t Field::discrete_log(const FieldElement& x, const FieldElement& base) const {
  if (!is_primitive(base)) throw std::invalid_argument("logarithm base is not primitive");
  const std::int64_t n = q_ - 1;
  if (n == 1) return 0;
  const std::int64_t lx = discrete_log(x);
  const std::int64_t lb = discrete_log(base);
  return static_cast<std::uint32_t>(floor_mod(lx * mod_inverse(lb, n), n));
}

}  // namespace sidon2d
