#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sidon2d {

/// An element of GF(p^k) in polynomial representation, constant term first.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Returns (p, k) when q = p^k for a prime p, k >= 1.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// GF(p^k) with exp/log tables.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree k (coefficient vectors compared constant term first), and the
/// tables are generated by the smallest primitive element in the same order,
/// so two fields built from the same (p, k) are identical.
///
/// Internally an element is the integer c0 + c1 p + ... + c_{k-1} p^{k-1}.
class Field {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = 1u << 20;

  static Field make(std::uint32_t p, std::uint32_t k,
                    std::uint64_t max_order = kDefaultMaxOrder);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// Monic modulus, k + 1 coefficients, constant term first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The element with constant term c mod p.
  FieldElement constant(std::uint64_t c) const;
  /// Elements in canonical order (lexicographic on coefficient vectors).
  std::vector<FieldElement> elements() const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, std::int64_t e) const;

  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(const FieldElement& a) const;
  bool is_primitive(const FieldElement& a) const;
  /// The primitive element the tables are built from.
  FieldElement primitive() const { return decode(exp_[1 % exp_.size()]); }
  /// All primitive elements, ascending by log.
  std::vector<FieldElement> primitive_elements() const;

  /// log of x to the table base, in [0, q-2].
  std::uint32_t discrete_log(const FieldElement& x) const;
  /// log of x to an arbitrary primitive base.
  std::uint32_t discrete_log(const FieldElement& x, const FieldElement& base) const;
  /// primitive()^e.
  FieldElement exp(std::int64_t e) const;

  /// Raw table access in the packed integer encoding.
  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }

  std::uint32_t encode(const FieldElement& a) const;
  FieldElement decode(std::uint32_t packed) const;

 private:
  Field() = default;

  std::uint32_t add_packed(std::uint32_t a, std::uint32_t b, bool subtract) const;
  void check(const FieldElement& a) const;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, size q-1
  std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
};

}  // namespace sidon2d
