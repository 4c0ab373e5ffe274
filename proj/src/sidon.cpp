#include "sidon2d/sidon.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sidon2d/numeric.hpp"

namespace sidon2d {
namespace {

std::pair<std::uint32_t, std::uint32_t> require_prime_power(std::uint64_t q) {
  const auto pk = prime_power(q);
  if (!pk) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return *pk;
}

// Elements x with x^q = x, i.e. the subfield of order q.
std::vector<FieldElement> subfield(const Field& f, std::uint64_t q) {
  std::vector<FieldElement> out;
  for (const auto& x : f.elements()) {
    if (f.pow(x, static_cast<std::int64_t>(q)) == x) out.push_back(x);
  }
  if (out.size() != q) throw std::logic_error("subfield of order " + std::to_string(q) + " not found");
  return out;
}

}  // namespace

SidonSequence construct_etzion(const Field& field, const FieldElement& alpha) {
  const std::int64_t q = field.order();
  if (q < 3) throw std::invalid_argument("construction needs q >= 3");
  if (!field.is_primitive(alpha)) throw std::invalid_argument("alpha is not a primitive element");

  std::vector<std::int64_t> moduli{q - 1};
  moduli.insert(moduli.end(), field.degree(), field.characteristic());
  SidonSequence s{GroupSpec(std::move(moduli)), {}};
  FieldElement power = field.one();
  for (std::int64_t i = 0; i <= q - 2; ++i) {
    GroupElement e{{i}};
    e.residues.insert(e.residues.end(), power.coeffs.begin(), power.coeffs.end());
    s.elements.push_back(std::move(e));
    power = field.mul(power, alpha);
  }
  return s;
}

SidonSequence construct_etzion(std::uint64_t q) {
  const auto [p, k] = require_prime_power(q);
  const Field f = Field::make(p, k);
  return construct_etzion(f, f.primitive());
}

SidonSequence construct_ruzsa(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p < 3) throw std::invalid_argument("construction needs p >= 3");
  const Field f = Field::make(static_cast<std::uint32_t>(p), 1);
  const SidonSequence pairs = construct_etzion(f, f.primitive());
  return crt_flatten(pairs.group).apply(pairs);
}

SidonSequence construct_bose(std::uint64_t q) {
  const auto [p, k] = require_prime_power(q);
  const Field f = Field::make(p, 2 * k);
  const FieldElement beta = f.primitive();
  const auto n = static_cast<std::int64_t>(q * q - 1);
  std::vector<std::int64_t> logs;
  for (const auto& c : subfield(f, q)) logs.push_back(f.discrete_log(f.add(beta, c)) % n);
  std::sort(logs.begin(), logs.end());
  return SidonSequence::cyclic(n, logs);
}

SidonSequence construct_singer(std::uint64_t q) {
  const auto [p, k] = require_prime_power(q);
  const Field f = Field::make(p, 3 * k);
  const FieldElement beta = f.primitive();
  const auto n = static_cast<std::int64_t>(q * q + q + 1);
  const auto sub = subfield(f, q);
  std::vector<std::int64_t> logs;
  for (const auto& a : sub) {
    for (const auto& b : sub) {
      const FieldElement x = f.add(a, f.mul(b, beta));
      if (x == f.zero()) continue;
      logs.push_back(f.discrete_log(x) % n);
    }
  }
  std::sort(logs.begin(), logs.end());
  logs.erase(std::unique(logs.begin(), logs.end()), logs.end());
  if (logs.size() != q + 1) throw std::logic_error("line through the origin did not give q+1 residues");
  return SidonSequence::cyclic(n, logs);
}

MaxSidonResult max_sidon_size(const GroupSpec& g, std::int64_t cap) {
  const std::int64_t n = g.order();
  if (n > cap) {
    throw std::invalid_argument("group order " + std::to_string(n) + " exceeds the search cap " + std::to_string(cap));
  }
  SubtractionTable sub(n, std::vector<std::int32_t>(n));
  std::vector<GroupElement> elems;
  for (std::int64_t i = 0; i < n; ++i) elems.push_back(g.element(i));
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      sub[a][b] = static_cast<std::int32_t>(g.index(group_sub(g, elems[a], elems[b])));
    }
  }
  const auto found = max_sidon_by_table(sub);
  MaxSidonResult result{found.max, {}};
  for (std::int32_t i : found.witness) result.witness.push_back(elems[i]);
  return result;
}

std::vector<GroupSpec> abelian_groups_of_order(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  if (n == 1) throw std::invalid_argument("the trivial group has no cyclic factors of order >= 2");
  std::vector<GroupSpec> out;
  std::vector<std::int64_t> factors;
  auto rec = [&](auto&& self, std::int64_t rest, std::int64_t min_factor) -> void {
    if (rest == 1) {
      out.emplace_back(factors);
      return;
    }
    for (std::int64_t f = min_factor; f <= rest; ++f) {
      if (rest % f != 0) continue;
      factors.push_back(f);
      self(self, rest / f, f);
      factors.pop_back();
    }
  };
  rec(rec, n, 2);
  return out;
}

std::string_view to_string(OptimalityVerdict v) {
  switch (v) {
    case OptimalityVerdict::optimal: return "optimal";
    case OptimalityVerdict::optimal_by_bound: return "optimal-by-bound";
    case OptimalityVerdict::not_optimal: return "not-optimal";
    case OptimalityVerdict::unknown: return "unknown";
  }
  return "unknown";
}

OptimalityReport check_optimality(const SidonSequence& s, std::int64_t cap) {
  if (verify_sidon(s)) throw std::invalid_argument("sequence is not a Sidon sequence");
  OptimalityReport r;
  r.group_order = s.group.order();
  r.size = static_cast<std::int64_t>(s.size());
  r.upper_bound = sidon_counting_bound(r.group_order);
  if (r.group_order >= 2 && r.group_order <= cap) {
    std::int64_t best = 0;
    for (const auto& g : abelian_groups_of_order(r.group_order)) {
      best = std::max(best, max_sidon_size(g, cap).max);
      if (best == r.upper_bound) break;
    }
    r.brute_force_max = best;
  }
  if (r.size == r.upper_bound) {
    r.verdict = OptimalityVerdict::optimal_by_bound;
  } else if (r.brute_force_max) {
    r.verdict = r.size >= *r.brute_force_max ? OptimalityVerdict::optimal : OptimalityVerdict::not_optimal;
  } else {
    r.verdict = OptimalityVerdict::unknown;
  }
  return r;
}

}  // namespace sidon2d
