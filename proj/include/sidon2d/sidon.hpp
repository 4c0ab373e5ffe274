#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sidon2d/finite_field.hpp"
#include "sidon2d/group.hpp"
#include "sidon2d/search.hpp"

namespace sidon2d {

/// {(i, alpha^i) : 0 <= i <= q-2} over Z_{q-1} x (Z_p)^k. The trailing k
/// residues are the coefficient vector of alpha^i.
SidonSequence construct_etzion(const Field& field, const FieldElement& alpha);
/// Uses the field's canonical primitive element.
SidonSequence construct_etzion(std::uint64_t q);

/// The image of construct_etzion(p, g) in Z_{p(p-1)}, g the smallest
/// primitive root mod p.
SidonSequence construct_ruzsa(std::uint64_t p);

/// q elements of Z_{q^2-1}: logs of beta + c, c in GF(q), beta primitive in
/// GF(q^2).
SidonSequence construct_bose(std::uint64_t q);

/// q+1 elements of Z_{q^2+q+1}: logs of the nonzero points of span{1, beta}
/// in GF(q^3), reduced mod q^2+q+1. A perfect difference set.
SidonSequence construct_singer(std::uint64_t q);

inline constexpr std::int64_t kDefaultCyclicSearchCap = 60;
inline constexpr std::int64_t kDefaultAllGroupsSearchCap = 40;

struct MaxSidonResult {
  std::int64_t max = 0;
  std::vector<GroupElement> witness;
};

/// Exact maximum Sidon set size over g by backtracking (see max_sidon_by_table).
MaxSidonResult max_sidon_size(const GroupSpec& g, std::int64_t cap = kDefaultCyclicSearchCap);

/// Every abelian group of order n as a nondecreasing list of cyclic factors.
/// Isomorphic duplicates (Z_6 and Z_2 x Z_3) are both listed.
std::vector<GroupSpec> abelian_groups_of_order(std::int64_t n);

enum class OptimalityVerdict { optimal, optimal_by_bound, not_optimal, unknown };

std::string_view to_string(OptimalityVerdict v);

struct OptimalityReport {
  std::int64_t group_order = 0;
  std::int64_t size = 0;
  std::int64_t upper_bound = 0;
  /// Largest Sidon set over any abelian group of this order, when searched.
  std::optional<std::int64_t> brute_force_max;
  OptimalityVerdict verdict = OptimalityVerdict::unknown;
};

/// Throws if s is not a Sidon sequence. Runs the all-groups search when the
/// order is at most cap.
OptimalityReport check_optimality(const SidonSequence& s, std::int64_t cap = kDefaultAllGroupsSearchCap);

}  // namespace sidon2d
