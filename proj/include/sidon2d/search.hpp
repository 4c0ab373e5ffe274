#pragma once

#include <cstdint>
#include <vector>

namespace sidon2d {

/// A finite abelian group of order n given by its subtraction table:
/// sub[a][b] is the index of a - b, and index 0 is the identity.
using SubtractionTable = std::vector<std::vector<std::int32_t>>;

struct SidonSearchResult {
  std::int64_t max = 0;
  /// Ascending indices, always containing 0.
  std::vector<std::int32_t> witness;
};

/// Largest subset with all ordered differences distinct, by backtracking.
///
/// The set is normalized to contain the identity (translation preserves the
/// property). Sizes are tried in increasing order and each search walks
/// candidates in index order, so the witness is the lexicographically
/// smallest maximum set containing 0.
SidonSearchResult max_sidon_by_table(const SubtractionTable& sub);

/// Largest m with m(m-1) <= n-1.
std::int64_t sidon_counting_bound(std::int64_t n);

}  // namespace sidon2d
