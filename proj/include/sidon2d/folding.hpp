#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sidon2d/lattice.hpp"

namespace sidon2d {

/// A nonzero integer step vector.
class Direction {
 public:
  Direction(std::int64_t d1, std::int64_t d2);

  std::int64_t d1() const { return step_.x; }
  std::int64_t d2() const { return step_.y; }
  Point step() const { return step_; }
  /// gcd(|d1|, |d2|).
  std::int64_t tau() const;
  Direction reversed() const { return {-step_.x, -step_.y}; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Point step_;
};

struct FoldedRow {
  /// Visited shape points starting at the origin. When complete this lists
  /// every point of the shape exactly once; otherwise it stops before the
  /// first repeated point.
  std::vector<Point> points;
  bool complete = false;
};

/// Steps from the origin by d, reducing back into the shape through the
/// lattice whenever a step leaves it.
FoldedRow folded_row(const Tiling& tiling, Direction d);
FoldedRow folded_row(const Lattice& L, const Shape& S, Direction d);

/// Whether (L, S, d) defines a folding. Also checks the equivalent
/// characterization via multiples of d and throws std::logic_error if the two
/// ever disagree.
bool defines_folding(const Tiling& tiling, Direction d);
bool defines_folding(const Lattice& L, const Shape& S, Direction d);

/// Closed-form gcd criterion. Returns nullopt (not applicable) when the
/// generator matrix is neither all-nonzero nor diagonal. Throws when size is
/// not volume(L).
std::optional<bool> defines_folding_gcd(const Lattice& L, std::int64_t size, Direction d);

/// One representative per class of directions yielding the same folded row,
/// drawn from 0 <= d1, d2 < max(|S|, 2) in lexicographic order. When
/// nonempty its size is phi(|S|).
std::vector<Direction> folding_directions(const Tiling& tiling);
std::vector<Direction> folding_directions(const Lattice& L, const Shape& S);

/// Writes seq[t] at folded-row point t. The result is aligned with
/// tiling.shape().points().
std::vector<std::int64_t> fold(const std::vector<std::int64_t>& seq, const Tiling& tiling, Direction d);
/// Inverse of fold.
std::vector<std::int64_t> unfold(const std::vector<std::int64_t>& values, const Tiling& tiling, Direction d);

}  // namespace sidon2d
