#include "sidon2d/folding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sidon2d {
namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

void require_foldable(const Tiling& tiling, Direction d) {
  if (!defines_folding(tiling, d)) {
    throw std::invalid_argument("direction (" + std::to_string(d.d1()) + "," + std::to_string(d.d2()) +
                                ") does not define a folding");
  }
}

}  // namespace

Direction::Direction(std::int64_t d1, std::int64_t d2) : step_{d1, d2} {
  if (d1 == 0 && d2 == 0) throw std::invalid_argument("direction must be nonzero");
}

std::int64_t Direction::tau() const { return std::gcd(iabs(step_.x), iabs(step_.y)); }

FoldedRow folded_row(const Tiling& tiling, Direction d) {
  const std::size_t n = tiling.size();
  std::vector<char> visited(n, 0);
  FoldedRow row;
  row.points.reserve(n);
  Point cur{0, 0};
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t idx = tiling.reduce_index(cur);
    if (visited[idx]) return row;
    visited[idx] = 1;
    row.points.push_back(cur);
    cur = tiling.reduce(cur + d.step()).offset;
  }
  row.complete = true;
  return row;
}

FoldedRow folded_row(const Lattice& L, const Shape& S, Direction d) { return folded_row(Tiling(L, S), d); }

bool defines_folding(const Tiling& tiling, Direction d) {
  const bool by_walk = folded_row(tiling, d).complete;
  // |S| d reduces to the origin and no smaller positive multiple does.
  const auto n = static_cast<std::int64_t>(tiling.size());
  const Lattice& L = tiling.lattice();
  bool by_multiples = L.contains(n * d.step());
  for (std::int64_t i = 1; i < n && by_multiples; ++i) {
    if (L.contains(i * d.step())) by_multiples = false;
  }
  if (by_walk != by_multiples) throw std::logic_error("folded-row walk disagrees with the multiples criterion");
  return by_walk;
}

bool defines_folding(const Lattice& L, const Shape& S, Direction d) { return defines_folding(Tiling(L, S), d); }

std::optional<bool> defines_folding_gcd(const Lattice& L, std::int64_t size, Direction d) {
  if (size != L.volume()) {
    throw std::invalid_argument("shape size " + std::to_string(size) + " differs from the lattice volume " +
                                std::to_string(L.volume()));
  }
  const std::int64_t v11 = L.v1().x, v12 = L.v1().y, v21 = L.v2().x, v22 = L.v2().y;
  const bool all_nonzero = v11 != 0 && v12 != 0 && v21 != 0 && v22 != 0;
  const bool diagonal = v12 == 0 && v21 == 0;
  if (!all_nonzero && !diagonal) return std::nullopt;

  std::int64_t d1 = d.d1(), d2 = d.d2();
  if (d2 == 0) return std::gcd(v12, v22) == 1 && std::gcd(iabs(d1), size) == 1;
  if (d1 == 0) return std::gcd(v11, v21) == 1 && std::gcd(iabs(d2), size) == 1;
  // The reversed direction folds iff d does, so take d1 > 0.
  if (d1 < 0) {
    d1 = -d1;
    d2 = -d2;
  }
  const std::int64_t tau = std::gcd(d1, iabs(d2));
  std::int64_t first, second;
  if (d2 > 0) {
    first = (d1 * v22 - d2 * v21) / tau;
    second = (d2 * v11 - d1 * v12) / tau;
  } else {
    d2 = -d2;
    first = (d1 * v22 + d2 * v21) / tau;
    second = (d2 * v11 + d1 * v12) / tau;
  }
  return std::gcd(first, second) == 1 && std::gcd(tau, size) == 1;
}

std::vector<Direction> folding_directions(const Tiling& tiling) {
  const auto n = static_cast<std::int64_t>(tiling.size());
  const std::int64_t range = std::max<std::int64_t>(n, 2);
  enum : char { kUnknown, kFolds, kNoFold };
  std::vector<char> state(static_cast<std::size_t>(n), kUnknown);
  std::vector<Direction> out;
  for (std::int64_t d1 = 0; d1 < range; ++d1) {
    for (std::int64_t d2 = 0; d2 < range; ++d2) {
      if (d1 == 0 && d2 == 0) continue;
      const Direction d(d1, d2);
      char& s = state[static_cast<std::size_t>(tiling.lattice().coset_index(d.step()))];
      if (s != kUnknown) continue;
      s = defines_folding(tiling, d) ? kFolds : kNoFold;
      if (s == kFolds) out.push_back(d);
    }
  }
  return out;
}

std::vector<Direction> folding_directions(const Lattice& L, const Shape& S) { return folding_directions(Tiling(L, S)); }

std::vector<std::int64_t> fold(const std::vector<std::int64_t>& seq, const Tiling& tiling, Direction d) {
  if (seq.size() != tiling.size()) {
    throw std::invalid_argument("sequence length " + std::to_string(seq.size()) + " differs from the shape size " +
                                std::to_string(tiling.size()));
  }
  require_foldable(tiling, d);
  const FoldedRow row = folded_row(tiling, d);
  std::vector<std::int64_t> values(tiling.size(), 0);
  for (std::size_t t = 0; t < seq.size(); ++t) values[*tiling.shape().index_of(row.points[t])] = seq[t];
  return values;
}

std::vector<std::int64_t> unfold(const std::vector<std::int64_t>& values, const Tiling& tiling, Direction d) {
  if (values.size() != tiling.size()) {
    throw std::invalid_argument("array has " + std::to_string(values.size()) + " cells but the shape has " +
                                std::to_string(tiling.size()));
  }
  require_foldable(tiling, d);
  const FoldedRow row = folded_row(tiling, d);
  std::vector<std::int64_t> seq(tiling.size(), 0);
  for (std::size_t t = 0; t < seq.size(); ++t) seq[t] = values[*tiling.shape().index_of(row.points[t])];
  return seq;
}

}  // namespace sidon2d
