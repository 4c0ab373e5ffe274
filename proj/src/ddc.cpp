#include "sidon2d/ddc.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "sidon2d/search.hpp"

namespace sidon2d {

std::optional<DdcViolation> is_ddc(std::span<const Point> dots) {
  std::unordered_map<Point, std::pair<std::size_t, std::size_t>, PointHash> seen;
  for (std::size_t i = 0; i < dots.size(); ++i) {
    for (std::size_t j = 0; j < dots.size(); ++j) {
      if (i == j) continue;
      const Point diff = dots[i] - dots[j];
      auto [it, inserted] = seen.emplace(diff, std::make_pair(i, j));
      if (!inserted) {
        const auto [pi, pj] = it->second;
        return DdcViolation{{dots[pi], dots[pj]}, {dots[i], dots[j]}, diff};
      }
    }
  }
  return std::nullopt;
}

Tiling PeriodicDdc::validate() const {
  Tiling tiling(lattice, shape);
  std::vector<char> used(shape.size(), 0);
  for (const Point d : dots) {
    const auto idx = shape.index_of(d);
    if (!idx) throw std::invalid_argument("dot lies outside the shape");
    if (used[*idx]) throw std::invalid_argument("dot is repeated");
    used[*idx] = 1;
  }
  return tiling;
}

std::optional<DdcViolation> is_doubly_periodic_ddc(const PeriodicDdc& c) {
  const Tiling tiling = c.validate();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::pair<std::size_t, std::size_t>> first(tiling.size(), {kUnset, kUnset});
  for (std::size_t i = 0; i < c.dots.size(); ++i) {
    for (std::size_t j = 0; j < c.dots.size(); ++j) {
      if (i == j) continue;
      const std::size_t r = tiling.reduce_index(c.dots[i] - c.dots[j]);
      if (first[r].first != kUnset) {
        const auto [pi, pj] = first[r];
        return DdcViolation{{c.dots[pi], c.dots[pj]}, {c.dots[i], c.dots[j]}, tiling.shape().points()[r]};
      }
      first[r] = {i, j};
    }
  }
  return std::nullopt;
}

std::optional<DdcViolation> is_doubly_periodic_ddc_by_windows(const PeriodicDdc& c) {
  const Tiling tiling = c.validate();
  std::vector<char> is_dot(tiling.size(), 0);
  for (const Point d : c.dots) is_dot[tiling.reduce_index(d)] = 1;
  std::vector<Point> window;
  for (const Point t : tiling.shape().points()) {
    window.clear();
    for (const Point s : tiling.shape().points()) {
      if (is_dot[tiling.reduce_index(s + t)]) window.push_back(s + t);
    }
    if (auto v = is_ddc(window)) return v;
  }
  return std::nullopt;
}

PeriodicDdc construct_welch(std::int64_t p, std::int64_t alpha) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  const Field f = Field::make(static_cast<std::uint32_t>(p), 1);
  const FieldElement a = f.constant(static_cast<std::uint64_t>(((alpha % p) + p) % p));
  if (!f.is_primitive(a)) throw std::invalid_argument(std::to_string(alpha) + " is not a primitive root mod " + std::to_string(p));
  PeriodicDdc c{Lattice::from_matrix(p - 1, 0, 0, p), Shape::rectangle(p - 1, p), {}};
  std::int64_t power = 1;
  for (std::int64_t i = 0; i < p - 1; ++i) {
    c.dots.push_back({i, power});
    power = power * a.coeffs[0] % p;
  }
  return c;
}

PeriodicDdc construct_golomb(const Field& field, const FieldElement& alpha, const FieldElement& beta) {
  const std::int64_t q = field.order();
  if (q < 3) throw std::invalid_argument("construction needs q >= 3");
  if (!field.is_primitive(alpha)) throw std::invalid_argument("alpha is not a primitive element");
  if (!field.is_primitive(beta)) throw std::invalid_argument("beta is not a primitive element");
  PeriodicDdc c{Lattice::from_matrix(q - 1, 0, 0, q - 1), Shape::rectangle(q - 1, q - 1), {}};
  for (std::int64_t i = 0; i < q - 1; ++i) {
    const FieldElement rest = field.sub(field.one(), field.pow(alpha, i));
    if (rest == field.zero()) continue;  // alpha^i = 1
    c.dots.push_back({i, static_cast<std::int64_t>(field.discrete_log(rest, beta))});
  }
  return c;
}

Point lower_left_dot(const PeriodicDdc& c) {
  if (c.dots.empty()) throw std::invalid_argument("pattern has no dots");
  return *std::min_element(c.dots.begin(), c.dots.end(),
                           [](Point a, Point b) { return a.y != b.y ? a.y < b.y : a.x < b.x; });
}

SidonSequence unfold_to_sidon(const PeriodicDdc& c, Direction d, Point anchor) {
  const Tiling tiling = c.validate();
  if (std::find(c.dots.begin(), c.dots.end(), anchor) == c.dots.end()) {
    throw std::invalid_argument("anchor is not a dot of the pattern");
  }
  if (!defines_folding(tiling, d)) throw std::invalid_argument("direction does not define a folding");
  const FoldedRow row = folded_row(tiling, d);
  std::vector<std::int64_t> position(tiling.size(), 0);
  for (std::size_t t = 0; t < row.points.size(); ++t) position[tiling.reduce_index(row.points[t])] = static_cast<std::int64_t>(t);
  std::vector<std::int64_t> out;
  out.reserve(c.dots.size());
  for (const Point dot : c.dots) out.push_back(position[tiling.reduce_index(dot - anchor)]);
  std::sort(out.begin(), out.end());
  return SidonSequence::cyclic(static_cast<std::int64_t>(tiling.size()), out);
}

PeriodicDdc fold_sidon_to_ddc(const SidonSequence& s, const Lattice& L, const Shape& S, Direction d) {
  const Tiling tiling(L, S);
  if (!s.group.is_cyclic_form() || s.group.order() != static_cast<std::int64_t>(tiling.size())) {
    throw std::invalid_argument("sequence must be over Z_" + std::to_string(tiling.size()));
  }
  if (verify_sidon(s)) throw std::invalid_argument("sequence is not a Sidon sequence");
  if (!defines_folding(tiling, d)) throw std::invalid_argument("direction does not define a folding");
  const FoldedRow row = folded_row(tiling, d);
  PeriodicDdc c{L, S, {}};
  for (std::int64_t e : s.cyclic_residues()) c.dots.push_back(row.points[static_cast<std::size_t>(e)]);
  return c;
}

MaxDdcResult max_ddc_dots(const Lattice& L, const Shape& S, std::int64_t cap) {
  if (L.volume() > cap) {
    throw std::invalid_argument("lattice volume " + std::to_string(L.volume()) + " exceeds the search cap " +
                                std::to_string(cap));
  }
  const Tiling tiling(L, S);
  // Search order: origin first, then the remaining shape points in order.
  std::vector<Point> order{Point{0, 0}};
  for (const Point p : S.points()) {
    if (p != Point{0, 0}) order.push_back(p);
  }
  std::vector<std::int32_t> rank_of(tiling.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank_of[tiling.reduce_index(order[r])] = static_cast<std::int32_t>(r);
  const auto n = order.size();
  SubtractionTable sub(n, std::vector<std::int32_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) sub[a][b] = rank_of[tiling.reduce_index(order[a] - order[b])];
  }
  const auto found = max_sidon_by_table(sub);
  MaxDdcResult result{found.max, {}};
  for (std::int32_t r : found.witness) result.witness.push_back(order[static_cast<std::size_t>(r)]);
  return result;
}

std::string render_ascii(const Shape& S, std::span<const Point> dots) {
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const Point p : S.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  std::unordered_map<Point, char, PointHash> is_dot;
  for (const Point d : dots) is_dot[d] = 1;
  std::string out;
  for (std::int64_t y = max_y; y >= min_y; --y) {
    for (std::int64_t x = min_x; x <= max_x; ++x) {
      const Point p{x, y};
      if (is_dot.contains(p)) {
        out += "•";
      } else {
        out += S.contains(p) ? '.' : ' ';
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace sidon2d
