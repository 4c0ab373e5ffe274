#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace sidon2d {

/// A grid point or integer vector. x is the horizontal (column) coordinate,
/// y the vertical (row) coordinate.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator-(Point a) { return {-a.x, -a.y}; }
  friend Point operator*(std::int64_t k, Point a) { return {k * a.x, k * a.y}; }
  friend bool operator==(Point, Point) = default;
  friend auto operator<=>(Point, Point) = default;
};

struct PointHash {
  std::size_t operator()(Point p) const noexcept {
    return std::hash<std::int64_t>{}(p.x * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(p.y));
  }
};

/// A full-rank sublattice of Z^2 spanned by the rows v1, v2 of its generator matrix.
class Lattice {
 public:
  Lattice(Point v1, Point v2);
  /// Row-major 2x2 generator matrix.
  static Lattice from_matrix(std::int64_t v11, std::int64_t v12, std::int64_t v21, std::int64_t v22) {
    return Lattice({v11, v12}, {v21, v22});
  }
  /// The lattice generated by arbitrary vectors; throws unless they span rank 2.
  static Lattice generated_by(std::span<const Point> generators);

  Point v1() const { return v1_; }
  Point v2() const { return v2_; }
  std::int64_t det() const { return v1_.x * v2_.y - v1_.y * v2_.x; }
  std::int64_t volume() const { return det() < 0 ? -det() : det(); }

  /// Row-style Hermite normal form basis (a, b), (0, c) with a, c > 0 and 0 <= b < c.
  Lattice hermite() const;
  bool contains(Point p) const;
  /// The unique congruent point with 0 <= x < a, 0 <= y < c (HNF entries).
  Point canonical(Point p) const;
  /// Index of the coset of p in [0, volume()).
  std::int64_t coset_index(Point p) const;
  /// Same set of points, possibly a different basis.
  bool same_lattice(const Lattice& other) const;

 private:
  Point v1_, v2_;
  // Cached HNF entries.
  std::int64_t a_ = 0, b_ = 0, c_ = 0;
};

/// Points (x, y), 0 <= x < width, 0 <= y < height, rows bottom to top.
std::vector<Point> rectangle_points(std::int64_t width, std::int64_t height);

/// A finite set of grid points with the center at the origin.
class Shape {
 public:
  /// Points must be distinct and include the origin; order is preserved.
  explicit Shape(std::vector<Point> points);
  static Shape rectangle(std::int64_t width, std::int64_t height) { return Shape(rectangle_points(width, height)); }

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(Point p) const { return index_.contains(p); }
  std::optional<std::size_t> index_of(Point p) const;

 private:
  std::vector<Point> points_;
  std::unordered_map<Point, std::size_t, PointHash> index_;
};

std::int64_t volume(const Lattice& L);

struct Reduction {
  Point center;  // lattice point c(p)
  Point offset;  // p - c(p), a point of the shape
};

/// A lattice together with a shape it tiles. Reduction is O(1).
class Tiling {
 public:
  /// Throws std::invalid_argument unless (L, S) is a lattice tiling.
  Tiling(Lattice L, Shape S);

  const Lattice& lattice() const { return lattice_; }
  const Shape& shape() const { return shape_; }
  std::size_t size() const { return shape_.size(); }

  Reduction reduce(Point p) const;
  /// Index into shape().points() of the reduced point.
  std::size_t reduce_index(Point p) const;

 private:
  Lattice lattice_;
  Shape shape_;
  std::vector<std::size_t> coset_to_shape_;
};

bool is_lattice_tiling(const Lattice& L, const Shape& S);
/// Throws when (L, S) is not a tiling.
Reduction reduce(const Lattice& L, const Shape& S, Point p);
/// Canonical coset representatives from the Hermite normal form.
Shape fundamental_shape(const Lattice& L);

struct PeriodPair {
  Point first;
  Point second;
  std::int64_t volume() const {
    const std::int64_t d = first.x * second.y - first.y * second.x;
    return d < 0 ? -d : d;
  }
};

/// Whether translating the doubly periodic pattern by t leaves it unchanged.
bool is_symmetry(const Tiling& tiling, std::span<const Point> dots, Point t);

/// A basis (in Hermite form) of the lattice of all translations fixing the
/// doubly periodic pattern generated by dots on the tiling.
PeriodPair minimal_period(const Tiling& tiling, std::span<const Point> dots);
PeriodPair minimal_period(const Lattice& L, const Shape& S, std::span<const Point> dots);

}  // namespace sidon2d
