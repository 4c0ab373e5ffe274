#include "sidon2d/lattice.hpp"

#include <stdexcept>
#include <string>

#include "sidon2d/numeric.hpp"

namespace sidon2d {
namespace {

struct Hnf {
  std::int64_t a, b, c;
};

Hnf hnf_of(Point v1, Point v2) {
  const auto e = extended_gcd(v1.x, v2.x);
  const std::int64_t a = e.g;
  const std::int64_t b = e.x * v1.y + e.y * v2.y;
  const std::int64_t det = v1.x * v2.y - v1.y * v2.x;
  const std::int64_t c = (det < 0 ? -det : det) / a;
  return {a, floor_mod(b, c), c};
}

// Adds generator w to the lattice spanned by (a, b), (0, c).
Hnf hnf_extend(Hnf h, Point w) {
  const auto e = extended_gcd(h.a, w.x);
  const std::int64_t g = e.g;
  const std::int64_t b = e.x * h.b + e.y * w.y;
  const std::int64_t y = (w.x / g) * h.b - (h.a / g) * w.y;
  std::int64_t c = std::gcd(h.c, y < 0 ? -y : y);
  return {g, floor_mod(b, c), c};
}

}  // namespace

Lattice::Lattice(Point v1, Point v2) : v1_(v1), v2_(v2) {
  if (det() == 0) throw std::invalid_argument("lattice basis vectors are linearly dependent");
  const Hnf h = hnf_of(v1_, v2_);
  a_ = h.a;
  b_ = h.b;
  c_ = h.c;
}

Lattice Lattice::generated_by(std::span<const Point> generators) {
  // Find a first independent pair, then absorb the rest.
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      const Point u = generators[i], v = generators[j];
      if (u.x * v.y - u.y * v.x == 0) continue;
      Hnf h = hnf_of(u, v);
      for (const Point w : generators) h = hnf_extend(h, w);
      return Lattice({h.a, h.b}, {0, h.c});
    }
  }
  throw std::invalid_argument("generators do not span a rank-2 lattice");
}

Lattice Lattice::hermite() const { return Lattice({a_, b_}, {0, c_}); }

Point Lattice::canonical(Point p) const {
  const std::int64_t t = floor_div(p.x, a_);
  return {p.x - t * a_, floor_mod(p.y - t * b_, c_)};
}

bool Lattice::contains(Point p) const { return canonical(p) == Point{0, 0}; }

std::int64_t Lattice::coset_index(Point p) const {
  const Point r = canonical(p);
  return r.x * c_ + r.y;
}

bool Lattice::same_lattice(const Lattice& other) const {
  return a_ == other.a_ && b_ == other.b_ && c_ == other.c_;
}

std::vector<Point> rectangle_points(std::int64_t width, std::int64_t height) {
  if (width < 1 || height < 1) throw std::invalid_argument("rectangle dimensions must be positive");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(width * height));
  for (std::int64_t y = 0; y < height; ++y) {
    for (std::int64_t x = 0; x < width; ++x) pts.push_back({x, y});
  }
  return pts;
}

Shape::Shape(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!index_.emplace(points_[i], i).second) {
      throw std::invalid_argument("shape point (" + std::to_string(points_[i].x) + "," +
                                  std::to_string(points_[i].y) + ") is repeated");
    }
  }
  if (!index_.contains(Point{0, 0})) throw std::invalid_argument("shape does not contain the origin");
}

std::optional<std::size_t> Shape::index_of(Point p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::int64_t volume(const Lattice& L) { return L.volume(); }

Tiling::Tiling(Lattice L, Shape S) : lattice_(L), shape_(std::move(S)) {
  const std::int64_t v = lattice_.volume();
  if (static_cast<std::int64_t>(shape_.size()) != v) {
    throw std::invalid_argument("shape has " + std::to_string(shape_.size()) + " points but the lattice volume is " +
                                std::to_string(v));
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  coset_to_shape_.assign(static_cast<std::size_t>(v), kUnset);
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    auto& slot = coset_to_shape_[static_cast<std::size_t>(lattice_.coset_index(shape_.points()[i]))];
    if (slot != kUnset) {
      const Point p = shape_.points()[slot], q = shape_.points()[i];
      throw std::invalid_argument("shape points (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") and (" +
                                  std::to_string(q.x) + "," + std::to_string(q.y) +
                                  ") are congruent modulo the lattice");
    }
    slot = i;
  }
}

std::size_t Tiling::reduce_index(Point p) const {
  return coset_to_shape_[static_cast<std::size_t>(lattice_.coset_index(p))];
}

Reduction Tiling::reduce(Point p) const {
  const Point offset = shape_.points()[reduce_index(p)];
  return {p - offset, offset};
}

bool is_lattice_tiling(const Lattice& L, const Shape& S) {
  if (static_cast<std::int64_t>(S.size()) != L.volume()) return false;
  std::vector<char> seen(static_cast<std::size_t>(L.volume()), 0);
  for (const Point p : S.points()) {
    char& slot = seen[static_cast<std::size_t>(L.coset_index(p))];
    if (slot) return false;
    slot = 1;
  }
  return true;
}

Reduction reduce(const Lattice& L, const Shape& S, Point p) { return Tiling(L, S).reduce(p); }

Shape fundamental_shape(const Lattice& L) {
  const Lattice h = L.hermite();
  return Shape::rectangle(h.v1().x, h.v2().y);
}

bool is_symmetry(const Tiling& tiling, std::span<const Point> dots, Point t) {
  std::vector<char> is_dot(tiling.size(), 0);
  for (const Point d : dots) is_dot[tiling.reduce_index(d)] = 1;
  for (const Point d : dots) {
    if (!is_dot[tiling.reduce_index(d + t)]) return false;
  }
  return true;
}

PeriodPair minimal_period(const Tiling& tiling, std::span<const Point> dots) {
  std::vector<char> is_dot(tiling.size(), 0);
  for (const Point d : dots) {
    if (!tiling.shape().contains(d)) throw std::invalid_argument("pattern dot lies outside the shape");
    is_dot[tiling.reduce_index(d)] = 1;
  }
  std::vector<Point> generators{tiling.lattice().v1(), tiling.lattice().v2()};
  // Translations by coset representatives; one representative per coset suffices.
  for (const Point t : tiling.shape().points()) {
    bool fixes = true;
    for (const Point d : dots) {
      if (!is_dot[tiling.reduce_index(d + t)]) {
        fixes = false;
        break;
      }
    }
    if (fixes) generators.push_back(t);
  }
  const Lattice sym = Lattice::generated_by(generators);
  return {sym.v1(), sym.v2()};
}

PeriodPair minimal_period(const Lattice& L, const Shape& S, std::span<const Point> dots) {
  return minimal_period(Tiling(L, S), dots);
}

}  // namespace sidon2d
