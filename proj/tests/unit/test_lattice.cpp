#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "sidon2d/lattice.hpp"
#include "support/oracles.hpp"

using namespace sidon2d;

namespace {

bool oracle_in(const Lattice& L, Point p) {
  return oracle::in_lattice(p.x, p.y, L.v1().x, L.v1().y, L.v2().x, L.v2().y);
}

// Tiling check by pairwise congruence, independent of the HNF.
bool oracle_tiles(const Lattice& L, const std::vector<Point>& pts) {
  if (static_cast<std::int64_t>(pts.size()) != L.volume()) return false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (oracle_in(L, pts[i] - pts[j])) return false;
    }
  }
  return true;
}

Lattice random_nonsingular(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  for (;;) {
    const std::int64_t a = e(rng), b = e(rng), c = e(rng), d = e(rng);
    if (a * d - b * c != 0) return Lattice::from_matrix(a, b, c, d);
  }
}

}  // namespace

TEST_CASE("volume") {
  CHECK(volume(Lattice::from_matrix(6, 0, 0, 7)) == 42);
  CHECK(volume(Lattice::from_matrix(1, 0, 0, 1)) == 1);
  CHECK(volume(Lattice::from_matrix(2, 1, 1, 2)) == 3);
  CHECK(volume(Lattice::from_matrix(1, 2, 2, 1)) == 3);
  CHECK_THROWS_AS(Lattice::from_matrix(2, 4, 1, 2), std::invalid_argument);
}

TEST_CASE("hermite form and membership") {
  const auto L = Lattice::from_matrix(2, 1, 1, 2);
  const auto H = L.hermite();
  CHECK(H.v2().x == 0);
  CHECK(H.v1().x > 0);
  CHECK(H.v2().y > 0);
  CHECK(H.v1().y >= 0);
  CHECK(H.v1().y < H.v2().y);
  CHECK(H.same_lattice(L));
  CHECK(L.contains({2, 1}));
  CHECK(L.contains({3, 3}));
  CHECK_FALSE(L.contains({1, 0}));

  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto M = random_nonsingular(rng, 6);
    CHECK(M.hermite().volume() == M.volume());
    CHECK(M.hermite().same_lattice(M));
    std::uniform_int_distribution<int> c(-20, 20);
    for (int k = 0; k < 20; ++k) {
      const Point p{c(rng), c(rng)};
      CHECK(M.contains(p) == oracle_in(M, p));
      const auto q = M.canonical(p);
      CHECK(oracle_in(M, p - q));
      CHECK(M.coset_index(p) == M.coset_index(q));
      CHECK(M.coset_index(p) < M.volume());
    }
  }
}

TEST_CASE("generated_by") {
  const std::vector<Point> gens{{4, 0}, {0, 6}, {2, 3}};
  const auto L = Lattice::generated_by(gens);
  CHECK(L.volume() == 12);
  for (auto g : gens) CHECK(L.contains(g));
  const std::vector<Point> collinear{{1, 1}, {2, 2}};
  CHECK_THROWS_AS(Lattice::generated_by(collinear), std::invalid_argument);
}

TEST_CASE("shapes") {
  CHECK_THROWS_AS(Shape({{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Shape({{0, 0}, {0, 0}}), std::invalid_argument);
  const auto R = Shape::rectangle(3, 2);
  CHECK(R.points() == std::vector<Point>{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}});
  CHECK(R.index_of({2, 1}) == 5u);
  CHECK_FALSE(R.index_of({3, 0}));
}

TEST_CASE("is_lattice_tiling examples") {
  CHECK(is_lattice_tiling(Lattice::from_matrix(6, 0, 0, 7), Shape::rectangle(6, 7)));
  CHECK(is_lattice_tiling(Lattice::from_matrix(1, 0, 0, 1), Shape({{0, 0}})));
  CHECK_FALSE(is_lattice_tiling(Lattice::from_matrix(2, 0, 0, 2), Shape({{0, 0}, {1, 0}, {2, 0}, {3, 0}})));
  CHECK_FALSE(is_lattice_tiling(Lattice::from_matrix(2, 0, 0, 2), Shape({{0, 0}, {1, 0}})));
  // The three-point L-tromino does not tile with [[2,1],[1,2]]: (1,0) - (0,1) = (1,-1) is a lattice vector.
  CHECK(oracle_in(Lattice::from_matrix(2, 1, 1, 2), {1, -1}));
  CHECK_FALSE(is_lattice_tiling(Lattice::from_matrix(2, 1, 1, 2), Shape({{0, 0}, {1, 0}, {0, 1}})));
  CHECK(is_lattice_tiling(Lattice::from_matrix(2, 1, 1, 2), Shape({{0, 0}, {1, 0}, {2, 0}})));
}

TEST_CASE("reduce examples") {
  const auto L = Lattice::from_matrix(6, 0, 0, 7);
  const auto S = Shape::rectangle(6, 7);
  const auto r = reduce(L, S, {7, 8});
  CHECK(r.center == Point{6, 7});
  CHECK(r.offset == Point{1, 1});
  const auto in = reduce(L, S, {3, 4});
  CHECK(in.center == Point{0, 0});

  const auto M = Lattice::from_matrix(2, 1, 1, 2);
  const Shape T({{0, 0}, {1, 0}, {2, 0}});
  const auto m = reduce(M, T, {2, 1});
  CHECK(m.center == Point{2, 1});
  CHECK(m.offset == Point{0, 0});

  CHECK_THROWS_AS(reduce(M, Shape({{0, 0}, {1, 0}, {0, 1}}), {2, 1}), std::invalid_argument);
}

TEST_CASE("reduce properties on random tilings") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-30, 30);
  for (int t = 0; t < 200; ++t) {
    const auto L = random_nonsingular(rng, 6);
    const auto S = fundamental_shape(L);
    CHECK(oracle_tiles(L, S.points()));
    CHECK(is_lattice_tiling(L, S));
    const Tiling tiling(L, S);
    for (int k = 0; k < 20; ++k) {
      const Point p{c(rng), c(rng)};
      const auto r = tiling.reduce(p);
      CHECK(S.contains(r.offset));
      CHECK(oracle_in(L, r.center));
      CHECK(r.center + r.offset == p);
      CHECK(tiling.reduce(r.offset).center == Point{0, 0});
      const Point lambda = c(rng) * L.v1() + c(rng) * L.v2();
      CHECK(tiling.reduce(p + lambda).offset == r.offset);
    }
  }
}

TEST_CASE("reduce on a non-rectangular tiling shape") {
  // A staircase transversal of [[3,0],[1,2]] (volume 6).
  const auto L = Lattice::from_matrix(3, 0, 1, 2);
  const Shape S({{0, 0}, {1, 0}, {2, 0}, {-1, 1}, {0, 1}, {1, 1}});
  REQUIRE(oracle_tiles(L, S.points()));
  const Tiling tiling(L, S);
  for (std::int64_t x = -10; x <= 10; ++x) {
    for (std::int64_t y = -10; y <= 10; ++y) {
      const auto r = tiling.reduce({x, y});
      CHECK(S.contains(r.offset));
      CHECK(oracle_in(L, r.center));
    }
  }
}

TEST_CASE("fundamental_shape examples") {
  CHECK(fundamental_shape(Lattice::from_matrix(6, 0, 0, 7)).points() == rectangle_points(6, 7));
  CHECK(fundamental_shape(Lattice::from_matrix(1, 0, 0, 1)).points() == std::vector<Point>{{0, 0}});
  const auto S = fundamental_shape(Lattice::from_matrix(2, 1, 1, 2));
  CHECK(S.size() == 3);
  CHECK(oracle_tiles(Lattice::from_matrix(2, 1, 1, 2), S.points()));
}

TEST_CASE("minimal_period examples") {
  const auto L = Lattice::from_matrix(6, 0, 0, 7);
  const auto S = Shape::rectangle(6, 7);
  std::vector<Point> welch;
  for (std::int64_t i = 0; i < 6; ++i) welch.push_back({i, oracle::power_mod(3, i, 7)});
  CHECK(minimal_period(L, S, welch).volume() == 42);

  CHECK(minimal_period(Lattice::from_matrix(2, 0, 0, 2), Shape::rectangle(2, 2), {}).volume() == 1);

  const auto P = minimal_period(Lattice::from_matrix(4, 0, 0, 1), Shape::rectangle(4, 1), std::vector<Point>{{0, 0}, {2, 0}});
  CHECK(P.volume() == 2);

  const std::vector<Point> outside{{9, 9}};
  CHECK_THROWS_AS(minimal_period(L, S, outside), std::invalid_argument);
}

TEST_CASE("minimal_period matches a brute-force symmetry count") {
  std::mt19937 rng(21);
  for (int t = 0; t < 150; ++t) {
    const auto L = random_nonsingular(rng, 4);
    if (L.volume() > 24) continue;
    const auto S = fundamental_shape(L);
    std::vector<Point> dots;
    std::bernoulli_distribution coin(0.4);
    for (auto p : S.points()) {
      if (coin(rng)) dots.push_back(p);
    }
    // The symmetry group modulo L has order V(L) / s; count translations by shape points.
    const Tiling tiling(L, S);
    std::set<Point> dotset;
    for (auto d : dots) dotset.insert(tiling.reduce(d).offset);
    std::int64_t symmetries = 0;
    for (auto t0 : S.points()) {
      bool ok = true;
      for (auto d : dots) ok = ok && dotset.contains(tiling.reduce(d + t0).offset);
      symmetries += ok;
    }
    const auto P = minimal_period(tiling, dots);
    CHECK(P.volume() * symmetries == L.volume());
    CHECK(L.volume() % P.volume() == 0);
    CHECK(is_symmetry(tiling, dots, P.first));
    CHECK(is_symmetry(tiling, dots, P.second));
  }
}
