#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sidon2d/finite_field.hpp"
#include "sidon2d/folding.hpp"
#include "sidon2d/group.hpp"
#include "sidon2d/lattice.hpp"

namespace sidon2d {

/// Two ordered dot pairs with the same difference vector.
struct DdcViolation {
  std::array<Point, 2> first;
  std::array<Point, 2> second;
  Point difference;
};

/// All m(m-1) ordered difference vectors distinct. Equivalent to the
/// C(m,2) connecting segments being distinct in length or slope.
std::optional<DdcViolation> is_ddc(std::span<const Point> dots);

/// One fundamental copy of a doubly periodic dot pattern.
struct PeriodicDdc {
  Lattice lattice;
  Shape shape;
  std::vector<Point> dots;

  /// Throws unless (lattice, shape) tiles and the dots are distinct shape points.
  Tiling validate() const;
};

/// Differences reduced modulo the lattice all distinct. The reported
/// difference is the reduced representative in the shape.
std::optional<DdcViolation> is_doubly_periodic_ddc(const PeriodicDdc& c);

/// Checks is_ddc on every translate of the shape over the periodic pattern.
/// Implied by is_doubly_periodic_ddc; the converse can fail when a reduced
/// difference is its own negative (see the unit tests).
std::optional<DdcViolation> is_doubly_periodic_ddc_by_windows(const PeriodicDdc& c);

/// Dot at (i, j) iff alpha^i = j mod p, on the (p-1) x p rectangle with
/// lattice [[p-1,0],[0,p]].
PeriodicDdc construct_welch(std::int64_t p, std::int64_t alpha);

/// Dot at (i, j) iff alpha^i + beta^j = 1 on the (q-1) x (q-1) square with
/// lattice [[q-1,0],[0,q-1]].
PeriodicDdc construct_golomb(const Field& field, const FieldElement& alpha, const FieldElement& beta);

/// Minimal y, then minimal x.
Point lower_left_dot(const PeriodicDdc& c);

/// Translates the pattern so anchor sits at the origin, unfolds along d and
/// returns the dot positions in Z_{|S|}, sorted.
SidonSequence unfold_to_sidon(const PeriodicDdc& c, Direction d, Point anchor);

/// Places dots at the folded-row points indexed by a Sidon sequence over Z_{|S|}.
PeriodicDdc fold_sidon_to_ddc(const SidonSequence& s, const Lattice& L, const Shape& S, Direction d);

inline constexpr std::int64_t kDefaultDdcSearchCap = 49;

struct MaxDdcResult {
  std::int64_t max = 0;
  std::vector<Point> witness;
};

/// Exact maximum dot count of a doubly periodic DDC on (L, S).
MaxDdcResult max_ddc_dots(const Lattice& L, const Shape& S, std::int64_t cap = kDefaultDdcSearchCap);

/// Rows top to bottom, "•" for a dot, "." for an empty shape cell and a
/// space outside the shape.
std::string render_ascii(const Shape& S, std::span<const Point> dots);

}  // namespace sidon2d
