#pragma once

#include "json.hpp"

#include "sidon2d/ddc.hpp"
#include "sidon2d/finite_field.hpp"
#include "sidon2d/group.hpp"
#include "sidon2d/lattice.hpp"
#include "sidon2d/sidon.hpp"

// JSON formats:
//   field element   [c0, ..., c_{k-1}]
//   field           {"p":..,"k":..,"modulus":[..]}
//   sequence        {"modulus":n,"elements":[..]} for Z_n,
//                   {"moduli":[..],"elements":[[..],..]} otherwise
//   lattice         [[v11,v12],[v21,v22]]
//   shape / dots    [[x,y],..]
//   periodic DDC    {"lattice":..,"shape":..,"dots":..}
// Output objects keep insertion order so they are stable for golden files.
namespace sidon2d::io {

using Json = nlohmann::ordered_json;

Json to_json(const FieldElement& a);
FieldElement field_element_from_json(const Json& j);
Json to_json(const Field& f);

Json to_json(const GroupElement& a, const GroupSpec& g);
Json to_json(const SidonSequence& s);
/// Accepts "modulus" or "moduli"; single-factor groups accept plain integers.
SidonSequence sidon_from_json(const Json& j);
Json to_json(const SidonViolation& v, const GroupSpec& g);
Json to_json(const OptimalityReport& r);

Json to_json(Point p);
Point point_from_json(const Json& j);
std::vector<Point> points_from_json(const Json& j);
Json to_json(const Lattice& L);
Lattice lattice_from_json(const Json& j);
Json to_json(const Shape& S);
Shape shape_from_json(const Json& j);

Json to_json(const PeriodicDdc& c);
/// "shape" defaults to the lattice's fundamental shape.
PeriodicDdc ddc_from_json(const Json& j);
Json to_json(const DdcViolation& v);

}  // namespace sidon2d::io
