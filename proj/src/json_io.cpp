#include "sidon2d/json_io.hpp"

#include <stdexcept>

namespace sidon2d::io {
namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Json to_json(const FieldElement& a) { return Json(a.coeffs); }

FieldElement field_element_from_json(const Json& j) {
  if (j.is_number_integer()) return FieldElement{{j.get<std::uint32_t>()}};
  require(j.is_array(), "field element must be an integer or an array of coefficients");
  return FieldElement{j.get<std::vector<std::uint32_t>>()};
}

Json to_json(const Field& f) {
  Json j;
  j["p"] = f.characteristic();
  j["k"] = f.degree();
  j["modulus"] = f.modulus();
  return j;
}

Json to_json(const GroupElement& a, const GroupSpec& g) {
  if (g.is_cyclic_form()) return a.residues.front();
  return Json(a.residues);
}

Json to_json(const SidonSequence& s) {
  Json j;
  if (s.group.is_cyclic_form()) {
    j["modulus"] = s.group.order();
  } else {
    j["moduli"] = s.group.moduli();
  }
  Json elems = Json::array();
  for (const auto& e : s.elements) elems.push_back(to_json(e, s.group));
  j["elements"] = std::move(elems);
  return j;
}

SidonSequence sidon_from_json(const Json& j) {
  require(j.is_object(), "sequence JSON must be an object");
  std::vector<std::int64_t> moduli;
  if (j.contains("moduli")) {
    moduli = j.at("moduli").get<std::vector<std::int64_t>>();
  } else if (j.contains("modulus")) {
    moduli = {j.at("modulus").get<std::int64_t>()};
  } else {
    throw std::invalid_argument("sequence JSON needs \"modulus\" or \"moduli\"");
  }
  SidonSequence s{GroupSpec(std::move(moduli)), {}};
  require(j.contains("elements") && j.at("elements").is_array(), "sequence JSON needs an \"elements\" array");
  for (const auto& e : j.at("elements")) {
    if (e.is_number_integer()) {
      require(s.group.is_cyclic_form(), "plain integer elements need a single-factor group");
      s.elements.push_back(GroupElement{{e.get<std::int64_t>()}});
    } else {
      s.elements.push_back(GroupElement{e.get<std::vector<std::int64_t>>()});
    }
  }
  s.validate();
  return s;
}

Json to_json(const SidonViolation& v, const GroupSpec& g) {
  Json j;
  j["first"] = Json::array({to_json(v.first[0], g), to_json(v.first[1], g)});
  j["second"] = Json::array({to_json(v.second[0], g), to_json(v.second[1], g)});
  j["value"] = to_json(v.value, g);
  return j;
}

Json to_json(const OptimalityReport& r) {
  Json j;
  j["group_order"] = r.group_order;
  j["size"] = r.size;
  j["upper_bound"] = r.upper_bound;
  j["brute_force_max"] = r.brute_force_max ? Json(*r.brute_force_max) : Json(nullptr);
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

Json to_json(Point p) { return Json::array({p.x, p.y}); }

Point point_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2, "point must be a two-element array");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

std::vector<Point> points_from_json(const Json& j) {
  require(j.is_array(), "point list must be an array");
  std::vector<Point> out;
  out.reserve(j.size());
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

Json to_json(const Lattice& L) { return Json::array({to_json(L.v1()), to_json(L.v2())}); }

Lattice lattice_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2, "lattice must be a 2x2 array");
  return Lattice(point_from_json(j[0]), point_from_json(j[1]));
}

Json to_json(const Shape& S) {
  Json j = Json::array();
  for (const Point p : S.points()) j.push_back(to_json(p));
  return j;
}

Shape shape_from_json(const Json& j) { return Shape(points_from_json(j)); }

Json to_json(const PeriodicDdc& c) {
  Json j;
  j["lattice"] = to_json(c.lattice);
  j["shape"] = to_json(c.shape);
  Json dots = Json::array();
  for (const Point p : c.dots) dots.push_back(to_json(p));
  j["dots"] = std::move(dots);
  return j;
}

PeriodicDdc ddc_from_json(const Json& j) {
  require(j.is_object() && j.contains("lattice"), "periodic DDC JSON needs a \"lattice\"");
  const Lattice L = lattice_from_json(j.at("lattice"));
  PeriodicDdc c{L, j.contains("shape") ? shape_from_json(j.at("shape")) : fundamental_shape(L), {}};
  if (j.contains("dots")) c.dots = points_from_json(j.at("dots"));
  return c;
}

Json to_json(const DdcViolation& v) {
  Json j;
  j["first"] = Json::array({to_json(v.first[0]), to_json(v.first[1])});
  j["second"] = Json::array({to_json(v.second[0]), to_json(v.second[1])});
  j["difference"] = to_json(v.difference);
  return j;
}

}  // namespace sidon2d::io
