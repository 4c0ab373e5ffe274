#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sidon2d/cli.hpp"
#include "sidon2d/ddc.hpp"
#include "sidon2d/folding.hpp"
#include "sidon2d/json_io.hpp"
#include "sidon2d/sidon.hpp"

namespace py = pybind11;
using namespace sidon2d;

namespace pybind11::detail {

// Points travel as (x, y) tuples.
template <>
struct type_caster<Point> {
  PYBIND11_TYPE_CASTER(Point, const_name("tuple[int, int]"));

  bool load(handle src, bool) {
    if (!isinstance<sequence>(src)) return false;
    const auto seq = reinterpret_borrow<sequence>(src);
    if (seq.size() != 2) return false;
    try {
      value = {seq[0].cast<std::int64_t>(), seq[1].cast<std::int64_t>()};
    } catch (const cast_error&) {
      return false;
    }
    return true;
  }

  static handle cast(Point p, return_value_policy, handle) { return make_tuple(p.x, p.y).release(); }
};

}  // namespace pybind11::detail

namespace {

Direction direction(Point d) { return {d.x, d.y}; }

py::object element_to_py(const GroupSpec& g, const GroupElement& a) {
  if (g.is_cyclic_form()) return py::int_(a.residues[0]);
  return py::tuple(py::cast(a.residues));
}

SidonSequence make_sequence(const py::object& group, const py::iterable& elements) {
  const GroupSpec g = py::isinstance<py::int_>(group) ? GroupSpec::cyclic(group.cast<std::int64_t>())
                                                       : GroupSpec(group.cast<std::vector<std::int64_t>>());
  SidonSequence s{g, {}};
  for (const auto& e : elements) {
    if (py::isinstance<py::int_>(e)) {
      s.elements.push_back({{e.cast<std::int64_t>()}});
    } else {
      s.elements.push_back({e.cast<std::vector<std::int64_t>>()});
    }
  }
  s.validate();
  return s;
}

py::object violation_to_py(const std::optional<SidonViolation>& v, const GroupSpec& g) {
  if (!v) return py::none();
  py::dict d;
  d["first"] = py::make_tuple(element_to_py(g, v->first[0]), element_to_py(g, v->first[1]));
  d["second"] = py::make_tuple(element_to_py(g, v->second[0]), element_to_py(g, v->second[1]));
  d["value"] = element_to_py(g, v->value);
  return std::move(d);
}

py::object violation_to_py(const std::optional<DdcViolation>& v) {
  if (!v) return py::none();
  py::dict d;
  d["first"] = py::make_tuple(v->first[0], v->first[1]);
  d["second"] = py::make_tuple(v->second[0], v->second[1]);
  d["difference"] = v->difference;
  return std::move(d);
}

Lattice make_lattice(Point v1, Point v2) { return Lattice(v1, v2); }

Shape shape_or_fundamental(const Lattice& L, const std::optional<std::vector<Point>>& shape) {
  return shape ? Shape(*shape) : fundamental_shape(L);
}

FieldElement element_of(const Field& f, const py::object& o) {
  if (py::isinstance<py::int_>(o)) return f.constant(o.cast<std::uint64_t>());
  return FieldElement{o.cast<std::vector<std::uint32_t>>()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sidon sequences, distinct difference configurations and folding";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

  py::class_<Field>(m, "Field")
      .def(py::init([](std::uint32_t p, std::uint32_t k) { return Field::make(p, k); }), py::arg("p"),
           py::arg("k") = 1)
      .def_static("of_order", [](std::uint64_t q) {
        const auto pk = prime_power(q);
        if (!pk) throw py::value_error(std::to_string(q) + " is not a prime power");
        return Field::make(pk->first, pk->second);
      })
      .def_property_readonly("p", &Field::characteristic)
      .def_property_readonly("k", &Field::degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def_property_readonly("primitive", [](const Field& f) { return f.primitive().coeffs; })
      .def("primitive_elements",
           [](const Field& f) {
             std::vector<std::vector<std::uint32_t>> out;
             for (const auto& a : f.primitive_elements()) out.push_back(a.coeffs);
             return out;
           })
      .def("mul", [](const Field& f, const py::object& a, const py::object& b) {
        return f.mul(element_of(f, a), element_of(f, b)).coeffs;
      })
      .def("add", [](const Field& f, const py::object& a, const py::object& b) {
        return f.add(element_of(f, a), element_of(f, b)).coeffs;
      })
      .def("pow", [](const Field& f, const py::object& a, std::int64_t e) { return f.pow(element_of(f, a), e).coeffs; })
      .def("log", [](const Field& f, const py::object& a) { return f.discrete_log(element_of(f, a)); })
      .def("multiplicative_order",
           [](const Field& f, const py::object& a) { return f.multiplicative_order(element_of(f, a)); })
      .def("__repr__", [](const Field& f) {
        return "Field(p=" + std::to_string(f.characteristic()) + ", k=" + std::to_string(f.degree()) + ")";
      });

  py::class_<SidonSequence>(m, "SidonSequence")
      .def(py::init(&make_sequence), py::arg("group"), py::arg("elements"),
           "group is a modulus n or a list of moduli")
      .def_property_readonly("moduli", [](const SidonSequence& s) { return s.group.moduli(); })
      .def_property_readonly("order", [](const SidonSequence& s) { return s.group.order(); })
      .def_property_readonly("elements",
                             [](const SidonSequence& s) {
                               py::list out;
                               for (const auto& e : s.elements) out.append(element_to_py(s.group, e));
                               return out;
                             })
      .def("__len__", &SidonSequence::size)
      .def("to_json", [](const SidonSequence& s) { return io::to_json(s).dump(); })
      .def("__repr__", [](const SidonSequence& s) { return "SidonSequence(" + io::to_json(s).dump() + ")"; });

  m.def("sidon_violation", [](const SidonSequence& s) { return violation_to_py(verify_sidon(s), s.group); },
        "None when all differences are distinct, otherwise the colliding pairs");
  m.def("is_sidon", [](const SidonSequence& s) { return !verify_sidon(s); });
  m.def("is_sidon_by_sums", [](const SidonSequence& s) { return !verify_sidon_sums(s); });
  m.def("is_weak_sidon", [](const SidonSequence& s) { return !verify_weak_sidon(s); });
  m.def("crt_flatten", [](const SidonSequence& s) { return crt_flatten(s.group).apply(s); });

  m.def("construct_etzion", py::overload_cast<std::uint64_t>(&construct_etzion), py::arg("q"));
  m.def(
      "construct_etzion_with",
      [](std::uint64_t q, const py::object& alpha) {
        const Field f = [&] {
          const auto pk = prime_power(q);
          if (!pk) throw py::value_error(std::to_string(q) + " is not a prime power");
          return Field::make(pk->first, pk->second);
        }();
        return construct_etzion(f, element_of(f, alpha));
      },
      py::arg("q"), py::arg("alpha"));
  m.def("construct_ruzsa", &construct_ruzsa, py::arg("p"));
  m.def("construct_bose", &construct_bose, py::arg("q"));
  m.def("construct_singer", &construct_singer, py::arg("q"));

  m.def(
      "max_sidon_size",
      [](const py::object& group, std::int64_t cap) {
        const auto s = make_sequence(group, py::list());
        const auto r = max_sidon_size(s.group, cap);
        py::list w;
        for (const auto& e : r.witness) w.append(element_to_py(s.group, e));
        return py::make_tuple(r.max, w);
      },
      py::arg("group"), py::arg("cap") = kDefaultCyclicSearchCap);
  m.def(
      "check_optimality",
      [](const SidonSequence& s, std::int64_t cap) {
        const auto r = check_optimality(s, cap);
        py::dict d;
        d["group_order"] = r.group_order;
        d["size"] = r.size;
        d["upper_bound"] = r.upper_bound;
        d["brute_force_max"] = r.brute_force_max ? py::object(py::int_(*r.brute_force_max)) : py::none();
        d["verdict"] = std::string(to_string(r.verdict));
        return d;
      },
      py::arg("sequence"), py::arg("cap") = kDefaultAllGroupsSearchCap);

  py::class_<Lattice>(m, "Lattice")
      .def(py::init(&make_lattice), py::arg("v1"), py::arg("v2"))
      .def_property_readonly("v1", &Lattice::v1)
      .def_property_readonly("v2", &Lattice::v2)
      .def_property_readonly("volume", &Lattice::volume)
      .def("hermite", &Lattice::hermite)
      .def("contains", &Lattice::contains)
      .def("canonical", &Lattice::canonical)
      .def("same_lattice", &Lattice::same_lattice)
      .def("__repr__", [](const Lattice& L) { return "Lattice(" + io::to_json(L).dump() + ")"; });

  m.def("fundamental_shape", [](const Lattice& L) { return fundamental_shape(L).points(); });
  m.def("is_lattice_tiling",
        [](const Lattice& L, const std::vector<Point>& shape) { return is_lattice_tiling(L, Shape(shape)); });
  m.def(
      "reduce",
      [](const Lattice& L, const std::vector<Point>& shape, Point p) {
        const auto r = reduce(L, Shape(shape), p);
        return py::make_tuple(r.center, r.offset);
      },
      "(center, offset) with center in L and offset in the shape");
  m.def(
      "minimal_period",
      [](const Lattice& L, const std::vector<Point>& dots, const std::optional<std::vector<Point>>& shape) {
        const auto P = minimal_period(L, shape_or_fundamental(L, shape), dots);
        return py::make_tuple(P.first, P.second, P.volume());
      },
      py::arg("lattice"), py::arg("dots"), py::arg("shape") = py::none());

  m.def(
      "folded_row",
      [](const Lattice& L, Point d, const std::optional<std::vector<Point>>& shape) {
        const auto row = folded_row(L, shape_or_fundamental(L, shape), direction(d));
        return py::make_tuple(row.points, row.complete);
      },
      py::arg("lattice"), py::arg("direction"), py::arg("shape") = py::none());
  m.def(
      "defines_folding",
      [](const Lattice& L, Point d, const std::optional<std::vector<Point>>& shape) {
        return defines_folding(L, shape_or_fundamental(L, shape), direction(d));
      },
      py::arg("lattice"), py::arg("direction"), py::arg("shape") = py::none());
  m.def(
      "defines_folding_gcd",
      [](const Lattice& L, Point d) { return defines_folding_gcd(L, L.volume(), direction(d)); },
      "None when the closed form does not apply");
  m.def(
      "folding_directions",
      [](const Lattice& L, const std::optional<std::vector<Point>>& shape) {
        std::vector<Point> out;
        for (const auto& d : folding_directions(L, shape_or_fundamental(L, shape))) out.push_back(d.step());
        return out;
      },
      py::arg("lattice"), py::arg("shape") = py::none());
  m.def(
      "fold",
      [](const std::vector<std::int64_t>& seq, const Lattice& L, Point d, const std::optional<std::vector<Point>>& shape) {
        return fold(seq, Tiling(L, shape_or_fundamental(L, shape)), direction(d));
      },
      py::arg("sequence"), py::arg("lattice"), py::arg("direction"), py::arg("shape") = py::none(),
      "Values aligned with the shape's point order");
  m.def(
      "unfold",
      [](const std::vector<std::int64_t>& values, const Lattice& L, Point d,
         const std::optional<std::vector<Point>>& shape) {
        return unfold(values, Tiling(L, shape_or_fundamental(L, shape)), direction(d));
      },
      py::arg("values"), py::arg("lattice"), py::arg("direction"), py::arg("shape") = py::none());

  py::class_<PeriodicDdc>(m, "PeriodicDdc")
      .def(py::init([](const Lattice& L, const std::vector<Point>& dots, const std::optional<std::vector<Point>>& shape) {
             PeriodicDdc c{L, shape_or_fundamental(L, shape), dots};
             c.validate();
             return c;
           }),
           py::arg("lattice"), py::arg("dots"), py::arg("shape") = py::none())
      .def_property_readonly("lattice", [](const PeriodicDdc& c) { return c.lattice; })
      .def_property_readonly("shape", [](const PeriodicDdc& c) { return c.shape.points(); })
      .def_property_readonly("dots", [](const PeriodicDdc& c) { return c.dots; })
      .def("to_json", [](const PeriodicDdc& c) { return io::to_json(c).dump(); })
      .def("render", [](const PeriodicDdc& c) { return render_ascii(c.shape, c.dots); });

  m.def("is_ddc", [](const std::vector<Point>& dots) { return !is_ddc(dots); });
  m.def("ddc_violation", [](const std::vector<Point>& dots) { return violation_to_py(is_ddc(dots)); });
  m.def("is_doubly_periodic_ddc", [](const PeriodicDdc& c) { return !is_doubly_periodic_ddc(c); });
  m.def("periodic_ddc_violation", [](const PeriodicDdc& c) { return violation_to_py(is_doubly_periodic_ddc(c)); });
  m.def("construct_welch", &construct_welch, py::arg("p"), py::arg("alpha"));
  m.def(
      "construct_golomb",
      [](std::uint64_t q, const py::object& alpha, const py::object& beta) {
        const auto pk = prime_power(q);
        if (!pk) throw py::value_error(std::to_string(q) + " is not a prime power");
        const Field f = Field::make(pk->first, pk->second);
        const auto a = alpha.is_none() ? f.primitive() : element_of(f, alpha);
        const auto b = beta.is_none() ? a : element_of(f, beta);
        return construct_golomb(f, a, b);
      },
      py::arg("q"), py::arg("alpha") = py::none(), py::arg("beta") = py::none());
  m.def("lower_left_dot", &lower_left_dot);
  m.def(
      "unfold_to_sidon",
      [](const PeriodicDdc& c, Point d, const std::optional<Point>& anchor) {
        return unfold_to_sidon(c, direction(d), anchor ? *anchor : lower_left_dot(c));
      },
      py::arg("ddc"), py::arg("direction"), py::arg("anchor") = py::none());
  m.def(
      "fold_sidon_to_ddc",
      [](const SidonSequence& s, const Lattice& L, Point d, const std::optional<std::vector<Point>>& shape) {
        return fold_sidon_to_ddc(s, L, shape_or_fundamental(L, shape), direction(d));
      },
      py::arg("sequence"), py::arg("lattice"), py::arg("direction"), py::arg("shape") = py::none());
  m.def(
      "max_ddc_dots",
      [](const Lattice& L, const std::optional<std::vector<Point>>& shape, std::int64_t cap) {
        const auto r = max_ddc_dots(L, shape_or_fundamental(L, shape), cap);
        return py::make_tuple(r.max, r.witness);
      },
      py::arg("lattice"), py::arg("shape") = py::none(), py::arg("cap") = kDefaultDdcSearchCap);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::vector<std::string> argv{"sidon2d"};
        argv.insert(argv.end(), args.begin(), args.end());
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        const int code = cli::run(argv, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "", "Runs the command line in-process: (exit code, stdout, stderr)");
}
