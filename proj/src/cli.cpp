#include "sidon2d/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "sidon2d/ddc.hpp"
#include "sidon2d/folding.hpp"
#include "sidon2d/json_io.hpp"
#include "sidon2d/sidon.hpp"

namespace sidon2d::cli {
namespace {

using io::Json;

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated integer list");
  return out;
}

Direction parse_direction(const std::string& text) {
  const auto v = parse_ints(text);
  if (v.size() != 2) throw std::invalid_argument("direction must be d1,d2");
  return {v[0], v[1]};
}

Lattice parse_lattice(const std::string& text) {
  const auto v = parse_ints(text);
  if (v.size() != 4) throw std::invalid_argument("lattice must be v11,v12,v21,v22");
  return Lattice::from_matrix(v[0], v[1], v[2], v[3]);
}

FieldElement parse_element(const std::string& text) {
  FieldElement a;
  for (std::int64_t c : parse_ints(text)) {
    if (c < 0) throw std::invalid_argument("field coefficients must be non-negative");
    a.coeffs.push_back(static_cast<std::uint32_t>(c));
  }
  return a;
}

Field field_of_order(std::int64_t q) {
  const auto pk = q > 0 ? prime_power(static_cast<std::uint64_t>(q)) : std::nullopt;
  if (!pk) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return Field::make(pk->first, pk->second);
}

Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

void merge_into(Json& target, const Json& source) {
  for (const auto& [k, v] : source.items()) target[k] = v;
}

std::string render_sequence(const SidonSequence& s) {
  const auto residues = s.cyclic_residues();
  std::string out;
  for (std::int64_t i = 0; i < s.group.order(); ++i) {
    const bool dot = std::find(residues.begin(), residues.end(), i) != residues.end();
    out += dot ? "•" : ".";
  }
  return out + '\n';
}

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;

  // construct
  std::string family;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::string alpha;
  std::string beta;

  // shared
  std::string input;
  std::string kind;
  std::string direction;
  std::string anchor = "lower-left";
  std::string lattice;

  // search
  std::int64_t max_sidon = 0;
  std::string moduli;
  bool max_ddc = false;
  std::int64_t cap = 0;
};

int do_construct(const Options& o, std::ostream& out) {
  Json j;
  j["family"] = o.family;
  if (o.family == "welch") {
    const std::int64_t p = o.p ? o.p : o.q;
    if (p == 0) throw std::invalid_argument("welch needs --p");
    std::int64_t alpha = 0;
    if (o.alpha.empty()) {
      alpha = static_cast<std::int64_t>(Field::make(static_cast<std::uint32_t>(p), 1).primitive().coeffs[0]);
    } else {
      alpha = parse_ints(o.alpha).at(0);
    }
    const PeriodicDdc c = construct_welch(p, alpha);
    if (o.format == "ascii") {
      out << render_ascii(c.shape, c.dots);
      return kExitOk;
    }
    j["p"] = p;
    j["alpha"] = alpha;
    merge_into(j, io::to_json(c));
  } else if (o.family == "golomb") {
    const Field f = field_of_order(o.q ? o.q : o.p);
    const FieldElement alpha = o.alpha.empty() ? f.primitive() : parse_element(o.alpha);
    const FieldElement beta = o.beta.empty() ? alpha : parse_element(o.beta);
    const PeriodicDdc c = construct_golomb(f, alpha, beta);
    if (o.format == "ascii") {
      out << render_ascii(c.shape, c.dots);
      return kExitOk;
    }
    j["q"] = f.order();
    j["field"] = io::to_json(f);
    j["alpha"] = io::to_json(alpha);
    j["beta"] = io::to_json(beta);
    merge_into(j, io::to_json(c));
  } else {
    SidonSequence s{GroupSpec::cyclic(2), {}};
    if (o.family == "etzion") {
      const Field f = field_of_order(o.q ? o.q : o.p);
      const FieldElement alpha = o.alpha.empty() ? f.primitive() : parse_element(o.alpha);
      s = construct_etzion(f, alpha);
      j["q"] = f.order();
      j["field"] = io::to_json(f);
      j["alpha"] = io::to_json(alpha);
    } else if (o.family == "ruzsa") {
      const std::int64_t p = o.p ? o.p : o.q;
      s = construct_ruzsa(static_cast<std::uint64_t>(p));
      j["p"] = p;
    } else if (o.family == "bose" || o.family == "singer") {
      const std::int64_t q = o.q ? o.q : o.p;
      if (q < 2) throw std::invalid_argument(o.family + " needs --q");
      s = o.family == "bose" ? construct_bose(static_cast<std::uint64_t>(q)) : construct_singer(static_cast<std::uint64_t>(q));
      j["q"] = q;
    } else {
      throw std::invalid_argument("unknown family '" + o.family + "'");
    }
    if (o.format == "ascii" && s.group.is_cyclic_form()) {
      out << render_sequence(s);
      return kExitOk;
    }
    merge_into(j, io::to_json(s));
    j["optimality"] = io::to_json(check_optimality(s));
  }
  emit(out, j);
  return kExitOk;
}

int do_verify(const Options& o, std::istream& in, std::ostream& out) {
  const Json input = read_json(o.input, in);
  Json result;
  if (o.kind == "sidon" || o.kind == "weak-sidon" || o.kind == "sidon-sums") {
    const SidonSequence s = io::sidon_from_json(input);
    const auto v = o.kind == "sidon"        ? verify_sidon(s)
                   : o.kind == "weak-sidon" ? verify_weak_sidon(s)
                                            : verify_sidon_sums(s);
    result["ok"] = !v.has_value();
    if (v) result["violation"] = io::to_json(*v, s.group);
  } else if (o.kind == "ddc") {
    if (!input.contains("dots")) throw std::invalid_argument("DDC JSON needs \"dots\"");
    const auto dots = io::points_from_json(input.at("dots"));
    const auto v = is_ddc(dots);
    result["ok"] = !v.has_value();
    if (v) result["violation"] = io::to_json(*v);
  } else if (o.kind == "periodic-ddc") {
    const auto v = is_doubly_periodic_ddc(io::ddc_from_json(input));
    result["ok"] = !v.has_value();
    if (v) result["violation"] = io::to_json(*v);
  } else {
    throw std::invalid_argument("unknown kind '" + o.kind + "'");
  }
  emit(out, result);
  return result["ok"].get<bool>() ? kExitOk : kExitViolation;
}

// Lattice and shape from --lattice, falling back to the input JSON.
PeriodicDdc geometry(const Options& o, const Json& input) {
  if (!o.lattice.empty()) {
    const Lattice L = parse_lattice(o.lattice);
    Shape S = input.contains("shape") && !input.contains("lattice") ? io::shape_from_json(input.at("shape"))
                                                                    : fundamental_shape(L);
    return PeriodicDdc{L, std::move(S), {}};
  }
  if (!input.contains("lattice")) throw std::invalid_argument("no lattice given (use --lattice or a \"lattice\" key)");
  PeriodicDdc c = io::ddc_from_json(input);
  c.dots.clear();
  return c;
}

Direction direction_of(const Options& o, const Json& input) {
  if (!o.direction.empty()) return parse_direction(o.direction);
  if (input.contains("direction")) {
    const Point p = io::point_from_json(input.at("direction"));
    return {p.x, p.y};
  }
  throw std::invalid_argument("no direction given (use --direction)");
}

int do_fold(const Options& o, std::istream& in, std::ostream& out) {
  const Json input = read_json(o.input, in);
  PeriodicDdc geo = geometry(o, input);
  const Direction d = direction_of(o, input);
  if (input.contains("sequence")) {
    const Tiling tiling = geo.validate();
    const auto values = fold(input.at("sequence").get<std::vector<std::int64_t>>(), tiling, d);
    Json j;
    j["lattice"] = io::to_json(geo.lattice);
    j["shape"] = io::to_json(geo.shape);
    j["values"] = values;
    emit(out, j);
    return kExitOk;
  }
  const SidonSequence s = io::sidon_from_json(input);
  const PeriodicDdc c = fold_sidon_to_ddc(s, geo.lattice, geo.shape, d);
  if (o.format == "ascii") {
    out << render_ascii(c.shape, c.dots);
  } else {
    emit(out, io::to_json(c));
  }
  return kExitOk;
}

int do_unfold(const Options& o, std::istream& in, std::ostream& out) {
  const Json input = read_json(o.input, in);
  const Direction d = direction_of(o, input);
  if (input.contains("values")) {
    const PeriodicDdc geo = geometry(o, input);
    const Tiling tiling = geo.validate();
    Json j;
    j["sequence"] = unfold(input.at("values").get<std::vector<std::int64_t>>(), tiling, d);
    emit(out, j);
    return kExitOk;
  }
  PeriodicDdc c = io::ddc_from_json(input);
  if (!o.lattice.empty()) c.lattice = parse_lattice(o.lattice);
  Point anchor;
  if (o.anchor == "lower-left") {
    anchor = lower_left_dot(c);
  } else {
    const auto v = parse_ints(o.anchor);
    if (v.size() != 2) throw std::invalid_argument("anchor must be lower-left or x,y");
    anchor = {v[0], v[1]};
  }
  const SidonSequence s = unfold_to_sidon(c, d, anchor);
  if (o.format == "ascii") {
    out << render_sequence(s);
  } else {
    emit(out, io::to_json(s));
  }
  return kExitOk;
}

int do_directions(const Options& o, std::istream& in, std::ostream& out) {
  const Json input = o.lattice.empty() ? read_json(o.input, in) : Json::object();
  const PeriodicDdc geo = geometry(o, input);
  const auto dirs = folding_directions(geo.lattice, geo.shape);
  Json j;
  j["size"] = geo.shape.size();
  j["count"] = dirs.size();
  Json list = Json::array();
  for (const auto& d : dirs) list.push_back(Json::array({d.d1(), d.d2()}));
  j["directions"] = std::move(list);
  emit(out, j);
  return kExitOk;
}

int do_search(const Options& o, std::istream& in, std::ostream& out) {
  Json j;
  if (o.max_ddc) {
    const Json input = o.lattice.empty() ? read_json(o.input, in) : Json::object();
    const PeriodicDdc geo = geometry(o, input);
    const auto r = max_ddc_dots(geo.lattice, geo.shape, o.cap ? o.cap : kDefaultDdcSearchCap);
    j["max"] = r.max;
    Json w = Json::array();
    for (const Point p : r.witness) w.push_back(io::to_json(p));
    j["witness"] = std::move(w);
  } else {
    std::vector<std::int64_t> moduli;
    if (!o.moduli.empty()) {
      moduli = parse_ints(o.moduli);
    } else if (o.max_sidon > 0) {
      moduli = {o.max_sidon};
    } else {
      throw std::invalid_argument("search needs --max-sidon N, --moduli or --max-ddc");
    }
    const GroupSpec g(moduli);
    const auto r = max_sidon_size(g, o.cap ? o.cap : kDefaultCyclicSearchCap);
    j["max"] = r.max;
    Json w = Json::array();
    for (const auto& e : r.witness) w.push_back(io::to_json(e, g));
    j["witness"] = std::move(w);
  }
  emit(out, j);
  return kExitOk;
}

int do_render(const Options& o, std::istream& in, std::ostream& out) {
  const Json input = read_json(o.input, in);
  if (input.contains("lattice")) {
    const PeriodicDdc c = io::ddc_from_json(input);
    out << render_ascii(c.shape, c.dots);
  } else if (input.contains("dots")) {
    const auto dots = io::points_from_json(input.at("dots"));
    std::vector<Point> shape_pts{Point{0, 0}};
    for (const Point p : dots) {
      if (p != Point{0, 0}) shape_pts.push_back(p);
    }
    out << render_ascii(Shape(shape_pts), dots);
  } else {
    out << render_sequence(io::sidon_from_json(input));
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sidon sequences and doubly periodic distinct-difference configurations", "sidon2d"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "ascii"}));
  app.add_option("--seed", o.seed, "Reserved; every operation is deterministic");

  auto* construct = app.add_subcommand("construct", "Build a Sidon sequence or periodic DDC");
  construct->add_option("--family", o.family, "Construction family")
      ->required()
      ->check(CLI::IsMember({"welch", "golomb", "bose", "singer", "ruzsa", "etzion"}));
  construct->add_option("--p", o.p, "Prime");
  construct->add_option("--q", o.q, "Prime power");
  construct->add_option("--alpha", o.alpha, "Primitive element (coefficients, constant first)");
  construct->add_option("--beta", o.beta, "Second primitive element (golomb)");

  auto* verify = app.add_subcommand("verify", "Check a property; exit 2 on violation");
  verify->add_option("--kind", o.kind, "Property")
      ->required()
      ->check(CLI::IsMember({"sidon", "weak-sidon", "sidon-sums", "ddc", "periodic-ddc"}));

  auto* fold_cmd = app.add_subcommand("fold", "Fold a sequence onto a shape");
  auto* unfold_cmd = app.add_subcommand("unfold", "Unfold a shape into a sequence");
  auto* directions = app.add_subcommand("directions", "List folding directions");
  auto* search = app.add_subcommand("search", "Exhaustive maximum searches");
  auto* render = app.add_subcommand("render", "ASCII rendering");

  for (auto* sub : {verify, fold_cmd, unfold_cmd, directions, search, render}) {
    sub->add_option("--input,-i", o.input, "JSON input file (default stdin)");
  }
  for (auto* sub : {fold_cmd, unfold_cmd, directions, search}) {
    sub->add_option("--lattice", o.lattice, "Generator matrix v11,v12,v21,v22");
  }
  for (auto* sub : {fold_cmd, unfold_cmd}) sub->add_option("--direction", o.direction, "Direction d1,d2");
  unfold_cmd->add_option("--anchor", o.anchor, "lower-left or x,y");
  for (auto* sub : {construct, fold_cmd, unfold_cmd}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "ascii"}));
  }

  search->add_option("--max-sidon", o.max_sidon, "Maximum Sidon set in Z_n");
  search->add_option("--moduli", o.moduli, "Maximum Sidon set in a product group m1,m2,...");
  search->add_flag("--max-ddc", o.max_ddc, "Maximum doubly periodic DDC on a tiling");
  search->add_option("--cap", o.cap, "Override the search cap");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return do_construct(o, out);
    if (*verify) return do_verify(o, in, out);
    if (*fold_cmd) return do_fold(o, in, out);
    if (*unfold_cmd) return do_unfold(o, in, out);
    if (*directions) return do_directions(o, in, out);
    if (*search) return do_search(o, in, out);
    if (*render) return do_render(o, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sidon2d::cli
