#include "core/jsonio.hpp"

#include <cmath>

namespace curveft {

void expect_keys(const Json& obj, const std::vector<std::string>& allowed,
                 const std::string& where) {
  if (!obj.is_object()) fail(ErrorCode::Parse, where + ": expected a JSON object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) fail(ErrorCode::Parse, where + ": unknown key '" + it.key() + "'");
  }
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::Parse, "malformed JSON");
  return j;
}

Vec vec_from_json(const Json& arr, int expected_dim, const std::string& where) {
  if (!arr.is_array()) fail(ErrorCode::Parse, where + ": expected an array");
  if (expected_dim >= 0 && static_cast<int>(arr.size()) != expected_dim)
    fail(ErrorCode::Parse, where + ": expected " + std::to_string(expected_dim) + " entries");
  Vec v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) fail(ErrorCode::Parse, where + ": entries must be numbers");
    v[i] = arr[i].get<double>();
  }
  return v;
}

namespace {

double need_number(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number())
    fail(ErrorCode::Parse, where + ": missing numeric field '" + key + "'");
  return obj[key].get<double>();
}

double number_or(const Json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) fail(ErrorCode::Parse, "field '" + key + "' must be a number");
  return obj[key].get<double>();
}

int need_int(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number_integer())
    fail(ErrorCode::Parse, where + ": missing integer field '" + key + "'");
  return obj[key].get<int>();
}

Box box_from_json(const Json& spec, const std::string& where) {
  expect_keys(spec, {"lo", "hi"}, where);
  Vec lo = vec_from_json(spec.at("lo"), -1, where + ".lo");
  Vec hi = vec_from_json(spec.at("hi"), static_cast<int>(lo.size()), where + ".hi");
  return Box(lo, hi);
}

HeightSpec height_from_json(const Json& spec, const std::string& where) {
  expect_keys(spec, {"kind", "r", "curvatures"}, where);
  std::string kind = spec.value("kind", "");
  if (kind == "sphere") return SphereCapHeight{number_or(spec, "r", 1.0)};
  if (kind == "paraboloid")
    return ParaboloidHeight{vec_from_json(spec.at("curvatures"), -1, where + ".curvatures")};
  fail(ErrorCode::Parse, where + ": unknown height kind '" + kind + "'");
}

std::pair<std::string, Json> split_kind(const Json& spec, const std::string& where) {
  expect_keys(spec, {"kind", "params"}, where);
  if (!spec.contains("kind") || !spec["kind"].is_string())
    fail(ErrorCode::Parse, where + ": missing string field 'kind'");
  Json params = spec.value("params", Json::object());
  return {spec["kind"].get<std::string>(), params};
}

}  // namespace

bool surface_json_is_hemisphere(const Json& spec) {
  return spec.is_object() && spec.value("kind", "") == "hemisphere";
}

HemispherePair hemisphere_pair_from_json(const Json& spec) {
  auto [kind, params] = split_kind(spec, "surface");
  if (kind != "hemisphere") fail(ErrorCode::Parse, "surface: not a hemisphere spec");
  expect_keys(params, {"d", "r"}, "surface.params");
  return hemisphere_pair(need_int(params, "d", "surface.params"), number_or(params, "r", 1.0));
}

Surface surface_from_json(const Json& spec) {
  auto [kind, params] = split_kind(spec, "surface");
  const std::string where = "surface.params";
  if (kind == "circle") {
    expect_keys(params, {"r"}, where);
    return circle(number_or(params, "r", 1.0));
  }
  if (kind == "circle_double") {
    expect_keys(params, {"r"}, where);
    return circle_double(number_or(params, "r", 1.0));
  }
  if (kind == "sphere") {
    expect_keys(params, {"d", "r"}, where);
    return sphere(need_int(params, "d", where), number_or(params, "r", 1.0));
  }
  if (kind == "hemisphere") {
    expect_keys(params, {"d", "r"}, where);
    return hemisphere_pair(need_int(params, "d", where), number_or(params, "r", 1.0)).half;
  }
  if (kind == "cap_graph") {
    expect_keys(params, {"d", "height", "box"}, where);
    if (!params.contains("height") || !params.contains("box"))
      fail(ErrorCode::Parse, where + ": cap_graph needs 'height' and 'box'");
    return cap_graph(need_int(params, "d", where), height_from_json(params["height"], where),
                     box_from_json(params["box"], where + ".box"));
  }
  if (kind == "spherical_cap") {
    expect_keys(params, {"d", "r", "half_angle"}, where);
    return spherical_cap(need_int(params, "d", where), number_or(params, "r", 1.0),
                         need_number(params, "half_angle", where));
  }
  if (kind == "figure1_curve") {
    expect_keys(params, {}, where);
    return figure1_curve();
  }
  if (kind == "revolution_surface") {
    expect_keys(params, {"d"}, where);
    return revolution_surface(need_int(params, "d", where));
  }
  if (kind == "flat_segment") {
    expect_keys(params, {"length"}, where);
    return flat_segment(number_or(params, "length", 1.0));
  }
  fail(ErrorCode::Parse, "surface: unknown kind '" + kind + "'");
}

Window window_from_json(const Surface& surface, const Json& spec) {
  expect_keys(spec, {"kind", "chart", "support", "floor", "amplitude"}, "window");
  std::string kind = spec.value("kind", "bump");
  int chart = spec.value("chart", 0);
  if (chart < 0 || chart >= surface.chart_count())
    fail(ErrorCode::Parse, "window: chart index out of range");
  if (kind == "one") {
    expect_keys(spec, {"kind", "chart"}, "window");
    return window_one(surface, chart);
  }
  if (kind == "bump") {
    if (!spec.contains("support")) fail(ErrorCode::Parse, "window: bump needs 'support'");
    Box support = box_from_json(spec["support"], "window.support");
    double floor = number_or(spec, "floor", 0.25);
    double amplitude = number_or(spec, "amplitude", 1.0);
    return bump_window(surface, chart, support, floor, amplitude);
  }
  fail(ErrorCode::Parse, "window: unknown kind '" + kind + "'");
}

SpectrumSpec spectrum_from_json(const Json& spec, int dim) {
  expect_keys(spec,
              {"kind", "spacing", "radius", "step", "axis", "cone_axis", "half_angle", "points",
               "exclude_zero"},
              "spectrum");
  std::string kind = spec.value("kind", "");
  SpectrumSpec out;
  if (kind == "lattice_ball") {
    out = SpectrumSpec::lattice_ball(dim, number_or(spec, "spacing", 1.0),
                                     need_number(spec, "radius", "spectrum"));
  } else if (kind == "axis_line") {
    out = SpectrumSpec::axis_line(dim, number_or(spec, "step", 1.0),
                                  need_number(spec, "radius", "spectrum"),
                                  spec.value("axis", -1));
  } else if (kind == "cone_lattice") {
    if (!spec.contains("cone_axis")) fail(ErrorCode::Parse, "spectrum: cone_lattice needs axis");
    out = SpectrumSpec::cone_lattice(vec_from_json(spec["cone_axis"], dim, "spectrum.cone_axis"),
                                     need_number(spec, "half_angle", "spectrum"),
                                     number_or(spec, "spacing", 1.0),
                                     need_number(spec, "radius", "spectrum"));
  } else if (kind == "explicit") {
    if (!spec.contains("points") || !spec["points"].is_array())
      fail(ErrorCode::Parse, "spectrum: explicit needs 'points'");
    std::vector<Vec> pts;
    for (const auto& p : spec["points"]) pts.push_back(vec_from_json(p, dim, "spectrum.points"));
    out = SpectrumSpec::explicit_list(std::move(pts));
  } else {
    fail(ErrorCode::Parse, "spectrum: unknown kind '" + kind + "'");
  }
  out.exclude_zero = spec.value("exclude_zero", false);
  return out;
}

std::vector<Vec> frequencies_from_json(const Json& spec, int dim) {
  expect_keys(spec, {"kind", "direction", "from", "to", "count", "spacing", "lo", "hi", "counts",
                     "points"},
              "frequencies");
  std::string kind = spec.value("kind", "");
  if (kind == "ray") {
    Vec dir = vec_from_json(spec.at("direction"), dim, "frequencies.direction");
    bool log_spacing = spec.value("spacing", "linear") == std::string("log");
    auto radii = spaced_values(need_number(spec, "from", "frequencies"),
                               need_number(spec, "to", "frequencies"),
                               need_int(spec, "count", "frequencies"), log_spacing);
    return ray_frequencies(dir, radii);
  }
  if (kind == "grid") {
    Vec lo = vec_from_json(spec.at("lo"), dim, "frequencies.lo");
    Vec hi = vec_from_json(spec.at("hi"), dim, "frequencies.hi");
    if (!spec.contains("counts") || !spec["counts"].is_array())
      fail(ErrorCode::Parse, "frequencies: grid needs 'counts'");
    std::vector<int> counts;
    for (const auto& c : spec["counts"]) counts.push_back(c.get<int>());
    return grid_frequencies(lo, hi, counts);
  }
  if (kind == "list") {
    std::vector<Vec> out;
    if (!spec.contains("points") || !spec["points"].is_array())
      fail(ErrorCode::Parse, "frequencies: list needs 'points'");
    for (const auto& p : spec["points"]) out.push_back(vec_from_json(p, dim, "frequencies.points"));
    return out;
  }
  fail(ErrorCode::Parse, "frequencies: unknown kind '" + kind + "'");
}

}  // namespace curveft
