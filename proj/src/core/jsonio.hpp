#pragma once

#include "core/catalog.hpp"
#include "core/fourier.hpp"
#include "core/spectrum.hpp"

#include <json.hpp>

#include <memory>

namespace curveft {

using Json = nlohmann::json;

// Strict parsing helpers: unknown keys are rejected everywhere.
void expect_keys(const Json& obj, const std::vector<std::string>& allowed,
                 const std::string& where);
Json parse_json(const std::string& text);

// {"kind": "...", "params": {...}}; kinds are the catalog constructor names:
// circle, circle_double, sphere, hemisphere, cap_graph, spherical_cap,
// figure1_curve, revolution_surface, flat_segment.
Surface surface_from_json(const Json& spec);
// The hemisphere kinds also expose the full/half pair.
bool surface_json_is_hemisphere(const Json& spec);
HemispherePair hemisphere_pair_from_json(const Json& spec);

// {"kind": "bump"|"one", ...} attached to a chart of the given surface.
Window window_from_json(const Surface& surface, const Json& spec);

// {"kind": "lattice_ball"|"axis_line"|"cone_lattice"|"explicit", ...}
SpectrumSpec spectrum_from_json(const Json& spec, int dim);

// {"kind": "ray"|"grid"|"list", ...}; see the CLI docs for fields.
std::vector<Vec> frequencies_from_json(const Json& spec, int dim);

Vec vec_from_json(const Json& arr, int expected_dim, const std::string& where);

}  // namespace curveft
