#pragma once

#include <string>

#include "mks/harness.hpp"

namespace mks {

// SVG 1.1 rendering of the strip -1 <= u <= 1: diagram vertices and edges up
// to the given denominator cap in the background, every simplified candidate
// edgepath system overlaid with per-type stroke styling and a legend keyed to
// slopes. Output bytes are deterministic for a fixed report and cap.
std::string render_diagram(const BoundReport& rep, long max_den_vertices = 12);

}  // namespace mks
