#pragma once

#include <string>
#include <vector>

#include "probekit/orbit.hpp"

namespace probekit::render {

struct RenderSpec {
  Window box;
  std::vector<Probe> probes;
  std::vector<std::vector<Point>> components;  // one colour each
  bool labels = false;
  int width = 520;
};

// Planar polytopes only. Everything is clipped to the box in exact
// arithmetic and converted to floating point at the end.
std::string render_svg(const Polytope& P, const RenderSpec& spec);

}  // namespace probekit::render
