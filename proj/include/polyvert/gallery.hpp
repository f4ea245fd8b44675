// Built-in example scenes, addressable from the CLI as "gallery:NAME".
#pragma once

#include "polyvert/rng.hpp"
#include "polyvert/scene.hpp"

#include <string>
#include <vector>

namespace polyvert {

std::vector<std::string> gallery_names();
Scene gallery_scene(const std::string& name);

// Random full-dimensional polytope: convex hull of `npoints` draws with
// coordinates k/4, k in [-8, 8]; redraws until the hull is full-dimensional.
ConvexPolyhedron random_polytope(size_t dim, size_t npoints, Rng& rng);

}  // namespace polyvert
