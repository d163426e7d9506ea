// Rational cone fans in the first quadrant: the normal fan restricted to
// R_+^2 (attainable-face fan), its minimal smooth refinement, edge
// classification and fundamental lattice points of 2-D cones.
#pragma once

#include <vector>

#include "igusa/polytope.hpp"

namespace igusa {

enum class EdgeTag {
  FacetNormal,  // member of D(Gamma_infty)
  Axis,         // e1/e2 completing the quadrant, not a facet normal
  Inserted,     // added by the smooth refinement
};

struct Cone {
  // one generator: a ray; two generators: 2-D cone, CCW order
  std::vector<Vec2> gens;
  Face face;  // attainable face met first along the cone's relative interior
  long det() const;  // 0 for rays
};

struct Fan {
  std::vector<Cone> cones;         // rays and 2-D cones, CCW sweep order
  std::vector<Vec2> rays;          // all edges, CCW from (1,0) to (0,1)
  std::vector<EdgeTag> ray_tags;   // parallel to rays
};

// The fan F_A supported on R_+^2: rays are the facet normals interior to the
// open quadrant plus the coordinate axes; 2-D cones span consecutive rays.
// Every cone is tagged with its attainable face.
Fan attainable_fan(const NewtonPolytope& P);

// Minimal refinement of `fan` in which every 2-D cone has determinant +-1
// (Hirzebruch-Jung insertion of hull boundary rays).
Fan refine_to_simple(const Fan& fan, const NewtonPolytope& P);

// Lattice points of {s*a1 + t*a2 : 0 <= s,t < 1} for a 2-D cone; exactly
// |det| points, the origin included.
std::vector<Vec2> fundamental_lattice_points(const Cone& cone);

}  // namespace igusa
