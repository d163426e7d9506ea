// Newton polytope at infinity of a Laurent polynomial: exact integer 2-D
// convex hull, facet data, the piecewise-linear minimum d(a), and first meet
// loci F(a).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igusa/laurent.hpp"

namespace igusa {

struct Vec2 {
  long x = 0;
  long y = 0;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

inline long cross(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }
inline long dot(Vec2 u, Vec2 v) { return u.x * v.x + u.y * v.y; }

Vec2 primitive(Vec2 v);  // v / gcd, v != 0

// A face of the polytope: the full polytope, a facet (edge), or a vertex.
// `points` lists the *support* points lying on the face, in hull order.
struct Face {
  int dim = 0;
  std::vector<Vec2> points;
  friend bool operator==(const Face&, const Face&) = default;
};

class NewtonPolytope {
 public:
  // Hull of the support of f.  Throws std::invalid_argument (message
  // "degenerate polytope...") unless the hull is 2-dimensional.
  explicit NewtonPolytope(const Laurent& f);

  const std::vector<Vec2>& vertices() const { return vertices_; }  // CCW
  const std::vector<Vec2>& support() const { return support_; }

  struct Facet {
    Vec2 normal;   // primitive inward normal
    long offset;   // min <normal, .> over the polytope
    std::vector<Vec2> points;  // support points on the facet
  };
  const std::vector<Facet>& facets() const { return facets_; }

  // d(a) = min over vertices of <a, v>.
  long d_value(Vec2 a) const;

  // F(a): face on which <a,.> attains d(a); F(0) is the whole polytope.
  Face first_meet_locus(Vec2 a) const;

  Face full_face() const;

  // All faces: the polytope itself, facets, vertices.
  std::vector<Face> all_faces() const;

 private:
  std::vector<Vec2> support_;
  std::vector<Vec2> vertices_;
  std::vector<Facet> facets_;
};

}  // namespace igusa
