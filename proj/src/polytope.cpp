#include "igusa/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace igusa {

Vec2 primitive(Vec2 v) {
  long g = std::gcd(std::abs(v.x), std::abs(v.y));
  if (g == 0) throw std::invalid_argument("primitive of zero vector");
  return {v.x / g, v.y / g};
}

namespace {

// Andrew monotone chain; returns CCW vertex cycle without repetition.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower hull
    while (k >= 2 && cross({h[k - 1].x - h[k - 2].x, h[k - 1].y - h[k - 2].y},
                           {pts[i].x - h[k - 2].x, pts[i].y - h[k - 2].y}) <= 0)
      --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
    while (k >= t && cross({h[k - 1].x - h[k - 2].x, h[k - 1].y - h[k - 2].y},
                           {pts[i].x - h[k - 2].x, pts[i].y - h[k - 2].y}) <= 0)
      --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

NewtonPolytope::NewtonPolytope(const Laurent& f) {
  for (auto& e : f.support()) support_.push_back({e.a, e.b});
  std::sort(support_.begin(), support_.end());
  vertices_ = convex_hull(support_);
  if (vertices_.size() < 3)
    throw std::invalid_argument(
        "degenerate polytope: Newton polytope at infinity is not 2-dimensional");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Vec2 v = vertices_[i];
    Vec2 w = vertices_[(i + 1) % vertices_.size()];
    Vec2 t{w.x - v.x, w.y - v.y};
    Vec2 n = primitive({-t.y, t.x});  // inward for a CCW cycle
    Facet fc;
    fc.normal = n;
    fc.offset = dot(n, v);
    for (auto& s : support_)
      if (dot(n, s) == fc.offset) fc.points.push_back(s);
    facets_.push_back(std::move(fc));
  }
}

long NewtonPolytope::d_value(Vec2 a) const {
  long best = dot(a, vertices_[0]);
  for (auto& v : vertices_) best = std::min(best, dot(a, v));
  return best;
}

Face NewtonPolytope::full_face() const {
  return Face{2, support_};
}

Face NewtonPolytope::first_meet_locus(Vec2 a) const {
  if (a.x == 0 && a.y == 0) return full_face();
  long d = d_value(a);
  Face f;
  for (auto& s : support_)
    if (dot(a, s) == d) f.points.push_back(s);
  int vertex_hits = 0;
  for (auto& v : vertices_)
    if (dot(a, v) == d) ++vertex_hits;
  f.dim = (vertex_hits >= 2) ? 1 : 0;
  return f;
}

std::vector<Face> NewtonPolytope::all_faces() const {
  std::vector<Face> out;
  out.push_back(full_face());
  for (auto& fc : facets_) out.push_back(Face{1, fc.points});
  for (auto& v : vertices_) out.push_back(Face{0, {v}});
  return out;
}

}  // namespace igusa
