#include "igusa/fan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace igusa {

long Cone::det() const {
  if (gens.size() < 2) return 0;
  return cross(gens[0], gens[1]);
}

namespace {

bool in_open_quadrant(Vec2 v) { return v.x > 0 && v.y > 0; }

// CCW angular order within the closed first quadrant.
bool angle_less(Vec2 u, Vec2 v) { return cross(u, v) > 0; }

Fan build_fan_from_rays(std::vector<Vec2> rays, const std::vector<EdgeTag>& tags_in,
                        const NewtonPolytope& P) {
  Fan fan;
  fan.rays = rays;
  fan.ray_tags = tags_in;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    Cone ray;
    ray.gens = {rays[i]};
    ray.face = P.first_meet_locus(rays[i]);
    fan.cones.push_back(std::move(ray));
    if (i + 1 < rays.size()) {
      Cone c2;
      c2.gens = {rays[i], rays[i + 1]};
      Vec2 mid{rays[i].x + rays[i + 1].x, rays[i].y + rays[i + 1].y};
      c2.face = P.first_meet_locus(mid);
      fan.cones.push_back(std::move(c2));
    }
  }
  return fan;
}

}  // namespace

Fan attainable_fan(const NewtonPolytope& P) {
  std::vector<Vec2> rays{{1, 0}, {0, 1}};
  for (auto& fc : P.facets())
    if (in_open_quadrant(fc.normal)) rays.push_back(fc.normal);
  std::sort(rays.begin(), rays.end(), angle_less);
  std::vector<EdgeTag> tags;
  for (auto& r : rays) {
    bool is_normal = false;
    for (auto& fc : P.facets())
      if (fc.normal == r) is_normal = true;
    tags.push_back(is_normal ? EdgeTag::FacetNormal : EdgeTag::Axis);
  }
  return build_fan_from_rays(std::move(rays), tags, P);
}

namespace {

// First lattice point adjacent to `a` on the hull boundary of the nonzero
// lattice points of cone(a, b); requires cross(a, b) > 1.
Vec2 hirzebruch_jung_step(Vec2 a, Vec2 b) {
  // solve a.x * u + a.y * v = 1
  long u0, v0;
  long g = std::gcd(std::abs(a.x), std::abs(a.y));
  if (g != 1) throw std::logic_error("non-primitive generator");
  {
    // extended euclid on (a.x, a.y)
    long r0 = a.x, r1 = a.y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      long q = r0 / r1;
      std::swap(r0 -= q * r1, r1);
      std::swap(s0 -= q * s1, s1);
      std::swap(t0 -= q * t1, t1);
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    u0 = s0; v0 = t0;  // a.x*u0 + a.y*v0 = 1
  }
  Vec2 c0{-v0, u0};  // cross(a, c0) = 1
  long D = cross(a, b);
  long cb = cross(c0, b);
  // smallest k with cross(c0 + k a, b) >= 0
  long k = (cb >= 0) ? -(cb / D) : ((-cb + D - 1) / D);
  return {c0.x + k * a.x, c0.y + k * a.y};
}

}  // namespace

Fan refine_to_simple(const Fan& fan, const NewtonPolytope& P) {
  std::vector<Vec2> rays = fan.rays;
  std::vector<Vec2> inserted;
  for (auto& c : fan.cones) {
    if (c.gens.size() != 2) continue;
    Vec2 a = c.gens[0], b = c.gens[1];
    while (cross(a, b) > 1) {
      Vec2 m = hirzebruch_jung_step(a, b);
      inserted.push_back(m);
      a = m;
    }
  }
  for (auto& m : inserted) rays.push_back(m);
  std::sort(rays.begin(), rays.end(), angle_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  std::vector<EdgeTag> tags;
  for (auto& r : rays) {
    auto it = std::find(fan.rays.begin(), fan.rays.end(), r);
    tags.push_back(it != fan.rays.end() ? fan.ray_tags[it - fan.rays.begin()]
                                        : EdgeTag::Inserted);
  }
  return build_fan_from_rays(std::move(rays), tags, P);
}

std::vector<Vec2> fundamental_lattice_points(const Cone& cone) {
  if (cone.gens.size() == 1) return {{0, 0}};
  Vec2 a1 = cone.gens[0], a2 = cone.gens[1];
  long D = cross(a1, a2);
  if (D <= 0) throw std::invalid_argument("cone generators not CCW");
  long xmax = std::max({0L, a1.x, a2.x, a1.x + a2.x});
  long xmin = std::min({0L, a1.x, a2.x, a1.x + a2.x});
  long ymax = std::max({0L, a1.y, a2.y, a1.y + a2.y});
  long ymin = std::min({0L, a1.y, a2.y, a1.y + a2.y});
  std::vector<Vec2> out;
  for (long x = xmin; x <= xmax; ++x)
    for (long y = ymin; y <= ymax; ++y) {
      Vec2 h{x, y};
      long l1 = cross(h, a2);   // D * lambda1
      long l2 = cross(a1, h);   // D * lambda2
      if (l1 >= 0 && l1 < D && l2 >= 0 && l2 < D) out.push_back(h);
    }
  if (static_cast<long>(out.size()) != D)
    throw std::logic_error("fundamental parallelogram count mismatch");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace igusa
