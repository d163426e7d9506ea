#include "igusa/oracle.hpp"

#include <climits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "igusa/polytope.hpp"

namespace igusa {

namespace {

long ceil_div(long a, long b) {  // b > 0
  long q = a / b, r = a % b;
  return q + (r > 0 ? 1 : 0);
}

long floor_div(long a, long b) {  // b > 0
  long q = a / b, r = a % b;
  return q - (r < 0 ? 1 : 0);
}

// sum_{j >= j0} p^{-B j}, requires B >= 1
Rat geo_from(long p, long B, long j0) {
  return rat_pow(Rat(p), -B * j0) / (1 - rat_pow(Rat(p), -B));
}

// sum_{j = lo}^{hi} p^{-B j}; finite, any sign of B
Rat finite_geo(long p, long B, long lo, long hi) {
  if (hi < lo) return 0;
  if (B == 0) return Rat(hi - lo + 1);
  Rat x = rat_pow(Rat(p), -B);
  return (rat_pow(x, lo) - rat_pow(x, hi + 1)) / (1 - x);
}

// Depth profile of ord on one unit-torus stratum, read off the residue field:
// mass at J = 0 is w0, mass at J >= 1 is C * p^{-J}; valid whenever every
// torus zero of the face reduction has a unit partial derivative.
struct FaceWeights {
  Rat w0;
  Rat C;
  long N = 0;
  bool certified = true;
};

FaceWeights face_weights(const Laurent& fbar, const Face& tau, long p) {
  FaceWeights w;
  std::vector<Exp> pts;
  for (auto v : tau.points) pts.push_back({v.x, v.y});
  Laurent ftau = fbar.restrict_support(pts);
  if (ftau.empty()) {
    // face support vanished mod p: no depth-1 information
    w.certified = false;
    w.N = (p - 1) * (p - 1);
  } else {
    w.N = count_torus_zeros(ftau, p);
    w.certified = simple_zeros_certificate(ftau, p);
  }
  w.w0 = Rat((p - 1) * (p - 1) - w.N, p * p);
  w.w0.canonicalize();
  w.C = Rat(w.N * (p - 1), p * p);
  w.C.canonicalize();
  return w;
}

// Accumulates vol{ord f = m} for |m| <= M.
struct Window {
  long M;
  std::map<long, Rat>& v;
  void add(long m, const Rat& x) {
    if (x == 0 || m < -M || m > M) return;
    v[m] += x;
    if (v[m] == 0) v.erase(m);
  }
};

// G0(m) = sum over j >= (1,1) with j.D = m of p^{-j.A}
Rat cone_G0(long p, long m, long A1, long A2, long D1, long D2) {
  if (D1 == 0 && D2 == 0)
    return m == 0 ? geo_from(p, A1, 1) * geo_from(p, A2, 1) : Rat(0);
  if (D1 == 0 || D2 == 0) {
    long Df = D1 == 0 ? D2 : D1;       // the nonzero one, fixes its own index
    long Af = D1 == 0 ? A2 : A1;
    long Ag = D1 == 0 ? A1 : A2;
    if (m % Df != 0) return 0;
    long j = m / Df;
    if (j < 1) return 0;
    return geo_from(p, Ag, 1) * rat_pow(Rat(p), -j * Af);
  }
  if ((D1 > 0) == (D2 > 0)) {  // same sign: finitely many solutions
    Rat s = 0;
    long lim = (std::abs(m) - std::abs(D2)) / std::abs(D1);
    for (long j1 = 1; j1 <= lim; ++j1) {
      long r = m - j1 * D1;
      if (r % D2 != 0) continue;
      long j2 = r / D2;
      if (j2 >= 1) s += rat_pow(Rat(p), -(j1 * A1 + j2 * A2));
    }
    return s;
  }
  // opposite signs: a full lattice line, geometric along u = (|D2|, |D1|)/g
  long g = std::gcd(std::abs(D1), std::abs(D2));
  if (m % g != 0) return 0;
  long x0, y0;  // extended euclid: x0 D1 + y0 D2 = g
  {
    long a = D1, b = D2, xa = 1, ya = 0, xb = 0, yb = 1;
    while (b != 0) {
      long q = a / b;
      long t;
      t = a - q * b; a = b; b = t;
      t = xa - q * xb; xa = xb; xb = t;
      t = ya - q * yb; ya = yb; yb = t;
    }
    if (a < 0) { a = -a; xa = -xa; ya = -ya; }
    x0 = xa; y0 = ya;
  }
  long j1 = x0 * (m / g), j2 = y0 * (m / g);
  long u1 = std::abs(D2) / g, u2 = std::abs(D1) / g;
  long t0 = std::max(ceil_div(1 - j1, u1), ceil_div(1 - j2, u2));
  j1 += t0 * u1;
  j2 += t0 * u2;
  long step = u1 * A1 + u2 * A2;
  return rat_pow(Rat(p), -(j1 * A1 + j2 * A2)) / (1 - rat_pow(Rat(p), -step));
}

// G1(m') = sum over j >= (1,1) with j.D <= m' of p^{-j.B}, B = A - D.
// Convergence: B_i >= 1 in every direction the region is unbounded along.
Rat cone_G1(long p, long mp, long A1, long A2, long D1, long D2) {
  long B1 = A1 - D1, B2 = A2 - D2;
  if (D1 <= 0 && D2 <= 0) {
    if (D1 == 0 && D2 == 0)
      return mp >= 0 ? geo_from(p, B1, 1) * geo_from(p, B2, 1) : Rat(0);
    if (D1 == 0) {
      long L = std::max(1L, ceil_div(-mp, -D2));
      return geo_from(p, B1, 1) * geo_from(p, B2, L);
    }
    if (D2 == 0) {
      long L = std::max(1L, ceil_div(-mp, -D1));
      return geo_from(p, B1, L) * geo_from(p, B2, 1);
    }
    Rat full = geo_from(p, B1, 1) * geo_from(p, B2, 1);
    long mm = -mp - 1;  // complement: j.|D| <= mm
    Rat comp = 0;
    for (long j1 = 1; j1 * (-D1) <= mm - (-D2); ++j1) {
      long J2 = (mm - j1 * (-D1)) / (-D2);
      comp += rat_pow(Rat(p), -j1 * B1) * finite_geo(p, B2, 1, J2);
    }
    return full - comp;
  }
  if (D1 >= 1 && D2 >= 1) {
    Rat s = 0;
    for (long j1 = 1; j1 * D1 <= mp - D2; ++j1) {
      long J2 = (mp - j1 * D1) / D2;
      s += rat_pow(Rat(p), -j1 * B1) * finite_geo(p, B2, 1, J2);
    }
    return s;
  }
  if (D1 > 0)  // reduce to the D1 < 0 < D2 layout
    return cone_G1(p, mp, A2, A1, D2, D1);
  // D1 < 0 < D2.  Inner variable j1 has lower bound L(j2) = max(1,
  // ceil((j2 D2 - m')/|D1|)); split j2 at the point where L exceeds 1.
  long aD1 = -D1;
  Rat s = 0;
  long Jstar = floor_div(mp + aD1, D2);  // L(j2) <= 1 iff j2 <= Jstar
  Rat inner1 = geo_from(p, B1, 1);
  for (long j2 = 1; j2 <= Jstar; ++j2)
    s += rat_pow(Rat(p), -j2 * B2) * inner1;
  // beyond Jstar: within each class j2 = s0 + t*|D1|, L grows by exactly D2
  long eps = aD1 * A2 + D2 * A1;  // = |D1| B2 + D2 B1, strictly positive
  Rat rho = rat_pow(Rat(p), -eps);
  Rat invB1 = 1 - rat_pow(Rat(p), -B1);
  for (long s0 = std::max(1L, Jstar + 1); s0 <= std::max(1L, Jstar + 1) + aD1 - 1; ++s0) {
    long L = ceil_div(s0 * D2 - mp, aD1);
    Rat base = rat_pow(Rat(p), -(s0 * B2 + L * B1)) / invB1;
    s += base / (1 - rho);
  }
  return s;
}

// full 2-D cone contribution over the window
void add_cone(Window& W, long p, const FaceWeights& w, Vec2 a, Vec2 b,
              const NewtonPolytope& P) {
  long A1 = a.x + a.y, A2 = b.x + b.y;
  long D1 = P.d_value(a), D2 = P.d_value(b);
  for (long m = -W.M; m <= W.M; ++m) {
    if (w.w0 != 0) W.add(m, w.w0 * cone_G0(p, m, A1, A2, D1, D2));
    if (w.C != 0)
      W.add(m, w.C * rat_pow(Rat(p), -m) * cone_G1(p, m - 1, A1, A2, D1, D2));
  }
}

void add_ray(Window& W, long p, const FaceWeights& w, Vec2 a,
             const NewtonPolytope& P) {
  long A = a.x + a.y;
  long D = P.d_value(a);
  long B = A - D;
  for (long m = -W.M; m <= W.M; ++m) {
    if (w.w0 != 0) {
      if (D == 0) {
        if (m == 0) W.add(m, w.w0 * geo_from(p, A, 1));
      } else if (m % D == 0 && m / D >= 1) {
        W.add(m, w.w0 * rat_pow(Rat(p), -(m / D) * A));
      }
    }
    if (w.C != 0) {
      Rat g = 0;
      if (D == 0) {
        if (m - 1 >= 0) g = geo_from(p, B, 1);
      } else if (D < 0) {
        long L = std::max(1L, ceil_div(1 - m, -D));
        g = geo_from(p, B, L);
      } else {
        g = finite_geo(p, B, 1, floor_div(m - 1, D));
      }
      if (g != 0) W.add(m, w.C * rat_pow(Rat(p), -m) * g);
    }
  }
}

// single stratum at lattice point k
void add_point(Window& W, long p, const FaceWeights& w, Vec2 k,
               const NewtonPolytope& P) {
  long n = k.x + k.y;
  long d = P.d_value(k);
  if (w.w0 != 0) W.add(d, w.w0 * rat_pow(Rat(p), -n));
  if (w.C != 0)
    for (long m = std::max(d + 1, -W.M); m <= W.M; ++m)
      W.add(m, w.C * rat_pow(Rat(p), -n + d - m));
}

}  // namespace

Rat phi_measure(const PhiSpec& phi, long p) {
  Rat unit(p - 1, p);
  switch (phi.kind) {
    case PhiSpec::Quadrant: return 1;
    case PhiSpec::Ball: return rat_pow(Rat(p), -2 * phi.e);
    case PhiSpec::UnitTorus: return unit * unit;
    case PhiSpec::HalfTorus: return unit;
  }
  return 0;
}

namespace {

using WeightTable = std::map<std::vector<Vec2>, FaceWeights>;

const FaceWeights& weights_for(const WeightTable& table, const Face& tau) {
  auto it = table.find(tau.points);
  if (it == table.end()) throw std::logic_error("face missing from weight table");
  return it->second;
}

// stabilized-line contribution: strata u + j*w for j >= 0
void line_contrib(Window& W, long p, const NewtonPolytope& P,
                  const WeightTable& table, Vec2 u, Vec2 wd, const Rat& sign) {
  // threshold beyond which argmin_v <u + j w, v> is constant
  long Kstar = 0;
  const auto& verts = P.vertices();
  for (auto v1 : verts)
    for (auto v2 : verts) {
      long dw = dot(wd, v2) - dot(wd, v1);
      if (dw <= 0) continue;  // v2 never overtakes v1 asymptotically
      long du = dot(u, v1) - dot(u, v2);
      if (du >= 0) Kstar = std::max(Kstar, floor_div(du, dw) + 1);
    }
  auto at = [&](long j) { return Vec2{u.x + j * wd.x, u.y + j * wd.y}; };
  std::map<long, Rat> local;
  Window LW{W.M, local};
  for (long j = 0; j < Kstar; ++j) {
    Vec2 k = at(j);
    add_point(LW, p, weights_for(table, P.first_meet_locus(k)), k, P);
  }
  // stable part: d(k(j)) = d0 + j*delta, |k(j)| = n0 + j
  Vec2 k0 = at(Kstar);
  Face tau = P.first_meet_locus(k0);
  const FaceWeights& fw = weights_for(table, tau);
  long delta = P.d_value(at(Kstar + 1)) - P.d_value(k0);
  long d0 = P.d_value(k0) - Kstar * delta;
  long n0 = u.x + u.y;
  for (long m = -W.M; m <= W.M; ++m) {
    if (fw.w0 != 0) {
      if (delta == 0) {
        if (m == d0) LW.add(m, fw.w0 * rat_pow(Rat(p), -n0) * geo_from(p, 1, Kstar));
      } else if ((m - d0) % delta == 0 && (m - d0) / delta >= Kstar) {
        long j = (m - d0) / delta;
        LW.add(m, fw.w0 * rat_pow(Rat(p), -n0 - j));
      }
    }
    if (fw.C != 0) {
      Rat g = 0;
      long e = 1 - delta;
      if (delta <= 0) {
        long lo = Kstar;
        if (delta < 0) lo = std::max(lo, ceil_div(d0 + 1 - m, -delta));
        if (delta != 0 || d0 <= m - 1) g = geo_from(p, e, lo);
      } else {
        g = finite_geo(p, e, Kstar, floor_div(m - 1 - d0, delta));
      }
      if (g != 0) LW.add(m, fw.C * rat_pow(Rat(p), -n0 + d0 - m) * g);
    }
  }
  for (auto& [m, x] : local) W.add(m, sign * x);
}

// uncertified fallback: literal stratum-by-stratum refinement
ValuationSpectrum fallback_spectrum(const Laurent& f, const NewtonPolytope& P,
                                    long p, const PhiSpec& phi, long M,
                                    int depth_cap) {
  ValuationSpectrum out;
  out.certified = false;
  std::vector<Vec2> strata;
  long Kmax = M + 4;
  switch (phi.kind) {
    case PhiSpec::Quadrant:
      for (long k1 = 0; k1 <= Kmax; ++k1)
        for (long k2 = 0; k1 + k2 <= Kmax; ++k2) strata.push_back({k1, k2});
      break;
    case PhiSpec::Ball:
      for (long k1 = phi.e; k1 <= Kmax; ++k1)
        for (long k2 = phi.e; k1 + k2 <= Kmax; ++k2) strata.push_back({k1, k2});
      break;
    case PhiSpec::UnitTorus:
      strata.push_back({0, 0});
      break;
    case PhiSpec::HalfTorus:
      for (long k = 0; k <= Kmax; ++k)
        strata.push_back(phi.unit_var == 0 ? Vec2{0, k} : Vec2{k, 0});
      break;
  }
  Rat covered = 0;
  Rat unit2 = Rat(p - 1, p) * Rat(p - 1, p);
  for (auto k : strata) {
    long n = k.x + k.y;
    long d = P.d_value(k);
    Rat mass = unit2 * rat_pow(Rat(p), -n);
    covered += mass;
    if (d > M) {  // entire stratum beyond the window
      out.tail += mass;
      continue;
    }
    Laurent g;
    for (auto& [e, c] : f.terms())
      g.add_term(e, c * rat_pow(Rat(p), k.x * e.a + k.y * e.b - d));
    long Jmax = M - d;
    int cap = (int)std::min<long>({(long)depth_cap, Jmax + 2, 6});
    TorusSpectrum ts = torus_spectrum_bruteforce(g, p, Jmax, cap);
    for (auto& [J, x] : ts.v) {
      Rat contrib = x * rat_pow(Rat(p), -n);
      long m = d + J;
      if (m >= -M && m <= M) out.v[m] += contrib;
      else out.tail += contrib;
    }
    if (ts.exact) out.tail += ts.deeper * rat_pow(Rat(p), -n);
    else out.unresolved += ts.deeper * rat_pow(Rat(p), -n);
  }
  out.unresolved += phi_measure(phi, p) - covered;
  for (auto it = out.v.begin(); it != out.v.end();)
    it = it->second == 0 ? out.v.erase(it) : std::next(it);
  return out;
}

}  // namespace

ValuationSpectrum valuation_spectrum(const Laurent& f, const NewtonPolytope& P,
                                     long p, const PhiSpec& phi, long M,
                                     int depth_cap) {
  ModpReduction red = reduce_mod_p(f, p);
  if (red.denominator_hit)
    throw std::invalid_argument("coefficients are not p-integral");

  // weight table over all faces; certified iff every face passes the
  // unit-gradient check
  WeightTable table;
  bool all_certified = !red.support_collapsed;
  for (auto& tau : P.all_faces()) {
    FaceWeights w = face_weights(red.fbar, tau, p);
    all_certified = all_certified && w.certified;
    table[tau.points] = w;
  }
  if (!all_certified) return fallback_spectrum(f, P, p, phi, M, depth_cap);

  ValuationSpectrum out;
  out.certified = true;
  Window W{M, out.v};

  auto quadrant = [&](Window& WW) {
    Fan FS = refine_to_simple(attainable_fan(P), P);
    for (auto& cone : FS.cones) {
      const FaceWeights& w = weights_for(table, cone.face);
      if (cone.gens.size() == 2)
        add_cone(WW, p, w, cone.gens[0], cone.gens[1], P);
      else
        add_ray(WW, p, w, cone.gens[0], P);
    }
    add_point(WW, p, weights_for(table, P.full_face()), {0, 0}, P);
  };

  switch (phi.kind) {
    case PhiSpec::Quadrant:
      quadrant(W);
      break;
    case PhiSpec::UnitTorus:
      add_point(W, p, weights_for(table, P.full_face()), {0, 0}, P);
      break;
    case PhiSpec::HalfTorus:
      line_contrib(W, p, P, table,
                   {0, 0}, phi.unit_var == 0 ? Vec2{0, 1} : Vec2{1, 0}, Rat(1));
      break;
    case PhiSpec::Ball: {
      quadrant(W);
      // remove {k1 < e} and {k1 >= e, k2 < e}
      for (long c = 0; c < phi.e; ++c) {
        line_contrib(W, p, P, table, {c, 0}, {0, 1}, Rat(-1));
        line_contrib(W, p, P, table, {phi.e, c}, {1, 0}, Rat(-1));
      }
      break;
    }
  }
  Rat total = 0;
  for (auto& [m, x] : out.v) total += x;
  out.tail = phi_measure(phi, p) - total;
  out.unresolved = 0;
  return out;
}

TorusSpectrum torus_spectrum_bruteforce(const Laurent& g, long p, long Jmax,
                                        int depth_cap) {
  TorusSpectrum out;
  struct Box {
    long a, b, k;
  };
  std::vector<Box> stack;
  for (long a = 1; a < p; ++a)
    for (long b = 1; b < p; ++b) stack.push_back({a, b, 1});
  while (!stack.empty()) {
    Box B = stack.back();
    stack.pop_back();
    Rat meas = rat_pow(Rat(p), -2 * B.k);
    Rat val = g.eval(Rat(B.a), Rat(B.b));
    long v = padic_ord(val, p);
    if (v < B.k) {  // ord constant on the box
      if (v <= Jmax) out.v[v] += meas;
      else out.deeper += meas;
      continue;
    }
    if (B.k > Jmax) {  // everything in the box is deeper than the window
      out.deeper += meas;
      continue;
    }
    if (B.k >= depth_cap) {
      out.deeper += meas;
      out.exact = false;
      continue;
    }
    long step = 1;
    for (long i = 0; i < B.k; ++i) step *= p;
    for (long i = 0; i < p; ++i)
      for (long j = 0; j < p; ++j)
        stack.push_back({B.a + i * step, B.b + j * step, B.k + 1});
  }
  return out;
}

}  // namespace igusa
