#include "igusa/oscillatory.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace igusa {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

std::complex<double> e_of(double frac) {
  return {std::cos(kTau * frac), std::sin(kTau * frac)};
}

// standard additive character Psi(v) = e(p-adic fractional part of v):
// only the p-power part of the denominator contributes
std::complex<double> e_rat(const Rat& r, long p) {
  long ord = padic_ord(r, p);
  if (ord >= 0) return {1.0, 0.0};
  long k = -ord;
  Int pk = 1;
  for (long i = 0; i < k; ++i) pk *= p;
  Int m = padic_mod(r * Rat(pk), p, k);  // unit-denominator residue mod p^k
  Rat frac(m, pk);
  frac.canonicalize();
  return e_of(frac.get_d());
}

long pow_mod(long b, long e, long mod) {
  long r = 1 % mod;
  b %= mod;
  if (b < 0) b += mod;
  while (e > 0) {
    if (e & 1) r = (long)((__int128)r * b % mod);
    b = (long)((__int128)b * b % mod);
    e >>= 1;
  }
  return r;
}

long inv_mod(long a, long mod) {
  long t = 0, nt = 1, r = mod, nr = ((a % mod) + mod) % mod;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::domain_error("not invertible");
  return t < 0 ? t + mod : t;
}

}  // namespace

ComplexValue exponential_sum(const Laurent& f, int i, long p, long m, long u) {
  if (m < 0) throw std::invalid_argument("negative level");
  if (m == 0) return {{1.0, 0.0}, 0.0};
  for (auto& [e, c] : f.terms()) {
    long nonunit_exp = i == 0 ? e.b : e.a;
    if (nonunit_exp < 0)
      throw std::invalid_argument("negative exponent on the non-unit coordinate");
    if (padic_ord(c, p) < 0)
      throw std::invalid_argument("coefficients are not p-integral");
  }
  long pm = 1;
  for (long j = 0; j < m; ++j) pm *= p;
  // per-term power tables over the two coordinates (i == 0: x unit, y free)
  struct Term {
    long c;
    std::vector<long> px, py;
  };
  std::vector<Term> terms;
  for (auto& [e, c] : f.terms()) {
    Term t;
    t.c = padic_mod(c, p, m).get_si();
    long ex = e.a, ey = e.b;
    t.px.assign(pm, 0);
    t.py.assign(pm, 0);
    for (long x = 0; x < pm; ++x) {
      bool unit = x % p != 0;
      long exp_here = ex;
      if (exp_here >= 0) t.px[x] = pow_mod(x, exp_here, pm);
      else t.px[x] = unit ? pow_mod(inv_mod(x, pm), -exp_here, pm) : 0;
    }
    for (long y = 0; y < pm; ++y) {
      bool unit = y % p != 0;
      if (ey >= 0) t.py[y] = pow_mod(y, ey, pm);
      else t.py[y] = unit ? pow_mod(inv_mod(y, pm), -ey, pm) : 0;
    }
    terms.push_back(std::move(t));
  }
  std::vector<long> hist(pm, 0);
  long uu = ((u % pm) + pm) % pm;
  for (long x = 0; x < pm; ++x) {
    bool xu = x % p != 0;
    if (i == 0 && !xu) continue;
    for (long y = 0; y < pm; ++y) {
      if (i == 1 && y % p == 0) continue;
      __int128 acc = 0;
      for (auto& t : terms) acc += (__int128)t.c * t.px[x] % pm * t.py[y] % pm;
      long v = (long)((acc % pm) * uu % pm);
      ++hist[v];
    }
  }
  std::complex<double> s = 0;
  for (long v = 0; v < pm; ++v)
    if (hist[v] != 0) s += (double)hist[v] * e_of((double)v / (double)pm);
  double scale = std::pow((double)p, -2.0 * (double)m);
  return {s * scale, 0.0};
}

namespace {

// One coordinate of a refinement cell: either the ball p^v Zp or the coset
// p^v (a + p^k Zp) with a a unit known mod p^k.
struct Coord {
  bool ball;
  long v;
  long a = 0;  // unit representative mod p^k (ball: unused)
  long k = 0;  // coset depth (ball: 0)
};

struct Cell {
  Coord c[2];
  Rat measure(long p) const {
    long e = 0;
    for (int i = 0; i < 2; ++i) e += c[i].v + c[i].k;
    return rat_pow(Rat(p), -e);
  }
};

// lower bound on ord over the cell of one monomial (coefficient + exponents)
long term_floor(const Cell& C, long ordc, Exp e, long /*p*/) {
  long exps[2] = {e.a, e.b};
  long t = ordc;
  for (int i = 0; i < 2; ++i) t += C.c[i].v * exps[i];
  return t;
}

// lower bound on ord of g(x) - g(center) over the cell (variation bound)
long variation_floor(const Laurent& g, const Cell& C, long p) {
  long best = LONG_MAX;
  for (auto& [e, c] : g.terms()) {
    long exps[2] = {e.a, e.b};
    long tf = term_floor(C, padic_ord(c, p), e, p);
    for (int i = 0; i < 2; ++i) {
      if (exps[i] == 0) continue;
      long var = tf + (C.c[i].ball ? 0 : C.c[i].k);
      best = std::min(best, var);
    }
  }
  return best;
}

Rat center_value(const Laurent& g, const Cell& C, long p) {
  Rat x[2];
  for (int i = 0; i < 2; ++i)
    x[i] = C.c[i].ball ? Rat(0) : Rat(C.c[i].a) * rat_pow(Rat(p), C.c[i].v);
  Rat s = 0;
  for (auto& [e, c] : g.terms()) {
    long exps[2] = {e.a, e.b};
    Rat t = c;
    bool zero = false;
    for (int i = 0; i < 2; ++i) {
      if (exps[i] == 0) continue;
      if (x[i] == 0) {
        if (exps[i] < 0) throw std::logic_error("pole at cell center");
        zero = true;
        break;
      }
      t *= rat_pow(x[i], exps[i]);
    }
    if (!zero) s += t;
  }
  return s;
}

}  // namespace

ComplexValue oscillatory_integral_direct(const Laurent& f, long p,
                                         const PhiSpec& phi, long mz, long u,
                                         int depth_cap, double mass_floor) {
  for (auto& [e, c] : f.terms())
    if (padic_ord(c, p) < 0)
      throw std::invalid_argument("coefficients are not p-integral");
  Laurent df[2] = {f.derivative(0), f.derivative(1)};
  bool neg_exp[2] = {false, false};
  for (auto& [e, c] : f.terms()) {
    neg_exp[0] = neg_exp[0] || e.a < 0;
    neg_exp[1] = neg_exp[1] || e.b < 0;
  }

  std::vector<Cell> stack;
  auto push_units = [&](int which, const Cell& base) {
    // split coordinate `which` from a ball into its p-1 unit shells plus a
    // deeper ball
    // deep ball first so the LIFO stack works coarse shells before fine ones
    Cell deep = base;
    deep.c[which].v += 1;
    stack.push_back(deep);
    for (long a = 1; a < p; ++a) {
      Cell c = base;
      c.c[which] = {false, base.c[which].v, a, 1};
      stack.push_back(c);
    }
  };
  switch (phi.kind) {
    case PhiSpec::Quadrant: {
      Cell c;
      c.c[0] = {true, 0};
      c.c[1] = {true, 0};
      stack.push_back(c);
      break;
    }
    case PhiSpec::Ball: {
      Cell c;
      c.c[0] = {true, phi.e};
      c.c[1] = {true, phi.e};
      stack.push_back(c);
      break;
    }
    case PhiSpec::UnitTorus:
      for (long a = 1; a < p; ++a)
        for (long b = 1; b < p; ++b) {
          Cell c;
          c.c[0] = {false, 0, a, 1};
          c.c[1] = {false, 0, b, 1};
          stack.push_back(c);
        }
      break;
    case PhiSpec::HalfTorus: {
      int uv = phi.unit_var == 0 ? 0 : 1;
      for (long a = 1; a < p; ++a) {
        Cell c;
        c.c[uv] = {false, 0, a, 1};
        c.c[1 - uv] = {true, 0};
        stack.push_back(c);
      }
      break;
    }
  }

  std::complex<double> total = 0;
  double err = 0;
  long budget = 4'000'000;
  while (!stack.empty()) {
    if (--budget < 0) {
      for (auto& c : stack) err += c.measure(p).get_d();
      break;
    }
    Cell C = stack.back();
    stack.pop_back();
    double meas_d = C.measure(p).get_d();
    // mandatory ball split under a negative exponent
    int must_split = -1;
    for (int i = 0; i < 2; ++i)
      if (C.c[i].ball && neg_exp[i]) must_split = i;
    if (must_split >= 0) {
      if (meas_d < mass_floor) {
        err += meas_d;
        continue;
      }
      push_units(must_split, C);
      continue;
    }
    // R1: constant phase over the cell
    long var = variation_floor(f, C, p);
    if (var != LONG_MAX && -mz + var >= 0) {
      Rat phase = Rat(u) * center_value(f, C, p) * rat_pow(Rat(p), -mz);
      total += C.measure(p).get_d() * e_rat(phase, p);
      continue;
    }
    if (var == LONG_MAX) {  // f vanishes identically on the cell closure
      total += meas_d;
      continue;
    }
    // R2: exact vanishing along a unit coordinate without critical points
    bool vanished = false;
    for (int i = 0; i < 2 && !vanished; ++i) {
      if (C.c[i].ball) continue;
      Rat dv = center_value(df[i], C, p);
      if (dv == 0) continue;
      long ordc = padic_ord(dv, p);
      long L = -mz + C.c[i].v + C.c[i].k + ordc;
      if (L > -1) continue;
      long dvar = variation_floor(df[i], C, p);
      if (dvar <= ordc) continue;  // derivative valuation not pinned
      long tmin = LONG_MAX;
      for (auto& [e, c] : f.terms()) {
        long exps[2] = {e.a, e.b};
        if (exps[i] == 0) continue;
        tmin = std::min(tmin, term_floor(C, padic_ord(c, p), e, p));
      }
      if (tmin == LONG_MAX) continue;
      if (-mz + tmin + 2 * C.c[i].k >= 0) vanished = true;  // remainder integral
    }
    if (vanished) continue;
    // R3: caps, then refine
    long depth = std::max(C.c[0].k, C.c[1].k);
    if (depth >= depth_cap || meas_d < mass_floor) {
      err += meas_d;
      continue;
    }
    // pick the coordinate blocking R1 with the coarsest scale
    int pick = -1;
    long worst = LONG_MAX;
    for (auto& [e, c] : f.terms()) {
      long exps[2] = {e.a, e.b};
      long tf = term_floor(C, padic_ord(c, p), e, p);
      for (int i = 0; i < 2; ++i) {
        if (exps[i] == 0) continue;
        long v = tf + (C.c[i].ball ? 0 : C.c[i].k);
        if (-mz + v < 0 && v < worst) {
          worst = v;
          pick = i;
        }
      }
    }
    if (pick < 0) pick = C.c[0].k + C.c[0].v <= C.c[1].k + C.c[1].v ? 0 : 1;
    if (C.c[pick].ball) {
      push_units(pick, C);
    } else {
      long step = 1;
      for (long j = 0; j < C.c[pick].k; ++j) step *= p;
      for (long j = 0; j < p; ++j) {
        Cell c = C;
        c.c[pick].a = C.c[pick].a + j * step;
        c.c[pick].k += 1;
        stack.push_back(c);
      }
    }
  }
  return {total, err};
}

namespace {

// smallest generator of the cyclic group (Z/p^level)^*, p odd
long unit_group_generator(long p, long mod) {
  long phi = mod / p * (p - 1);
  std::vector<long> qs;
  long n = phi;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      qs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) qs.push_back(n);
  for (long cand = 2; cand < mod; ++cand) {
    if (cand % p == 0) continue;
    bool ok = true;
    for (long q : qs)
      if (pow_mod(cand, phi / q, mod) == 1) {
        ok = false;
        break;
      }
    if (ok) return cand;
  }
  throw std::logic_error("no generator found");
}

}  // namespace

std::vector<Character> characters_mod(long p, long level) {
  if (level < 1) level = 1;
  long mod = 1;
  for (long i = 0; i < level; ++i) mod *= p;
  long phi = mod / p * (p - 1);
  std::vector<Character> out;
  for (long k = 1; k < phi; ++k) {
    Character chi;
    chi.p = p;
    chi.modulus = mod;
    chi.index = k;
    // conductor: smallest c with chi factoring through (Z/p^c)^*
    chi.c = level;
    long pc = 1;
    for (long cc = 1; cc <= level; ++cc) {
      pc *= p;
      long phic = pc / p * (p - 1);
      if (k % (phi / phic) == 0) {
        chi.c = cc;
        break;
      }
    }
    out.push_back(chi);
  }
  return out;
}

std::complex<double> character_eval(const Character& chi, const Int& v) {
  long mod = chi.modulus;
  long phi = mod / chi.p * (chi.p - 1);
  Int vm = v % mod;
  if (vm < 0) vm += mod;
  long vv = (long)vm.get_si();
  if (vv % chi.p == 0) return 0;
  // discrete log against the canonical generator (groups are tiny)
  long g = unit_group_generator(chi.p, mod);
  long cur = 1 % mod;
  long j = 0;
  while (cur != vv) {
    cur = (long)((__int128)cur * g % mod);
    if (++j >= phi) throw std::logic_error("discrete log failed");
  }
  return e_of((double)((__int128)chi.index * j % phi) / (double)phi);
}

std::complex<double> gauss_sum(const Character& chi) {
  long p = chi.p;
  long pc = 1;
  for (long i = 0; i < chi.c; ++i) pc *= p;
  std::complex<double> s = 0;
  for (long v = 1; v < pc; ++v) {
    if (v % p == 0) continue;
    s += character_eval(chi, Int(v)) * e_of((double)v / (double)pc);
  }
  double scale = std::pow((double)p, 1.0 - (double)chi.c) / (double)(p - 1);
  return s * scale;
}

TwistedCoefficients zeta_coefficients_bruteforce(const Laurent& f, long p,
                                                 long M, long cmax) {
  TwistedCoefficients out;
  out.chis = characters_mod(p, std::max<long>(cmax, 1));
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
    Rat val = f.eval(Rat(B.a), Rat(B.b));
    long v = padic_ord(val, p);
    if (v < B.k && v + cmax <= B.k) {
      // ord and the angular component mod p^cmax are both pinned on the box
      if (v > M) continue;  // outside the requested window
      out.trivial[v] += meas;
      Int ac = padic_unit_mod(val, p, cmax);
      auto& row = out.twisted[v];
      if (row.empty()) row.assign(out.chis.size(), {0.0, 0.0});
      double md = meas.get_d();
      for (std::size_t ci = 0; ci < out.chis.size(); ++ci)
        row[ci] += md * character_eval(out.chis[ci], ac);
      continue;
    }
    if (v >= B.k && B.k > M) continue;  // whole box deeper than the window
    long step = 1;
    for (long i = 0; i < B.k; ++i) step *= p;
    for (long i = 0; i < p; ++i)
      for (long j = 0; j < p; ++j)
        stack.push_back({B.a + i * step, B.b + j * step, B.k + 1});
  }
  return out;
}

ComplexValue oscillatory_via_characters(const Laurent& f, long p, long m, long u) {
  Rat measure = Rat(p - 1, p) * Rat(p - 1, p);
  if (m <= 0) return {{measure.get_d(), 0.0}, 0.0};
  TwistedCoefficients tc = zeta_coefficients_bruteforce(f, p, m - 1, m);
  // trivial-character part: measure - sum_{k <= m-2} Z_k - q Z_{m-1}/(q-1)
  Rat triv = measure;
  for (auto& [k, z] : tc.trivial) {
    if (k <= m - 2) triv -= z;
    if (k == m - 1) triv -= Rat(p) * z / Rat(p - 1);
  }
  std::complex<double> total = triv.get_d();
  // twisted parts: g_{chi^{-1}} chi(u) Z_{m - c(chi)}(chi)
  long phi_full = 1;
  for (long i = 0; i < m; ++i) phi_full *= p;
  phi_full = phi_full / p * (p - 1);
  for (std::size_t ci = 0; ci < tc.chis.size(); ++ci) {
    const Character& chi = tc.chis[ci];
    long k = m - chi.c;
    if (k < 0) continue;
    auto it = tc.twisted.find(k);
    if (it == tc.twisted.end()) continue;
    Character inv = chi;
    inv.index = (phi_full - chi.index) % phi_full;
    std::complex<double> g = gauss_sum(inv);
    std::complex<double> cu = character_eval(chi, Int(u));
    total += g * cu * it->second[ci];
  }
  return {total, 1e-12};
}

}  // namespace igusa
