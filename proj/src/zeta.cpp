#include "igusa/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace igusa {

LTauParts L_tau(LTauForm form) {
  LTauParts L;
  if (form == LTauForm::MassIdentity) {
    // q^{-2} (q-1)^2
    L.base.num = qt_add(qt_add(qt_mono(0, 0), qt_mono(-1, 0, -2)), qt_mono(-2, 0));
  } else {
    // q^{-2} (q^2 - 1)
    L.base.num = qt_sub(qt_mono(0, 0), qt_mono(-2, 0));
  }
  // both forms: + N * q^{-2} (t-1)/(1-q^{-1}t)
  L.n_part.num = qt_sub(qt_mono(-2, 1), qt_mono(-2, 0));
  L.n_part.mul_den({1, 1});
  return L;
}

RationalQT S_tau(const Cone& cone, const NewtonPolytope& P) {
  RationalQT S;
  S.num = qt_mono(0, 0);
  for (auto& a : cone.gens) {
    long e = a.x + a.y;
    long d = P.d_value(a);
    S.num = qt_mul(S.num, qt_mono(-e, d));
    S.mul_den({e, d});
  }
  QTPoly h_sum;
  for (auto& h : fundamental_lattice_points(cone)) {
    long nh = h.x + h.y;
    long dh = P.d_value(h);
    h_sum = qt_add(h_sum, qt_mono(nh, -dh));
  }
  S.num = qt_mul(S.num, h_sum);
  return S;
}

namespace {

long face_count(const Laurent& fbar, const Face& face, long p) {
  Laurent ftau;
  for (auto& pt : face.points) {
    Exp e{pt.x, pt.y};
    auto it = fbar.terms().find(e);
    if (it != fbar.terms().end()) ftau.add_term(e, it->second);
  }
  return count_torus_zeros(ftau, p);
}

}  // namespace

ZetaResult zeta_first_quadrant(const Laurent& f, const NewtonPolytope& P,
                               std::optional<long> p, LTauForm form) {
  ZetaResult Z;
  Fan fan = attainable_fan(P);

  Laurent fbar;
  if (p) {
    auto red = reduce_mod_p(f, *p);
    if (red.denominator_hit)
      throw std::invalid_argument("coefficient denominator divisible by p");
    if (red.support_collapsed)
      throw std::invalid_argument("support collapses mod p");
    fbar = red.fbar;
  }

  Z.gamma_row.cone = Cone{{}, P.full_face()};
  Z.gamma_row.L = L_tau(form);
  Z.gamma_row.S = RationalQT::from_poly(qt_mono(0, 0));
  if (p) Z.gamma_row.N = face_count(fbar, P.full_face(), *p);

  for (auto& cone : fan.cones) {
    ZetaRow row;
    row.cone = cone;
    row.L = L_tau(form);
    row.S = S_tau(cone, P);
    if (p) row.N = face_count(fbar, cone.face, *p);
    Z.rows.push_back(std::move(row));
  }

  if (p) {
    auto assemble = [](const ZetaRow& r) {
      RationalQT L = r.L.base + r.L.n_part.scaled(qt_mono(0, 0, Int(*r.N)));
      return L * r.S;
    };
    RationalQT total = assemble(Z.gamma_row);
    for (auto& r : Z.rows) total = total + assemble(r);
    total.normalize();
    Z.total = std::move(total);
  }
  return Z;
}

PoleData candidate_poles(const Fan& fan, const NewtonPolytope& P) {
  PoleData pd;
  struct EdgeInfo {
    Vec2 a;
    long e, d;
    Rat value;
  };
  std::vector<EdgeInfo> edges;
  for (auto& a : fan.rays) {
    long d = P.d_value(a);
    if (d == 0) continue;
    edges.push_back({a, a.x + a.y, d, Rat(-(a.x + a.y), d)});
  }
  for (auto& e : edges) e.value.canonicalize();

  auto cone_mult = [&](const Rat& value) {
    int best = 0;
    for (auto& cone : fan.cones) {
      int cnt = 0;
      for (auto& g : cone.gens) {
        long d = P.d_value(g);
        if (d == 0) continue;
        Rat v(-(g.x + g.y), d);
        v.canonicalize();
        if (v == value) ++cnt;
      }
      best = std::max(best, cnt);
    }
    return best;
  };

  std::map<Rat, CandidatePole, std::greater<Rat>> grouped;
  for (auto& e : edges) {
    auto& cp = grouped[e.value];
    cp.real_part = e.value;
    cp.period_d = cp.sources.empty()
                      ? std::abs(e.d)
                      : std::lcm(cp.period_d, std::abs(e.d));
    cp.sources.push_back(e.a);
  }
  for (auto& [v, cp] : grouped) cp.multiplicity = cone_mult(v);
  // the measure factor contributes the -1 family
  Rat minus1(-1);
  auto& m1 = grouped[minus1];
  m1.real_part = minus1;
  m1.period_d = m1.sources.empty() ? 1 : std::lcm(m1.period_d, 1L);
  m1.multiplicity = std::min(2, cone_mult(minus1) + 1);
  for (auto& [v, cp] : grouped) pd.poles.push_back(cp);

  // convergence strip data
  std::optional<Rat> alpha, alpha_max;
  Rat beta(-1);
  for (auto& e : edges) {
    if (e.d < 0) {  // A side, positive values
      if (!alpha || e.value < *alpha) alpha = e.value;
      if (!alpha_max || e.value > *alpha_max) alpha_max = e.value;
    } else {  // B side, negative values
      if (e.value > beta) beta = e.value;
    }
  }
  pd.strip.alpha = alpha;
  pd.strip.alpha_max = alpha_max;
  pd.strip.beta = beta;
  pd.strip.beta_multiplicity =
      (beta == minus1) ? std::min(2, cone_mult(minus1) + 1)
                       : std::max(1, cone_mult(beta));
  return pd;
}

}  // namespace igusa
