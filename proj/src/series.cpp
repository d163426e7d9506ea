#include "igusa/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace igusa {

namespace {

// dense polynomial over Q, p[k] = coefficient of v^k
using DP = std::vector<Rat>;

void dp_trim(DP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

DP dp_mul(const DP& a, const DP& b) {
  if (a.empty() || b.empty()) return {};
  DP r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  dp_trim(r);
  return r;
}

DP dp_add(const DP& a, const DP& b) {
  DP r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  dp_trim(r);
  return r;
}

DP dp_scale(const DP& a, const Rat& c) {
  DP r = a;
  for (auto& x : r) x *= c;
  dp_trim(r);
  return r;
}

// a - q*b
DP dp_submul(const DP& a, const DP& q, const DP& b) { return dp_add(a, dp_scale(dp_mul(q, b), Rat(-1))); }

// division with remainder
std::pair<DP, DP> dp_divmod(DP a, const DP& b) {
  DP q;
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  dp_trim(a);
  while (a.size() >= b.size()) {
    Rat c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
    q[shift] += c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    dp_trim(a);
  }
  dp_trim(q);
  return {q, a};
}

// extended gcd: returns (g, u, v) with u*a + v*b = g
std::tuple<DP, DP, DP> dp_ext_gcd(DP a, DP b) {
  DP u0{Rat(1)}, v0, u1, v1{Rat(1)};
  while (!b.empty()) {
    auto [q, r] = dp_divmod(a, b);
    DP u2 = dp_submul(u0, q, u1);
    DP v2 = dp_submul(v0, q, v1);
    a = b; b = r;
    u0 = u1; v0 = v1;
    u1 = u2; v1 = v2;
  }
  return {a, u0, v0};
}

// power-series coefficients of N(v)/D(v) with D[0] != 0, indices 0..n
std::vector<Rat> ps_coeffs(const std::map<long, Rat>& N, const DP& D, long n) {
  std::vector<Rat> c(n + 1, Rat(0));
  Rat d0 = D[0];
  for (long k = 0; k <= n; ++k) {
    Rat s = 0;
    if (auto it = N.find(k); it != N.end()) s = it->second;
    for (std::size_t j = 1; j < D.size() && (long)j <= k; ++j)
      s -= D[j] * c[k - j];
    c[k] = s / d0;
  }
  return c;
}

struct SideFactor {
  long e;  // q-exponent
  long u;  // positive v-exponent
  int mult;
};

// 1 - p^{-e} v^{u}
DP side_factor_poly(const SideFactor& f, long p) {
  DP d(f.u + 1, Rat(0));
  d[0] = 1;
  d[f.u] = -rat_pow(Rat(p), -f.e);
  return d;
}

struct SplitZ {
  // part A: coeff of t^m equals a_series[m - shiftA] for m - shiftA >= 0
  std::map<long, Rat> numA;  // numerator, v = t
  DP denA;
  long shiftA = 0;
  std::vector<SideFactor> facA;
  // part B: coeff of t^m equals b_series[shiftB + m ... ] in w = 1/t:
  // coeff of t^{-m} is the w^{shiftB + (-(-m))}...  Concretely: coefficient of
  // t^{m} from B equals series coefficient at index (shiftB - m), valid when
  // shiftB - m >= jminB.
  std::map<long, Rat> numB;  // numerator in w, exponents >= jminB (shifted to 0)
  DP denB;
  long shiftB = 0;
  long jshiftB = 0;  // numB indices are true exponent + jshiftB >= 0
  std::vector<SideFactor> facB;
  Rat scalar{1};
};

SplitZ split_two_sided(const RationalQT& Z, long p) {
  SplitZ S;
  // numeric numerator in t
  std::map<long, Rat> P;
  for (auto& [e, c] : Z.num) {
    Rat term = Rat(c) * rat_pow(Rat(p), e.first);
    P[e.second] += term;
    if (P[e.second] == 0) P.erase(e.second);
  }
  long U = 0;
  DP Dplus{Rat(1)}, E{Rat(1)};
  for (auto& [f, m] : Z.den) {
    if (f.d == 0) {
      S.scalar /= rat_pow(1 - rat_pow(Rat(p), -f.e), m);
    } else if (f.d > 0) {
      S.facA.push_back({f.e, f.d, m});
      for (int i = 0; i < m; ++i) Dplus = dp_mul(Dplus, side_factor_poly({f.e, f.d, 1}, p));
    } else {
      long u = -f.d;
      S.facB.push_back({f.e, u, m});
      U += u * (long)m;
      // E(t) accumulates (t^u - p^{-e})^m
      DP g(u + 1, Rat(0));
      g[0] = -rat_pow(Rat(p), -f.e);
      g[u] = 1;
      for (int i = 0; i < m; ++i) E = dp_mul(E, g);
    }
  }
  // P * t^U, then shift to nonnegative exponents: P2[k] = coeff of t^{k+V}
  std::map<long, Rat> PU;
  for (auto& [k, c] : P) PU[k + U] = c;
  long V = PU.empty() ? 0 : PU.begin()->first;
  std::map<long, Rat> Phat;
  for (auto& [k, c] : PU) Phat[k - V] = c;

  if (E.size() == 1) {  // no negative-direction factors
    S.numA = Phat;
    for (auto& [k, c] : S.numA) c *= S.scalar / E[0];
    S.denA = Dplus;
    S.shiftA = V;
    S.denB = {Rat(1)};
    S.shiftB = V - 1;  // never hit: empty numerator
    S.scalar = 1;
    return S;
  }
  auto [g, W, Uq] = dp_ext_gcd(Dplus, E);
  if (g.size() != 1) throw std::logic_error("two-sided split: factors not coprime");
  // normalize so W*Dplus + Uq*E = 1
  Rat ginv = 1 / g[0];
  W = dp_scale(W, ginv);
  Uq = dp_scale(Uq, ginv);
  // W*Dplus + Uq*E = 1, so Phat/(Dplus*E) = Phat*Uq/Dplus + Phat*W/E
  DP ph(Phat.empty() ? 0 : (Phat.rbegin()->first + 1), Rat(0));
  for (auto& [k, c] : Phat) ph[k] = c;
  DP Anum = dp_mul(ph, Uq);
  DP Bnum = dp_mul(ph, W);
  for (std::size_t i = 0; i < Anum.size(); ++i) S.numA[(long)i] = Anum[i] * S.scalar;
  S.denA = Dplus;
  S.shiftA = V;
  // part B in w = 1/t: Bnum(1/w) * w^{degE} / Etilde(w)
  long degE = (long)E.size() - 1;
  DP Et(E.rbegin(), E.rend());  // Etilde(w) = w^degE * E(1/w)
  long degB = (long)Bnum.size() - 1;
  long jmin = degE - degB;  // lowest w-exponent in numerator
  S.jshiftB = (jmin < 0) ? -jmin : 0;
  for (std::size_t k = 0; k < Bnum.size(); ++k) {
    if (Bnum[k] == 0) continue;
    long j = degE - (long)k;  // w-exponent
    S.numB[j + S.jshiftB] = Bnum[k] * S.scalar;
  }
  S.denB = Et;
  S.shiftB = V;
  S.scalar = 1;
  return S;
}

}  // namespace

std::map<long, Rat> series_expand(const RationalQT& Z, long p, long M) {
  std::map<long, Rat> out;
  if (qt_is_zero(Z.num)) return out;
  SplitZ S = split_two_sided(Z, p);
  // part A contributes to coeff(m) at index m - shiftA
  long nA = M - S.shiftA;
  std::vector<Rat> cA;
  if (nA >= 0 && !S.numA.empty()) cA = ps_coeffs(S.numA, S.denA, nA);
  // part B: coeff(m) from w-series index (shiftB - m) + jshiftB
  long nB = (S.shiftB + M) + S.jshiftB;
  std::vector<Rat> cB;
  if (!S.numB.empty() && nB >= 0) cB = ps_coeffs(S.numB, S.denB, nB);
  for (long m = -M; m <= M; ++m) {
    Rat v = 0;
    long ia = m - S.shiftA;
    if (ia >= 0 && ia < (long)cA.size()) v += cA[ia];
    long ib = (S.shiftB - m) + S.jshiftB;
    if (ib >= 0 && ib < (long)cB.size()) v += cB[ib];
    if (v != 0) out[m] = v;
  }
  return out;
}

namespace {

struct Piece {
  std::map<long, Rat> num;  // series numerator (index shifted to >= 0)
  DP den;
  // m = sign * (index - index_offset) mapping handled by caller
};

}  // namespace

Asymptotics asymptotic_terms(const RationalQT& Z, long p, int side, long fit_window) {
  Asymptotics A;
  A.side = side;
  if (qt_is_zero(Z.num)) return A;
  SplitZ S = split_two_sided(Z, p);

  // choose the side's numerator/denominator and the map from series index n
  // to coefficient index m
  std::map<long, Rat> num;
  std::vector<SideFactor> facs;
  DP den;
  // m(n) = n + m_off
  long m_off;
  if (side > 0) {
    num = S.numA;
    den = S.denA;
    facs = S.facA;
    m_off = S.shiftA;
  } else {
    num = S.numB;
    den = S.denB;
    facs = S.facB;
    m_off = -(S.shiftB + S.jshiftB);
    // coeff of t^{-m}: index n = shiftB + m + jshiftB  =>  m = n + m_off
  }
  if (facs.empty() || num.empty()) return A;

  // group factors by gamma = e/u
  std::map<Rat, std::vector<SideFactor>> groups;
  for (auto& f : facs) {
    Rat g(f.e, f.u);
    g.canonicalize();
    groups[g].push_back(f);
  }
  // split num/den into per-group partial fractions by iterated Bezout
  struct GroupPiece {
    Rat gamma;
    std::map<long, Rat> num;
    DP den;
    long L;
    int mu;
  };
  std::vector<GroupPiece> pieces;
  {
    std::map<long, Rat> curN = num;
    DP rest = den;
    std::vector<std::pair<Rat, DP>> gdens;
    for (auto& [g, fs] : groups) {
      DP gd{Rat(1)};
      for (auto& f : fs)
        for (int i = 0; i < f.mult; ++i) gd = dp_mul(gd, side_factor_poly({f.e, f.u, 1}, p));
      gdens.push_back({g, gd});
    }
    // peel groups one at a time: curN/rest, rest = gd * rest2
    for (std::size_t gi = 0; gi < gdens.size(); ++gi) {
      auto& [g, gd] = gdens[gi];
      DP rest2{Rat(1)};
      for (std::size_t gj = gi + 1; gj < gdens.size(); ++gj) rest2 = dp_mul(rest2, gdens[gj].second);
      GroupPiece piece;
      piece.gamma = g;
      long L = 1;
      int mu = 0;
      for (auto& f : groups[g]) {
        L = std::lcm(L, f.u);
        mu += f.mult;
      }
      piece.L = L;
      piece.mu = mu;
      piece.den = gd;
      if (rest2.size() == 1) {
        piece.num = curN;
        for (auto& [k, c] : piece.num) c /= rest2[0];
        pieces.push_back(std::move(piece));
        break;
      }
      auto [gg, uu, vv] = dp_ext_gcd(gd, rest2);
      if (gg.size() != 1) throw std::logic_error("asymptotics: group split failed");
      Rat ginv = 1 / gg[0];
      uu = dp_scale(uu, ginv);
      vv = dp_scale(vv, ginv);
      // curN/(gd*rest2) = curN*vv/gd + curN*uu/rest2
      DP nN(curN.empty() ? 0 : (curN.rbegin()->first + 1), Rat(0));
      for (auto& [k, c] : curN) nN[k] = c;
      DP thisN = dp_mul(nN, vv);
      DP nextN = dp_mul(nN, uu);
      piece.num.clear();
      for (std::size_t i = 0; i < thisN.size(); ++i)
        if (thisN[i] != 0) piece.num[(long)i] = thisN[i];
      pieces.push_back(std::move(piece));
      curN.clear();
      for (std::size_t i = 0; i < nextN.size(); ++i)
        if (nextN[i] != 0) curN[(long)i] = nextN[i];
    }
  }

  // extract exponential-polynomial families per group by exact interpolation
  for (auto& piece : pieces) {
    long L = piece.L;
    int mu = piece.mu;
    long numdeg = piece.num.empty() ? 0 : piece.num.rbegin()->first;
    long n0 = numdeg + 1;  // beyond transient influence
    long need = n0 + L * (mu + 2) + L;
    auto c = ps_coeffs(piece.num, piece.den, need);
    // ratio over one period: p^{-gamma L} (integer exponent)
    long gl = (long)(piece.gamma.get_num().get_si() * (L / piece.gamma.get_den().get_si()));
    Rat R = rat_pow(Rat(p), -gl);
    for (long r = 0; r < L; ++r) {
      // sample points n = nr + j L with nr >= n0, nr = r mod L
      long nr = n0 + ((r - n0) % L + L) % L;
      // phi_j = c[nr + jL] * R^{-j} should be a polynomial of degree < mu in j
      std::vector<Rat> phi;
      for (int j = 0; j <= mu + 1; ++j)
        phi.push_back(c[nr + j * L] * rat_pow(R, -j));
      // Newton forward differences give polynomial coefficients; degree check
      std::vector<std::vector<Rat>> diff{phi};
      for (int k = 1; k <= mu + 1; ++k) {
        std::vector<Rat> d;
        for (std::size_t i = 0; i + 1 < diff.back().size(); ++i)
          d.push_back(diff.back()[i + 1] - diff.back()[i]);
        diff.push_back(d);
      }
      int deg = -1;
      for (int k = 0; k <= mu; ++k)
        if (!diff[k].empty() && diff[k][0] != 0) deg = k;
      // verify: differences beyond mu vanish
      for (int k = mu; k <= mu + 1; ++k)
        for (auto& v : diff[k])
          if (k >= mu && v != 0)
            throw std::logic_error("asymptotics: family interpolation failed");
      if (deg < 0) continue;  // identically zero class
      AsymFamily fam;
      fam.rate = -piece.gamma;
      fam.period = L;
      // map series residue to coefficient residue: m = n + m_off
      long mr = ((nr + m_off) % L + L) % L;
      fam.residue = mr;
      fam.degree = deg;
      // polynomial in j where j = (m - m(nr))/L, Newton form -> monomial form
      // phi(j) = sum_k diff[k][0] * C(j, k)
      std::vector<Rat> poly(deg + 1, Rat(0));
      std::vector<Rat> binom{Rat(1)};  // C(j,0) = 1
      for (int k = 0; k <= deg; ++k) {
        for (int i = 0; i <= k; ++i) poly[i] += diff[k][0] * binom[i];
        // C(j,k+1) = C(j,k) * (j - k)/(k+1)
        std::vector<Rat> nb(binom.size() + 1, Rat(0));
        for (std::size_t i = 0; i < binom.size(); ++i) {
          nb[i + 1] += binom[i] / (k + 1);
          nb[i] -= binom[i] * k / Rat(k + 1);
        }
        binom = nb;
      }
      // re-center: stored polynomial is in j' = (m - residue)/L, our samples
      // used j = (m - m(nr))/L = j' - s0
      long s0 = (nr + m_off - mr) / L;
      if (s0 != 0) {
        std::vector<Rat> shifted(poly.size(), Rat(0));
        // poly(j' - s0) by Horner on (x - s0)
        for (int k = (int)poly.size() - 1; k >= 0; --k) {
          // shifted = shifted * (x - s0) + poly[k]
          std::vector<Rat> nx(shifted.size(), Rat(0));
          for (std::size_t i = 0; i + 1 < shifted.size(); ++i) nx[i + 1] += shifted[i];
          for (std::size_t i = 0; i < shifted.size(); ++i) nx[i] -= shifted[i] * s0;
          nx[0] += poly[k];
          shifted = nx;
        }
        poly = shifted;
      }
      // samples were taken against R^j with j anchored at nr; re-anchor the
      // exponential to j' by folding R^{s0} into the polynomial
      if (s0 != 0) {
        Rat adj = rat_pow(R, -s0);
        for (auto& cc : poly) cc *= adj;
      }
      fam.poly = poly;
      A.families.push_back(std::move(fam));
    }
  }
  std::sort(A.families.begin(), A.families.end(),
            [](const AsymFamily& x, const AsymFamily& y) { return x.rate > y.rate; });

  if (!A.families.empty()) {
    const AsymFamily& dom = A.families.front();
    if (side > 0 && dom.rate == Rat(-1) && dom.degree == 0) A.certified = false;
    // fitted constant over the window: |c(m)| <= A * m^{deg} * q^{rate m}
    auto coeffs = series_expand(Z, p, fit_window);
    double best = 0;
    double lr = dom.rate.get_d() * std::log((double)p);
    for (auto& [m, v] : coeffs) {
      long mm = side > 0 ? m : -m;
      if (mm < 1) continue;
      double denom = std::pow((double)mm, dom.degree) * std::exp(lr * mm);
      best = std::max(best, std::abs(v.get_d()) / denom);
    }
    Rat fc;
    fc = Rat(best == 0 ? 0.0 : best * (1 + 1e-9));
    A.fitted_constant = fc;
  }
  return A;
}

}  // namespace igusa
