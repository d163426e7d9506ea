#include "igusa/qt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace igusa {

QTPoly qt_mono(long eq, long et, const Int& c) {
  QTPoly p;
  if (c != 0) p[{eq, et}] = c;
  return p;
}

QTPoly qt_add(const QTPoly& a, const QTPoly& b) {
  QTPoly r = a;
  for (auto& [e, c] : b) {
    auto it = r.find(e);
    if (it == r.end()) r[e] = c;
    else {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

QTPoly qt_sub(const QTPoly& a, const QTPoly& b) {
  QTPoly nb;
  for (auto& [e, c] : b) nb[e] = -c;
  return qt_add(a, nb);
}

QTPoly qt_mul(const QTPoly& a, const QTPoly& b) {
  QTPoly r;
  for (auto& [e1, c1] : a)
    for (auto& [e2, c2] : b) {
      auto key = std::make_pair(e1.first + e2.first, e1.second + e2.second);
      auto it = r.find(key);
      if (it == r.end()) r[key] = c1 * c2;
      else {
        it->second += c1 * c2;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

bool qt_is_zero(const QTPoly& a) { return a.empty(); }

namespace {

QTPoly factor_poly(DenFactor f) {  // 1 - q^{-e} t^{d}
  QTPoly p = qt_mono(0, 0);
  p = qt_sub(p, qt_mono(-f.e, f.d));
  return p;
}

QTPoly den_product(const std::map<DenFactor, int>& den) {
  QTPoly p = qt_mono(0, 0);
  for (auto& [f, m] : den)
    for (int i = 0; i < m; ++i) p = qt_mul(p, factor_poly(f));
  return p;
}

}  // namespace

RationalQT RationalQT::operator+(const RationalQT& o) const {
  RationalQT r;
  // common denominator: per-factor max multiplicity
  std::map<DenFactor, int> cd = den;
  for (auto& [f, m] : o.den) cd[f] = std::max(cd[f], m);
  std::map<DenFactor, int> extra_a, extra_b;
  for (auto& [f, m] : cd) {
    int ma = 0, mb = 0;
    if (auto it = den.find(f); it != den.end()) ma = it->second;
    if (auto it = o.den.find(f); it != o.den.end()) mb = it->second;
    if (m - ma > 0) extra_a[f] = m - ma;
    if (m - mb > 0) extra_b[f] = m - mb;
  }
  r.num = qt_add(qt_mul(num, den_product(extra_a)), qt_mul(o.num, den_product(extra_b)));
  if (!qt_is_zero(r.num)) r.den = cd;
  return r;
}

RationalQT RationalQT::operator-(const RationalQT& o) const {
  RationalQT neg = o;
  QTPoly n;
  for (auto& [e, c] : o.num) n[e] = -c;
  neg.num = n;
  return *this + neg;
}

RationalQT RationalQT::operator*(const RationalQT& o) const {
  RationalQT r;
  r.num = qt_mul(num, o.num);
  if (qt_is_zero(r.num)) return r;
  r.den = den;
  for (auto& [f, m] : o.den) r.den[f] += m;
  return r;
}

RationalQT& RationalQT::mul_den(DenFactor f, int mult) {
  den[f] += mult;
  return *this;
}

RationalQT RationalQT::scaled(const QTPoly& m) const {
  RationalQT r = *this;
  r.num = qt_mul(r.num, m);
  if (qt_is_zero(r.num)) r.den.clear();
  return r;
}

bool RationalQT::equals(const RationalQT& o) const {
  QTPoly lhs = qt_mul(num, den_product(o.den));
  QTPoly rhs = qt_mul(o.num, den_product(den));
  return lhs == rhs;
}

std::optional<QTPoly> qt_divide_factor(const QTPoly& P, DenFactor f) {
  if (qt_is_zero(P)) return P;
  // Divide by (1 - q^{-e} t^{d}) exactly.  Work with the cleared binomial
  // q^{e} - t^{d} (P scaled by q^{e}) and run long division in t with
  // monomial leading coefficient.
  QTPoly R = qt_mul(P, qt_mono(f.e, 0));
  // divisor: q^e t^0 - q^0 t^d.  Use the term with the larger t-exponent as
  // the leading term.
  long lead_q, lead_t, other_q, other_t;
  Int lead_c, other_c;
  if (f.d > 0) {
    lead_q = 0; lead_t = f.d; lead_c = -1;
    other_q = f.e; other_t = 0; other_c = 1;
  } else if (f.d < 0) {
    lead_q = f.e; lead_t = 0; lead_c = 1;
    other_q = 0; other_t = f.d; other_c = -1;
  } else {
    throw std::invalid_argument("factor with d = 0");
  }
  QTPoly Q;
  // guard against a non-terminating division of a non-multiple
  std::size_t guard = 4 * (R.size() + 4) * (std::abs(f.d) + 2) * 64;
  while (!R.empty()) {
    if (guard-- == 0) return std::nullopt;
    // maximal t-exponent term of R
    auto it = std::max_element(R.begin(), R.end(), [](auto& a, auto& b) {
      return a.first.second < b.first.second ||
             (a.first.second == b.first.second && a.first.first < b.first.first);
    });
    auto [eq, et] = it->first;
    Int c = it->second;
    // quotient term: R_top / lead
    long tq = eq - lead_q, tt = et - lead_t;
    Int qc = c / lead_c;  // lead_c is +-1
    Q[{tq, tt}] += qc;
    // R -= qterm * divisor
    QTPoly sub;
    sub[{tq + lead_q, tt + lead_t}] = qc * lead_c;
    sub[{tq + other_q, tt + other_t}] += qc * other_c;
    R = qt_sub(R, sub);
    // when the remaining max t-degree never drops, bail out
    if (!R.empty()) {
      auto it2 = std::max_element(R.begin(), R.end(), [](auto& a, auto& b) {
        return a.first.second < b.first.second;
      });
      if (it2->first.second > et + std::abs(f.d)) return std::nullopt;
    }
  }
  // strip zero entries
  for (auto it = Q.begin(); it != Q.end();)
    it = (it->second == 0) ? Q.erase(it) : std::next(it);
  return Q;
}

void RationalQT::normalize() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = den.begin(); it != den.end() && !changed; ++it) {
      if (it->first.d == 0) continue;  // scalar in t; never cancels against num
      auto q = qt_divide_factor(num, it->first);
      if (q) {
        num = *q;
        if (--it->second == 0) den.erase(it);
        changed = true;
      }
    }
    if (qt_is_zero(num)) { den.clear(); return; }
  }
}

QOnly qt_substitute_t1(const RationalQT& r) {
  QOnly out;
  for (auto& [e, c] : r.num) {
    out.num[e.first] += c;
    if (out.num[e.first] == 0) out.num.erase(e.first);
  }
  std::map<long, Int> den{{0, 1}};
  for (auto& [f, m] : r.den) {
    for (int i = 0; i < m; ++i) {
      // multiply den by (1 - q^{-e})
      std::map<long, Int> nd;
      for (auto& [k, c] : den) {
        nd[k] += c;
        nd[k - f.e] -= c;
      }
      for (auto it = nd.begin(); it != nd.end();)
        it = (it->second == 0) ? nd.erase(it) : std::next(it);
      den = std::move(nd);
    }
  }
  out.den = std::move(den);
  return out;
}

bool qt_is_one_at_t1(const RationalQT& r) {
  QOnly s = qt_substitute_t1(r);
  return s.num == s.den;
}

bool qt_num_vanishes_at_t1(const RationalQT& r) {
  std::map<long, Int> acc;
  for (auto& [e, c] : r.num) {
    acc[e.first] += c;
  }
  for (auto& [k, c] : acc)
    if (c != 0) return false;
  return true;
}

std::string qt_str(const QTPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : p) {
    Int a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool hv = e.first != 0 || e.second != 0;
    if (a != 1 || !hv) {
      os << a.get_str();
      if (hv) os << "*";
    }
    if (e.first != 0) {
      os << "q^" << e.first;
      if (e.second != 0) os << "*";
    }
    if (e.second != 0) os << "t^" << e.second;
  }
  return os.str();
}

std::string rational_qt_str(const RationalQT& r) {
  std::ostringstream os;
  os << "(" << qt_str(r.num) << ")";
  for (auto& [f, m] : r.den) {
    os << " / (1 - q^-" << f.e << " t^" << f.d << ")";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

}  // namespace igusa
