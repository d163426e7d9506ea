#include "igusa/fp.hpp"

#include <algorithm>

namespace igusa {

long mod_pow(long b, long e, long p) {
  b %= p;
  if (b < 0) b += p;
  long r = 1;
  while (e > 0) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

long mod_inv(long a, long p) { return mod_pow(a, p - 2, p); }

namespace {

// exponent tables: pw[v][j] = v^j mod p for v in 1..p-1, j in 0..p-2
struct PowerTables {
  long p;
  std::vector<std::vector<long>> pw;
  explicit PowerTables(long p_) : p(p_), pw(p_) {
    for (long v = 1; v < p; ++v) {
      pw[v].resize(p - 1);
      long cur = 1;
      for (long j = 0; j + 1 < p; ++j) {
        pw[v][j] = cur;
        cur = (cur * v) % p;
      }
    }
  }
  long power(long v, long e) const {
    long m = e % (p - 1);
    if (m < 0) m += p - 1;
    return pw[v][m];
  }
};

struct FpTerm {
  long c;
  long ea, eb;
};

std::vector<FpTerm> to_fp_terms(const Laurent& f, long p) {
  std::vector<FpTerm> out;
  for (auto& [e, c] : f.terms()) {
    if (padic_ord(c, p) != 0) continue;  // only unit coefficients survive
    Int r = padic_unit_mod(c, p, 1);
    out.push_back({r.get_si() % p, e.a, e.b});
  }
  return out;
}

long eval_fp(const std::vector<FpTerm>& ts, const PowerTables& T, long x, long y) {
  long s = 0;
  for (auto& t : ts) s = (s + t.c * ((T.power(x, t.ea) * T.power(y, t.eb)) % T.p)) % T.p;
  return s;
}

}  // namespace

long count_torus_zeros(const Laurent& fbar, long p) {
  if (fbar.empty()) return (p - 1) * (p - 1);
  PowerTables T(p);
  auto ts = to_fp_terms(fbar, p);
  long n = 0;
  for (long x = 1; x < p; ++x)
    for (long y = 1; y < p; ++y)
      if (eval_fp(ts, T, x, y) == 0) ++n;
  return n;
}

bool simple_zeros_certificate(const Laurent& fbar, long p) {
  PowerTables T(p);
  auto ts = to_fp_terms(fbar, p);
  auto tx = to_fp_terms(fbar.derivative(0), p);
  auto ty = to_fp_terms(fbar.derivative(1), p);
  for (long x = 1; x < p; ++x)
    for (long y = 1; y < p; ++y)
      if (eval_fp(ts, T, x, y) == 0 && eval_fp(tx, T, x, y) == 0 &&
          eval_fp(ty, T, x, y) == 0)
        return false;
  return true;
}

NondegReport is_nondegenerate_mod_p(const Laurent& f, const NewtonPolytope& P, long p) {
  NondegReport rep;
  auto red = reduce_mod_p(f, p);
  if (red.denominator_hit) {
    rep.error = "coefficient denominator divisible by p";
    return rep;
  }
  if (red.support_collapsed) {
    rep.error = "support collapses mod p (coefficient divisible by p)";
    return rep;
  }
  PowerTables T(p);
  for (auto& face : P.all_faces()) {
    Laurent ftau;
    for (auto& pt : face.points) {
      Exp e{pt.x, pt.y};
      auto it = red.fbar.terms().find(e);
      if (it != red.fbar.terms().end()) ftau.add_term(e, it->second);
    }
    auto hat = hat_decomposition(ftau);
    // Lemma guard: the clearing exponents must stay nonzero mod p.
    if ((hat.d1 != 0 && hat.d1 % p == 0) || (hat.d2 != 0 && hat.d2 % p == 0)) {
      rep.error = "p divides a clearing exponent of a face";
      return rep;
    }
    auto ts = to_fp_terms(hat.fhat, p);
    auto tx = to_fp_terms(hat.fhat.derivative(0), p);
    auto ty = to_fp_terms(hat.fhat.derivative(1), p);
    for (long x = 1; x < p; ++x)
      for (long y = 1; y < p; ++y)
        if (eval_fp(ts, T, x, y) == 0 && eval_fp(tx, T, x, y) == 0 &&
            eval_fp(ty, T, x, y) == 0) {
          rep.bad_face = face;
          rep.witness_x = x;
          rep.witness_y = y;
          return rep;
        }
  }
  rep.ok = true;
  return rep;
}

namespace {
bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

std::optional<long> find_good_prime(const Laurent& f, long from, long bound) {
  NewtonPolytope P(f);
  for (long p = std::max(from, 2L); p <= bound; ++p) {
    if (!is_prime(p)) continue;
    if (is_nondegenerate_mod_p(f, P, p).ok) return p;
  }
  return std::nullopt;
}

}  // namespace igusa
