#include "igusa/laurent.hpp"

#include <cctype>
#include <sstream>

namespace igusa {

void Laurent::add_term(Exp e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Exp> Laurent::support() const {
  std::vector<Exp> out;
  out.reserve(terms_.size());
  for (auto& [e, c] : terms_) out.push_back(e);
  return out;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_)
      r.add_term({e1.a + e2.a, e1.b + e2.b}, c1 * c2);
  return r;
}

Laurent Laurent::derivative(int i) const {
  Laurent r;
  for (auto& [e, c] : terms_) {
    long k = (i == 0) ? e.a : e.b;
    if (k == 0) continue;
    Exp d = e;
    if (i == 0) --d.a; else --d.b;
    r.add_term(d, c * k);
  }
  return r;
}

Laurent Laurent::restrict_support(const std::vector<Exp>& pts) const {
  Laurent r;
  for (auto& p : pts) {
    auto it = terms_.find(p);
    if (it != terms_.end()) r.add_term(p, it->second);
  }
  return r;
}

Laurent Laurent::shifted(long da, long db) const {
  Laurent r;
  for (auto& [e, c] : terms_) r.add_term({e.a + da, e.b + db}, c);
  return r;
}

Rat Laurent::eval(const Rat& x, const Rat& y) const {
  Rat s = 0;
  for (auto& [e, c] : terms_) s += c * rat_pow(x, e.a) * rat_pow(y, e.b);
  return s;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_var = (e.a != 0 || e.b != 0);
    if (a != 1 || !has_var) {
      os << rat_str(a);
      if (has_var) os << "*";
    }
    if (e.a != 0) {
      os << "x";
      if (e.a != 1) os << "^" << e.a;
      if (e.b != 0) os << "*";
    }
    if (e.b != 0) {
      os << "y";
      if (e.b != 1) os << "^" << e.b;
    }
  }
  return os.str();
}

// ---- parser --------------------------------------------------------------

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
  bool done() { skip_ws(); return i >= s.size(); }
  char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what);
  }
};

long parse_int(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
  if (c.i >= c.s.size() || !std::isdigit((unsigned char)c.s[c.i])) c.fail("expected integer");
  while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) ++c.i;
  return std::stol(c.s.substr(start, c.i - start));
}

// unsigned rational: digits [ '/' digits ]
Rat parse_number(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) ++c.i;
  if (c.i == start) c.fail("expected number");
  std::string num = c.s.substr(start, c.i - start);
  c.skip_ws();
  if (c.peek() == '/') {
    // a slash is a fraction only when followed by digits
    std::size_t save = c.i;
    ++c.i;
    c.skip_ws();
    if (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) {
      std::size_t dstart = c.i;
      while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) ++c.i;
      return rat_parse(num + "/" + c.s.substr(dstart, c.i - dstart));
    }
    c.i = save;
  }
  return rat_parse(num);
}

}  // namespace

Laurent laurent_parse(const std::string& text) {
  Laurent f;
  Cursor c{text};
  if (c.done()) throw std::invalid_argument("empty polynomial");
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = (ch == '-') ? -1 : 1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    first = false;
    c.skip_ws();

    Rat coeff = 1;
    bool saw_coeff = false;
    if (c.peek() == '(') {
      ++c.i;
      coeff = parse_number(c);
      if (c.peek() != ')') c.fail("expected ')'");
      ++c.i;
      saw_coeff = true;
    } else if (std::isdigit((unsigned char)c.peek())) {
      coeff = parse_number(c);
      saw_coeff = true;
    }

    long ea = 0, eb = 0;
    bool saw_var = false;
    for (;;) {
      c.skip_ws();
      if (c.peek() == '*') { ++c.i; c.skip_ws(); }
      char v = c.peek();
      if (v != 'x' && v != 'y') break;
      ++c.i;
      long e = 1;
      c.skip_ws();
      if (c.peek() == '^') {
        ++c.i;
        e = parse_int(c);
      }
      if (v == 'x') ea += e; else eb += e;
      saw_var = true;
    }
    if (!saw_coeff && !saw_var) c.fail("expected term");
    f.add_term({ea, eb}, sign * coeff);
  }
  return f;
}

HatDecomposition hat_decomposition(const Laurent& f) {
  HatDecomposition h;
  if (f.empty()) { h.fhat = f; return h; }
  long mina = 0, minb = 0;
  for (auto& [e, c] : f.terms()) {
    mina = std::min(mina, e.a);
    minb = std::min(minb, e.b);
  }
  h.d1 = -mina;
  h.d2 = -minb;
  h.fhat = f.shifted(h.d1, h.d2);
  return h;
}

ModpReduction reduce_mod_p(const Laurent& f, long p) {
  ModpReduction r;
  for (auto& [e, c] : f.terms()) {
    if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), (unsigned long)p)) {
      r.denominator_hit = true;
      continue;
    }
    Int res = padic_mod(c, p, 1);
    if (res == 0) {
      r.support_collapsed = true;
      continue;
    }
    r.fbar.add_term(e, Rat(res));
  }
  return r;
}

}  // namespace igusa
