// Laurent polynomials in two variables with exact rational coefficients.
//
// Exponent vectors may be negative in either coordinate.  The text grammar is
// a sum of signed monomial terms, e.g. "x^-3 + y^2 + y^4" or "2*x^2*y^-1 - 7".
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "igusa/rational.hpp"

namespace igusa {

struct Exp {
  long a = 0;
  long b = 0;
  friend auto operator<=>(const Exp&, const Exp&) = default;
};

class Laurent {
 public:
  Laurent() = default;

  // term map; zero coefficients are never stored
  const std::map<Exp, Rat>& terms() const { return terms_; }

  void add_term(Exp e, const Rat& c);
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::vector<Exp> support() const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;

  // Partial derivative with respect to x (i == 0) or y (i == 1).
  Laurent derivative(int i) const;

  // Restriction of the term sum to the given set of exponents.
  Laurent restrict_support(const std::vector<Exp>& pts) const;

  // Shift all exponents by (da, db) -- multiplication by x^da y^db.
  Laurent shifted(long da, long db) const;

  // Exact evaluation at a rational point; throws on division by zero.
  Rat eval(const Rat& x, const Rat& y) const;

  std::string str() const;

  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  std::map<Exp, Rat> terms_;
};

// Parse the term-sum grammar.  Throws std::invalid_argument with a position hint.
Laurent laurent_parse(const std::string& text);

// f = x^-d1 y^-d2 * fhat with d_i = max(0, -min exponent_i), so fhat has
// nonnegative exponents and is not divisible by x or y beyond necessity.
struct HatDecomposition {
  long d1 = 0;
  long d2 = 0;
  Laurent fhat;
};
HatDecomposition hat_decomposition(const Laurent& f);

// Coefficient-wise reduction mod p (coefficients mapped to {0..p-1}).
struct ModpReduction {
  Laurent fbar;                 // terms with nonzero residue only
  bool denominator_hit = false; // some denominator divisible by p
  bool support_collapsed = false; // some nonzero coefficient reduced to 0
};
ModpReduction reduce_mod_p(const Laurent& f, long p);

}  // namespace igusa
