// Polynomials over F2 in a weighted graded variable set: sparse sets of
// exponent vectors, weighted graded reverse lexicographic order (optionally
// with one eliminated variable dominating), parsing and printing.

#pragma once

#include <string>
#include <vector>

namespace nilhom {

struct GradedRing {
  std::vector<std::string> names;
  std::vector<int> degrees;  // positive weights

  int nvars() const { return static_cast<int>(names.size()); }
  // -1 when the name is unknown.
  int var_index(const std::string& name) const;
  void check_valid() const;
};

// Extend with one auxiliary variable (used for colon-ideal elimination).
GradedRing ring_with_extra_var(const GradedRing& r, const std::string& name, int degree);

using Monomial = std::vector<int>;  // exponent vector, one entry per variable

int monomial_degree(const GradedRing& r, const Monomial& m);
Monomial monomial_one(const GradedRing& r);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_div(const Monomial& a, const Monomial& b);  // a / b
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

// Weighted graded reverse lexicographic order: larger weighted degree wins;
// on ties the monomial with the smaller exponent at the last differing index
// is the larger one.  With elim_var >= 0 that variable's exponent is compared
// first (block elimination order).
struct MonomialOrder {
  const GradedRing* ring = nullptr;
  int elim_var = -1;

  bool greater(const Monomial& a, const Monomial& b) const;
};

// Sum of distinct monomials, each with coefficient 1; terms kept sorted
// descending under a fixed order (leading term first).  The zero polynomial
// is the empty term list.
struct BinaryPoly {
  std::vector<Monomial> terms;

  bool operator==(const BinaryPoly&) const = default;

  bool is_zero() const { return terms.empty(); }
  const Monomial& leading() const;
};

BinaryPoly poly_zero();
BinaryPoly poly_one(const GradedRing& r);
BinaryPoly poly_var(const GradedRing& r, int var);
BinaryPoly poly_from_monomials(std::vector<Monomial> ms, const MonomialOrder& ord);
// XOR of term sets.
BinaryPoly poly_add(const BinaryPoly& a, const BinaryPoly& b, const MonomialOrder& ord);
BinaryPoly poly_mul(const BinaryPoly& a, const BinaryPoly& b, const MonomialOrder& ord);
BinaryPoly poly_mul_monomial(const BinaryPoly& a, const Monomial& m, const MonomialOrder& ord);
// Re-sort terms for a (possibly) different order.
BinaryPoly poly_reorder(const BinaryPoly& a, const MonomialOrder& ord);

// True iff every term has the same weighted degree (zero counts as yes).
bool poly_homogeneous(const GradedRing& r, const BinaryPoly& p);
// Weighted degree of the leading term; -1 for zero.
int poly_degree(const GradedRing& r, const BinaryPoly& p);

// Grammar: poly := term ('+' term)*; term := factor ('*' factor)*;
// factor := var ('^' uint)? | uint (reduced mod 2); whitespace ignored.
// '-' is accepted as '+' (signs are immaterial over F2).  Errors carry the
// character position.
BinaryPoly parse_polynomial(const GradedRing& r, const std::string& text);

std::string to_string(const GradedRing& r, const Monomial& m);
std::string to_string(const GradedRing& r, const BinaryPoly& p);

}  // namespace nilhom
