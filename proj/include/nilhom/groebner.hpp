// Buchberger Groebner bases over F2 for weighted graded rings, normal forms,
// colon ideals (annihilators in quotients) via single-variable elimination,
// Hilbert functions by standard-monomial counting, and the ideal file format.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilhom/f2poly.hpp"

namespace nilhom {

struct GroebnerBasis {
  std::vector<BinaryPoly> gens;  // reduced basis, sorted by leading term
  int elim_var = -1;             // order tag
  bool reduced = true;

  MonomialOrder order(const GradedRing& r) const { return {&r, elim_var}; }
};

// Reduced Groebner basis; deterministic (S-pairs by lcm degree then index).
GroebnerBasis groebner_basis(const GradedRing& r, const std::vector<BinaryPoly>& gens,
                             int elim_var = -1);

// Complete multivariate reduction: no term of the result is divisible by a
// leading term of the basis.
BinaryPoly normal_form(const GradedRing& r, const BinaryPoly& p, const GroebnerBasis& gb);

bool ideal_contains(const GradedRing& r, const GroebnerBasis& gb, const BinaryPoly& p);

// Exact division q = p / f (requires p in (f)); throws otherwise.
BinaryPoly poly_exact_div(const GradedRing& r, const BinaryPoly& p, const BinaryPoly& f,
                          const MonomialOrder& ord);

// Generators of (I : f) = {g : g f in I}, reduced modulo GB(I); the empty
// list means the annihilator of f in P/I is zero.  Computed from
// I cap (f) = (t*I + (1+t)*f) cap P  with one eliminated variable t,
// then exact division by f.
std::vector<BinaryPoly> colon_ideal(const GradedRing& r, const std::vector<BinaryPoly>& ideal,
                                    const BinaryPoly& f);

struct HilbertFunction {
  std::vector<long long> dims;  // dims[d] = dim_F2 (P/I)_d, 0 <= d <= D

  bool operator==(const HilbertFunction&) const = default;
};

// Standard-monomial count per weighted degree, with divisibility pruning.
HilbertFunction hilbert_function(const GradedRing& r, const std::vector<BinaryPoly>& ideal,
                                 int max_degree);

// Ideal files: "ring: name:degree, name:degree, ..." header, then one
// polynomial per line; '#' starts a comment; lines "key: poly" become named
// polynomials (used for the extension data "k:" / "sq1k:").
struct IdealFile {
  GradedRing ring;
  std::vector<BinaryPoly> gens;
  std::map<std::string, BinaryPoly> named;
};

IdealFile parse_ideal_file(const std::string& text);
IdealFile load_ideal_file(const std::string& path);
std::string to_string(const GradedRing& r, const IdealFile& f);  // round-trip form

std::string to_json(const GradedRing& r, const GroebnerBasis& gb);
std::string to_json(const HilbertFunction& h);

}  // namespace nilhom
