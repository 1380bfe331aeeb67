// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria 1-9 come from the library verification suite; the last
// one additionally cross-checks the Groebner machinery against the
// independent linear-algebra oracles.

#include <cstdio>
#include <vector>

#include "nilhom/spectral.hpp"
#include "nilhom/verify.hpp"
#include "oracles.hpp"

using namespace nilhom;

namespace {

// base-ring and Bcom Hilbert functions against degreewise rank computations
bool hilbert_vs_oracle(const GradedRing& r, const std::vector<BinaryPoly>& ideal,
                       int maxdeg) {
  auto h = hilbert_function(r, ideal, maxdeg);
  for (int d = 0; d <= maxdeg; ++d)
    if (h.dims[static_cast<std::size_t>(d)] != oracle::quotient_dim(r, ideal, d))
      return false;
  return true;
}

// both inclusions of the colon ideal ((I + (k)) : Sq1 k), degree by degree
bool colon_vs_oracle(const ExtensionDatum& ext, int maxdeg) {
  std::vector<BinaryPoly> with_k = ext.base_ideal;
  with_k.push_back(ext.k);
  auto cg = colon_ideal(ext.ring, with_k, *ext.sq1_k);
  MonomialOrder ord{&ext.ring, -1};
  std::vector<BinaryPoly> joined = with_k;
  joined.insert(joined.end(), cg.begin(), cg.end());
  for (const auto& g : cg)
    if (!oracle::ideal_member(ext.ring, with_k, poly_mul(g, *ext.sq1_k, ord)))
      return false;
  for (int d = 0; d <= maxdeg; ++d)
    for (const auto& g : oracle::annihilator_space(ext.ring, with_k, *ext.sq1_k, d))
      if (!oracle::ideal_member(ext.ring, joined, g)) return false;
  return true;
}

// assemble the E4 Poincare series from oracle ranks only and compare
bool e4_vs_oracle(const ExtensionDatum& ext, int maxdeg) {
  auto rep = e4_page(ext, maxdeg, b3q16_d5_candidate());
  std::vector<BinaryPoly> ann_joined = rep.ann_ambient;
  ann_joined.insert(ann_joined.end(), rep.annihilator.begin(), rep.annihilator.end());
  for (int d = 0; d <= maxdeg; ++d) {
    long long dim = 0;
    for (int e = 0; e <= d; e += rep.u_period)
      dim += oracle::quotient_dim(ext.ring, rep.quotient_ideal, d - e);
    for (int e = rep.ann_shift; e <= d; e += rep.u_period)
      dim += oracle::quotient_dim(ext.ring, rep.ann_ambient, d - e) -
             oracle::quotient_dim(ext.ring, ann_joined, d - e);
    if (rep.poincare.dims[static_cast<std::size_t>(d)] != dim) return false;
  }
  return true;
}

bool check_oracle_equivalence() {
  auto ext = b3q16_datum();
  if (!hilbert_vs_oracle(ext.ring, ext.base_ideal, 8)) return false;
  auto p4 = bcom_presentation(4);
  if (!hilbert_vs_oracle(p4.ring, p4.ideal, 8)) return false;
  if (!colon_vs_oracle(ext, 6)) return false;
  return e4_vs_oracle(ext, 10);
}

}  // namespace

int main() {
  std::vector<Verdict> verdicts = verify_acceptance();
  // swap the frozen-series criterion's companion in: series must match the
  // frozen values *and* the oracle reassembly
  verdicts.back().name = "oracle_equivalence";
  verdicts.back().pass = verdicts.back().pass && check_oracle_equivalence();

  bool ok = true;
  for (const auto& v : verdicts) {
    std::printf("%s %s\n", v.pass ? "pass" : "fail", v.name.c_str());
    ok = ok && v.pass;
  }
  return ok ? 0 : 1;
}
