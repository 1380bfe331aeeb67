// Page assembly for central extensions by Z/2 with transgression d2(u) = k:
// Sq1 as a Leibniz derivation, the E3/E4 page structure built from quotient
// and annihilator ideals, presentations of H*(Bcom Q_2^n; F2), and
// total-degree Poincare series of pages.
//
// Pages are reported as graded vector spaces; any ring structure on an E4
// report is a candidate only (flagged non-authoritative).

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilhom/groebner.hpp"

namespace nilhom {

struct ExtensionDatum {
  GradedRing ring;                    // presents A = H*(B(G/center); F2)
  std::vector<BinaryPoly> base_ideal;
  BinaryPoly k;                       // transgression d2(u), degree 2
  std::optional<BinaryPoly> sq1_k;    // degree 3 when present

  void check_valid() const;
};

// From an ideal file with a "k:" line and an optional "sq1k:" line.
ExtensionDatum extension_from_file(const IdealFile& f);

// Sq1 extended additively and by the Leibniz rule: degree-1 variables square,
// degree->=2 variables look up the table (keyed by variable index); squares
// die (derivation in characteristic 2).  Missing needed entries throw.
BinaryPoly sq1(const GradedRing& r, const BinaryPoly& p,
               const std::map<int, BinaryPoly>& table);

struct PageReport {
  int page = 3;
  std::vector<BinaryPoly> quotient_ideal;  // presents the u^0 column
  std::vector<BinaryPoly> annihilator;     // generators of the shifted column
  std::vector<BinaryPoly> ann_ambient;     // ideal the annihilator lives over
  int u_period = 2;                        // u-power spacing of the free columns
  int ann_shift = 1;                       // u-exponent carrying the annihilator
  bool ring_structure_authoritative = true;
  std::optional<bool> d5_candidate_vanishes;
  HilbertFunction poincare;
};

// E3 = A/(k)[u^p] + u ann_A(k)[u^p], p = 2.
PageReport e3_page(const ExtensionDatum& ext, int max_degree = 12);

// E4 = A/(k, Sq1 k)[u^4] + u^2 (ann of Sq1 k in A/(k))[u^4].  Requires the
// E3 annihilator to vanish (the only case the source derivation covers) and
// sq1_k to be present; a zero sq1_k leaves the E3 page re-tagged.  An
// optional d5 candidate polynomial is checked to reduce to 0 in A/(k).
PageReport e4_page(const ExtensionDatum& ext, int max_degree = 12,
                   const std::optional<BinaryPoly>& d5_candidate = std::nullopt);

// dims[d] = sum over u-exponents e = 0 mod u_period of quotient dims[d-e]
// plus the annihilator-column dims at u-exponents e = ann_shift mod u_period.
HilbertFunction page_poincare_series(const GradedRing& r, const PageReport& rep,
                                     int max_degree);

struct Presentation {
  GradedRing ring;
  std::vector<BinaryPoly> ideal;
};

// H*(Bcom Q_2^n; F2): n = 3 gives F2[y1,y2,y3,z]/(yi yj, y1^2+y2^2+y3^2);
// n >= 4 gives F2[x1,x2,y1..y_{2^{n-2}},z]/(x1^2, xk yi, yi yj (i != j),
// x2 + sum yi^2) with x1, yi of degree 1 and x2, z of degree 2.
Presentation bcom_presentation(int n);

// The extension datum behind Bcom Q_2^n (n >= 4): base without the central
// class, k = x2 + sum yi^2; Sq1 k = 0, so the sequence abuts at E3.
ExtensionDatum bcom_extension(int n);

// The extension computing H*(B(3, Q16); F2): the 6-variable base ring with
// its 11 relations, k = z + b1 + y1^2 + b2 + y2^2 and
// Sq1 k = y1 z + y1 b1 + y2 z + y2 b2.
ExtensionDatum b3q16_datum();

// The natural degree-5 differential candidate for that extension.
BinaryPoly b3q16_d5_candidate();

std::string to_json(const GradedRing& r, const PageReport& rep);

}  // namespace nilhom
