// Batch verification: the Singular-session reproduction checks and the full
// cross-check suite (formula vs enumeration counts, orbit freeness, covering
// divisions, stabilizers, normalizer facts, Hilbert consistency, posets,
// frozen ground-truth series).

#pragma once

#include <string>
#include <vector>

namespace nilhom {

struct Verdict {
  std::string name;
  bool pass = false;
};

bool all_pass(const std::vector<Verdict>& vs);

// The three session facts on the 6-variable ring: (I : k) = 0,
// (I + (k) : Sq1 k) = (y3) with both inclusions, and the d5 candidate
// reducing to 0 modulo I + (k).
std::vector<Verdict> verify_appendix();

// The complete cross-check suite (ten verdicts).  Heavier: enumerates tuple
// spaces up to Q32 triples.
std::vector<Verdict> verify_acceptance();

}  // namespace nilhom
