// Counting of nilpotent n-tuples in SU(2), SO(3) and U(2): generating-tuple
// counts, conjugation-orbit counts under the SU(2) normalizer, component
// counts, U(2) stabilizers, and the identity-free counts behind the stable
// wedge decompositions.
//
// Every count is computed exactly.  Closed formulas use big integers (the
// intermediate fractions with denominators 3, 8, 12, 24 must and do reduce
// to integers); enumeration walks tuple space and is cross-checked against
// the formulas.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilhom/quat_group.hpp"
#include "nilhom/subgroups.hpp"

namespace nilhom {

using BigInt = boost::multiprecision::cpp_int;

enum class CountMethod { Formula, Enumeration, Both };

// Worker-count control for tuple enumeration.  0 = use hardware
// concurrency (or NILHOM_WORKERS when set).  Results never depend on it.
void set_enumeration_workers(unsigned workers);
unsigned enumeration_workers();

// ---- Generating tuples and orbits -------------------------------------

// |Gen(n, Q_2^r)| = 2^{(r-2)n+1} (2^n - 1)(2^{n-1} - 1), r >= 3.
BigInt gen_tuple_count_formula(int n, int r);

// Closure-based count of n-tuples generating all of Q_2^r.  Optionally
// restricted to tuples avoiding I ("identity-free") or avoiding ±I.
enum class TupleFilter { All, NoIdentity, NoCenter };
std::int64_t gen_tuple_count_enumerated(int n, int r,
                                        TupleFilter filter = TupleFilter::All);

// Conjugation permutations of Q_2^r induced by its SU(2) normalizer: the 48
// binary octahedral elements for r = 3, the 2^{r+1} elements of Q_2^{r+1}
// for r >= 4.  Each permutation maps elem_index -> elem_index.
std::vector<std::vector<int>> normalizer_action(int r);

struct OrbitCount {
  std::int64_t orbits = 0;
  std::int64_t tuples = 0;
  bool all_orbits_free = false;  // every orbit has size |N|/2
};

// Orbit count of Gen(n, Q_2^r) under normalizer conjugation; verifies the
// freeness claim (orbit size exactly |N|/2) and fails loudly otherwise.
OrbitCount conjugation_orbit_count(int n, int r, TupleFilter filter = TupleFilter::All);

// ---- Component counts --------------------------------------------------

// C(n, q+1) = 2^{n-2}(2^n-1)(2^{n-1}-1)/3 + (2^n-1)(2^{(q-2)(n-1)}-1) 2^{2n-3}.
BigInt su2_component_formula(int n, int q);

struct TupleClassReport {
  int n = 0, q = 0;
  BigInt abelian_components = 1;
  std::map<int, BigInt> per_r;  // class r -> orbit count, 2 <= r <= q
  BigInt total_nonabelian = 0;
  CountMethod method = CountMethod::Formula;
  bool agree = true;  // formula vs enumeration, when method == Both
};

TupleClassReport su2_component_count(int n, int q,
                                     CountMethod method = CountMethod::Formula);

struct So3Counts {
  BigInt m_n;       // M(n)   = (2^n-1)(2^{n-1}-1)/3
  BigInt m_nq;      // M(n,q) = (2^n-1)(2^{(q-2)(n-1)}-1) 2^{n-2}
  bool covering_consistent = false;  // matches division of the SU(2) counts
};

So3Counts so3_component_count(int n, int q);

struct U2Counts {
  BigInt abelian = 1;
  BigInt type_z2z2;  // components (S^1)^n x_{(Z/2)^2} PU(2); equals M(n)
  BigInt type_z2;    // components (S^1)^n x_{Z/2} PU(2); equals M(n,q)
};

// Formula route; the enumeration route (orbits under normalizer conjugation
// plus coordinate sign flips) is available separately for cross-checking.
U2Counts u2_component_count(int n, int q);
U2Counts u2_component_count_enumerated(int n, int q);

// Stabilizer of a non-commuting tuple under the (Z/2)^n sign action: the set
// of sign vectors ε with (ε_1 x_1, ..., ε_n x_n) conjugate to the tuple.
// Order is 4 when the generated subgroup is conjugate to Q_8, else 2.
struct U2Stabilizer {
  std::vector<std::vector<int>> sign_vectors;  // entries ±1
  std::size_t order() const { return sign_vectors.size(); }
};

U2Stabilizer u2_stabilizer(const GroupId& ambient, const std::vector<QuatElem>& tuple);

// ---- Stable summand counts ---------------------------------------------

// K(n, q+1) = 7^n/24 - 3^n/8 + 1/12 + sum_{r=4}^{q+1} [...]/2^r.
BigInt su2_summand_formula(int k, int q);
// N(n) = (3^{n-1} - 1)/2.
BigInt so3_summand_base_formula(int k);
// N(n, q) = sum_{r=3}^{q} [(2^r-1)^n - 3(2^{r-1}-1)^n + 2(2^{r-2}-1)^n]/2^r.
BigInt so3_summand_extra_formula(int k, int q);

enum class SummandTarget { SU2, SO3 };

struct StableSummandReport {
  int k = 0, q = 0;
  SummandTarget target = SummandTarget::SU2;
  BigInt su2_count;        // K(k, q+1); valid for target SU2
  BigInt so3_base;         // N(k);     valid for target SO3
  BigInt so3_extra;        // N(k, q);  valid for target SO3
  CountMethod method = CountMethod::Formula;
  bool agree = true;
};

StableSummandReport stable_summand_counts(int k, int q, SummandTarget target,
                                          CountMethod method = CountMethod::Formula);

// ---- Partition identity -------------------------------------------------
// |Q_2^{q+1}|^n = #commuting tuples + sum over non-abelian subgroups H of
// |Gen_n(H)|; verified by direct enumeration.
bool verify_partition_identity(int n, int q);

std::string to_json(const TupleClassReport& r);
std::string to_tsv(const TupleClassReport& r);
std::string to_json(const StableSummandReport& r);

}  // namespace nilhom
