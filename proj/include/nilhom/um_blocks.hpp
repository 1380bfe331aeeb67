// Block normalization of nil-2 tuples of monomial unitary matrices:
// coarsest partition centralizing a diagonal, partition infimum,
// consecutivizing (optionally even) permutations, and simultaneous
// conjugation into block-aligned form.
//
// Indices are 0-based throughout.  Part ordering convention: parts are
// arranged by descending size, ties broken by smallest contained index.

#pragma once

#include <string>
#include <vector>

#include "nilhom/su2_exact.hpp"

namespace nilhom {

struct SetPartition {
  // Canonical form: each part sorted ascending, parts sorted by smallest
  // element; together the parts cover {0..m-1} disjointly.
  std::vector<std::vector<int>> parts;

  bool operator==(const SetPartition&) const = default;

  int ground_size() const;
  void check_valid() const;
};

SetPartition singleton_partition(int m);
SetPartition one_part_partition(int m);

// i and j share a part iff d[i] == d[j]; the coarsest partition p such that
// diag(d) is central in the block-unitary group U(p).
SetPartition coarsest_partition(const std::vector<Rat>& d);

// Common refinement: the coarsest partition refining every input.
SetPartition partition_infimum(const std::vector<SetPartition>& ps);

bool refines(const SetPartition& fine, const SetPartition& coarse);

// pi[i] = image of i.
int permutation_sign(const std::vector<int>& pi);

// A permutation sending each part to a run of consecutive integers, runs
// ordered by descending part size (ties by smallest original element).  With
// require_even the result is additionally an even permutation, patched by a
// swap inside some part of size >= 2 when needed (always possible: an odd
// forced permutation only arises when such a part exists).
std::vector<int> consecutivizing_permutation(const SetPartition& p, bool require_even);

// Generalized permutation matrix: entry (perm[j], j) is e^{2 pi i phases[j]},
// all other entries zero.  Unitary by construction.
struct MonomialUnitary {
  std::vector<int> perm;
  std::vector<Rat> phases;

  bool operator==(const MonomialUnitary&) const = default;

  int size() const { return static_cast<int>(perm.size()); }
};

MonomialUnitary mu_identity(int m);
MonomialUnitary mu_diag(const std::vector<Rat>& d);
MonomialUnitary mu_permutation(const std::vector<int>& pi);
MonomialUnitary mu_mul(const MonomialUnitary& a, const MonomialUnitary& b);
MonomialUnitary mu_inverse(const MonomialUnitary& a);
// a b a^{-1} b^{-1}
MonomialUnitary mu_commutator(const MonomialUnitary& a, const MonomialUnitary& b);

bool mu_is_diagonal(const MonomialUnitary& a);
// The diagonal angles; throws unless diagonal.
std::vector<Rat> mu_diagonal(const MonomialUnitary& a);

// True iff a lies in U(p): its permutation maps every part into itself.
bool block_supported(const MonomialUnitary& a, const SetPartition& p);

struct BlockNormalization {
  SetPartition partition;            // infimum of the commutator partitions
  std::vector<int> permutation;      // consecutivizing conjugator
  std::vector<MonomialUnitary> tuple;  // conjugated, block-aligned tuple
};

// The nil-2 normalization procedure: commutators must all be diagonal
// (invalid_argument otherwise); every x_k must be supported on the infimum
// partition (logic_error otherwise — impossible for genuine nil-2 input);
// the returned tuple is the conjugation by the consecutivizing permutation.
BlockNormalization nil2_block_normalize(const std::vector<MonomialUnitary>& tuple);

// "[[0,2],[1]]" style, parts and elements in canonical order.
std::string to_string(const SetPartition& p);
std::string to_json(const SetPartition& p);
std::string to_json(const MonomialUnitary& a);

}  // namespace nilhom
