// Subgroup machinery inside a fixed finite ambient group: closure, lower
// central series, classification of subgroups of Q_{2^m}, maximal subgroups,
// normalizers, and the poset P_r(G) with its tree check and amalgam string.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilhom/quat_group.hpp"

namespace nilhom {

struct SubgroupDescriptor {
  enum class Kind { Cyclic, Order4WPair, QuatLike };
  Kind kind = Kind::Cyclic;
  int r = 0;               // Cyclic: order 2^r.  QuatLike: order 2^{r+1}.
  QuatElem coset_x{0, 0};  // Order4WPair: {±I, ±wx}.  QuatLike: mu ∪ wx mu.

  bool operator==(const SubgroupDescriptor&) const = default;
};

std::string to_string(const SubgroupDescriptor& d);

struct Subgroup {
  GroupId ambient;
  std::vector<QuatElem> elements;  // sorted, unique
  std::optional<SubgroupDescriptor> descriptor;

  std::size_t order() const { return elements.size(); }
  bool contains(const QuatElem& a) const;
  bool contains_all(const Subgroup& other) const;
  // Equality is element-set equality; the descriptor is cached metadata.
  bool same_elements(const Subgroup& other) const { return elements == other.elements; }
};

Subgroup trivial_subgroup(const GroupId& g);
Subgroup full_subgroup(const GroupId& g);

// Smallest subgroup containing the tuple (breadth-first closure).
Subgroup generated_subgroup(const GroupId& g, const std::vector<QuatElem>& tuple);

bool is_abelian(const Subgroup& h);

// Γ^1 ⊇ Γ^2 ⊇ ... down to (and including) the trivial group.
std::vector<Subgroup> lower_central_series(const Subgroup& h);
int nilpotency_class(const Subgroup& h);

// Trichotomy of the subgroup lemma; round-trips through realize_descriptor.
SubgroupDescriptor classify_subgroup(const Subgroup& h);
Subgroup realize_descriptor(const GroupId& g, const SubgroupDescriptor& d);

// Every subgroup of the ambient group (all of them are 2-generated here).
std::vector<Subgroup> all_subgroups(const GroupId& g);

// The proper maximal subgroups; exactly three for quaternion ambient groups.
std::vector<Subgroup> maximal_subgroups(const GroupId& g);

// Maximal subgroups of nilpotency class < r, for 2 <= r <= q with ambient
// Q_{2^{q+1}}: mu_{2^q} plus the 2^{q+1-r} copies of Q_{2^r}.
std::vector<Subgroup> maximal_nilclass_subgroups(const GroupId& g, int r);

// {g : g h g^{-1} = h} inside the ambient group.
Subgroup normalizer_in_ambient(const GroupId& ambient, const Subgroup& h);

struct NilPoset {
  std::vector<Subgroup> maximals;
  std::vector<Subgroup> intersections;  // distinct pairwise intersections
  // Hasse edges as (intersection index, maximal index) pairs.
  std::vector<std::pair<int, int>> edges;
  bool tree = false;
  std::string amalgam;
};

NilPoset nil_poset_report(const GroupId& g, int r);

// JSON text of a NilPoset (nodes, edges, tree flag, amalgam string).
std::string to_json(const NilPoset& p);

}  // namespace nilhom
