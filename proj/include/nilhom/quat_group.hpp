// Exact arithmetic in the 2-group families Q_{2^m} (generalized quaternion),
// C_{2^m} (cyclic) and D_{2^m} (dihedral quotient Q_{2^{m+1}}/{±I}).
//
// Elements are stored as w^eps * xi^k where xi is the primitive root of
// unity generating the torus part and w is the fixed antidiagonal matrix.
// The (eps, k) pair is a unique normal form, so equality is field equality.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilhom {

enum class Family { Quaternion, Cyclic, Dihedral };

struct GroupId {
  Family family = Family::Quaternion;
  int m = 3;  // log2 of the group order

  bool operator==(const GroupId&) const = default;

  std::int64_t order() const { return std::int64_t{1} << m; }

  // Modulus for the xi-exponent: 2^m for cyclic groups (no w part),
  // 2^{m-1} for the quaternion/dihedral families.
  std::int64_t torus_modulus() const {
    return family == Family::Cyclic ? order() : order() / 2;
  }

  bool has_w() const { return family != Family::Cyclic; }

  void check_valid() const {
    if (m < 1) throw std::invalid_argument("GroupId: m must be >= 1");
    if (family == Family::Quaternion && m < 3)
      throw std::invalid_argument("GroupId: quaternion family needs m >= 3");
  }
};

struct QuatElem {
  int eps = 0;          // 0 = torus part, 1 = w-coset
  std::int64_t k = 0;   // exponent of xi, reduced mod torus_modulus

  bool operator==(const QuatElem&) const = default;
  auto operator<=>(const QuatElem&) const = default;
};

inline QuatElem identity_elem() { return {0, 0}; }

bool is_valid(const GroupId& g, const QuatElem& a);
void check_elem(const GroupId& g, const QuatElem& a);

QuatElem element_product(const GroupId& g, const QuatElem& a, const QuatElem& b);
QuatElem element_inverse(const GroupId& g, const QuatElem& a);
QuatElem commutator(const GroupId& g, const QuatElem& a, const QuatElem& b);

// -I for quaternion groups, i.e. (0, 2^{m-2}).
QuatElem minus_identity(const GroupId& g);

// The 2-to-1 quotient Q_{2^m} -> D_{2^{m-1}} killing {±I}.
QuatElem project_to_dihedral(const GroupId& g, const QuatElem& a);

// All 2^m elements in a fixed deterministic order: torus part first by
// increasing k, then the w-coset by increasing k.
std::vector<QuatElem> all_elements(const GroupId& g);

// Index of an element in the all_elements order, and its inverse map.
std::int64_t elem_index(const GroupId& g, const QuatElem& a);
QuatElem elem_at(const GroupId& g, std::int64_t index);

// ASCII forms: elements as "e:k", groups as "Q2^m" / "C2^m" / "D2^m".
std::string to_string(const QuatElem& a);
std::string to_string(const GroupId& g);
QuatElem parse_elem(const std::string& text);
GroupId parse_group(const std::string& text);

}  // namespace nilhom
