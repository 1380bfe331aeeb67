// Exact arithmetic in the SU(2) subset T ∪ wT via rational angles, and in
// the binary octahedral group via unit quaternions over Q(sqrt 2).
//
// A CircleElem (wflag, theta) denotes w^wflag * diag(e^{2πiθ}, e^{-2πiθ}).
// All arithmetic is exact; there is no floating point anywhere.

#pragma once

#include <boost/rational.hpp>

#include <string>
#include <vector>

#include "nilhom/quat_group.hpp"

namespace nilhom {

using Rat = boost::rational<long long>;

// Reduce to the fundamental domain [0, 1).
Rat angle_mod1(Rat theta);

struct CircleElem {
  int wflag = 0;
  Rat theta = Rat(0);  // stored reduced, in [0,1)

  bool operator==(const CircleElem&) const = default;
};

inline CircleElem circle_identity() { return {0, Rat(0)}; }

CircleElem circle_product(const CircleElem& a, const CircleElem& b);
CircleElem circle_inverse(const CircleElem& a);
CircleElem circle_commutator(const CircleElem& a, const CircleElem& b);
// (by) x (by)^{-1}
CircleElem circle_conjugate(const CircleElem& x, const CircleElem& by);

// Injective homomorphism Q_{2^m} -> T ∪ wT, (eps,k) |-> (eps, k/2^{m-1}).
CircleElem embed_quaternion_group(const GroupId& g, const QuatElem& a);

// Partial inverse of the embedding; throws if the angle does not lie on the
// 2^{m-1} torsion lattice of g.
QuatElem circle_to_quat(const GroupId& g, const CircleElem& c);

std::string to_string(const CircleElem& c);  // "w^e * angle p/q"

// ---- Q(sqrt 2) and quaternions over it --------------------------------

// p + q*sqrt(2) with rational p, q.
struct Sqrt2 {
  Rat p = Rat(0);
  Rat q = Rat(0);

  bool operator==(const Sqrt2&) const = default;
};

Sqrt2 operator+(const Sqrt2& a, const Sqrt2& b);
Sqrt2 operator-(const Sqrt2& a, const Sqrt2& b);
Sqrt2 operator*(const Sqrt2& a, const Sqrt2& b);
Sqrt2 operator-(const Sqrt2& a);

// Unit quaternion a + bi + cj + dk over Q(sqrt 2).  Corresponds to the
// SU(2) matrix [[a+bi, c+di], [-c+di, a-bi]].
struct ExtQuaternion {
  Sqrt2 a, b, c, d;

  bool operator==(const ExtQuaternion&) const = default;
};

ExtQuaternion quat_mul(const ExtQuaternion& x, const ExtQuaternion& y);
ExtQuaternion quat_conjugate(const ExtQuaternion& x);  // also the inverse for units
Sqrt2 quat_norm(const ExtQuaternion& x);
bool quat_is_unit(const ExtQuaternion& x);
ExtQuaternion quat_neg(const ExtQuaternion& x);

std::string to_string(const ExtQuaternion& x);  // four "(p,q)" pairs

// Quaternion form of elements of Q_8 / Q_16 (angles on the 1/8 lattice).
ExtQuaternion quat_from_group(const GroupId& g, const QuatElem& a);
// Inverse map; throws if x is not in the image of Q_{2^m}.
QuatElem quat_to_group(const GroupId& g, const ExtQuaternion& x);

// The extra normalizer generator (1/2)(1+i-j+k), i.e. the matrix
// (1/2) [[1+i, -1+i], [1+i, 1-i]] of the normalizer lemma.
ExtQuaternion octahedral_extra_generator();

// Closure of {xi_8, w, extra generator}; exactly 48 unit quaternions.
// Throws if the closure overruns that bound (arithmetic bug guard).
std::vector<ExtQuaternion> binary_octahedral();

// True iff g s g^{-1} ∈ sub for every s in sub (sub closed under product).
bool normalizes(const ExtQuaternion& g, const std::vector<ExtQuaternion>& sub);

}  // namespace nilhom
