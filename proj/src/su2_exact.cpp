#include "nilhom/su2_exact.hpp"

#include <set>
#include <tuple>

namespace nilhom {

Rat angle_mod1(Rat theta) {
  long long whole = theta.numerator() / theta.denominator();
  theta -= Rat(whole);
  if (theta < Rat(0)) theta += Rat(1);
  return theta;
}

CircleElem circle_product(const CircleElem& a, const CircleElem& b) {
  // w^e1 x(t1) * w^e2 x(t2) = w^{e1+e2} x((-1)^{e2} t1 + t2), and the w^2
  // produced when e1 = e2 = 1 is -I, an extra half turn.
  Rat theta = (b.wflag ? -a.theta : a.theta) + b.theta;
  if (a.wflag && b.wflag) theta += Rat(1, 2);
  return {a.wflag ^ b.wflag, angle_mod1(theta)};
}

CircleElem circle_inverse(const CircleElem& a) {
  if (a.wflag == 0) return {0, angle_mod1(-a.theta)};
  return {1, angle_mod1(a.theta - Rat(1, 2))};
}

CircleElem circle_commutator(const CircleElem& a, const CircleElem& b) {
  CircleElem r = circle_product(circle_product(a, b),
                                circle_product(circle_inverse(a), circle_inverse(b)));
  // Products of two w-coset factors always cancel the w part.
  return {r.wflag, r.theta};
}

CircleElem circle_conjugate(const CircleElem& x, const CircleElem& by) {
  return circle_product(circle_product(by, x), circle_inverse(by));
}

CircleElem embed_quaternion_group(const GroupId& g, const QuatElem& a) {
  if (g.family != Family::Quaternion)
    throw std::invalid_argument("embed_quaternion_group needs a quaternion group");
  check_elem(g, a);
  return {a.eps, Rat(a.k, g.torus_modulus())};
}

QuatElem circle_to_quat(const GroupId& g, const CircleElem& c) {
  const std::int64_t n = g.torus_modulus();
  Rat scaled = c.theta * Rat(n);
  if (scaled.denominator() != 1)
    throw std::invalid_argument("angle " + to_string(c) + " is not on the " +
                                to_string(g) + " lattice");
  QuatElem a{c.wflag, scaled.numerator()};
  check_elem(g, a);
  return a;
}

std::string to_string(const CircleElem& c) {
  return "w^" + std::to_string(c.wflag) + " * angle " +
         std::to_string(c.theta.numerator()) + "/" +
         std::to_string(c.theta.denominator());
}

// ---- Q(sqrt 2) --------------------------------------------------------

Sqrt2 operator+(const Sqrt2& a, const Sqrt2& b) { return {a.p + b.p, a.q + b.q}; }
Sqrt2 operator-(const Sqrt2& a, const Sqrt2& b) { return {a.p - b.p, a.q - b.q}; }
Sqrt2 operator-(const Sqrt2& a) { return {-a.p, -a.q}; }

Sqrt2 operator*(const Sqrt2& a, const Sqrt2& b) {
  // (p + q s)(r + t s) = (pr + 2qt) + (pt + qr) s  with s = sqrt 2
  return {a.p * b.p + Rat(2) * a.q * b.q, a.p * b.q + a.q * b.p};
}

ExtQuaternion quat_mul(const ExtQuaternion& x, const ExtQuaternion& y) {
  return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
          x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
          x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
          x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

ExtQuaternion quat_conjugate(const ExtQuaternion& x) {
  return {x.a, -x.b, -x.c, -x.d};
}

Sqrt2 quat_norm(const ExtQuaternion& x) {
  return x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d;
}

bool quat_is_unit(const ExtQuaternion& x) {
  return quat_norm(x) == Sqrt2{Rat(1), Rat(0)};
}

ExtQuaternion quat_neg(const ExtQuaternion& x) {
  return {-x.a, -x.b, -x.c, -x.d};
}

namespace {

std::string to_string(const Sqrt2& v) {
  auto rs = [](const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
  };
  return "(" + rs(v.p) + "," + rs(v.q) + ")";
}

struct QuatLess {
  bool operator()(const ExtQuaternion& x, const ExtQuaternion& y) const {
    auto key = [](const ExtQuaternion& q) {
      return std::make_tuple(q.a.p, q.a.q, q.b.p, q.b.q, q.c.p, q.c.q, q.d.p,
                             q.d.q);
    };
    return key(x) < key(y);
  }
};

// cos/sin of 2*pi*t/8 for t = 0..7, exactly in Q(sqrt 2).
const Sqrt2 kCos8[8] = {{Rat(1), Rat(0)},  {Rat(0), Rat(1, 2)},
                        {Rat(0), Rat(0)},  {Rat(0), Rat(-1, 2)},
                        {Rat(-1), Rat(0)}, {Rat(0), Rat(-1, 2)},
                        {Rat(0), Rat(0)},  {Rat(0), Rat(1, 2)}};
const Sqrt2 kSin8[8] = {{Rat(0), Rat(0)},  {Rat(0), Rat(1, 2)},
                        {Rat(1), Rat(0)},  {Rat(0), Rat(1, 2)},
                        {Rat(0), Rat(0)},  {Rat(0), Rat(-1, 2)},
                        {Rat(-1), Rat(0)}, {Rat(0), Rat(-1, 2)}};

}  // namespace

std::string to_string(const ExtQuaternion& x) {
  return to_string(x.a) + " " + to_string(x.b) + " " + to_string(x.c) + " " +
         to_string(x.d);
}

ExtQuaternion quat_from_group(const GroupId& g, const QuatElem& a) {
  if (g.family != Family::Quaternion)
    throw std::invalid_argument("quat_from_group needs a quaternion group");
  check_elem(g, a);
  const std::int64_t n = g.torus_modulus();
  if (8 % n != 0)
    throw std::invalid_argument("Q(sqrt 2) only carries Q_8 and Q_16 exactly");
  const int t = static_cast<int>(a.k * (8 / n)) % 8;
  const Sqrt2 zero{Rat(0), Rat(0)};
  if (a.eps == 0) return {kCos8[t], kSin8[t], zero, zero};
  // w xi^k  ->  -cos(theta) j + sin(theta) k   (w itself is -j)
  return {zero, zero, -kCos8[t], kSin8[t]};
}

QuatElem quat_to_group(const GroupId& g, const ExtQuaternion& x) {
  for (const QuatElem& a : all_elements(g))
    if (quat_from_group(g, a) == x) return a;
  throw std::invalid_argument("quaternion " + to_string(x) + " is not in " +
                              to_string(g));
}

ExtQuaternion octahedral_extra_generator() {
  const Rat h(1, 2);
  return {{h, Rat(0)}, {h, Rat(0)}, {-h, Rat(0)}, {h, Rat(0)}};
}

std::vector<ExtQuaternion> binary_octahedral() {
  const GroupId q16{Family::Quaternion, 4};
  std::set<ExtQuaternion, QuatLess> closure;
  std::vector<ExtQuaternion> frontier = {
      quat_from_group(q16, {0, 1}),  // xi_8
      quat_from_group(q16, {1, 0}),  // w
      octahedral_extra_generator()};
  for (const auto& x : frontier) closure.insert(x);
  closure.insert(ExtQuaternion{{Rat(1), Rat(0)}, {}, {}, {}});
  while (!frontier.empty()) {
    std::vector<ExtQuaternion> next;
    for (const auto& x : frontier)
      for (const auto& y : std::vector<ExtQuaternion>(closure.begin(), closure.end())) {
        for (const auto& z : {quat_mul(x, y), quat_mul(y, x)}) {
          if (closure.insert(z).second) next.push_back(z);
        }
        if (closure.size() > 48)
          throw std::logic_error("binary octahedral closure exceeded 48 elements");
      }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

bool normalizes(const ExtQuaternion& g, const std::vector<ExtQuaternion>& sub) {
  const ExtQuaternion gi = quat_conjugate(g);
  for (const auto& s : sub) {
    ExtQuaternion c = quat_mul(quat_mul(g, s), gi);
    bool found = false;
    for (const auto& t : sub)
      if (t == c) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace nilhom
