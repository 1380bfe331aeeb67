#include "nilhom/quat_group.hpp"

#include <charconv>

namespace nilhom {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

bool is_valid(const GroupId& g, const QuatElem& a) {
  if (a.eps != 0 && a.eps != 1) return false;
  if (a.eps == 1 && !g.has_w()) return false;
  return a.k >= 0 && a.k < g.torus_modulus();
}

void check_elem(const GroupId& g, const QuatElem& a) {
  if (!is_valid(g, a))
    throw std::invalid_argument("element " + to_string(a) + " not valid for " +
                                to_string(g));
}

QuatElem element_product(const GroupId& g, const QuatElem& a, const QuatElem& b) {
  check_elem(g, a);
  check_elem(g, b);
  const std::int64_t n = g.torus_modulus();
  // w^ea xi^ka * w^eb xi^kb = w^{ea+eb} xi^{(-1)^eb ka + kb}, with w^2 = -I
  // in the quaternion family and w^2 = 1 in the dihedral one.
  std::int64_t k = mod((b.eps ? -a.k : a.k) + b.k, n);
  int eps = a.eps ^ b.eps;
  if (a.eps && b.eps && g.family == Family::Quaternion)
    k = mod(k + n / 2, n);  // w^2 = xi^{2^{m-2}}
  return {eps, k};
}

QuatElem element_inverse(const GroupId& g, const QuatElem& a) {
  check_elem(g, a);
  const std::int64_t n = g.torus_modulus();
  if (a.eps == 0) return {0, mod(-a.k, n)};
  if (g.family == Family::Quaternion) return {1, mod(a.k - n / 2, n)};
  return a;  // dihedral reflections are involutions
}

QuatElem commutator(const GroupId& g, const QuatElem& a, const QuatElem& b) {
  QuatElem ab = element_product(g, a, b);
  QuatElem ai = element_inverse(g, a);
  QuatElem bi = element_inverse(g, b);
  return element_product(g, element_product(g, ab, ai), bi);
}

QuatElem minus_identity(const GroupId& g) {
  if (g.family != Family::Quaternion)
    throw std::invalid_argument("-I only lives in the quaternion family");
  return {0, g.torus_modulus() / 2};
}

QuatElem project_to_dihedral(const GroupId& g, const QuatElem& a) {
  if (g.family != Family::Quaternion)
    throw std::invalid_argument("project_to_dihedral needs a quaternion ambient");
  check_elem(g, a);
  return {a.eps, a.k % (g.torus_modulus() / 2)};
}

std::vector<QuatElem> all_elements(const GroupId& g) {
  g.check_valid();
  std::vector<QuatElem> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  const std::int64_t n = g.torus_modulus();
  for (std::int64_t k = 0; k < n; ++k) out.push_back({0, k});
  if (g.has_w())
    for (std::int64_t k = 0; k < n; ++k) out.push_back({1, k});
  return out;
}

std::int64_t elem_index(const GroupId& g, const QuatElem& a) {
  check_elem(g, a);
  return a.eps * g.torus_modulus() + a.k;
}

QuatElem elem_at(const GroupId& g, std::int64_t index) {
  const std::int64_t n = g.torus_modulus();
  if (index < 0 || index >= g.order())
    throw std::out_of_range("element index out of range");
  return {static_cast<int>(index / n), index % n};
}

std::string to_string(const QuatElem& a) {
  return std::to_string(a.eps) + ":" + std::to_string(a.k);
}

std::string to_string(const GroupId& g) {
  const char* fam = g.family == Family::Quaternion ? "Q"
                    : g.family == Family::Cyclic   ? "C"
                                                   : "D";
  return std::string(fam) + "2^" + std::to_string(g.m);
}

QuatElem parse_elem(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("element must look like \"e:k\": " + text);
  QuatElem a;
  auto parse_int = [&](const std::string& s, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw std::invalid_argument("bad integer in element: " + text);
  };
  std::int64_t eps = 0;
  parse_int(text.substr(0, colon), eps);
  if (eps != 0 && eps != 1) throw std::invalid_argument("eps must be 0 or 1");
  a.eps = static_cast<int>(eps);
  parse_int(text.substr(colon + 1), a.k);
  return a;
}

GroupId parse_group(const std::string& text) {
  if (text.size() < 4 || text.substr(1, 2) != "2^")
    throw std::invalid_argument("group must look like \"Q2^m\": " + text);
  GroupId g;
  switch (text[0]) {
    case 'Q': g.family = Family::Quaternion; break;
    case 'C': g.family = Family::Cyclic; break;
    case 'D': g.family = Family::Dihedral; break;
    default: throw std::invalid_argument("unknown group family: " + text);
  }
  std::string ms = text.substr(3);
  auto [ptr, ec] = std::from_chars(ms.data(), ms.data() + ms.size(), g.m);
  if (ec != std::errc{} || ptr != ms.data() + ms.size())
    throw std::invalid_argument("bad exponent in group name: " + text);
  g.check_valid();
  return g;
}

}  // namespace nilhom
