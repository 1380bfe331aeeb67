#include "nilhom/f2poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace nilhom {

int GradedRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

void GradedRing::check_valid() const {
  if (names.size() != degrees.size())
    throw std::invalid_argument("GradedRing: names/degrees length mismatch");
  for (int d : degrees)
    if (d <= 0) throw std::invalid_argument("GradedRing: degrees must be positive");
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size())
    throw std::invalid_argument("GradedRing: duplicate variable name");
}

GradedRing ring_with_extra_var(const GradedRing& r, const std::string& name, int degree) {
  GradedRing out = r;
  out.names.push_back(name);
  out.degrees.push_back(degree);
  out.check_valid();
  return out;
}

int monomial_degree(const GradedRing& r, const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * r.degrees[i];
  return d;
}

Monomial monomial_one(const GradedRing& r) {
  return Monomial(static_cast<std::size_t>(r.nvars()), 0);
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial c = a;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] -= b[i];
    if (c[i] < 0) throw std::invalid_argument("monomial_div: not divisible");
  }
  return c;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(c[i], b[i]);
  return c;
}

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  if (elim_var >= 0) {
    const std::size_t e = static_cast<std::size_t>(elim_var);
    if (a[e] != b[e]) return a[e] > b[e];
  }
  int da = monomial_degree(*ring, a), db = monomial_degree(*ring, b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];  // revlex
  return false;
}

const Monomial& BinaryPoly::leading() const {
  if (terms.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms.front();
}

BinaryPoly poly_zero() { return {}; }

BinaryPoly poly_one(const GradedRing& r) { return {{monomial_one(r)}}; }

BinaryPoly poly_var(const GradedRing& r, int var) {
  Monomial m = monomial_one(r);
  m[static_cast<std::size_t>(var)] = 1;
  return {{m}};
}

BinaryPoly poly_from_monomials(std::vector<Monomial> ms, const MonomialOrder& ord) {
  std::sort(ms.begin(), ms.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  // XOR semantics: identical pairs cancel
  BinaryPoly p;
  for (std::size_t i = 0; i < ms.size();) {
    std::size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    if ((j - i) % 2) p.terms.push_back(std::move(ms[i]));
    i = j;
  }
  return p;
}

BinaryPoly poly_add(const BinaryPoly& a, const BinaryPoly& b, const MonomialOrder& ord) {
  BinaryPoly c;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    if (a.terms[i] == b.terms[j]) {
      ++i;
      ++j;
    } else if (ord.greater(a.terms[i], b.terms[j])) {
      c.terms.push_back(a.terms[i++]);
    } else {
      c.terms.push_back(b.terms[j++]);
    }
  }
  c.terms.insert(c.terms.end(), a.terms.begin() + static_cast<std::ptrdiff_t>(i), a.terms.end());
  c.terms.insert(c.terms.end(), b.terms.begin() + static_cast<std::ptrdiff_t>(j), b.terms.end());
  return c;
}

BinaryPoly poly_mul(const BinaryPoly& a, const BinaryPoly& b, const MonomialOrder& ord) {
  std::vector<Monomial> products;
  for (const auto& ma : a.terms)
    for (const auto& mb : b.terms) products.push_back(monomial_mul(ma, mb));
  return poly_from_monomials(std::move(products), ord);
}

BinaryPoly poly_mul_monomial(const BinaryPoly& a, const Monomial& m, const MonomialOrder& ord) {
  (void)ord;  // multiplying every term by one monomial preserves the order
  BinaryPoly c;
  for (const auto& t : a.terms) c.terms.push_back(monomial_mul(t, m));
  return c;
}

BinaryPoly poly_reorder(const BinaryPoly& a, const MonomialOrder& ord) {
  return poly_from_monomials(a.terms, ord);
}

bool poly_homogeneous(const GradedRing& r, const BinaryPoly& p) {
  for (const auto& t : p.terms)
    if (monomial_degree(r, t) != monomial_degree(r, p.terms.front())) return false;
  return true;
}

int poly_degree(const GradedRing& r, const BinaryPoly& p) {
  return p.is_zero() ? -1 : monomial_degree(r, p.leading());
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t pos) {
  throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
}

}  // namespace

BinaryPoly parse_polynomial(const GradedRing& r, const std::string& text) {
  std::vector<Monomial> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&]() -> long long {
    std::size_t start = i;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000'000) parse_fail("integer too large", start);
      ++i;
    }
    if (i == start) parse_fail("expected integer", start);
    return v;
  };

  skip_ws();
  if (i == text.size()) parse_fail("empty polynomial", i);
  bool more_terms = true;
  while (more_terms) {
    Monomial m = monomial_one(r);
    long long coeff = 1;
    bool more_factors = true;
    while (more_factors) {
      skip_ws();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coeff *= read_uint() % 2;
      } else if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) ||
                                     text[i] == '_' || text[i] == '@')) {
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                   text[i] == '_' || text[i] == '@'))
          ++i;
        int var = r.var_index(text.substr(start, i - start));
        if (var < 0) parse_fail("unknown variable '" + text.substr(start, i - start) + "'", start);
        long long exponent = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws();
          exponent = read_uint();
        }
        m[static_cast<std::size_t>(var)] += static_cast<int>(exponent);
      } else {
        parse_fail("expected variable or integer", i);
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
      } else {
        more_factors = false;
      }
    }
    if (coeff % 2) terms.push_back(std::move(m));
    skip_ws();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      ++i;
    } else if (i < text.size()) {
      parse_fail(std::string("unexpected character '") + text[i] + "'", i);
    } else {
      more_terms = false;
    }
  }
  return poly_from_monomials(std::move(terms), MonomialOrder{&r, -1});
}

std::string to_string(const GradedRing& r, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += r.names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const GradedRing& r, const BinaryPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms) {
    if (!out.empty()) out += " + ";
    out += to_string(r, t);
  }
  return out;
}

}  // namespace nilhom
