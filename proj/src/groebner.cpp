#include "nilhom/groebner.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nilhom {

namespace {

// lt(h) -> reduce with first basis element whose leading term divides it;
// irreducible leading terms move to the remainder.
BinaryPoly reduce_full(const BinaryPoly& p, const std::vector<BinaryPoly>& basis,
                       const MonomialOrder& ord) {
  BinaryPoly rem, h = p;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (monomial_divides(g.leading(), h.leading())) {
        h = poly_add(h, poly_mul_monomial(g, monomial_div(h.leading(), g.leading()), ord), ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.terms.push_back(h.leading());
      h.terms.erase(h.terms.begin());
    }
  }
  return rem;
}

std::vector<BinaryPoly> interreduce(std::vector<BinaryPoly> basis, const MonomialOrder& ord) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      BinaryPoly g = basis[i];
      basis[i] = poly_zero();  // reduce against all the others
      BinaryPoly nf = reduce_full(g, basis, ord);
      basis[i] = nf;
      if (nf != g) changed = true;
    }
    std::erase_if(basis, [](const BinaryPoly& g) { return g.is_zero(); });
  }
  std::sort(basis.begin(), basis.end(), [&](const BinaryPoly& a, const BinaryPoly& b) {
    return ord.greater(b.leading(), a.leading());
  });
  return basis;
}

}  // namespace

GroebnerBasis groebner_basis(const GradedRing& r, const std::vector<BinaryPoly>& gens,
                             int elim_var) {
  MonomialOrder ord{&r, elim_var};
  std::vector<BinaryPoly> basis;
  for (const auto& g : gens) {
    BinaryPoly s = poly_reorder(g, ord);
    if (!s.is_zero()) basis.push_back(std::move(s));
  }
  // pending S-pairs ordered by (lcm weighted degree, i, j) for determinism
  std::set<std::tuple<int, std::size_t, std::size_t>> pending;
  auto queue_pairs = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      pending.insert({monomial_degree(r, monomial_lcm(basis[i].leading(), basis[upto].leading())),
                      i, upto});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) queue_pairs(j);
  while (!pending.empty()) {
    auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    const Monomial &li = basis[i].leading(), &lj = basis[j].leading();
    Monomial lcm = monomial_lcm(li, lj);
    if (lcm == monomial_mul(li, lj)) continue;  // coprime leading terms
    BinaryPoly s = poly_add(poly_mul_monomial(basis[i], monomial_div(lcm, li), ord),
                            poly_mul_monomial(basis[j], monomial_div(lcm, lj), ord), ord);
    BinaryPoly nf = reduce_full(s, basis, ord);
    if (!nf.is_zero()) {
      basis.push_back(std::move(nf));
      queue_pairs(basis.size() - 1);
    }
  }
  GroebnerBasis gb;
  gb.gens = interreduce(std::move(basis), ord);
  gb.elim_var = elim_var;
  return gb;
}

BinaryPoly normal_form(const GradedRing& r, const BinaryPoly& p, const GroebnerBasis& gb) {
  MonomialOrder ord = gb.order(r);
  return reduce_full(poly_reorder(p, ord), gb.gens, ord);
}

bool ideal_contains(const GradedRing& r, const GroebnerBasis& gb, const BinaryPoly& p) {
  return normal_form(r, p, gb).is_zero();
}

BinaryPoly poly_exact_div(const GradedRing& r, const BinaryPoly& p, const BinaryPoly& f,
                          const MonomialOrder& ord) {
  (void)r;
  if (f.is_zero()) throw std::invalid_argument("poly_exact_div: division by zero");
  BinaryPoly q, h = poly_reorder(p, ord);
  BinaryPoly fs = poly_reorder(f, ord);
  while (!h.is_zero()) {
    if (!monomial_divides(fs.leading(), h.leading()))
      throw std::invalid_argument("poly_exact_div: not an exact multiple");
    Monomial m = monomial_div(h.leading(), fs.leading());
    q.terms.push_back(m);
    h = poly_add(h, poly_mul_monomial(fs, m, ord), ord);
  }
  return poly_from_monomials(std::move(q.terms), ord);
}

std::vector<BinaryPoly> colon_ideal(const GradedRing& r, const std::vector<BinaryPoly>& ideal,
                                    const BinaryPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("colon_ideal: f must be nonzero");
  // I cap (f) = (t*I + (1+t)*f) cap P with t eliminated, then divide by f
  GradedRing ext = ring_with_extra_var(r, "@t", 1);
  const int tvar = ext.nvars() - 1;
  MonomialOrder eord{&ext, tvar};
  auto lift = [&](const BinaryPoly& p) {
    BinaryPoly out;
    for (auto t : p.terms) {
      t.push_back(0);
      out.terms.push_back(std::move(t));
    }
    return poly_reorder(out, eord);
  };
  BinaryPoly t = poly_var(ext, tvar);
  std::vector<BinaryPoly> ext_gens;
  for (const auto& g : ideal) ext_gens.push_back(poly_mul(t, lift(g), eord));
  BinaryPoly fl = lift(f);
  ext_gens.push_back(poly_add(fl, poly_mul(t, fl, eord), eord));
  GroebnerBasis egb = groebner_basis(ext, ext_gens, tvar);

  GroebnerBasis base_gb = groebner_basis(r, ideal);
  MonomialOrder ord{&r, -1};
  std::vector<BinaryPoly> out;
  for (const auto& g : egb.gens) {
    bool t_free = true;
    for (const auto& m : g.terms) t_free = t_free && m[static_cast<std::size_t>(tvar)] == 0;
    if (!t_free) continue;
    BinaryPoly drop;  // back to the base ring
    for (auto m : g.terms) {
      m.pop_back();
      drop.terms.push_back(std::move(m));
    }
    BinaryPoly q = normal_form(r, poly_exact_div(r, poly_reorder(drop, ord), f, ord), base_gb);
    if (!q.is_zero() && std::find(out.begin(), out.end(), q) == out.end())
      out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), [&](const BinaryPoly& a, const BinaryPoly& b) {
    return ord.greater(b.leading(), a.leading());
  });
  return out;
}

HilbertFunction hilbert_function(const GradedRing& r, const std::vector<BinaryPoly>& ideal,
                                 int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("hilbert_function: max_degree >= 0");
  GroebnerBasis gb = groebner_basis(r, ideal);
  HilbertFunction h;
  h.dims.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  const int n = r.nvars();
  // group leading terms by the last variable they involve
  std::vector<std::vector<Monomial>> lts_by_maxvar(static_cast<std::size_t>(n));
  for (const auto& g : gb.gens) {
    const Monomial& lt = g.leading();
    int maxvar = -1;
    for (int v = 0; v < n; ++v)
      if (lt[static_cast<std::size_t>(v)] > 0) maxvar = v;
    if (maxvar < 0) return h;  // 1 is in the ideal: the quotient is zero
    lts_by_maxvar[static_cast<std::size_t>(maxvar)].push_back(lt);
  }
  // DFS over exponents; a subtree dies as soon as the partial monomial is
  // divisible by a leading term supported on the assigned variables
  Monomial m = monomial_one(r);
  auto dfs = [&](auto&& self, int v, int deg) -> void {
    if (v == n) {
      ++h.dims[static_cast<std::size_t>(deg)];
      return;
    }
    for (int e = 0;; ++e) {
      m[static_cast<std::size_t>(v)] = e;
      int d = deg + e * r.degrees[static_cast<std::size_t>(v)];
      if (d > max_degree) break;
      bool divisible = false;
      for (const auto& lt : lts_by_maxvar[static_cast<std::size_t>(v)])
        divisible = divisible || monomial_divides(lt, m);
      if (divisible) break;  // larger exponents stay divisible
      self(self, v + 1, d);
    }
    m[static_cast<std::size_t>(v)] = 0;
  };
  dfs(dfs, 0, 0);
  return h;
}

IdealFile parse_ideal_file(const std::string& text) {
  IdealFile out;
  std::istringstream in(text);
  std::string line;
  bool have_ring = false;
  std::vector<std::pair<std::string, std::string>> poly_lines;  // (key, text)
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    auto colon = line.find(':');
    if (!have_ring) {
      if (colon == std::string::npos || line.substr(0, colon) != "ring")
        throw std::invalid_argument("ideal file must start with a 'ring:' header");
      std::istringstream vars(line.substr(colon + 1));
      std::string item;
      while (std::getline(vars, item, ',')) {
        auto sep = item.find(':');
        if (sep == std::string::npos)
          throw std::invalid_argument("ring header entries must be 'name:degree'");
        std::string name = item.substr(0, sep);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        out.ring.names.push_back(name);
        out.ring.degrees.push_back(std::stoi(item.substr(sep + 1)));
      }
      out.ring.check_valid();
      have_ring = true;
    } else if (colon != std::string::npos) {
      poly_lines.emplace_back(line.substr(0, colon), line.substr(colon + 1));
    } else {
      poly_lines.emplace_back("", line);
    }
  }
  if (!have_ring) throw std::invalid_argument("ideal file has no 'ring:' header");
  for (auto& [key, body] : poly_lines) {
    BinaryPoly p = parse_polynomial(out.ring, body);
    if (key.empty()) {
      out.gens.push_back(std::move(p));
    } else {
      key.erase(key.find_last_not_of(" \t") + 1);
      if (out.named.count(key)) throw std::invalid_argument("duplicate named polynomial: " + key);
      out.named[key] = std::move(p);
    }
  }
  return out;
}

IdealFile load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open ideal file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal_file(buf.str());
}

std::string to_string(const GradedRing& r, const IdealFile& f) {
  std::string out = "ring:";
  for (int i = 0; i < r.nvars(); ++i)
    out += std::string(i ? "," : " ") + r.names[static_cast<std::size_t>(i)] + ":" +
           std::to_string(r.degrees[static_cast<std::size_t>(i)]);
  out += "\n";
  for (const auto& g : f.gens) out += to_string(r, g) + "\n";
  for (const auto& [key, p] : f.named) out += key + ": " + to_string(r, p) + "\n";
  return out;
}

std::string to_json(const GradedRing& r, const GroebnerBasis& gb) {
  nlohmann::json j;
  j["order"] = gb.elim_var < 0 ? "grevlex" : "elim";
  std::vector<std::string> gens;
  for (const auto& g : gb.gens) gens.push_back(to_string(r, g));
  j["gens"] = gens;
  return j.dump();
}

std::string to_json(const HilbertFunction& h) {
  nlohmann::json j = h.dims;
  return j.dump();
}

}  // namespace nilhom
