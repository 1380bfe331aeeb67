#include "nilhom/spectral.hpp"

#include <stdexcept>

#include "json.hpp"

namespace nilhom {

void ExtensionDatum::check_valid() const {
  ring.check_valid();
  if (k.is_zero() || !poly_homogeneous(ring, k) || poly_degree(ring, k) != 2)
    throw std::invalid_argument("ExtensionDatum: k must be homogeneous of degree 2");
  if (sq1_k && !sq1_k->is_zero() &&
      (!poly_homogeneous(ring, *sq1_k) || poly_degree(ring, *sq1_k) != 3))
    throw std::invalid_argument("ExtensionDatum: sq1_k must be homogeneous of degree 3");
}

ExtensionDatum extension_from_file(const IdealFile& f) {
  ExtensionDatum ext;
  ext.ring = f.ring;
  ext.base_ideal = f.gens;
  auto it = f.named.find("k");
  if (it == f.named.end())
    throw std::invalid_argument("extension file needs a 'k:' line");
  ext.k = it->second;
  if (auto s = f.named.find("sq1k"); s != f.named.end()) ext.sq1_k = s->second;
  ext.check_valid();
  return ext;
}

BinaryPoly sq1(const GradedRing& r, const BinaryPoly& p,
               const std::map<int, BinaryPoly>& table) {
  MonomialOrder ord{&r, -1};
  BinaryPoly out;
  for (const auto& m : p.terms) {
    // Leibniz: sum over variables with odd exponent
    for (int v = 0; v < r.nvars(); ++v) {
      if (m[static_cast<std::size_t>(v)] % 2 == 0) continue;
      Monomial rest = m;
      --rest[static_cast<std::size_t>(v)];
      BinaryPoly sv;
      if (r.degrees[static_cast<std::size_t>(v)] == 1) {
        Monomial sq = monomial_one(r);
        sq[static_cast<std::size_t>(v)] = 2;
        sv.terms.push_back(std::move(sq));
      } else {
        auto it = table.find(v);
        if (it == table.end())
          throw std::invalid_argument("sq1: no table entry for generator '" +
                                      r.names[static_cast<std::size_t>(v)] + "'");
        sv = it->second;
      }
      out = poly_add(out, poly_mul_monomial(sv, rest, ord), ord);
    }
  }
  return poly_reorder(out, ord);
}

namespace {

HilbertFunction annihilator_column_dims(const GradedRing& r,
                                        const std::vector<BinaryPoly>& ambient,
                                        const std::vector<BinaryPoly>& ann, int max_degree) {
  HilbertFunction dims;
  dims.dims.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  if (ann.empty()) return dims;
  HilbertFunction with = hilbert_function(r, ambient, max_degree);
  std::vector<BinaryPoly> sum = ambient;
  sum.insert(sum.end(), ann.begin(), ann.end());
  HilbertFunction without = hilbert_function(r, sum, max_degree);
  for (std::size_t d = 0; d < dims.dims.size(); ++d)
    dims.dims[d] = with.dims[d] - without.dims[d];
  return dims;
}

}  // namespace

HilbertFunction page_poincare_series(const GradedRing& r, const PageReport& rep,
                                     int max_degree) {
  HilbertFunction q = hilbert_function(r, rep.quotient_ideal, max_degree);
  HilbertFunction a = annihilator_column_dims(r, rep.ann_ambient, rep.annihilator, max_degree);
  HilbertFunction total;
  total.dims.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int d = 0; d <= max_degree; ++d)
    for (int e = 0; e <= d; ++e) {
      if (e % rep.u_period == 0)
        total.dims[static_cast<std::size_t>(d)] += q.dims[static_cast<std::size_t>(d - e)];
      else if (e % rep.u_period == rep.ann_shift)
        total.dims[static_cast<std::size_t>(d)] += a.dims[static_cast<std::size_t>(d - e)];
    }
  return total;
}

PageReport e3_page(const ExtensionDatum& ext, int max_degree) {
  ext.check_valid();
  PageReport rep;
  rep.page = 3;
  rep.u_period = 2;
  rep.ann_shift = 1;
  rep.quotient_ideal = ext.base_ideal;
  rep.quotient_ideal.push_back(ext.k);
  rep.annihilator = colon_ideal(ext.ring, ext.base_ideal, ext.k);
  rep.ann_ambient = ext.base_ideal;
  rep.poincare = page_poincare_series(ext.ring, rep, max_degree);
  return rep;
}

PageReport e4_page(const ExtensionDatum& ext, int max_degree,
                   const std::optional<BinaryPoly>& d5_candidate) {
  ext.check_valid();
  if (!ext.sq1_k)
    throw std::invalid_argument("e4_page: sq1_k is required");
  if (!colon_ideal(ext.ring, ext.base_ideal, ext.k).empty())
    throw std::invalid_argument(
        "e4_page: nonzero E3 annihilator; this case is not covered");

  std::vector<BinaryPoly> mod_k = ext.base_ideal;
  mod_k.push_back(ext.k);
  PageReport rep;
  rep.page = 4;
  rep.ring_structure_authoritative = false;  // candidate structure only
  if (ext.sq1_k->is_zero()) {
    // no new relations: the E3 page survives unchanged
    rep.u_period = 2;
    rep.ann_shift = 1;
    rep.quotient_ideal = mod_k;
    rep.annihilator = {};
    rep.ann_ambient = ext.base_ideal;
  } else {
    rep.u_period = 4;
    rep.ann_shift = 2;
    rep.quotient_ideal = mod_k;
    rep.quotient_ideal.push_back(*ext.sq1_k);
    rep.annihilator = colon_ideal(ext.ring, mod_k, *ext.sq1_k);
    rep.ann_ambient = mod_k;
  }
  if (d5_candidate) {
    GroebnerBasis gbk = groebner_basis(ext.ring, mod_k);
    rep.d5_candidate_vanishes = normal_form(ext.ring, *d5_candidate, gbk).is_zero();
  }
  rep.poincare = page_poincare_series(ext.ring, rep, max_degree);
  return rep;
}

Presentation bcom_presentation(int n) {
  if (n < 3) throw std::invalid_argument("bcom_presentation: n >= 3");
  Presentation p;
  if (n == 3) {
    p.ring = GradedRing{{"y1", "y2", "y3", "z"}, {1, 1, 1, 2}};
    p.ideal = {parse_polynomial(p.ring, "y1*y2"), parse_polynomial(p.ring, "y1*y3"),
               parse_polynomial(p.ring, "y2*y3"),
               parse_polynomial(p.ring, "y1^2 + y2^2 + y3^2")};
    return p;
  }
  const int m = 1 << (n - 2);
  p.ring.names = {"x1", "x2"};
  p.ring.degrees = {1, 2};
  for (int i = 1; i <= m; ++i) {
    p.ring.names.push_back("y" + std::to_string(i));
    p.ring.degrees.push_back(1);
  }
  p.ring.names.push_back("z");
  p.ring.degrees.push_back(2);
  p.ideal.push_back(parse_polynomial(p.ring, "x1^2"));
  std::string sum;
  for (int i = 1; i <= m; ++i) {
    std::string yi = "y" + std::to_string(i);
    p.ideal.push_back(parse_polynomial(p.ring, "x1*" + yi));
    p.ideal.push_back(parse_polynomial(p.ring, "x2*" + yi));
    for (int j = i + 1; j <= m; ++j)
      p.ideal.push_back(parse_polynomial(p.ring, yi + "*y" + std::to_string(j)));
    sum += (sum.empty() ? "" : " + ") + yi + "^2";
  }
  p.ideal.push_back(parse_polynomial(p.ring, "x2 + " + sum));
  return p;
}

ExtensionDatum bcom_extension(int n) {
  if (n < 4) throw std::invalid_argument("bcom_extension: n >= 4");
  Presentation p = bcom_presentation(n);
  ExtensionDatum ext;
  // base = presentation without the central column z and without the
  // transgression relation x2 + sum yi^2, which becomes k
  ext.ring.names.assign(p.ring.names.begin(), p.ring.names.end() - 1);
  ext.ring.degrees.assign(p.ring.degrees.begin(), p.ring.degrees.end() - 1);
  for (const auto& g : p.ideal) {
    BinaryPoly cut;
    for (auto t : g.terms) {
      if (t.back() != 0) throw std::logic_error("bcom relations must avoid z");
      t.pop_back();
      cut.terms.push_back(std::move(t));
    }
    cut = poly_reorder(cut, MonomialOrder{&ext.ring, -1});
    ext.base_ideal.push_back(std::move(cut));
  }
  ext.k = ext.base_ideal.back();  // x2 + sum yi^2
  ext.base_ideal.pop_back();
  ext.sq1_k = poly_zero();  // expressible purely in x2: Sq1 vanishes
  ext.check_valid();
  return ext;
}

ExtensionDatum b3q16_datum() {
  ExtensionDatum ext;
  ext.ring = GradedRing{{"y1", "y2", "y3", "b1", "b2", "z"}, {1, 1, 1, 2, 2, 2}};
  for (const char* g : {"y1*y2", "y1*y3", "y2*y3", "y3^2", "y2*b1", "y3*b1", "y1*b2",
                        "y3*b2", "b1*b2", "b1^2 + y1^2*z", "b2^2 + y2^2*z"})
    ext.base_ideal.push_back(parse_polynomial(ext.ring, g));
  ext.k = parse_polynomial(ext.ring, "z + b1 + y1^2 + b2 + y2^2");
  ext.sq1_k = parse_polynomial(ext.ring, "y1*z + y1*b1 + y2*z + y2*b2");
  ext.check_valid();
  return ext;
}

BinaryPoly b3q16_d5_candidate() {
  GradedRing r{{"y1", "y2", "y3", "b1", "b2", "z"}, {1, 1, 1, 2, 2, 2}};
  return parse_polynomial(r, "y1*z^2 + y1^3*b1 + y2*z^2 + y2^3*b2");
}

std::string to_json(const GradedRing& r, const PageReport& rep) {
  nlohmann::json j;
  j["page"] = rep.page;
  j["u_period"] = rep.u_period;
  std::vector<std::string> q, a;
  for (const auto& g : rep.quotient_ideal) q.push_back(to_string(r, g));
  for (const auto& g : rep.annihilator) a.push_back(to_string(r, g));
  j["quotient"] = q;
  j["annihilator"] = a;
  j["poincare"] = rep.poincare.dims;
  j["ring_structure_authoritative"] = rep.ring_structure_authoritative;
  if (rep.d5_candidate_vanishes) j["d5_candidate_vanishes"] = *rep.d5_candidate_vanishes;
  return j.dump();
}

}  // namespace nilhom
