#include "doctest.h"

#include <algorithm>

#include "nilhom/groebner.hpp"
#include "oracles.hpp"

using namespace nilhom;

namespace {

const GradedRing kA{{"y1", "y2", "y3", "b1", "b2", "z"}, {1, 1, 1, 2, 2, 2}};

std::vector<BinaryPoly> parse_all(const GradedRing& r, const std::vector<std::string>& texts) {
  std::vector<BinaryPoly> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(r, t));
  return out;
}

// the 11 relations presenting H*(B(Gamma/mu_2); F2)
std::vector<BinaryPoly> ideal_a() {
  return parse_all(kA, {"y1*y2", "y1*y3", "y2*y3", "y3^2", "y2*b1", "y3*b1", "y1*b2",
                        "y3*b2", "b1*b2", "b1^2 + y1^2*z", "b2^2 + y2^2*z"});
}

BinaryPoly k_poly() { return parse_polynomial(kA, "z + b1 + y1^2 + b2 + y2^2"); }

}  // namespace

TEST_CASE("small Groebner bases") {
  GradedRing rx{{"x"}, {1}};
  auto gbx = groebner_basis(rx, {parse_polynomial(rx, "x")});
  REQUIRE(gbx.gens.size() == 1);
  CHECK(to_string(rx, gbx.gens[0]) == "x");

  GradedRing r2{{"y1", "y2"}, {1, 1}};
  auto gb = groebner_basis(r2, parse_all(r2, {"y1 + y2", "y1*y2"}));
  REQUIRE(gb.gens.size() == 2);
  CHECK(gb.gens[0] == parse_polynomial(r2, "y1 + y2"));
  CHECK(gb.gens[1] == parse_polynomial(r2, "y2^2"));
}

TEST_CASE("GB of the extension-base ideal") {
  auto gens = ideal_a();
  auto gb = groebner_basis(kA, gens);
  for (const auto& g : gens) CHECK(normal_form(kA, g, gb).is_zero());
  for (const auto& g : gb.gens) CHECK(poly_homogeneous(kA, g));
  // reduced: no term divisible by another generator's leading term
  for (std::size_t i = 0; i < gb.gens.size(); ++i)
    for (std::size_t j = 0; j < gb.gens.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb.gens[i].terms)
        CHECK(!monomial_divides(gb.gens[j].leading(), t));
    }
  // idempotence
  auto gb2 = groebner_basis(kA, gb.gens);
  CHECK(gb2.gens == gb.gens);

  CHECK(normal_form(kA, poly_one(kA), gb) == poly_one(kA));
  CHECK(normal_form(kA, parse_polynomial(kA, "y1*y2"), gb).is_zero());
}

TEST_CASE("ideal membership agrees with the linear-algebra oracle") {
  auto gens = ideal_a();
  auto gb = groebner_basis(kA, gens);
  for (int d = 1; d <= 8; ++d)
    for (const auto& m : oracle::monomials_of_degree(kA, d)) {
      BinaryPoly p{{m}};
      CHECK(ideal_contains(kA, gb, p) == oracle::ideal_member(kA, gens, p));
    }
}

TEST_CASE("exact division") {
  MonomialOrder ord{&kA, -1};
  auto f = parse_polynomial(kA, "y1 + y2");
  auto q = parse_polynomial(kA, "y1*z + b1");
  CHECK(poly_exact_div(kA, poly_mul(f, q, ord), f, ord) == q);
  CHECK_THROWS_AS(poly_exact_div(kA, parse_polynomial(kA, "y1"), f, ord),
                  std::invalid_argument);
}

TEST_CASE("colon ideals: the three session facts") {
  auto gens = ideal_a();
  // (I : k) = 0 in the quotient — k is not a zero divisor
  CHECK(colon_ideal(kA, gens, k_poly()).empty());

  // ((I + k) : y1z + y1b1 + y2z + y2b2) = (y3)
  auto with_k = gens;
  with_k.push_back(k_poly());
  auto s = parse_polynomial(kA, "y1*z + y1*b1 + y2*z + y2*b2");
  auto ann = colon_ideal(kA, with_k, s);
  REQUIRE(ann.size() == 1);
  CHECK(ann[0] == parse_polynomial(kA, "y3"));

  // inclusion: the generator annihilates
  auto gbk = groebner_basis(kA, with_k);
  MonomialOrder ord{&kA, -1};
  CHECK(normal_form(kA, poly_mul(ann[0], s, ord), gbk).is_zero());
  // completeness: degreewise kernel elements all lie in (I + k + y3)
  auto with_ann = with_k;
  with_ann.push_back(ann[0]);
  auto gba = groebner_basis(kA, with_ann);
  for (int d = 0; d <= 8; ++d)
    for (const auto& g : oracle::annihilator_space(kA, with_k, s, d))
      CHECK(normal_form(kA, g, gba).is_zero());
  // same completeness check for the empty (I : k) answer
  auto gbi = groebner_basis(kA, gens);
  for (int d = 0; d <= 8; ++d)
    for (const auto& g : oracle::annihilator_space(kA, gens, k_poly(), d))
      CHECK(normal_form(kA, g, gbi).is_zero());

  // the transgression candidate dies in A/(k)
  CHECK(normal_form(kA, parse_polynomial(kA, "y1*z^2 + y1^3*b1 + y2*z^2 + y2^3*b2"), gbk)
            .is_zero());

  // trivial cases
  CHECK(colon_ideal(kA, {}, poly_one(kA)).empty());
  CHECK_THROWS_AS(colon_ideal(kA, gens, poly_zero()), std::invalid_argument);
}

TEST_CASE("Hilbert functions") {
  GradedRing rx{{"x"}, {1}};
  CHECK(hilbert_function(rx, {parse_polynomial(rx, "x^2")}, 4).dims ==
        std::vector<long long>{1, 1, 0, 0, 0});

  GradedRing rq8{{"y1", "y2", "y3", "z"}, {1, 1, 1, 2}};
  auto gens = parse_all(rq8, {"y1*y2", "y1*y3", "y2*y3", "y1^2 + y2^2 + y3^2"});
  auto h = hilbert_function(rq8, gens, 10);
  CHECK(h.dims[0] == 1);
  for (int d = 1; d <= 10; ++d) CHECK(h.dims[static_cast<std::size_t>(d)] == 3);

  // weighted ring A: [1, 3, 5, ...] and full agreement with the oracle
  auto ha = hilbert_function(kA, ideal_a(), 8);
  CHECK(ha.dims[0] == 1);
  CHECK(ha.dims[1] == 3);
  CHECK(ha.dims[2] == 5);
  for (int d = 0; d <= 8; ++d)
    CHECK(ha.dims[static_cast<std::size_t>(d)] == oracle::quotient_dim(kA, ideal_a(), d));

  // unit ideal: zero ring
  CHECK(hilbert_function(rx, {poly_one(rx)}, 3).dims ==
        std::vector<long long>{0, 0, 0, 0});
}

TEST_CASE("ideal files") {
  std::string text =
      "# extension base ring\n"
      "ring: y1:1, y2:1, y3:1, b1:2, b2:2, z:2\n"
      "y1*y2\n"
      "b1^2 + y1^2*z  # relation\n"
      "k: z + b1 + y1^2 + b2 + y2^2\n";
  auto f = parse_ideal_file(text);
  CHECK(f.ring.names == kA.names);
  CHECK(f.ring.degrees == kA.degrees);
  REQUIRE(f.gens.size() == 2);
  CHECK(f.gens[1] == parse_polynomial(kA, "b1^2 + y1^2*z"));
  REQUIRE(f.named.count("k") == 1);
  CHECK(f.named.at("k") == k_poly());
  // round trip
  auto again = parse_ideal_file(to_string(f.ring, f));
  CHECK(again.gens == f.gens);
  CHECK(again.named == f.named);

  CHECK_THROWS_AS(parse_ideal_file("y1*y2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_file("ring: x:1\nq\n"), std::invalid_argument);
  CHECK_THROWS_AS(load_ideal_file("/nonexistent/file"), std::invalid_argument);
}
