#include "doctest.h"

#include <set>

#include "nilhom/hom_count.hpp"

using namespace nilhom;

TEST_CASE("generating tuple counts: formula vs enumeration") {
  CHECK(gen_tuple_count_formula(2, 3) == 24);
  CHECK(gen_tuple_count_formula(1, 3) == 0);
  CHECK(gen_tuple_count_formula(2, 4) == 96);
  CHECK(gen_tuple_count_formula(3, 3) == 336);

  for (int n = 1; n <= 3; ++n)
    for (int r = 3; r <= 5; ++r)
      CHECK(gen_tuple_count_formula(n, r) == gen_tuple_count_enumerated(n, r));
}

TEST_CASE("normalizer action: 24 automorphisms of Q8 (S4 cross-check)") {
  auto perms3 = normalizer_action(3);
  REQUIRE(perms3.size() == 48);
  std::set<std::vector<int>> distinct(perms3.begin(), perms3.end());
  CHECK(distinct.size() == 24);  // Aut(Q8) = S4
  // every induced permutation is a group automorphism
  GroupId q8{Family::Quaternion, 3};
  auto elems = all_elements(q8);
  for (const auto& perm : distinct)
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        auto prod = element_product(q8, elems[i], elems[j]);
        auto mapped = element_product(q8, elems[perm[i]], elems[perm[j]]);
        CHECK(elems[perm[static_cast<std::size_t>(elem_index(q8, prod))]] == mapped);
      }

  // r >= 4: the acting group is Q_2^{r+1} with kernel {±I}
  for (int r = 4; r <= 5; ++r) {
    auto perms = normalizer_action(r);
    REQUIRE(static_cast<int>(perms.size()) == 1 << (r + 1));
    std::set<std::vector<int>> d(perms.begin(), perms.end());
    CHECK(static_cast<int>(d.size()) == 1 << r);
  }
}

TEST_CASE("conjugation orbit counts and freeness") {
  auto o = conjugation_orbit_count(2, 3);
  CHECK(o.orbits == 1);
  CHECK(o.tuples == 24);
  CHECK(o.all_orbits_free);
  CHECK(conjugation_orbit_count(2, 4).orbits == 6);
  CHECK(conjugation_orbit_count(3, 3).orbits == 14);
  for (int n = 1; n <= 3; ++n)
    for (int r = 3; r <= 5; ++r) CHECK(conjugation_orbit_count(n, r).all_orbits_free);
}

TEST_CASE("SU(2) component counts") {
  CHECK(su2_component_formula(2, 2) == 1);
  CHECK(su2_component_formula(2, 3) == 7);
  CHECK(su2_component_formula(3, 2) == 14);
  CHECK(su2_component_formula(1, 4) == 0);

  auto rep = su2_component_count(2, 3, CountMethod::Both);
  CHECK(rep.total_nonabelian == 7);
  CHECK(rep.per_r.at(2) == 1);
  CHECK(rep.per_r.at(3) == 6);
  CHECK(rep.abelian_components == 1);
  CHECK(rep.agree);

  for (int n = 1; n <= 3; ++n)
    for (int q = 2; q <= 4; ++q) {
      auto r = su2_component_count(n, q, CountMethod::Both);
      CHECK(r.agree);
      BigInt sum = 0;
      for (const auto& [cls, c] : r.per_r) sum += c;
      CHECK(sum == r.total_nonabelian);
      CHECK(r.total_nonabelian == su2_component_formula(n, q));
    }
}

TEST_CASE("SO(3) component counts and covering division") {
  auto a = so3_component_count(2, 2);
  CHECK(a.m_n == 1);
  CHECK(a.m_nq == 0);
  CHECK(a.covering_consistent);
  CHECK(so3_component_count(2, 3).m_nq == 3);
  CHECK(so3_component_count(3, 2).m_n == 7);
  for (int n = 2; n <= 4; ++n)
    for (int q = 2; q <= 4; ++q) CHECK(so3_component_count(n, q).covering_consistent);
}

TEST_CASE("U(2) component counts: formula vs sign-flip orbit enumeration") {
  auto u = u2_component_count(2, 2);
  CHECK(u.abelian == 1);
  CHECK(u.type_z2z2 == 1);
  CHECK(u.type_z2 == 0);
  u = u2_component_count(2, 3);
  CHECK(u.type_z2z2 == 1);
  CHECK(u.type_z2 == 3);
  u = u2_component_count(1, 4);
  CHECK(u.type_z2z2 == 0);
  CHECK(u.type_z2 == 0);

  for (int n = 2; n <= 3; ++n)
    for (int q = 2; q <= 3; ++q) {
      auto f = u2_component_count(n, q);
      auto e = u2_component_count_enumerated(n, q);
      CHECK(f.type_z2z2 == e.type_z2z2);
      CHECK(f.type_z2 == e.type_z2);
    }
}

TEST_CASE("U(2) stabilizers") {
  GroupId q8{Family::Quaternion, 3};
  GroupId q16{Family::Quaternion, 4};
  CHECK(u2_stabilizer(q8, {{0, 1}, {1, 0}}).order() == 4);
  CHECK(u2_stabilizer(q16, {{0, 1}, {1, 0}}).order() == 2);
  // a Q8 copy sitting inside Q16 off the standard coset
  CHECK(u2_stabilizer(q16, {{0, 2}, {1, 1}}).order() == 4);
  CHECK_THROWS_AS(u2_stabilizer(q8, {{0, 2}, {0, 1}}), std::invalid_argument);

  // exhaustive: order 4 iff the generated subgroup is a Q8 copy, else 2
  for (int q = 2; q <= 3; ++q) {
    GroupId g{Family::Quaternion, q + 1};
    auto elems = all_elements(g);
    for (int n = 2; n <= 3; ++n) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
      while (true) {
        std::vector<QuatElem> tuple;
        for (auto i : idx) tuple.push_back(elems[i]);
        Subgroup h = generated_subgroup(g, tuple);
        if (!is_abelian(h)) {
          auto stab = u2_stabilizer(g, tuple);
          CHECK(stab.order() == (h.order() == 8 ? 4u : 2u));
        }
        std::size_t pos = idx.size();
        while (pos > 0 && ++idx[pos - 1] == elems.size()) idx[--pos] = 0;
        if (pos == 0) break;
      }
    }
  }
}

TEST_CASE("stable summand counts") {
  CHECK(su2_summand_formula(2, 2) == 1);
  CHECK(su2_summand_formula(1, 2) == 0);
  CHECK(su2_summand_formula(2, 3) == 7);
  CHECK(su2_summand_formula(3, 2) == 11);
  CHECK(so3_summand_base_formula(1) == 0);
  CHECK(so3_summand_base_formula(2) == 1);
  CHECK(so3_summand_base_formula(3) == 4);
  CHECK(so3_summand_extra_formula(2, 3) == 3);
  CHECK(so3_summand_extra_formula(1, 4) == 0);

  for (int k = 1; k <= 3; ++k)
    for (int q = 2; q <= 4; ++q) {
      auto su2 = stable_summand_counts(k, q, SummandTarget::SU2, CountMethod::Both);
      CHECK(su2.agree);
      CHECK(su2.su2_count == su2_summand_formula(k, q));
      auto so3 = stable_summand_counts(k, q, SummandTarget::SO3, CountMethod::Both);
      CHECK(so3.agree);
      CHECK(so3.so3_base == so3_summand_base_formula(k));
      CHECK(so3.so3_extra == so3_summand_extra_formula(k, q));
    }
}

TEST_CASE("partition identity") {
  for (int n = 1; n <= 3; ++n)
    for (int q = 2; q <= 3; ++q) CHECK(verify_partition_identity(n, q));
}

TEST_CASE("report serialization") {
  auto rep = su2_component_count(2, 3, CountMethod::Both);
  auto j = to_json(rep);
  CHECK(j.find("\"nonabelian\":7") != std::string::npos);
  CHECK(j.find("\"agree\":true") != std::string::npos);
  auto tsv = to_tsv(rep);
  CHECK(tsv.find("2\t1\n") != std::string::npos);
  CHECK(tsv.find("total\t7\n") != std::string::npos);
  auto sj = to_json(stable_summand_counts(2, 2, SummandTarget::SU2));
  CHECK(sj.find("\"K\":1") != std::string::npos);

  set_enumeration_workers(2);
  CHECK(gen_tuple_count_enumerated(2, 4) == 96);
  set_enumeration_workers(0);
}
