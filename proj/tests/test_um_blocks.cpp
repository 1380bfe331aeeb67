#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "nilhom/um_blocks.hpp"

using namespace nilhom;

TEST_CASE("coarsest partition of a diagonal") {
  CHECK(coarsest_partition({Rat(1, 4), Rat(1, 4), Rat(0)}) ==
        SetPartition{{{0, 1}, {2}}});
  CHECK(coarsest_partition({Rat(0), Rat(0), Rat(0)}) == SetPartition{{{0, 1, 2}}});
  CHECK(coarsest_partition({Rat(1, 2), Rat(1, 4), Rat(0)}) == singleton_partition(3));
  // angles compare after reduction mod 1
  CHECK(coarsest_partition({Rat(5, 4), Rat(1, 4)}) == one_part_partition(2));
}

TEST_CASE("coarsest partition is the coarsest centralizing partition") {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<int> pick(0, 3);
  const std::vector<Rat> values = {Rat(0), Rat(1, 2), Rat(1, 4), Rat(3, 4)};
  for (int trial = 0; trial < 50; ++trial) {
    int m = 2 + static_cast<int>(rng() % 4);
    std::vector<Rat> d;
    for (int i = 0; i < m; ++i) d.push_back(values[static_cast<std::size_t>(pick(rng))]);
    SetPartition p = coarsest_partition(d);
    // a partition keeps diag(d) central iff d is constant on each part,
    // which happens exactly when it refines p
    std::vector<int> labels(static_cast<std::size_t>(m));
    std::iota(labels.begin(), labels.end(), 0);
    std::shuffle(labels.begin(), labels.end(), rng);
    for (int parts = 1; parts <= m; ++parts) {
      SetPartition q;
      q.parts.assign(static_cast<std::size_t>(parts), {});
      for (int i = 0; i < m; ++i)
        q.parts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)] % parts)]
            .push_back(i);
      std::erase_if(q.parts, [](const auto& part) { return part.empty(); });
      bool central = true;
      for (const auto& part : q.parts)
        for (int i : part) central = central && d[static_cast<std::size_t>(i)] ==
                                                    d[static_cast<std::size_t>(part[0])];
      CHECK(central == refines(q, p));
    }
  }
}

TEST_CASE("partition infimum") {
  SetPartition a{{{0, 1}, {2}}}, b{{{0}, {1, 2}}};
  CHECK(partition_infimum({a, b}) == singleton_partition(3));
  CHECK(partition_infimum({a}) == a);
  CHECK(partition_infimum({one_part_partition(3), a}) == a);
  CHECK_THROWS_AS(partition_infimum({a, one_part_partition(4)}), std::invalid_argument);
}

TEST_CASE("consecutivizing permutations") {
  auto pi = consecutivizing_permutation(SetPartition{{{0}, {1, 2}}}, false);
  CHECK(pi == std::vector<int>{2, 0, 1});
  CHECK(consecutivizing_permutation(singleton_partition(4), false) ==
        std::vector<int>{0, 1, 2, 3});
  auto even = consecutivizing_permutation(SetPartition{{{0, 2}, {1}}}, true);
  CHECK(permutation_sign(even) == 1);
  CHECK(std::set<int>{even[0], even[2]} == std::set<int>{0, 1});

  // random partitions: parts map to consecutive runs ordered by size;
  // even variant always has sign +1
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 1 + static_cast<int>(rng() % 7);
    std::vector<int> labels;
    for (int i = 0; i < m; ++i) labels.push_back(static_cast<int>(rng() % 3));
    std::map<int, std::vector<int>> grouped;
    for (int i = 0; i < m; ++i) grouped[labels[static_cast<std::size_t>(i)]].push_back(i);
    SetPartition p;
    for (auto& [l, part] : grouped) p.parts.push_back(part);
    for (bool require_even : {false, true}) {
      auto perm = consecutivizing_permutation(p, require_even);
      if (require_even) CHECK(permutation_sign(perm) == 1);
      std::size_t last_size = m + 1;
      std::vector<std::pair<int, std::size_t>> runs;  // (run start, size)
      for (const auto& part : p.parts) {
        int lo = m, hi = -1;
        for (int i : part) {
          lo = std::min(lo, perm[static_cast<std::size_t>(i)]);
          hi = std::max(hi, perm[static_cast<std::size_t>(i)]);
        }
        CHECK(hi - lo + 1 == static_cast<int>(part.size()));
        runs.push_back({lo, part.size()});
      }
      std::sort(runs.begin(), runs.end());
      for (const auto& [start, size] : runs) {
        CHECK(size <= last_size);
        last_size = size;
      }
    }
  }
}

TEST_CASE("monomial unitary arithmetic") {
  MonomialUnitary swap01{{1, 0}, {Rat(0), Rat(0)}};
  auto d = mu_diag({Rat(1, 4), Rat(-1, 4)});
  CHECK(mu_mul(swap01, mu_inverse(swap01)) == mu_identity(2));
  CHECK(mu_mul(d, mu_inverse(d)) == mu_identity(2));
  auto c = mu_commutator(swap01, d);
  CHECK(mu_is_diagonal(c));
  CHECK(mu_diagonal(c) == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});  // -I

  std::mt19937 rng(11);
  auto random_mu = [&](int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    MonomialUnitary a{perm, {}};
    for (int i = 0; i < m; ++i)
      a.phases.push_back(Rat(static_cast<long long>(rng() % 8), 8));
    return a;
  };
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_mu(4), b = random_mu(4), cc = random_mu(4);
    CHECK(mu_mul(mu_mul(a, b), cc) == mu_mul(a, mu_mul(b, cc)));
    CHECK(mu_mul(a, mu_inverse(a)) == mu_identity(4));
  }
}

TEST_CASE("nil-2 block normalization") {
  // scalar commutator: one block, identity conjugation
  MonomialUnitary x{{1, 0}, {Rat(0), Rat(0)}};
  auto y = mu_diag({Rat(1, 4), Rat(-1, 4)});
  auto res = nil2_block_normalize({x, y});
  CHECK(res.partition == one_part_partition(2));
  CHECK(res.permutation == std::vector<int>{0, 1});
  CHECK(res.tuple == std::vector<MonomialUnitary>{x, y});

  // commuting diagonal pair: everything unchanged
  auto d1 = mu_diag({Rat(0), Rat(1, 2), Rat(1, 4)});
  auto d2 = mu_diag({Rat(1, 8), Rat(3, 8), Rat(0)});
  auto res2 = nil2_block_normalize({d1, d2});
  CHECK(res2.partition == one_part_partition(3));
  CHECK(res2.tuple == std::vector<MonomialUnitary>{d1, d2});

  // swap(0,1) against diag(0, 1/2, 1/4): commutator diag(1/2, 1/2, 0)
  MonomialUnitary sw{{1, 0, 2}, {Rat(0), Rat(0), Rat(0)}};
  auto diag = mu_diag({Rat(0), Rat(1, 2), Rat(1, 4)});
  auto comm = mu_commutator(sw, diag);
  CHECK(mu_diagonal(comm) == std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(0)});
  auto res3 = nil2_block_normalize({sw, diag});
  CHECK(res3.partition == SetPartition{{{0, 1}, {2}}});
  CHECK(block_supported(sw, res3.partition));
  CHECK(block_supported(diag, res3.partition));
  // conjugated tuple is supported on the consecutive image blocks
  SetPartition image;
  for (const auto& part : res3.partition.parts) {
    std::vector<int> mapped;
    for (int i : part) mapped.push_back(res3.permutation[static_cast<std::size_t>(i)]);
    std::sort(mapped.begin(), mapped.end());
    image.parts.push_back(mapped);
  }
  for (const auto& t : res3.tuple) CHECK(block_supported(t, image));

  // non-diagonal commutator violates the precondition
  MonomialUnitary sw12{{0, 2, 1}, {Rat(0), Rat(0), Rat(0)}};
  CHECK_THROWS_AS(nil2_block_normalize({sw, sw12}), std::invalid_argument);
}

TEST_CASE("partition and matrix serialization") {
  SetPartition p{{{0, 2}, {1}}};
  CHECK(to_string(p) == "[[0,2],[1]]");
  CHECK(to_json(p) == "[[0,2],[1]]");
  auto j = to_json(MonomialUnitary{{1, 0}, {Rat(1, 4), Rat(0)}});
  CHECK(j.find("\"perm\":[1,0]") != std::string::npos);
  CHECK(j.find("1/4") != std::string::npos);
}
