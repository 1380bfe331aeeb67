#include "nilhom/hom_count.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <set>
#include <thread>
#include <unordered_set>

#include "json.hpp"
#include "nilhom/su2_exact.hpp"

namespace nilhom {

namespace {

std::atomic<unsigned> g_workers{0};

BigInt pow2(int e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return BigInt(1) << e;
}

BigInt ipow(BigInt base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (a == 0) return 0;
  if (a % b != 0)
    throw std::logic_error("expected exact division: " + a.str() + " / " + b.str());
  return a / b;
}

// Multiplication table of a group of order <= 64, with subgroup closure on
// uint64 bitmasks.  This is the hot-path carrier for tuple enumeration.
struct GroupTable {
  GroupId g;
  int order = 0;
  std::vector<int> mul;  // order x order
  std::vector<int> inv;
  int minus_id = -1;  // index of -I (quaternion family)

  explicit GroupTable(const GroupId& gid) : g(gid) {
    if (g.order() > 64)
      throw std::invalid_argument("enumeration supports groups of order <= 64");
    order = static_cast<int>(g.order());
    mul.resize(static_cast<std::size_t>(order) * order);
    inv.resize(order);
    auto elems = all_elements(g);
    for (int i = 0; i < order; ++i) {
      inv[i] = static_cast<int>(elem_index(g, element_inverse(g, elems[i])));
      for (int j = 0; j < order; ++j)
        mul[static_cast<std::size_t>(i) * order + j] = static_cast<int>(
            elem_index(g, element_product(g, elems[i], elems[j])));
    }
    if (g.family == Family::Quaternion)
      minus_id = static_cast<int>(elem_index(g, minus_identity(g)));
  }

  int product(int i, int j) const { return mul[static_cast<std::size_t>(i) * order + j]; }

  std::uint64_t full_mask() const {
    return order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
  }

  bool commute(int i, int j) const { return product(i, j) == product(j, i); }

  std::uint64_t closure(std::uint64_t seed) const {
    std::uint64_t mask = seed | 1;  // identity has index 0
    int members[64], count = 0;
    for (int i = 0; i < order; ++i)
      if (mask >> i & 1) members[count++] = i;
    for (int head = 0; head < count; ++head)
      for (int other = 0; other < count; ++other)
        for (int p : {product(members[head], members[other]),
                      product(members[other], members[head])}) {
          if (!(mask >> p & 1)) {
            mask |= std::uint64_t{1} << p;
            members[count++] = p;
          }
        }
    return mask;
  }
};

const GroupTable& table_for(int m) {
  static std::vector<GroupTable> cache = [] {
    std::vector<GroupTable> t;
    for (int mm = 3; mm <= 6; ++mm) t.emplace_back(GroupId{Family::Quaternion, mm});
    return t;
  }();
  if (m < 3 || m > 6) throw std::invalid_argument("quaternion enumeration needs 3 <= m <= 6");
  return cache[static_cast<std::size_t>(m - 3)];
}

bool passes_filter(const GroupTable& t, const std::vector<int>& tuple, TupleFilter f) {
  for (int x : tuple) {
    if (f != TupleFilter::All && x == 0) return false;
    if (f == TupleFilter::NoCenter && x == t.minus_id) return false;
  }
  return true;
}

// Visit every n-tuple over {0..order-1}; fn takes the tuple by reference.
template <typename Fn>
void for_each_tuple(int order, int n, Fn&& fn) {
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(tuple);
    int pos = n - 1;
    while (pos >= 0 && ++tuple[static_cast<std::size_t>(pos)] == order) {
      tuple[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

std::uint64_t tuple_key(const std::vector<int>& tuple, int order) {
  std::uint64_t key = 0;
  for (int x : tuple) key = key * static_cast<std::uint64_t>(order) + static_cast<std::uint64_t>(x);
  return key;
}

}  // namespace

void set_enumeration_workers(unsigned workers) { g_workers = workers; }

unsigned enumeration_workers() {
  unsigned w = g_workers.load();
  if (w == 0) {
    if (const char* env = std::getenv("NILHOM_WORKERS")) w = static_cast<unsigned>(std::atoi(env));
  }
  if (w == 0) w = std::max(1u, std::thread::hardware_concurrency());
  return w;
}

BigInt gen_tuple_count_formula(int n, int r) {
  if (n < 1 || r < 3) throw std::invalid_argument("gen_tuple_count_formula: n >= 1, r >= 3");
  return pow2((r - 2) * n + 1) * (pow2(n) - 1) * (pow2(n - 1) - 1);
}

std::int64_t gen_tuple_count_enumerated(int n, int r, TupleFilter filter) {
  const GroupTable& t = table_for(r);
  const std::uint64_t full = t.full_mask();
  const unsigned workers =
      std::min<unsigned>(enumeration_workers(), static_cast<unsigned>(t.order));
  std::vector<std::int64_t> partial(workers, 0);
  auto run = [&](unsigned w) {
    // split on the outermost coordinate; inner coordinates run fully
    for (int first = static_cast<int>(w); first < t.order; first += static_cast<int>(workers)) {
      if (filter != TupleFilter::All && first == 0) continue;
      if (filter == TupleFilter::NoCenter && first == t.minus_id) continue;
      if (n == 1) {
        std::uint64_t seed = std::uint64_t{1} << first;
        if (t.closure(seed) == full) ++partial[w];
        continue;
      }
      for_each_tuple(t.order, n - 1, [&](const std::vector<int>& rest) {
        if (!passes_filter(t, rest, filter)) return;
        std::uint64_t seed = std::uint64_t{1} << first;
        for (int x : rest) seed |= std::uint64_t{1} << x;
        if (t.closure(seed) == full) ++partial[w];
      });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& th : threads) th.join();
  }
  std::int64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

std::vector<std::vector<int>> normalizer_action(int r) {
  std::vector<std::vector<int>> perms;
  const GroupId sub{Family::Quaternion, r};
  auto elems = all_elements(sub);
  if (r == 3) {
    // binary octahedral action, through exact Q(sqrt 2) quaternions
    std::vector<ExtQuaternion> model;
    for (const auto& a : elems) model.push_back(quat_from_group(sub, a));
    for (const auto& go : binary_octahedral()) {
      std::vector<int> perm(elems.size());
      const ExtQuaternion gi = quat_conjugate(go);
      for (std::size_t i = 0; i < elems.size(); ++i) {
        ExtQuaternion c = quat_mul(quat_mul(go, model[i]), gi);
        perm[i] = static_cast<int>(elem_index(sub, quat_to_group(sub, c)));
      }
      perms.push_back(std::move(perm));
    }
  } else {
    const GroupId big{Family::Quaternion, r + 1};
    for (const auto& go : all_elements(big)) {
      CircleElem cg = embed_quaternion_group(big, go);
      std::vector<int> perm(elems.size());
      for (std::size_t i = 0; i < elems.size(); ++i) {
        CircleElem c = circle_conjugate(embed_quaternion_group(sub, elems[i]), cg);
        perm[i] = static_cast<int>(elem_index(sub, circle_to_quat(sub, c)));
      }
      perms.push_back(std::move(perm));
    }
  }
  return perms;
}

OrbitCount conjugation_orbit_count(int n, int r, TupleFilter filter) {
  const GroupTable& t = table_for(r);
  const std::uint64_t full = t.full_mask();
  auto perms = normalizer_action(r);
  const std::size_t expected_orbit = perms.size() / 2;  // center acts trivially

  OrbitCount out;
  out.all_orbits_free = true;
  std::unordered_set<std::uint64_t> visited;
  for_each_tuple(t.order, n, [&](const std::vector<int>& tuple) {
    if (!passes_filter(t, tuple, filter)) return;
    std::uint64_t seed = 0;
    for (int x : tuple) seed |= std::uint64_t{1} << x;
    if (t.closure(seed) != full) return;
    ++out.tuples;
    std::uint64_t key = tuple_key(tuple, t.order);
    if (visited.count(key)) return;
    std::set<std::uint64_t> orbit;
    std::vector<int> image(tuple.size());
    for (const auto& perm : perms) {
      for (std::size_t i = 0; i < tuple.size(); ++i)
        image[i] = perm[static_cast<std::size_t>(tuple[i])];
      orbit.insert(tuple_key(image, t.order));
    }
    if (orbit.size() != expected_orbit) out.all_orbits_free = false;
    visited.insert(orbit.begin(), orbit.end());
    ++out.orbits;
  });
  if (!out.all_orbits_free)
    throw std::logic_error("normalizer action on generating tuples is not free");
  return out;
}

BigInt su2_component_formula(int n, int q) {
  if (n < 1 || q < 2) throw std::invalid_argument("su2_component_formula: n >= 1, q >= 2");
  // first term = |Gen(n,Q_8)| / 24; the later terms divide by |N|/2 = 2^r
  BigInt total = exact_div(gen_tuple_count_formula(n, 3), 24);
  for (int r = 4; r <= q + 1; ++r)
    total += exact_div(gen_tuple_count_formula(n, r), pow2(r));
  return total;
}

TupleClassReport su2_component_count(int n, int q, CountMethod method) {
  if (n < 1 || q < 2) throw std::invalid_argument("su2_component_count: n >= 1, q >= 2");
  TupleClassReport rep;
  rep.n = n;
  rep.q = q;
  rep.method = method;
  for (int r = 2; r <= q; ++r) {
    BigInt formula = exact_div(gen_tuple_count_formula(n, r + 1),
                               r == 2 ? BigInt(24) : pow2(r + 1));
    if (method == CountMethod::Formula) {
      rep.per_r[r] = formula;
    } else {
      BigInt enumerated = conjugation_orbit_count(n, r + 1).orbits;
      if (method == CountMethod::Both && enumerated != formula) rep.agree = false;
      rep.per_r[r] = method == CountMethod::Both ? formula : enumerated;
    }
    rep.total_nonabelian += rep.per_r[r];
  }
  if (rep.total_nonabelian != su2_component_formula(n, q)) rep.agree = false;
  return rep;
}

So3Counts so3_component_count(int n, int q) {
  if (n < 2 || q < 2) throw std::invalid_argument("so3_component_count: n >= 2, q >= 2");
  So3Counts out;
  out.m_n = exact_div((pow2(n) - 1) * (pow2(n - 1) - 1), 3);
  out.m_nq = (pow2(n) - 1) * (pow2((q - 2) * (n - 1)) - 1) * pow2(n - 2);
  // covering correspondence: divide C(n,2) by 2^{n-2}, the rest by 2^{n-1}
  BigInt c2 = su2_component_formula(n, 2);
  BigInt cq = su2_component_formula(n, q);
  out.covering_consistent = (out.m_n == exact_div(c2, pow2(n - 2))) &&
                            (out.m_nq == exact_div(cq - c2, pow2(n - 1)));
  return out;
}

U2Counts u2_component_count(int n, int q) {
  if (n < 1 || q < 2) throw std::invalid_argument("u2_component_count: n >= 1, q >= 2");
  U2Counts out;
  if (n == 1) {
    out.type_z2z2 = 0;
    out.type_z2 = 0;
    return out;
  }
  So3Counts so3 = so3_component_count(n, q);
  out.type_z2z2 = so3.m_n;
  out.type_z2 = so3.m_nq;
  return out;
}

U2Counts u2_component_count_enumerated(int n, int q) {
  U2Counts out;
  out.type_z2z2 = 0;
  out.type_z2 = 0;
  for (int r = 3; r <= q + 1; ++r) {
    const GroupTable& t = table_for(r);
    const std::uint64_t full = t.full_mask();
    auto perms = normalizer_action(r);
    // orbits of Gen(n, Q_2^r) under conjugation together with sign flips
    std::unordered_set<std::uint64_t> visited;
    std::int64_t orbits = 0;
    for_each_tuple(t.order, n, [&](const std::vector<int>& tuple) {
      std::uint64_t seed = 0;
      for (int x : tuple) seed |= std::uint64_t{1} << x;
      if (t.closure(seed) != full) return;
      std::uint64_t key = tuple_key(tuple, t.order);
      if (visited.count(key)) return;
      // BFS over the combined action
      std::vector<std::vector<int>> frontier = {tuple};
      std::set<std::uint64_t> orbit = {key};
      while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& cur : frontier) {
          std::vector<int> image(cur.size());
          for (const auto& perm : perms) {
            for (std::size_t i = 0; i < cur.size(); ++i)
              image[i] = perm[static_cast<std::size_t>(cur[i])];
            if (orbit.insert(tuple_key(image, t.order)).second) next.push_back(image);
          }
          for (std::size_t flip = 0; flip < cur.size(); ++flip) {
            image = cur;
            image[flip] = t.product(image[flip], t.minus_id);
            if (orbit.insert(tuple_key(image, t.order)).second) next.push_back(image);
          }
        }
        frontier = std::move(next);
      }
      visited.insert(orbit.begin(), orbit.end());
      ++orbits;
    });
    if (r == 3)
      out.type_z2z2 += orbits;
    else
      out.type_z2 += orbits;
  }
  return out;
}

U2Stabilizer u2_stabilizer(const GroupId& ambient, const std::vector<QuatElem>& tuple) {
  Subgroup h = generated_subgroup(ambient, tuple);
  if (is_abelian(h))
    throw std::invalid_argument("u2_stabilizer: tuple must generate a non-abelian subgroup");
  SubgroupDescriptor d = classify_subgroup(h);
  // conjugate into the standard copy Q_2^{r+1}: conj by x(theta) sends the
  // w-coset angle phi to phi - 2 theta, so theta = (coset angle)/2
  const GroupId sub{Family::Quaternion, d.r + 1};
  CircleElem align{0, angle_mod1(Rat(d.coset_x.k, 2 * ambient.torus_modulus()))};
  std::vector<int> standard;
  for (const auto& x : tuple) {
    CircleElem c = circle_conjugate(embed_quaternion_group(ambient, x), align);
    standard.push_back(static_cast<int>(elem_index(sub, circle_to_quat(sub, c))));
  }
  const GroupTable& t = table_for(d.r + 1);
  auto perms = normalizer_action(d.r + 1);

  U2Stabilizer stab;
  const int n = static_cast<int>(tuple.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> target(standard);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1)
        target[static_cast<std::size_t>(i)] =
            t.product(target[static_cast<std::size_t>(i)], t.minus_id);
    bool hit = false;
    for (const auto& perm : perms) {
      bool match = true;
      for (int i = 0; i < n && match; ++i)
        match = perm[static_cast<std::size_t>(standard[static_cast<std::size_t>(i)])] ==
                target[static_cast<std::size_t>(i)];
      if (match) {
        hit = true;
        break;
      }
    }
    if (hit) {
      std::vector<int> signs;
      for (int i = 0; i < n; ++i) signs.push_back(mask >> i & 1 ? -1 : 1);
      stab.sign_vectors.push_back(std::move(signs));
    }
  }
  return stab;
}

BigInt su2_summand_formula(int k, int q) {
  if (k < 1 || q < 2) throw std::invalid_argument("su2_summand_formula: k >= 1, q >= 2");
  BigInt total = exact_div(ipow(7, k) - 3 * ipow(3, k) + 2, 24);
  for (int r = 4; r <= q + 1; ++r)
    total += exact_div(ipow(pow2(r) - 1, k) - 3 * ipow(pow2(r - 1) - 1, k) +
                           2 * ipow(pow2(r - 2) - 1, k),
                       pow2(r));
  return total;
}

BigInt so3_summand_base_formula(int k) {
  if (k < 1) throw std::invalid_argument("so3_summand_base_formula: k >= 1");
  return exact_div(ipow(3, k - 1) - 1, 2);
}

BigInt so3_summand_extra_formula(int k, int q) {
  if (k < 1 || q < 2) throw std::invalid_argument("so3_summand_extra_formula: k >= 1, q >= 2");
  BigInt total = 0;
  for (int r = 3; r <= q; ++r)
    total += exact_div(ipow(pow2(r) - 1, k) - 3 * ipow(pow2(r - 1) - 1, k) +
                           2 * ipow(pow2(r - 2) - 1, k),
                       pow2(r));
  return total;
}

StableSummandReport stable_summand_counts(int k, int q, SummandTarget target,
                                          CountMethod method) {
  StableSummandReport rep;
  rep.k = k;
  rep.q = q;
  rep.target = target;
  rep.method = method;
  if (target == SummandTarget::SU2) {
    rep.su2_count = su2_summand_formula(k, q);
    if (method != CountMethod::Formula) {
      BigInt enumerated = 0;
      for (int r = 3; r <= q + 1; ++r)
        enumerated += conjugation_orbit_count(k, r, TupleFilter::NoIdentity).orbits;
      if (method == CountMethod::Both && enumerated != rep.su2_count) rep.agree = false;
      if (method == CountMethod::Enumeration) rep.su2_count = enumerated;
    }
  } else {
    rep.so3_base = so3_summand_base_formula(k);
    rep.so3_extra = so3_summand_extra_formula(k, q);
    if (method != CountMethod::Formula) {
      // covering division: 2^{k-2} for the Q_8 layer, 2^{k-1} above it
      BigInt base = conjugation_orbit_count(k, 3, TupleFilter::NoCenter).orbits;
      base = k >= 2 ? exact_div(base, pow2(k - 2)) : base;
      BigInt extra = 0;
      for (int r = 4; r <= q + 1; ++r)
        extra += conjugation_orbit_count(k, r, TupleFilter::NoCenter).orbits;
      extra = k >= 2 ? exact_div(extra, pow2(k - 1)) : extra;
      if (method == CountMethod::Both && (base != rep.so3_base || extra != rep.so3_extra))
        rep.agree = false;
      if (method == CountMethod::Enumeration) {
        rep.so3_base = base;
        rep.so3_extra = extra;
      }
    }
  }
  return rep;
}

bool verify_partition_identity(int n, int q) {
  const GroupTable& t = table_for(q + 1);
  std::int64_t commuting = 0;
  std::map<std::uint64_t, std::int64_t> gen_by_subgroup;
  for_each_tuple(t.order, n, [&](const std::vector<int>& tuple) {
    bool abelian = true;
    for (std::size_t i = 0; i < tuple.size() && abelian; ++i)
      for (std::size_t j = i + 1; j < tuple.size() && abelian; ++j)
        abelian = t.commute(tuple[i], tuple[j]);
    if (abelian) {
      ++commuting;
      return;
    }
    std::uint64_t seed = 0;
    for (int x : tuple) seed |= std::uint64_t{1} << x;
    ++gen_by_subgroup[t.closure(seed)];
  });
  // every non-abelian generated subgroup is a Q_2^{r+1}; its in-place
  // generating count must match the closed formula
  BigInt nonabelian_total = 0;
  for (const auto& [mask, count] : gen_by_subgroup) {
    int size = std::popcount(mask);
    int r = 0;
    while ((1 << r) < size) ++r;
    if ((1 << r) != size || r < 3) return false;
    if (BigInt(count) != gen_tuple_count_formula(n, r)) return false;
    nonabelian_total += count;
  }
  return BigInt(commuting) + nonabelian_total == ipow(t.order, n);
}

// ---- serialization ------------------------------------------------------

namespace {

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

}  // namespace

std::string to_json(const TupleClassReport& r) {
  nlohmann::json j;
  j["abelian"] = big_to_json(r.abelian_components);
  j["nonabelian"] = big_to_json(r.total_nonabelian);
  nlohmann::json per;
  for (const auto& [cls, count] : r.per_r) per[std::to_string(cls)] = big_to_json(count);
  j["per_r"] = per;
  if (r.method == CountMethod::Both) j["agree"] = r.agree;
  return j.dump();
}

std::string to_tsv(const TupleClassReport& r) {
  std::string out = "class\tcomponents\n";
  for (const auto& [cls, count] : r.per_r)
    out += std::to_string(cls) + "\t" + count.str() + "\n";
  out += "total\t" + r.total_nonabelian.str() + "\n";
  return out;
}

std::string to_json(const StableSummandReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["q"] = r.q;
  j["target"] = r.target == SummandTarget::SU2 ? "su2" : "so3";
  if (r.target == SummandTarget::SU2) {
    j["K"] = big_to_json(r.su2_count);
  } else {
    j["N"] = big_to_json(r.so3_base);
    j["Nq"] = big_to_json(r.so3_extra);
  }
  j["method"] = r.method == CountMethod::Formula       ? "formula"
                : r.method == CountMethod::Enumeration ? "enumeration"
                                                       : "both";
  if (r.method == CountMethod::Both) j["agree"] = r.agree;
  return j.dump();
}

}  // namespace nilhom
