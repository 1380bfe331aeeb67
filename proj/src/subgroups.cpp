#include "nilhom/subgroups.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace nilhom {

namespace {

std::vector<QuatElem> sorted_unique(std::vector<QuatElem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Unicode subscript digits, for amalgam strings like "Q₈ ∗_{μ₄} Q₈".
std::string subscript(std::int64_t n) {
  static const char* digits[10] = {"₀", "₁", "₂", "₃",
                                   "₄", "₅", "₆", "₇",
                                   "₈", "₉"};
  std::string dec = std::to_string(n), out;
  for (char c : dec) out += digits[c - '0'];
  return out;
}

std::string piece_name(const Subgroup& h) {
  const SubgroupDescriptor d = classify_subgroup(h);
  switch (d.kind) {
    case SubgroupDescriptor::Kind::QuatLike:
      return "Q" + subscript(std::int64_t{1} << (d.r + 1));
    case SubgroupDescriptor::Kind::Order4WPair:
      return "C₄";
    case SubgroupDescriptor::Kind::Cyclic:
      return "μ" + subscript(std::int64_t{1} << d.r);
  }
  return "?";
}

}  // namespace

bool Subgroup::contains(const QuatElem& a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(elements.begin(), elements.end(), other.elements.begin(),
                       other.elements.end());
}

Subgroup trivial_subgroup(const GroupId& g) {
  return {g, {identity_elem()}, std::nullopt};
}

Subgroup full_subgroup(const GroupId& g) {
  return {g, sorted_unique(all_elements(g)), std::nullopt};
}

Subgroup generated_subgroup(const GroupId& g, const std::vector<QuatElem>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("generated_subgroup: empty tuple");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<QuatElem> members = {identity_elem()};
  seen[static_cast<std::size_t>(elem_index(g, identity_elem()))] = 1;
  std::vector<QuatElem> frontier;
  for (const auto& t : tuple) {
    check_elem(g, t);
    auto idx = static_cast<std::size_t>(elem_index(g, t));
    if (!seen[idx]) {
      seen[idx] = 1;
      members.push_back(t);
      frontier.push_back(t);
    }
  }
  while (!frontier.empty()) {
    std::vector<QuatElem> next;
    for (const auto& f : frontier)
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (const QuatElem& p :
             {element_product(g, f, members[i]), element_product(g, members[i], f)}) {
          auto idx = static_cast<std::size_t>(elem_index(g, p));
          if (!seen[idx]) {
            seen[idx] = 1;
            members.push_back(p);
            next.push_back(p);
          }
        }
      }
    frontier = std::move(next);
  }
  return {g, sorted_unique(std::move(members)), std::nullopt};
}

bool is_abelian(const Subgroup& h) {
  for (const auto& a : h.elements)
    for (const auto& b : h.elements)
      if (commutator(h.ambient, a, b) != identity_elem()) return false;
  return true;
}

std::vector<Subgroup> lower_central_series(const Subgroup& h) {
  std::vector<Subgroup> series = {h};
  while (series.back().order() > 1) {
    const Subgroup& gamma = series.back();
    std::vector<QuatElem> comms = {identity_elem()};
    for (const auto& a : gamma.elements)
      for (const auto& b : h.elements) comms.push_back(commutator(h.ambient, a, b));
    Subgroup next = generated_subgroup(h.ambient, sorted_unique(std::move(comms)));
    if (next.order() == gamma.order()) break;  // cannot happen for nilpotent input
    series.push_back(std::move(next));
  }
  return series;
}

int nilpotency_class(const Subgroup& h) {
  auto series = lower_central_series(h);
  int cls = 0;
  for (const auto& s : series)
    if (s.order() > 1) ++cls;
  return cls;
}

SubgroupDescriptor classify_subgroup(const Subgroup& h) {
  const GroupId& g = h.ambient;
  if (g.family != Family::Quaternion)
    throw std::invalid_argument("classify_subgroup needs a quaternion ambient");
  std::vector<QuatElem> torus, wcoset;
  for (const auto& a : h.elements) (a.eps == 0 ? torus : wcoset).push_back(a);

  if (wcoset.empty()) {
    // subgroup of mu_{2^{m-1}}; order is a power of two
    int r = 0;
    while ((std::size_t{1} << r) < h.order()) ++r;
    if ((std::size_t{1} << r) != h.order())
      throw std::logic_error("cyclic subgroup of non-2-power order");
    return {SubgroupDescriptor::Kind::Cyclic, r, identity_elem()};
  }
  if (h.order() == 4 && torus.size() == 2) {
    // {±I, ±wx}; pick the representative with the smaller k
    QuatElem x{0, std::min(wcoset[0].k, wcoset[1].k) % (g.torus_modulus() / 2)};
    return {SubgroupDescriptor::Kind::Order4WPair, 1, x};
  }
  // mu_{2^r} ∪ wx mu_{2^r}: torus part has order 2^r, the w-coset k's form a
  // coset of the stride-2^{m-1-r} lattice.
  if (torus.size() != wcoset.size())
    throw std::logic_error("unbalanced w-coset in subgroup");
  int r = 0;
  while ((std::size_t{1} << r) < torus.size()) ++r;
  if ((std::size_t{1} << r) != torus.size())
    throw std::logic_error("torus part of non-2-power order");
  std::int64_t stride = g.torus_modulus() >> r;
  std::int64_t p = wcoset[0].k % stride;
  return {SubgroupDescriptor::Kind::QuatLike, r, QuatElem{0, p}};
}

Subgroup realize_descriptor(const GroupId& g, const SubgroupDescriptor& d) {
  std::vector<QuatElem> elems;
  const std::int64_t n = g.torus_modulus();
  switch (d.kind) {
    case SubgroupDescriptor::Kind::Cyclic: {
      std::int64_t count = std::int64_t{1} << d.r;
      std::int64_t stride = n / count;
      for (std::int64_t i = 0; i < count; ++i) elems.push_back({0, i * stride});
      break;
    }
    case SubgroupDescriptor::Kind::Order4WPair: {
      std::int64_t half = n / 2;
      elems = {{0, 0}, {0, half}, {1, d.coset_x.k}, {1, (d.coset_x.k + half) % n}};
      break;
    }
    case SubgroupDescriptor::Kind::QuatLike: {
      std::int64_t count = std::int64_t{1} << d.r;
      std::int64_t stride = n / count;
      for (std::int64_t i = 0; i < count; ++i) {
        elems.push_back({0, i * stride});
        elems.push_back({1, (d.coset_x.k + i * stride) % n});
      }
      break;
    }
  }
  Subgroup h{g, sorted_unique(std::move(elems)), d};
  return h;
}

std::string to_string(const SubgroupDescriptor& d) {
  switch (d.kind) {
    case SubgroupDescriptor::Kind::Cyclic:
      return "Cyclic(" + std::to_string(d.r) + ")";
    case SubgroupDescriptor::Kind::Order4WPair:
      return "Order4WPair(x=" + to_string(d.coset_x) + ")";
    case SubgroupDescriptor::Kind::QuatLike:
      return "QuatLike(" + std::to_string(d.r) + ", x=" + to_string(d.coset_x) + ")";
  }
  return "?";
}

std::vector<Subgroup> all_subgroups(const GroupId& g) {
  // Every subgroup of these ambient groups is generated by at most two
  // elements, so pair closures enumerate them all.
  auto elems = all_elements(g);
  std::set<std::vector<QuatElem>> seen;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup h) {
    if (seen.insert(h.elements).second) out.push_back(std::move(h));
  };
  add(trivial_subgroup(g));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    add(generated_subgroup(g, {elems[i]}));
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      add(generated_subgroup(g, {elems[i], elems[j]}));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> maximal_subgroups(const GroupId& g) {
  auto subs = all_subgroups(g);
  std::vector<Subgroup> proper;
  for (auto& h : subs)
    if (h.order() < static_cast<std::size_t>(g.order())) proper.push_back(std::move(h));
  std::vector<Subgroup> maximal;
  for (const auto& h : proper) {
    bool top = true;
    for (const auto& other : proper)
      if (other.order() > h.order() && other.contains_all(h)) {
        top = false;
        break;
      }
    if (top) maximal.push_back(h);
  }
  return maximal;
}

std::vector<Subgroup> maximal_nilclass_subgroups(const GroupId& g, int r) {
  if (g.family != Family::Quaternion)
    throw std::invalid_argument("maximal_nilclass_subgroups needs a quaternion group");
  const int q = g.m - 1;
  if (r < 2 || r > q) throw std::out_of_range("class bound r must satisfy 2 <= r <= q");
  auto subs = all_subgroups(g);
  std::vector<Subgroup> low;
  for (auto& h : subs)
    if (nilpotency_class(h) < r) low.push_back(std::move(h));
  std::vector<Subgroup> maximal;
  for (const auto& h : low) {
    bool top = true;
    for (const auto& other : low)
      if (other.order() > h.order() && other.contains_all(h)) {
        top = false;
        break;
      }
    if (top) maximal.push_back(h);
  }
  return maximal;
}

Subgroup normalizer_in_ambient(const GroupId& ambient, const Subgroup& h) {
  if (!(h.ambient == ambient))
    throw std::invalid_argument("normalizer: subgroup lives in a different ambient");
  std::vector<QuatElem> members;
  for (const auto& g : all_elements(ambient)) {
    const QuatElem gi = element_inverse(ambient, g);
    bool ok = true;
    for (const auto& s : h.elements)
      if (!h.contains(element_product(ambient, element_product(ambient, g, s), gi))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(g);
  }
  return {ambient, sorted_unique(std::move(members)), std::nullopt};
}

NilPoset nil_poset_report(const GroupId& g, int r) {
  NilPoset poset;
  poset.maximals = maximal_nilclass_subgroups(g, r);
  // deterministic piece order: quaternion-like pieces first, torus part last
  std::stable_sort(poset.maximals.begin(), poset.maximals.end(),
                   [](const Subgroup& a, const Subgroup& b) {
                     auto da = classify_subgroup(a), db = classify_subgroup(b);
                     bool ta = da.kind == SubgroupDescriptor::Kind::Cyclic;
                     bool tb = db.kind == SubgroupDescriptor::Kind::Cyclic;
                     if (ta != tb) return tb;
                     return da.coset_x.k < db.coset_x.k;
                   });

  std::set<std::vector<QuatElem>> inter_seen;
  for (std::size_t i = 0; i < poset.maximals.size(); ++i)
    for (std::size_t j = i + 1; j < poset.maximals.size(); ++j) {
      std::vector<QuatElem> common;
      std::set_intersection(poset.maximals[i].elements.begin(),
                            poset.maximals[i].elements.end(),
                            poset.maximals[j].elements.begin(),
                            poset.maximals[j].elements.end(),
                            std::back_inserter(common));
      if (inter_seen.insert(common).second)
        poset.intersections.push_back({g, std::move(common), std::nullopt});
    }

  for (std::size_t i = 0; i < poset.intersections.size(); ++i)
    for (std::size_t m = 0; m < poset.maximals.size(); ++m)
      if (poset.maximals[m].contains_all(poset.intersections[i]))
        poset.edges.emplace_back(static_cast<int>(i), static_cast<int>(m));

  // Tree test on the undirected Hasse graph: connected and |E| = |V| - 1.
  const std::size_t nodes = poset.maximals.size() + poset.intersections.size();
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (auto [i, m] : poset.edges) {
    std::size_t a = static_cast<std::size_t>(i), b = poset.intersections.size() + m;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> visited(nodes, 0);
  std::vector<std::size_t> stack = {0};
  visited[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : adj[v])
      if (!visited[u]) {
        visited[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  poset.tree = (reached == nodes) && (poset.edges.size() == nodes - 1);

  // Amalgam string, e.g. "Q₈ ∗_{μ₄} Q₈ ∗_{μ₄} μ₈".
  std::string glue;
  if (!poset.intersections.empty())
    glue = " ∗_{" + piece_name(poset.intersections.front()) + "} ";
  for (std::size_t i = 0; i < poset.maximals.size(); ++i) {
    if (i) poset.amalgam += glue;
    poset.amalgam += piece_name(poset.maximals[i]);
  }
  return poset;
}

std::string to_json(const NilPoset& p) {
  nlohmann::json j;
  auto node = [](const Subgroup& h) {
    nlohmann::json n;
    n["order"] = h.order();
    n["descriptor"] = to_string(classify_subgroup(h));
    std::vector<std::string> elems;
    for (const auto& e : h.elements) elems.push_back(to_string(e));
    n["elements"] = elems;
    return n;
  };
  j["maximals"] = nlohmann::json::array();
  for (const auto& m : p.maximals) j["maximals"].push_back(node(m));
  j["intersections"] = nlohmann::json::array();
  for (const auto& m : p.intersections) j["intersections"].push_back(node(m));
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : p.edges) j["edges"].push_back({a, b});
  j["tree"] = p.tree;
  j["amalgam"] = p.amalgam;
  return j.dump();
}

}  // namespace nilhom
