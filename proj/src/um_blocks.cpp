#include "nilhom/um_blocks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace nilhom {

namespace {

std::vector<std::vector<int>> canonicalize(std::vector<std::vector<int>> parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return parts;
}

}  // namespace

int SetPartition::ground_size() const {
  int m = 0;
  for (const auto& part : parts) m += static_cast<int>(part.size());
  return m;
}

void SetPartition::check_valid() const {
  const int m = ground_size();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("SetPartition: empty part");
    for (int i : part) {
      if (i < 0 || i >= m || seen[static_cast<std::size_t>(i)])
        throw std::invalid_argument("SetPartition: parts must partition {0..m-1}");
      seen[static_cast<std::size_t>(i)] = 1;
    }
  }
}

SetPartition singleton_partition(int m) {
  SetPartition p;
  for (int i = 0; i < m; ++i) p.parts.push_back({i});
  return p;
}

SetPartition one_part_partition(int m) {
  SetPartition p;
  p.parts.emplace_back();
  for (int i = 0; i < m; ++i) p.parts.back().push_back(i);
  return p;
}

SetPartition coarsest_partition(const std::vector<Rat>& d) {
  std::map<Rat, std::vector<int>> by_value;
  for (std::size_t i = 0; i < d.size(); ++i)
    by_value[angle_mod1(d[i])].push_back(static_cast<int>(i));
  SetPartition p;
  for (auto& [value, part] : by_value) p.parts.push_back(std::move(part));
  p.parts = canonicalize(std::move(p.parts));
  return p;
}

SetPartition partition_infimum(const std::vector<SetPartition>& ps) {
  if (ps.empty()) throw std::invalid_argument("partition_infimum: empty input");
  const int m = ps.front().ground_size();
  for (const auto& p : ps)
    if (p.ground_size() != m)
      throw std::invalid_argument("partition_infimum: mismatched ground sets");
  // label each point by its part index in every input; equal labels = one part
  std::map<std::vector<int>, std::vector<int>> by_label;
  for (int i = 0; i < m; ++i) {
    std::vector<int> label;
    for (const auto& p : ps)
      for (std::size_t part = 0; part < p.parts.size(); ++part)
        if (std::find(p.parts[part].begin(), p.parts[part].end(), i) != p.parts[part].end())
          label.push_back(static_cast<int>(part));
    by_label[label].push_back(i);
  }
  SetPartition out;
  for (auto& [label, part] : by_label) out.parts.push_back(std::move(part));
  out.parts = canonicalize(std::move(out.parts));
  return out;
}

bool refines(const SetPartition& fine, const SetPartition& coarse) {
  for (const auto& part : fine.parts) {
    bool inside = false;
    for (const auto& big : coarse.parts)
      if (std::includes(big.begin(), big.end(), part.begin(), part.end())) inside = true;
    if (!inside) return false;
  }
  return true;
}

int permutation_sign(const std::vector<int>& pi) {
  std::vector<char> seen(pi.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i, len = 0;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<std::size_t>(pi[j]);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<int> consecutivizing_permutation(const SetPartition& p, bool require_even) {
  p.check_valid();
  std::vector<std::vector<int>> order = p.parts;
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a.front() < b.front();
  });
  std::vector<int> pi(static_cast<std::size_t>(p.ground_size()));
  int next = 0;
  for (const auto& part : order)
    for (int i : part) pi[static_cast<std::size_t>(i)] = next++;
  if (require_even && permutation_sign(pi) < 0) {
    for (const auto& part : order)
      if (part.size() >= 2) {
        std::swap(pi[static_cast<std::size_t>(part[0])],
                  pi[static_cast<std::size_t>(part[1])]);
        return pi;
      }
    // all parts singletons forces the identity arrangement, which is even
    throw std::logic_error("odd consecutivizing permutation with singleton parts");
  }
  return pi;
}

MonomialUnitary mu_identity(int m) {
  MonomialUnitary a;
  for (int i = 0; i < m; ++i) {
    a.perm.push_back(i);
    a.phases.emplace_back(0);
  }
  return a;
}

MonomialUnitary mu_diag(const std::vector<Rat>& d) {
  MonomialUnitary a = mu_identity(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) a.phases[i] = angle_mod1(d[i]);
  return a;
}

MonomialUnitary mu_permutation(const std::vector<int>& pi) {
  MonomialUnitary a = mu_identity(static_cast<int>(pi.size()));
  a.perm = pi;
  return a;
}

MonomialUnitary mu_mul(const MonomialUnitary& a, const MonomialUnitary& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mu_mul: size mismatch");
  MonomialUnitary c;
  for (int j = 0; j < a.size(); ++j) {
    int k = b.perm[static_cast<std::size_t>(j)];
    c.perm.push_back(a.perm[static_cast<std::size_t>(k)]);
    c.phases.push_back(
        angle_mod1(a.phases[static_cast<std::size_t>(k)] + b.phases[static_cast<std::size_t>(j)]));
  }
  return c;
}

MonomialUnitary mu_inverse(const MonomialUnitary& a) {
  MonomialUnitary c;
  c.perm.resize(a.perm.size());
  c.phases.resize(a.phases.size());
  for (int j = 0; j < a.size(); ++j) {
    int i = a.perm[static_cast<std::size_t>(j)];
    c.perm[static_cast<std::size_t>(i)] = j;
    c.phases[static_cast<std::size_t>(i)] = angle_mod1(-a.phases[static_cast<std::size_t>(j)]);
  }
  return c;
}

MonomialUnitary mu_commutator(const MonomialUnitary& a, const MonomialUnitary& b) {
  return mu_mul(mu_mul(a, b), mu_mul(mu_inverse(a), mu_inverse(b)));
}

bool mu_is_diagonal(const MonomialUnitary& a) {
  for (int j = 0; j < a.size(); ++j)
    if (a.perm[static_cast<std::size_t>(j)] != j) return false;
  return true;
}

std::vector<Rat> mu_diagonal(const MonomialUnitary& a) {
  if (!mu_is_diagonal(a)) throw std::invalid_argument("mu_diagonal: matrix not diagonal");
  return a.phases;
}

bool block_supported(const MonomialUnitary& a, const SetPartition& p) {
  for (const auto& part : p.parts)
    for (int j : part)
      if (std::find(part.begin(), part.end(), a.perm[static_cast<std::size_t>(j)]) == part.end())
        return false;
  return true;
}

BlockNormalization nil2_block_normalize(const std::vector<MonomialUnitary>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("nil2_block_normalize: empty tuple");
  const int m = tuple.front().size();
  for (const auto& x : tuple)
    if (x.size() != m) throw std::invalid_argument("nil2_block_normalize: size mismatch");

  std::vector<SetPartition> partitions = {one_part_partition(m)};
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      MonomialUnitary c = mu_commutator(tuple[i], tuple[j]);
      if (!mu_is_diagonal(c))
        throw std::invalid_argument("nil2_block_normalize: non-diagonal commutator");
      partitions.push_back(coarsest_partition(mu_diagonal(c)));
    }

  BlockNormalization out;
  out.partition = partition_infimum(partitions);
  for (const auto& x : tuple)
    if (!block_supported(x, out.partition))
      throw std::logic_error("nil2_block_normalize: tuple not supported on the blocks");
  out.permutation = consecutivizing_permutation(out.partition, false);
  MonomialUnitary p = mu_permutation(out.permutation);
  MonomialUnitary pinv = mu_inverse(p);
  for (const auto& x : tuple) out.tuple.push_back(mu_mul(mu_mul(p, x), pinv));
  return out;
}

std::string to_string(const SetPartition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < p.parts[i].size(); ++j)
      out += (j ? "," : "") + std::to_string(p.parts[i][j]);
    out += "]";
  }
  return out + "]";
}

std::string to_json(const SetPartition& p) {
  nlohmann::json j = p.parts;
  return j.dump();
}

std::string to_json(const MonomialUnitary& a) {
  nlohmann::json j;
  j["perm"] = a.perm;
  std::vector<std::string> angles;
  for (const auto& t : a.phases)
    angles.push_back(std::to_string(t.numerator()) + "/" + std::to_string(t.denominator()));
  j["phases"] = angles;
  return j.dump();
}

}  // namespace nilhom
