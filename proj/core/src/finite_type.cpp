#include "coxeter/finite_type.hpp"

#include <algorithm>
#include <map>

namespace coxeter {
namespace {

using Family = TypeLabel::Family;

GroupOrder factorial(std::size_t n) {
  GroupOrder r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

TypeLabel infinite() { return TypeLabel{}; }
TypeLabel label(Family f, std::size_t rank, std::uint32_t m = 0) { return TypeLabel{f, rank, m}; }

bool has_edge(const CoxeterMatrix& m, Generator s, Generator t) {
  return s != t && m.order(s, t).at_least(3);
}

/// Matches one connected component. `nodes` is non-empty and connected.
TypeLabel match_component(const CoxeterMatrix& matrix, const std::vector<Generator>& nodes) {
  const std::size_t k = nodes.size();
  if (k == 1) return label(Family::A, 1);

  std::map<Generator, std::vector<Generator>> adj;
  std::size_t edge_count = 0;
  std::vector<std::pair<Generator, Generator>> heavy;  // edges with m >= 4
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Generator s = nodes[i], t = nodes[j];
      if (!has_edge(matrix, s, t)) continue;
      const Order m = matrix.order(s, t);
      if (m.is_infinite()) return infinite();
      adj[s].push_back(t);
      adj[t].push_back(s);
      ++edge_count;
      if (m.value() >= 4) heavy.emplace_back(s, t);
    }
  if (edge_count != k - 1) return infinite();  // contains a cycle

  if (k == 2) {
    const std::uint32_t m = matrix.order(nodes[0], nodes[1]).value();
    if (m == 3) return label(Family::A, 2);
    if (m == 4) return label(Family::B, 2);
    return label(Family::I, 2, m);
  }

  std::vector<Generator> leaves, branches;
  for (Generator v : nodes) {
    const std::size_t deg = adj[v].size();
    if (deg == 1) leaves.push_back(v);
    if (deg == 3) branches.push_back(v);
    if (deg > 3) return infinite();
  }

  if (branches.empty()) {
    // a path
    if (heavy.empty()) return label(Family::A, k);
    if (heavy.size() > 1) return infinite();
    const auto [s, t] = heavy.front();
    const std::uint32_t m = matrix.order(s, t).value();
    const bool at_end = adj[s].size() == 1 || adj[t].size() == 1;
    if (m == 4 && at_end) return label(Family::B, k);
    if (m == 4 && k == 4) return label(Family::F, 4);
    if (m == 5 && at_end && (k == 3 || k == 4)) return label(Family::H, k);
    return infinite();
  }

  if (branches.size() > 1 || !heavy.empty()) return infinite();
  // a star with three simply-laced arms; measure each arm in nodes
  const Generator centre = branches.front();
  std::vector<std::size_t> arms;
  for (Generator first : adj[centre]) {
    std::size_t len = 1;
    Generator prev = centre, cur = first;
    while (adj[cur].size() == 2) {
      const Generator next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return label(Family::D, k);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return label(Family::E, k);
  return infinite();
}

}  // namespace

GroupOrder TypeLabel::group_order() const {
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B: return (GroupOrder(1) << rank) * factorial(rank);
    case Family::D: return (GroupOrder(1) << (rank - 1)) * factorial(rank);
    case Family::E:
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::H: return rank == 3 ? 120 : 14400;
    case Family::I: return GroupOrder(2) * dihedral_order;
    case Family::Infinite: break;
  }
  return 0;
}

std::string to_string(const TypeLabel& label) {
  const std::string r = std::to_string(label.rank);
  switch (label.family) {
    case Family::A: return "A" + r;
    case Family::B: return "B" + r;
    case Family::D: return "D" + r;
    case Family::E: return "E" + r;
    case Family::F: return "F" + r;
    case Family::H: return "H" + r;
    case Family::I: return "I2(" + std::to_string(label.dihedral_order) + ")";
    case Family::Infinite: return "Infinite";
  }
  return "Infinite";
}

SphericalVerdict classify(const CoxeterMatrix& matrix, GenSet subset) {
  SphericalVerdict verdict;
  GroupOrder order = 1;
  GenSet unvisited = subset;
  while (!unvisited.empty()) {
    // flood fill from the smallest remaining generator
    const Generator root = unvisited.members().front();
    std::vector<Generator> nodes{root}, stack{root};
    unvisited.erase(root);
    while (!stack.empty()) {
      const Generator v = stack.back();
      stack.pop_back();
      for (Generator u : unvisited.members())
        if (has_edge(matrix, u, v)) {
          unvisited.erase(u);
          nodes.push_back(u);
          stack.push_back(u);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    const TypeLabel type = match_component(matrix, nodes);
    if (type.is_finite())
      order *= type.group_order();
    else
      verdict.spherical = false;
    verdict.components.push_back({GenSet::of(nodes), type});
  }
  if (verdict.spherical) verdict.order = order;
  return verdict;
}

bool is_spherical(const CoxeterMatrix& matrix, GenSet subset) {
  return classify(matrix, subset).spherical;
}

std::vector<GenSet> maximal_spherical_subsets(const CoxeterMatrix& matrix) {
  // Spherical subsets are closed under taking subsets, so each one arises
  // exactly once by adding generators in increasing order.
  const std::size_t n = matrix.rank();
  std::vector<GenSet> result;
  std::vector<std::pair<GenSet, std::size_t>> stack{{GenSet{}, 0}};
  while (!stack.empty()) {
    auto [set, next] = stack.back();
    stack.pop_back();
    for (std::size_t g = next; g < n; ++g) {
      const GenSet bigger = set.with(static_cast<Generator>(g));
      if (is_spherical(matrix, bigger)) stack.emplace_back(bigger, g + 1);
    }
    bool maximal = true;
    for (std::size_t g = 0; g < n && maximal; ++g)
      if (!set.contains(static_cast<Generator>(g)) &&
          is_spherical(matrix, set.with(static_cast<Generator>(g))))
        maximal = false;
    if (maximal) result.push_back(set);
  }
  std::sort(result.begin(), result.end());
  return result;
}

HypothesisResult hypothesis_check(const CoxeterMatrix& matrix, GenSet subset, Generator s0) {
  HypothesisResult result;
  bool all_at_least_three = true;
  for (Generator t : subset.members()) {
    const Order m = matrix.order(s0, t);
    if (!m.at_least(3)) all_at_least_three = false;
    if (m.is_infinite()) result.witnesses.push_back(t);
  }
  bool maximal = is_spherical(matrix, subset);
  for (std::size_t g = 0; g < matrix.rank() && maximal; ++g)
    if (!subset.contains(static_cast<Generator>(g)) &&
        is_spherical(matrix, subset.with(static_cast<Generator>(g))))
      maximal = false;
  result.ok = maximal && all_at_least_three && !result.witnesses.empty();
  return result;
}

}  // namespace coxeter
