#include "coxtwist/untangle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace coxtwist {

namespace {

bool nu_commutes(const CoxeterDiagram& d, GenSet nu, GenSet t) {
  bool ok = true;
  nu.for_each([&](int s) { ok = ok && (t - GenSet::single(s)).subset_of(d.commuting(s)); });
  return ok;
}

std::vector<GenSet> spherical_list(const CoxeterDiagram& d) {
  std::vector<GenSet> out;
  for (const auto& s : spherical_subsets(d)) out.push_back(s.set);
  return out;
}

// Successors of `v` in link order, as (T, successor).
std::vector<std::pair<GenSet, GenSet>> successors(const CoxeterDiagram& d, const std::vector<GenSet>& sph, GenSet v) {
  std::vector<std::pair<GenSet, GenSet>> out;
  const auto split = sigma_nu_split(d, v);
  for (GenSet t : sph) {
    if (!split.sigma.subset_of(t) || !nu_commutes(d, split.nu, t)) continue;
    const GenSet next = longest_automorphism(d, t).apply(split.sigma) | split.nu;
    if (untangle_step(d, v, next, t)) out.emplace_back(t, next);
  }
  return out;
}

std::vector<int> compose(const std::vector<int>& step, const std::vector<int>& p) {
  std::vector<int> out(p.size(), -1);
  for (std::size_t a = 0; a < p.size(); ++a)
    if (p[a] >= 0) out[a] = step[p[a]];
  return out;
}

std::vector<int> identity_on(const CoxeterDiagram& d, GenSet u) {
  std::vector<int> p(d.rank(), -1);
  u.for_each([&](int a) { p[a] = a; });
  return p;
}

}  // namespace

bool untangle_step(const CoxeterDiagram& d, GenSet u, GenSet u2, GenSet t) {
  if (u.empty() || u2.empty() || !is_spherical(d, t)) return false;
  const auto a = sigma_nu_split(d, u), b = sigma_nu_split(d, u2);
  if (!(a.sigma | b.sigma).subset_of(t) || a.nu != b.nu || !nu_commutes(d, a.nu, t)) return false;
  return longest_automorphism(d, t).apply(a.sigma) == b.sigma;
}

std::vector<int> step_permutation(const CoxeterDiagram& d, GenSet u, GenSet t) {
  auto p = identity_on(d, u);
  const auto w = longest_automorphism(d, t);
  sigma_nu_split(d, u).sigma.for_each([&](int a) { p[a] = w(a); });
  return p;
}

std::optional<UntanglePath> untangle_reachable(const CoxeterDiagram& d, GenSet u, GenSet u2, std::optional<int> maxlen) {
  if (u.empty() || u.size() != u2.size()) return std::nullopt;
  const auto sph = spherical_list(d);
  std::map<std::uint64_t, std::pair<GenSet, GenSet>> parent;  // node -> (previous node, link)
  std::map<std::uint64_t, int> depth{{u.bits(), 0}};
  std::deque<GenSet> queue{u};
  while (!queue.empty() && !depth.count(u2.bits())) {
    const GenSet v = queue.front();
    queue.pop_front();
    const int dv = depth[v.bits()];
    if (maxlen && dv >= *maxlen) continue;
    for (const auto& [t, next] : successors(d, sph, v)) {
      if (depth.count(next.bits())) continue;
      depth[next.bits()] = dv + 1;
      parent[next.bits()] = {v, t};
      queue.push_back(next);
    }
  }
  if (!depth.count(u2.bits())) return std::nullopt;

  UntanglePath path;
  for (GenSet v = u2; v != u; v = parent[v.bits()].first) {
    path.nodes.push_back(v);
    path.links.push_back(parent[v.bits()].second);
  }
  path.nodes.push_back(u);
  std::reverse(path.nodes.begin(), path.nodes.end());
  std::reverse(path.links.begin(), path.links.end());
  path.induced = identity_on(d, u);
  for (std::size_t i = 0; i < path.links.size(); ++i)
    path.induced = compose(step_permutation(d, path.nodes[i], path.links[i]), path.induced);
  return path;
}

PermutationGroup loop_automorphisms(const CoxeterDiagram& d, GenSet u, std::optional<int> maxlen) {
  PermutationGroup g;
  g.domain = u;
  const auto id = identity_on(d, u);
  g.elements.push_back(id);
  if (u.empty()) return g;

  const auto sph = spherical_list(d);
  struct State {
    GenSet node;
    std::vector<int> perm;
    int prev;
    GenSet link;
    int depth;
  };
  std::vector<State> states{{u, id, -1, {}, 0}};
  std::set<std::pair<std::uint64_t, std::vector<int>>> seen{{u.bits(), id}};
  std::vector<int> closing;  // states at U carrying a new permutation
  std::set<std::vector<int>> found{id};
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (maxlen && states[i].depth >= *maxlen) continue;
    // Copy: `states` grows below.
    const GenSet v = states[i].node;
    const std::vector<int> p = states[i].perm;
    for (const auto& [t, next] : successors(d, sph, v)) {
      auto q = compose(step_permutation(d, v, t), p);
      if (!seen.emplace(next.bits(), q).second) continue;
      states.push_back({next, q, static_cast<int>(i), t, states[i].depth + 1});
      if (next == u && found.insert(q).second) closing.push_back(static_cast<int>(states.size()) - 1);
    }
  }

  auto mul = [&](const std::vector<int>& a, const std::vector<int>& b) { return compose(a, b); };
  std::set<std::vector<int>> group{id};
  for (int s : closing) {
    const auto& q = states[s].perm;
    if (group.count(q)) continue;
    g.generators.push_back(q);
    UntanglePath w;
    for (int k = s; k >= 0; k = states[k].prev) {
      w.nodes.push_back(states[k].node);
      if (states[k].prev >= 0) w.links.push_back(states[k].link);
    }
    std::reverse(w.nodes.begin(), w.nodes.end());
    std::reverse(w.links.begin(), w.links.end());
    w.induced = q;
    g.witnesses.push_back(std::move(w));
    // Close under multiplication by the generators so far.
    std::deque<std::vector<int>> todo(group.begin(), group.end());
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop_front();
      for (const auto& gen : g.generators) {
        auto y = mul(gen, x);
        if (group.insert(y).second) todo.push_back(y);
      }
    }
  }
  g.elements.assign(group.begin(), group.end());
  std::stable_partition(g.elements.begin(), g.elements.end(), [&](const auto& e) { return e == id; });
  return g;
}

}  // namespace coxtwist
