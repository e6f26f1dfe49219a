#include "coxtwist/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "coxtwist/errors.hpp"

namespace coxtwist {

LabeledGraph labeled_graph(const CoxeterDiagram& d) {
  LabeledGraph g;
  g.n = d.rank();
  g.label.assign(static_cast<std::size_t>(g.n) * g.n, 0);
  g.color.assign(g.n, 0);
  for (int i = 0; i < g.n; ++i)
    for (int k = 0; k < g.n; ++k)
      if (i != k && d.order(i, k).is_finite()) g.label[static_cast<std::size_t>(i) * g.n + k] = d.order(i, k).value();
  return g;
}

namespace {

std::vector<int> relabelled(const LabeledGraph& g, const std::vector<int>& order) {
  std::vector<int> out;
  out.reserve(g.n + g.n * (g.n - 1) / 2 + 1);
  out.push_back(g.n);
  for (int v : order) out.push_back(g.color[v]);
  for (int i = 0; i < g.n; ++i)
    for (int k = i + 1; k < g.n; ++k) out.push_back(g.at(order[i], order[k]));
  return out;
}

std::string encode(const std::vector<int>& cert) {
  std::string s;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(cert[i]);
  }
  return s;
}

class Search {
 public:
  explicit Search(const LabeledGraph& g) : g_(g) {}

  CanonicalForm run() {
    std::vector<int> c(g_.n);
    // Initial cells ordered by input colour.
    std::vector<int> cols = g_.color;
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (int v = 0; v < g_.n; ++v) c[v] = static_cast<int>(std::lower_bound(cols.begin(), cols.end(), g_.color[v]) - cols.begin());
    refine(c);
    std::vector<int> path;
    descend(c, path);
    return {encode(best_), best_order_};
  }

 private:
  // Splits cells by (own cell, multiset of (label, neighbour cell)) until
  // stable. New cell indices follow signature order, so the result only
  // depends on the isomorphism class of (graph, colouring).
  void refine(std::vector<int>& c) const {
    int cells = count(c);
    while (true) {
      std::vector<std::vector<int>> sig(g_.n);
      for (int v = 0; v < g_.n; ++v) {
        std::vector<int> nb;
        for (int u = 0; u < g_.n; ++u)
          if (u != v && g_.at(v, u) != 0) nb.push_back(g_.at(v, u) * (g_.n + 1) + c[u]);
        std::sort(nb.begin(), nb.end());
        sig[v].push_back(c[v]);
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      }
      std::vector<std::vector<int>> uniq = sig;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      for (int v = 0; v < g_.n; ++v) c[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
      const int now = static_cast<int>(uniq.size());
      if (now == cells) return;
      cells = now;
    }
  }

  static int count(const std::vector<int>& c) {
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
  }

  // Orbits of the automorphisms found so far that fix `path` pointwise.
  std::vector<int> orbits(const std::vector<int>& path) const {
    std::vector<int> parent(g_.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : autos_) {
      if (!std::all_of(path.begin(), path.end(), [&](int v) { return a[v] == v; })) continue;
      for (int v = 0; v < g_.n; ++v) parent[find(v)] = find(a[v]);
    }
    for (int v = 0; v < g_.n; ++v) parent[v] = find(v);
    return parent;
  }

  void descend(const std::vector<int>& c, std::vector<int>& path) {
    const int cells = count(c);
    if (cells == g_.n) {
      std::vector<int> order(g_.n);
      for (int v = 0; v < g_.n; ++v) order[c[v]] = v;
      auto cert = relabelled(g_, order);
      if (best_order_.empty() || cert < best_) {
        best_ = std::move(cert);
        best_order_ = order;
      } else if (cert == best_) {
        std::vector<int> a(g_.n);
        for (int k = 0; k < g_.n; ++k) a[best_order_[k]] = order[k];
        autos_.push_back(std::move(a));
      }
      return;
    }
    // First non-singleton cell.
    std::vector<int> size(g_.n, 0);
    for (int v = 0; v < g_.n; ++v) ++size[c[v]];
    int target = 0;
    while (size[target] < 2) ++target;
    std::vector<int> tried;
    for (int v = 0; v < g_.n; ++v) {
      if (c[v] != target) continue;
      if (!tried.empty()) {
        const auto orb = orbits(path);
        if (std::any_of(tried.begin(), tried.end(), [&](int u) { return orb[u] == orb[v]; })) continue;
      }
      tried.push_back(v);
      std::vector<int> child(g_.n);
      for (int u = 0; u < g_.n; ++u) child[u] = 2 * c[u] + (u == v ? 0 : 1);
      refine(child);
      path.push_back(v);
      descend(child, path);
      path.pop_back();
    }
  }

  const LabeledGraph& g_;
  std::vector<int> best_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalForm canonical_form(const LabeledGraph& g) {
  if (g.n == 0) return {encode({0}), {}};
  return Search(g).run();
}

CanonicalForm canonical_form(const CoxeterDiagram& d) { return canonical_form(labeled_graph(d)); }

std::string brute_force_certificate(const LabeledGraph& g) {
  if (g.n > 10) throw CapacityError("brute-force certificate is limited to 10 vertices");
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> best = relabelled(g, order);
  while (std::next_permutation(order.begin(), order.end())) best = std::min(best, relabelled(g, order));
  return encode(best);
}

std::optional<std::vector<int>> find_isomorphism(const CoxeterDiagram& a, const CoxeterDiagram& b) {
  if (a.rank() != b.rank()) return std::nullopt;
  const auto ca = canonical_form(a), cb = canonical_form(b);
  if (ca.certificate != cb.certificate) return std::nullopt;
  std::vector<int> map(a.rank());
  for (int k = 0; k < a.rank(); ++k) map[ca.order[k]] = cb.order[k];
  return map;
}

}  // namespace coxtwist
