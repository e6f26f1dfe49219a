#include "coxtwist/sphericity.hpp"

#include <algorithm>

#include "coxtwist/errors.hpp"

namespace coxtwist {

std::string IrreducibleType::to_string() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F" + std::to_string(rank);
    case Family::H: return "H" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(m) + ")";
  }
  return "?";
}

namespace {

int label(const CoxeterDiagram& d, int a, int b) { return d.order(a, b).value(); }

// Walks from `start` away from `prev` along a chain inside `c`, stopping at
// a vertex whose degree is not 2 (or when leaving `c`).
std::vector<int> walk_arm(const CoxeterDiagram& d, GenSet c, int prev, int start) {
  std::vector<int> arm{start};
  int cur = start;
  while (true) {
    GenSet nb = d.linked(cur) & c;
    nb.erase(prev);
    if (nb.size() != 1) break;
    prev = cur;
    cur = nb.lowest();
    arm.push_back(cur);
  }
  return arm;
}

std::optional<TypedComponent> classify_path(const CoxeterDiagram& d, GenSet c) {
  const int n = c.size();
  // Pick the lower-indexed end, then walk.
  int end = -1;
  c.for_each([&](int v) {
    if (end < 0 && (d.linked(v) & c).size() == 1) end = v;
  });
  std::vector<int> path{end};
  {
    GenSet nb = d.linked(end) & c;
    auto rest = walk_arm(d, c, end, nb.lowest());
    path.insert(path.end(), rest.begin(), rest.end());
  }
  if (static_cast<int>(path.size()) != n) return std::nullopt;
  std::vector<int> labels;
  for (int i = 0; i + 1 < n; ++i) labels.push_back(label(d, path[i], path[i + 1]));

  auto all3 = [](auto first, auto last) { return std::all_of(first, last, [](int x) { return x == 3; }); };
  auto flipped = [&]() {
    std::reverse(path.begin(), path.end());
    std::reverse(labels.begin(), labels.end());
  };

  if (all3(labels.begin(), labels.end())) return TypedComponent{{Family::A, n}, c, path};
  // B_n: a single 4 at one end.
  if (labels.back() == 4 && labels.front() != 4) flipped();
  if (labels.front() == 4 && all3(labels.begin() + 1, labels.end()))
    return TypedComponent{{Family::B, n}, c, path};
  if (n == 4 && labels == std::vector<int>{3, 4, 3}) return TypedComponent{{Family::F, 4}, c, path};
  if (labels.back() == 5 && labels.front() != 5) flipped();
  if ((n == 3 || n == 4) && labels.front() == 5 && all3(labels.begin() + 1, labels.end()))
    return TypedComponent{{Family::H, n}, c, path};
  return std::nullopt;
}

std::optional<TypedComponent> classify_branched(const CoxeterDiagram& d, GenSet c, int centre) {
  GenSet nb = d.linked(centre) & c;
  std::vector<std::vector<int>> arms;
  for (int v : nb.members()) arms.push_back(walk_arm(d, c, centre, v));
  // All labels 3 and every arm a simple chain ending in a leaf.
  int covered = 1;
  for (const auto& arm : arms) {
    int prev = centre;
    for (int v : arm) {
      if (label(d, prev, v) != 3) return std::nullopt;
      prev = v;
    }
    if ((d.linked(arm.back()) & c).size() != 1) return std::nullopt;
    covered += static_cast<int>(arm.size());
  }
  if (covered != c.size()) return std::nullopt;
  std::stable_sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  const std::size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
  const int n = c.size();
  if (p == 1 && q == 1) {
    std::vector<int> layout{arms[0][0], arms[1][0], centre};
    layout.insert(layout.end(), arms[2].begin(), arms[2].end());
    return TypedComponent{{Family::D, n}, c, layout};
  }
  if (p == 1 && q == 2 && r >= 2 && r <= 4) {
    std::vector<int> layout{centre, arms[0][0]};
    layout.insert(layout.end(), arms[1].begin(), arms[1].end());
    layout.insert(layout.end(), arms[2].begin(), arms[2].end());
    return TypedComponent{{Family::E, n}, c, layout};
  }
  return std::nullopt;
}

std::optional<TypedComponent> classify(const CoxeterDiagram& d, GenSet c) {
  const int n = c.size();
  int edges = 0;
  int branch = -1, branches = 0;
  bool has_infinite = false;
  c.for_each([&](int v) {
    const GenSet nb = d.linked(v) & c;
    edges += nb.size();
    nb.for_each([&](int w) { has_infinite |= d.order(v, w).is_infinite(); });
    if (nb.size() >= 3) {
      branch = v;
      ++branches;
    }
  });
  edges /= 2;
  if (has_infinite || edges != n - 1) return std::nullopt;
  if (n == 1) return TypedComponent{{Family::A, 1}, c, {c.lowest()}};
  if (n == 2) {
    const std::vector<int> mem = c.members();
    const int m = label(d, mem[0], mem[1]);
    if (m == 3) return TypedComponent{{Family::A, 2}, c, mem};
    if (m == 4) return TypedComponent{{Family::B, 2}, c, mem};
    return TypedComponent{{Family::I2, 2, m}, c, mem};
  }
  if (branches == 0) return classify_path(d, c);
  if (branches == 1 && (d.linked(branch) & c).size() == 3) return classify_branched(d, c, branch);
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<TypedComponent>> recognize(const CoxeterDiagram& d, GenSet t) {
  std::vector<TypedComponent> out;
  for (GenSet c : irreducible_components(d, t)) {
    auto tc = classify(d, c);
    if (!tc) return std::nullopt;
    out.push_back(std::move(*tc));
  }
  return out;
}

bool is_spherical(const CoxeterDiagram& d, GenSet t) { return recognize(d, t).has_value(); }

GenSet LongestAutomorphism::apply(GenSet s) const {
  GenSet out;
  s.for_each([&](int v) { out.insert(image[v]); });
  return out;
}

LongestAutomorphism longest_automorphism(const CoxeterDiagram& d, GenSet t) {
  auto comps = recognize(d, t);
  if (!comps) throw DomainError("longest_automorphism: subset is not spherical");
  LongestAutomorphism w{t, std::vector<int>(d.rank(), -1)};
  for (const auto& c : *comps) {
    const auto& l = c.layout;
    for (int v : l) w.image[v] = v;
    switch (c.type.family) {
      case Family::A:
        for (std::size_t i = 0; i < l.size(); ++i) w.image[l[i]] = l[l.size() - 1 - i];
        break;
      case Family::D:
        if (c.type.rank % 2 == 1) std::swap(w.image[l[0]], w.image[l[1]]);
        break;
      case Family::E:
        if (c.type.rank == 6) {
          // layout: centre, short arm, arm (2), arm (2)
          std::swap(w.image[l[2]], w.image[l[4]]);
          std::swap(w.image[l[3]], w.image[l[5]]);
        }
        break;
      case Family::I2:
        if (c.type.m % 2 == 1) std::swap(w.image[l[0]], w.image[l[1]]);
        break;
      case Family::B:
      case Family::F:
      case Family::H:
        break;
    }
  }
  return w;
}

std::vector<SphericalSubset> spherical_subsets(const CoxeterDiagram& d, std::optional<int> max_size,
                                               std::size_t max_count) {
  std::vector<SphericalSubset> out;
  const int n = d.rank();
  const int cap = max_size.value_or(n);
  // Depth-first over increasing index sequences; sphericity is hereditary,
  // so a non-spherical set prunes its whole subtree.
  auto rec = [&](auto&& self, GenSet cur, int next) -> void {
    if (out.size() >= max_count)
      throw CapacityError("more than " + std::to_string(max_count) + " spherical subsets");
    bool extendable = false;
    const std::size_t slot = out.size();
    out.push_back({cur, false});
    for (int v = 0; v < n; ++v) {
      if (cur.contains(v)) continue;
      const GenSet bigger = cur | GenSet::single(v);
      // Maximality looks at every generator, recursion only at larger ones.
      if (!is_spherical(d, bigger)) continue;
      extendable = true;
      if (v >= next && cur.size() < cap) self(self, bigger, v + 1);
    }
    out[slot].maximal = !extendable;
  };
  rec(rec, GenSet{}, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a.set, b.set); });
  return out;
}

}  // namespace coxtwist
