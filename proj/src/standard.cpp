#include "coxtwist/standard.hpp"

#include <algorithm>
#include <numeric>

#include "coxtwist/errors.hpp"

namespace coxtwist {

std::vector<GenSet> ubar(const SeparationContext& ctx, const std::vector<SeparationFamily>& minimal) {
  std::vector<GenSet> out;
  if (minimal.empty()) return out;
  for (GenSet u : ctx.separating_products()) {
    const bool everywhere = std::all_of(minimal.begin(), minimal.end(),
                                        [&](const SeparationFamily& f) { return ctx.is_separator(u, f.blocks); });
    if (everywhere) out.push_back(u);
  }
  return out;
}

std::vector<GenSet> ubar(const CoxeterDiagram& d, const SearchLimits& lim) {
  SeparationContext ctx(d, lim);
  return ubar(ctx, ctx.minimal_separations());
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

StandardSeparation standard_separation(const SeparationContext& ctx) {
  const CoxeterDiagram& d = ctx.diagram();
  StandardSeparation out;
  out.minimal = ctx.minimal_separations();
  out.ubar = ubar(ctx, out.minimal);

  const auto& at = ctx.atoms();
  const int k = static_cast<int>(at.size());
  std::vector<std::vector<bool>> related(k, std::vector<bool>(k, false));
  for (const auto& f : out.minimal)
    for (GenSet b : f.blocks)
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (at[i].subset_of(b) && at[j].subset_of(b)) related[i][j] = true;

  UnionFind uf(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (related[i][j]) uf.unite(i, j);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (uf.find(i) == uf.find(j) && !related[i][j]) out.closure_added_pairs = true;

  // Cross-check against the ubar phrasing, within each component.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (ctx.component_of(at[i] | at[j]).empty()) continue;
      const bool apart = std::any_of(out.ubar.begin(), out.ubar.end(),
                                     [&](GenSet u) { return separates_pair(d, u, at[i], at[j]); });
      if (apart == (uf.find(i) == uf.find(j))) out.phrasing_disagreements.emplace_back(at[i], at[j]);
    }

  std::vector<GenSet> classes(k);
  for (int i = 0; i < k; ++i) classes[uf.find(i)] |= at[i];
  std::vector<GenSet> blocks;
  for (GenSet c : classes)
    if (!c.empty()) blocks.push_back(c);
  out.family = SeparationFamily::of(std::move(blocks));

  for (GenSet b : out.family.blocks) {
    const bool everywhere = std::all_of(out.minimal.begin(), out.minimal.end(), [&](const SeparationFamily& f) {
      return std::find(f.blocks.begin(), f.blocks.end(), b) != f.blocks.end();
    });
    (everywhere ? out.type1 : out.type2).push_back(b);
  }

  // Blocks common to every minimal separation, computed directly.
  std::vector<GenSet> common;
  if (!out.minimal.empty())
    for (GenSet b : out.minimal.front().blocks)
      if (std::all_of(out.minimal.begin(), out.minimal.end(), [&](const SeparationFamily& f) {
            return std::find(f.blocks.begin(), f.blocks.end(), b) != f.blocks.end();
          }))
        common.push_back(b);
  if (normalized(common) != out.type1) throw InvariantError("type(I) blocks disagree with the common minimal blocks");

  if (!ctx.is_separation(out.family.blocks)) throw InvariantError("standard separation is not a separation");
  out.family.verified = true;
  out.family.separators = ubar(ctx, {out.family});
  return out;
}

StandardSeparation standard_separation(const CoxeterDiagram& d, const SearchLimits& lim) {
  SeparationContext ctx(d, lim);
  return standard_separation(ctx);
}

}  // namespace coxtwist
