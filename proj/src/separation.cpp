#include "coxtwist/separation.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "coxtwist/errors.hpp"

namespace coxtwist {

std::vector<GenSet> normalized(std::vector<GenSet> sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

SeparationFamily SeparationFamily::of(std::vector<GenSet> blocks) {
  SeparationFamily f;
  f.blocks = normalized(std::move(blocks));
  return f;
}

namespace {

GenSet union_of(const std::vector<GenSet>& sets) {
  GenSet u;
  for (GenSet s : sets) u |= s;
  return u;
}

// Index of the single side containing `a - u`; -1 when it meets several
// sides or none.
int side_index(const std::vector<GenSet>& sides, GenSet u, GenSet a) {
  const GenSet rest = a - u;
  if (rest.empty()) return -1;
  for (std::size_t i = 0; i < sides.size(); ++i)
    if (rest.subset_of(sides[i])) return static_cast<int>(i);
  return -1;
}

std::vector<GenSet> blocks_in(const std::vector<GenSet>& blocks, GenSet comp) {
  std::vector<GenSet> out;
  for (GenSet b : blocks)
    if (b.subset_of(comp)) out.push_back(b);
  return out;
}

// Depth-first walk over sets of distinct blocks (bitmask over `blocks`)
// that extend by a block realising a maximal intersection with the prefix
// union. `visit(mask, union, next_index, intersection)` returns false to
// abort. `allowed` restricts which blocks may join; maximality is always
// measured against every remaining block.
template <typename Visit>
bool walk_chains(const std::vector<GenSet>& blocks, std::uint64_t allowed, std::size_t cap, Visit&& visit) {
  const std::size_t n = blocks.size();
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> stack;
  for (std::size_t i = 0; i < n; ++i)
    if ((allowed >> i) & 1u) stack.push_back(std::uint64_t{1} << i);
  while (!stack.empty()) {
    const std::uint64_t mask = stack.back();
    stack.pop_back();
    if (!seen.insert(mask).second) continue;
    if (seen.size() > cap) throw CapacityError("block-chain enumeration exceeded " + std::to_string(cap) + " states");
    GenSet prefix;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) prefix |= blocks[i];
    std::vector<std::pair<std::size_t, GenSet>> cands;
    for (std::size_t i = 0; i < n; ++i)
      if (!((mask >> i) & 1u)) cands.emplace_back(i, prefix & blocks[i]);
    for (const auto& [i, inter] : cands) {
      bool maximal = true;
      for (const auto& [k, other] : cands)
        if (inter != other && inter.subset_of(other)) maximal = false;
      if (!maximal || !((allowed >> i) & 1u)) continue;
      if (!visit(mask, prefix, i, inter)) return false;
      stack.push_back(mask | (std::uint64_t{1} << i));
    }
  }
  return true;
}

}  // namespace

SeparationContext::SeparationContext(const CoxeterDiagram& d, SearchLimits lim)
    : d_(&d), lim_(lim), comps_(coxtwist::components(d, d.all())) {}

GenSet SeparationContext::component_of(GenSet u) const {
  if (u.empty()) return {};
  for (GenSet c : comps_)
    if (u.subset_of(c)) return c;
  return {};
}

std::vector<GenSet> SeparationContext::sides(GenSet u) const {
  const GenSet comp = component_of(u);
  if (comp.empty()) return {};
  return coxtwist::components(*d_, comp - u);
}

bool SeparationContext::separates(GenSet u) const { return sides(u).size() >= 2; }

const std::vector<GenSet>& SeparationContext::separating_products() const {
  if (seps_) return *seps_;
  std::vector<GenSet> out;
  for (GenSet comp : comps_) {
    if (comp.size() > lim_.max_exhaustive_rank)
      throw CapacityError("component of rank " + std::to_string(comp.size()) +
                          " exceeds the exhaustive-search bound " + std::to_string(lim_.max_exhaustive_rank));
    const std::uint64_t full = comp.bits();
    for (std::uint64_t sub = full; sub; sub = (sub - 1) & full) {
      const GenSet u(sub);
      if (separates(u) && is_spherical_product(*d_, u)) out.push_back(u);
    }
  }
  seps_ = normalized(std::move(out));
  return *seps_;
}

bool SeparationContext::is_twist_rigid(GenSet a) const {
  if (a.empty() || !is_connected(*d_, a)) return false;
  for (GenSet u : separating_products())
    if (coxtwist::components(*d_, a - u).size() >= 2) return false;
  return true;
}

const std::vector<GenSet>& SeparationContext::atoms() const {
  if (atoms_) return *atoms_;
  const auto& seps = separating_products();
  std::vector<GenSet> cands = comps_;
  while (true) {
    std::vector<GenSet> next;
    for (GenSet p : cands) {
      bool split = false;
      for (GenSet u : seps) {
        const auto parts = coxtwist::components(*d_, p - u);
        if (parts.size() < 2) continue;
        for (GenSet part : parts)
          for (GenSet piece : coxtwist::components(*d_, part | (u & p))) next.push_back(piece);
        split = true;
        break;
      }
      if (!split) next.push_back(p);
    }
    next = normalized(std::move(next));
    std::vector<GenSet> maximal;
    for (GenSet a : next) {
      bool dominated = false;
      for (GenSet b : next)
        if (a != b && a.subset_of(b)) dominated = true;
      if (!dominated) maximal.push_back(a);
    }
    if (maximal == cands) break;
    cands = std::move(maximal);
  }
  atoms_ = std::move(cands);
  return *atoms_;
}

bool SeparationContext::satisfies_covering(const std::vector<GenSet>& blocks) const {
  if (union_of(blocks) != d_->all()) return false;
  const auto& at = atoms();
  for (GenSet b : blocks) {
    if (b.empty() || !is_connected(*d_, b)) return false;
    GenSet covered;
    for (GenSet a : at)
      if (a.subset_of(b)) covered |= a;
    if (covered != b) return false;
  }
  for (GenSet a : at) {
    int holders = 0;
    for (GenSet b : blocks)
      if (a.subset_of(b)) ++holders;
    if (holders != 1) return false;
  }
  return true;
}

bool SeparationContext::is_separator(GenSet u, const std::vector<GenSet>& all_blocks) const {
  if (!is_spherical_product(*d_, u)) return false;
  const auto sd = sides(u);
  if (sd.size() < 2) return false;
  const GenSet comp = component_of(u);
  const std::vector<GenSet> blocks = blocks_in(all_blocks, comp);
  const std::size_t t = sd.size();

  // (iii)
  std::vector<int> where(blocks.size());
  std::vector<GenSet> xbar(t);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    where[i] = side_index(sd, u, blocks[i]);
    if (where[i] < 0) return false;
    xbar[where[i]] |= blocks[i];
  }
  // (iv)
  bool found = false;
  for (std::size_t i = 0; i < blocks.size() && !found; ++i)
    for (std::size_t k = i + 1; k < blocks.size() && !found; ++k)
      if (where[i] != where[k] && (blocks[i] & blocks[k]) == u) found = true;
  if (!found) return false;
  // (v)
  for (std::size_t j = 0; j < t; ++j) {
    const GenSet target = u & xbar[j];
    if (target.empty()) continue;
    std::uint64_t allowed = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (where[i] == static_cast<int>(j) && !target.subset_of(blocks[i])) allowed |= std::uint64_t{1} << i;
    bool violated = false;
    walk_chains(blocks, allowed, lim_.max_chain_states, [&](std::uint64_t, GenSet prefix, std::size_t i, GenSet) {
      if (target.subset_of(prefix | blocks[i])) violated = true;
      return !violated;
    });
    if (violated) return false;
  }
  return true;
}

bool SeparationContext::component_separation(const std::vector<GenSet>& blocks) const {
  if (blocks.empty()) return false;
  std::unordered_map<GenSet, bool> sep_cache;
  std::unordered_map<GenSet, std::vector<GenSet>> side_cache;
  const std::uint64_t allowed = blocks.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << blocks.size()) - 1;
  return walk_chains(blocks, allowed, lim_.max_chain_states, [&](std::uint64_t, GenSet prefix, std::size_t i, GenSet ui) {
    auto it = sep_cache.find(ui);
    if (it == sep_cache.end()) it = sep_cache.emplace(ui, is_separator(ui, blocks)).first;
    if (!it->second) return false;
    auto sit = side_cache.find(ui);
    if (sit == side_cache.end()) sit = side_cache.emplace(ui, sides(ui)).first;
    // (4)(b): the new block sits on one side of U_i and the prefix stays
    // off that side. Requiring the whole prefix on a single side would
    // reject a star of three blocks around one U_i.
    const int j2 = side_index(sit->second, ui, blocks[i]);
    return j2 >= 0 && !(prefix - ui).empty() && !prefix.intersects(sit->second[j2]);
  });
}

bool SeparationContext::is_separation(const std::vector<GenSet>& blocks) const {
  if (!satisfies_covering(blocks)) return false;
  std::size_t placed = 0;
  for (GenSet comp : comps_) {
    const auto mine = blocks_in(blocks, comp);
    placed += mine.size();
    if (!component_separation(mine)) return false;
  }
  return placed == normalized(blocks).size();
}

SeparationFamily SeparationContext::induced_separation(GenSet u) const {
  if (!separates(u) || !is_spherical_product(*d_, u))
    throw DomainError("induced_separation: U must be a separating spherical-product subset");
  const GenSet comp = component_of(u);
  const auto sd = sides(u);
  std::vector<GenSet> blocks(sd.size());
  GenSet ybar;
  for (GenSet a : atoms()) {
    if (!a.subset_of(comp)) continue;
    if (a.subset_of(u)) {
      ybar |= a;
      continue;
    }
    const int j = side_index(sd, u, a);
    if (j < 0) throw InvariantError("maximal twist-rigid subset split by a separating spherical product");
    blocks[j] |= a;
  }
  if (!ybar.empty()) blocks.push_back(ybar);
  // Other components stay whole; {C} is always a separation of C.
  std::vector<GenSet> out = blocks;
  for (GenSet c : comps_)
    if (c != comp) out.push_back(c);
  SeparationFamily f = SeparationFamily::of(std::move(out));
  if (!is_separation(f.blocks))
    throw InvariantError("induced separation by {" + [&] {
      std::string s;
      for (const auto& nm : d_->names_of(u)) s += (s.empty() ? "" : ",") + nm;
      return s;
    }() + "} is not a separation");
  f.verified = true;
  return f;
}

std::vector<std::vector<GenSet>> SeparationContext::component_separations(GenSet comp, bool minimal_only) const {
  const std::vector<GenSet> at = blocks_in(atoms(), comp);
  const int k = static_cast<int>(at.size());
  if (k > lim_.max_partition_atoms)
    throw CapacityError(std::to_string(k) + " maximal twist-rigid subsets exceed the partition bound " +
                        std::to_string(lim_.max_partition_atoms));
  std::vector<std::vector<GenSet>> valid;
  // Restricted growth strings enumerate set partitions of the atoms.
  std::vector<int> rgs(k, 0);
  auto emit = [&](int cells) {
    std::vector<GenSet> blocks(cells);
    for (int i = 0; i < k; ++i) blocks[rgs[i]] |= at[i];
    for (GenSet b : blocks)
      if (!is_connected(*d_, b)) return;
    // Distinct cells may coincide as sets or nest; (3) rejects that.
    for (int i = 0; i < k; ++i) {
      int holders = 0;
      for (GenSet b : blocks)
        if (at[i].subset_of(b)) ++holders;
      if (holders != 1) return;
    }
    if (component_separation(blocks)) valid.push_back(normalized(blocks));
  };
  auto rec = [&](auto&& self, int i, int cells) -> void {
    if (i == k) {
      emit(cells);
      return;
    }
    for (int c = 0; c <= cells; ++c) {
      rgs[i] = c;
      self(self, i + 1, std::max(cells, c + 1));
    }
  };
  if (k > 0) {
    rgs[0] = 0;
    rec(rec, 1, 1);
  }
  if (!minimal_only) return valid;
  std::vector<std::vector<GenSet>> minimal;
  for (const auto& f : valid) {
    bool dominated = false;
    for (const auto& g : valid)
      if (g != f && preceq(SeparationFamily::of(g), SeparationFamily::of(f))) dominated = true;
    if (!dominated) minimal.push_back(f);
  }
  return minimal;
}

std::vector<SeparationFamily> SeparationContext::combine(
    const std::vector<std::vector<std::vector<GenSet>>>& per) const {
  std::size_t total = 1;
  for (const auto& p : per) {
    if (p.empty()) return {};
    total *= p.size();
    if (total > lim_.max_separations)
      throw CapacityError("more than " + std::to_string(lim_.max_separations) + " separations");
  }
  std::vector<SeparationFamily> out;
  std::vector<std::size_t> idx(per.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<GenSet> blocks;
    std::size_t r = n;
    for (std::size_t c = 0; c < per.size(); ++c) {
      const auto& pick = per[c][r % per[c].size()];
      r /= per[c].size();
      blocks.insert(blocks.end(), pick.begin(), pick.end());
    }
    SeparationFamily f = SeparationFamily::of(std::move(blocks));
    f.verified = true;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.blocks.begin(), a.blocks.end(), b.blocks.begin(), b.blocks.end(), lex_less);
  });
  return out;
}

std::vector<SeparationFamily> SeparationContext::minimal_separations() const {
  std::vector<std::vector<std::vector<GenSet>>> per;
  for (GenSet c : comps_) per.push_back(component_separations(c, true));
  return combine(per);
}

std::vector<SeparationFamily> SeparationContext::all_separations() const {
  std::vector<std::vector<std::vector<GenSet>>> per;
  for (GenSet c : comps_) per.push_back(component_separations(c, false));
  return combine(per);
}

// Free-function front ends.

std::vector<GenSet> sides(const CoxeterDiagram& d, GenSet u) { return SeparationContext(d).sides(u); }

bool separates(const CoxeterDiagram& d, GenSet u) { return SeparationContext(d).separates(u); }

bool separates_block(const CoxeterDiagram& d, GenSet u, GenSet block) {
  const auto sd = sides(d, u);
  if (sd.empty()) return false;
  return side_index(sd, u, block) < 0 && !block.subset_of(u);
}

bool separates_pair(const CoxeterDiagram& d, GenSet u, GenSet a, GenSet b) {
  const auto sd = sides(d, u);
  if (sd.size() < 2) return false;
  // A set inside U sits on every side.
  auto fits = [&](GenSet x, std::size_t j) { return (x - u).subset_of(sd[j]); };
  for (std::size_t i = 0; i < sd.size(); ++i)
    for (std::size_t j = 0; j < sd.size(); ++j)
      if (i != j && fits(a, i) && fits(b, j)) return true;
  return false;
}

std::vector<GenSet> separating_spherical_products(const CoxeterDiagram& d, const SearchLimits& lim) {
  return SeparationContext(d, lim).separating_products();
}

bool is_twist_rigid_subset(const CoxeterDiagram& d, GenSet a, const SearchLimits& lim) {
  return SeparationContext(d, lim).is_twist_rigid(a);
}

std::vector<GenSet> maximal_twist_rigid_subsets(const CoxeterDiagram& d, const SearchLimits& lim) {
  return SeparationContext(d, lim).atoms();
}

bool satisfies_covering(const CoxeterDiagram& d, const SeparationFamily& f, const SearchLimits& lim) {
  return SeparationContext(d, lim).satisfies_covering(f.blocks);
}

bool is_separator(const CoxeterDiagram& d, GenSet u, const SeparationFamily& f, const SearchLimits& lim) {
  SeparationContext ctx(d, lim);
  if (!ctx.satisfies_covering(f.blocks))
    throw DomainError("is_separator: family violates the covering conditions");
  return ctx.is_separator(u, f.blocks);
}

bool is_separation(const CoxeterDiagram& d, const SeparationFamily& f, const SearchLimits& lim) {
  return SeparationContext(d, lim).is_separation(f.blocks);
}

SeparationFamily induced_separation(const CoxeterDiagram& d, GenSet u, const SearchLimits& lim) {
  return SeparationContext(d, lim).induced_separation(u);
}

bool preceq(const SeparationFamily& lo, const SeparationFamily& hi) {
  return std::all_of(lo.blocks.begin(), lo.blocks.end(), [&](GenSet a) {
    return std::any_of(hi.blocks.begin(), hi.blocks.end(), [&](GenSet b) { return a.subset_of(b); });
  });
}

std::vector<SeparationFamily> minimal_separations(const CoxeterDiagram& d, const SearchLimits& lim) {
  return SeparationContext(d, lim).minimal_separations();
}

std::vector<SeparationFamily> all_separations(const CoxeterDiagram& d, const SearchLimits& lim) {
  return SeparationContext(d, lim).all_separations();
}

std::vector<OrderedChain> ordering_chains(const SeparationFamily& f, bool first_only, std::optional<GenSet> start,
                                          std::size_t max_chains) {
  const auto& b = f.blocks;
  const std::size_t n = b.size();
  std::vector<OrderedChain> out;
  if (n == 0) return out;
  OrderedChain cur;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, GenSet prefix) -> bool {
    if (cur.sequence.size() == n) {
      out.push_back(cur);
      return !(first_only || out.size() >= max_chains);
    }
    std::vector<GenSet> inter(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) inter[i] = prefix & b[i];
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool maximal = true;
      for (std::size_t k = 0; k < n; ++k)
        if (!used[k] && inter[i] != inter[k] && inter[i].subset_of(inter[k])) maximal = false;
      if (!maximal) continue;
      used[i] = true;
      cur.sequence.push_back(b[i]);
      cur.intersections.push_back(inter[i]);
      const bool go_on = self(self, prefix | b[i]);
      cur.sequence.pop_back();
      cur.intersections.pop_back();
      used[i] = false;
      if (!go_on) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (start && b[i] != *start) continue;
    used[i] = true;
    cur.sequence = {b[i]};
    cur.intersections.clear();
    const bool go_on = rec(rec, b[i]);
    used[i] = false;
    if (!go_on) break;
  }
  return out;
}

}  // namespace coxtwist
