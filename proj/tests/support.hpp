#pragma once

// Shared helpers for the test binaries: fixture access, set conversion,
// random diagrams and brute-force oracles written directly from the
// definitions (they share nothing with the library beyond the diagram type
// and the finiteness test for W_T).

#include <algorithm>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coxtwist/errors.hpp"
#include "coxtwist/io.hpp"
#include "coxtwist/separation.hpp"
#include "coxtwist/sphericity.hpp"

namespace testsupport {

using namespace coxtwist;

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

inline DiagramDocument fixture(const std::string& name) { return load_document(fixture_path(name)); }

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(FIXTURE_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

inline GenSet gs(const CoxeterDiagram& d, const Json& names) { return d.set_of(names.get<std::vector<std::string>>()); }

inline GenSet gs(const CoxeterDiagram& d, std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return d.set_of(v);
}

inline std::vector<GenSet> gsets(const CoxeterDiagram& d, const Json& list) {
  std::vector<GenSet> out;
  for (const auto& s : list) out.push_back(gs(d, s));
  return normalized(out);
}

inline std::string diagram_text(const CoxeterDiagram& d) { return diagram_json(d).dump(); }

/// Families as comparable bitmask lists, for order-free comparison.
using FamilyKey = std::vector<std::uint64_t>;

inline FamilyKey family_key(const std::vector<GenSet>& blocks) {
  FamilyKey k;
  for (GenSet b : normalized(blocks)) k.push_back(b.bits());
  return k;
}

inline std::set<FamilyKey> families(const std::vector<SeparationFamily>& fs) {
  std::set<FamilyKey> out;
  for (const auto& f : fs) out.insert(family_key(f.blocks));
  return out;
}

/// Connected diagram on `rank` generators: a random spanning tree with
/// finite labels, then every other pair infinite with probability `p_inf`
/// and otherwise a finite label from `labels`.
inline CoxeterDiagram random_connected(std::mt19937& rng, int rank, double p_inf = 0.5,
                                       const std::vector<int>& labels = {2, 3, 4, 5}) {
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i) names.push_back("s" + std::to_string(i));
  std::vector<Order> m(static_cast<std::size_t>(rank) * rank, Order::finite(1));
  auto finite = [&] { return Order::finite(labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)]); };
  std::bernoulli_distribution inf(p_inf);
  for (int i = 0; i < rank; ++i)
    for (int k = i + 1; k < rank; ++k) m[i * rank + k] = m[k * rank + i] = inf(rng) ? Order::infinite() : finite();
  std::vector<int> perm(rank);
  for (int i = 0; i < rank; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 1; i < rank; ++i) {
    const int a = perm[i], b = perm[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    if (m[a * rank + b].is_infinite()) m[a * rank + b] = m[b * rank + a] = finite();
  }
  return CoxeterDiagram::from_matrix(names, m);
}

// ---- brute force ---------------------------------------------------------

inline std::vector<GenSet> all_subsets(const CoxeterDiagram& d) {
  std::vector<GenSet> out;
  const std::uint64_t n = std::uint64_t{1} << d.rank();
  for (std::uint64_t b = 1; b < n; ++b) out.emplace_back(b);
  return out;
}

/// Nerve components of t, by flood fill over the order matrix.
inline std::vector<GenSet> bf_components(const CoxeterDiagram& d, GenSet t) {
  std::vector<GenSet> out;
  GenSet left = t;
  while (!left.empty()) {
    GenSet comp = GenSet::single(left.lowest()), frontier = comp;
    while (!frontier.empty()) {
      GenSet next;
      frontier.for_each([&](int s) {
        left.for_each([&](int u) {
          if (!comp.contains(u) && d.order(s, u).is_finite()) next.insert(u);
        });
      });
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

inline bool bf_separates(const CoxeterDiagram& d, GenSet u) {
  return bf_components(d, d.all()).size() == 1 && !u.empty() && bf_components(d, d.all() - u).size() >= 2;
}

/// U non-empty and U ⊆ sigma ∪ sigma-perp for some non-empty spherical sigma,
/// trying every sigma.
inline bool bf_spherical_product(const CoxeterDiagram& d, GenSet u, const std::vector<GenSet>& spherical) {
  if (u.empty()) return false;
  for (GenSet sigma : spherical) {
    bool ok = true;
    (u - sigma).for_each([&](int x) {
      sigma.for_each([&](int s) {
        if (d.order(x, s) != Order::finite(2)) ok = false;
      });
    });
    if (ok) return true;
  }
  return false;
}

inline std::vector<GenSet> bf_spherical(const CoxeterDiagram& d) {
  std::vector<GenSet> out;
  for (GenSet t : all_subsets(d))
    if (is_spherical(d, t)) out.push_back(t);
  return out;
}

inline std::vector<GenSet> bf_separating_products(const CoxeterDiagram& d) {
  const auto sph = bf_spherical(d);
  std::vector<GenSet> out;
  for (GenSet u : all_subsets(d))
    if (bf_separates(d, u) && bf_spherical_product(d, u, sph)) out.push_back(u);
  return normalized(out);
}

/// A is connected and no separating spherical product U leaves A - U with
/// two or more components inside A.
inline bool bf_twist_rigid(const CoxeterDiagram& d, GenSet a, const std::vector<GenSet>& seps) {
  if (a.empty() || bf_components(d, a).size() != 1) return false;
  for (GenSet u : seps)
    if (bf_components(d, a - u).size() >= 2) return false;
  return true;
}

inline std::vector<GenSet> bf_maximal_twist_rigid(const CoxeterDiagram& d) {
  const auto seps = bf_separating_products(d);
  std::vector<GenSet> rigid;
  for (GenSet a : all_subsets(d))
    if (bf_twist_rigid(d, a, seps)) rigid.push_back(a);
  std::vector<GenSet> out;
  for (GenSet a : rigid) {
    bool maximal = true;
    for (GenSet b : rigid)
      if (a != b && a.subset_of(b)) maximal = false;
    if (maximal) out.push_back(a);
  }
  return normalized(out);
}

// ---- separations, literally ----------------------------------------------
// Connected S only. Chains are enumerated as sequences of distinct blocks in
// which each new intersection is maximal among those with the remaining
// blocks; (4)(b) uses the same amalgam reading as the library.

inline GenSet bf_union(const std::vector<GenSet>& v) {
  GenSet u;
  for (GenSet x : v) u |= x;
  return u;
}

/// Extends `seq` (indices into blocks, with union `prefix`) by every block
/// whose intersection with the prefix is maximal; `visit(seq, prefix, next, inter)`
/// returning false aborts. `ok(i)` restricts which blocks may be appended.
template <typename Ok, typename Visit>
bool bf_chains(const std::vector<GenSet>& blocks, std::vector<int>& seq, GenSet prefix, Ok&& ok, Visit&& visit) {
  std::vector<bool> used(blocks.size());
  for (int i : seq) used[i] = true;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (used[i] || !ok(i)) continue;
    const GenSet inter = prefix & blocks[i];
    bool maximal = true;
    for (std::size_t k = 0; k < blocks.size(); ++k)
      if (!used[k] && (prefix & blocks[k]) != inter && inter.subset_of(prefix & blocks[k])) maximal = false;
    if (!maximal) continue;
    if (!visit(seq, prefix, static_cast<int>(i), inter)) return false;
    seq.push_back(static_cast<int>(i));
    const bool go = bf_chains(blocks, seq, prefix | blocks[i], ok, visit);
    seq.pop_back();
    if (!go) return false;
  }
  return true;
}

inline bool bf_separator(const CoxeterDiagram& d, GenSet u, const std::vector<GenSet>& blocks,
                         const std::vector<GenSet>& seps) {
  if (std::find(seps.begin(), seps.end(), u) == seps.end()) return false;  // (i), (ii)
  const auto xs = bf_components(d, d.all() - u);
  std::vector<GenSet> xbar(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (GenSet a : blocks)
      if (a.subset_of(xs[j] | u)) xbar[j] |= a;
  std::vector<int> side(blocks.size(), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {  // (iii)
    int n = 0;
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (blocks[i].subset_of(xbar[j])) ++n, side[i] = static_cast<int>(j);
    if (n != 1) return false;
  }
  bool iv = false;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t k = 0; k < blocks.size(); ++k)
      if (side[i] != side[k] && (blocks[i] & blocks[k]) == u) iv = true;
  if (!iv) return false;
  for (std::size_t j = 0; j < xs.size(); ++j) {  // (v)
    const GenSet target = u & xbar[j];
    auto on_side = [&](std::size_t i) { return blocks[i].subset_of(xbar[j]); };
    std::vector<int> seq;
    bool fine = true;
    for (std::size_t s = 0; s < blocks.size() && fine; ++s) {
      if (!on_side(s)) continue;
      seq = {static_cast<int>(s)};
      auto check = [&](const std::vector<int>& q) {
        GenSet all;
        bool holds = false;
        for (int i : q) {
          all |= blocks[i];
          if (target.subset_of(blocks[i])) holds = true;
        }
        return !target.subset_of(all) || holds;
      };
      if (!check(seq)) fine = false;
      if (fine)
        fine = bf_chains(blocks, seq, blocks[s], on_side, [&](const std::vector<int>& q, GenSet, int next, GenSet) {
          auto q2 = q;
          q2.push_back(next);
          return check(q2);
        });
    }
    if (!fine) return false;
  }
  return true;
}

inline bool bf_is_separation(const CoxeterDiagram& d, const std::vector<GenSet>& blocks,
                             const std::vector<GenSet>& atoms, const std::vector<GenSet>& seps) {
  if (bf_union(blocks) != d.all()) return false;  // (1)
  for (GenSet b : blocks) {                        // (2)
    if (b.empty() || bf_components(d, b).size() != 1) return false;
    GenSet covered;
    for (GenSet a : atoms)
      if (a.subset_of(b)) covered |= a;
    if (covered != b) return false;
  }
  for (GenSet a : atoms) {  // (3)
    int n = 0;
    for (GenSet b : blocks) n += a.subset_of(b);
    if (n != 1) return false;
  }
  std::vector<int> seq;
  for (std::size_t s = 0; s < blocks.size(); ++s) {  // (4)
    seq = {static_cast<int>(s)};
    const bool ok = bf_chains(
        blocks, seq, blocks[s], [](std::size_t) { return true; },
        [&](const std::vector<int>&, GenSet prefix, int next, GenSet ui) {
          if (!bf_separator(d, ui, blocks, seps)) return false;
          const auto xs = bf_components(d, d.all() - ui);
          for (GenSet x : xs)
            if ((blocks[next] - ui).subset_of(x)) return !(prefix - ui).empty() && !prefix.intersects(x);
          return false;
        });
    if (!ok) return false;
  }
  return true;
}

/// Minimal separations by trying every partition of the atoms.
inline std::vector<FamilyKey> bf_minimal_separations(const CoxeterDiagram& d) {
  const auto atoms = bf_maximal_twist_rigid(d);
  const auto seps = bf_separating_products(d);
  std::vector<std::vector<GenSet>> valid;
  std::vector<int> rgs(atoms.size(), 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int top) {
    if (i == atoms.size()) {
      std::vector<GenSet> blocks(static_cast<std::size_t>(top) + 1);
      for (std::size_t k = 0; k < atoms.size(); ++k) blocks[rgs[k]] |= atoms[k];
      if (bf_is_separation(d, blocks, atoms, seps)) valid.push_back(normalized(blocks));
      return;
    }
    for (int b = 0; b <= top + 1; ++b) {
      rgs[i] = b;
      go(i + 1, std::max(top, b));
    }
  };
  if (!atoms.empty()) {
    rgs[0] = 0;
    go(1, 0);
  }
  auto below = [](const std::vector<GenSet>& lo, const std::vector<GenSet>& hi) {
    return std::all_of(lo.begin(), lo.end(), [&](GenSet a) {
      return std::any_of(hi.begin(), hi.end(), [&](GenSet b) { return a.subset_of(b); });
    });
  };
  std::set<FamilyKey> out;
  for (const auto& f : valid) {
    bool minimal = true;
    for (const auto& g : valid)
      if (g != f && below(g, f)) minimal = false;
    if (minimal) out.insert(family_key(f));
  }
  return {out.begin(), out.end()};
}

}  // namespace testsupport
