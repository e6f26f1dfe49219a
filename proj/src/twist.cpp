#include "coxtwist/twist.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "coxtwist/errors.hpp"
#include "coxtwist/sphericity.hpp"
#include "coxtwist/standard.hpp"

namespace coxtwist {

namespace {

GenSet bonded_to(const CoxeterDiagram& d, GenSet s) {
  GenSet out;
  s.for_each([&](int v) { out |= d.bonded(v); });
  return out;
}

std::vector<int> identity_on(const CoxeterDiagram& d, GenSet u) {
  std::vector<int> p(d.rank(), -1);
  u.for_each([&](int a) { p[a] = a; });
  return p;
}

}  // namespace

TwistMove elementary_move(const CoxeterDiagram& d, GenSet u, GenSet y) {
  if (u.empty() || !u.subset_of(d.all())) throw DomainError("U must be a non-empty subset of S");
  TwistMove m;
  m.u = u;
  m.y = y;
  m.x = d.all() - u - y;
  m.pi = identity_on(d, u);
  const auto split = sigma_nu_split(d, u);
  if (!split.sigma.empty()) {
    m.sigma = split.sigma;
    const auto w = longest_automorphism(d, split.sigma);
    split.sigma.for_each([&](int a) { m.pi[a] = w(a); });
  } else {
    const GenSet outside = perp(d, u) - u;
    if (outside.empty()) throw DomainError("U is not a spherical product: no generator commutes with all of U");
    m.sigma = GenSet::single(outside.lowest());
  }
  validate_move(d, m);
  return m;
}

void validate_move(const CoxeterDiagram& d, const TwistMove& m) {
  const GenSet s = d.all();
  if (m.u.empty() || !m.u.subset_of(s)) throw DomainError("U must be a non-empty subset of S");
  if (m.x.empty() || m.y.empty()) throw DomainError("X and Y must both be non-empty");
  if (m.x.intersects(m.y) || m.x.intersects(m.u) || m.y.intersects(m.u) || (m.x | m.y | m.u) != s)
    throw DomainError("X and Y must partition S - U");
  if (bonded_to(d, m.x).intersects(m.y)) throw DomainError("U does not separate X from Y");
  // disconnected S: U has to separate the one component it lies in
  GenSet home;
  int meeting = 0;
  for (GenSet c : components(d, s))
    if (c.intersects(m.u)) home = c, ++meeting;
  if (meeting != 1 || !m.y.subset_of(home) || !m.x.intersects(home))
    throw DomainError("U does not separate its connected component of S");
  if (!is_spherical_product(d, m.u)) throw DomainError("U is not a spherical product");
  if (static_cast<int>(m.pi.size()) != d.rank()) throw DomainError("pi has the wrong length");

  GenSet image;
  for (int v = 0; v < d.rank(); ++v) {
    if (m.u.contains(v) != (m.pi[v] >= 0)) throw DomainError("pi must be defined exactly on U");
    if (m.pi[v] >= 0) {
      if (!m.u.contains(m.pi[v])) throw DomainError("pi must map U into U");
      image.insert(m.pi[v]);
    }
  }
  if (image != m.u) throw DomainError("pi is not a bijection of U");
  m.u.for_each([&](int a) {
    m.u.for_each([&](int b) {
      if (d.order(a, b) != d.order(m.pi[a], m.pi[b])) throw DomainError("pi does not preserve the diagram on U");
    });
  });

  const auto split = sigma_nu_split(d, m.u);
  auto maps_onto = [&](GenSet part) {
    GenSet img;
    part.for_each([&](int a) { img.insert(m.pi[a]); });
    return img == part;
  };
  if (m.general) {
    if (!maps_onto(split.sigma) || !maps_onto(split.nu)) throw DomainError("pi must keep U_sigma and U_nu in place");
    return;
  }
  if (!split.sigma.empty()) {
    if (m.sigma != split.sigma) throw DomainError("sigma must be U_sigma");
    const auto w = longest_automorphism(d, split.sigma);
    m.u.for_each([&](int a) {
      const int want = split.sigma.contains(a) ? w(a) : a;
      if (m.pi[a] != want) throw DomainError("pi must be omega_sigma on U_sigma and the identity on U_nu");
    });
  } else {
    if (m.sigma.size() != 1 || m.sigma.intersects(m.u) || !m.sigma.subset_of(perp(d, m.u)))
      throw DomainError("with U_sigma empty, sigma must be one generator commuting with all of U");
    if (!is_trivial(m)) throw DomainError("with U_sigma empty, pi must be the identity");
  }
}

bool is_trivial(const TwistMove& m) {
  for (std::size_t v = 0; v < m.pi.size(); ++v)
    if (m.pi[v] >= 0 && m.pi[v] != static_cast<int>(v)) return false;
  return true;
}

Twisted apply_twist(const CoxeterDiagram& d, const TwistMove& m) {
  validate_move(d, m);
  const int n = d.rank();
  std::vector<std::string> names = d.names();
  Twisted out{d, {}};
  std::set<std::string> taken(names.begin(), names.end());
  m.y.for_each([&](int v) {
    std::string fresh = names[v] + "'";
    while (taken.count(fresh)) fresh += "'";
    taken.insert(fresh);
    out.provenance[fresh] = names[v];
    names[v] = fresh;
  });
  std::vector<int> inv(n, -1);
  m.u.for_each([&](int a) { inv[m.pi[a]] = a; });
  std::vector<Order> orders(static_cast<std::size_t>(n) * n, Order::infinite());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Order o = d.order(i, k);
      if (m.y.contains(i) && m.u.contains(k)) o = d.order(i, inv[k]);
      if (m.u.contains(i) && m.y.contains(k)) o = d.order(inv[i], k);
      orders[static_cast<std::size_t>(i) * n + k] = o;
    }
  out.diagram = CoxeterDiagram::from_matrix(names, orders);
  return out;
}

bool preserves_family(const TwistMove& m, const std::vector<GenSet>& f) {
  return std::all_of(f.begin(), f.end(), [&](GenSet a) { return a.subset_of(m.x | m.u) || a.subset_of(m.y | m.u); });
}

GenSet twist_image(const TwistMove& m, GenSet a) {
  if (a.subset_of(m.x | m.u) || !a.subset_of(m.y | m.u)) return a;
  GenSet out = a - m.u;
  (a & m.u).for_each([&](int v) { out.insert(m.pi[v]); });
  return out;
}

std::vector<GenSet> induced_family(const CoxeterDiagram& d, const TwistMove& m, const std::vector<GenSet>& f,
                                   bool check, const SearchLimits& lim) {
  if (!preserves_family(m, f)) throw DomainError("the move does not preserve the family");
  std::vector<GenSet> out;
  for (GenSet a : f) out.push_back(twist_image(m, a));
  out = normalized(out);
  if (check && is_separation(d, SeparationFamily::of(f), lim)) {
    const auto t = apply_twist(d, m);
    if (!is_separation(t.diagram, SeparationFamily::of(out), lim))
      throw InvariantError("twisted image of a separation is not a separation");
  }
  return out;
}

std::vector<TwistMove> elementary_moves(const SeparationContext& ctx) {
  const CoxeterDiagram& d = ctx.diagram();
  std::vector<TwistMove> out;
  for (GenSet u : ctx.separating_products()) {
    if (sigma_nu_split(d, u).sigma.empty()) continue;
    // U separates its own component; the other components ride along in X.
    const GenSet comp = ctx.component_of(u);
    const auto parts = components(d, comp - u);
    const int t = static_cast<int>(parts.size());
    if (t < 2) continue;
    if (t > 20) throw CapacityError("too many sides to enumerate twists");
    for (std::uint32_t mask = 1; mask < (1u << (t - 1)); ++mask) {
      GenSet y;
      for (int k = 1; k < t; ++k)
        if (mask >> (k - 1) & 1) y |= parts[k];
      TwistMove m = elementary_move(d, u, y);
      if (!is_trivial(m)) out.push_back(std::move(m));
    }
  }
  return out;
}

namespace {

std::string state_key(const CanonicalForm& form, const std::vector<GenSet>& family, const std::vector<GenSet>& tracked,
                      bool keyed) {
  if (!keyed) return form.certificate;
  std::vector<int> pos(form.order.size());
  for (std::size_t k = 0; k < form.order.size(); ++k) pos[form.order[k]] = static_cast<int>(k);
  auto relabel = [&](GenSet a) {
    std::uint64_t bits = 0;
    a.for_each([&](int v) { bits |= std::uint64_t{1} << pos[v]; });
    return bits;
  };
  std::string key = form.certificate + "|";
  std::vector<std::uint64_t> fam;
  for (GenSet a : family) fam.push_back(relabel(a));
  std::sort(fam.begin(), fam.end());
  for (auto b : fam) key += std::to_string(b) + ",";
  key += "|";
  for (GenSet a : tracked) key += std::to_string(relabel(a)) + ",";
  return key;
}

}  // namespace

OrbitResult twist_orbit(const CoxeterDiagram& d, int depth, const std::optional<std::vector<GenSet>>& preserve,
                        const std::vector<GenSet>& tracked, const TwistLimits& lim,
                        const std::function<bool(const OrbitEntry&)>& stop) {
  OrbitResult res;
  const bool keyed = preserve.has_value() || !tracked.empty();
  OrbitEntry start{canonical_form(d), d, preserve.value_or(std::vector<GenSet>{}), tracked, {}};
  std::set<std::string> seen{state_key(start.form, start.family, start.tracked, keyed)};
  res.entries.push_back(start);
  if (stop && stop(res.entries.back())) return res;

  std::size_t level_begin = 0;
  for (int level = 0; level < depth; ++level) {
    const std::size_t level_end = res.entries.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      // Entries may be reallocated below; work on a copy.
      const OrbitEntry cur = res.entries[i];
      SeparationContext ctx(cur.diagram, lim.separation);
      for (const TwistMove& m : elementary_moves(ctx)) {
        if (preserve && !preserves_family(m, cur.family)) continue;
        OrbitEntry next{{}, apply_twist(cur.diagram, m).diagram, {}, {}, cur.path};
        if (preserve) next.family = induced_family(cur.diagram, m, cur.family, false);
        for (GenSet a : cur.tracked) next.tracked.push_back(twist_image(m, a));
        next.path.push_back(m);
        next.form = canonical_form(next.diagram);
        if (!seen.insert(state_key(next.form, next.family, next.tracked, keyed)).second) continue;
        if (res.entries.size() >= lim.max_states) {
          res.truncated = true;
          return res;
        }
        res.entries.push_back(std::move(next));
        if (stop && stop(res.entries.back())) return res;
      }
    }
    level_begin = level_end;
  }
  return res;
}

Verdict twist_equivalent(const CoxeterDiagram& d1, const CoxeterDiagram& d2, int depth, const TwistLimits& lim) {
  Verdict v;
  if (d1.rank() != d2.rank()) {
    v.reason = "ranks differ";
    return v;
  }
  const auto target = canonical_form(d2);
  const auto orbit = twist_orbit(d1, depth, std::nullopt, {}, lim,
                                 [&](const OrbitEntry& e) { return e.form.certificate == target.certificate; });
  const OrbitEntry& last = orbit.entries.back();
  if (last.form.certificate == target.certificate) {
    v.yes = true;
    v.path = last.path;
    v.isomorphism.assign(d1.rank(), -1);
    for (int k = 0; k < d1.rank(); ++k) v.isomorphism[last.form.order[k]] = target.order[k];
    return v;
  }
  if (orbit.truncated) throw CapacityError("twist orbit exceeded " + std::to_string(lim.max_states) + " states");
  v.reason = "not reached within depth " + std::to_string(depth);
  return v;
}

CanonicalForm attached_block_form(const CoxeterDiagram& d, GenSet block, const std::vector<GenSet>& separators) {
  const auto members = block.members();
  std::vector<GenSet> inside;
  for (GenSet u : separators)
    if (u.subset_of(block)) inside.push_back(u);
  LabeledGraph g;
  const int k = static_cast<int>(members.size());
  g.n = k + static_cast<int>(inside.size());
  g.label.assign(static_cast<std::size_t>(g.n) * g.n, 0);
  g.color.assign(g.n, 0);
  auto set = [&](int i, int j, int l) {
    g.label[static_cast<std::size_t>(i) * g.n + j] = l;
    g.label[static_cast<std::size_t>(j) * g.n + i] = l;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (d.order(members[i], members[j]).is_finite()) set(i, j, d.order(members[i], members[j]).value());
  for (std::size_t s = 0; s < inside.size(); ++s) {
    const int node = k + static_cast<int>(s);
    g.color[node] = 1;
    for (int i = 0; i < k; ++i)
      if (inside[s].contains(members[i])) set(node, i, -1);
  }
  return canonical_form(g);
}

namespace {

// Block-local positions back to generator indices.
std::vector<int> block_isomorphism(const CoxeterDiagram& d1, GenSet a, const CanonicalForm& fa, GenSet b,
                                   const CanonicalForm& fb) {
  const auto ma = a.members(), mb = b.members();
  std::vector<int> iso(d1.rank(), -1);
  for (std::size_t k = 0; k < fa.order.size(); ++k)
    if (fa.order[k] < static_cast<int>(ma.size())) iso[ma[fa.order[k]]] = mb[fb.order[k]];
  return iso;
}

bool contains_block(const std::vector<GenSet>& v, GenSet a) { return std::find(v.begin(), v.end(), a) != v.end(); }

}  // namespace

Verdict type2_compatible(const CoxeterDiagram& d1, GenSet a, const CoxeterDiagram& d2, GenSet b, int depth,
                         const TwistLimits& lim) {
  const auto s1 = standard_separation(d1, lim.separation);
  const auto s2 = standard_separation(d2, lim.separation);
  if (!contains_block(s1.type2, a)) throw DomainError("A is not a type(II) block of the first diagram");
  if (!contains_block(s2.type2, b)) throw DomainError("B is not a type(II) block of the second diagram");
  Verdict v;
  if (a.size() != b.size()) {
    v.reason = "blocks differ in size";
    return v;
  }
  const auto target = attached_block_form(d2, b, *s2.family.separators);
  std::vector<GenSet> rest;
  for (GenSet blk : s1.family.blocks)
    if (blk != a) rest.push_back(blk);
  // Track A and its separators through the moves.
  std::vector<GenSet> tracked{a};
  for (GenSet u : *s1.family.separators) tracked.push_back(u);
  auto matches = [&](const OrbitEntry& e) {
    std::vector<GenSet> seps(e.tracked.begin() + 1, e.tracked.end());
    return attached_block_form(e.diagram, e.tracked[0], seps).certificate == target.certificate;
  };
  const auto orbit = twist_orbit(d1, depth, rest, tracked, lim, matches);
  const OrbitEntry& last = orbit.entries.back();
  if (matches(last)) {
    v.yes = true;
    v.path = last.path;
    std::vector<GenSet> seps(last.tracked.begin() + 1, last.tracked.end());
    v.isomorphism = block_isomorphism(last.diagram, last.tracked[0], attached_block_form(last.diagram, last.tracked[0], seps),
                                      b, target);
    return v;
  }
  if (orbit.truncated) throw CapacityError("twist orbit exceeded " + std::to_string(lim.max_states) + " states");
  v.reason = "no matching image within depth " + std::to_string(depth);
  return v;
}

CompatVerdict type12_compatible(const CoxeterDiagram& d1, const CoxeterDiagram& d2, int depth, const TwistLimits& lim) {
  CompatVerdict out;
  const auto s1 = standard_separation(d1, lim.separation);
  const auto s2 = standard_separation(d2, lim.separation);
  if (s1.family.blocks.size() != s2.family.blocks.size()) {
    out.reason = "standard separations have " + std::to_string(s1.family.blocks.size()) + " and " +
                 std::to_string(s2.family.blocks.size()) + " blocks";
    return out;
  }
  if (s1.type1.size() != s2.type1.size() || s1.type2.size() != s2.type2.size()) {
    out.reason = "type(I)/type(II) counts differ";
    return out;
  }

  // type(I): bijection by attached-block isomorphism.
  std::vector<std::string> c1, c2;
  for (GenSet a : s1.type1) c1.push_back(attached_block_form(d1, a, *s1.family.separators).certificate);
  for (GenSet b : s2.type1) c2.push_back(attached_block_form(d2, b, *s2.family.separators).certificate);
  std::vector<bool> used(c2.size(), false);
  for (std::size_t i = 0; i < c1.size(); ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < c2.size() && !matched; ++j)
      if (!used[j] && c1[i] == c2[j]) {
        used[j] = matched = true;
        out.type1.emplace_back(s1.type1[i], s2.type1[j]);
      }
    if (!matched) {
      out.reason = "no type(I) partner for a block of size " + std::to_string(s1.type1[i].size());
      out.type1.clear();
      return out;
    }
  }

  // type(II): bipartite matching over type2_compatible verdicts.
  const std::size_t k = s1.type2.size();
  std::vector<std::vector<std::optional<Verdict>>> table(k, std::vector<std::optional<Verdict>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto v = type2_compatible(d1, s1.type2[i], d2, s2.type2[j], depth, lim);
      if (v.yes) table[i][j] = std::move(v);
    }
  std::vector<int> partner(k, -1);
  std::vector<bool> taken(k, false);
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    for (std::size_t j = 0; j < k; ++j)
      if (!taken[j] && table[i][j]) {
        taken[j] = true;
        partner[i] = static_cast<int>(j);
        if (self(self, i + 1)) return true;
        taken[j] = false;
      }
    return false;
  };
  if (!assign(assign, 0)) {
    out.reason = "no complete type(II) matching within depth " + std::to_string(depth);
    out.type1.clear();
    return out;
  }
  for (std::size_t i = 0; i < k; ++i) {
    out.type2.emplace_back(s1.type2[i], s2.type2[partner[i]]);
    out.type2_witnesses.push_back(*table[i][partner[i]]);
  }
  out.yes = true;
  return out;
}

}  // namespace coxtwist
