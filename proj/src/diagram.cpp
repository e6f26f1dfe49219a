#include "coxtwist/diagram.hpp"

#include <algorithm>
#include <set>

#include "coxtwist/errors.hpp"
#include "coxtwist/sphericity.hpp"

namespace coxtwist {

CoxeterDiagram CoxeterDiagram::from_matrix(std::vector<std::string> names,
                                           const std::vector<Order>& orders) {
  const std::size_t n = names.size();
  if (n > static_cast<std::size_t>(kMaxRank))
    throw ParseError("rank " + std::to_string(n) + " exceeds the supported maximum of " +
                     std::to_string(kMaxRank));
  if (orders.size() != n * n) throw ParseError("order matrix has the wrong size");
  std::set<std::string> seen;
  for (const auto& s : names) {
    if (s.empty()) throw ParseError("empty generator name");
    if (!seen.insert(s).second) throw ParseError("duplicate generator name '" + s + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (orders[i * n + i] != Order::finite(1))
      throw ParseError("diagonal entry for '" + names[i] + "' must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Order o = orders[i * n + j];
      if (o != orders[j * n + i])
        throw ParseError("asymmetric order between '" + names[i] + "' and '" + names[j] + "'");
      if (o.is_finite() && o.value() < 2)
        throw ParseError("order between '" + names[i] + "' and '" + names[j] + "' is below 2");
    }
  }
  CoxeterDiagram d;
  d.names_ = std::move(names);
  d.orders_ = orders;
  d.build_adjacency();
  return d;
}

CoxeterDiagram CoxeterDiagram::from_edges(std::vector<std::string> names, const std::vector<Edge>& edges) {
  const std::size_t n = names.size();
  std::vector<Order> orders(n * n, Order::infinite());
  for (std::size_t i = 0; i < n; ++i) orders[i * n + i] = Order::finite(1);
  auto find = [&](const std::string& s) -> std::size_t {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw ParseError("unknown generator '" + s + "'");
    return static_cast<std::size_t>(it - names.begin());
  };
  for (const auto& e : edges) {
    const std::size_t i = find(e.a), j = find(e.b);
    if (i == j) throw ParseError("self-edge on '" + e.a + "'");
    if (e.m < 2) throw ParseError("order " + std::to_string(e.m) + " on '" + e.a + "'-'" + e.b + "' is below 2");
    orders[i * n + j] = orders[j * n + i] = Order::finite(e.m);
  }
  return from_matrix(std::move(names), orders);
}

void CoxeterDiagram::build_adjacency() {
  const int n = rank();
  bonded_.assign(n, GenSet{});
  linked_.assign(n, GenSet{});
  commuting_.assign(n, GenSet{});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Order o = order(i, j);
      if (o.is_finite()) bonded_[i].insert(j);
      if (o.is_infinite() || o.value() >= 3) linked_[i].insert(j);
      if (o == Order::finite(2)) commuting_[i].insert(j);
    }
  }
}

std::optional<int> CoxeterDiagram::index_of(std::string_view name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::string> CoxeterDiagram::names_of(GenSet s) const {
  std::vector<std::string> out;
  s.for_each([&](int i) { out.push_back(names_[i]); });
  return out;
}

GenSet CoxeterDiagram::set_of(const std::vector<std::string>& names) const {
  GenSet s;
  for (const auto& nm : names) {
    auto i = index_of(nm);
    if (!i) throw DomainError("unknown generator '" + nm + "'");
    s.insert(*i);
  }
  return s;
}

CoxeterDiagram CoxeterDiagram::restrict_to(GenSet s, std::vector<int>* index_map) const {
  const std::vector<int> idx = s.members();
  const std::size_t k = idx.size();
  std::vector<std::string> names;
  std::vector<Order> orders(k * k, Order::finite(1));
  for (std::size_t a = 0; a < k; ++a) {
    names.push_back(names_[idx[a]]);
    for (std::size_t b = 0; b < k; ++b) orders[a * k + b] = order(idx[a], idx[b]);
  }
  if (index_map) *index_map = idx;
  return from_matrix(std::move(names), orders);
}

namespace {

template <typename Adj>
std::vector<GenSet> flood(GenSet t, Adj adj) {
  std::vector<GenSet> out;
  GenSet rest = t;
  while (!rest.empty()) {
    GenSet comp = GenSet::single(rest.lowest());
    GenSet frontier = comp;
    while (!frontier.empty()) {
      GenSet next;
      frontier.for_each([&](int v) { next |= adj(v); });
      next = (next & t) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

}  // namespace

std::vector<GenSet> components(const CoxeterDiagram& d, GenSet t) {
  return flood(t, [&](int v) { return d.bonded(v); });
}

bool is_connected(const CoxeterDiagram& d, GenSet t) { return components(d, t).size() <= 1; }

GenSet perp(const CoxeterDiagram& d, GenSet t) {
  GenSet out = d.all();
  t.for_each([&](int v) { out &= d.commuting(v); });
  return out;
}

std::vector<GenSet> irreducible_components(const CoxeterDiagram& d, GenSet t) {
  return flood(t, [&](int v) { return d.linked(v); });
}

SigmaNuSplit sigma_nu_split(const CoxeterDiagram& d, GenSet u) {
  SigmaNuSplit out;
  for (GenSet c : irreducible_components(d, u)) {
    if (is_spherical(d, c))
      out.sigma |= c;
    else
      out.nu |= c;
  }
  return out;
}

std::optional<GenSet> spherical_product_witness(const CoxeterDiagram& d, GenSet u) {
  if (u.empty()) return std::nullopt;
  const SigmaNuSplit split = sigma_nu_split(d, u);
  if (!split.sigma.empty()) return split.sigma;
  const GenSet outside = perp(d, u) - u;
  if (outside.empty()) return std::nullopt;
  return GenSet::single(outside.lowest());
}

bool is_spherical_product(const CoxeterDiagram& d, GenSet u) {
  return spherical_product_witness(d, u).has_value();
}

}  // namespace coxtwist
