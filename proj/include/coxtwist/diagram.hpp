#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxtwist/genset.hpp"

namespace coxtwist {

/// Order o(st) of a product of two generators. Infinity is its own state,
/// not a large integer; orders are only ever compared.
class Order {
 public:
  static constexpr Order infinite() { return Order(); }
  static constexpr Order finite(int m) { return Order(m); }

  constexpr bool is_infinite() const { return m_ == 0; }
  constexpr bool is_finite() const { return m_ != 0; }
  /// Finite value; meaningless for infinite orders.
  constexpr int value() const { return m_; }

  constexpr bool operator==(const Order&) const = default;

 private:
  constexpr Order() = default;
  constexpr explicit Order(int m) : m_(m) {}
  int m_ = 0;
};

/// A Coxeter system encoded by its generator names and symmetric order
/// matrix. Immutable once built; every constructor path validates.
class CoxeterDiagram {
 public:
  /// Builds a validated diagram. `orders` is row-major rank x rank.
  /// Throws ParseError on any violation of the matrix invariants.
  static CoxeterDiagram from_matrix(std::vector<std::string> names, const std::vector<Order>& orders);

  /// All off-diagonal entries start at infinity; `edges` assigns finite labels.
  struct Edge {
    std::string a, b;
    int m;
  };
  static CoxeterDiagram from_edges(std::vector<std::string> names, const std::vector<Edge>& edges);

  int rank() const { return static_cast<int>(names_.size()); }
  GenSet all() const { return GenSet::first(rank()); }

  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  Order order(int i, int j) const {
    if (i == j) return Order::finite(1);
    return orders_[static_cast<std::size_t>(i) * names_.size() + j];
  }

  /// Nerve neighbours: generators t != s with o(st) finite (label-2 included).
  GenSet bonded(int i) const { return bonded_[i]; }
  /// Coxeter-graph neighbours: o(st) >= 3 or infinite.
  GenSet linked(int i) const { return linked_[i]; }
  /// Generators t != s with o(st) = 2.
  GenSet commuting(int i) const { return commuting_[i]; }

  /// Names of the members in generator order.
  std::vector<std::string> names_of(GenSet s) const;
  /// Throws DomainError for unknown names.
  GenSet set_of(const std::vector<std::string>& names) const;

  /// Induced sub-diagram on `s`; `index_map[k]` is the parent index of the
  /// k-th generator of the result.
  CoxeterDiagram restrict_to(GenSet s, std::vector<int>* index_map = nullptr) const;

  bool operator==(const CoxeterDiagram&) const = default;

 private:
  CoxeterDiagram() = default;
  void build_adjacency();

  std::vector<std::string> names_;
  std::vector<Order> orders_;
  std::vector<GenSet> bonded_, linked_, commuting_;
};

/// Connected components of `t` in the nerve (finite-order bonds), ordered
/// by smallest member.
std::vector<GenSet> components(const CoxeterDiagram& d, GenSet t);

bool is_connected(const CoxeterDiagram& d, GenSet t);

/// Generators commuting (o = 2) with every member of `t`.
GenSet perp(const CoxeterDiagram& d, GenSet t);

/// Irreducible components of W_T: connected components of `t` in the
/// Coxeter graph, where o(st) >= 3 (including infinity) is an edge.
std::vector<GenSet> irreducible_components(const CoxeterDiagram& d, GenSet t);

struct SigmaNuSplit {
  GenSet sigma;  ///< union of the finite irreducible components
  GenSet nu;     ///< union of the infinite ones
};

SigmaNuSplit sigma_nu_split(const CoxeterDiagram& d, GenSet u);

/// U is non-empty and contained in sigma + perp(sigma) for some non-empty
/// spherical sigma.
bool is_spherical_product(const CoxeterDiagram& d, GenSet u);

/// A spherical sigma realising U ⊆ sigma ∪ perp(sigma), if one exists:
/// U_sigma when non-empty, otherwise a single commuting outside generator.
std::optional<GenSet> spherical_product_witness(const CoxeterDiagram& d, GenSet u);

}  // namespace coxtwist
