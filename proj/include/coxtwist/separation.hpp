#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coxtwist/diagram.hpp"

namespace coxtwist {

/// Guards for the exhaustive searches.
struct SearchLimits {
  int max_exhaustive_rank = 24;         ///< subset enumeration over one component
  int max_partition_atoms = 10;         ///< |maximal twist-rigid subsets| per component
  std::size_t max_separations = 4096;   ///< product of per-component minimal separations
  std::size_t max_chain_states = 1u << 22;
};

/// A family of generator subsets, kept sorted and duplicate-free.
struct SeparationFamily {
  std::vector<GenSet> blocks;
  bool verified = false;
  std::optional<std::vector<GenSet>> separators;

  static SeparationFamily of(std::vector<GenSet> blocks);
  bool operator==(const SeparationFamily& o) const { return blocks == o.blocks; }
};

/// Sorts (lexicographic member order) and removes duplicates.
std::vector<GenSet> normalized(std::vector<GenSet> sets);

/// Connected components of S - U, inside the connected component of S that
/// holds U. Empty when U is empty or straddles components.
std::vector<GenSet> sides(const CoxeterDiagram& d, GenSet u);

/// U lies in one connected component of S and removing it leaves at least
/// two components there.
bool separates(const CoxeterDiagram& d, GenSet u);

/// True when `block` is not contained in X_i ∪ U for any single side X_i.
bool separates_block(const CoxeterDiagram& d, GenSet u, GenSet block);

/// True when a ⊆ X_i ∪ U and b ⊆ X_j ∪ U for distinct sides i != j.
bool separates_pair(const CoxeterDiagram& d, GenSet u, GenSet a, GenSet b);

/// Every spherical-product subset separating its component, in
/// lexicographic order. Throws CapacityError past the rank guard.
std::vector<GenSet> separating_spherical_products(const CoxeterDiagram& d, const SearchLimits& lim = {});

/// A is connected, inside one component, and no separating
/// spherical-product U leaves A - U disconnected.
bool is_twist_rigid_subset(const CoxeterDiagram& d, GenSet a, const SearchLimits& lim = {});

/// Maximal twist-rigid subsets, by refinement to a fixpoint.
std::vector<GenSet> maximal_twist_rigid_subsets(const CoxeterDiagram& d, const SearchLimits& lim = {});

/// Separator conditions (i)-(v). Throws DomainError when the family fails
/// the covering conditions (1)-(3).
bool is_separator(const CoxeterDiagram& d, GenSet u, const SeparationFamily& f, const SearchLimits& lim = {});

/// Separation conditions (1)-(4), per connected component.
bool is_separation(const CoxeterDiagram& d, const SeparationFamily& f, const SearchLimits& lim = {});

/// Covering conditions (1)-(3) only.
bool satisfies_covering(const CoxeterDiagram& d, const SeparationFamily& f, const SearchLimits& lim = {});

/// The separation induced by a separating spherical-product U. Throws
/// DomainError on a bad U and InvariantError if the result is not a
/// separation.
SeparationFamily induced_separation(const CoxeterDiagram& d, GenSet u, const SearchLimits& lim = {});

/// Every block of `lo` lies inside some block of `hi`.
bool preceq(const SeparationFamily& lo, const SeparationFamily& hi);

/// All minimal separations, via set partitions of the maximal twist-rigid
/// subsets. Throws CapacityError past the partition guard.
std::vector<SeparationFamily> minimal_separations(const CoxeterDiagram& d, const SearchLimits& lim = {});

/// All separations (not just minimal ones); used for cross-checks.
std::vector<SeparationFamily> all_separations(const CoxeterDiagram& d, const SearchLimits& lim = {});

/// An ordering A_1..A_n of all blocks in which each
/// U_i = (A_1 ∪ ... ∪ A_i) ∩ A_{i+1} is maximal among the intersections with
/// the remaining blocks.
struct OrderedChain {
  std::vector<GenSet> sequence;
  std::vector<GenSet> intersections;
};

std::vector<OrderedChain> ordering_chains(const SeparationFamily& f, bool first_only = false,
                                          std::optional<GenSet> start = std::nullopt,
                                          std::size_t max_chains = 1u << 16);

/// Caches the per-diagram data every separation query needs (components,
/// separating spherical products, maximal twist-rigid subsets). The
/// diagram must outlive the context.
class SeparationContext {
 public:
  explicit SeparationContext(const CoxeterDiagram& d, SearchLimits lim = {});

  const CoxeterDiagram& diagram() const { return *d_; }
  const SearchLimits& limits() const { return lim_; }

  /// Nerve components of S.
  const std::vector<GenSet>& components() const { return comps_; }
  /// The component containing all of `u`; empty when `u` is empty or
  /// straddles components.
  GenSet component_of(GenSet u) const;

  const std::vector<GenSet>& separating_products() const;
  const std::vector<GenSet>& atoms() const;

  std::vector<GenSet> sides(GenSet u) const;
  bool separates(GenSet u) const;
  bool is_twist_rigid(GenSet a) const;

  bool satisfies_covering(const std::vector<GenSet>& blocks) const;
  /// Assumes covering holds.
  bool is_separator(GenSet u, const std::vector<GenSet>& blocks) const;
  bool is_separation(const std::vector<GenSet>& blocks) const;

  SeparationFamily induced_separation(GenSet u) const;
  std::vector<SeparationFamily> minimal_separations() const;
  std::vector<SeparationFamily> all_separations() const;

 private:
  bool component_separation(const std::vector<GenSet>& blocks) const;
  /// Valid separations of one component, as block lists.
  std::vector<std::vector<GenSet>> component_separations(GenSet comp, bool minimal_only) const;
  std::vector<SeparationFamily> combine(const std::vector<std::vector<std::vector<GenSet>>>& per) const;

  const CoxeterDiagram* d_;
  SearchLimits lim_;
  std::vector<GenSet> comps_;
  mutable std::optional<std::vector<GenSet>> seps_;
  mutable std::optional<std::vector<GenSet>> atoms_;
};

}  // namespace coxtwist
