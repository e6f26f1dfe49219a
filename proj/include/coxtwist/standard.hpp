#pragma once

#include <utility>
#include <vector>

#include "coxtwist/separation.hpp"

namespace coxtwist {

struct StandardSeparation {
  SeparationFamily family;
  std::vector<GenSet> type1;
  std::vector<GenSet> type2;
  std::vector<GenSet> ubar;
  std::vector<SeparationFamily> minimal;

  /// Set when the raw "common block of a minimal separation" relation
  /// was not transitive and closing it added pairs.
  bool closure_added_pairs = false;
  /// Pairs of maximal twist-rigid subsets on which the ubar phrasing of ~
  /// ("no U in ubar separates them") disagrees with the block phrasing.
  std::vector<std::pair<GenSet, GenSet>> phrasing_disagreements;
};

/// Separating spherical products that are separators of every minimal
/// separation.
std::vector<GenSet> ubar(const SeparationContext& ctx, const std::vector<SeparationFamily>& minimal);
std::vector<GenSet> ubar(const CoxeterDiagram& d, const SearchLimits& lim = {});

/// Throws InvariantError when the result fails its structural checks.
StandardSeparation standard_separation(const SeparationContext& ctx);
StandardSeparation standard_separation(const CoxeterDiagram& d, const SearchLimits& lim = {});

}  // namespace coxtwist
