#pragma once

#include "coxtwist/io.hpp"
#include "coxtwist/separation.hpp"
#include "coxtwist/twist.hpp"
#include "coxtwist/untangle.hpp"

namespace coxtwist {

/// Full structural analysis of one diagram as JSON: separating spherical
/// products, maximal twist-rigid subsets, minimal separations and the
/// standard separation with its type tags.
Json analysis_report(const CoxeterDiagram& d, const SearchLimits& lim = {});

/// A move in the names of the diagram it applies to.
Json move_json(const CoxeterDiagram& d, const TwistMove& m);
/// Reads a move back; pi defaults to the elementary one when absent.
TwistMove move_from_json(const CoxeterDiagram& d, const Json& j);

/// Replays the path from `start`, naming each move in the diagram it acts
/// on. Returns the moves and leaves the final diagram in `*end` if given.
Json path_json(const CoxeterDiagram& start, const std::vector<TwistMove>& path, CoxeterDiagram* end = nullptr);

/// Generator map as {name: name}; entries < 0 are skipped.
Json map_json(const CoxeterDiagram& from, const CoxeterDiagram& to, const std::vector<int>& map);

Json untangle_json(const CoxeterDiagram& d, const UntanglePath& p);
Json group_json(const CoxeterDiagram& d, const PermutationGroup& g);

}  // namespace coxtwist
