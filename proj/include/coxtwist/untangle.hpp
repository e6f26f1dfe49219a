#pragma once

#include <optional>
#include <vector>

#include "coxtwist/sphericity.hpp"

namespace coxtwist {

/// A chain U_1 ~ U_2 ~ ... ~ U_q, each link conjugating by the longest
/// element of a spherical T_i.
struct UntanglePath {
  std::vector<GenSet> nodes;
  std::vector<GenSet> links;
  /// Image of each member of U_1 under the composed link permutations,
  /// indexed by generator; -1 outside U_1.
  std::vector<int> induced;
};

/// One link: T spherical, U_sigma and U2_sigma inside T, omega_T carries
/// U_sigma onto U2_sigma, the nu-parts agree and commute with T.
bool untangle_step(const CoxeterDiagram& d, GenSet u, GenSet u2, GenSet t);

/// The permutation of U a valid step induces (omega_T on U_sigma, identity
/// on U_nu), indexed by generator.
std::vector<int> step_permutation(const CoxeterDiagram& d, GenSet u, GenSet t);

/// Shortest chain from U to U2 with at most `maxlen` links, if any.
/// Breadth-first in lexicographic order of the links tried.
std::optional<UntanglePath> untangle_reachable(const CoxeterDiagram& d, GenSet u, GenSet u2,
                                               std::optional<int> maxlen = std::nullopt);

/// Permutations of U induced by closed chains at U, with the group they
/// generate. Permutations are indexed by generator, -1 outside U.
struct PermutationGroup {
  GenSet domain;
  std::vector<std::vector<int>> generators;
  std::vector<std::vector<int>> elements;  ///< sorted, identity first
  std::vector<UntanglePath> witnesses;     ///< one closed chain per generator
};

/// Without `maxlen` the search runs until no new (node, permutation) state
/// appears, which always terminates.
PermutationGroup loop_automorphisms(const CoxeterDiagram& d, GenSet u, std::optional<int> maxlen = std::nullopt);

}  // namespace coxtwist
