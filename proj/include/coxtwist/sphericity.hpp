#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxtwist/diagram.hpp"

namespace coxtwist {

enum class Family { A, B, D, E, F, H, I2 };

/// One irreducible finite Coxeter type. Rank-two components are A2 (m=3),
/// B2 (m=4) or I2(m) otherwise.
struct IrreducibleType {
  Family family;
  int rank;
  int m = 0;  ///< dihedral label, I2 only

  std::string to_string() const;
  bool operator==(const IrreducibleType&) const = default;
};

/// A recognised irreducible component together with its generators laid
/// out in the standard order of its type:
///   A_n, B_n, F4, H3, H4 : along the path (B: the 4-end first; H: the 5-end first)
///   D_n                  : fork leaf, fork leaf, branch node, long arm outwards
///   E_n                  : branch node, short arm, then the two other arms outwards
///   I2(m)                : the two generators
struct TypedComponent {
  IrreducibleType type;
  GenSet members;
  std::vector<int> layout;
};

/// Typed components of W_T when it is finite, nothing otherwise.
std::optional<std::vector<TypedComponent>> recognize(const CoxeterDiagram& d, GenSet t);

bool is_spherical(const CoxeterDiagram& d, GenSet t);

/// The permutation of a spherical T induced by conjugation with its
/// longest element.
struct LongestAutomorphism {
  GenSet subset;
  std::vector<int> image;  ///< indexed by generator; -1 outside `subset`

  int operator()(int s) const { return image[s]; }
  GenSet apply(GenSet s) const;
};

/// Throws DomainError when T is not spherical.
LongestAutomorphism longest_automorphism(const CoxeterDiagram& d, GenSet t);

struct SphericalSubset {
  GenSet set;
  bool maximal;
};

/// Every spherical subset (including the empty one) of size at most
/// `max_size`, in lexicographic member order. Throws CapacityError past
/// `max_count` results.
std::vector<SphericalSubset> spherical_subsets(const CoxeterDiagram& d,
                                               std::optional<int> max_size = std::nullopt,
                                               std::size_t max_count = 1u << 20);

}  // namespace coxtwist
