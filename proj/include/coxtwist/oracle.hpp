#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxtwist/sphericity.hpp"

namespace coxtwist {

/// A concrete finite group realizing W_T, one factor per irreducible
/// component. Factors of type A, B and D act by (signed) permutations;
/// dihedral factors use (rotation, flip) pairs.
class FiniteModel {
 public:
  /// One coordinate per factor. Permutation factors store the image of
  /// each point; dihedral factors store {rotation, flip}.
  using Element = std::vector<std::vector<int>>;

  struct Factor {
    IrreducibleType type;
    std::vector<int> generators;  ///< diagram indices, in layout order
    bool dihedral = false;
    int points = 0;  ///< permutation degree, or m for dihedral factors
  };

  const std::vector<Factor>& factors() const { return factors_; }
  GenSet subset() const { return subset_; }

  Element identity() const;
  Element generator(int s) const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;

  /// Breadth-first enumeration of one factor; returns the elements in
  /// order of word length together with their lengths.
  struct Enumeration {
    std::vector<std::vector<int>> elements;
    std::vector<int> length;
  };
  Enumeration enumerate(std::size_t factor) const;

 private:
  friend std::optional<FiniteModel> build_model(const CoxeterDiagram&, GenSet);
  std::vector<int> mul(std::size_t f, const std::vector<int>& a, const std::vector<int>& b) const;

  GenSet subset_;
  std::vector<Factor> factors_;
  std::vector<int> factor_of_;                 ///< by diagram index, -1 outside T
  std::vector<std::vector<int>> gen_element_;  ///< by diagram index
};

/// Absent when some component is outside A_n (n<=6), B_n (n<=4), D_n
/// (n<=5) or I2(m) (m<=12). Throws DomainError when T is not spherical and
/// InvariantError when the model fails the Coxeter relations of the diagram.
std::optional<FiniteModel> build_model(const CoxeterDiagram& d, GenSet t);

/// Classical order of an irreducible finite Coxeter group.
long long classical_order(const IrreducibleType& t);
/// Number of positive roots, which is the length of the longest element.
int positive_roots(const IrreducibleType& t);

struct LongestElement {
  FiniteModel::Element element;
  int length = 0;
  long long group_order = 1;
};

/// Enumerates each factor's Cayley graph; throws InvariantError when the
/// farthest element is not unique or the group order is wrong.
LongestElement longest_element(const FiniteModel& m);

/// For each generator t of the model (by diagram index), the generator
/// equal to w t w^-1, or -1 when that conjugate is not a generator.
std::vector<int> conjugate_generators(const CoxeterDiagram& d, const FiniteModel& m, const FiniteModel::Element& w);

struct OmegaCheck {
  GenSet subset;
  enum class Status { Pass, Mismatch, Skipped } status;
  std::string detail;
};

struct OmegaReport {
  std::vector<OmegaCheck> checks;
  int passed = 0, mismatched = 0, skipped = 0;
};

/// Compares the longest-element conjugation of every spherical subset
/// with longest_automorphism.
OmegaReport verify_omega(const CoxeterDiagram& d);

}  // namespace coxtwist
