#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxtwist/diagram.hpp"

namespace coxtwist {

/// Complete graph with integer edge labels and vertex colours; the input
/// to canonical labelling. Label 0 stands for an infinite order.
struct LabeledGraph {
  int n = 0;
  std::vector<int> label;  ///< row-major n x n, symmetric
  std::vector<int> color;

  int at(int i, int j) const { return label[static_cast<std::size_t>(i) * n + j]; }
};

LabeledGraph labeled_graph(const CoxeterDiagram& d);

struct CanonicalForm {
  std::string certificate;
  /// order[k] is the vertex placed at canonical position k.
  std::vector<int> order;

  bool operator==(const CanonicalForm& o) const { return certificate == o.certificate; }
};

/// Colour refinement plus individualization, keeping the lexicographically
/// smallest relabelled adjacency. Certificates agree iff the graphs are
/// isomorphic (labels and colours preserved).
CanonicalForm canonical_form(const LabeledGraph& g);
CanonicalForm canonical_form(const CoxeterDiagram& d);

/// Lexicographically least relabelling over every vertex order. A different
/// string from canonical_form, but it must split graphs into the same
/// isomorphism classes. Throws CapacityError for more than 10 vertices.
std::string brute_force_certificate(const LabeledGraph& g);

/// A label-preserving bijection a -> b (indexed by a's generators).
std::optional<std::vector<int>> find_isomorphism(const CoxeterDiagram& a, const CoxeterDiagram& b);

}  // namespace coxtwist
