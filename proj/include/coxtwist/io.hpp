#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coxtwist/diagram.hpp"

namespace coxtwist {

using Json = nlohmann::json;
using NamePair = std::pair<std::string, std::string>;

/// A pair whose finite label the source leaves open, down to `min`.
struct FreePair {
  std::string a, b;
  int min = 2;
};

/// A parsed diagram file. Besides the diagram itself a file may carry a
/// free-text note, pairs whose finite label is arbitrary ("free"),
/// provenance of twisted generator names, and a checklist of expected
/// facts for the test suite.
struct DiagramDocument {
  CoxeterDiagram diagram;
  std::string note;
  std::vector<FreePair> free;
  std::map<std::string, std::string> provenance;
  Json checklist;
};

/// Throws ParseError with the offending token.
DiagramDocument parse_document(const std::string& text);
DiagramDocument load_document(const std::string& path);

/// Serializes a diagram in the input format ("schema": 1, sorted keys).
Json document_json(const DiagramDocument& doc);
Json diagram_json(const CoxeterDiagram& d);

/// The document's diagram with every free pair relabelled to max(m, min).
CoxeterDiagram with_free_labels(const DiagramDocument& doc, int m);

/// Names in generator order.
Json set_json(const CoxeterDiagram& d, GenSet s);
/// Lexicographically sorted list of subsets.
Json sets_json(const CoxeterDiagram& d, const std::vector<GenSet>& sets);

std::string order_string(Order o);

/// Finite edges only, labels as attributes; each block becomes a cluster.
std::string to_dot(const CoxeterDiagram& d, const std::vector<GenSet>& blocks = {});

/// Splits "a,b,c" into names, dropping empty pieces.
std::vector<std::string> split_names(const std::string& list);

}  // namespace coxtwist
