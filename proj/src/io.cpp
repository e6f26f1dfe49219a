#include "coxtwist/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "coxtwist/errors.hpp"
#include "coxtwist/separation.hpp"

namespace coxtwist {

namespace {

const std::set<std::string> kKeys{"schema", "generators", "orders", "infinite", "note",
                                  "free", "provenance", "checklist"};

std::string pair_text(const std::string& a, const std::string& b) { return "['" + a + "','" + b + "']"; }

NamePair read_pair(const Json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw ParseError(std::string("'") + where + "' entries must be [name, name], got " + j.dump());
  return {j[0].get<std::string>(), j[1].get<std::string>()};
}

}  // namespace

DiagramDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("diagram document must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!kKeys.count(key)) throw ParseError("unknown key '" + key + "'");
  if (j.contains("schema") && j["schema"] != 1) throw ParseError("unsupported schema " + j["schema"].dump());
  if (!j.contains("generators") || !j["generators"].is_array()) throw ParseError("missing 'generators' list");

  std::vector<std::string> names;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw ParseError("generator names must be strings, got " + g.dump());
    names.push_back(g.get<std::string>());
  }
  std::vector<CoxeterDiagram::Edge> edges;
  if (j.contains("orders")) {
    if (!j["orders"].is_array()) throw ParseError("'orders' must be a list");
    for (const auto& e : j["orders"]) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
        throw ParseError("'orders' entries must be [name, name, m], got " + e.dump());
      if (e[2].is_string() && e[2] == "inf") continue;
      if (!e[2].is_number_integer()) throw ParseError("order must be an integer or \"inf\", got " + e[2].dump());
      const long long m = e[2].get<long long>();
      if (m < 2 || m > 1000000)
        throw ParseError("order " + std::to_string(m) + " on " + pair_text(e[0], e[1]) + " is out of range");
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), static_cast<int>(m)});
    }
  }
  // Duplicate finite pairs must agree.
  std::map<NamePair, int> seen;
  for (const auto& e : edges) {
    const NamePair key = std::minmax(e.a, e.b);
    auto [it, fresh] = seen.emplace(key, e.m);
    if (!fresh && it->second != e.m) throw ParseError("conflicting orders for " + pair_text(e.a, e.b));
  }
  DiagramDocument doc{CoxeterDiagram::from_edges(names, edges), {}, {}, {}, Json::object()};
  const CoxeterDiagram& d = doc.diagram;
  auto index = [&](const std::string& s) {
    auto i = d.index_of(s);
    if (!i) throw ParseError("unknown generator '" + s + "'");
    return *i;
  };
  if (j.contains("infinite")) {
    for (const auto& p : j["infinite"]) {
      const auto [a, b] = read_pair(p, "infinite");
      const int i = index(a), k = index(b);
      if (i == k) throw ParseError("self-edge on '" + a + "'");
      if (d.order(i, k).is_finite()) throw ParseError("pair " + pair_text(a, b) + " is both finite and infinite");
    }
  }
  if (j.contains("free")) {
    for (const auto& p : j["free"]) {
      // [a, b] or [a, b, least label]
      FreePair fp;
      if (p.is_array() && p.size() == 3) {
        if (!p[2].is_number_integer() || p[2].get<int>() < 2)
          throw ParseError("'free' bound must be an integer >= 2, got " + p[2].dump());
        fp.min = p[2].get<int>();
        std::tie(fp.a, fp.b) = read_pair(Json::array({p[0], p[1]}), "free");
      } else {
        std::tie(fp.a, fp.b) = read_pair(p, "free");
      }
      const int i = index(fp.a), k = index(fp.b);
      if (i == k || d.order(i, k).is_infinite())
        throw ParseError("free pair " + pair_text(fp.a, fp.b) + " must carry a finite label");
      doc.free.push_back(fp);
    }
  }
  if (j.contains("note")) {
    if (!j["note"].is_string()) throw ParseError("'note' must be a string");
    doc.note = j["note"].get<std::string>();
  }
  if (j.contains("provenance")) {
    if (!j["provenance"].is_object()) throw ParseError("'provenance' must be an object");
    for (const auto& [k, v] : j["provenance"].items()) {
      index(k);
      if (!v.is_string()) throw ParseError("provenance of '" + k + "' must be a string");
      doc.provenance[k] = v.get<std::string>();
    }
  }
  if (j.contains("checklist")) doc.checklist = j["checklist"];
  return doc;
}

DiagramDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string order_string(Order o) { return o.is_infinite() ? "inf" : std::to_string(o.value()); }

Json diagram_json(const CoxeterDiagram& d) {
  Json j;
  j["schema"] = 1;
  j["generators"] = d.names();
  Json orders = Json::array();
  for (int i = 0; i < d.rank(); ++i)
    for (int k = i + 1; k < d.rank(); ++k)
      if (d.order(i, k).is_finite()) orders.push_back({d.name(i), d.name(k), d.order(i, k).value()});
  j["orders"] = orders;
  return j;
}

Json document_json(const DiagramDocument& doc) {
  Json j = diagram_json(doc.diagram);
  if (!doc.note.empty()) j["note"] = doc.note;
  if (!doc.free.empty()) {
    Json f = Json::array();
    for (const auto& fp : doc.free) f.push_back(fp.min == 2 ? Json{fp.a, fp.b} : Json{fp.a, fp.b, fp.min});
    j["free"] = f;
  }
  if (!doc.provenance.empty()) j["provenance"] = doc.provenance;
  if (!doc.checklist.is_null() && !doc.checklist.empty()) j["checklist"] = doc.checklist;
  return j;
}

CoxeterDiagram with_free_labels(const DiagramDocument& doc, int m) {
  const CoxeterDiagram& d = doc.diagram;
  const int n = d.rank();
  std::vector<Order> orders(static_cast<std::size_t>(n) * n, Order::finite(1));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) orders[i * n + k] = d.order(i, k);
  for (const auto& fp : doc.free) {
    const int i = *d.index_of(fp.a), k = *d.index_of(fp.b);
    orders[i * n + k] = orders[k * n + i] = Order::finite(std::max(m, fp.min));
  }
  return CoxeterDiagram::from_matrix(d.names(), orders);
}

Json set_json(const CoxeterDiagram& d, GenSet s) { return d.names_of(s); }

Json sets_json(const CoxeterDiagram& d, const std::vector<GenSet>& sets) {
  Json out = Json::array();
  for (GenSet s : normalized(sets)) out.push_back(set_json(d, s));
  return out;
}

std::string to_dot(const CoxeterDiagram& d, const std::vector<GenSet>& blocks) {
  std::ostringstream os;
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  os << "graph coxeter {\n";
  const auto sorted = normalized(blocks);
  for (std::size_t b = 0; b < sorted.size(); ++b) {
    os << "  subgraph cluster_" << b << " {\n    label=" << quote("block " + std::to_string(b)) << ";\n";
    sorted[b].for_each([&](int v) { os << "    " << quote(d.name(v) + "#" + std::to_string(b)) << " [label=" << quote(d.name(v)) << "];\n"; });
    os << "  }\n";
  }
  for (int i = 0; i < d.rank(); ++i) os << "  " << quote(d.name(i)) << ";\n";
  for (int i = 0; i < d.rank(); ++i)
    for (int k = i + 1; k < d.rank(); ++k)
      if (d.order(i, k).is_finite())
        os << "  " << quote(d.name(i)) << " -- " << quote(d.name(k)) << " [label=" << d.order(i, k).value() << "];\n";
  os << "}\n";
  return os.str();
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(list);
  while (std::getline(in, cur, ',')) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

}  // namespace coxtwist
