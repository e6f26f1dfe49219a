#include "coxtwist/report.hpp"

#include "coxtwist/errors.hpp"
#include "coxtwist/sphericity.hpp"
#include "coxtwist/standard.hpp"

namespace coxtwist {

Json analysis_report(const CoxeterDiagram& d, const SearchLimits& lim) {
  SeparationContext ctx(d, lim);
  const StandardSeparation st = standard_separation(ctx);
  Json j;
  j["schema"] = 1;
  j["rank"] = d.rank();
  j["generators"] = d.names();
  j["components"] = sets_json(d, ctx.components());
  std::vector<GenSet> maximal_spherical;
  for (const auto& s : spherical_subsets(d))
    if (s.maximal) maximal_spherical.push_back(s.set);
  j["maximal_spherical_subsets"] = sets_json(d, maximal_spherical);
  j["separating_spherical_products"] = sets_json(d, ctx.separating_products());
  j["maximal_twist_rigid_subsets"] = sets_json(d, ctx.atoms());
  Json mins = Json::array();
  for (const auto& f : st.minimal) mins.push_back(sets_json(d, f.blocks));
  j["minimal_separations"] = mins;
  Json s;
  s["blocks"] = sets_json(d, st.family.blocks);
  s["type1"] = sets_json(d, st.type1);
  s["type2"] = sets_json(d, st.type2);
  s["ubar"] = sets_json(d, st.ubar);
  s["separators"] = sets_json(d, st.family.separators.value_or(std::vector<GenSet>{}));
  Json diag;
  diag["closure_added_pairs"] = st.closure_added_pairs;
  Json dis = Json::array();
  for (const auto& [a, b] : st.phrasing_disagreements) dis.push_back({set_json(d, a), set_json(d, b)});
  diag["phrasing_disagreements"] = dis;
  s["diagnostics"] = diag;
  j["standard_separation"] = s;
  return j;
}

}  // namespace coxtwist

namespace coxtwist {

Json move_json(const CoxeterDiagram& d, const TwistMove& m) {
  Json j;
  j["U"] = set_json(d, m.u);
  j["sigma"] = set_json(d, m.sigma);
  j["X"] = set_json(d, m.x);
  j["Y"] = set_json(d, m.y);
  j["pi"] = map_json(d, d, m.pi);
  if (m.general) j["general"] = true;
  return j;
}

TwistMove move_from_json(const CoxeterDiagram& d, const Json& j) {
  auto names = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("move is missing '") + key + "'");
    return d.set_of(j[key].get<std::vector<std::string>>());
  };
  const GenSet u = names("U"), y = names("Y");
  if (!j.contains("pi") && !j.value("general", false)) return elementary_move(d, u, y);
  TwistMove m;
  m.u = u;
  m.y = y;
  m.x = j.contains("X") ? names("X") : d.all() - u - y;
  m.sigma = j.contains("sigma") ? names("sigma") : GenSet{};
  m.general = j.value("general", false);
  m.pi.assign(d.rank(), -1);
  if (!j.contains("pi") || !j["pi"].is_object()) throw ParseError("move 'pi' must be an object");
  for (const auto& [from, to] : j["pi"].items()) {
    const auto a = d.index_of(from), b = d.index_of(to.get<std::string>());
    if (!a || !b) throw ParseError("move 'pi' names an unknown generator");
    m.pi[*a] = *b;
  }
  validate_move(d, m);
  return m;
}

Json path_json(const CoxeterDiagram& start, const std::vector<TwistMove>& path, CoxeterDiagram* end) {
  Json out = Json::array();
  CoxeterDiagram cur = start;
  for (const auto& m : path) {
    out.push_back(move_json(cur, m));
    cur = apply_twist(cur, m).diagram;
  }
  if (end) *end = cur;
  return out;
}

Json map_json(const CoxeterDiagram& from, const CoxeterDiagram& to, const std::vector<int>& map) {
  Json j = Json::object();
  for (std::size_t v = 0; v < map.size(); ++v)
    if (map[v] >= 0) j[from.name(static_cast<int>(v))] = to.name(map[v]);
  return j;
}

Json untangle_json(const CoxeterDiagram& d, const UntanglePath& p) {
  Json j;
  j["nodes"] = Json::array();
  for (GenSet n : p.nodes) j["nodes"].push_back(set_json(d, n));
  j["links"] = Json::array();
  for (GenSet t : p.links) j["links"].push_back(set_json(d, t));
  j["induced"] = map_json(d, d, p.induced);
  return j;
}

Json group_json(const CoxeterDiagram& d, const PermutationGroup& g) {
  Json j;
  j["domain"] = set_json(d, g.domain);
  j["order"] = g.elements.size();
  j["generators"] = Json::array();
  for (const auto& p : g.generators) j["generators"].push_back(map_json(d, d, p));
  j["elements"] = Json::array();
  for (const auto& p : g.elements) j["elements"].push_back(map_json(d, d, p));
  j["witnesses"] = Json::array();
  for (const auto& w : g.witnesses) j["witnesses"].push_back(untangle_json(d, w));
  return j;
}

}  // namespace coxtwist
