#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "coxtwist/errors.hpp"
#include "coxtwist/io.hpp"
#include "coxtwist/oracle.hpp"
#include "coxtwist/report.hpp"
#include "coxtwist/standard.hpp"
#include "coxtwist/twist.hpp"
#include "coxtwist/untangle.hpp"

using namespace coxtwist;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

GenSet named_set(const CoxeterDiagram& d, const std::string& list) { return d.set_of(split_names(list)); }

std::string pi_text(const CoxeterDiagram& d, const TwistMove& m) {
  std::string s;
  m.u.for_each([&](int a) { s += (s.empty() ? "" : ", ") + d.name(a) + " -> " + d.name(m.pi[a]); });
  return s;
}

int cmd_analyze(const std::string& path, const std::string& dot, bool timing) {
  const auto doc = load_document(path);
  const auto t0 = std::chrono::steady_clock::now();
  Json j = analysis_report(doc.diagram);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (timing) j["timing_ms"] = ms;
  if (!dot.empty()) {
    std::vector<GenSet> blocks;
    for (const auto& b : j["standard_separation"]["blocks"]) blocks.push_back(doc.diagram.set_of(b));
    std::ofstream out(dot);
    if (!out) throw DomainError("cannot write '" + dot + "'");
    out << to_dot(doc.diagram, blocks);
  }
  emit(j);
  return 0;
}

int cmd_twist(const std::string& path, const std::string& u_names, const std::string& side, const std::string& out_path) {
  const auto doc = load_document(path);
  const CoxeterDiagram& d = doc.diagram;
  const GenSet u = named_set(d, u_names);
  if (!separates(d, u)) throw DomainError("U does not separate S");
  const GenSet given = named_set(d, side);
  if (given.empty() || given.intersects(u)) throw DomainError("--side must name generators outside U");
  // Y is every component of S - U that the named generators touch.
  GenSet y;
  for (GenSet c : components(d, d.all() - u))
    if (c.intersects(given)) y |= c;
  const TwistMove m = elementary_move(d, u, y);
  if (is_trivial(m)) std::cerr << "warning: pi is the identity; the twist only renames Y\n";
  const Twisted t = apply_twist(d, m);

  DiagramDocument out{t.diagram, {}, {}, t.provenance, Json::object()};
  out.note = "Twist along U = {" + u_names + "}, sigma = {";
  bool first = true;
  m.sigma.for_each([&](int v) {
    out.note += (first ? "" : ",") + d.name(v);
    first = false;
  });
  out.note += "}, pi: " + pi_text(d, m) + ".";
  Json j = document_json(out);
  if (out_path.empty()) {
    emit(j);
  } else {
    std::ofstream f(out_path);
    if (!f) throw DomainError("cannot write '" + out_path + "'");
    f << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_orbit(const std::string& path, int depth, std::size_t max_states) {
  const auto doc = load_document(path);
  TwistLimits lim;
  lim.max_states = max_states;
  std::size_t count = 0;
  const auto orbit = twist_orbit(doc.diagram, depth, std::nullopt, {}, lim, [&](const OrbitEntry&) {
    if (++count % 1000 == 0) std::cerr << "orbit: " << count << " diagrams\n";
    return false;
  });
  Json j;
  j["schema"] = 1;
  j["depth"] = depth;
  j["size"] = orbit.entries.size();
  j["truncated"] = orbit.truncated;
  j["entries"] = Json::array();
  for (const auto& e : orbit.entries) {
    Json entry;
    entry["certificate"] = e.form.certificate;
    entry["moves"] = path_json(doc.diagram, e.path);
    entry["diagram"] = diagram_json(e.diagram);
    j["entries"].push_back(entry);
  }
  emit(j);
  return orbit.truncated ? 3 : 0;
}

int cmd_equiv(const std::string& p1, const std::string& p2, int depth, std::size_t max_states) {
  const auto d1 = load_document(p1).diagram, d2 = load_document(p2).diagram;
  TwistLimits lim;
  lim.max_states = max_states;
  const Verdict v = twist_equivalent(d1, d2, depth, lim);
  Json j;
  j["schema"] = 1;
  j["depth"] = depth;
  j["verdict"] = v.yes ? "YES" : "UNKNOWN";
  if (v.yes) {
    CoxeterDiagram end = d1;
    j["witness"]["moves"] = path_json(d1, v.path, &end);
    j["witness"]["isomorphism"] = map_json(end, d2, v.isomorphism);
  } else {
    j["reason"] = v.reason;
  }
  emit(j);
  return 0;
}

Json pairs_json(const CoxeterDiagram& a, const CoxeterDiagram& b, const std::vector<std::pair<GenSet, GenSet>>& v) {
  Json out = Json::array();
  for (const auto& [x, y] : v) out.push_back({set_json(a, x), set_json(b, y)});
  return out;
}

int cmd_compat(const std::string& p1, const std::string& p2, int depth, std::size_t max_states) {
  const auto d1 = load_document(p1).diagram, d2 = load_document(p2).diagram;
  TwistLimits lim;
  lim.max_states = max_states;
  const CompatVerdict v = type12_compatible(d1, d2, depth, lim);
  Json j;
  j["schema"] = 1;
  j["depth"] = depth;
  j["verdict"] = v.yes ? "YES" : "UNKNOWN";
  j["twist_equivalent"] = twist_equivalent(d1, d2, depth, lim).yes ? "YES" : "UNKNOWN";
  if (v.yes) {
    j["type1"] = pairs_json(d1, d2, v.type1);
    j["type2"] = pairs_json(d1, d2, v.type2);
    j["type2_witnesses"] = Json::array();
    for (const auto& w : v.type2_witnesses) {
      CoxeterDiagram end = d1;
      Json wj;
      wj["moves"] = path_json(d1, w.path, &end);
      wj["isomorphism"] = map_json(end, d2, w.isomorphism);
      j["type2_witnesses"].push_back(wj);
    }
  } else {
    j["reason"] = v.reason;
  }
  emit(j);
  return 0;
}

int cmd_untangle(const std::string& path, const std::string& from, const std::string& to, int maxlen, bool loops) {
  const auto d = load_document(path).diagram;
  const GenSet u = named_set(d, from);
  const std::optional<int> len = maxlen >= 0 ? std::optional<int>(maxlen) : std::nullopt;
  Json j;
  j["schema"] = 1;
  if (loops) {
    j["group"] = group_json(d, loop_automorphisms(d, u, len));
  } else {
    if (to.empty()) throw DomainError("--to is required unless --loops is given");
    const auto p = untangle_reachable(d, u, named_set(d, to), len);
    j["reachable"] = p.has_value();
    if (p) j["path"] = untangle_json(d, *p);
    else j["message"] = "no path";
  }
  emit(j);
  return 0;
}

std::string set_text(const CoxeterDiagram& d, GenSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    out += (first ? "" : ",") + d.name(v);
    first = false;
  });
  return out + "}";
}

int cmd_oracle_verify(const std::string& path) {
  const auto d = load_document(path).diagram;
  const auto rep = verify_omega(d);
  for (const auto& c : rep.checks) {
    switch (c.status) {
      case OmegaCheck::Status::Pass: std::cout << "pass: " << set_text(d, c.subset) << "\n"; break;
      case OmegaCheck::Status::Skipped: std::cout << "skipped: " << c.detail << " " << set_text(d, c.subset) << "\n"; break;
      case OmegaCheck::Status::Mismatch: std::cout << "MISMATCH: " << set_text(d, c.subset) << " " << c.detail << "\n"; break;
    }
  }
  std::cout << rep.passed << " passed, " << rep.mismatched << " mismatched, " << rep.skipped << " skipped\n";
  return rep.mismatched ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separations and twists of Coxeter diagrams"};
  app.require_subcommand(1);
  std::string path, path2, u_names, side, out, from, to, dot;
  int depth = 1, maxlen = -1;
  std::size_t max_states = 20000;
  bool loops = false, timing = false;

  auto* analyze = app.add_subcommand("analyze", "Maximal twist-rigid subsets, separations, standard separation");
  analyze->add_option("diagram", path)->required();
  analyze->add_option("--dot", dot, "Also write a DOT graph with the standard blocks as clusters");
  analyze->add_flag("--timing", timing, "Include wall-clock time in the report");

  auto* twist = app.add_subcommand("twist", "Apply an elementary twist");
  twist->add_option("diagram", path)->required();
  twist->add_option("--u", u_names, "Comma-separated U")->required();
  twist->add_option("--side", side, "Generators on the twisted side")->required();
  twist->add_option("--out", out, "Output file (default stdout)");

  auto* orbit = app.add_subcommand("orbit", "Diagrams reachable by elementary twists");
  orbit->add_option("diagram", path)->required();
  orbit->add_option("--depth", depth, "Maximum number of moves")->check(CLI::NonNegativeNumber);
  orbit->add_option("--max-states", max_states, "Stop after this many diagrams");

  auto* equiv = app.add_subcommand("equiv", "Search for a twist sequence between two diagrams");
  equiv->add_option("first", path)->required();
  equiv->add_option("second", path2)->required();
  equiv->add_option("--depth", depth, "Maximum number of moves")->check(CLI::NonNegativeNumber);
  equiv->add_option("--max-states", max_states, "Stop after this many diagrams");

  auto* compat = app.add_subcommand("compat", "type(I)-type(II) compatibility");
  compat->add_option("first", path)->required();
  compat->add_option("second", path2)->required();
  compat->add_option("--depth", depth, "Maximum number of moves")->check(CLI::NonNegativeNumber);
  compat->add_option("--max-states", max_states, "Stop after this many diagrams");

  auto* untangle = app.add_subcommand("untangle", "Untangle chains between subsets");
  untangle->add_option("diagram", path)->required();
  untangle->add_option("--from", from, "Comma-separated start set")->required();
  untangle->add_option("--to", to, "Comma-separated target set");
  untangle->add_option("--maxlen", maxlen, "Maximum number of links");
  untangle->add_flag("--loops", loops, "Permutations of --from induced by closed chains");

  auto* oracle = app.add_subcommand("oracle-verify", "Check longest-element automorphisms by brute force");
  oracle->add_option("diagram", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return cmd_analyze(path, dot, timing);
    if (*twist) return cmd_twist(path, u_names, side, out);
    if (*orbit) return cmd_orbit(path, depth, max_states);
    if (*equiv) return cmd_equiv(path, path2, depth, max_states);
    if (*compat) return cmd_compat(path, path2, depth, max_states);
    if (*untangle) return cmd_untangle(path, from, to, maxlen, loops);
    if (*oracle) return cmd_oracle_verify(path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
