// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Expected values are written out here; time limits are
// the constants next to each criterion.

#include <chrono>
#include <cstdio>
#include <functional>

#include "coxtwist/canonical.hpp"
#include "coxtwist/oracle.hpp"
#include "coxtwist/standard.hpp"
#include "coxtwist/twist.hpp"
#include "coxtwist/untangle.hpp"
#include "properties.hpp"
#include "replay.hpp"

using namespace testsupport;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    note += (note.empty() ? "" : "; ") + what;
  }
};

std::vector<GenSet> sets(const CoxeterDiagram& d, const char* json) { return gsets(d, Json::parse(json)); }

std::set<FamilyKey> fams(const CoxeterDiagram& d, const char* json) {
  std::set<FamilyKey> out;
  for (const auto& f : Json::parse(json)) out.insert(family_key(gsets(d, f)));
  return out;
}

Outcome e14(const CoxeterDiagram& d) {
  Outcome o;
  SeparationContext ctx(d);
  o.expect(normalized(ctx.atoms()) == sets(d, R"([["a","b1"],["a","b2"],["a","b3"],["b1","c"],["b2","c"],["b3","c"]])"),
           "maximal twist-rigid subsets");
  o.expect(families(minimal_separations(d)) ==
               fams(d, R"([[["a","b1","c"],["a","b2","c"],["a","b3","c"]],[["a","b1","b2","b3"],["b1","b2","b3","c"]]])"),
           "minimal separations");
  const auto st = standard_separation(ctx);
  o.expect(st.family.blocks == std::vector<GenSet>{d.all()}, "standard blocks");
  o.expect(st.type1.empty(), "type(I)");
  o.expect(st.type2 == std::vector<GenSet>{d.all()}, "type(II)");
  return o;
}

Outcome e15(const CoxeterDiagram& d) {
  Outcome o;
  o.expect(separating_spherical_products(d) == sets(d, R"([["b","d","e"],["d","e","g"],["b","e","g"]])"),
           "E15 separating spherical products");
  const auto mins = minimal_separations(d);
  o.expect(families(mins) == fams(d, R"([[["a","b","d","e"],["b","d","e","g","i","j","k","l"],["d","e","f","g"],["b","c","e","g","h"]]])"),
           "E15 minimal separations");
  const auto st = standard_separation(d);
  o.expect(st.type1.size() == 4 && st.type1 == st.family.blocks && st.type2.empty(), "E15 four type(I) blocks");
  return o;
}

Outcome e16(const CoxeterDiagram& d) {
  Outcome o;
  o.expect(families(minimal_separations(d)) ==
               fams(d, R"([[["a","b","d","e","f","g"],["b","c","e","g","h"]],
                           [["a","b","d","e"],["b","c","d","e","f","g","h"]],
                           [["a","b","c","d","e","g","h"],["d","e","f","g"]]])"),
           "E16 minimal separations");
  const auto st = standard_separation(d);
  o.expect(st.family.blocks == std::vector<GenSet>{d.all()} && st.type2 == std::vector<GenSet>{d.all()},
           "E16 standard separation is the whole set, type(II)");
  return o;
}

Outcome e1b2(const CoxeterDiagram& d) {
  Outcome o;
  const auto f = induced_separation(d, gs(d, {"a1", "a2"}));
  o.expect(is_separator(d, gs(d, {"a1"}), f), "{a1} is a separator");
  o.expect(!is_separator(d, gs(d, {"a1", "a2"}), f), "{a1,a2} is not a separator");
  return o;
}

Outcome e1b4(const CoxeterDiagram& d) {
  Outcome o;
  const auto f = induced_separation(d, gs(d, {"a1", "a2"}));
  o.expect(std::find(f.blocks.begin(), f.blocks.end(), gs(d, {"a1", "a2"})) != f.blocks.end(), "{a1,a2} is a block");
  return o;
}

Outcome both(Outcome a, const Outcome& b) {
  a.ok = a.ok && b.ok;
  if (!b.note.empty()) a.note += (a.note.empty() ? "" : "; ") + b.note;
  return a;
}

Outcome untangle_criterion() {
  Outcome o;
  auto d = fixture("a_i").diagram;
  const GenSet from = gs(d, {"a1", "b1"}), to = gs(d, {"a3", "b3"});
  auto p = untangle_reachable(d, from, to);
  o.expect(p.has_value(), "a path from {a1,b1} to {a3,b3}");
  if (p) {
    const auto pos = replay_in_models(d, *p);
    o.expect(!pos.empty() && pos == p->induced, "model replay agrees with the composed permutation");
    GenSet image;
    for (int v : pos)
      if (v >= 0) image.insert(v);
    o.expect(image == to, "image is {a3,b3}");
  }
  auto m = fixture("mobius").diagram;
  auto g = loop_automorphisms(m, gs(m, {"a1", "b1"}));
  std::vector<int> swap(m.rank(), -1);
  swap[*m.index_of("a1")] = *m.index_of("b1");
  swap[*m.index_of("b1")] = *m.index_of("a1");
  o.expect(std::find(g.elements.begin(), g.elements.end(), swap) != g.elements.end(), "Mobius loop swaps a1 and b1");
  return o;
}

Outcome twist_criterion() {
  Outcome o;
  auto d = fixture("e10").diagram, t = fixture("e10_twisted").diagram;
  auto move = elementary_move(d, gs(d, {"a1", "a2", "a3", "a4"}), gs(d, {"y1", "y2", "y3"}));
  o.expect(move.sigma == gs(d, {"a1", "a2"}), "sigma is {a1,a2}");
  auto once = apply_twist(d, move).diagram;
  o.expect(canonical_form(once) == canonical_form(t), "result matches the twisted fixture");
  auto v = twist_equivalent(d, once, 1);
  o.expect(v.yes && v.path.size() == 1, "equiv at depth 1 is YES with one move");
  if (v.yes) {
    CoxeterDiagram cur = d;
    for (const auto& m : v.path) cur = apply_twist(cur, m).diagram;
    bool iso = static_cast<int>(v.isomorphism.size()) == cur.rank();
    for (int i = 0; iso && i < cur.rank(); ++i)
      for (int k = 0; k < cur.rank(); ++k) iso = iso && cur.order(i, k) == once.order(v.isomorphism[i], v.isomorphism[k]);
    o.expect(iso, "witness replays");
  }
  o.expect(canonical_form(apply_twist(once, move).diagram) == canonical_form(d), "twice gives the original");
  return o;
}

Outcome omega_criterion() {
  Outcome o;
  int passed = 0, mismatched = 0, skipped = 0;
  for (const auto& name : fixture_names()) {
    auto r = verify_omega(fixture(name).diagram);
    passed += r.passed;
    mismatched += r.mismatched;
    skipped += r.skipped;
  }
  o.expect(mismatched == 0, std::to_string(mismatched) + " mismatches");
  o.expect(passed > 0, "nothing checked");
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(passed) + " passed, " + std::to_string(skipped) +
            " outside the modelled types";
  return o;
}

Outcome property_criterion() {
  Outcome o;
  PropertyTally t;
  for (const auto& name : fixture_names()) check_all(name, fixture(name).diagram, t);
  for (const auto& [label, d] : random_suite(kSuiteSeed, kSuiteSize)) check_all(label, d, t);
  for (const auto& label : t.skipped) o.expect(false, label + " past the search bounds");
  for (const char* p : {kStandardIsSeparation, kSphericalInAtom, kTwistTypeCounts, kSphericalSeparators, kAtomsBruteForce}) {
    const auto bad = t.labels(p);
    o.expect(bad.empty(), std::string(p) + " fails on " + std::to_string(bad.size()) + "/" + std::to_string(t.diagrams));
  }
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(t.diagrams) + " diagrams, " + std::to_string(t.moves) + " moves";
  return o;
}

// Block structure that criteria 1 to 3 look at, plus the separator
// verdicts where a1 and a2 exist.
Json structure(const CoxeterDiagram& d) {
  Json j;
  SeparationContext ctx(d);
  j["atoms"] = sets_json(d, ctx.atoms());
  Json mins = Json::array();
  for (const auto& key : families(minimal_separations(d))) {
    std::vector<GenSet> blocks;
    for (auto b : key) blocks.push_back(GenSet(b));
    mins.push_back(sets_json(d, blocks));
  }
  j["minimal"] = mins;
  const auto st = standard_separation(ctx);
  j["blocks"] = sets_json(d, st.family.blocks);
  j["type1"] = sets_json(d, st.type1);
  if (d.index_of("a1") && d.index_of("a2")) {
    const auto f = induced_separation(d, d.set_of({"a1", "a2"}));
    j["induced"] = sets_json(d, f.blocks);
    j["separators"] = {is_separator(d, d.set_of({"a1"}), f), is_separator(d, d.set_of({"a1", "a2"}), f)};
  }
  return j;
}

Outcome label_criterion() {
  Outcome o;
  int free_pairs = 0;
  for (const char* name : {"e14", "e15", "e16", "e1b2", "e1b4"}) {
    const auto doc = fixture(name);
    free_pairs += static_cast<int>(doc.free.size());
    const auto base = structure(doc.diagram);
    for (int m : {2, 5})
      o.expect(structure(with_free_labels(doc, m)) == base,
               std::string(name) + " structure changes with free labels " + std::to_string(m));
  }
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(free_pairs) + " free pairs relabelled";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "E14 atoms, minimal separations, standard separation", 1.0, [] { return e14(fixture("e14").diagram); }},
      {2, "E15 and E16 separations", 5.0,
       [] { return both(e15(fixture("e15").diagram), e16(fixture("e16").diagram)); }},
      {3, "E1B2 separator discrimination, E1B4 block", 1.0,
       [] { return both(e1b2(fixture("e1b2").diagram), e1b4(fixture("e1b4").diagram)); }},
      {4, "untangle chain replayed in models, Mobius loop", 10.0, untangle_criterion},
      {5, "E10 twist, equivalence witness, involution", 5.0, twist_criterion},
      {6, "longest-element automorphisms against group models", 60.0, omega_criterion},
      {7, "property suite", 600.0, property_criterion},
      {8, "free-label robustness", 60.0, label_criterion},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("threw: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) o.expect(false, "over the time limit");
    failed += !o.ok;
    std::printf("%s  %d  %-52s %7.2fs / %.0fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, s, c.limit_s, o.note.c_str());
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
