#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxtwist/canonical.hpp"
#include "coxtwist/separation.hpp"

namespace coxtwist {

/// Twist of S along U: X and Y split S - U, and Y is conjugated by an
/// element acting on U as `pi`. Generators keep their indices through a
/// twist, so a move stays meaningful on the twisted diagram.
struct TwistMove {
  GenSet u, sigma, x, y;
  std::vector<int> pi;  ///< by generator; -1 outside U
  /// Caller-supplied pi: only checked to be a diagram automorphism of U
  /// keeping U_sigma and U_nu in place.
  bool general = false;

  bool operator==(const TwistMove&) const = default;
};

/// The elementary move with sigma = U_sigma and pi = omega_sigma (or the
/// identity when U_sigma is empty). Throws DomainError naming the failed
/// condition.
TwistMove elementary_move(const CoxeterDiagram& d, GenSet u, GenSet y);

void validate_move(const CoxeterDiagram& d, const TwistMove& m);

/// pi fixes every point of U, so the twist only renames Y.
bool is_trivial(const TwistMove& m);

struct Twisted {
  CoxeterDiagram diagram;
  /// new name -> name it was twisted from, for every renamed generator
  std::map<std::string, std::string> provenance;
};

Twisted apply_twist(const CoxeterDiagram& d, const TwistMove& m);

/// Every member lies in X + U or in Y + U.
bool preserves_family(const TwistMove& m, const std::vector<GenSet>& f);

/// Image of one set: unchanged inside X + U, pi applied to the U-part
/// inside Y + U, unchanged (same indices) when it meets both sides.
GenSet twist_image(const TwistMove& m, GenSet a);

/// Throws DomainError when the family is not preserved. With `check`, a
/// family that is a separation of `d` must map to a separation of the
/// twisted diagram (InvariantError otherwise).
std::vector<GenSet> induced_family(const CoxeterDiagram& d, const TwistMove& m, const std::vector<GenSet>& f,
                                   bool check = true, const SearchLimits& lim = {});

/// Non-trivial elementary moves: every separating spherical product with
/// U_sigma non-empty and every split of the components of S - U into
/// X (holding the first component) and Y.
std::vector<TwistMove> elementary_moves(const SeparationContext& ctx);

struct TwistLimits {
  std::size_t max_states = 20000;
  SearchLimits separation;
};

struct OrbitEntry {
  CanonicalForm form;
  CoxeterDiagram diagram;
  std::vector<GenSet> family;   ///< image of the preserved family
  std::vector<GenSet> tracked;  ///< images of the tracked sets
  std::vector<TwistMove> path;  ///< moves from the start, in order
};

struct OrbitResult {
  std::vector<OrbitEntry> entries;
  bool truncated = false;
};

/// Breadth-first over elementary moves up to `depth`, deduplicated by
/// canonical form (and by the image of the preserved family when one is
/// given). With `preserve`, only moves preserving the current image of that
/// family are taken. `tracked` sets are carried along with twist_image.
/// `stop` ends the search early once it returns true for a new entry.
OrbitResult twist_orbit(const CoxeterDiagram& d, int depth, const std::optional<std::vector<GenSet>>& preserve = std::nullopt,
                        const std::vector<GenSet>& tracked = {}, const TwistLimits& lim = {},
                        const std::function<bool(const OrbitEntry&)>& stop = {});

struct Verdict {
  bool yes = false;
  std::vector<TwistMove> path;
  /// reached diagram -> target, indexed by generator (the whole diagram or
  /// the matched block, depending on the query)
  std::vector<int> isomorphism;
  std::string reason;
};

/// YES when the target's canonical form is reached within `depth` moves;
/// never NO. Throws CapacityError when the search was cut short without
/// an answer.
Verdict twist_equivalent(const CoxeterDiagram& d1, const CoxeterDiagram& d2, int depth, const TwistLimits& lim = {});

/// Block A of type(II) in d1 against block B of type(II) in d2: searches
/// moves preserving the rest of d1's standard separation for a diagram
/// where the image of A, with its separators attached, is isomorphic to B
/// with B's separators.
Verdict type2_compatible(const CoxeterDiagram& d1, GenSet a, const CoxeterDiagram& d2, GenSet b, int depth,
                         const TwistLimits& lim = {});

struct CompatVerdict {
  bool yes = false;
  std::vector<std::pair<GenSet, GenSet>> type1, type2;  ///< matched blocks
  std::vector<Verdict> type2_witnesses;
  std::string reason;
};

CompatVerdict type12_compatible(const CoxeterDiagram& d1, const CoxeterDiagram& d2, int depth,
                                const TwistLimits& lim = {});

/// Canonical form of the block's induced diagram with one extra vertex per
/// separator inside it, joined to that separator's members.
CanonicalForm attached_block_form(const CoxeterDiagram& d, GenSet block, const std::vector<GenSet>& separators);

}  // namespace coxtwist
