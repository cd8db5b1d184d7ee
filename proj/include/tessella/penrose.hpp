#pragma once

#include <map>
#include <string>
#include <vector>

#include "tessella/errors.hpp"
#include "tessella/tiling.hpp"

namespace tessella {

// Marked aperiodic prototile sets and the machinery around them: rhombus
// substitution, matching-rule checking, corona search, the one rhombus
// marking that tiles periodically, and the recomposition of marked rhombi
// into three unmarked convex prototiles.  Everything here runs on the exact
// backend; all coordinates live in Q(sqrt5, sin36).

// Unit-edge thick (72/108) and thin (36/144) rhombi with colored vertices
// and oriented edges.  Keys "thick" and "thin".
std::map<std::string, MarkedPrototile<Exact>> penrose_rhombus_prototiles();

// Kite and dart.  Edge lengths 1 and phi, vertex colors in a two-letter
// alphabet, no arrows; the dart is the one non-convex prototile in the
// library.  Keys "kite" and "dart".
std::map<std::string, MarkedPrototile<Exact>> kite_dart_prototiles();

// Same two rhombus shapes, arrows only and no vertex colors.  Unlike the set
// above, the thin one tiles periodically.  Keys "thick" and "thin".
std::map<std::string, MarkedPrototile<Exact>> oriented_rhombus_prototiles();

struct MatchingIssue {
  enum class Kind {
    EdgeDecoration,  // shared edge with unequal counts or opposing arrows
    VertexColor,     // two colored corners with different colors meet
    NotEdgeToEdge,   // a corner lands in the interior of another tile's edge
  };
  Kind kind;
  size_t tile_a = 0;
  size_t tile_b = 0;
  // realized edge slots for edge issues, realized vertex slots for colors
  size_t slot_a = 0;
  size_t slot_b = 0;
  std::string what;
};

// Every violation of the marking rules in the placed patch: each fully shared
// edge must carry equal arrow counts pointing the same way in the plane, and
// colored corners meeting at a point must agree.  Empty means the patch is
// legal.  Tiles referencing prototiles without a marking match anything.
std::vector<MatchingIssue> check_matching(const Tiling<Exact>& t);

// k rounds of rhombus deflation, rescaled by phi^k so the output rhombi have
// unit edges again.  Each rhombus splits into half-rhombus triangles, the
// triangles subdivide, and halves remerge into full rhombi; halves that lost
// their twin across the patch boundary are completed outward, so the result
// is a slightly larger patch of whole rhombi from the same tiling.  The
// window and all coordinates come back magnified by phi^k.  Throws
// NotARhombusPatch unless the input prototiles are exactly the ones from
// penrose_rhombus_prototiles().
Tiling<Exact> substitute(const Tiling<Exact>& patch, int k);

struct SearchOutcome {
  bool completed = false;
  // coronas fully closed; equals the requested depth exactly when completed
  int layers = 0;
  // the completed patch, or a maximal partial configuration as witness
  Tiling<Exact> configuration;
  std::vector<int> layer_of;  // per tile: 0 = center, 1 = first corona, ...
  long long nodes = 0;        // placements attempted
};

// Exhaustive backtracking over all marking-legal edge-to-edge placements of
// copies of p around one central copy.  Completing a corona means every
// vertex of the layers below is fully surrounded and every edge shared.
// Placement targets are forced (first open feature of the lowest incomplete
// layer), so the search tree covers exactly the completion choices.  Throws
// SearchBudgetExceeded when more than node_budget placements are attempted,
// std::invalid_argument for depth < 1.
SearchOutcome corona_search(const MarkedPrototile<Exact>& p, int depth,
                            long long node_budget = 1000000);

// m x n patch of the arrows-only thin rhombus tiled by pure translation,
// with a validation window pulled inside the patch.  check_matching on the
// result is empty.
Tiling<Exact> oriented_rhombus_periodic(int m, int n);

// The cut hub J inside the thick rhombus ABCD plus its transported images
// K, L inside the thin rhombus EFGH.  Cutting J to B, C, D and drawing EK,
// HK, FL, GL, KL splits the two rhombi into pieces that reassemble, across
// dissolved rhombus edges, into one hexagon and two pentagons.  K and L are
// placed by the rigid motions taking (B,C) to (H,E) and (C,D) to (F,G), so
// HK = BJ, EK = CJ = FL, and GL = DJ hold exactly by construction.
struct AmmannMarking {
  Vec2<Exact> A, B, C, D;  // thick rhombus, unit edges, A at the origin
  Vec2<Exact> E, F, G, H;  // thin rhombus, unit edges, E at the origin
  Vec2<Exact> J;
  Vec2<Exact> K, L;
};

// J = mid(B,C) + split * (mid(C,D) - mid(B,C)).  The default split 2/5 is
// generic: DJ, CJ, BJ and KL come out pairwise distinct, which the
// degeneracy equalities pin to split values 0, 1/2 and 1.
AmmannMarking ammann_marking(const Exact& split = Exact::frac(2, 5));

// The three unmarked convex prototiles of the recomposition: the hexagon
// first, then the two pentagons by ascending area.  Each is translated so
// its first vertex sits at the origin.  Throws DegenerateJ when DJ, CJ, BJ,
// KL are not pairwise distinct.
std::vector<Polygon<Exact>> ammann_prototiles(const AmmannMarking& m);

// Cut every rhombus of t into its pieces, dissolve the former rhombus edges,
// and merge the pieces across them.  Interior tiles come back as copies of
// the three ammann_prototiles shapes ("hexagon", "pentagon-a", "pentagon-b");
// pieces that lost a neighbour across the patch boundary stay as fragment
// prototiles.  Total area is preserved exactly.  Throws MatchingViolation if
// t fails check_matching, NotARhombusPatch for foreign prototiles,
// DegenerateJ for a degenerate marking.
Tiling<Exact> ammann_recompose(const Tiling<Exact>& t, const AmmannMarking& m);

}  // namespace tessella
