#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mintri/cohomology.hpp"
#include "mintri/skeleton.hpp"

namespace mintri {

enum class MoveKind { kTwoThree, kThreeTwo, kFourFour };
const char* to_string(MoveKind kind);

/// A face class (2-3) or edge class (3-2, 4-4) of the skeleton, by id.
struct MoveSite {
  MoveKind kind = MoveKind::kTwoThree;
  int cell = 0;
  int axis = 0;  // 4-4 only: 0 or 1
  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

std::string describe(const MoveSite& site);

bool applicable(const Triangulation& tri, const Skeleton& sk, const MoveSite& site);

/// Every applicable site; both axes are listed for each 4-4 edge.
std::vector<MoveSite> enumerate_moves(const Triangulation& tri);
std::vector<MoveSite> enumerate_moves(const Triangulation& tri, const Skeleton& sk);

struct MoveResult {
  Triangulation tri;
  /// For each edge class of the result, old edge classes whose colours sum to it.
  std::vector<std::vector<int>> edge_paths;
  /// Edge class created by a 2-3 move (inverse 3-2 site), or -1.
  int created_edge = -1;
  /// Face class created by a 3-2 move, or -1.
  int created_face = -1;
  /// Result tetrahedra that replace the region, in the order of the move table.
  std::vector<int> new_tets;
};

/// Throws kInapplicableMove.
MoveResult apply_move(const Triangulation& tri, const MoveSite& site);

/// Transfers a colouring across a move using the result's edge paths.
Colouring inherit(const Colouring& old, const MoveResult& result);

/// Retriangulates a region of distinct tetrahedra. `old_labels[i]` gives
/// the abstract label of each vertex of tetrahedron `region[i]`; each entry
/// of `new_tets` lists the labels of vertices 0..3 of a replacement.
/// Boundary faces are matched by their label triples.
MoveResult retriangulate(const Triangulation& tri, const std::vector<int>& region,
                         const std::vector<std::array<int, 4>>& old_labels,
                         const std::vector<std::array<int, 4>>& new_tets);

/// Glues labelled tetrahedra along faces with equal label triples; faces
/// whose triple occurs once stay unglued.
Triangulation assemble(const std::vector<std::array<int, 4>>& tets);

}  // namespace mintri
