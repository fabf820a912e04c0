#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mintri/skeleton.hpp"

namespace mintri {

/// Meridian intersection numbers with the three boundary edges, a <= b <= c.
struct LstParams {
  long long a = 1, b = 2, c = 3;
  friend bool operator==(const LstParams&, const LstParams&) = default;
};

struct LstBuild {
  Triangulation tri;
  LstParams params;
  /// Boundary edge classes in the order a, b, c, with their degrees.
  std::array<int, 3> boundary_edges{};
  std::array<int, 3> degrees{};
  /// The two unglued faces as (tet, face).
  std::array<std::array<int, 2>, 2> boundary_faces{};
};

/// Layers one tetrahedron per letter ('a', 'b' or 'c') on the boundary edge
/// with that label, starting from the one-tetrahedron solid torus (1,2,3).
/// With `checking` set, layering on the degree-1 boundary edge is rejected
/// with kLayering since it folds back onto the previous tetrahedron.
LstBuild lst_build(const std::string& word, bool checking = true);

/// Labels the three weights: a for the smallest, c for the largest.
LstParams sorted_params(long long x, long long y, long long z);

struct LstCertificate {
  std::vector<int> tets;  // core first, then in layering order
  int core = 0;
  std::array<int, 3> boundary_edges{};  // edge classes of T for a, b, c
  std::array<int, 3> degrees{};         // degrees inside the solid torus
  /// One (tet, edge) of T per boundary slot; classes of T may coincide.
  std::array<std::array<int, 2>, 3> boundary_reps{};
  std::array<std::array<int, 2>, 2> boundary_faces{};
  LstParams params;
  bool maximal = false;
};

struct Degree3Result {
  int edge = 0;
  std::optional<LstCertificate> certificate;
  /// Incident tetrahedra are three distinct ones, so a 3-2 move applies.
  bool three_two = false;
  std::string failure;
};

/// One entry per degree-3 edge class, matched against lst_build("b").
std::vector<Degree3Result> detect_degree3(const Triangulation& tri);

/// Absorbs tetrahedra layered over the boundary until none is.
LstCertificate maximal_extension(const LstCertificate& cert, const Triangulation& tri);

enum class LstIntersection { kEmpty, kVertex, kEdge, kOther };
const char* to_string(LstIntersection kind);

LstIntersection pairwise_intersection(const LstCertificate& c1, const LstCertificate& c2,
                                      const Triangulation& tri);

}  // namespace mintri
