#pragma once

#include <array>
#include <vector>

#include "mintri/cohomology.hpp"
#include "mintri/skeleton.hpp"

namespace mintri {

/// Seven coordinates per tetrahedron: triangle counts at vertices 0..3, then
/// quadrilateral counts for quad types 0..2 (see quad_of_edge).
struct NormalSurface {
  std::vector<std::array<int, 7>> coords;

  int tri(int t, int v) const { return coords[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)]; }
  int quad(int t, int k) const { return coords[static_cast<std::size_t>(t)][static_cast<std::size_t>(4 + k)]; }
  int discs() const;
  int triangles() const;
  int quads() const;
  /// Points on edge e of tetrahedron t.
  int edge_weight(int t, int e) const;
  /// Arcs on face f of tetrahedron t cutting off corner a.
  int arcs(int t, int f, int a) const;
};

/// Quad type meeting the arc at corner a of face f.
inline int quad_at_corner(int a, int f) { return quad_of_edge(edge_index(a, f)); }

/// One disc per tetrahedron: a triangle for type t, the quad missing the even
/// pair for type q. Throws kZeroCocycle for phi = 0.
NormalSurface canonical_surface(const Skeleton& sk, const Colouring& phi);

/// Unit triangle at every corner of one vertex class.
NormalSurface vertex_link_surface(const Skeleton& sk, int vertex_class);

/// Nonnegative, one quad type per tetrahedron, and matching across glued faces.
bool is_admissible(const Triangulation& tri, const NormalSurface& s);

/// Sum of edge-class weights of the surface.
int weight(const Skeleton& sk, const NormalSurface& s);

/// Vertices minus edges plus discs of the induced cell structure. Throws
/// kInadmissibleSurface.
int euler_characteristic(const Triangulation& tri, const Skeleton& sk, const NormalSurface& s);

struct SurfaceComponent {
  int euler = 0;
  int vertices = 0;
  int edges = 0;
  int discs = 0;
  bool orientable = true;
  int max_edge_incidence = 0;
  bool sphere() const { return orientable && euler == 2; }
};

struct SurfaceComponents {
  std::vector<SurfaceComponent> parts;
  int euler() const;
  bool has_sphere() const;
  /// Sum over components of max(0, -chi).
  int chi_minus() const;
};

SurfaceComponents components(const Triangulation& tri, const Skeleton& sk, const NormalSurface& s);

}  // namespace mintri
