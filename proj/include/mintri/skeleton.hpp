#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mintri/triangulation.hpp"

namespace mintri {

struct EdgeOccurrence {
  int tet = 0;
  int edge = 0;  // index into kEdgeVertices
  int sign = 1;  // +1 if low->high agrees with the class direction
};

struct EdgeClass {
  int id = 0;
  std::vector<EdgeOccurrence> occurrences;
  int degree = 0;
  bool boundary = false;
  bool valid = true;  // false if the edge is identified with its own reverse
};

struct LinkSurface {
  int vertices = 0;
  int edges = 0;
  int triangles = 0;
  int euler = 0;
  bool orientable = true;
  bool closed = true;
  bool is_torus() const { return closed && orientable && euler == 0; }
};

struct VertexClass {
  int id = 0;
  std::vector<std::array<int, 2>> corners;  // (tet, vertex)
  LinkSurface link;
};

enum class FaceType { kTriangle, kCone, kMoebius, kThreeFold, kDunce };
const char* to_string(FaceType type);

struct FaceClass {
  int id = 0;
  int tet = 0;
  int face = 0;
  bool boundary = false;
  FaceType type = FaceType::kTriangle;
};

/// All derived cell data of a triangulation.
struct Skeleton {
  std::vector<EdgeClass> edges;
  std::vector<VertexClass> vertices;
  std::vector<FaceClass> faces;
  std::vector<std::array<int, 6>> edge_of;
  std::vector<std::array<int, 6>> edge_sign;
  std::vector<std::array<int, 4>> vertex_of;
  std::vector<std::array<int, 4>> face_of;
  bool orientable = true;
  std::vector<int> orientation;  // +1/-1 per tetrahedron when orientable

  int edge_class(int tet, int a, int b) const {
    return edge_of[static_cast<std::size_t>(tet)][static_cast<std::size_t>(edge_index(a, b))];
  }
};

Skeleton skeleton(const Triangulation& tri);

std::vector<EdgeClass> edge_classes(const Triangulation& tri);
std::vector<VertexClass> vertex_links(const Triangulation& tri);
bool is_orientable(const Triangulation& tri);
std::vector<FaceClass> classify_faces(const Triangulation& tri);

/// One vertex class whose link is a torus, orientable, closed, valid edges.
bool is_admissible(const Skeleton& sk);
bool is_admissible(const Triangulation& tri);

struct AnatomyReport {
  int min_degree = 0;
  std::map<int, int> degree_histogram;
  std::map<FaceType, int> face_types;
  int vertex_classes = 0;
  bool all_links_tori = false;
  bool orientable = false;
  bool passes = false;
};

AnatomyReport anatomy_report(const Triangulation& tri);
AnatomyReport anatomy_report(const Skeleton& sk);

}  // namespace mintri
