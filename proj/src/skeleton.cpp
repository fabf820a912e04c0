#include "mintri/skeleton.hpp"

#include <algorithm>
#include <climits>
#include <queue>

namespace mintri {

const char* to_string(FaceType type) {
  switch (type) {
    case FaceType::kTriangle: return "triangle";
    case FaceType::kCone: return "cone";
    case FaceType::kMoebius: return "moebius";
    case FaceType::kThreeFold: return "three_fold";
    case FaceType::kDunce: return "dunce";
  }
  return "unknown";
}

namespace {

using Idx = std::size_t;

Idx ix(int i) { return static_cast<Idx>(i); }

void find_edges(const Triangulation& tri, Skeleton& sk) {
  const int n = tri.size();
  sk.edge_of.assign(ix(n), {-1, -1, -1, -1, -1, -1});
  sk.edge_sign.assign(ix(n), {0, 0, 0, 0, 0, 0});
  for (int t0 = 0; t0 < n; ++t0) {
    for (int e0 = 0; e0 < 6; ++e0) {
      if (sk.edge_of[ix(t0)][ix(e0)] >= 0) continue;
      EdgeClass ec;
      ec.id = static_cast<int>(sk.edges.size());
      std::queue<std::array<int, 2>> q;
      sk.edge_of[ix(t0)][ix(e0)] = ec.id;
      sk.edge_sign[ix(t0)][ix(e0)] = 1;
      q.push({t0, e0});
      while (!q.empty()) {
        const auto [t, e] = q.front();
        q.pop();
        const int s = sk.edge_sign[ix(t)][ix(e)];
        ec.occurrences.push_back({t, e, s});
        const int a = kEdgeVertices[ix(e)][0];
        const int b = kEdgeVertices[ix(e)][1];
        for (int f = 0; f < 4; ++f) {
          if (f == a || f == b) continue;
          const auto& g = tri.gluing(t, f);
          if (!g) {
            ec.boundary = true;
            continue;
          }
          const int pa = g->perm[a];
          const int pb = g->perm[b];
          const int e2 = edge_index(pa, pb);
          const int s2 = pa < pb ? s : -s;
          int& slot = sk.edge_of[ix(g->tet)][ix(e2)];
          if (slot < 0) {
            slot = ec.id;
            sk.edge_sign[ix(g->tet)][ix(e2)] = s2;
            q.push({g->tet, e2});
          } else if (sk.edge_sign[ix(g->tet)][ix(e2)] != s2) {
            ec.valid = false;
          }
        }
      }
      ec.degree = static_cast<int>(ec.occurrences.size());
      sk.edges.push_back(std::move(ec));
    }
  }
}

void find_vertices(const Triangulation& tri, Skeleton& sk) {
  const int n = tri.size();
  sk.vertex_of.assign(ix(n), {-1, -1, -1, -1});
  std::vector<std::array<int, 4>> corner_sign(ix(n), {0, 0, 0, 0});
  for (int t0 = 0; t0 < n; ++t0) {
    for (int v0 = 0; v0 < 4; ++v0) {
      if (sk.vertex_of[ix(t0)][ix(v0)] >= 0) continue;
      VertexClass vc;
      vc.id = static_cast<int>(sk.vertices.size());
      int glued_sides = 0;
      int free_sides = 0;
      std::queue<std::array<int, 2>> q;
      sk.vertex_of[ix(t0)][ix(v0)] = vc.id;
      corner_sign[ix(t0)][ix(v0)] = 1;
      q.push({t0, v0});
      while (!q.empty()) {
        const auto [t, v] = q.front();
        q.pop();
        vc.corners.push_back({t, v});
        const int s = corner_sign[ix(t)][ix(v)];
        for (int f = 0; f < 4; ++f) {
          if (f == v) continue;
          const auto& g = tri.gluing(t, f);
          if (!g) {
            ++free_sides;
            continue;
          }
          ++glued_sides;
          const int v2 = g->perm[v];
          const int s2 = -g->perm.sign() * s;
          int& slot = sk.vertex_of[ix(g->tet)][ix(v2)];
          if (slot < 0) {
            slot = vc.id;
            corner_sign[ix(g->tet)][ix(v2)] = s2;
            q.push({g->tet, v2});
          } else if (corner_sign[ix(g->tet)][ix(v2)] != s2) {
            vc.link.orientable = false;
          }
        }
      }
      vc.link.triangles = static_cast<int>(vc.corners.size());
      vc.link.edges = glued_sides / 2 + free_sides;
      vc.link.closed = free_sides == 0;
      sk.vertices.push_back(std::move(vc));
    }
  }
  // Each end of an edge class is one vertex of the link at that end.
  for (const auto& ec : sk.edges) {
    const auto& occ = ec.occurrences.front();
    const int a = kEdgeVertices[ix(occ.edge)][0];
    const int b = kEdgeVertices[ix(occ.edge)][1];
    const int va = sk.vertex_of[ix(occ.tet)][ix(a)];
    const int vb = sk.vertex_of[ix(occ.tet)][ix(b)];
    ++sk.vertices[ix(va)].link.vertices;
    if (ec.valid) ++sk.vertices[ix(vb)].link.vertices;
  }
  for (auto& vc : sk.vertices)
    vc.link.euler = vc.link.vertices - vc.link.edges + vc.link.triangles;
}

void find_orientation(const Triangulation& tri, Skeleton& sk) {
  const int n = tri.size();
  sk.orientation.assign(ix(n), 0);
  sk.orientation[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int t = q.front();
    q.pop();
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) continue;
      const int s2 = -g->perm.sign() * sk.orientation[ix(t)];
      int& slot = sk.orientation[ix(g->tet)];
      if (slot == 0) {
        slot = s2;
        q.push(g->tet);
      } else if (slot != s2) {
        sk.orientable = false;
      }
    }
  }
  if (!sk.orientable) sk.orientation.clear();
}

FaceType face_type(const Skeleton& sk, int t, int f) {
  std::array<int, 3> v{};
  for (int i = 0, k = 0; i < 4; ++i)
    if (i != f) v[ix(k++)] = i;
  // Directed edge x->y of the face: class id and sign relative to class direction.
  auto directed = [&](int x, int y) {
    const int e = edge_index(x, y);
    const int s = sk.edge_sign[ix(t)][ix(e)];
    return std::array<int, 2>{sk.edge_of[ix(t)][ix(e)], x < y ? s : -s};
  };
  const auto ab = directed(v[0], v[1]);
  const auto bc = directed(v[1], v[2]);
  const auto ca = directed(v[2], v[0]);
  if (ab[0] == bc[0] && bc[0] == ca[0])
    return (ab[1] == bc[1] && bc[1] == ca[1]) ? FaceType::kThreeFold : FaceType::kDunce;
  // Two edges leaving the shared vertex x in the same class.
  auto pair_type = [&](int x, int y, int z) {
    const auto u = directed(x, y);
    const auto w = directed(x, z);
    return u[1] == w[1] ? FaceType::kCone : FaceType::kMoebius;
  };
  if (ab[0] == bc[0]) return pair_type(v[1], v[0], v[2]);
  if (bc[0] == ca[0]) return pair_type(v[2], v[1], v[0]);
  if (ca[0] == ab[0]) return pair_type(v[0], v[2], v[1]);
  return FaceType::kTriangle;
}

void find_faces(const Triangulation& tri, Skeleton& sk) {
  const int n = tri.size();
  sk.face_of.assign(ix(n), {-1, -1, -1, -1});
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      if (sk.face_of[ix(t)][ix(f)] >= 0) continue;
      FaceClass fc;
      fc.id = static_cast<int>(sk.faces.size());
      fc.tet = t;
      fc.face = f;
      sk.face_of[ix(t)][ix(f)] = fc.id;
      const auto& g = tri.gluing(t, f);
      if (g)
        sk.face_of[ix(g->tet)][ix(g->perm[f])] = fc.id;
      else
        fc.boundary = true;
      fc.type = face_type(sk, t, f);
      sk.faces.push_back(fc);
    }
  }
}

}  // namespace

Skeleton skeleton(const Triangulation& tri) {
  Skeleton sk;
  find_edges(tri, sk);
  find_vertices(tri, sk);
  find_orientation(tri, sk);
  find_faces(tri, sk);
  return sk;
}

std::vector<EdgeClass> edge_classes(const Triangulation& tri) { return skeleton(tri).edges; }
std::vector<VertexClass> vertex_links(const Triangulation& tri) { return skeleton(tri).vertices; }
bool is_orientable(const Triangulation& tri) { return skeleton(tri).orientable; }
std::vector<FaceClass> classify_faces(const Triangulation& tri) { return skeleton(tri).faces; }

bool is_admissible(const Skeleton& sk) {
  if (!sk.orientable || sk.vertices.size() != 1) return false;
  if (!sk.vertices.front().link.is_torus()) return false;
  return std::all_of(sk.edges.begin(), sk.edges.end(),
                     [](const EdgeClass& e) { return e.valid && !e.boundary; });
}

bool is_admissible(const Triangulation& tri) {
  return tri.is_closed() && is_admissible(skeleton(tri));
}

AnatomyReport anatomy_report(const Skeleton& sk) {
  AnatomyReport r;
  r.min_degree = INT_MAX;
  for (const auto& e : sk.edges) {
    r.min_degree = std::min(r.min_degree, e.degree);
    ++r.degree_histogram[e.degree];
  }
  for (const auto& f : sk.faces) ++r.face_types[f.type];
  r.vertex_classes = static_cast<int>(sk.vertices.size());
  r.all_links_tori = std::all_of(sk.vertices.begin(), sk.vertices.end(),
                                 [](const VertexClass& v) { return v.link.is_torus(); });
  r.orientable = sk.orientable;
  r.passes = r.min_degree >= 3 && r.face_types[FaceType::kThreeFold] == 0 &&
             r.face_types[FaceType::kDunce] == 0;
  return r;
}

AnatomyReport anatomy_report(const Triangulation& tri) { return anatomy_report(skeleton(tri)); }

}  // namespace mintri
