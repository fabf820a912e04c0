#include "mintri/triangulation.hpp"

#include <queue>
#include <string>

namespace mintri {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kInvolution: return "involution";
    case ErrorKind::kSelfGluing: return "self_gluing";
    case ErrorKind::kNotClosed: return "not_closed";
    case ErrorKind::kDisconnected: return "disconnected";
    case ErrorKind::kMalformedSignature: return "malformed_signature";
    case ErrorKind::kInapplicableMove: return "inapplicable_move";
    case ErrorKind::kZeroCocycle: return "zero_cocycle";
    case ErrorKind::kDependentCocycles: return "dependent_cocycles";
    case ErrorKind::kBrokenInvariant: return "broken_invariant";
    case ErrorKind::kInadmissibleSurface: return "inadmissible_surface";
    case ErrorKind::kBadWord: return "bad_word";
    case ErrorKind::kLayering: return "layering";
  }
  return "unknown";
}

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e)
    if (kEdgeVertices[static_cast<std::size_t>(e)][0] == a &&
        kEdgeVertices[static_cast<std::size_t>(e)][1] == b)
      return e;
  throw TriangulationError(ErrorKind::kInvalidArgument, "not an edge");
}

void join(FaceTable& table, int tet, int face, int dest, const Perm4& perm) {
  table.at(static_cast<std::size_t>(tet))[static_cast<std::size_t>(face)] = Gluing{dest, perm};
  table.at(static_cast<std::size_t>(dest))[static_cast<std::size_t>(perm[face])] =
      Gluing{tet, perm.inverse()};
}

namespace {

std::string where(int t, int f) {
  return "(" + std::to_string(t) + "," + std::to_string(f) + ")";
}

}  // namespace

Triangulation Triangulation::build(FaceTable table, Boundary boundary) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw TriangulationError(ErrorKind::kInvalidArgument, "triangulation needs at least one tetrahedron");

  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = table[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
      if (!g) {
        if (boundary == Boundary::kForbid)
          throw TriangulationError(ErrorKind::kNotClosed, "unglued face " + where(t, f));
        continue;
      }
      if (g->tet < 0 || g->tet >= n)
        throw TriangulationError(ErrorKind::kInvalidArgument, "gluing target out of range at " + where(t, f));
      const int f2 = g->perm[f];
      if (g->tet == t && f2 == f)
        throw TriangulationError(ErrorKind::kSelfGluing, "face glued to itself at " + where(t, f));
      const auto& back = table[static_cast<std::size_t>(g->tet)][static_cast<std::size_t>(f2)];
      if (!back || back->tet != t || !(back->perm == g->perm.inverse()))
        throw TriangulationError(ErrorKind::kInvolution,
                                 "reverse gluing disagrees at " + where(t, f) + " -> " + where(g->tet, f2));
    }
  }

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    const int t = q.front();
    q.pop();
    for (const auto& g : table[static_cast<std::size_t>(t)]) {
      if (g && !seen[static_cast<std::size_t>(g->tet)]) {
        seen[static_cast<std::size_t>(g->tet)] = true;
        ++reached;
        q.push(g->tet);
      }
    }
  }
  if (reached != n) throw TriangulationError(ErrorKind::kDisconnected, "triangulation is not connected");

  return Triangulation(std::move(table));
}

bool Triangulation::is_closed() const { return unglued_faces() == 0; }

int Triangulation::unglued_faces() const {
  int count = 0;
  for (const auto& row : table_)
    for (const auto& g : row)
      if (!g) ++count;
  return count;
}

Triangulation Triangulation::relabel(const std::vector<int>& tet_map,
                                     const std::vector<Perm4>& vertex_maps) const {
  const std::size_t n = table_.size();
  if (tet_map.size() != n || vertex_maps.size() != n)
    throw TriangulationError(ErrorKind::kInvalidArgument, "relabelling has wrong length");
  FaceTable out(n);
  for (std::size_t t = 0; t < n; ++t) {
    const Perm4& rho = vertex_maps[t];
    const auto nt = static_cast<std::size_t>(tet_map[t]);
    for (int f = 0; f < 4; ++f) {
      const auto& g = table_[t][static_cast<std::size_t>(f)];
      if (!g) continue;
      const Perm4& rho2 = vertex_maps[static_cast<std::size_t>(g->tet)];
      out.at(nt)[static_cast<std::size_t>(rho[f])] =
          Gluing{tet_map[static_cast<std::size_t>(g->tet)], rho2 * g->perm * rho.inverse()};
    }
  }
  return build(std::move(out), is_closed() ? Boundary::kForbid : Boundary::kAllow);
}

}  // namespace mintri
