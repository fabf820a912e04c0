#include "mintri/normal_surface.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <map>

namespace mintri {

namespace {

using Idx = std::size_t;
Idx ix(int i) { return static_cast<Idx>(i); }

bool on_vertex0_side(int k, int v) { return v == 0 || v == k + 1; }

bool quad_crosses(int k, int e) { return quad_of_edge(e) != k; }

// Disc numbering: per tetrahedron, all triangle copies by vertex, then quad copies.
struct DiscIndex {
  std::vector<int> offset;
  int total = 0;

  explicit DiscIndex(const NormalSurface& s) {
    for (const auto& c : s.coords) {
      offset.push_back(total);
      for (int x : c) total += x;
    }
  }
  int triangle(const NormalSurface& s, int t, int v, int copy) const {
    int base = offset[ix(t)];
    for (int u = 0; u < v; ++u) base += s.tri(t, u);
    return base + copy;
  }
  int quad(const NormalSurface& s, int t, int k, int copy) const {
    int base = offset[ix(t)];
    for (int u = 0; u < 4; ++u) base += s.tri(t, u);
    for (int j = 0; j < k; ++j) base += s.quad(t, j);
    return base + copy;
  }
};

struct ArcDisc {
  int disc;
  int ref;  // +1 if the disc's reference side contains the corner vertex
};

// Disc carrying the p-th arc (counted outward from corner a) on face f of t.
ArcDisc arc_disc(const NormalSurface& s, const DiscIndex& idx, int t, int f, int a, int p) {
  const int ta = s.tri(t, a);
  if (p < ta) return {idx.triangle(s, t, a, p), 1};
  const int k = quad_at_corner(a, f);
  const int j = p - ta;
  const int q = s.quad(t, k);
  const bool near = on_vertex0_side(k, a);
  return {idx.quad(s, t, k, near ? j : q - 1 - j), near ? 1 : -1};
}

// Disc carrying the p-th point (counted from vertex a) on edge ab of t.
int point_disc(const NormalSurface& s, const DiscIndex& idx, int t, int a, int b, int p) {
  const int ta = s.tri(t, a);
  if (p < ta) return idx.triangle(s, t, a, p);
  p -= ta;
  const int e = edge_index(a, b);
  for (int k = 0; k < 3; ++k) {
    if (!quad_crosses(k, e)) continue;
    const int q = s.quad(t, k);
    if (p < q) return idx.quad(s, t, k, on_vertex0_side(k, a) ? p : q - 1 - p);
    p -= q;
  }
  return idx.triangle(s, t, b, s.tri(t, b) - 1 - p);
}

void require_admissible(const Triangulation& tri, const NormalSurface& s) {
  if (!is_admissible(tri, s))
    throw TriangulationError(ErrorKind::kInadmissibleSurface, "normal coordinates are not admissible");
}

}  // namespace

int NormalSurface::discs() const { return triangles() + quads(); }

int NormalSurface::triangles() const {
  int sum = 0;
  for (const auto& c : coords) sum += c[0] + c[1] + c[2] + c[3];
  return sum;
}

int NormalSurface::quads() const {
  int sum = 0;
  for (const auto& c : coords) sum += c[4] + c[5] + c[6];
  return sum;
}

int NormalSurface::edge_weight(int t, int e) const {
  const int a = kEdgeVertices[ix(e)][0];
  const int b = kEdgeVertices[ix(e)][1];
  int w = tri(t, a) + tri(t, b);
  for (int k = 0; k < 3; ++k)
    if (quad_crosses(k, e)) w += quad(t, k);
  return w;
}

int NormalSurface::arcs(int t, int f, int a) const { return tri(t, a) + quad(t, quad_at_corner(a, f)); }

NormalSurface canonical_surface(const Skeleton& sk, const Colouring& phi) {
  if (phi.none()) throw TriangulationError(ErrorKind::kZeroCocycle, "canonical surface of the zero cocycle");
  const auto census = classify_rank1(sk, phi);
  NormalSurface s;
  s.coords.assign(census.tets.size(), {0, 0, 0, 0, 0, 0, 0});
  for (Idx t = 0; t < census.tets.size(); ++t) {
    const auto& r = census.tets[t];
    if (r.type == Rank1Type::kTriangle) s.coords[t][ix(r.index)] = 1;
    if (r.type == Rank1Type::kQuad) s.coords[t][ix(4 + r.index)] = 1;
  }
  return s;
}

NormalSurface vertex_link_surface(const Skeleton& sk, int vertex_class) {
  NormalSurface s;
  s.coords.assign(sk.vertex_of.size(), {0, 0, 0, 0, 0, 0, 0});
  for (const auto& [t, v] : sk.vertices.at(ix(vertex_class)).corners) s.coords[ix(t)][ix(v)] = 1;
  return s;
}

bool is_admissible(const Triangulation& tri, const NormalSurface& s) {
  if (static_cast<int>(s.coords.size()) != tri.size()) return false;
  for (int t = 0; t < tri.size(); ++t) {
    int quad_types = 0;
    for (int i = 0; i < 7; ++i) {
      if (s.coords[ix(t)][ix(i)] < 0) return false;
      if (i >= 4 && s.coords[ix(t)][ix(i)] > 0) ++quad_types;
    }
    if (quad_types > 1) return false;
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) continue;
      for (int a = 0; a < 4; ++a)
        if (a != f && s.arcs(t, f, a) != s.arcs(g->tet, g->perm[f], g->perm[a])) return false;
    }
  }
  return true;
}

int weight(const Skeleton& sk, const NormalSurface& s) {
  int w = 0;
  for (const auto& e : sk.edges) w += s.edge_weight(e.occurrences.front().tet, e.occurrences.front().edge);
  return w;
}

int euler_characteristic(const Triangulation& tri, const Skeleton& sk, const NormalSurface& s) {
  require_admissible(tri, s);
  int arcs = 0;
  for (const auto& f : sk.faces)
    for (int a = 0; a < 4; ++a)
      if (a != f.face) arcs += s.arcs(f.tet, f.face, a);
  return weight(sk, s) - arcs + s.discs();
}

int SurfaceComponents::euler() const {
  int sum = 0;
  for (const auto& p : parts) sum += p.euler;
  return sum;
}

bool SurfaceComponents::has_sphere() const {
  return std::any_of(parts.begin(), parts.end(), [](const SurfaceComponent& p) { return p.sphere(); });
}

int SurfaceComponents::chi_minus() const {
  int sum = 0;
  for (const auto& p : parts) sum += std::max(0, -p.euler);
  return sum;
}

SurfaceComponents components(const Triangulation& tri, const Skeleton& sk, const NormalSurface& s) {
  require_admissible(tri, s);
  const DiscIndex idx(s);
  const int nd = idx.total;
  // Nodes 2d and 2d+1 are the two orientations of disc d.
  boost::disjoint_sets_with_storage<> cover(ix(2 * nd));
  boost::disjoint_sets_with_storage<> comp(ix(nd));
  for (int i = 0; i < 2 * nd; ++i) cover.make_set(i);
  for (int i = 0; i < nd; ++i) comp.make_set(i);

  for (int t = 0; t < tri.size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) continue;
      const int f2 = g->perm[f];
      if (g->tet < t || (g->tet == t && f2 < f)) continue;
      const bool even = g->perm.is_even();
      for (int a = 0; a < 4; ++a) {
        if (a == f) continue;
        const int a2 = g->perm[a];
        for (int p = 0; p < s.arcs(t, f, a); ++p) {
          const ArcDisc d1 = arc_disc(s, idx, t, f, a, p);
          const ArcDisc d2 = arc_disc(s, idx, g->tet, f2, a2, p);
          const int flip = ((d1.ref != d2.ref) != even) ? 1 : 0;
          comp.union_set(d1.disc, d2.disc);
          cover.union_set(2 * d1.disc, 2 * d2.disc + flip);
          cover.union_set(2 * d1.disc + 1, 2 * d2.disc + (1 - flip));
        }
      }
    }
  }

  std::map<int, int> root_to_part;
  SurfaceComponents out;
  auto part_of = [&](int disc) -> SurfaceComponent& {
    const int root = static_cast<int>(comp.find_set(disc));
    auto [it, inserted] = root_to_part.try_emplace(root, static_cast<int>(out.parts.size()));
    if (inserted) out.parts.emplace_back();
    return out.parts[ix(it->second)];
  };

  for (int d = 0; d < nd; ++d) {
    auto& part = part_of(d);
    ++part.discs;
    if (cover.find_set(2 * d) == cover.find_set(2 * d + 1)) part.orientable = false;
  }
  for (const auto& f : sk.faces) {
    for (int a = 0; a < 4; ++a) {
      if (a == f.face) continue;
      for (int p = 0; p < s.arcs(f.tet, f.face, a); ++p)
        ++part_of(arc_disc(s, idx, f.tet, f.face, a, p).disc).edges;
    }
  }
  for (const auto& e : sk.edges) {
    const auto& occ = e.occurrences.front();
    const int a = kEdgeVertices[ix(occ.edge)][0];
    const int b = kEdgeVertices[ix(occ.edge)][1];
    std::map<int, int> per_part;
    for (int p = 0; p < s.edge_weight(occ.tet, occ.edge); ++p) {
      auto& part = part_of(point_disc(s, idx, occ.tet, a, b, p));
      ++part.vertices;
      ++per_part[static_cast<int>(&part - out.parts.data())];
    }
    for (const auto& [pi, c] : per_part)
      out.parts[ix(pi)].max_edge_incidence = std::max(out.parts[ix(pi)].max_edge_incidence, c);
  }
  for (auto& p : out.parts) p.euler = p.vertices - p.edges + p.discs;
  return out;
}

}  // namespace mintri
