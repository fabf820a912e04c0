#include "mintri/moves.hpp"

#include <algorithm>
#include <map>

namespace mintri {

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kTwoThree: return "2-3";
    case MoveKind::kThreeTwo: return "3-2";
    case MoveKind::kFourFour: return "4-4";
  }
  return "unknown";
}

std::string describe(const MoveSite& site) {
  std::string s = to_string(site.kind);
  if (site.kind == MoveKind::kTwoThree) return s + " face " + std::to_string(site.cell);
  s += " edge " + std::to_string(site.cell);
  if (site.kind == MoveKind::kFourFour) s += " axis " + std::to_string(site.axis);
  return s;
}

namespace {

using Idx = std::size_t;
Idx ix(int i) { return static_cast<Idx>(i); }
using Labels = std::array<int, 4>;
using Triple = std::array<int, 3>;

constexpr int kN = 0;
constexpr int kS = 1;
constexpr int kE = 2;  // link vertices E_i are labelled kE + i

Triple face_triple(const Labels& lab, int f) {
  Triple t{};
  for (int v = 0, k = 0; v < 4; ++v)
    if (v != f) t[ix(k++)] = lab[ix(v)];
  std::sort(t.begin(), t.end());
  return t;
}

int position(const Labels& lab, int label) {
  for (int v = 0; v < 4; ++v)
    if (lab[ix(v)] == label) return v;
  throw TriangulationError(ErrorKind::kBrokenInvariant, "label missing from tetrahedron");
}

[[noreturn]] void inapplicable(const std::string& why) {
  throw TriangulationError(ErrorKind::kInapplicableMove, why);
}

struct Region {
  std::vector<int> tets;
  std::vector<Labels> labels;
};

std::optional<Region> face_region(const Triangulation& tri, const Skeleton& sk, int face_class) {
  if (face_class < 0 || face_class >= static_cast<int>(sk.faces.size())) return std::nullopt;
  const auto& fc = sk.faces[ix(face_class)];
  const auto& g = tri.gluing(fc.tet, fc.face);
  if (!g || g->tet == fc.tet) return std::nullopt;
  Labels a{}, b{};
  a[ix(fc.face)] = kN;
  for (int v = 0, k = 0; v < 4; ++v)
    if (v != fc.face) a[ix(v)] = kE + k++;
  for (int v = 0; v < 4; ++v) b[ix(g->perm[v])] = v == fc.face ? kS : a[ix(v)];
  return Region{{fc.tet, g->tet}, {a, b}};
}

// The k tetrahedra around an edge class, labelled N, S on the edge and
// E_0 .. E_{k-1} around its link.
std::optional<Region> edge_region(const Triangulation& tri, const Skeleton& sk, int edge_class, int k) {
  if (edge_class < 0 || edge_class >= static_cast<int>(sk.edges.size())) return std::nullopt;
  const auto& ec = sk.edges[ix(edge_class)];
  if (ec.degree != k || !ec.valid || ec.boundary) return std::nullopt;
  const auto& occ = ec.occurrences.front();
  const int a = kEdgeVertices[ix(occ.edge)][0];
  const int b = kEdgeVertices[ix(occ.edge)][1];
  const auto& opp = kEdgeVertices[ix(opposite_edge(occ.edge))];
  Labels first{};
  first[ix(a)] = kN;
  first[ix(b)] = kS;
  first[ix(opp[0])] = kE;
  first[ix(opp[1])] = kE + 1;

  Region r{{occ.tet}, {first}};
  for (int i = 0; i < k; ++i) {
    const int t = r.tets.back();
    const Labels lab = r.labels.back();
    const int u = position(lab, kE + i);
    const auto& g = tri.gluing(t, u);
    if (!g) return std::nullopt;
    Labels next{};
    for (int v = 0; v < 4; ++v) next[ix(g->perm[v])] = v == u ? kE + (i + 2) % k : lab[ix(v)];
    if (i + 1 == k) {
      if (g->tet != occ.tet || next != first) return std::nullopt;
    } else {
      if (std::find(r.tets.begin(), r.tets.end(), g->tet) != r.tets.end()) return std::nullopt;
      r.tets.push_back(g->tet);
      r.labels.push_back(next);
    }
  }
  return r;
}

std::vector<Labels> replacement(const MoveSite& site) {
  const int e0 = kE, e1 = kE + 1, e2 = kE + 2, e3 = kE + 3;
  switch (site.kind) {
    case MoveKind::kTwoThree:
      return {{kN, kS, e0, e1}, {kN, kS, e1, e2}, {kN, kS, e2, e0}};
    case MoveKind::kThreeTwo:
      return {{kN, e0, e1, e2}, {kS, e0, e1, e2}};
    case MoveKind::kFourFour:
      if (site.axis == 0) return {{e0, e2, kN, e1}, {e0, e2, e1, kS}, {e0, e2, kS, e3}, {e0, e2, e3, kN}};
      return {{e1, e3, kN, e2}, {e1, e3, e2, kS}, {e1, e3, kS, e0}, {e1, e3, e0, kN}};
  }
  return {};
}

std::optional<Region> site_region(const Triangulation& tri, const Skeleton& sk, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::kTwoThree: return face_region(tri, sk, site.cell);
    case MoveKind::kThreeTwo: return edge_region(tri, sk, site.cell, 3);
    case MoveKind::kFourFour:
      if (site.axis != 0 && site.axis != 1) return std::nullopt;
      return edge_region(tri, sk, site.cell, 4);
  }
  return std::nullopt;
}

}  // namespace

MoveResult retriangulate(const Triangulation& tri, const std::vector<int>& region,
                         const std::vector<Labels>& old_labels, const std::vector<Labels>& new_tets) {
  const int n = tri.size();
  const Skeleton old_sk = skeleton(tri);
  std::vector<int> slot(ix(n), -1);  // region position, or -1
  for (Idx i = 0; i < region.size(); ++i) {
    if (slot[ix(region[i])] >= 0) inapplicable("region tetrahedra are not distinct");
    slot[ix(region[i])] = static_cast<int>(i);
  }
  std::vector<int> new_index(ix(n), -1);
  std::vector<int> kept;
  for (int t = 0; t < n; ++t) {
    if (slot[ix(t)] < 0) {
      new_index[ix(t)] = static_cast<int>(kept.size());
      kept.push_back(t);
    }
  }
  const int base = static_cast<int>(kept.size());

  std::map<Triple, std::vector<std::array<int, 2>>> old_faces, new_faces;
  for (Idx i = 0; i < region.size(); ++i)
    for (int f = 0; f < 4; ++f) old_faces[face_triple(old_labels[i], f)].push_back({static_cast<int>(i), f});
  for (Idx j = 0; j < new_tets.size(); ++j)
    for (int f = 0; f < 4; ++f) new_faces[face_triple(new_tets[j], f)].push_back({static_cast<int>(j), f});

  std::map<Triple, std::array<int, 2>> new_boundary;
  for (const auto& [tr, list] : new_faces) {
    if (list.size() > 2) throw TriangulationError(ErrorKind::kBrokenInvariant, "replacement face used thrice");
    if (list.size() == 1) new_boundary[tr] = list.front();
  }
  std::size_t old_boundary_count = 0;
  for (const auto& [tr, list] : old_faces) {
    if (list.size() > 2) throw TriangulationError(ErrorKind::kBrokenInvariant, "region face used thrice");
    if (list.size() == 1) {
      ++old_boundary_count;
      if (!new_boundary.count(tr)) throw TriangulationError(ErrorKind::kBrokenInvariant, "region boundaries differ");
    }
  }
  if (old_boundary_count != new_boundary.size())
    throw TriangulationError(ErrorKind::kBrokenInvariant, "region boundaries differ");

  FaceTable table(ix(base) + new_tets.size());
  for (int t : kept) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (g && slot[ix(g->tet)] < 0) table[ix(new_index[ix(t)])][ix(f)] = Gluing{new_index[ix(g->tet)], g->perm};
    }
  }
  for (const auto& [tr, list] : old_faces) {
    if (list.size() != 1) continue;
    const auto [i, f] = list.front();
    const int t = region[ix(i)];
    const Labels& olab = old_labels[ix(i)];
    const auto [j, nf] = new_boundary.at(tr);
    const Labels& nlab = new_tets[ix(j)];
    const auto& g = tri.gluing(t, f);
    if (!g) continue;
    std::array<int, 4> img{};
    img[ix(nf)] = -1;
    if (slot[ix(g->tet)] < 0) {
      for (int w = 0; w < 4; ++w)
        if (w != nf) img[ix(w)] = g->perm[position(olab, nlab[ix(w)])];
      img[ix(nf)] = g->perm[f];
      join(table, base + j, nf, new_index[ix(g->tet)], Perm4(img[0], img[1], img[2], img[3]));
    } else {
      const int i2 = slot[ix(g->tet)];
      const int f2 = g->perm[f];
      if (std::array<int, 2>{i2, f2} < std::array<int, 2>{i, f}) continue;
      const Labels& olab2 = old_labels[ix(i2)];
      const auto [j2, nf2] = new_boundary.at(face_triple(olab2, f2));
      const Labels& nlab2 = new_tets[ix(j2)];
      for (int w = 0; w < 4; ++w)
        if (w != nf) img[ix(w)] = position(nlab2, olab2[ix(g->perm[position(olab, nlab[ix(w)])])]);
      img[ix(nf)] = nf2;
      join(table, base + j, nf, base + j2, Perm4(img[0], img[1], img[2], img[3]));
    }
  }
  for (const auto& [tr, list] : new_faces) {
    if (list.size() != 2) continue;
    const auto [j, f] = list[0];
    const auto [j2, f2] = list[1];
    std::array<int, 4> img{};
    for (int w = 0; w < 4; ++w)
      img[ix(w)] = w == f ? f2 : position(new_tets[ix(j2)], new_tets[ix(j)][ix(w)]);
    join(table, base + j, f, base + j2, Perm4(img[0], img[1], img[2], img[3]));
  }

  MoveResult out{Triangulation::build(std::move(table), tri.is_closed() ? Boundary::kForbid : Boundary::kAllow),
                 {}, -1, -1, {}};
  for (Idx j = 0; j < new_tets.size(); ++j) out.new_tets.push_back(base + static_cast<int>(j));

  const Skeleton sk = skeleton(out.tri);
  auto old_edge = [&](int label_a, int label_b) -> int {
    for (Idx i = 0; i < region.size(); ++i) {
      const auto& lab = old_labels[i];
      const bool has_a = std::find(lab.begin(), lab.end(), label_a) != lab.end();
      const bool has_b = std::find(lab.begin(), lab.end(), label_b) != lab.end();
      if (has_a && has_b) return old_sk.edge_class(region[i], position(lab, label_a), position(lab, label_b));
    }
    return -1;
  };
  for (const auto& ec : sk.edges) {
    const auto& occ = ec.occurrences.front();
    if (occ.tet < base) {
      out.edge_paths.push_back({old_sk.edge_of[ix(kept[ix(occ.tet)])][ix(occ.edge)]});
      continue;
    }
    const Labels& lab = new_tets[ix(occ.tet - base)];
    const int la = lab[ix(kEdgeVertices[ix(occ.edge)][0])];
    const int lb = lab[ix(kEdgeVertices[ix(occ.edge)][1])];
    if (const int e = old_edge(la, lb); e >= 0) {
      out.edge_paths.push_back({e});
      continue;
    }
    std::vector<int> path;
    for (int mid = 0; mid < kE + 4 && path.empty(); ++mid) {
      if (mid == la || mid == lb) continue;
      const int e1 = old_edge(la, mid);
      const int e2 = old_edge(mid, lb);
      if (e1 >= 0 && e2 >= 0) path = {e1, e2};
    }
    if (path.empty()) throw TriangulationError(ErrorKind::kBrokenInvariant, "new edge has no old path");
    out.edge_paths.push_back(std::move(path));
  }
  return out;
}

bool applicable(const Triangulation& tri, const Skeleton& sk, const MoveSite& site) {
  return site_region(tri, sk, site).has_value();
}

std::vector<MoveSite> enumerate_moves(const Triangulation& tri, const Skeleton& sk) {
  std::vector<MoveSite> out;
  for (const auto& f : sk.faces) {
    const MoveSite s{MoveKind::kTwoThree, f.id, 0};
    if (applicable(tri, sk, s)) out.push_back(s);
  }
  for (const auto& e : sk.edges) {
    const MoveSite s{MoveKind::kThreeTwo, e.id, 0};
    if (applicable(tri, sk, s)) out.push_back(s);
  }
  for (const auto& e : sk.edges) {
    for (int axis = 0; axis < 2; ++axis) {
      const MoveSite s{MoveKind::kFourFour, e.id, axis};
      if (applicable(tri, sk, s)) out.push_back(s);
    }
  }
  return out;
}

std::vector<MoveSite> enumerate_moves(const Triangulation& tri) { return enumerate_moves(tri, skeleton(tri)); }

MoveResult apply_move(const Triangulation& tri, const MoveSite& site) {
  const Skeleton sk = skeleton(tri);
  const auto region = site_region(tri, sk, site);
  if (!region) inapplicable("move " + describe(site) + " is not applicable");
  MoveResult out = retriangulate(tri, region->tets, region->labels, replacement(site));
  const Skeleton nsk = skeleton(out.tri);
  const int first = out.new_tets.front();
  if (site.kind == MoveKind::kTwoThree) out.created_edge = nsk.edge_of[ix(first)][0];
  if (site.kind == MoveKind::kThreeTwo) out.created_face = nsk.face_of[ix(first)][0];
  return out;
}

Triangulation assemble(const std::vector<Labels>& tets) {
  std::map<Triple, std::vector<std::array<int, 2>>> faces;
  for (Idx j = 0; j < tets.size(); ++j)
    for (int f = 0; f < 4; ++f) faces[face_triple(tets[j], f)].push_back({static_cast<int>(j), f});
  FaceTable table(tets.size());
  bool bounded = false;
  for (const auto& [tr, list] : faces) {
    if (list.size() == 1) {
      bounded = true;
      continue;
    }
    if (list.size() != 2) throw TriangulationError(ErrorKind::kInvalidArgument, "label triple on more than two faces");
    const auto [j, f] = list[0];
    const auto [j2, f2] = list[1];
    std::array<int, 4> img{};
    for (int w = 0; w < 4; ++w) img[ix(w)] = w == f ? f2 : position(tets[ix(j2)], tets[ix(j)][ix(w)]);
    join(table, j, f, j2, Perm4(img[0], img[1], img[2], img[3]));
  }
  return Triangulation::build(std::move(table), bounded ? Boundary::kAllow : Boundary::kForbid);
}

Colouring inherit(const Colouring& old, const MoveResult& result) {
  Colouring c(result.edge_paths.size());
  for (Idx e = 0; e < result.edge_paths.size(); ++e) {
    bool v = false;
    for (int o : result.edge_paths[e]) v ^= old.test(ix(o));
    c.set(e, v);
  }
  return c;
}

}  // namespace mintri
