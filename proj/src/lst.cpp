#include "mintri/lst.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>

namespace mintri {

const char* to_string(LstIntersection kind) {
  switch (kind) {
    case LstIntersection::kEmpty: return "empty";
    case LstIntersection::kVertex: return "vertex";
    case LstIntersection::kEdge: return "edge";
    case LstIntersection::kOther: return "other";
  }
  return "unknown";
}

namespace {

using Idx = std::size_t;
Idx ix(int i) { return static_cast<Idx>(i); }

struct Tracked {
  int tet;
  int edge;
  long long weight;
};

long long layered_weight(long long we, long long wx, long long wy) {
  return we == wx + wy ? std::llabs(wx - wy) : wx + wy;
}

// Endpoints of the edge of face f of tet t lying in edge class e, directed
// along the class, followed by the third vertex of the face.
std::optional<std::array<int, 3>> directed_edge_on_face(const Skeleton& sk, int t, int f, int e) {
  for (int ed = 0; ed < 6; ++ed) {
    const int x = kEdgeVertices[ix(ed)][0];
    const int y = kEdgeVertices[ix(ed)][1];
    if (x == f || y == f || sk.edge_of[ix(t)][ix(ed)] != e) continue;
    const int z = 6 - x - y - f;
    if (sk.edge_sign[ix(t)][ix(ed)] > 0) return std::array<int, 3>{x, y, z};
    return std::array<int, 3>{y, x, z};
  }
  return std::nullopt;
}

std::vector<std::array<int, 2>> unglued(const Triangulation& tri) {
  std::vector<std::array<int, 2>> out;
  for (int t = 0; t < tri.size(); ++t)
    for (int f = 0; f < 4; ++f)
      if (!tri.gluing(t, f)) out.push_back({t, f});
  return out;
}

// Sorts three (class, degree, weight) slots by weight.
void sort_slots(std::array<int, 3>& classes, std::array<int, 3>& degrees, std::array<long long, 3>& weights) {
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return weights[ix(i)] < weights[ix(j)]; });
  const auto c = classes;
  const auto d = degrees;
  const auto w = weights;
  for (Idx k = 0; k < 3; ++k) {
    classes[k] = c[ix(order[k])];
    degrees[k] = d[ix(order[k])];
    weights[k] = w[ix(order[k])];
  }
}

// The subcomplex on `tets`, renumbered in that order, keeping only gluings
// between its own tetrahedra.
Triangulation restrict_to(const Triangulation& tri, const std::vector<int>& tets) {
  FaceTable table(tets.size());
  for (Idx i = 0; i < tets.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(tets[i], f);
      if (!g) continue;
      const auto it = std::find(tets.begin(), tets.end(), g->tet);
      if (it == tets.end()) continue;
      table[i][ix(f)] = Gluing{static_cast<int>(it - tets.begin()), g->perm};
    }
  return Triangulation::build(std::move(table), Boundary::kAllow);
}

struct Embedding {
  std::vector<int> tet;
  std::vector<Perm4> map;
};

// Injective map of the connected (possibly bounded) pattern into tri sending
// pattern tetrahedron 0 to `start` via `start_map`, respecting every gluing
// of the pattern.
std::optional<Embedding> embed(const Triangulation& pattern, const Triangulation& tri, int start,
                               const Perm4& start_map) {
  const int m = pattern.size();
  Embedding e{std::vector<int>(ix(m), -1), std::vector<Perm4>(ix(m))};
  std::vector<bool> used(ix(tri.size()), false);
  e.tet[0] = start;
  e.map[0] = start_map;
  used[ix(start)] = true;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int t = q.front();
    q.pop();
    for (int f = 0; f < 4; ++f) {
      const auto& pg = pattern.gluing(t, f);
      if (!pg) continue;
      const auto& tg = tri.gluing(e.tet[ix(t)], e.map[ix(t)][f]);
      if (!tg) return std::nullopt;
      const Perm4 want = tg->perm * e.map[ix(t)] * pg->perm.inverse();
      if (e.tet[ix(pg->tet)] < 0) {
        if (used[ix(tg->tet)]) return std::nullopt;
        used[ix(tg->tet)] = true;
        e.tet[ix(pg->tet)] = tg->tet;
        e.map[ix(pg->tet)] = want;
        q.push(pg->tet);
      } else if (e.tet[ix(pg->tet)] != tg->tet || !(e.map[ix(pg->tet)] == want)) {
        return std::nullopt;
      }
    }
  }
  return e;
}

int image_class(const Skeleton& sk, const Embedding& e, int t, int edge) {
  const int a = e.map[ix(t)][kEdgeVertices[ix(edge)][0]];
  const int b = e.map[ix(t)][kEdgeVertices[ix(edge)][1]];
  return sk.edge_class(e.tet[ix(t)], a, b);
}

struct Template {
  LstBuild build;
  Skeleton sk;
  int interior = -1;
};

const Template& lst134() {
  static const Template tmpl = [] {
    Template t{lst_build("b"), {}, -1};
    t.sk = skeleton(t.build.tri);
    for (const auto& e : t.sk.edges)
      if (!e.boundary && e.degree == 3) t.interior = e.id;
    return t;
  }();
  return tmpl;
}

}  // namespace

LstParams sorted_params(long long x, long long y, long long z) {
  std::array<long long, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

LstBuild lst_build(const std::string& word, bool checking) {
  FaceTable table(1);
  join(table, 0, 3, 0, Perm4(1, 2, 3, 0));
  std::array<Tracked, 3> slots{{{0, edge_index(0, 1), 1}, {0, edge_index(0, 2), 2}, {0, edge_index(0, 3), 3}}};

  for (char letter : word) {
    if (letter != 'a' && letter != 'b' && letter != 'c')
      throw TriangulationError(ErrorKind::kInvalidArgument, std::string("layering letter must be a, b or c: ") + letter);
    const Triangulation tri = Triangulation::build(table, Boundary::kAllow);
    const Skeleton sk = skeleton(tri);
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return slots[ix(i)].weight < slots[ix(j)].weight; });
    const int k = order[ix(letter - 'a')];
    const auto& s = slots[ix(k)];
    const int e = sk.edge_of[ix(s.tet)][ix(s.edge)];
    if (checking && sk.edges[ix(e)].degree == 1)
      throw TriangulationError(ErrorKind::kLayering, "layering on the degree-1 boundary edge creates a degree-2 edge");

    const auto faces = unglued(tri);
    if (faces.size() != 2) throw TriangulationError(ErrorKind::kBrokenInvariant, "solid torus boundary is not two faces");
    const auto d1 = directed_edge_on_face(sk, faces[0][0], faces[0][1], e);
    const auto d2 = directed_edge_on_face(sk, faces[1][0], faces[1][1], e);
    if (!d1 || !d2) throw TriangulationError(ErrorKind::kBrokenInvariant, "boundary edge missing from a boundary face");
    const int m = static_cast<int>(table.size());
    table.emplace_back();
    join(table, m, 3, faces[0][0], Perm4((*d1)[0], (*d1)[1], (*d1)[2], faces[0][1]));
    join(table, m, 2, faces[1][0], Perm4((*d2)[0], (*d2)[1], faces[1][1], (*d2)[2]));

    const long long wx = slots[ix((k + 1) % 3)].weight;
    const long long wy = slots[ix((k + 2) % 3)].weight;
    slots[ix(k)] = {m, edge_index(2, 3), layered_weight(s.weight, wx, wy)};
  }

  LstBuild out{Triangulation::build(std::move(table), Boundary::kAllow), {}, {}, {}, {}};
  const Skeleton sk = skeleton(out.tri);
  std::array<long long, 3> weights{};
  for (Idx i = 0; i < 3; ++i) {
    out.boundary_edges[i] = sk.edge_of[ix(slots[i].tet)][ix(slots[i].edge)];
    out.degrees[i] = sk.edges[ix(out.boundary_edges[i])].degree;
    weights[i] = slots[i].weight;
  }
  sort_slots(out.boundary_edges, out.degrees, weights);
  out.params = {weights[0], weights[1], weights[2]};
  const auto faces = unglued(out.tri);
  out.boundary_faces = {faces[0], faces[1]};
  return out;
}

std::vector<Degree3Result> detect_degree3(const Triangulation& tri) {
  const Template& tmpl = lst134();
  const Skeleton sk = skeleton(tri);
  std::vector<Degree3Result> out;
  for (const auto& ec : sk.edges) {
    if (ec.degree != 3) continue;
    Degree3Result r;
    r.edge = ec.id;
    std::vector<int> tets;
    for (const auto& o : ec.occurrences)
      if (std::find(tets.begin(), tets.end(), o.tet) == tets.end()) tets.push_back(o.tet);
    if (tets.size() == 3) {
      r.three_two = ec.valid && !ec.boundary;
      r.failure = "three distinct tetrahedra; a 3-2 move reduces the count";
      out.push_back(std::move(r));
      continue;
    }
    const auto& interior_occ = tmpl.sk.edges[ix(tmpl.interior)].occurrences.front();
    for (int u : tets) {
      for (const Perm4& p : Perm4::all()) {
        const auto e = embed(tmpl.build.tri, tri, u, p);
        if (!e || image_class(sk, *e, interior_occ.tet, interior_occ.edge) != ec.id) continue;
        LstCertificate c;
        c.tets = e->tet;
        c.core = e->tet[0];
        for (Idx i = 0; i < 3; ++i) {
          const auto& occ = tmpl.sk.edges[ix(tmpl.build.boundary_edges[i])].occurrences.front();
          c.boundary_edges[i] = image_class(sk, *e, occ.tet, occ.edge);
          const int a = e->map[ix(occ.tet)][kEdgeVertices[ix(occ.edge)][0]];
          const int b = e->map[ix(occ.tet)][kEdgeVertices[ix(occ.edge)][1]];
          c.boundary_reps[i] = {e->tet[ix(occ.tet)], edge_index(a, b)};
          c.degrees[i] = tmpl.build.degrees[i];
        }
        for (Idx i = 0; i < 2; ++i) {
          const auto [t, f] = tmpl.build.boundary_faces[i];
          c.boundary_faces[i] = {e->tet[ix(t)], e->map[ix(t)][f]};
        }
        c.params = tmpl.build.params;
        r.certificate = std::move(c);
        break;
      }
      if (r.certificate) break;
    }
    if (!r.certificate) r.failure = "no layered solid torus (1,3,4) around this edge";
    out.push_back(std::move(r));
  }
  return out;
}

LstCertificate maximal_extension(const LstCertificate& cert, const Triangulation& tri) {
  const Skeleton sk = skeleton(tri);
  LstCertificate c = cert;
  std::array<long long, 3> weights{c.params.a, c.params.b, c.params.c};
  while (true) {
    const Triangulation sub = restrict_to(tri, c.tets);
    const Skeleton ssk = skeleton(sub);
    auto local = [&](int t, int edge) {
      const int lt = static_cast<int>(std::find(c.tets.begin(), c.tets.end(), t) - c.tets.begin());
      return ssk.edge_of[ix(lt)][ix(edge)];
    };
    std::array<int, 3> slot_class{};
    for (Idx i = 0; i < 3; ++i) slot_class[i] = local(c.boundary_reps[i][0], c.boundary_reps[i][1]);

    const auto [t1, f1] = c.boundary_faces[0];
    const auto [t2, f2] = c.boundary_faces[1];
    const auto& g1 = tri.gluing(t1, f1);
    const auto& g2 = tri.gluing(t2, f2);
    if (!g1 || !g2 || g1->tet != g2->tet) break;
    const int w = g1->tet;
    if (std::find(c.tets.begin(), c.tets.end(), w) != c.tets.end()) break;
    const int h1 = g1->perm[f1];
    const int h2 = g2->perm[f2];
    if (h1 == h2) break;
    const int x = opposite_edge(edge_index(h1, h2));
    const int wx = kEdgeVertices[ix(x)][0];
    const int wy = kEdgeVertices[ix(x)][1];
    const int k1 = local(t1, edge_index(g1->perm.pre_image(wx), g1->perm.pre_image(wy)));
    const int k2 = local(t2, edge_index(g2->perm.pre_image(wx), g2->perm.pre_image(wy)));
    const auto it = std::find(slot_class.begin(), slot_class.end(), k1);
    if (k1 != k2 || it == slot_class.end()) break;
    const Idx k = static_cast<Idx>(it - slot_class.begin());
    weights[k] = layered_weight(weights[k], weights[(k + 1) % 3], weights[(k + 2) % 3]);
    c.boundary_reps[k] = {w, edge_index(h1, h2)};
    std::array<int, 2> rest{};
    for (int f = 0, i = 0; f < 4; ++f)
      if (f != h1 && f != h2) rest[ix(i++)] = f;
    c.boundary_faces = {std::array<int, 2>{w, rest[0]}, std::array<int, 2>{w, rest[1]}};
    c.tets.push_back(w);
  }
  const Triangulation sub = restrict_to(tri, c.tets);
  const Skeleton ssk = skeleton(sub);
  for (Idx i = 0; i < 3; ++i) {
    const auto [t, edge] = c.boundary_reps[i];
    const int lt = static_cast<int>(std::find(c.tets.begin(), c.tets.end(), t) - c.tets.begin());
    c.boundary_edges[i] = sk.edge_of[ix(t)][ix(edge)];
    c.degrees[i] = ssk.edges[ix(ssk.edge_of[ix(lt)][ix(edge)])].degree;
  }
  std::array<Idx, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](Idx i, Idx j) { return weights[i] < weights[j]; });
  const LstCertificate before = c;
  for (Idx i = 0; i < 3; ++i) {
    c.boundary_edges[i] = before.boundary_edges[order[i]];
    c.degrees[i] = before.degrees[order[i]];
    c.boundary_reps[i] = before.boundary_reps[order[i]];
  }
  c.params = sorted_params(weights[0], weights[1], weights[2]);
  c.maximal = true;
  return c;
}

LstIntersection pairwise_intersection(const LstCertificate& c1, const LstCertificate& c2,
                                      const Triangulation& tri) {
  const Skeleton sk = skeleton(tri);
  auto collect = [&](const LstCertificate& c, auto member) {
    std::set<int> s;
    for (int t : c.tets)
      for (int x : member(t)) s.insert(x);
    return s;
  };
  auto overlap = [](const std::set<int>& a, const std::set<int>& b) {
    int n = 0;
    for (int x : a) n += static_cast<int>(b.count(x));
    return n;
  };
  const std::set<int> t1(c1.tets.begin(), c1.tets.end());
  const std::set<int> t2(c2.tets.begin(), c2.tets.end());
  if (overlap(t1, t2) > 0) return LstIntersection::kOther;
  auto faces = [&](int t) { return std::vector<int>(sk.face_of[ix(t)].begin(), sk.face_of[ix(t)].end()); };
  auto edges = [&](int t) { return std::vector<int>(sk.edge_of[ix(t)].begin(), sk.edge_of[ix(t)].end()); };
  auto verts = [&](int t) { return std::vector<int>(sk.vertex_of[ix(t)].begin(), sk.vertex_of[ix(t)].end()); };
  if (overlap(collect(c1, faces), collect(c2, faces)) > 0) return LstIntersection::kOther;
  const int shared_edges = overlap(collect(c1, edges), collect(c2, edges));
  if (shared_edges == 1) return LstIntersection::kEdge;
  if (shared_edges > 1) return LstIntersection::kOther;
  return overlap(collect(c1, verts), collect(c2, verts)) > 0 ? LstIntersection::kVertex : LstIntersection::kEmpty;
}

}  // namespace mintri
