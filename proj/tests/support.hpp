#pragma once

#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mintri/isosig.hpp"
#include "mintri/monodromy.hpp"
#include "mintri/moves.hpp"
#include "mintri/search.hpp"
#include "mintri/skeleton.hpp"

namespace fixtures {

struct CensusEntry {
  const char* sig;
  const char* name;
  int tets;
};

inline const std::array<CensusEntry, 4>& census() {
  static const std::array<CensusEntry, 4> all{{{"gLLMQbeefffehhqxhqq", "s781", 6},
                                               {"iLLLQPcbefgffhhhxxhaqxxqh", "t05624", 8},
                                               {"iLLLQPcbefgffhhhhhqaxhhxq", "t06056", 8},
                                               {"iLLwQPcbeefgehhhhhqhhqhqx", "t12546", 8}}};
  return all;
}

inline constexpr const char* kFigureEight = "cPcbbbiht";
inline constexpr const char* kSister = "cPcbbbdxm";

/// Closed triangulations with one torus cusp and a rank-2 cocycle space,
/// reached by random moves from bundles, 2 to 6 tetrahedra.
inline std::vector<mintri::Triangulation> random_cusped(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<mintri::Triangulation> seeds;
  for (const char* w : {"RRLL", "RRRRLL", "RRLRRL", "RLRLRL", "LLRRRR", "RRLLRR"})
    seeds.push_back(mintri::build_bundle(w).tri);
  std::vector<mintri::Triangulation> out;
  std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
  std::uniform_int_distribution<int> steps(1, 12);
  while (static_cast<int>(out.size()) < count) {
    auto tri = mintri::random_walk(seeds[pick(rng)], steps(rng), 2, 6, rng);
    out.push_back(mintri::random_relabel(tri, rng));
  }
  return out;
}

}  // namespace fixtures

namespace oracle {

// Ordered edge (t, a, b) as a node index.
inline int node(int t, int a, int b) { return (t * 4 + a) * 4 + b; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int& at(int x) { return parent[static_cast<std::size_t>(x)]; }
  int find(int x) {
    while (at(x) != x) x = at(x) = at(at(x));
    return x;
  }
  void unite(int a, int b) { at(find(a)) = find(b); }
};

/// Orbits of ordered edges under the gluings, computed without the skeleton.
struct DirectedEdges {
  UnionFind uf;
  explicit DirectedEdges(const mintri::Triangulation& tri) : uf(tri.size() * 16) {
    for (int t = 0; t < tri.size(); ++t)
      for (int f = 0; f < 4; ++f) {
        const auto& g = tri.gluing(t, f);
        if (!g) continue;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            if (a != b && a != f && b != f) uf.unite(node(t, a, b), node(g->tet, g->perm[a], g->perm[b]));
      }
  }
  int id(int t, int a, int b) { return uf.find(node(t, a, b)); }
  /// Unordered class key.
  std::pair<int, int> key(int t, int a, int b) {
    const int x = id(t, a, b), y = id(t, b, a);
    return {std::min(x, y), std::max(x, y)};
  }
};

/// Face type from the quotient cell complex of one triangle.
inline mintri::FaceType face_type(const mintri::Triangulation& tri, int t, int f) {
  DirectedEdges de(tri);
  std::array<int, 3> v{};
  for (int x = 0, i = 0; x < 4; ++x)
    if (x != f) v[static_cast<std::size_t>(i++)] = x;
  // Boundary cycle v0 -> v1 -> v2 -> v0.
  const std::array<std::array<int, 2>, 3> sides{{{v[0], v[1]}, {v[1], v[2]}, {v[2], v[0]}}};
  std::set<std::pair<int, int>> classes;
  for (const auto& s : sides) classes.insert(de.key(t, s[0], s[1]));
  std::map<int, int> corner;
  for (int i = 0; i < 3; ++i) corner[v[static_cast<std::size_t>(i)]] = i;
  UnionFind verts(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto& s = sides[i];
      const auto& u = sides[j];
      if (de.id(t, s[0], s[1]) == de.id(t, u[0], u[1])) {
        verts.unite(corner[s[0]], corner[u[0]]);
        verts.unite(corner[s[1]], corner[u[1]]);
      } else if (de.id(t, s[0], s[1]) == de.id(t, u[1], u[0])) {
        verts.unite(corner[s[0]], corner[u[1]]);
        verts.unite(corner[s[1]], corner[u[0]]);
      }
    }
  std::set<int> vroots;
  for (int i = 0; i < 3; ++i) vroots.insert(verts.find(i));
  const int e = static_cast<int>(classes.size());
  const int chi = static_cast<int>(vroots.size()) - e + 1;
  if (e == 3) return mintri::FaceType::kTriangle;
  if (e == 2) return chi == 1 ? mintri::FaceType::kCone : mintri::FaceType::kMoebius;
  const int d0 = de.id(t, sides[0][0], sides[0][1]);
  const bool cyclic = de.id(t, sides[1][0], sides[1][1]) == d0 && de.id(t, sides[2][0], sides[2][1]) == d0;
  return cyclic ? mintri::FaceType::kThreeFold : mintri::FaceType::kDunce;
}

/// Number of edge classes and their degrees, sorted.
inline std::vector<int> edge_degrees(const mintri::Triangulation& tri) {
  DirectedEdges de(tri);
  std::map<std::pair<int, int>, int> deg;
  for (int t = 0; t < tri.size(); ++t)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) ++deg[de.key(t, a, b)];
  std::vector<int> out;
  for (const auto& [k, d] : deg) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

/// Size of the cocycle space by trying every colouring of edge classes.
inline long brute_force_cocycles(const mintri::Triangulation& tri) {
  DirectedEdges de(tri);
  std::map<std::pair<int, int>, int> index;
  for (int t = 0; t < tri.size(); ++t)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) index.try_emplace(de.key(t, a, b), static_cast<int>(index.size()));
  const int e = static_cast<int>(index.size());
  long count = 0;
  for (long mask = 0; mask < (1L << e); ++mask) {
    bool ok = true;
    for (int t = 0; t < tri.size() && ok; ++t)
      for (int f = 0; f < 4 && ok; ++f) {
        int parity = 0;
        for (int a = 0; a < 4; ++a)
          for (int b = a + 1; b < 4; ++b)
            if (a != f && b != f) parity ^= static_cast<int>(mask >> index[de.key(t, a, b)] & 1);
        ok = parity == 0;
      }
    count += ok;
  }
  return count;
}

}  // namespace oracle

namespace fixtures {

struct FourFourModel {
  std::map<mintri::TetType, int> before;
  std::array<std::map<mintri::TetType, int>, 2> after;
  std::array<int, 2> tets_after{};
};

/// Octahedron of four tetrahedra around the axis N S with equator E0..E3
/// (labels 0, 1, 2..5). The first colour vanishes on the region and the
/// second is odd exactly on N E0, S E0, N E1, S E1, E1 E2 and E0 E3, so the
/// tetrahedra around the axis are of types qq, tt, empty, tt.
inline FourFourModel four_four_model() {
  using namespace mintri;
  const std::vector<std::array<int, 4>> tets{{0, 1, 2, 3}, {0, 1, 3, 4}, {0, 1, 4, 5}, {0, 1, 5, 2}};
  const std::set<std::pair<int, int>> odd{{0, 2}, {1, 2}, {0, 3}, {1, 3}, {3, 4}, {2, 5}};
  const Triangulation oct = assemble(tets);
  const Skeleton sk = skeleton(oct);

  auto types = [](const Triangulation& tri, const Skeleton& s, const Colouring& phi2) {
    std::map<TetType, int> out;
    for (int t = 0; t < tri.size(); ++t) {
      std::array<std::array<int, 6>, 3> values{};
      for (std::size_t e = 0; e < 6; ++e) {
        const int v = phi2[static_cast<std::size_t>(s.edge_of[static_cast<std::size_t>(t)][e])];
        values[1][e] = v;
        values[2][e] = v;
      }
      ++out[classify_tet_rank2(values).type];
    }
    return out;
  };

  Colouring phi2(sk.edges.size());
  for (const auto& e : sk.edges) {
    const auto& o = e.occurrences.front();
    const auto& ends = kEdgeVertices[static_cast<std::size_t>(o.edge)];
    const auto& labels = tets[static_cast<std::size_t>(o.tet)];
    int a = labels[static_cast<std::size_t>(ends[0])], b = labels[static_cast<std::size_t>(ends[1])];
    if (a > b) std::swap(a, b);
    phi2[static_cast<std::size_t>(e.id)] = odd.count({a, b}) > 0;
  }
  FourFourModel m;
  m.before = types(oct, sk, phi2);
  for (int axis = 0; axis < 2; ++axis) {
    const MoveResult r = apply_move(oct, {MoveKind::kFourFour, sk.edge_class(0, 0, 1), axis});
    m.after[static_cast<std::size_t>(axis)] = types(r.tri, skeleton(r.tri), inherit(phi2, r));
    m.tets_after[static_cast<std::size_t>(axis)] = r.tri.size();
  }
  return m;
}

}  // namespace fixtures
