#include <doctest.h>

#include "mintri/normal_surface.hpp"
#include "support.hpp"

using namespace mintri;

namespace {

std::vector<Triangulation> cusped_sample() {
  std::vector<Triangulation> out;
  for (const auto& c : fixtures::census()) out.push_back(decode(c.sig));
  for (const char* w : {"RL", "RRLL", "RLRLRL", "RRL"}) out.push_back(build_bundle(w).tri);
  for (const auto& t : fixtures::random_cusped(40, 5)) out.push_back(t);
  return out;
}

// Points, arcs and discs counted from the coordinates alone.
int cell_count_euler(const Triangulation& tri, const Skeleton& sk, const NormalSurface& s) {
  int v = 0;
  for (const auto& e : sk.edges) {
    const auto& o = e.occurrences.front();
    v += s.edge_weight(o.tet, o.edge);
  }
  int arcs = 0;
  for (const auto& fc : sk.faces)
    for (int a = 0; a < 4; ++a)
      if (a != fc.face) arcs += s.arcs(fc.tet, fc.face, a);
  (void)tri;
  return v - arcs + s.discs();
}

}  // namespace

TEST_CASE("vertex links are tori") {
  for (const auto& tri : cusped_sample()) {
    const Skeleton sk = skeleton(tri);
    for (const auto& vc : sk.vertices) {
      const NormalSurface link = vertex_link_surface(sk, vc.id);
      CHECK(is_admissible(tri, link));
      CHECK(link.triangles() == 4 * tri.size());
      CHECK(link.quads() == 0);
      CHECK(euler_characteristic(tri, sk, link) == 0);
      const SurfaceComponents parts = components(tri, sk, link);
      REQUIRE(parts.parts.size() == 1);
      CHECK(parts.parts[0].orientable);
      CHECK(parts.chi_minus() == 0);
      CHECK_FALSE(parts.has_sphere());
    }
  }
  const Triangulation gieseking = decode("bkaaid");
  const Skeleton gsk = skeleton(gieseking);
  const SurfaceComponents klein = components(gieseking, gsk, vertex_link_surface(gsk, 0));
  REQUIRE(klein.parts.size() == 1);
  CHECK(klein.parts[0].euler == 0);
  CHECK_FALSE(klein.parts[0].orientable);
}

TEST_CASE("canonical surfaces") {
  for (const auto& tri : cusped_sample()) {
    const Skeleton sk = skeleton(tri);
    for (const auto& phi : nonzero_cocycles(cocycle_space(sk))) {
      const NormalSurface s = canonical_surface(sk, phi);
      CHECK(is_admissible(tri, s));
      const Rank1Census census = classify_rank1(sk, phi);
      CHECK(s.discs() == census.n_q + census.n_t);
      CHECK(s.quads() == census.n_q);
      for (int t = 0; t < tri.size(); ++t)
        for (int e = 0; e < 6; ++e)
          CHECK(s.edge_weight(t, e) == static_cast<int>(phi[static_cast<std::size_t>(sk.edge_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)])]));
      CHECK(weight(sk, s) == static_cast<int>(phi.count()));
      const int chi = euler_characteristic(tri, sk, s);
      CHECK(chi == cell_count_euler(tri, sk, s));
      const SurfaceComponents parts = components(tri, sk, s);
      CHECK(parts.euler() == chi);
      CHECK(parts.chi_minus() >= -chi);
      int discs = 0;
      for (const auto& p : parts.parts) {
        discs += p.discs;
        CHECK(p.euler == p.vertices - p.edges + p.discs);
        CHECK(p.max_edge_incidence <= 2);
      }
      CHECK(discs == s.discs());
    }
  }
}

TEST_CASE("arcs match across glued faces") {
  for (const auto& tri : cusped_sample()) {
    const Skeleton sk = skeleton(tri);
    for (const auto& phi : nonzero_cocycles(cocycle_space(sk))) {
      const NormalSurface s = canonical_surface(sk, phi);
      for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f) {
          const auto& g = tri.gluing(t, f);
          for (int a = 0; a < 4; ++a)
            if (a != f) CHECK(s.arcs(t, f, a) == s.arcs(g->tet, g->perm[f], g->perm[a]));
        }
    }
  }
}

TEST_CASE("quad at a face corner") {
  for (int f = 0; f < 4; ++f)
    for (int a = 0; a < 4; ++a) {
      if (a == f) continue;
      // Quad k splits the vertices into {0, k+1} and the rest; on face f the
      // side missing f has a single vertex, the corner it cuts off.
      const int k = quad_at_corner(a, f);
      const bool with_zero = a == 0 || a == k + 1;
      CHECK(with_zero == (f == 0 || f == k + 1));
    }
  NormalSurface s{{std::array<int, 7>{0, 0, 0, 0, 1, 0, 0}}};
  for (int f = 1; f < 4; ++f)
    for (int a = 0; a < 4; ++a)
      if (a != f) CHECK(s.arcs(0, f, a) == (quad_at_corner(a, f) == 0 ? 1 : 0));
}

TEST_CASE("chi_minus ignores spheres and tori") {
  SurfaceComponents s;
  s.parts = {{2, 0, 0, 0, true, 0}, {0, 0, 0, 0, true, 0}, {-3, 0, 0, 0, false, 0}, {1, 0, 0, 0, false, 0}};
  CHECK(s.euler() == 0);
  CHECK(s.chi_minus() == 3);
  CHECK(s.has_sphere());
}

TEST_CASE("surface errors") {
  const Triangulation tri = decode(fixtures::census()[0].sig);
  const Skeleton sk = skeleton(tri);
  CHECK_THROWS_AS(canonical_surface(sk, Bits(sk.edges.size())), TriangulationError);
  NormalSurface twisted = vertex_link_surface(sk, 0);
  twisted.coords[0][4] = 1;
  twisted.coords[0][5] = 1;
  CHECK_FALSE(is_admissible(tri, twisted));
  CHECK_THROWS_AS(euler_characteristic(tri, sk, twisted), TriangulationError);
}
