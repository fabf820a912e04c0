#include <doctest.h>

#include <numeric>

#include "mintri/lst.hpp"
#include "mintri/moves.hpp"
#include "support.hpp"

using namespace mintri;

namespace {

// Weights after layering on the edge with the given label.
LstParams layer_rule(const LstParams& p, char letter) {
  if (letter == 'c') return sorted_params(p.a, p.b, p.b - p.a);
  if (letter == 'b') return sorted_params(p.a, p.c, p.a + p.c);
  return sorted_params(p.b, p.c, p.b + p.c);
}

std::vector<Triangulation> closures_of(const std::string& word) {
  std::vector<Triangulation> out;
  auto admissible = [](const Triangulation&, const Skeleton& sk) { return is_admissible(sk); };
  for (const auto& f : enumerate_closures(lst_build(word).tri.table(), 1, admissible)) out.push_back(f.tri);
  return out;
}

std::vector<LstCertificate> maximal_certificates(const Triangulation& tri) {
  std::vector<LstCertificate> out;
  for (const auto& d : detect_degree3(tri))
    if (d.certificate) out.push_back(maximal_extension(*d.certificate, tri));
  return out;
}

}  // namespace

TEST_CASE("small layered solid tori") {
  struct Row {
    const char* word;
    LstParams params;
    std::array<int, 3> degrees;
  };
  for (const Row& r : {Row{"", {1, 2, 3}, {3, 2, 1}}, Row{"b", {1, 3, 4}, {5, 3, 1}}, Row{"a", {2, 3, 5}, {4, 3, 1}},
                       Row{"bb", {1, 4, 5}, {7, 3, 1}}}) {
    const LstBuild b = lst_build(r.word);
    CHECK(b.params == r.params);
    CHECK(b.degrees == r.degrees);
    CHECK(b.tri.size() == 1 + static_cast<int>(std::string(r.word).size()));
    CHECK(b.tri.unglued_faces() == 2);
    const Skeleton sk = skeleton(b.tri);
    CHECK(sk.orientable);
    CHECK(sk.vertices.size() == 1);
    CHECK_FALSE(sk.vertices[0].link.closed);
    CHECK(sk.vertices[0].link.euler == 1);
    int boundary = 0;
    for (const auto& e : sk.edges) {
      CHECK(e.valid);
      boundary += e.boundary;
    }
    CHECK(boundary == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(sk.edges[static_cast<std::size_t>(b.boundary_edges[i])].degree == b.degrees[i]);
  }
}

TEST_CASE("layering arithmetic on random words") {
  std::mt19937_64 rng(12);
  int built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::string word;
    const int len = static_cast<int>(rng() % 9);
    for (int i = 0; i < len; ++i) word.push_back("abc"[rng() % 3]);
    LstParams expected{1, 2, 3};
    for (char ch : word) expected = layer_rule(expected, ch);
    LstBuild b = [&] {
      try {
        return lst_build(word);
      } catch (const TriangulationError& e) {
        CHECK(e.kind() == ErrorKind::kLayering);
        return lst_build(word, false);
      }
    }();
    CHECK(b.params == expected);
    if (b.params.a > 0) {
      CHECK(b.params.a + b.params.b == b.params.c);
      CHECK(std::gcd(b.params.a, b.params.b) == 1);
    }
    CHECK(b.tri.size() == 1 + len);
    ++built;
  }
  CHECK(built == 300);
}

TEST_CASE("layering on the degree-1 edge") {
  CHECK_THROWS_AS(lst_build("c"), TriangulationError);
  CHECK(lst_build("c", false).params == LstParams{1, 1, 2});
  CHECK_THROWS_AS(lst_build("x"), TriangulationError);
}

TEST_CASE("detection inside closed complexes") {
  const auto closed = closures_of("b");
  REQUIRE_FALSE(closed.empty());
  for (const auto& tri : closed) {
    const auto certs = maximal_certificates(tri);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].params == LstParams{1, 3, 4});
    CHECK(certs[0].tets.size() == 2);
    CHECK(certs[0].core == certs[0].tets.front());
  }
}

TEST_CASE("maximal extension absorbs a layered tetrahedron") {
  const auto closed = closures_of("bb");
  REQUIRE_FALSE(closed.empty());
  for (const auto& tri : closed) {
    const auto found = detect_degree3(tri);
    int certified = 0;
    for (const auto& d : found) {
      if (!d.certificate) continue;
      ++certified;
      CHECK(d.certificate->params == LstParams{1, 3, 4});
      const LstCertificate m = maximal_extension(*d.certificate, tri);
      CHECK(m.maximal);
      CHECK(m.tets.size() == 3);
      CHECK(m.params == LstParams{1, 4, 5});
      CHECK(m.degrees == std::array<int, 3>{7, 3, 1});
      for (int t : m.tets) CHECK((t >= 0 && t < tri.size()));
      const LstCertificate again = maximal_extension(m, tri);
      CHECK(again.tets == m.tets);
      CHECK(again.params == m.params);
    }
    CHECK(certified == 1);
  }
}

TEST_CASE("degree-3 edges on three tetrahedra are 3-2 sites") {
  const Triangulation fig8 = decode(fixtures::kFigureEight);
  const auto site = enumerate_moves(fig8).front();
  REQUIRE(site.kind == MoveKind::kTwoThree);
  const Triangulation up = apply_move(fig8, site).tri;
  const auto found = detect_degree3(up);
  REQUIRE(found.size() == 1);
  CHECK_FALSE(found[0].certificate.has_value());
  CHECK(found[0].three_two);
  CHECK_FALSE(found[0].failure.empty());
}

TEST_CASE("no degree-3 edges in the bound-attaining examples") {
  CHECK(detect_degree3(build_bundle("RL").tri).empty());
  for (const auto& c : fixtures::census()) CHECK(detect_degree3(decode(c.sig)).empty());
}

TEST_CASE("pairwise intersections") {
  // Two copies of LST(1,3,4) joined through one or two extra tetrahedra.
  const std::array<std::pair<const char*, LstIntersection>, 3> witnesses{{{"fHjrIbbeehjhj", LstIntersection::kEdge},
                                                                          {"gHjbuObbffhjhj", LstIntersection::kEdge},
                                                                          {"gHjbrObbffxjqn", LstIntersection::kVertex}}};
  for (const auto& [sig, kind] : witnesses) {
    const Triangulation tri = decode(sig, Boundary::kAllow);
    const auto certs = maximal_certificates(tri);
    REQUIRE(certs.size() == 2);
    CHECK(pairwise_intersection(certs[0], certs[1], tri) == kind);
    CHECK(pairwise_intersection(certs[0], certs[0], tri) == LstIntersection::kOther);
  }
}
