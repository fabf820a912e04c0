#pragma once

#include <array>
#include <map>
#include <vector>

#include "mintri/gf2.hpp"
#include "mintri/skeleton.hpp"

namespace mintri {

/// A Z2 colouring of edge classes, one bit per edge class.
using Colouring = Bits;

/// Every face class has an even number of odd edges.
bool is_cocycle(const Skeleton& sk, const Colouring& phi);

struct CocycleBasis {
  std::size_t edges = 0;
  std::vector<Colouring> basis;
  int rank() const { return static_cast<int>(basis.size()); }
};

CocycleBasis cocycle_space(const Skeleton& sk);
CocycleBasis cocycle_space(const Triangulation& tri);

/// All nonzero elements of the span, in increasing column order.
std::vector<Colouring> nonzero_cocycles(const CocycleBasis& basis);

/// One Klein four-group {0, a, b, a+b}, listed with a < b < a+b.
using Subgroup = std::array<Colouring, 3>;

/// Each rank-2 subgroup exactly once, in increasing order of (a, b).
std::vector<Subgroup> rank_two_subgroups(const CocycleBasis& basis);

/// Quadrilateral k separates vertices {0, k+1} from the other two and
/// misses the opposite edge pair {k, 5-k}.
constexpr int kQuadCount = 3;
inline int quad_of_edge(int e) { return e < 3 ? e : 5 - e; }

enum class Rank1Type { kQuad, kTriangle, kEmpty };
const char* to_string(Rank1Type type);

struct TetRank1 {
  Rank1Type type = Rank1Type::kEmpty;
  int index = -1;  // quad index for kQuad, vertex for kTriangle
};

/// Throws kBrokenInvariant when the colouring is not a cocycle on the tetrahedron.
TetRank1 classify_tet(const std::array<int, 6>& values);

struct Rank1Census {
  std::vector<TetRank1> tets;
  int n_q = 0;
  int n_t = 0;
  int n_empty = 0;
};

Rank1Census classify_rank1(const Skeleton& sk, const Colouring& phi);

enum class TetType { kQtt, kQq, kTt, kEmpty, kQqq };
const char* to_string(TetType type);

struct TetRank2 {
  TetType type = TetType::kEmpty;
  // kQqq: +1/-1 chirality of the colour labels against the tetrahedron
  // orientation; kQq, kTt: the colour (1..3) that is empty; kQtt: the colour
  // carrying the quadrilateral.
  int subtype = 0;
};

struct RankTwoColouring {
  std::array<Colouring, 3> phi;
  std::vector<int> edge_label;  // 0 for 0-even, i for i-even
  std::vector<TetRank2> tets;
  std::array<Rank1Census, 3> rank1;
  int n_qtt = 0;
  int n_qq = 0;
  int n_tt = 0;
  int n_empty = 0;
  int n_qqq = 0;
  int e0even = 0;
  int e_tilde = 0;
  std::map<int, int> e_histogram;
  int zero_even_faces = 0;
  int tetrahedra() const { return static_cast<int>(tets.size()); }
};

/// Type of one tetrahedron from the values of phi1, phi2, phi3 on its six
/// edges; `orientation` fixes the sign of the all-quad chirality.
TetRank2 classify_tet_rank2(const std::array<std::array<int, 6>, 3>& values, int orientation = 1);

/// Throws kDependentCocycles if phi1, phi2 and phi1+phi2 are not all nonzero.
RankTwoColouring classify_rank2(const Skeleton& sk, const Colouring& phi1, const Colouring& phi2);

struct IdentityReport {
  int sum_chi = 0;
  // n_tt + 2 n_empty - n_qqq == 2 e0even + sum_chi
  int type_count_lhs = 0, type_count_rhs = 0;
  // e_tilde == 2|T| - n_qtt - n_tt + 4 e0even + 2 sum_chi
  int edge_count_rhs = 0;
  int e_tilde_direct = 0;
  // e_3 == n_qtt + n_tt - 2(|T| + sum_chi) + sum_{d>=5} (d-4) e_d, when e_1 = e_2 = 0
  bool degree3_applicable = false;
  int degree3_lhs = 0, degree3_rhs = 0;
  // general form with the -3 e_1 - 2 e_2 correction
  int degree3_general_rhs = 0;
  // twice the Euler characteristic of the 0-even subcomplex
  int chi_k_twice_formula = 0;
  int chi_k_twice_direct = 0;

  bool type_count() const { return type_count_lhs == type_count_rhs; }
  bool edge_count() const;
  bool degree3() const { return !degree3_applicable || degree3_lhs == degree3_rhs; }
  bool degree3_general() const { return degree3_lhs == degree3_general_rhs; }
  bool chi_k() const { return chi_k_twice_formula == chi_k_twice_direct; }
  bool all() const { return type_count() && edge_count() && degree3() && degree3_general() && chi_k(); }

  int e_tilde = 0;
};

IdentityReport check_identities(const RankTwoColouring& rc, const std::array<int, 3>& chi);

}  // namespace mintri
