#include "mintri/cohomology.hpp"

#include <algorithm>

namespace mintri {

const char* to_string(Rank1Type type) {
  switch (type) {
    case Rank1Type::kQuad: return "q";
    case Rank1Type::kTriangle: return "t";
    case Rank1Type::kEmpty: return "empty";
  }
  return "unknown";
}

const char* to_string(TetType type) {
  switch (type) {
    case TetType::kQtt: return "qtt";
    case TetType::kQq: return "qq";
    case TetType::kTt: return "tt";
    case TetType::kEmpty: return "empty";
    case TetType::kQqq: return "qqq";
  }
  return "unknown";
}

namespace {

using Idx = std::size_t;
Idx ix(int i) { return static_cast<Idx>(i); }

std::array<int, 6> tet_values(const Skeleton& sk, int t, const Colouring& phi) {
  std::array<int, 6> v{};
  for (int e = 0; e < 6; ++e) v[ix(e)] = phi.test(ix(sk.edge_of[ix(t)][ix(e)])) ? 1 : 0;
  return v;
}

}  // namespace

bool is_cocycle(const Skeleton& sk, const Colouring& phi) {
  for (const auto& f : sk.faces) {
    int sum = 0;
    for (int e = 0; e < 6; ++e) {
      const auto& ev = kEdgeVertices[ix(e)];
      if (ev[0] != f.face && ev[1] != f.face && phi.test(ix(sk.edge_of[ix(f.tet)][ix(e)]))) ++sum;
    }
    if (sum % 2) return false;
  }
  return true;
}

CocycleBasis cocycle_space(const Skeleton& sk) {
  const Idx columns = sk.edges.size();
  std::vector<Bits> rows;
  rows.reserve(sk.faces.size());
  for (const auto& f : sk.faces) {
    Bits row(columns);
    for (int e = 0; e < 6; ++e) {
      const auto& ev = kEdgeVertices[ix(e)];
      if (ev[0] != f.face && ev[1] != f.face) row.flip(ix(sk.edge_of[ix(f.tet)][ix(e)]));
    }
    rows.push_back(std::move(row));
  }
  return {columns, nullspace(std::move(rows), columns)};
}

CocycleBasis cocycle_space(const Triangulation& tri) { return cocycle_space(skeleton(tri)); }

std::vector<Colouring> nonzero_cocycles(const CocycleBasis& basis) {
  std::vector<Colouring> out;
  const Idx r = basis.basis.size();
  for (Idx mask = 1; mask < (Idx{1} << r); ++mask) {
    Colouring c(basis.edges);
    for (Idx i = 0; i < r; ++i)
      if (mask >> i & 1) c ^= basis.basis[i];
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), column_less);
  return out;
}

std::vector<Subgroup> rank_two_subgroups(const CocycleBasis& basis) {
  const auto all = nonzero_cocycles(basis);
  std::vector<Subgroup> out;
  for (Idx i = 0; i < all.size(); ++i) {
    for (Idx j = i + 1; j < all.size(); ++j) {
      const Colouring sum = all[i] ^ all[j];
      // Keep the pair only when it is the two smallest elements of its group.
      if (column_less(sum, all[j])) continue;
      out.push_back({all[i], all[j], sum});
    }
  }
  return out;
}

TetRank1 classify_tet(const std::array<int, 6>& v) {
  for (int f = 0; f < 4; ++f) {
    int sum = 0;
    for (int e = 0; e < 6; ++e) {
      const auto& ev = kEdgeVertices[ix(e)];
      if (ev[0] != f && ev[1] != f) sum += v[ix(e)];
    }
    if (sum % 2)
      throw TriangulationError(ErrorKind::kBrokenInvariant, "colouring violates face parity");
  }
  int odd = 0;
  for (int x : v) odd += x;
  if (odd == 0) return {Rank1Type::kEmpty, -1};
  if (odd == 4) {
    for (int e = 0; e < 3; ++e)
      if (!v[ix(e)] && !v[ix(5 - e)]) return {Rank1Type::kQuad, e};
  }
  if (odd == 3) {
    for (int u = 0; u < 4; ++u) {
      bool all = true;
      for (int w = 0; w < 4; ++w)
        if (w != u && !v[ix(edge_index(u, w))]) all = false;
      if (all) return {Rank1Type::kTriangle, u};
    }
  }
  throw TriangulationError(ErrorKind::kBrokenInvariant, "tetrahedron matches no colouring type");
}

Rank1Census classify_rank1(const Skeleton& sk, const Colouring& phi) {
  Rank1Census c;
  const int n = static_cast<int>(sk.edge_of.size());
  c.tets.reserve(ix(n));
  for (int t = 0; t < n; ++t) {
    const auto r = classify_tet(tet_values(sk, t, phi));
    c.tets.push_back(r);
    switch (r.type) {
      case Rank1Type::kQuad: ++c.n_q; break;
      case Rank1Type::kTriangle: ++c.n_t; break;
      case Rank1Type::kEmpty: ++c.n_empty; break;
    }
  }
  return c;
}

TetRank2 classify_tet_rank2(const std::array<std::array<int, 6>, 3>& values, int orientation) {
  int q = 0, tri = 0, empty = 0, q_colour = 0, empty_colour = 0;
  for (int i = 0; i < 3; ++i) {
    switch (classify_tet(values[ix(i)]).type) {
      case Rank1Type::kQuad: ++q; q_colour = i + 1; break;
      case Rank1Type::kTriangle: ++tri; break;
      case Rank1Type::kEmpty: ++empty; empty_colour = i + 1; break;
    }
  }
  if (q == 3) {
    // Colour labels of edges 01, 12, 20: each is the one colour even there.
    auto label = [&](int e) {
      for (int i = 0; i < 3; ++i)
        if (!values[ix(i)][ix(e)]) return i + 1;
      return 0;
    };
    const int a = label(edge_index(0, 1));
    const int b = label(edge_index(1, 2));
    return {TetType::kQqq, (b == a % 3 + 1 ? 1 : -1) * orientation};
  }
  if (q == 2 && empty == 1) return {TetType::kQq, empty_colour};
  if (tri == 2 && empty == 1) return {TetType::kTt, empty_colour};
  if (q == 1 && tri == 2) return {TetType::kQtt, q_colour};
  if (empty == 3) return {TetType::kEmpty, 0};
  throw TriangulationError(ErrorKind::kBrokenInvariant, "tetrahedron matches no rank-2 type");
}

RankTwoColouring classify_rank2(const Skeleton& sk, const Colouring& phi1, const Colouring& phi2) {
  RankTwoColouring rc;
  rc.phi = {phi1, phi2, phi1 ^ phi2};
  for (const auto& p : rc.phi)
    if (p.none())
      throw TriangulationError(ErrorKind::kDependentCocycles, "cocycles do not span a rank-2 subgroup");
  for (const auto& p : rc.phi)
    if (!is_cocycle(sk, p))
      throw TriangulationError(ErrorKind::kBrokenInvariant, "colouring violates face parity");

  const Idx edges = sk.edges.size();
  rc.edge_label.assign(edges, 0);
  for (Idx e = 0; e < edges; ++e) {
    for (int i = 0; i < 3; ++i) {
      if (!rc.phi[ix(i)].test(e) && rc.phi[ix((i + 1) % 3)].test(e)) rc.edge_label[e] = i + 1;
    }
    if (rc.edge_label[e] == 0) {
      ++rc.e0even;
      rc.e_tilde += sk.edges[e].degree;
      ++rc.e_histogram[sk.edges[e].degree];
    }
  }
  for (const auto& f : sk.faces) {
    bool all_zero = true;
    for (int e = 0; e < 6; ++e) {
      const auto& ev = kEdgeVertices[ix(e)];
      if (ev[0] != f.face && ev[1] != f.face && rc.edge_label[ix(sk.edge_of[ix(f.tet)][ix(e)])] != 0)
        all_zero = false;
    }
    if (all_zero) ++rc.zero_even_faces;
  }

  for (int i = 0; i < 3; ++i) rc.rank1[ix(i)] = classify_rank1(sk, rc.phi[ix(i)]);
  const int n = static_cast<int>(sk.edge_of.size());
  rc.tets.resize(ix(n));
  for (int t = 0; t < n; ++t) {
    std::array<std::array<int, 6>, 3> values{};
    for (int i = 0; i < 3; ++i) values[ix(i)] = tet_values(sk, t, rc.phi[ix(i)]);
    rc.tets[ix(t)] = classify_tet_rank2(values, sk.orientable ? sk.orientation[ix(t)] : 1);
    switch (rc.tets[ix(t)].type) {
      case TetType::kQtt: ++rc.n_qtt; break;
      case TetType::kQq: ++rc.n_qq; break;
      case TetType::kTt: ++rc.n_tt; break;
      case TetType::kEmpty: ++rc.n_empty; break;
      case TetType::kQqq: ++rc.n_qqq; break;
    }
  }
  return rc;
}

bool IdentityReport::edge_count() const { return e_tilde == edge_count_rhs && e_tilde == e_tilde_direct; }

IdentityReport check_identities(const RankTwoColouring& rc, const std::array<int, 3>& chi) {
  IdentityReport r;
  const int n = rc.tetrahedra();
  r.sum_chi = chi[0] + chi[1] + chi[2];
  r.type_count_lhs = rc.n_tt + 2 * rc.n_empty - rc.n_qqq;
  r.type_count_rhs = 2 * rc.e0even + r.sum_chi;
  r.e_tilde = rc.e_tilde;
  r.edge_count_rhs = 2 * n - rc.n_qtt - rc.n_tt + 4 * rc.e0even + 2 * r.sum_chi;
  r.e_tilde_direct = rc.n_qtt + 2 * rc.n_qq + 3 * rc.n_tt + 6 * rc.n_empty;

  auto count = [&](int d) {
    const auto it = rc.e_histogram.find(d);
    return it == rc.e_histogram.end() ? 0 : it->second;
  };
  int tail = 0;
  for (const auto& [d, c] : rc.e_histogram)
    if (d >= 5) tail += (d - 4) * c;
  r.degree3_applicable = count(1) == 0 && count(2) == 0;
  r.degree3_lhs = count(3);
  r.degree3_rhs = rc.n_qtt + rc.n_tt - 2 * (n + r.sum_chi) + tail;
  r.degree3_general_rhs = r.degree3_rhs - 3 * count(1) - 2 * count(2);

  r.chi_k_twice_formula = -2 * rc.e0even + rc.n_tt + 2 * rc.n_empty;
  r.chi_k_twice_direct = 2 * (-rc.e0even + rc.zero_even_faces - rc.n_empty);
  return r;
}

}  // namespace mintri
