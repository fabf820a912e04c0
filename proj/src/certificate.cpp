#include "mintri/certificate.hpp"

namespace mintri {

SubgroupAnalysis analyze_subgroup(const Triangulation& tri, const Skeleton& sk, const Subgroup& g) {
  SubgroupAnalysis a;
  a.colouring = classify_rank2(sk, g[0], g[1]);
  for (std::size_t i = 0; i < 3; ++i) {
    a.surfaces[i] = canonical_surface(sk, a.colouring.phi[i]);
    a.chi[i] = euler_characteristic(tri, sk, a.surfaces[i]);
    a.parts[i] = components(tri, sk, a.surfaces[i]);
  }
  a.identities = check_identities(a.colouring, a.chi);
  return a;
}

namespace {

bool chiralities_alternate(const Triangulation& tri, const RankTwoColouring& rc) {
  for (int t = 0; t < tri.size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) continue;
      if (rc.tets[static_cast<std::size_t>(t)].subtype == rc.tets[static_cast<std::size_t>(g->tet)].subtype)
        return false;
    }
  }
  return true;
}

}  // namespace

std::optional<BoundCertificate> bound_certificate(const Triangulation& tri, const Skeleton& sk) {
  const auto basis = cocycle_space(sk);
  int checked = 0;
  for (const auto& g : rank_two_subgroups(basis)) {
    ++checked;
    const auto rc = classify_rank2(sk, g[0], g[1]);
    if (rc.n_qqq != tri.size()) continue;
    BoundCertificate c;
    c.analysis = analyze_subgroup(tri, sk, g);
    c.tetrahedra = tri.size();
    for (int x : c.analysis.chi) c.sum_neg_chi -= x;
    c.even = tri.size() % 2 == 0;
    c.alternates = sk.orientable && chiralities_alternate(tri, c.analysis.colouring);
    c.no_spheres = true;
    for (const auto& p : c.analysis.parts)
      if (p.has_sphere()) c.no_spheres = false;
    c.subgroups_checked = checked;
    return c;
  }
  return std::nullopt;
}

std::optional<BoundCertificate> bound_certificate(const Triangulation& tri) {
  return bound_certificate(tri, skeleton(tri));
}

}  // namespace mintri
