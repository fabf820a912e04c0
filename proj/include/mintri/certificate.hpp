#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mintri/cohomology.hpp"
#include "mintri/normal_surface.hpp"

namespace mintri {

/// Canonical surfaces and identity checks for one rank-2 subgroup.
struct SubgroupAnalysis {
  RankTwoColouring colouring;
  std::array<NormalSurface, 3> surfaces;
  std::array<int, 3> chi{};
  std::array<SurfaceComponents, 3> parts;
  IdentityReport identities;
};

SubgroupAnalysis analyze_subgroup(const Triangulation& tri, const Skeleton& sk, const Subgroup& g);

struct BoundCertificate {
  SubgroupAnalysis analysis;
  int tetrahedra = 0;
  int sum_neg_chi = 0;
  bool even = false;
  /// The two chiralities of all-quad tetrahedra differ across every face pairing.
  bool alternates = false;
  bool no_spheres = false;
  int subgroups_checked = 0;
  bool holds() const { return sum_neg_chi == tetrahedra && even && alternates && no_spheres; }
};

/// First rank-2 subgroup (in canonical order) in which every tetrahedron is of
/// all-quad type, if any.
std::optional<BoundCertificate> bound_certificate(const Triangulation& tri);
std::optional<BoundCertificate> bound_certificate(const Triangulation& tri, const Skeleton& sk);

}  // namespace mintri
