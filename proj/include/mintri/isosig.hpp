#pragma once

#include <istream>
#include <string>
#include <vector>

#include "mintri/triangulation.hpp"

namespace mintri {

/// Reads a signature in the census format. Unglued faces in the signature
/// are accepted only with Boundary::kAllow.
Triangulation decode(const std::string& sig, Boundary boundary = Boundary::kForbid);

/// Signature of the labelling reached from tetrahedron `start` with vertex map `start_map`.
std::string encode_from(const Triangulation& tri, int start, const Perm4& start_map);

/// Minimal signature over all starting tetrahedra and vertex maps.
std::string encode_canonical(const Triangulation& tri);

/// Relabelling that realises the canonical signature; entry t is
/// (new index, vertex map) for tetrahedron t.
struct CanonicalLabelling {
  std::vector<int> tet_map;
  std::vector<Perm4> vertex_maps;
};
CanonicalLabelling canonical_labelling(const Triangulation& tri);

/// First token of a census line once comments are stripped; empty if the
/// line carries no signature.
std::string census_entry(const std::string& line);

}  // namespace mintri
