#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mintri/error.hpp"
#include "mintri/perm.hpp"

namespace mintri {

/// Destination of one face: face f of the source tetrahedron is glued to
/// face perm[f] of tetrahedron `tet`, with vertex v sent to vertex perm[v].
struct Gluing {
  int tet = 0;
  Perm4 perm;
  friend bool operator==(const Gluing&, const Gluing&) = default;
};

using FaceTable = std::vector<std::array<std::optional<Gluing>, 4>>;

/// Records both directions of a face pairing in a table under construction.
void join(FaceTable& table, int tet, int face, int dest, const Perm4& perm);

enum class Boundary { kForbid, kAllow };

class Triangulation {
 public:
  /// Validates a full face table. Both directions of every pairing must be
  /// present. With Boundary::kForbid every face must be glued.
  static Triangulation build(FaceTable table, Boundary boundary = Boundary::kForbid);

  int size() const { return static_cast<int>(table_.size()); }
  const std::optional<Gluing>& gluing(int tet, int face) const {
    return table_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)];
  }
  const FaceTable& table() const { return table_; }
  bool is_closed() const;
  int unglued_faces() const;

  /// Tetrahedron t becomes tet_map[t]; its vertex v becomes vertex vertex_maps[t][v].
  Triangulation relabel(const std::vector<int>& tet_map,
                        const std::vector<Perm4>& vertex_maps) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  explicit Triangulation(FaceTable table) : table_(std::move(table)) {}
  FaceTable table_;
};

constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Index of the edge joining vertices a and b (in either order).
int edge_index(int a, int b);
inline int opposite_edge(int e) { return 5 - e; }

}  // namespace mintri
