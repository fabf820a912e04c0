#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mintri/moves.hpp"
#include "mintri/skeleton.hpp"

namespace mintri {

using Predicate = std::function<bool(const Triangulation&, const Skeleton&)>;

struct NamedPredicate {
  std::string name;
  std::string description;
  bool allow_boundary = false;
  Predicate test;
};

/// Filters understood by enumerate_complexes and the enumerate subcommand.
const std::vector<NamedPredicate>& predicates();
/// Throws kInvalidArgument for unknown names.
const NamedPredicate& predicate(const std::string& name);

struct Found {
  std::string sig;
  Triangulation tri;
};

/// All connected complexes on n tetrahedra (n in {1, 2}) satisfying the
/// predicate, one per isomorphism class, sorted by signature. Faces may be
/// left unglued only when the predicate allows a boundary.
std::vector<Found> enumerate_complexes(int n, const NamedPredicate& pred);

/// Every way of gluing the free faces of `base` together with `extra` new
/// tetrahedra into a closed connected complex, filtered and deduplicated.
/// `generation_seed` permutes the order in which partner faces are tried.
std::vector<Found> enumerate_closures(const FaceTable& base, int extra, const Predicate& pred,
                                      unsigned generation_seed = 0);

struct MoveSearchResult {
  std::set<std::string> reachable;
  int start_tets = 0;
  int min_tets = 0;
  bool found_smaller = false;
  std::string smaller;
  int smaller_depth = -1;
  bool truncated = false;
  int depth_reached = 0;
};

/// Breadth-first search over 2-3, 3-2 and 4-4 moves, never exceeding
/// `max_tets` tetrahedra. "Smaller" means fewer tetrahedra than the start
/// while still admissible. Stops with `truncated` set once `max_states`
/// signatures are known. A nonzero `order_seed` shuffles move order.
MoveSearchResult bounded_move_search(const Triangulation& start, int max_tets, int max_depth,
                                     std::size_t max_states = 200000, unsigned order_seed = 0);

Triangulation random_relabel(const Triangulation& tri, std::mt19937_64& rng);

/// Uniformly random pairing of all faces; retried until connected and valid.
Triangulation random_closed(int n, std::mt19937_64& rng);

/// Random moves from `start`, staying within [min_tets, max_tets].
Triangulation random_walk(const Triangulation& start, int steps, int min_tets, int max_tets,
                          std::mt19937_64& rng);

}  // namespace mintri
