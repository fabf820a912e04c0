#include "mintri/search.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <thread>

#include "mintri/isosig.hpp"

namespace mintri {

namespace {

using Idx = std::size_t;
Idx ix(int i) { return static_cast<Idx>(i); }

bool boundary_is_one_vertex_torus(const Triangulation& tri, const Skeleton& sk) {
  if (tri.unglued_faces() != 2) return false;
  int edges = 0;
  for (const auto& e : sk.edges)
    if (e.boundary) ++edges;
  int vertices = 0;
  for (const auto& v : sk.vertices)
    if (!v.link.closed) ++vertices;
  return edges == 3 && vertices == 1;
}

bool has_interior_degree3(const Skeleton& sk) {
  return std::any_of(sk.edges.begin(), sk.edges.end(),
                     [](const EdgeClass& e) { return !e.boundary && e.degree == 3; });
}

bool all_edges_valid(const Skeleton& sk) {
  return std::all_of(sk.edges.begin(), sk.edges.end(), [](const EdgeClass& e) { return e.valid; });
}

std::vector<NamedPredicate> make_predicates() {
  std::vector<NamedPredicate> p;
  p.push_back({"any", "every connected complex, unglued faces allowed", true,
               [](const Triangulation&, const Skeleton&) { return true; }});
  p.push_back({"closed", "every face glued", false,
               [](const Triangulation& t, const Skeleton&) { return t.is_closed(); }});
  p.push_back({"admissible", "closed, orientable, one vertex with torus link, valid edges", false,
               [](const Triangulation& t, const Skeleton& sk) { return t.is_closed() && is_admissible(sk); }});
  p.push_back({"census", "admissible with no edge of degree 1 or 2", false,
               [](const Triangulation& t, const Skeleton& sk) {
                 return t.is_closed() && is_admissible(sk) && anatomy_report(sk).min_degree >= 3;
               }});
  p.push_back({"nonorientable", "closed and not orientable", false,
               [](const Triangulation& t, const Skeleton& sk) { return t.is_closed() && !sk.orientable; }});
  p.push_back({"bad-link", "closed with a vertex link that is non-orientable or has nonzero Euler characteristic", false,
               [](const Triangulation& t, const Skeleton& sk) {
                 return t.is_closed() && std::any_of(sk.vertices.begin(), sk.vertices.end(), [](const VertexClass& v) {
                          return !v.link.orientable || v.link.euler != 0;
                        });
               }});
  p.push_back({"lst-degree3",
               "two unglued faces forming a one-vertex torus, an interior edge of degree 3, orientable, valid edges",
               true, [](const Triangulation& t, const Skeleton& sk) {
                 return boundary_is_one_vertex_torus(t, sk) && has_interior_degree3(sk) && sk.orientable &&
                        all_edges_valid(sk);
               }});
  return p;
}

// Pairs up the free faces of a table in every possible way.
class PairingEnumerator {
 public:
  PairingEnumerator(FaceTable table, bool allow_boundary, unsigned seed)
      : table_(std::move(table)), allow_boundary_(allow_boundary), rng_(seed), shuffle_(seed != 0) {
    for (int t = 0; t < static_cast<int>(table_.size()); ++t)
      for (int f = 0; f < 4; ++f)
        if (!table_[ix(t)][ix(f)]) free_.push_back({t, f});
    used_.assign(free_.size(), false);
  }

  std::vector<FaceTable> run() {
    recurse();
    return std::move(out_);
  }

 private:
  void recurse() {
    Idx i = 0;
    while (i < free_.size() && used_[i]) ++i;
    if (i == free_.size()) {
      out_.push_back(table_);
      return;
    }
    used_[i] = true;
    if (allow_boundary_) recurse();
    std::vector<Idx> partners;
    for (Idx j = i + 1; j < free_.size(); ++j)
      if (!used_[j]) partners.push_back(j);
    if (shuffle_) std::shuffle(partners.begin(), partners.end(), rng_);
    const auto [t, f] = free_[i];
    for (Idx j : partners) {
      const auto [t2, f2] = free_[j];
      used_[j] = true;
      for (const Perm4& p : Perm4::all()) {
        if (p[f] != f2) continue;
        join(table_, t, f, t2, p);
        recurse();
        table_[ix(t)][ix(f)].reset();
        table_[ix(t2)][ix(f2)].reset();
      }
      used_[j] = false;
    }
    used_[i] = false;
  }

  FaceTable table_;
  bool allow_boundary_;
  std::mt19937 rng_;
  bool shuffle_;
  std::vector<std::array<int, 2>> free_;
  std::vector<bool> used_;
  std::vector<FaceTable> out_;
};

std::vector<Found> filter_dedupe(const std::vector<FaceTable>& tables, Boundary boundary, const Predicate& pred) {
  const Idx workers = std::max<Idx>(1, std::thread::hardware_concurrency());
  const Idx chunk = (tables.size() + workers - 1) / workers;
  std::vector<std::future<std::map<std::string, Triangulation>>> jobs;
  for (Idx start = 0; start < tables.size(); start += chunk) {
    const Idx stop = std::min(tables.size(), start + chunk);
    jobs.push_back(std::async(std::launch::async, [&, start, stop] {
      std::map<std::string, Triangulation> found;
      for (Idx i = start; i < stop; ++i) {
        try {
          Triangulation tri = Triangulation::build(tables[i], boundary);
          const Skeleton sk = skeleton(tri);
          if (!pred(tri, sk)) continue;
          std::string sig = encode_canonical(tri);
          found.try_emplace(std::move(sig), std::move(tri));
        } catch (const TriangulationError&) {
        }
      }
      return found;
    }));
  }
  std::map<std::string, Triangulation> merged;
  for (auto& j : jobs) merged.merge(j.get());
  std::vector<Found> out;
  for (auto& [sig, tri] : merged) out.push_back({sig, tri});
  return out;
}

}  // namespace

const std::vector<NamedPredicate>& predicates() {
  static const std::vector<NamedPredicate> all = make_predicates();
  return all;
}

const NamedPredicate& predicate(const std::string& name) {
  for (const auto& p : predicates())
    if (p.name == name) return p;
  throw TriangulationError(ErrorKind::kInvalidArgument, "unknown filter: " + name);
}

std::vector<Found> enumerate_complexes(int n, const NamedPredicate& pred) {
  if (n < 1 || n > 2) throw TriangulationError(ErrorKind::kInvalidArgument, "enumeration supports 1 or 2 tetrahedra");
  PairingEnumerator gen(FaceTable(ix(n)), pred.allow_boundary, 0);
  return filter_dedupe(gen.run(), pred.allow_boundary ? Boundary::kAllow : Boundary::kForbid, pred.test);
}

std::vector<Found> enumerate_closures(const FaceTable& base, int extra, const Predicate& pred,
                                      unsigned generation_seed) {
  FaceTable table = base;
  table.resize(base.size() + ix(extra));
  PairingEnumerator gen(std::move(table), false, generation_seed);
  return filter_dedupe(gen.run(), Boundary::kForbid, pred);
}

MoveSearchResult bounded_move_search(const Triangulation& start, int max_tets, int max_depth,
                                     std::size_t max_states, unsigned order_seed) {
  MoveSearchResult r;
  r.start_tets = start.size();
  r.min_tets = start.size();
  std::mt19937 rng(order_seed);
  std::vector<Triangulation> frontier{start};
  r.reachable.insert(encode_canonical(start));
  for (int depth = 1; depth <= max_depth && !frontier.empty() && !r.truncated; ++depth) {
    std::vector<Triangulation> next;
    for (const auto& tri : frontier) {
      const Skeleton sk = skeleton(tri);
      auto sites = enumerate_moves(tri, sk);
      if (order_seed != 0) std::shuffle(sites.begin(), sites.end(), rng);
      for (const auto& site : sites) {
        if (site.kind == MoveKind::kTwoThree && tri.size() + 1 > max_tets) continue;
        Triangulation moved = apply_move(tri, site).tri;
        std::string sig = encode_canonical(moved);
        if (!r.reachable.insert(sig).second) continue;
        if (r.reachable.size() > max_states) {
          r.truncated = true;
          break;
        }
        if (moved.size() < r.start_tets && is_admissible(moved) && !r.found_smaller) {
          r.found_smaller = true;
          r.smaller = sig;
          r.smaller_depth = depth;
        }
        r.min_tets = std::min(r.min_tets, moved.size());
        next.push_back(std::move(moved));
      }
      if (r.truncated) break;
    }
    r.depth_reached = depth;
    frontier = std::move(next);
  }
  return r;
}

Triangulation random_relabel(const Triangulation& tri, std::mt19937_64& rng) {
  std::vector<int> tets(ix(tri.size()));
  for (int i = 0; i < tri.size(); ++i) tets[ix(i)] = i;
  std::shuffle(tets.begin(), tets.end(), rng);
  std::vector<Perm4> maps(ix(tri.size()));
  std::uniform_int_distribution<int> pick(0, 23);
  for (auto& m : maps) m = Perm4::from_index(pick(rng));
  return tri.relabel(tets, maps);
}

Triangulation random_closed(int n, std::mt19937_64& rng) {
  if (n < 1) throw TriangulationError(ErrorKind::kInvalidArgument, "need at least one tetrahedron");
  while (true) {
    std::vector<std::array<int, 2>> faces;
    for (int t = 0; t < n; ++t)
      for (int f = 0; f < 4; ++f) faces.push_back({t, f});
    std::shuffle(faces.begin(), faces.end(), rng);
    FaceTable table(ix(n));
    std::uniform_int_distribution<int> pick(0, 5);
    for (Idx i = 0; i < faces.size(); i += 2) {
      const auto [t, f] = faces[i];
      const auto [t2, f2] = faces[i + 1];
      std::vector<Perm4> options;
      for (const Perm4& p : Perm4::all())
        if (p[f] == f2) options.push_back(p);
      join(table, t, f, t2, options[ix(pick(rng))]);
    }
    try {
      return Triangulation::build(std::move(table));
    } catch (const TriangulationError&) {
    }
  }
}

Triangulation random_walk(const Triangulation& start, int steps, int min_tets, int max_tets, std::mt19937_64& rng) {
  Triangulation tri = start;
  for (int s = 0; s < steps; ++s) {
    std::vector<MoveSite> ok;
    for (const auto& site : enumerate_moves(tri)) {
      const int delta = site.kind == MoveKind::kTwoThree ? 1 : site.kind == MoveKind::kThreeTwo ? -1 : 0;
      if (tri.size() + delta >= min_tets && tri.size() + delta <= max_tets) ok.push_back(site);
    }
    if (ok.empty()) break;
    std::uniform_int_distribution<Idx> pick(0, ok.size() - 1);
    tri = apply_move(tri, ok[pick(rng)]).tri;
  }
  return tri;
}

}  // namespace mintri
