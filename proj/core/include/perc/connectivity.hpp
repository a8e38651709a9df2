#pragma once

// Cluster computation and path finding for a fixed color inside a restricted
// edge set.  Dual-lattice work happens on the shifted representation: a dual
// edge is handled through its integer base, and its color comes from the
// primal edge crossing it.

#include <optional>
#include <unordered_map>
#include <vector>

#include "perc/color.hpp"
#include "perc/config.hpp"

namespace perc {

struct VertexHash {
  std::size_t operator()(const Vertex& v) const {
    return std::hash<std::uint64_t>{}(((std::uint64_t)(std::uint32_t)v.x << 32) |
                                      (std::uint32_t)v.y);
  }
};

// Alternating vertex/edge sequence on one lattice, stored as the vertex run.
// Dual paths carry integer bases (the embedding adds (1/2,1/2)).
struct LatticePath {
  Lattice lat = Lattice::primal;
  std::vector<Vertex> verts;

  std::vector<Edge> edges() const;
  bool valid() const;  // consecutive vertices at l1 distance 1
};

// Union-find with path compression and union by size; exposed because several
// modules build ad hoc labelings on top of it.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = (std::int32_t)i;
    size_.assign(n, 1);
  }
  std::int32_t find(std::int32_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> size_;
};

// Vertex -> canonical cluster id (minimum vertex of the cluster in (x,y)
// lexicographic order).  Every vertex incident to an edge of the restricted
// set gets a label; color-c edges merge labels.
struct ClusterLabeling {
  Color color = Color::O;
  std::unordered_map<Vertex, Vertex, VertexHash> id;

  std::optional<Vertex> cluster_of(Vertex v) const {
    auto it = id.find(v);
    if (it == id.end()) return std::nullopt;
    return it->second;
  }
};

// `within` must be edges of the lattice matching c (mixed input throws).
ClusterLabeling label_clusters(const Configuration& cfg, const std::vector<Edge>& within,
                               Color c);

// True iff a color-c path inside `within` joins a vertex lying in `from` to a
// vertex lying in `to`.  `from`/`to` are primal edge sets (the "lies in"
// convention); for dual colors the connection is in the shifted sense.
bool connected(const Configuration& cfg, Color c, const std::vector<Edge>& from,
               const std::vector<Edge>& to, const std::vector<Edge>& within);

// Shortest (edge count) color-c path or none; deterministic tie-break by
// canonical neighbor order E,N,W,S.
std::optional<LatticePath> find_path(const Configuration& cfg, Color c,
                                     const std::vector<Edge>& from,
                                     const std::vector<Edge>& to,
                                     const std::vector<Edge>& within);

struct Rect {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

enum class Direction { horizontal, vertical };

// Color-c crossing of a rectangle between its two opposite sides.  For dual
// colors the rectangle bounds refer to dual bases.
bool crossing(const Configuration& cfg, const Rect& rect, Direction dir, Color c);

}  // namespace perc
