#pragma once

// Geometry of the square lattice and its dual: vertices, canonical edges,
// duality, the diagonal shift maps, boxes, annuli and distances.
//
// A dual vertex is stored with its integer base (x, y) and is embedded in the
// plane at (x + 1/2, y + 1/2).  All geometric predicates work on coordinates
// scaled by two so that everything stays in exact integer arithmetic.

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace perc {

struct Vertex {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex operator+(Vertex a, Vertex b) { return {a.x + b.x, a.y + b.y}; }
inline Vertex operator-(Vertex a, Vertex b) { return {a.x - b.x, a.y - b.y}; }

enum class Orientation : std::uint8_t { horizontal, vertical };
enum class Lattice : std::uint8_t { primal, dual };

// Canonical edge: base is the lexicographically smaller endpoint.  A
// horizontal edge spans base -> base + (1,0), a vertical edge spans
// base -> base + (0,1).  Dual edges carry the integer base of their lower-left
// dual vertex; the embedding adds (1/2, 1/2).
struct Edge {
  Vertex base;
  Orientation o = Orientation::horizontal;
  Lattice lat = Lattice::primal;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge primal_h(int x, int y) { return {{x, y}, Orientation::horizontal, Lattice::primal}; }
inline Edge primal_v(int x, int y) { return {{x, y}, Orientation::vertical, Lattice::primal}; }

inline Vertex edge_from(const Edge& e) { return e.base; }
inline Vertex edge_to(const Edge& e) {
  return e.o == Orientation::horizontal ? Vertex{e.base.x + 1, e.base.y}
                                        : Vertex{e.base.x, e.base.y + 1};
}

// l-infinity distance between lattice vertices.
inline int linf(Vertex a, Vertex b) {
  int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx > dy ? dx : dy;
}

// Plane point in coordinates scaled by two (exact half-integer arithmetic).
struct P2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const P2&, const P2&) = default;
};

inline P2 embed2(Vertex v, Lattice lat) {
  if (lat == Lattice::primal) return {2 * (std::int64_t)v.x, 2 * (std::int64_t)v.y};
  return {2 * (std::int64_t)v.x + 1, 2 * (std::int64_t)v.y + 1};
}

inline std::int64_t linf2(P2 a, P2 b) {
  std::int64_t dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  std::int64_t dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx > dy ? dx : dy;
}

// The dual edge sharing a midpoint with e (and vice versa).  Involution.
Edge dual_of(const Edge& e);

// m(e) = e* - (1/2,1/2): the primal edge obtained by translating the dual
// partner of a primal edge down-left.  Bijection on primal edges.
Edge shift_source(const Edge& e);
// Inverse of shift_source: e* + (1/2,1/2).  Also equals the primal edge that
// crosses the dual edge sitting at e's own base.
Edge shift_target(const Edge& e);

struct Box {
  Vertex center;
  int radius = 0;
};

struct Annulus {
  Vertex center;
  int inner = 0;
  int outer = 0;
};

inline Box outer_box(const Annulus& a) { return {a.center, a.outer}; }

// Membership per the edge-set definitions: B(x,n) holds primal edges with both
// endpoints within l-infinity distance n of x.
bool in_box(const Box& b, const Edge& e);
// Annulus edge set B(x,n,N) = B(x,N) \ B(x,n).
bool in_annulus(const Annulus& a, const Edge& e);

std::vector<Edge> box_edges(const Box& b);
std::vector<Edge> annulus_edges(const Annulus& a);

// The 8n edges with both endpoints at distance exactly n from x.  n >= 1.
std::vector<Edge> boundary_edges(Vertex x, int n);

// Smallest n with |boundary(n)| = 8n >= k.
int n0(int k);

// Vertices at l-infinity distance exactly n from x, in counterclockwise order
// starting at (x.x + n, x.y).
std::vector<Vertex> ring_vertices(Vertex x, int n);

// Minimum l-infinity distance between embedded endpoints of two edge sets.
// Dual edges are embedded at +(1/2,1/2).
double set_distance(const std::vector<Edge>& a, const std::vector<Edge>& b);

// Dense index over the primal edges of a box; used for status tables and
// region masks.  Slots follow a row-major grid; index() is -1 outside.
class EdgeIndexer {
 public:
  EdgeIndexer() = default;
  EdgeIndexer(Vertex center, int radius) : c_(center), n_(radius), side_(2 * radius + 1) {}

  Vertex center() const { return c_; }
  int radius() const { return n_; }
  std::size_t size() const { return (std::size_t)side_ * side_ * 2; }

  int index(const Edge& e) const {
    if (e.lat != Lattice::primal) return -1;
    int rx = e.base.x - c_.x + n_, ry = e.base.y - c_.y + n_;
    if (rx < 0 || ry < 0 || rx >= side_ || ry >= side_) return -1;
    if (e.o == Orientation::horizontal) {
      if (rx == side_ - 1) return -1;
      return (ry * side_ + rx) * 2;
    }
    if (ry == side_ - 1) return -1;
    return (ry * side_ + rx) * 2 + 1;
  }

  Edge edge(int idx) const {
    int cell = idx / 2;
    Orientation o = (idx % 2) ? Orientation::vertical : Orientation::horizontal;
    int ry = cell / side_, rx = cell % side_;
    return {{rx - n_ + c_.x, ry - n_ + c_.y}, o, Lattice::primal};
  }

  bool valid(int idx) const {
    if (idx < 0 || (std::size_t)idx >= size()) return false;
    Edge e = edge(idx);
    return linf(edge_from(e), c_) <= n_ && linf(edge_to(e), c_) <= n_;
  }

  int vertex_index(Vertex v) const {
    int rx = v.x - c_.x + n_, ry = v.y - c_.y + n_;
    if (rx < 0 || ry < 0 || rx >= side_ || ry >= side_) return -1;
    return ry * side_ + rx;
  }
  std::size_t vertex_count() const { return (std::size_t)side_ * side_; }
  Vertex vertex(int idx) const { return {idx % side_ - n_ + c_.x, idx / side_ - n_ + c_.y}; }

 private:
  Vertex c_;
  int n_ = 0;
  int side_ = 1;
};

// A set of primal edges backed by a bitset over an EdgeIndexer.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(const EdgeIndexer& idx) : idx_(idx), bits_((idx.size() + 63) / 64, 0) {}

  const EdgeIndexer& indexer() const { return idx_; }

  void insert(const Edge& e) {
    int i = idx_.index(e);
    if (i < 0) throw std::out_of_range("EdgeSet::insert: edge outside indexer");
    bits_[i >> 6] |= (std::uint64_t{1} << (i & 63));
  }
  void erase(const Edge& e) {
    int i = idx_.index(e);
    if (i >= 0) bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool contains(const Edge& e) const {
    int i = idx_.index(e);
    return i >= 0 && (bits_[i >> 6] >> (i & 63)) & 1;
  }
  bool contains_index(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }

 private:
  EdgeIndexer idx_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace perc
