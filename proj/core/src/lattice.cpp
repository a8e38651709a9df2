#include "perc/lattice.hpp"

#include <algorithm>

namespace perc {

Edge dual_of(const Edge& e) {
  if (e.lat == Lattice::primal) {
    if (e.o == Orientation::horizontal)
      return {{e.base.x, e.base.y - 1}, Orientation::vertical, Lattice::dual};
    return {{e.base.x - 1, e.base.y}, Orientation::horizontal, Lattice::dual};
  }
  if (e.o == Orientation::horizontal)
    return {{e.base.x + 1, e.base.y}, Orientation::vertical, Lattice::primal};
  return {{e.base.x, e.base.y + 1}, Orientation::horizontal, Lattice::primal};
}

Edge shift_source(const Edge& e) {
  if (e.lat != Lattice::primal)
    throw std::invalid_argument("shift_source: primal edge required");
  if (e.o == Orientation::horizontal)
    return {{e.base.x, e.base.y - 1}, Orientation::vertical, Lattice::primal};
  return {{e.base.x - 1, e.base.y}, Orientation::horizontal, Lattice::primal};
}

Edge shift_target(const Edge& e) {
  if (e.lat != Lattice::primal)
    throw std::invalid_argument("shift_target: primal edge required");
  if (e.o == Orientation::horizontal)
    return {{e.base.x + 1, e.base.y}, Orientation::vertical, Lattice::primal};
  return {{e.base.x, e.base.y + 1}, Orientation::horizontal, Lattice::primal};
}

bool in_box(const Box& b, const Edge& e) {
  if (e.lat != Lattice::primal) return false;
  return linf(edge_from(e), b.center) <= b.radius && linf(edge_to(e), b.center) <= b.radius;
}

bool in_annulus(const Annulus& a, const Edge& e) {
  if (!in_box({a.center, a.outer}, e)) return false;
  return !in_box({a.center, a.inner}, e);
}

std::vector<Edge> box_edges(const Box& b) {
  std::vector<Edge> out;
  out.reserve((std::size_t)4 * b.radius * (2 * b.radius + 1));
  for (int y = b.center.y - b.radius; y <= b.center.y + b.radius; ++y)
    for (int x = b.center.x - b.radius; x <= b.center.x + b.radius; ++x) {
      if (x < b.center.x + b.radius) out.push_back(primal_h(x, y));
      if (y < b.center.y + b.radius) out.push_back(primal_v(x, y));
    }
  return out;
}

std::vector<Edge> annulus_edges(const Annulus& a) {
  std::vector<Edge> out;
  for (const Edge& e : box_edges({a.center, a.outer}))
    if (!in_box({a.center, a.inner}, e)) out.push_back(e);
  return out;
}

std::vector<Edge> boundary_edges(Vertex x, int n) {
  if (n < 1) throw std::invalid_argument("boundary_edges: n >= 1 required");
  std::vector<Vertex> ring = ring_vertices(x, n);
  std::vector<Edge> out;
  out.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    Vertex a = ring[i], b = ring[(i + 1) % ring.size()];
    Vertex lo = std::min(a, b);
    out.push_back({lo, a.y == b.y ? Orientation::horizontal : Orientation::vertical,
                   Lattice::primal});
  }
  return out;
}

int n0(int k) {
  if (k < 1) throw std::invalid_argument("n0: k >= 1 required");
  return (k + 7) / 8;
}

std::vector<Vertex> ring_vertices(Vertex x, int n) {
  std::vector<Vertex> out;
  if (n == 0) {
    out.push_back(x);
    return out;
  }
  out.reserve((std::size_t)8 * n);
  // East side going up, then top going left, west going down, bottom going
  // right: counterclockwise starting at (x.x + n, x.y).
  for (int y = 0; y < n; ++y) out.push_back({x.x + n, x.y + y});
  for (int t = 0; t < 2 * n; ++t) out.push_back({x.x + n - t, x.y + n});
  for (int t = 0; t < 2 * n; ++t) out.push_back({x.x - n, x.y + n - t});
  for (int t = 0; t < 2 * n; ++t) out.push_back({x.x - n + t, x.y - n});
  for (int y = -n; y < 0; ++y) out.push_back({x.x + n, x.y + y});
  return out;
}

double set_distance(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("set_distance: empty edge set");
  auto points = [](const std::vector<Edge>& es) {
    std::vector<P2> ps;
    ps.reserve(es.size() * 2);
    for (const Edge& e : es) {
      ps.push_back(embed2(edge_from(e), e.lat));
      ps.push_back(embed2(edge_to(e), e.lat));
    }
    return ps;
  };
  std::vector<P2> pa = points(a), pb = points(b);
  std::int64_t best = INT64_MAX;
  for (const P2& p : pa)
    for (const P2& q : pb) best = std::min(best, linf2(p, q));
  return (double)best / 2.0;
}

}  // namespace perc
