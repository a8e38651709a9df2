#include "perc/connectivity.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_set>

namespace perc {

namespace {

struct EdgeKey {
  std::uint64_t k;
  EdgeKey(const Edge& e)
      : k(((std::uint64_t)(std::uint32_t)e.base.x << 33) ^
          ((std::uint64_t)(std::uint32_t)e.base.y << 1) ^
          (std::uint64_t)(e.o == Orientation::vertical)) {}
  friend bool operator==(EdgeKey a, EdgeKey b) { return a.k == b.k; }
};
struct EdgeKeyHash {
  std::size_t operator()(EdgeKey e) const { return std::hash<std::uint64_t>{}(e.k); }
};

// Base-representation edge between two l1-adjacent base vertices.
Edge base_edge(Vertex a, Vertex b) {
  Vertex lo = std::min(a, b);
  return {lo, a.y == b.y ? Orientation::horizontal : Orientation::vertical,
          Lattice::primal};
}

// Color check through the base representation: for primal colors the edge
// itself, for dual colors the primal edge crossing the dual partner.
bool base_rep_has_color(const Configuration& cfg, const Edge& rep, Color c) {
  if (!is_dual(c)) {
    if (!cfg.contains(rep)) return false;
    return cfg.open(rep) == is_open_class(c);
  }
  Edge crossing = shift_target(rep);
  if (!cfg.contains(crossing)) return false;
  return cfg.open(crossing) == is_open_class(c);
}

std::vector<Edge> to_base_reps(const std::vector<Edge>& within, Color c) {
  Lattice want = lattice_of(c);
  std::vector<Edge> reps;
  reps.reserve(within.size());
  for (const Edge& e : within) {
    if (e.lat != want)
      throw std::invalid_argument("connectivity: edge lattice does not match color");
    reps.push_back({e.base, e.o, Lattice::primal});
  }
  return reps;
}

std::unordered_set<Vertex, VertexHash> lying_vertices(const std::vector<Edge>& edges) {
  std::unordered_set<Vertex, VertexHash> out;
  for (const Edge& e : edges) {
    out.insert(edge_from(e));
    out.insert(edge_to(e));
  }
  return out;
}

}  // namespace

std::vector<Edge> LatticePath::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    Edge e = base_edge(verts[i], verts[i + 1]);
    e.lat = lat;
    out.push_back(e);
  }
  return out;
}

bool LatticePath::valid() const {
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    if (std::abs(verts[i].x - verts[i + 1].x) + std::abs(verts[i].y - verts[i + 1].y) != 1)
      return false;
  return true;
}

ClusterLabeling label_clusters(const Configuration& cfg, const std::vector<Edge>& within,
                               Color c) {
  std::vector<Edge> reps = to_base_reps(within, c);
  ClusterLabeling out;
  out.color = c;

  std::vector<Vertex> verts;
  std::unordered_map<Vertex, std::int32_t, VertexHash> idx;
  auto intern = [&](Vertex v) {
    auto [it, fresh] = idx.emplace(v, (std::int32_t)verts.size());
    if (fresh) verts.push_back(v);
    return it->second;
  };
  for (const Edge& e : reps) {
    intern(edge_from(e));
    intern(edge_to(e));
  }
  DisjointSet ds(verts.size());
  for (const Edge& e : reps)
    if (base_rep_has_color(cfg, e, c)) ds.unite(idx[edge_from(e)], idx[edge_to(e)]);

  std::vector<Vertex> canon(verts.size(), Vertex{INT32_MAX, INT32_MAX});
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::int32_t r = ds.find((std::int32_t)i);
    canon[r] = std::min(canon[r], verts[i]);
  }
  for (std::size_t i = 0; i < verts.size(); ++i)
    out.id.emplace(verts[i], canon[ds.find((std::int32_t)i)]);
  return out;
}

std::optional<LatticePath> find_path(const Configuration& cfg, Color c,
                                     const std::vector<Edge>& from,
                                     const std::vector<Edge>& to,
                                     const std::vector<Edge>& within) {
  std::vector<Edge> reps = to_base_reps(within, c);
  std::unordered_set<EdgeKey, EdgeKeyHash> allowed;
  for (const Edge& e : reps)
    if (base_rep_has_color(cfg, e, c)) allowed.insert(e);

  auto src = lying_vertices(from);
  auto dst = lying_vertices(to);

  // Deterministic BFS: sources in sorted order, neighbors E, N, W, S.
  std::vector<Vertex> sources(src.begin(), src.end());
  std::sort(sources.begin(), sources.end());

  std::unordered_map<Vertex, Vertex, VertexHash> parent;
  std::deque<Vertex> queue;
  for (Vertex v : sources) {
    parent.emplace(v, v);
    queue.push_back(v);
  }
  const std::array<Vertex, 4> steps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (dst.count(v) && (src.count(v) ? allowed.size() > 0 : true)) {
      // Walk back to a source.  A source that is itself a target only counts
      // once it sits on at least one color-c edge of the set.
      if (!src.count(v) || [&] {
            for (Vertex d : steps)
              if (allowed.count(base_edge(v, v + d))) return true;
            return false;
          }())
      {
        LatticePath path;
        path.lat = lattice_of(c);
        Vertex cur = v;
        while (!(parent.at(cur) == cur)) {
          path.verts.push_back(cur);
          cur = parent.at(cur);
        }
        path.verts.push_back(cur);
        std::reverse(path.verts.begin(), path.verts.end());
        return path;
      }
    }
    for (Vertex d : steps) {
      Vertex w = v + d;
      if (!allowed.count(base_edge(v, w))) continue;
      if (parent.count(w)) continue;
      parent.emplace(w, v);
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

bool connected(const Configuration& cfg, Color c, const std::vector<Edge>& from,
               const std::vector<Edge>& to, const std::vector<Edge>& within) {
  return find_path(cfg, c, from, to, within).has_value();
}

bool crossing(const Configuration& cfg, const Rect& rect, Direction dir, Color c) {
  if (rect.x0 >= rect.x1 || rect.y0 >= rect.y1)
    throw std::invalid_argument("crossing: degenerate rectangle");
  int w = rect.x1 - rect.x0 + 1, h = rect.y1 - rect.y0 + 1;
  auto vid = [&](int x, int y) { return (y - rect.y0) * w + (x - rect.x0); };
  DisjointSet ds((std::size_t)w * h);
  for (int y = rect.y0; y <= rect.y1; ++y)
    for (int x = rect.x0; x <= rect.x1; ++x) {
      if (x < rect.x1 && base_rep_has_color(cfg, primal_h(x, y), c))
        ds.unite(vid(x, y), vid(x + 1, y));
      if (y < rect.y1 && base_rep_has_color(cfg, primal_v(x, y), c))
        ds.unite(vid(x, y), vid(x, y + 1));
    }
  if (dir == Direction::horizontal) {
    for (int ya = rect.y0; ya <= rect.y1; ++ya)
      for (int yb = rect.y0; yb <= rect.y1; ++yb)
        if (ds.find(vid(rect.x0, ya)) == ds.find(vid(rect.x1, yb))) return true;
    return false;
  }
  for (int xa = rect.x0; xa <= rect.x1; ++xa)
    for (int xb = rect.x0; xb <= rect.x1; ++xb)
      if (ds.find(vid(xa, rect.y0)) == ds.find(vid(xb, rect.y1))) return true;
  return false;
}

}  // namespace perc
