#include "perc/regions.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace perc {

namespace {

using I128 = __int128;

std::int64_t cross(P2 o, P2 a, P2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Perimeter parameter of a point on the square |.|_inf = R around c,
// counterclockwise from the corner (R, -R); total length 8R.
std::int64_t square_param(P2 c, std::int64_t R, P2 p) {
  std::int64_t x = p.x - c.x, y = p.y - c.y;
  if (x == R && y < R) return y + R;
  if (y == R && x > -R) return 2 * R + (R - x);
  if (x == -R && y > -R) return 4 * R + (R - y);
  if (y == -R) return 6 * R + (x + R);
  throw std::logic_error("square_param: point not on square");
}

P2 square_point(P2 c, std::int64_t R, std::int64_t t) {
  t = ((t % (8 * R)) + 8 * R) % (8 * R);
  if (t < 2 * R) return {c.x + R, c.y + t - R};
  if (t < 4 * R) return {c.x + R - (t - 2 * R), c.y + R};
  if (t < 6 * R) return {c.x - R, c.y + R - (t - 4 * R)};
  return {c.x + t - 6 * R - R, c.y - R};
}

// Counterclockwise arc from a to b: interior corner points, exclusive of the
// endpoints.  Zero-length when a == b.
std::vector<P2> arc_corners(P2 c, std::int64_t R, P2 a, P2 b) {
  std::int64_t ta = square_param(c, R, a);
  std::int64_t len = ((square_param(c, R, b) - ta) % (8 * R) + 8 * R) % (8 * R);
  std::vector<std::int64_t> offs;
  for (std::int64_t tc = 0; tc < 8 * R; tc += 2 * R) {
    std::int64_t off = ((tc - ta) % (8 * R) + 8 * R) % (8 * R);
    if (off > 0 && off < len) offs.push_back(off);
  }
  std::sort(offs.begin(), offs.end());
  std::vector<P2> out;
  for (std::int64_t off : offs) out.push_back(square_point(c, R, ta + off));
  return out;
}

// Ring edges (unit lattice edges of the square of the given radius) fully
// contained in the ccw arc from a to b.
std::vector<Edge> arc_edges(Vertex center, int radius, P2 a, P2 b) {
  P2 c = embed2(center, Lattice::primal);
  std::int64_t R = 2 * radius;
  std::int64_t ta = square_param(c, R, a);
  std::int64_t len = ((square_param(c, R, b) - ta) % (8 * R) + 8 * R) % (8 * R);
  std::vector<Edge> out;
  std::vector<Vertex> ring = ring_vertices(center, radius);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    Vertex u = ring[i], w = ring[(i + 1) % ring.size()];
    std::int64_t tu = square_param(c, R, embed2(u, Lattice::primal));
    std::int64_t off = ((tu - ta) % (8 * R) + 8 * R) % (8 * R);
    if (off + 2 <= len) {
      Vertex lo = std::min(u, w);
      out.push_back({lo, u.y == w.y ? Orientation::horizontal : Orientation::vertical,
                     Lattice::primal});
    }
  }
  return out;
}

// Nearest point of the square |.|_inf = R around c (ties broken toward moving
// x).  Dual endpoints embed half a step off the square in either direction:
// outside it on the east/north sides, inside it on the west/south sides.
P2 clamp_to_square(P2 c, std::int64_t R, P2 p) {
  std::int64_t dx = p.x - c.x, dy = p.y - c.y;
  std::int64_t m = std::max(std::abs(dx), std::abs(dy));
  if (m > R) return {std::clamp(p.x, c.x - R, c.x + R), std::clamp(p.y, c.y - R, c.y + R)};
  if (m == R) return p;
  if (std::abs(dx) >= std::abs(dy)) return {c.x + (dx >= 0 ? R : -R), p.y};
  return {p.x, c.y + (dy >= 0 ? R : -R)};
}

// Embedded polyline of an arm oriented inner -> outer, with shortest
// connector segments for dual endpoints.
std::vector<P2> lateral_polyline(const LatticePath& g, const Annulus& a) {
  P2 c = embed2(a.center, Lattice::primal);
  std::vector<P2> pts;
  P2 first = embed2(g.verts.front(), g.lat);
  P2 inner_att = clamp_to_square(c, 2 * a.inner, first);
  if (!(inner_att == first)) pts.push_back(inner_att);
  for (Vertex v : g.verts) pts.push_back(embed2(v, g.lat));
  P2 last = pts.back();
  P2 outer_att = clamp_to_square(c, 2 * a.outer, last);
  if (!(outer_att == last)) pts.push_back(outer_att);
  return pts;
}

void check_arm(const LatticePath& g, const Annulus& a, const char* which) {
  if (!g.valid() || g.verts.size() < 2)
    throw std::invalid_argument(std::string("build_boundary: invalid arm ") + which);
  if (linf(g.verts.front(), a.center) != a.inner ||
      linf(g.verts.back(), a.center) != a.outer)
    throw std::invalid_argument(std::string("build_boundary: arm ") + which +
                                " fails to connect the boundaries");
}

bool canonical_less(const Edge& a, const Edge& b) {
  return std::tie(a.base.y, a.base.x, a.o) < std::tie(b.base.y, b.base.x, b.o);
}

}  // namespace

bool Region::contains(const Edge& e) const {
  Edge rep{e.base, e.o, Lattice::primal};
  return std::binary_search(edges.begin(), edges.end(), rep, canonical_less);
}

BoundaryCurve build_boundary(const LatticePath& g1, const LatticePath& g2,
                             const Annulus& a) {
  check_arm(g1, a, "gamma1");
  check_arm(g2, a, "gamma2");

  // Intersection check: shared vertices on one lattice, or a dual arm edge
  // crossing an edge of a primal arm.
  auto base_edges = [](const LatticePath& g) {
    std::set<std::pair<std::pair<int, int>, int>> out;
    for (const Edge& e : g.edges())
      out.insert({{e.base.x, e.base.y}, (int)e.o});
    return out;
  };
  if (g1.lat == g2.lat) {
    std::set<std::pair<int, int>> v1;
    for (Vertex v : g1.verts) v1.insert({v.x, v.y});
    for (Vertex v : g2.verts)
      if (v1.count({v.x, v.y}))
        throw std::invalid_argument("build_boundary: arms intersect");
  } else {
    const LatticePath& dual_arm = g1.lat == Lattice::dual ? g1 : g2;
    const LatticePath& primal_arm = g1.lat == Lattice::dual ? g2 : g1;
    auto pe = base_edges(primal_arm);
    for (const Edge& e : dual_arm.edges()) {
      Edge x = shift_target({e.base, e.o, Lattice::primal});
      if (pe.count({{x.base.x, x.base.y}, (int)x.o}))
        throw std::invalid_argument("build_boundary: arms intersect");
    }
  }

  BoundaryCurve out;
  out.annulus = a;
  P2 c = embed2(a.center, Lattice::primal);
  std::vector<P2> l1 = lateral_polyline(g1, a);
  std::vector<P2> l2 = lateral_polyline(g2, a);

  // gamma1 outward.
  out.lateral1_begin = 0;
  out.pts = l1;
  out.lateral1_end = out.pts.size() - 1;
  // Outer arc, ccw from gamma1's attach point to gamma2's.
  for (P2 p : arc_corners(c, 2 * a.outer, l1.back(), l2.back())) out.pts.push_back(p);
  out.pts.push_back(l2.back());
  // gamma2 inward.
  out.lateral2_begin = out.pts.size() - 1;
  for (std::size_t i = l2.size() - 1; i-- > 0;) out.pts.push_back(l2[i]);
  out.lateral2_end = out.pts.size() - 1;
  // Inner arc, back to gamma1's inner attach point (clockwise traversal of
  // the ccw arc from gamma1 to gamma2).
  std::vector<P2> inner = arc_corners(c, 2 * a.inner, l1.front(), l2.front());
  for (std::size_t i = inner.size(); i-- > 0;) out.pts.push_back(inner[i]);
  out.pts.push_back(l1.front());

  out.outer_arc_edges = arc_edges(a.center, a.outer, l1.back(), l2.back());
  out.inner_arc_edges = arc_edges(a.center, a.inner, l1.front(), l2.front());
  return out;
}

bool point_on_curve(const std::vector<P2>& closed, P2 p) {
  for (std::size_t i = 0; i + 1 < closed.size(); ++i) {
    P2 a = closed[i], b = closed[i + 1];
    if (cross(a, b, p) != 0) continue;
    if (p.x < std::min(a.x, b.x) || p.x > std::max(a.x, b.x)) continue;
    if (p.y < std::min(a.y, b.y) || p.y > std::max(a.y, b.y)) continue;
    return true;
  }
  return false;
}

bool point_in_curve(const std::vector<P2>& closed, P2 p) {
  if (point_on_curve(closed, p)) return false;
  bool inside = false;
  for (std::size_t i = 0; i + 1 < closed.size(); ++i) {
    P2 a = closed[i], b = closed[i + 1];
    if ((a.y > p.y) == (b.y > p.y)) continue;
    // x-coordinate of the crossing vs p.x, cross-multiplied exactly.
    I128 lhs = (I128)(a.x - p.x) * (b.y - a.y) + (I128)(b.x - a.x) * (p.y - a.y);
    if (b.y - a.y < 0) lhs = -lhs;
    if (lhs > 0) inside = !inside;
  }
  return inside;
}

int winding_number(const std::vector<P2>& closed, P2 p) {
  int wn = 0;
  for (std::size_t i = 0; i + 1 < closed.size(); ++i) {
    P2 a = closed[i], b = closed[i + 1];
    if (a.y <= p.y) {
      if (b.y > p.y && cross(a, b, p) > 0) ++wn;
    } else {
      if (b.y <= p.y && cross(a, b, p) < 0) --wn;
    }
  }
  return wn;
}

Region region_of(const BoundaryCurve& curve, const Annulus& a,
                 const std::vector<Edge>& exclude) {
  if (curve.pts.size() < 4 || !(curve.pts.front() == curve.pts.back()))
    throw std::invalid_argument("region_of: degenerate curve");
  Region out;
  out.boundary = curve;
  out.annulus = a;

  std::set<std::pair<std::pair<int, int>, int>> drop;
  for (const Edge& e : exclude) drop.insert({{e.base.x, e.base.y}, (int)e.o});
  auto key = [](const Edge& e) {
    return std::pair<std::pair<int, int>, int>{{e.base.x, e.base.y}, (int)e.o};
  };

  std::set<std::pair<std::pair<int, int>, int>> seen;
  auto add = [&](const Edge& e) {
    if (drop.count(key(e)) || !seen.insert(key(e)).second) return;
    out.edges.push_back({e.base, e.o, Lattice::primal});
  };
  for (const Edge& e : annulus_edges(a)) {
    P2 u = embed2(edge_from(e), Lattice::primal), w = embed2(edge_to(e), Lattice::primal);
    P2 mid{(u.x + w.x) / 2, (u.y + w.y) / 2};
    if (point_in_curve(curve.pts, mid)) add(e);
  }
  for (const Edge& e : curve.inner_arc_edges) add(e);
  for (const Edge& e : curve.outer_arc_edges) add(e);
  std::sort(out.edges.begin(), out.edges.end(), canonical_less);

  // Connectivity of S viewed as a graph on its endpoints.
  std::vector<Vertex> verts;
  std::unordered_map<Vertex, std::int32_t, VertexHash> idx;
  auto intern = [&](Vertex v) {
    auto [it, fresh] = idx.emplace(v, (std::int32_t)verts.size());
    if (fresh) verts.push_back(v);
    return it->second;
  };
  for (const Edge& e : out.edges) {
    intern(edge_from(e));
    intern(edge_to(e));
  }
  DisjointSet ds(verts.size());
  for (const Edge& e : out.edges) ds.unite(idx[edge_from(e)], idx[edge_to(e)]);
  int comps = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (ds.find((std::int32_t)i) == (std::int32_t)i) ++comps;
  out.connected = comps <= 1;
  return out;
}

Region complement_region(const Configuration& cfg, const Annulus& a,
                         const std::vector<LatticePath>& arms) {
  if (arms.size() < 2)
    throw std::invalid_argument("complement_region: need at least two arms");
  for (const LatticePath& g : arms) {
    check_arm(g, a, "conditioned");
    for (Vertex v : g.verts)
      if (linf(v, cfg.box().center) > cfg.box().radius)
        throw std::invalid_argument("complement_region: arm outside box");
  }
  const LatticePath& first = arms.front();
  const LatticePath& last = arms.back();
  std::vector<Edge> shared;
  if (first.lat == last.lat) {
    std::set<std::pair<std::pair<int, int>, int>> e1;
    for (const Edge& e : first.edges()) e1.insert({{e.base.x, e.base.y}, (int)e.o});
    for (const Edge& e : last.edges())
      if (e1.count({{e.base.x, e.base.y}, (int)e.o}))
        shared.push_back({e.base, e.o, Lattice::primal});
  }
  return region_of(build_boundary(last, first, a), a, shared);
}

std::int64_t lateral_distance2(const BoundaryCurve& c, P2 p) {
  auto seg_dist = [&](P2 a, P2 b) -> std::int64_t {
    if (a.x == b.x || a.y == b.y) {  // axis-aligned: exact Chebyshev distance
      std::int64_t dx = std::max<std::int64_t>(
          0, std::max(std::min(a.x, b.x) - p.x, p.x - std::max(a.x, b.x)));
      std::int64_t dy = std::max<std::int64_t>(
          0, std::max(std::min(a.y, b.y) - p.y, p.y - std::max(a.y, b.y)));
      return std::max(dx, dy);
    }
    return std::min(linf2(a, p), linf2(b, p));  // short diagonal connector
  };
  std::int64_t best = INT64_MAX;
  auto scan = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      best = std::min(best, seg_dist(c.pts[i], c.pts[i + 1]));
  };
  scan(c.lateral1_begin, c.lateral1_end);
  scan(c.lateral2_begin, c.lateral2_end);
  return best;
}

void dump_region(const Region& r, std::ostream& out) {
  out << "curve " << r.boundary.pts.size() << '\n';
  for (const P2& p : r.boundary.pts) out << p.x << ' ' << p.y << '\n';
  out << "edges " << r.edges.size() << '\n';
  for (const Edge& e : r.edges)
    out << (e.o == Orientation::horizontal ? 'H' : 'V') << ' ' << e.base.x << ' '
        << e.base.y << '\n';
}

}  // namespace perc
