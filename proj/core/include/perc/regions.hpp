#pragma once

// Jordan boundary curves phi(gamma1, gamma2), interior edge sets S, and the
// complement region U.  All predicates run on coordinates scaled by two, so
// point-in-polygon tests are exact integer arithmetic.

#include <iosfwd>

#include "perc/arm_events.hpp"

namespace perc {

// Closed counterclockwise polyline: gamma1 outward, ccw arc of the outer ring,
// gamma2 inward, cw arc of the inner ring, with shortest connector segments
// for dual arm endpoints.  front() == back().
struct BoundaryCurve {
  std::vector<P2> pts;
  Annulus annulus;
  std::vector<Edge> inner_arc_edges;  // ring edges of the inner square on phi
  std::vector<Edge> outer_arc_edges;  // ring edges of the outer square on phi
  // Half-open index ranges of segments belonging to the lateral parts
  // (gamma1 / gamma2 plus their connectors); segment i = pts[i] -> pts[i+1].
  std::size_t lateral1_begin = 0, lateral1_end = 0;
  std::size_t lateral2_begin = 0, lateral2_end = 0;
};

struct Region {
  std::vector<Edge> edges;  // primal, canonical (y, x, H<V) order
  BoundaryCurve boundary;
  Annulus annulus;
  bool connected = false;

  bool contains(const Edge& e) const;
};

// phi(gamma1, gamma2); throws if an arm fails to connect the boundaries or
// the arms intersect (a dual segment of one crossing an edge of the other).
BoundaryCurve build_boundary(const LatticePath& g1, const LatticePath& g2,
                             const Annulus& a);

// Edges whose open midsegments lie strictly inside the curve, plus the
// boundary-arc edges, minus `exclude`.
Region region_of(const BoundaryCurve& curve, const Annulus& a,
                 const std::vector<Edge>& exclude = {});

// U: the region bounded by gamma_{k-1} and gamma_1 sweeping counterclockwise
// from the last arm back to the first, i.e. not containing gamma_2..gamma_{k-2}.
Region complement_region(const Configuration& cfg, const Annulus& a,
                         const std::vector<LatticePath>& arms);

// Exact even-odd ray-casting interior test; points on the curve are outside.
bool point_in_curve(const std::vector<P2>& closed, P2 p);
bool point_on_curve(const std::vector<P2>& closed, P2 p);
// Independent winding-number route used to cross-check point_in_curve.
int winding_number(const std::vector<P2>& closed, P2 p);

// Minimum l-infinity distance (scaled by two) from p to the lateral parts of
// the curve; diagonal connector segments are measured via their endpoints.
std::int64_t lateral_distance2(const BoundaryCurve& c, P2 p);

// Debug dump: curve vertex list, then one canonical edge per line.
void dump_region(const Region& r, std::ostream& out);

}  // namespace perc
