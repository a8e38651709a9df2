#pragma once

// The measure-preserving shift transformation T of the region lemma and its
// inverse: inheritance along shift_source, classification E0/E1/E2, and the
// order-matched reassignment pairing E2 with E0.

#include <string>

#include "perc/regions.hpp"

namespace perc {

// Region edges under the global deterministic order: lexicographic by
// (base.y, base.x, horizontal < vertical), with O(1) membership.
struct OrderedRegion {
  std::vector<Edge> edges;  // sorted by the global order
  EdgeSet member;

  OrderedRegion(std::vector<Edge> region_edges, Box bounding);
  explicit OrderedRegion(const Region& r, Box bounding);

  bool contains(const Edge& e) const { return member.contains({e.base, e.o, Lattice::primal}); }
};

// E0: shift_source in S, shift_target outside; E2: shift_target in S,
// shift_source outside; E1 otherwise.  Partition of S with |E0| = |E2|,
// independent of the configuration.
struct EdgeClassification {
  std::vector<Edge> e0, e1, e2;  // each in the global order
};

EdgeClassification classify(const OrderedRegion& s);

// Classification of the inverse transformation: E0 and E2 swap roles.
EdgeClassification classify_inverse(const OrderedRegion& s);

// T: edges of S with shift_source in S inherit its status; the i-th edge of
// E2 takes the old status of the i-th edge of E0; everything else unchanged.
Configuration apply_T(const Configuration& cfg, const OrderedRegion& s);

// T': inheritance along shift_target, E0 paired from E2.  Exact inverse.
Configuration apply_T_inverse(const Configuration& cfg, const OrderedRegion& s);

struct ShiftVerification {
  bool precondition_ok = false;        // cfg exhibits the separated event in S
  bool translated_in_region = false;   // each shifted arm stays in S between
                                       // radius 2n and N/2
  int translated_color_mismatches = 0; // shifted-arm edges in the sub-annulus
                                       // not carrying star(sigma_i)
  bool containment = false;            // T(cfg) in A_{sigma*}(S cap B(2n,N/2))
  std::string message;
};

// Checks the containment T(A~_{k,sigma}(S)) subset A_{k,sigma*}(S cap
// B(2n, N/2)) on one sample; the precondition (arms in S, pairwise
// ell-separated, at distance >= ell from the lateral boundary) is reported,
// never silently skipped.
ShiftVerification verify_shift_lemma(const Configuration& cfg, const Region& s,
                                     const Annulus& a, const ColorSequence& sigma,
                                     int ell);

}  // namespace perc
