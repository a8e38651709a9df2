#pragma once

// Detection of k-arm events A_{k,sigma}, landing-zone variants, l-separated
// variants, and separation-failure (bottleneck) witnesses.
//
// The fast detector builds the counterclockwise cyclic word over inner
// boundary sites (primal vertices on the inner ring for O/C, dual sites with
// base on the inner ring for O*/C*), marks each site with every color for
// which it connects to the outer boundary inside the annulus, and looks for
// sigma as a cyclic subsequence at k distinct sites.  That criterion is
// necessary but can overcount when same-lattice arms would be forced through
// a shared vertex, so feasibility-positives are confirmed by the exhaustive
// disjoint-path search before detect_arms reports true.

#include <optional>

#include "perc/connectivity.hpp"

namespace perc {

struct ArmWitness {
  ColorSequence colors;
  std::vector<LatticePath> arms;  // same order as colors, ccw inner endpoints
};

// Contiguous run of boundary edges on the ring of the given radius; start and
// length refer to the canonical counterclockwise enumeration (boundary_edges).
struct BoundaryInterval {
  int radius = 0;
  int start = 0;
  int len = 0;
};

using LandingSequence = std::vector<BoundaryInterval>;

// Vertices lying in the interval, in ccw order.
std::vector<Vertex> interval_vertices(Vertex center, const BoundaryInterval& iv);

// Full-ring interval (vacuous landing restriction).
BoundaryInterval full_interval(int radius);

struct BottleneckWitness {
  Edge at;                    // the bottleneck edge e
  int ell = 0;                // inner radius of the four-arm annulus
  int half_dist = 0;          // floor(d(e)/2), d(e) = dist(e, inner boundary)
  double d = 0;               // d(e)
  std::array<Color, 2> pair_colors{};  // colors of the two close arms
  bool four_arms_verified = false;
  bool vacuous = false;       // annulus (ell, d/2) empty, nothing to verify
};

// Options shared by the detectors; `mask`, when set, restricts primal edges
// (and, through the shifted representation, dual edges) to the given set.
struct DetectOptions {
  const EdgeSet* mask = nullptr;
};

bool detect_arms(const Configuration& cfg, const Annulus& a, const ColorSequence& sigma,
                 const DetectOptions& opt = {});

// Exhaustive backtracking reference: k vertex-disjoint (per lattice) arms with
// colors sigma at ccw-ordered inner sites.  Ground truth for detect_arms on
// tiny instances; throws if the search exceeds `step_cap` node expansions.
std::optional<ArmWitness> detect_arms_oracle(const Configuration& cfg, const Annulus& a,
                                             const ColorSequence& sigma,
                                             std::uint64_t step_cap = 200'000'000ULL);

// Arm events with landing conditions: the sigma_i arm starts in inner[i] and
// ends in outer[i].
bool detect_arms_landing(const Configuration& cfg, const Annulus& a,
                         const ColorSequence& sigma, const LandingSequence& inner,
                         const LandingSequence& outer, const DetectOptions& opt = {});

// Deterministic arm collection: greedy counterclockwise sweep from the east
// axis, each arm the BFS-shortest path avoiding previously used vertices of
// its lattice.  May fail even when detect_arms holds (callers log this).
std::optional<ArmWitness> extract_canonical_arms(const Configuration& cfg, const Annulus& a,
                                                 const ColorSequence& sigma,
                                                 const LandingSequence* inner = nullptr,
                                                 const LandingSequence* outer = nullptr,
                                                 const DetectOptions& opt = {});

// Witness-based lower-bound detector for the l-separated event: true iff the
// canonical arms pairwise keep l-infinity distance >= ell inside B(2n, N/2).
bool detect_separated(const Configuration& cfg, const Annulus& a, const ColorSequence& sigma,
                      int ell, const DetectOptions& opt = {});

// Pairwise arm separation of a witness restricted to B(2n, N/2); empty
// restriction counts as separated.
bool witness_separated(const ArmWitness& w, const Annulus& a, int ell);

// Locates the bottleneck edge when detect_arms holds but detect_separated
// fails, and verifies the four plain arms around it.
std::optional<BottleneckWitness> detect_bottleneck(const Configuration& cfg, const Annulus& a,
                                                   const ColorSequence& sigma, int ell);

// Six-arm event (O,C*,O,C*,O,C*) on the annulus of radii (r1, r2) centered at
// the base of e.
bool detect_six_arm(const Configuration& cfg, const Edge& e, int r1, int r2);

// Mechanical ArmWitness validation: path invariants, colors, endpoints,
// per-lattice vertex disjointness and ccw cyclic order of inner endpoints.
bool validate_witness(const Configuration& cfg, const Annulus& a, const ColorSequence& sigma,
                      const ArmWitness& w, const DetectOptions& opt = {});

}  // namespace perc
