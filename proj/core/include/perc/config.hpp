#pragma once

// Percolation configurations on a finite box: critical sampling, status
// queries in all four colors, region flips, and the text file format.

#include <iosfwd>
#include <span>
#include <vector>

#include "perc/color.hpp"
#include "perc/lattice.hpp"
#include "perc/rng.hpp"

namespace perc {

class Configuration {
 public:
  Configuration() = default;
  Configuration(Box box, bool all_open);

  // Each primal edge open independently with probability 1/2, deterministic
  // given (seed, stream).
  static Configuration sample_critical(Box box, RngSeed seed);

  const Box& box() const { return box_; }
  const EdgeIndexer& indexer() const { return idx_; }

  bool contains(const Edge& e) const;

  // Status of a primal edge; throws if outside the box.
  bool open(const Edge& e) const;
  void set_open(const Edge& e, bool open);

  // O <=> primal open, C <=> primal closed, O*/C* via the dual relation
  // w*(e*) = w(e).  Rejects lattice/color mismatches.
  bool has_color(const Edge& e, Color c) const;

  // Statuses inverted exactly on S, unchanged elsewhere.  Involution.
  Configuration flip_region(std::span<const Edge> s) const;

  // Fast path: raw status by edge slot (see EdgeIndexer).
  bool open_index(int idx) const { return (bits_[idx >> 6] >> (idx & 63)) & 1; }

  // Content hash of box and statuses; equal configurations hash equal.
  std::uint64_t fingerprint() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (std::uint64_t)(std::uint32_t)box_.center.x;
    h = (h ^ (std::uint64_t)(std::uint32_t)box_.center.y) * 0xff51afd7ed558ccdULL;
    h = (h ^ (std::uint64_t)box_.radius) * 0xc4ceb9fe1a85ec53ULL;
    for (std::uint64_t w : bits_) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return h;
  }

  friend bool operator==(const Configuration& a, const Configuration& b);

  // Text format: "percolation-cfg v1" / "box cx cy N" / one line per edge
  // "H|V x y 0|1" in canonical (y, x, orientation) order.  Bit-exact.
  void save(std::ostream& out) const;
  static Configuration load(std::istream& in);

  // Canonical (base.y, base.x, horizontal<vertical) enumeration of the box
  // edges; also the order used by the shift transformation.
  std::vector<Edge> canonical_edges() const;

 private:
  Box box_;
  EdgeIndexer idx_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace perc
