#include "perc/config.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace perc {

Configuration::Configuration(Box box, bool all_open)
    : box_(box), idx_(box.center, box.radius), bits_((idx_.size() + 63) / 64, 0) {
  if (all_open)
    for (std::size_t i = 0; i < idx_.size(); ++i)
      if (idx_.valid((int)i)) bits_[i >> 6] |= (std::uint64_t{1} << (i & 63));
}

Configuration Configuration::sample_critical(Box box, RngSeed seed) {
  Configuration cfg(box, false);
  std::uint64_t key = rng_key(seed);
  for (std::size_t w = 0; w < cfg.bits_.size(); ++w) cfg.bits_[w] = rng_block(key, w);
  // Mask invalid slots (horizontal slots in the last column, vertical slots
  // in the last row, and the tail of the last word) so comparisons and
  // serialization stay canonical.
  auto clear = [&](std::size_t i) {
    cfg.bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  };
  const std::size_t side = (std::size_t)(2 * box.radius + 1);
  for (std::size_t ry = 0; ry < side; ++ry) clear((ry * side + side - 1) * 2);
  for (std::size_t rx = 0; rx < side; ++rx) clear(((side - 1) * side + rx) * 2 + 1);
  for (std::size_t i = cfg.idx_.size(); i < cfg.bits_.size() * 64; ++i) clear(i);
  return cfg;
}

bool Configuration::contains(const Edge& e) const {
  return e.lat == Lattice::primal && in_box(box_, e);
}

bool Configuration::open(const Edge& e) const {
  int i = idx_.index(e);
  if (i < 0 || !contains(e)) throw std::out_of_range("Configuration::open: edge outside box");
  return open_index(i);
}

void Configuration::set_open(const Edge& e, bool open) {
  int i = idx_.index(e);
  if (i < 0 || !contains(e)) throw std::out_of_range("Configuration::set_open: edge outside box");
  if (open)
    bits_[i >> 6] |= (std::uint64_t{1} << (i & 63));
  else
    bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

bool Configuration::has_color(const Edge& e, Color c) const {
  if (lattice_of(c) != e.lat)
    throw std::invalid_argument("has_color: lattice/color mismatch");
  const Edge primal = e.lat == Lattice::primal ? e : dual_of(e);
  bool o = open(primal);
  return is_open_class(c) ? o : !o;
}

Configuration Configuration::flip_region(std::span<const Edge> s) const {
  Configuration out = *this;
  for (const Edge& e : s) {
    int i = idx_.index(e);
    if (i < 0 || !contains(e))
      throw std::out_of_range("flip_region: region not contained in box");
    out.bits_[i >> 6] ^= (std::uint64_t{1} << (i & 63));
  }
  return out;
}

bool operator==(const Configuration& a, const Configuration& b) {
  return a.box_.center == b.box_.center && a.box_.radius == b.box_.radius &&
         a.bits_ == b.bits_;
}

std::vector<Edge> Configuration::canonical_edges() const {
  std::vector<Edge> out;
  int r = box_.radius;
  Vertex c = box_.center;
  for (int y = c.y - r; y <= c.y + r; ++y)
    for (int x = c.x - r; x <= c.x + r; ++x) {
      Edge h = primal_h(x, y), v = primal_v(x, y);
      if (in_box(box_, h)) out.push_back(h);
      if (in_box(box_, v)) out.push_back(v);
    }
  return out;
}

void Configuration::save(std::ostream& out) const {
  out << "percolation-cfg v1\n";
  out << "box " << box_.center.x << ' ' << box_.center.y << ' ' << box_.radius << '\n';
  for (const Edge& e : canonical_edges())
    out << (e.o == Orientation::horizontal ? 'H' : 'V') << ' ' << e.base.x << ' '
        << e.base.y << ' ' << (open(e) ? 1 : 0) << '\n';
}

Configuration Configuration::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "percolation-cfg v1")
    throw std::runtime_error("config load: bad header");
  if (!std::getline(in, line)) throw std::runtime_error("config load: missing box line");
  std::istringstream box_line(line);
  std::string tag;
  int cx, cy, r;
  if (!(box_line >> tag >> cx >> cy >> r) || tag != "box")
    throw std::runtime_error("config load: bad box line");
  Configuration cfg({{cx, cy}, r}, false);
  for (const Edge& e : cfg.canonical_edges()) {
    if (!std::getline(in, line)) throw std::runtime_error("config load: truncated");
    std::istringstream ls(line);
    char o;
    int x, y, s;
    if (!(ls >> o >> x >> y >> s) || (o != 'H' && o != 'V') || (s != 0 && s != 1))
      throw std::runtime_error("config load: bad edge line");
    Edge got{{x, y}, o == 'H' ? Orientation::horizontal : Orientation::vertical,
             Lattice::primal};
    if (!(got == e)) throw std::runtime_error("config load: edge order mismatch");
    cfg.set_open(e, s == 1);
  }
  return cfg;
}

}  // namespace perc
