#include "perc/shift.hpp"

#include <algorithm>

namespace perc {

namespace {

bool global_less(const Edge& a, const Edge& b) {
  return std::tie(a.base.y, a.base.x, a.o) < std::tie(b.base.y, b.base.x, b.o);
}

std::vector<Edge> normalize(std::vector<Edge> edges) {
  for (Edge& e : edges) e.lat = Lattice::primal;
  std::sort(edges.begin(), edges.end(), global_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

OrderedRegion::OrderedRegion(std::vector<Edge> region_edges, Box bounding)
    : edges(normalize(std::move(region_edges))), member(EdgeIndexer(bounding.center, bounding.radius)) {
  for (const Edge& e : edges) member.insert(e);
}

OrderedRegion::OrderedRegion(const Region& r, Box bounding)
    : OrderedRegion(r.edges, bounding) {}

EdgeClassification classify(const OrderedRegion& s) {
  EdgeClassification out;
  for (const Edge& e : s.edges) {
    bool src = s.contains(shift_source(e));
    bool tgt = s.contains(shift_target(e));
    if (src && !tgt)
      out.e0.push_back(e);
    else if (tgt && !src)
      out.e2.push_back(e);
    else
      out.e1.push_back(e);
  }
  if (out.e0.size() != out.e2.size())
    throw std::logic_error("classify: |E0| != |E2|");
  return out;
}

EdgeClassification classify_inverse(const OrderedRegion& s) {
  EdgeClassification fwd = classify(s);
  return {std::move(fwd.e2), std::move(fwd.e1), std::move(fwd.e0)};
}

Configuration apply_T(const Configuration& cfg, const OrderedRegion& s) {
  EdgeClassification cls = classify(s);
  std::vector<std::pair<Edge, bool>> updates;
  for (const Edge& e : s.edges) {
    Edge src = shift_source(e);
    if (s.contains(src)) updates.emplace_back(e, cfg.open(src));
  }
  for (std::size_t i = 0; i < cls.e2.size(); ++i)
    updates.emplace_back(cls.e2[i], cfg.open(cls.e0[i]));
  Configuration out = cfg;
  for (const auto& [e, st] : updates) out.set_open(e, st);
  return out;
}

Configuration apply_T_inverse(const Configuration& cfg, const OrderedRegion& s) {
  EdgeClassification cls = classify(s);
  std::vector<std::pair<Edge, bool>> updates;
  for (const Edge& e : s.edges) {
    Edge tgt = shift_target(e);
    if (s.contains(tgt)) updates.emplace_back(e, cfg.open(tgt));
  }
  for (std::size_t i = 0; i < cls.e0.size(); ++i)
    updates.emplace_back(cls.e0[i], cfg.open(cls.e2[i]));
  Configuration out = cfg;
  for (const auto& [e, st] : updates) out.set_open(e, st);
  return out;
}

ShiftVerification verify_shift_lemma(const Configuration& cfg, const Region& s,
                                     const Annulus& a, const ColorSequence& sigma,
                                     int ell) {
  ShiftVerification out;
  const int n = a.inner, half = a.outer / 2;
  if (2 * n >= half) {
    out.message = "sub-annulus B(2n, N/2) empty";
    return out;
  }

  EdgeSet mask{EdgeIndexer(a.center, a.outer)};
  for (const Edge& e : s.edges) mask.insert(e);
  DetectOptions opt{&mask};

  auto w = extract_canonical_arms(cfg, a, sigma, nullptr, nullptr, opt);
  if (!w) {
    out.message = "no canonical arms inside S";
    return out;
  }
  if (!witness_separated(*w, a, ell)) {
    out.message = "arms not ell-separated in B(2n, N/2)";
    return out;
  }
  const P2 c = embed2(a.center, Lattice::primal);
  for (const LatticePath& arm : w->arms)
    for (Vertex v : arm.verts) {
      P2 p = embed2(v, arm.lat);
      std::int64_t r = linf2(p, c);
      if (r < 4 * (std::int64_t)n || r > 2 * (std::int64_t)half) continue;
      if (lateral_distance2(s.boundary, p) < 2 * (std::int64_t)ell) {
        out.message = "arm closer than ell to the lateral boundary";
        return out;
      }
    }
  out.precondition_ok = true;

  Configuration shifted = apply_T(cfg, OrderedRegion(s, cfg.box()));

  // The +(1/2,1/2) translate of each arm, on the opposite lattice.
  Annulus sub{a.center, 2 * n, half};
  out.translated_in_region = true;
  for (std::size_t i = 0; i < w->arms.size(); ++i) {
    const LatticePath& arm = w->arms[i];
    LatticePath moved;
    moved.lat = arm.lat == Lattice::primal ? Lattice::dual : Lattice::primal;
    for (Vertex v : arm.verts)
      moved.verts.push_back(arm.lat == Lattice::primal ? v : v + Vertex{1, 1});
    Color want = star(sigma[i]);
    for (const Edge& e : moved.edges()) {
      Edge rep{e.base, e.o, Lattice::primal};
      if (!in_annulus(sub, rep)) continue;
      if (!s.contains(rep)) out.translated_in_region = false;
      Edge probe = is_dual(want) ? shift_target(rep) : rep;
      if (!shifted.contains(probe) || shifted.open(probe) != is_open_class(want))
        ++out.translated_color_mismatches;
    }
  }

  out.containment = detect_arms(shifted, sub, star(sigma), opt);
  out.message = out.containment ? "containment holds" : "containment FAILED";
  return out;
}

}  // namespace perc
