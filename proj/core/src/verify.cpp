#include "perc/verify.hpp"

#include <chrono>
#include <set>
#include <sstream>

namespace perc {

namespace {

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string dump_edges(const std::vector<Edge>& edges) {
  std::ostringstream out;
  for (const Edge& e : edges)
    out << (e.o == Orientation::horizontal ? 'H' : 'V') << '(' << e.base.x << ','
        << e.base.y << ") ";
  return out.str();
}

// apply_T with the E0 list deliberately reversed in the pairing step; used by
// the mutation check to prove the suite can catch a wrong pairing order.
Configuration apply_T_reversed_pairing(const Configuration& cfg, const OrderedRegion& s) {
  EdgeClassification cls = classify(s);
  std::vector<std::pair<Edge, bool>> updates;
  for (const Edge& e : s.edges) {
    Edge src = shift_source(e);
    if (s.contains(src)) updates.emplace_back(e, cfg.open(src));
  }
  for (std::size_t i = 0; i < cls.e2.size(); ++i)
    updates.emplace_back(cls.e2[i], cfg.open(cls.e0[cls.e0.size() - 1 - i]));
  Configuration out = cfg;
  for (const auto& [e, st] : updates) out.set_open(e, st);
  return out;
}

std::vector<ColorSequence> polychromatic_classes(int k) {
  std::set<ColorSequence> canon;
  const std::array<Color, 4> all{Color::O, Color::C, Color::Os, Color::Cs};
  std::vector<ColorSequence> out;
  ColorSequence cur(k);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      if (polychromatic(cur) && canon.insert(cyclic_canonical(cur)).second)
        out.push_back(cyclic_canonical(cur));
      return;
    }
    for (Color c : all) {
      cur[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::optional<RegionSample> sample_arm_region(const Annulus& a,
                                              const ColorSequence& pair, RngSeed seed) {
  Configuration cfg =
      Configuration::sample_critical({a.center, a.outer + 1}, seed);
  auto w = extract_canonical_arms(cfg, a, pair);
  if (!w) return std::nullopt;
  try {
    Region u = complement_region(cfg, a, w->arms);
    RegionSample out{std::move(cfg), std::move(*w), std::move(u)};
    return out;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::vector<Edge> random_connected_edges(Box box, int count, RngSeed seed) {
  CounterRng rng(seed);
  std::vector<Edge> chosen;
  std::set<std::pair<std::pair<int, int>, int>> in;
  auto key = [](const Edge& e) {
    return std::pair<std::pair<int, int>, int>{{e.base.x, e.base.y}, (int)e.o};
  };
  Edge start = primal_h(box.center.x, box.center.y);
  chosen.push_back(start);
  in.insert(key(start));
  while ((int)chosen.size() < count) {
    std::vector<Edge> frontier;
    std::set<std::pair<std::pair<int, int>, int>> seen;
    for (const Edge& e : chosen)
      for (Vertex v : {edge_from(e), edge_to(e)})
        for (const Edge& cand :
             {primal_h(v.x, v.y), primal_h(v.x - 1, v.y), primal_v(v.x, v.y),
              primal_v(v.x, v.y - 1)}) {
          if (!in_box(box, cand) || in.count(key(cand)) || !seen.insert(key(cand)).second)
            continue;
          frontier.push_back(cand);
        }
    if (frontier.empty()) break;
    Edge pick = frontier[rng.below(frontier.size())];
    chosen.push_back(pick);
    in.insert(key(pick));
  }
  return chosen;
}

Region half_annulus_region(const Annulus& a) {
  LatticePath east, west;
  east.lat = west.lat = Lattice::primal;
  for (int x = a.inner; x <= a.outer; ++x)
    east.verts.push_back({a.center.x + x, a.center.y});
  for (int x = a.inner; x <= a.outer; ++x)
    west.verts.push_back({a.center.x - x, a.center.y});
  return region_of(build_boundary(east, west, a), a);
}

SuiteResult verify_shift_suite(std::uint64_t seed, double budget_seconds,
                               bool inject_pairing_fault) {
  SuiteResult res;
  res.name = "shift";
  const double deadline = now_s() + budget_seconds;
  auto forward = inject_pairing_fault ? apply_T_reversed_pairing : apply_T;

  // Random arm-pair regions at B(2,8): partition, counting, round trips.
  Annulus a{{0, 0}, 2, 8};
  std::uint64_t stream = 0;
  int regions_done = 0;
  while (regions_done < 200 && now_s() < deadline) {
    auto rs = sample_arm_region(a, {Color::O, Color::Cs}, RngSeed{seed, stream++});
    if (!rs) continue;
    ++regions_done;
    OrderedRegion s(rs->region, rs->cfg.box());
    EdgeClassification cls = classify(s);
    ++res.checks;
    if (cls.e0.size() + cls.e1.size() + cls.e2.size() != s.edges.size() ||
        cls.e0.size() != cls.e2.size() ||
        s.edges.size() != cls.e1.size() + 2 * cls.e2.size()) {
      ++res.violations;
      res.notes.push_back("classification identity failed: " + dump_edges(s.edges));
      continue;
    }
    EdgeClassification inv = classify_inverse(s);
    ++res.checks;
    if (inv.e0 != cls.e2 || inv.e2 != cls.e0) {
      ++res.violations;
      res.notes.push_back("inverse classification mismatch: " + dump_edges(s.edges));
    }
    for (int rep = 0; rep < 4; ++rep) {
      Configuration cfg =
          Configuration::sample_critical(rs->cfg.box(), RngSeed{seed ^ 0x9e37, stream++});
      ++res.checks;
      if (!(apply_T_inverse(forward(cfg, s), s) == cfg)) {
        ++res.violations;
        res.notes.push_back("round trip failed on region: " + dump_edges(s.edges));
        break;
      }
    }
  }
  if (regions_done < 200) res.budget_exceeded = true;

  // Exhaustive permutation check on small random connected regions.
  for (int t = 0; t < 20 && now_s() < deadline; ++t) {
    std::vector<Edge> edges =
        random_connected_edges({{0, 0}, 3}, 6 + (int)(t % 7), RngSeed{seed + 1, (std::uint64_t)t});
    OrderedRegion s(edges, {{0, 0}, 4});
    Configuration base({{0, 0}, 4}, false);
    std::set<std::uint64_t> images;
    const std::size_t m = s.edges.size();
    bool ok = true;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      Configuration cfg = base;
      for (std::size_t i = 0; i < m; ++i) cfg.set_open(s.edges[i], (mask >> i) & 1);
      Configuration img = forward(cfg, s);
      std::uint64_t imask = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (img.open(s.edges[i])) imask |= 1ull << i;
      if (!images.insert(imask).second) ok = false;
      // T must not touch edges outside S.
      for (const Edge& e : base.canonical_edges())
        if (!s.contains(e) && img.open(e) != cfg.open(e)) ok = false;
    }
    ++res.checks;
    if (!ok || images.size() != (1ull << m)) {
      ++res.violations;
      res.notes.push_back("bijection failed on region: " + dump_edges(s.edges));
    }
  }

  // All-open fixed point.
  {
    std::vector<Edge> edges = random_connected_edges({{0, 0}, 3}, 9, RngSeed{seed + 2, 0});
    OrderedRegion s(edges, {{0, 0}, 4});
    Configuration open_cfg({{0, 0}, 4}, true);
    ++res.checks;
    if (!(forward(open_cfg, s) == open_cfg)) {
      ++res.violations;
      res.notes.push_back("all-open not fixed: " + dump_edges(s.edges));
    }
  }
  res.notes.push_back("regions checked: " + std::to_string(regions_done));
  return res;
}

SuiteResult verify_regions_suite(std::uint64_t seed, double budget_seconds) {
  SuiteResult res;
  res.name = "regions";
  const double deadline = now_s() + budget_seconds;
  Annulus a{{0, 0}, 2, 8};
  std::uint64_t stream = 0;
  int done = 0;
  while (done < 100 && now_s() < deadline) {
    auto rs = sample_arm_region(a, {Color::O, Color::Cs}, RngSeed{seed, stream++});
    if (!rs) continue;
    ++done;
    const auto& curve = rs->region.boundary.pts;
    // Even-odd versus winding number on every annulus edge midpoint.
    bool agree = true;
    for (const Edge& e : annulus_edges(a)) {
      P2 u = embed2(edge_from(e), Lattice::primal), w = embed2(edge_to(e), Lattice::primal);
      P2 mid{(u.x + w.x) / 2, (u.y + w.y) / 2};
      if (point_on_curve(curve, mid)) continue;
      if (point_in_curve(curve, mid) != (winding_number(curve, mid) != 0)) agree = false;
    }
    ++res.checks;
    if (!agree) {
      ++res.violations;
      res.notes.push_back("even-odd/winding disagreement, region " +
                          dump_edges(rs->region.edges));
    }
    // Complementary regions partition the annulus edges.
    BoundaryCurve rev;
    try {
      rev = build_boundary(rs->arms.arms[0], rs->arms.arms[1], a);
    } catch (const std::invalid_argument&) {
      continue;
    }
    // The two complementary regions are edge-disjoint, and every annulus edge
    // belonging to neither lies on the shared boundary (an arm edge, an edge
    // crossed by a dual arm, or an edge straddling an attach point).
    Region other = region_of(rev, a);
    bool part_ok = true;
    for (const Edge& e : annulus_edges(a)) {
      bool in_u = rs->region.contains(e), in_o = other.contains(e);
      if (in_u && in_o) part_ok = false;
      if (in_u || in_o) continue;
      P2 u = embed2(edge_from(e), Lattice::primal), w = embed2(edge_to(e), Lattice::primal);
      P2 mid{(u.x + w.x) / 2, (u.y + w.y) / 2};
      if (!point_on_curve(curve, mid) && !point_on_curve(rev.pts, mid)) part_ok = false;
    }
    ++res.checks;
    if (!part_ok) {
      ++res.violations;
      res.notes.push_back("interior partition failed, region " +
                          dump_edges(rs->region.edges));
    }
  }
  if (done < 100) res.budget_exceeded = true;
  res.notes.push_back("regions checked: " + std::to_string(done));
  return res;
}

SuiteResult verify_arms_suite(std::uint64_t seed, double budget_seconds) {
  SuiteResult res;
  res.name = "arms";
  const double deadline = now_s() + budget_seconds;

  // Exact crossing count: 7 edges of the 2 x 1 rectangle, 64 of 128 cross.
  {
    Box box{{0, 0}, 3};
    Rect rect{0, 0, 2, 1};
    std::vector<Edge> edges;
    for (int y = 0; y <= 1; ++y)
      for (int x = 0; x <= 2; ++x) {
        if (x < 2) edges.push_back(primal_h(x, y));
        if (y < 1) edges.push_back(primal_v(x, y));
      }
    int crossings = 0;
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
      Configuration cfg(box, false);
      for (std::size_t i = 0; i < edges.size(); ++i)
        cfg.set_open(edges[i], (mask >> i) & 1);
      if (crossing(cfg, rect, Direction::horizontal, Color::O)) ++crossings;
    }
    ++res.checks;
    if (edges.size() != 7 || crossings * 2 != (1 << edges.size())) {
      ++res.violations;
      res.notes.push_back("exact crossing enumeration: " + std::to_string(crossings) +
                          "/" + std::to_string(1 << edges.size()));
    } else {
      res.notes.push_back("crossing enumeration exact: 64/128");
    }
  }

  // Detector versus oracle on small boxes across polychromatic classes.
  std::uint64_t agree = 0, total = 0;
  auto run = [&](const Annulus& a, int cfgs, int max_k, std::uint64_t salt) {
    std::vector<ColorSequence> classes;
    for (int k = 2; k <= max_k; ++k)
      for (const ColorSequence& s : polychromatic_classes(k))
        if (a.inner >= n0(k)) classes.push_back(s);
    for (int t = 0; t < cfgs; ++t) {
      if (now_s() > deadline) {
        res.budget_exceeded = true;
        return;
      }
      Configuration cfg = Configuration::sample_critical({a.center, a.outer + 1},
                                                         RngSeed{seed + salt, (std::uint64_t)t});
      for (const ColorSequence& s : classes) {
        bool fast = detect_arms(cfg, a, s);
        bool slow = detect_arms_oracle(cfg, a, s).has_value();
        ++total;
        ++res.checks;
        if (fast == slow) {
          ++agree;
        } else {
          ++res.violations;
          std::ostringstream note;
          note << "detector/oracle disagreement sigma=" << format_sigma(s)
               << " annulus=(" << a.inner << "," << a.outer << ") trial=" << t
               << " fast=" << fast;
          res.notes.push_back(note.str());
        }
      }
    }
  };
  run({{0, 0}, 1, 4}, 400, 3, 11);
  if (!res.budget_exceeded) run({{0, 0}, 2, 6}, 60, 3, 13);
  res.notes.push_back("oracle agreement: " + std::to_string(agree) + "/" +
                      std::to_string(total));
  return res;
}

std::vector<SuiteResult> verify_all(std::uint64_t seed, double budget_seconds) {
  std::vector<SuiteResult> out;
  out.push_back(verify_shift_suite(seed, budget_seconds / 3));
  out.push_back(verify_regions_suite(seed, budget_seconds / 3));
  out.push_back(verify_arms_suite(seed, budget_seconds / 3));
  return out;
}

}  // namespace perc
