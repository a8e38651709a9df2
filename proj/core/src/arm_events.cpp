#include "perc/arm_events.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <deque>
#include <functional>
#include <map>
#include <memory>

namespace perc {

namespace {

constexpr std::array<Vertex, 4> kSteps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

struct Site {
  Vertex v;
  bool dual = false;
};

// Counterclockwise angular order around the annulus center, starting at the
// east axis; at equal angle a primal site precedes its +(1/2,1/2) partner.
struct CcwLess {
  P2 c;
  static bool upper_half(std::int64_t x, std::int64_t y) {
    return y > 0 || (y == 0 && x > 0);
  }
  bool operator()(const Site& a, const Site& b) const {
    P2 pa = embed2(a.v, a.dual ? Lattice::dual : Lattice::primal);
    P2 pb = embed2(b.v, b.dual ? Lattice::dual : Lattice::primal);
    std::int64_t ax = pa.x - c.x, ay = pa.y - c.y;
    std::int64_t bx = pb.x - c.x, by = pb.y - c.y;
    bool ha = upper_half(ax, ay), hb = upper_half(bx, by);
    if (ha != hb) return ha;
    std::int64_t cross = ax * by - ay * bx;
    if (cross != 0) return cross > 0;
    return !a.dual && b.dual;
  }
};

std::vector<Site> build_sites(const Annulus& a) {
  std::vector<Site> sites;
  for (Vertex v : ring_vertices(a.center, a.inner)) {
    sites.push_back({v, false});
    sites.push_back({v, true});
  }
  std::sort(sites.begin(), sites.end(), CcwLess{embed2(a.center, Lattice::primal)});
  return sites;
}

int color_class(Color c) { return (int)c; }

// Per-color union-find over the annulus with outer-boundary touch marks,
// optionally split by outer landing intervals.
class AnnulusAnalysis {
 public:
  AnnulusAnalysis(const Configuration& cfg, const Annulus& a, int class_mask,
                  const DetectOptions& opt, const LandingSequence* outer_landing)
      : a_(a), grid_(a.center, a.outer) {
    for (int cls = 0; cls < 4; ++cls)
      if (class_mask & (1 << cls)) {
        uf_[cls].emplace(grid_.vertex_count());
        pass_[cls].assign(grid_.vertex_count(), 0);
      }

    const bool need_primal = class_mask & 0b0011;
    const bool need_dual = class_mask & 0b1100;
    const int n = a.inner, N = a.outer;
    const Vertex c = a.center;

    // Flat scan over the annulus when the configuration box strictly contains
    // it and no mask applies: indices computed arithmetically, statuses read
    // straight off the bit table.
    const Box& cb = cfg.box();
    const int s = 2 * N + 1, cs = 2 * cb.radius + 1;
    const int ox = c.x - N - (cb.center.x - cb.radius);
    const int oy = c.y - N - (cb.center.y - cb.radius);
    if (!opt.mask && ox > 0 && oy > 0 && ox + s < cs && oy + s < cs) {
      DisjointSet* ufp[4];
      for (int cls = 0; cls < 4; ++cls) ufp[cls] = uf_[cls] ? &*uf_[cls] : nullptr;
      for (int gy = 0; gy < s; ++gy) {
        const int ry = std::abs(gy - N);
        const int rowc = (gy + oy) * cs;
        for (int gx = 0; gx < s; ++gx) {
          const int r1 = std::max(std::abs(gx - N), ry);
          const int iu = gy * s + gx;
          if (gx + 1 < s && (r1 > n || std::max(std::abs(gx + 1 - N), ry) > n)) {
            if (need_primal) {
              int cls = cfg.open_index((rowc + gx + ox) * 2) ? color_class(Color::O)
                                                             : color_class(Color::C);
              if (ufp[cls]) {
                ufp[cls]->unite(iu, iu + 1);
                pass_[cls][iu] |= 1 << 0;
                pass_[cls][iu + 1] |= 1 << 2;
              }
            }
            if (need_dual) {
              int cls = cfg.open_index((rowc + gx + ox + 1) * 2 + 1)
                            ? color_class(Color::Os)
                            : color_class(Color::Cs);
              if (ufp[cls]) {
                ufp[cls]->unite(iu, iu + 1);
                pass_[cls][iu] |= 1 << 0;
                pass_[cls][iu + 1] |= 1 << 2;
              }
            }
          }
          if (gy + 1 < s && (r1 > n || std::max(std::abs(gx - N), std::abs(gy + 1 - N)) > n)) {
            if (need_primal) {
              int cls = cfg.open_index((rowc + gx + ox) * 2 + 1) ? color_class(Color::O)
                                                                 : color_class(Color::C);
              if (ufp[cls]) {
                ufp[cls]->unite(iu, iu + s);
                pass_[cls][iu] |= 1 << 1;
                pass_[cls][iu + s] |= 1 << 3;
              }
            }
            if (need_dual) {
              int cls = cfg.open_index(((gy + oy + 1) * cs + gx + ox) * 2)
                            ? color_class(Color::Os)
                            : color_class(Color::Cs);
              if (ufp[cls]) {
                ufp[cls]->unite(iu, iu + s);
                pass_[cls][iu] |= 1 << 1;
                pass_[cls][iu + s] |= 1 << 3;
              }
            }
          }
        }
      }
      mark_touch(a, outer_landing);
      return;
    }

    for (int y = c.y - N; y <= c.y + N; ++y) {
      for (int x = c.x - N; x <= c.x + N; ++x) {
        int ry = std::abs(y - c.y);
        for (int o = 0; o < 2; ++o) {
          Edge e = o == 0 ? primal_h(x, y) : primal_v(x, y);
          Vertex u = edge_from(e), w = edge_to(e);
          int r1 = std::max(std::abs(u.x - c.x), ry);
          int r2 = std::max(std::abs(w.x - c.x), std::abs(w.y - c.y));
          if (r1 > N || r2 > N) continue;
          if (r1 <= n && r2 <= n) continue;  // inside B(n)
          if (opt.mask && !opt.mask->contains(e)) continue;
          int iu = grid_.vertex_index(u), iw = grid_.vertex_index(w);
          int fwd = o == 0 ? 0 : 1, rev = o == 0 ? 2 : 3;
          if (need_primal && cfg.contains(e)) {
            int cls = cfg.open(e) ? color_class(Color::O) : color_class(Color::C);
            if (uf_[cls]) {
              uf_[cls]->unite(iu, iw);
              pass_[cls][iu] |= 1 << fwd;
              pass_[cls][iw] |= 1 << rev;
            }
          }
          if (need_dual) {
            Edge xe = shift_target(e);
            if (cfg.contains(xe)) {
              int cls = cfg.open(xe) ? color_class(Color::Os) : color_class(Color::Cs);
              if (uf_[cls]) {
                uf_[cls]->unite(iu, iw);
                pass_[cls][iu] |= 1 << fwd;
                pass_[cls][iw] |= 1 << rev;
              }
            }
          }
        }
      }
    }

    mark_touch(a, outer_landing);
  }

  bool marked(Vertex v, Color c) const {
    int cls = color_class(c);
    if (!uf_[cls]) return false;
    return touch_[cls][const_cast<DisjointSet&>(*uf_[cls]).find(grid_.vertex_index(v))] &
           (1u << 31);
  }
  bool marked_interval(Vertex v, Color c, int j) const {
    int cls = color_class(c);
    if (!uf_[cls]) return false;
    return touch_[cls][const_cast<DisjointSet&>(*uf_[cls]).find(grid_.vertex_index(v))] &
           (1u << j);
  }
  // Canonical cluster id of v in the color-c subgraph of the annulus.
  std::int32_t root(Vertex v, Color c) const {
    return const_cast<DisjointSet&>(*uf_[color_class(c)]).find(grid_.vertex_index(v));
  }
  // Per-vertex outgoing color-c arcs (E,N,W,S bits).
  const std::vector<unsigned char>& pass(Color c) const { return pass_[color_class(c)]; }

 private:
  void mark_touch(const Annulus& a, const LandingSequence* outer_landing) {
    for (int cls = 0; cls < 4; ++cls)
      if (uf_[cls]) touch_[cls].assign(grid_.vertex_count(), 0);
    constexpr std::uint32_t kAnyBit = 1u << 31;
    for (Vertex v : ring_vertices(a.center, a.outer)) {
      int iv = grid_.vertex_index(v);
      for (int cls = 0; cls < 4; ++cls)
        if (uf_[cls]) touch_[cls][uf_[cls]->find(iv)] |= kAnyBit;
    }
    if (outer_landing) {
      for (std::size_t j = 0; j < outer_landing->size(); ++j)
        for (Vertex v : interval_vertices(a.center, (*outer_landing)[j])) {
          int iv = grid_.vertex_index(v);
          for (int cls = 0; cls < 4; ++cls)
            if (uf_[cls]) touch_[cls][uf_[cls]->find(iv)] |= (1u << j);
        }
    }
  }

  Annulus a_;
  EdgeIndexer grid_;
  std::array<std::optional<DisjointSet>, 4> uf_;
  std::array<std::vector<std::uint32_t>, 4> touch_;
  std::array<std::vector<unsigned char>, 4> pass_;
};

// Recently built analyses, so probing several sequences against one
// configuration and annulus does not redo the union-find pass.  Keyed by the
// configuration content hash; masked detections bypass the cache.
std::shared_ptr<const AnnulusAnalysis> analysis_for(const Configuration& cfg,
                                                    const Annulus& a, int class_mask,
                                                    const DetectOptions& opt) {
  if (opt.mask)
    return std::make_shared<const AnnulusAnalysis>(cfg, a, class_mask, opt, nullptr);
  struct Entry {
    std::uint64_t h = 0;
    Annulus a{{0, 0}, 0, 0};
    int class_mask = 0;
    std::uint64_t tick = 0;
    std::shared_ptr<const AnnulusAnalysis> an;
  };
  thread_local std::array<Entry, 8> cache;
  thread_local std::uint64_t tick = 0;
  const std::uint64_t h = cfg.fingerprint();
  ++tick;
  Entry* victim = &cache[0];
  for (Entry& e : cache) {
    if (e.an && e.h == h && e.a.center == a.center && e.a.inner == a.inner &&
        e.a.outer == a.outer && e.class_mask == class_mask) {
      e.tick = tick;
      return e.an;
    }
    if (e.tick < victim->tick) victim = &e;
  }
  *victim = {h, a, class_mask, tick,
             std::make_shared<const AnnulusAnalysis>(cfg, a, class_mask, opt, nullptr)};
  return victim->an;
}

int classes_of(const ColorSequence& sigma) {
  int m = 0;
  for (Color c : sigma) m |= 1 << color_class(c);
  return m;
}

void check_radii(const Annulus& a, const ColorSequence& sigma) {
  if (sigma.empty()) throw std::invalid_argument("arm event: empty color sequence");
  if (a.inner < n0((int)sigma.size()) || a.inner >= a.outer)
    throw std::invalid_argument("arm event: radii violate n0(k) <= n < N");
}

// sigma as a cyclic subsequence at distinct word positions, with a
// per-(index, position) feasibility matrix.
bool match_cyclic(const std::vector<std::vector<char>>& ok) {
  const std::size_t k = ok.size();
  if (k == 0) return false;
  const std::size_t m = ok[0].size();
  if (m < k) return false;
  for (std::size_t p = 0; p < m; ++p) {
    if (!ok[0][p]) continue;
    std::size_t q = p, i = 1;
    for (; i < k; ++i) {
      ++q;
      while (q < p + m && !ok[i][q % m]) ++q;
      if (q >= p + m) break;
    }
    if (i == k) return true;
  }
  return false;
}

bool site_in_interval(const Site& s, Vertex center, const BoundaryInterval& iv) {
  for (Vertex v : interval_vertices(center, iv))
    if (v == s.v) return true;
  return false;
}

std::vector<std::vector<char>> feasibility(const std::vector<Site>& sites,
                                           const AnnulusAnalysis& an, const Annulus& a,
                                           const ColorSequence& sigma,
                                           const LandingSequence* inner,
                                           bool use_outer_intervals) {
  std::vector<std::vector<char>> ok(sigma.size(), std::vector<char>(sites.size(), 0));
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    Color c = sigma[i];
    for (std::size_t p = 0; p < sites.size(); ++p) {
      const Site& s = sites[p];
      if (s.dual != is_dual(c)) continue;
      if (inner && !site_in_interval(s, a.center, (*inner)[i])) continue;
      bool m = use_outer_intervals ? an.marked_interval(s.v, c, (int)i) : an.marked(s.v, c);
      if (m) ok[i][p] = 1;
    }
  }
  return ok;
}

// Shortest color-c arm from `from` to the outer ring (optionally an outer
// interval), through the annulus (and mask), avoiding `used` vertices.
std::optional<LatticePath> bfs_arm(const Configuration& cfg, const Annulus& a, Color c,
                                   Vertex from, const DetectOptions& opt,
                                   const std::vector<char>* used,  // per grid vertex
                                   const EdgeIndexer& grid,
                                   const std::vector<Vertex>* targets) {
  std::vector<char> target_mask;
  if (targets) {
    target_mask.assign(grid.vertex_count(), 0);
    for (Vertex v : *targets) {
      int iv = grid.vertex_index(v);
      if (iv >= 0) target_mask[iv] = 1;
    }
  }
  auto is_target = [&](Vertex v) {
    if (targets) return target_mask[grid.vertex_index(v)] != 0;
    return linf(v, a.center) == a.outer;
  };
  auto edge_ok = [&](Vertex u, Vertex w) -> bool {
    Vertex lo = std::min(u, w);
    Edge e{lo, u.y == w.y ? Orientation::horizontal : Orientation::vertical,
           Lattice::primal};
    if (!in_annulus(a, e)) return false;
    if (opt.mask && !opt.mask->contains(e)) return false;
    Edge probe = is_dual(c) ? shift_target(e) : e;
    if (!cfg.contains(probe)) return false;
    return cfg.open(probe) == is_open_class(c);
  };

  std::vector<std::int32_t> parent(grid.vertex_count(), -2);
  int start = grid.vertex_index(from);
  if (start < 0 || (used && (*used)[start])) return std::nullopt;
  parent[start] = -1;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int iv = queue.front();
    queue.pop_front();
    Vertex v = grid.vertex(iv);
    if (is_target(v)) {
      LatticePath path;
      path.lat = is_dual(c) ? Lattice::dual : Lattice::primal;
      int cur = iv;
      while (cur != -1) {
        path.verts.push_back(grid.vertex(cur));
        cur = parent[cur];
      }
      std::reverse(path.verts.begin(), path.verts.end());
      return path;
    }
    for (Vertex d : kSteps) {
      Vertex w = v + d;
      int iw = grid.vertex_index(w);
      if (iw < 0 || parent[iw] != -2) continue;
      if (used && (*used)[iw]) continue;
      if (!edge_ok(v, w)) continue;
      parent[iw] = iv;
      queue.push_back(iw);
    }
  }
  return std::nullopt;
}

// Greedy counterclockwise sweep: anchor arm 0 at each feasible site in turn,
// then commit the BFS-shortest path for every arm at the first site that
// admits one.  Sound (any success is a valid disjoint system) but incomplete.
std::optional<ArmWitness> greedy_witness(
    const Configuration& cfg, const Annulus& a, const ColorSequence& sigma,
    const std::vector<Site>& sites, const std::vector<std::vector<char>>& ok,
    const EdgeIndexer& grid,
    const std::vector<std::optional<std::vector<Vertex>>>& outer_targets,
    const DetectOptions& opt) {
  const std::size_t k = sigma.size(), m = sites.size();
  for (std::size_t p = 0; p < m; ++p) {
    if (!ok[0][p]) continue;
    ArmWitness w;
    w.colors = sigma;
    std::vector<char> used_primal(grid.vertex_count(), 0);
    std::vector<char> used_dual(grid.vertex_count(), 0);
    std::size_t q = p;
    bool complete = true;
    for (std::size_t i = 0; i < k; ++i) {
      bool found = false;
      std::size_t pos = (i == 0) ? p : q + 1;
      for (; pos < p + m; ++pos) {
        if (!ok[i][pos % m]) continue;
        const Site& s = sites[pos % m];
        auto& used = s.dual ? used_dual : used_primal;
        auto path = bfs_arm(cfg, a, sigma[i], s.v, opt, &used, grid,
                            outer_targets[i] ? &*outer_targets[i] : nullptr);
        if (!path) {
          if (i == 0) break;  // first arm anchored at p
          continue;
        }
        for (Vertex v : path->verts) used[grid.vertex_index(v)] = 1;
        w.arms.push_back(std::move(*path));
        q = pos;
        found = true;
        break;
      }
      if (!found) {
        complete = false;
        break;
      }
    }
    if (complete) return w;
  }
  return std::nullopt;
}

// Defined with the exhaustive search machinery at the end of this file.
std::optional<ArmWitness> oracle_search(const Configuration& cfg, const Annulus& a,
                                        const ColorSequence& sigma,
                                        const std::vector<std::vector<char>>& ok,
                                        const DetectOptions& opt,
                                        const LandingSequence* outer, std::uint64_t cap);

// Step budget for the confirmation pass of the fast detectors.
constexpr std::uint64_t kConfirmCap = 200'000'000ULL;

// How a cyclic-word feasibility positive is turned into a definite answer.
//
// exact_skip: at most one arm per lattice, so the disjointness constraints
//   are vacuous (arms on different lattices never share vertices) and the
//   cyclic-word criterion is already exact.
//
// exact_pair: every color of sigma comes from one dual-exclusive pair,
//   {O, C*} or {C, O*}.  The two colors live on different lattices, so the
//   disjointness constraints act within each color separately and the event
//   is decided exactly by per-color flow linkage (decide_search, which sees
//   no mixed lattice in this mode).
//
// search: some lattice carries both of its colors (sigma mixes O with C or
//   O* with C*), so same-lattice arms of different colors compete for
//   vertices.  Decided exactly by the same placement search, with cross-color
//   conflicts between the per-color flows resolved by joint_route.
enum class ConfirmMode { exact_skip, exact_pair, search };

ConfirmMode confirm_mode(const ColorSequence& sigma) {
  int per_lat[2] = {0, 0};
  bool has[4] = {false, false, false, false};
  for (Color c : sigma) {
    per_lat[is_dual(c)]++;
    has[color_class(c)] = true;
  }
  if (per_lat[0] <= 1 && per_lat[1] <= 1) return ConfirmMode::exact_skip;
  bool pair_o_cs = !has[color_class(Color::C)] && !has[color_class(Color::Os)];
  bool pair_c_os = !has[color_class(Color::O)] && !has[color_class(Color::Cs)];
  return (pair_o_cs || pair_c_os) ? ConfirmMode::exact_pair : ConfirmMode::search;
}

// Incremental vertex-disjoint linkage from chosen inner sites to the outer
// ring in the color-c subgraph of the annulus: unit-capacity max-flow with
// split vertices.  Whether one more arm can be routed from a given site,
// keeping all committed arms, is exactly an augmenting-path question, so the
// answer does not depend on the order sites were committed.
class Linkage {
 public:
  // `pass` is the per-vertex outgoing color-c arc bitmap already computed by
  // the annulus analysis; it must outlive this object.  `banned` vertices (if
  // given) are excluded from any new routing.
  Linkage(const Annulus& a, const std::vector<unsigned char>& pass,
          const std::vector<char>* banned = nullptr)
      : a_(a), grid_(a.center, a.outer), pass_(pass), banned_(banned),
        through_(grid_.vertex_count(), 0), outflow_(grid_.vertex_count(), 0),
        par_(2 * grid_.vertex_count()) {}

  bool through(int iv) const { return through_[iv] != 0; }

  // Observer for through-flag flips, used to keep cross-color conflict
  // counters current without rescanning.
  std::function<void(int, bool)>* on_through = nullptr;

  // Routes one more arm from v alongside the committed ones; commits and
  // returns true iff possible.
  bool add(Vertex v) {
    const int iv = grid_.vertex_index(v);
    if (iv < 0 || (banned_ && (*banned_)[iv])) return false;
    std::fill(par_.begin(), par_.end(), -2);
    std::deque<int> queue;
    par_[2 * iv] = -1;
    queue.push_back(2 * iv);
    int sink = -1;
    while (!queue.empty() && sink < 0) {
      int node = queue.front();
      queue.pop_front();
      int iu = node >> 1;
      Vertex u = grid_.vertex(iu);
      if (node & 1) {
        if (linf(u, a_.center) == a_.outer) {
          sink = node;
          break;
        }
        for (int j = 0; j < 4; ++j) {  // forward out->in over an unused arc
          if ((outflow_[iu] & (1 << j)) || !(pass_[iu] & (1 << j))) continue;
          Vertex w = u + kSteps[j];
          int iw = grid_.vertex_index(w);
          if (iw < 0 || par_[2 * iw] != -2) continue;
          if (banned_ && (*banned_)[iw]) continue;
          par_[2 * iw] = node;
          queue.push_back(2 * iw);
        }
        if (through_[iu] && par_[2 * iu] == -2) {  // residual of in->out
          par_[2 * iu] = node;
          queue.push_back(2 * iu);
        }
      } else {
        if (!through_[iu] && par_[2 * iu + 1] == -2) {  // forward in->out
          par_[2 * iu + 1] = node;
          queue.push_back(2 * iu + 1);
        }
        for (int j = 0; j < 4; ++j) {  // residual of a neighbor's flow into u
          Vertex w = u + kSteps[j];
          int iw = grid_.vertex_index(w);
          if (iw < 0 || par_[2 * iw + 1] != -2) continue;
          if (!(outflow_[iw] & (1 << ((j + 2) % 4)))) continue;
          par_[2 * iw + 1] = node;
          queue.push_back(2 * iw + 1);
        }
      }
    }
    if (sink < 0) return false;
    for (int node = sink; par_[node] != -1; node = par_[node]) {
      int p = par_[node];
      int ip = p >> 1, in = node >> 1;
      if (ip == in) {
        bool now = (p & 1) == 0;  // in->out pushes, out->in cancels
        if (on_through && (bool)through_[ip] != now) (*on_through)(ip, now);
        through_[ip] = now;
      } else if (p & 1) {
        outflow_[ip] |= 1 << dir_index(ip, in);
      } else {
        outflow_[in] &= ~(1 << dir_index(in, ip));
      }
    }
    return true;
  }

  // Cancels the committed unit leaving v (v must be a committed source): the
  // flow decomposes into vertex-disjoint unit paths, so the walk along
  // outflow bits from v is unambiguous.
  void remove(Vertex v) {
    int iv = grid_.vertex_index(v);
    while (true) {
      if (on_through && through_[iv]) (*on_through)(iv, false);
      through_[iv] = 0;
      int j = 0;
      while (j < 4 && !(outflow_[iv] & (1 << j))) ++j;
      if (j == 4) break;  // reached the outer ring
      outflow_[iv] &= ~(1 << j);
      iv = grid_.vertex_index(grid_.vertex(iv) + kSteps[j]);
    }
  }

 private:
  int dir_index(int from, int to) const {
    Vertex d = grid_.vertex(to) - grid_.vertex(from);
    for (int j = 0; j < 4; ++j)
      if (kSteps[j] == d) return j;
    throw std::logic_error("Linkage: not adjacent");
  }

  const Annulus& a_;
  EdgeIndexer grid_;
  const std::vector<unsigned char>& pass_;  // per vertex: outgoing color-c arcs
  const std::vector<char>* banned_;
  std::vector<char> through_;
  std::vector<unsigned char> outflow_;
  std::vector<std::int32_t> par_;
};

// Exact joint routing of two colors on one lattice: sources `s1` routed over
// `pass1` arcs, `s2` over `pass2`, all paths vertex-disjoint.  Per-color flow
// gives a maximum disjoint system; if the two systems share a vertex v, any
// solution avoids v in at least one color, so branching on "v banned for
// color 1" / "v banned for color 2" is a complete case split.
bool joint_route(const Annulus& a, const std::vector<unsigned char>& pass1,
                 const std::vector<unsigned char>& pass2,
                 const std::vector<Vertex>& s1, const std::vector<Vertex>& s2,
                 int& budget) {
  EdgeIndexer grid(a.center, a.outer);
  std::vector<char> b1(grid.vertex_count(), 0), b2(grid.vertex_count(), 0);
  std::function<bool()> solve = [&]() -> bool {
    if (--budget < 0) throw std::runtime_error("arm search: instance too large");
    Linkage l1(a, pass1, &b1), l2(a, pass2, &b2);
    for (Vertex v : s1)
      if (!l1.add(v)) return false;
    for (Vertex v : s2)
      if (!l2.add(v)) return false;
    int conflict = -1;
    const int nv = (int)grid.vertex_count();
    for (int iv = 0; iv < nv && conflict < 0; ++iv)
      if (l1.through(iv) && l2.through(iv)) conflict = iv;
    if (conflict < 0) return true;
    b1[conflict] = 1;
    bool r = solve();
    b1[conflict] = 0;
    if (r) return true;
    b2[conflict] = 1;
    r = solve();
    b2[conflict] = 0;
    return r;
  };
  return solve();
}

// Branching budget for cross-color conflict resolution; conflicts are local
// and resolve in a handful of branches, so this is a safety net, not a tuning
// knob.  Exhausting it raises rather than guessing.
constexpr int kJointBudget = 200'000;

// Exact decision for the confirmation pass (exact_pair and search modes).
// Arms on different lattices never constrain each other, so the event holds
// iff sigma can be placed at distinct sites in counterclockwise cyclic order
// such that, on each lattice, the chosen sites admit simultaneous
// vertex-disjoint arms.  Single-color site-set linkability is a matroid
// (gammoid) rank condition, checked exactly by flow augmentation per site;
// when a lattice carries both of its colors, the per-color flows are combined
// with exact conflict branching (joint_route) whenever their routings touch.
bool decide_search(const Configuration& cfg, const Annulus& a,
                   const ColorSequence& sigma, const std::vector<Site>& sites,
                   const std::vector<std::vector<char>>& ok,
                   const AnnulusAnalysis& an, const DetectOptions& opt) {
  const std::size_t k = sigma.size(), m = sites.size();
  std::array<std::optional<Color>, 4> cls_color;  // by color class
  std::array<int, 4> count{};                     // letters per color class
  std::array<std::size_t, 4> row{};               // a feasibility row per class
  std::array<int, 2> lat_count{0, 0};             // letters per lattice
  for (std::size_t i = 0; i < k; ++i) {
    int cls = color_class(sigma[i]);
    cls_color[cls] = sigma[i];
    ++count[cls];
    row[cls] = i;
    ++lat_count[is_dual(sigma[i])];
  }
  // Lattices carrying both of their colors need cross-color conflict checks.
  const std::array<std::array<int, 2>, 2> lat_cls{
      {{color_class(Color::O), color_class(Color::C)},
       {color_class(Color::Os), color_class(Color::Cs)}}};
  std::array<bool, 2> mixed{};
  for (int d = 0; d < 2; ++d)
    mixed[d] = count[lat_cls[d][0]] > 0 && count[lat_cls[d][1]] > 0;

  // Necessary: each color's marked sites jointly support `count` disjoint
  // arms.  Distinct marked clusters are vertex-disjoint, so counting them
  // usually settles this without touching the flow.
  std::array<std::optional<Linkage>, 4> link;
  for (int cls = 0; cls < 4; ++cls) {
    if (!count[cls]) continue;
    std::vector<std::int32_t> roots;
    for (std::size_t p = 0; p < m && (int)roots.size() < count[cls]; ++p) {
      if (!ok[row[cls]][p]) continue;
      std::int32_t r = an.root(sites[p].v, *cls_color[cls]);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    if ((int)roots.size() >= count[cls]) continue;
    link[cls].emplace(a, an.pass(*cls_color[cls]));
    int rank = 0;
    for (std::size_t p = 0; p < m && rank < count[cls]; ++p)
      if (ok[row[cls]][p] && link[cls]->add(sites[p].v)) ++rank;
    if (rank < count[cls]) return false;
  }

  // With single-color lattices and at most one letter on some lattice, every
  // placement at distinct sites reads sigma up to rotation, so the per-color
  // flow condition is also sufficient.
  if (!mixed[0] && !mixed[1] && (lat_count[0] <= 1 || lat_count[1] <= 1)) return true;

  // Sound shortcut before the exact placement search.
  {
    EdgeIndexer grid(a.center, a.outer);
    std::vector<std::optional<std::vector<Vertex>>> no_targets(k);
    if (greedy_witness(cfg, a, sigma, sites, ok, grid, no_targets, opt)) return true;
  }

  // Exact search over cyclically ordered placements, committing sites into
  // the per-color flows; an augmentation failure prunes exactly the
  // placements whose chosen set is not jointly linkable within its color.
  for (int cls = 0; cls < 4; ++cls)
    if (count[cls]) link[cls].emplace(a, an.pass(*cls_color[cls]));

  // Cross-color conflict counters per mixed lattice, maintained through the
  // flows' through-flag observers, so the common conflict-free leaf is O(1).
  std::array<int, 2> conflicts{0, 0};
  std::array<std::function<void(int, bool)>, 4> observers;
  for (int d = 0; d < 2; ++d) {
    if (!mixed[d]) continue;
    int ca = lat_cls[d][0], cb = lat_cls[d][1];
    observers[ca] = [&link, &conflicts, d, cb](int iv, bool now) {
      if (link[cb]->through(iv)) conflicts[d] += now ? 1 : -1;
    };
    observers[cb] = [&link, &conflicts, d, ca](int iv, bool now) {
      if (link[ca]->through(iv)) conflicts[d] += now ? 1 : -1;
    };
    link[ca]->on_through = &observers[ca];
    link[cb]->on_through = &observers[cb];
  }

  // suffix[i][p]: feasible positions for letter i at position >= p (within
  // the doubled index range), for the window prune.
  std::vector<std::vector<int>> suffix(k, std::vector<int>(2 * m + 1, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t p = 2 * m; p-- > 0;)
      suffix[i][p] = suffix[i][p + 1] + (ok[i][p % m] != 0);

  std::vector<std::size_t> chosen(k);
  std::array<std::map<std::vector<int>, char>, 2> joint_memo;
  int joint_budget = kJointBudget;

  // A placement whose flows touch across colors is not settled by the flow
  // ranks; re-route it exactly (memoized on the per-lattice site sets).
  auto leaf_ok = [&]() -> bool {
    for (int d = 0; d < 2; ++d) {
      if (!mixed[d] || conflicts[d] == 0) continue;
      int ca = lat_cls[d][0], cb = lat_cls[d][1];
      std::vector<Vertex> sa, sb;
      std::vector<int> key;
      for (std::size_t i = 0; i < k; ++i) {
        int cls = color_class(sigma[i]);
        if (cls == ca) sa.push_back(sites[chosen[i]].v);
        if (cls == cb) sb.push_back(sites[chosen[i]].v);
      }
      for (std::size_t i = 0; i < k; ++i)
        if (color_class(sigma[i]) == ca) key.push_back((int)chosen[i]);
      key.push_back(-1);
      for (std::size_t i = 0; i < k; ++i)
        if (color_class(sigma[i]) == cb) key.push_back((int)chosen[i]);
      std::sort(key.begin(), key.begin() + (key.size() - sb.size() - 1));
      std::sort(key.end() - (long)sb.size(), key.end());
      auto it = joint_memo[d].find(key);
      char v;
      if (it != joint_memo[d].end()) {
        v = it->second;
      } else {
        v = joint_route(a, an.pass(*cls_color[ca]), an.pass(*cls_color[cb]), sa, sb,
                        joint_budget)
                ? 1
                : 0;
        joint_memo[d].emplace(std::move(key), v);
      }
      if (!v) return false;
    }
    return true;
  };

  std::function<bool(std::size_t, std::size_t, std::size_t)> place =
      [&](std::size_t i, std::size_t start, std::size_t prev) -> bool {
    if (i == k) return leaf_ok();
    std::size_t lo = (i == 0) ? start : prev + 1;
    std::size_t hi = (i == 0) ? start + 1 : start + m;
    for (std::size_t pos = lo; pos < hi; ++pos) {
      if (!ok[i][pos % m]) continue;
      // Every remaining letter must still have a feasible later position.
      bool fits = true;
      for (std::size_t j = i + 1; j < k && fits; ++j)
        fits = suffix[j][pos + 1] - suffix[j][start + m] >= 1;
      if (!fits) continue;
      const Site& s = sites[pos % m];
      int cls = color_class(sigma[i]);
      if (!link[cls]->add(s.v)) continue;
      chosen[i] = pos % m;
      if (place(i + 1, start, pos)) return true;
      link[cls]->remove(s.v);
    }
    return false;
  };
  for (std::size_t start = 0; start < m; ++start)
    if (place(0, start, 0)) return true;
  return false;
}

}  // namespace

std::vector<Vertex> interval_vertices(Vertex center, const BoundaryInterval& iv) {
  std::vector<Vertex> ring = ring_vertices(center, iv.radius);
  const int m = (int)ring.size();
  int len = std::min(iv.len, m);
  std::vector<Vertex> out;
  out.reserve(len + 1);
  for (int t = 0; t <= len; ++t) out.push_back(ring[((iv.start + t) % m + m) % m]);
  if (len == m) out.pop_back();  // full ring, avoid duplicate
  return out;
}

BoundaryInterval full_interval(int radius) { return {radius, 0, 8 * radius}; }

bool detect_arms(const Configuration& cfg, const Annulus& a, const ColorSequence& sigma,
                 const DetectOptions& opt) {
  check_radii(a, sigma);
  std::vector<Site> sites = build_sites(a);
  auto anp = analysis_for(cfg, a, classes_of(sigma), opt);
  const AnnulusAnalysis& an = *anp;
  auto ok = feasibility(sites, an, a, sigma, nullptr, false);
  // Cyclic-word feasibility is necessary; positives are then settled exactly
  // per the sequence's confirmation mode.
  if (!match_cyclic(ok)) return false;
  switch (confirm_mode(sigma)) {
    case ConfirmMode::exact_skip:
      return true;
    case ConfirmMode::exact_pair:
    case ConfirmMode::search:
      break;
  }
  return decide_search(cfg, a, sigma, sites, ok, an, opt);
}

bool detect_arms_landing(const Configuration& cfg, const Annulus& a,
                         const ColorSequence& sigma, const LandingSequence& inner,
                         const LandingSequence& outer, const DetectOptions& opt) {
  check_radii(a, sigma);
  if (inner.size() != sigma.size() || outer.size() != sigma.size())
    throw std::invalid_argument("detect_arms_landing: need one interval per arm");
  for (const auto& iv : inner)
    if (iv.radius != a.inner)
      throw std::invalid_argument("detect_arms_landing: inner interval off boundary");
  for (const auto& iv : outer)
    if (iv.radius != a.outer)
      throw std::invalid_argument("detect_arms_landing: outer interval off boundary");
  std::vector<Site> sites = build_sites(a);
  AnnulusAnalysis an(cfg, a, classes_of(sigma), opt, &outer);
  auto ok = feasibility(sites, an, a, sigma, &inner, true);
  if (!match_cyclic(ok)) return false;
  // The flow shortcut does not model landing intervals, so only the
  // vacuous-disjointness case skips the search.
  if (confirm_mode(sigma) == ConfirmMode::exact_skip) return true;
  return oracle_search(cfg, a, sigma, ok, opt, &outer, kConfirmCap).has_value();
}

std::optional<ArmWitness> extract_canonical_arms(const Configuration& cfg, const Annulus& a,
                                                 const ColorSequence& sigma,
                                                 const LandingSequence* inner,
                                                 const LandingSequence* outer,
                                                 const DetectOptions& opt) {
  check_radii(a, sigma);
  const std::size_t k = sigma.size();
  std::vector<Site> sites = build_sites(a);
  AnnulusAnalysis an(cfg, a, classes_of(sigma), opt, outer);
  auto ok = feasibility(sites, an, a, sigma, inner, outer != nullptr);
  EdgeIndexer grid(a.center, a.outer);

  std::vector<std::optional<std::vector<Vertex>>> outer_targets(k);
  if (outer)
    for (std::size_t i = 0; i < k; ++i)
      outer_targets[i] = interval_vertices(a.center, (*outer)[i]);

  return greedy_witness(cfg, a, sigma, sites, ok, grid, outer_targets, opt);
}

bool witness_separated(const ArmWitness& w, const Annulus& a, int ell) {
  const P2 c = embed2(a.center, Lattice::primal);
  const std::int64_t lo = 4 * (std::int64_t)a.inner;     // scaled radius of 2n
  const std::int64_t hi = 2 * (std::int64_t)(a.outer / 2);  // scaled radius of N/2
  std::vector<std::vector<P2>> pts(w.arms.size());
  for (std::size_t i = 0; i < w.arms.size(); ++i)
    for (Vertex v : w.arms[i].verts) {
      P2 p = embed2(v, w.arms[i].lat);
      std::int64_t r = linf2(p, c);
      if (r >= lo && r <= hi) pts[i].push_back(p);
    }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (const P2& p : pts[i])
        for (const P2& q : pts[j])
          if (linf2(p, q) < 2 * (std::int64_t)ell) return false;
  return true;
}

bool detect_separated(const Configuration& cfg, const Annulus& a, const ColorSequence& sigma,
                      int ell, const DetectOptions& opt) {
  if (ell < 5) throw std::invalid_argument("detect_separated: ell >= 5 required");
  if (sigma.size() == 1) return detect_arms(cfg, a, sigma, opt);
  auto w = extract_canonical_arms(cfg, a, sigma, nullptr, nullptr, opt);
  if (!w) return false;
  return witness_separated(*w, a, ell);
}

std::optional<BottleneckWitness> detect_bottleneck(const Configuration& cfg, const Annulus& a,
                                                   const ColorSequence& sigma, int ell) {
  if (detect_separated(cfg, a, sigma, ell)) return std::nullopt;
  auto w = extract_canonical_arms(cfg, a, sigma);
  if (!w) return std::nullopt;

  const P2 c = embed2(a.center, Lattice::primal);
  const std::int64_t lo = 4 * (std::int64_t)a.inner, hi = 2 * (std::int64_t)(a.outer / 2);
  auto sub_pts = [&](const LatticePath& arm) {
    std::vector<P2> out;
    for (Vertex v : arm.verts) {
      P2 p = embed2(v, arm.lat);
      std::int64_t r = linf2(p, c);
      if (r >= lo && r <= hi) out.push_back(p);
    }
    return out;
  };
  auto min_dist = [](const std::vector<P2>& xs, const std::vector<P2>& ys) {
    std::int64_t best = INT64_MAX;
    for (const P2& p : xs)
      for (const P2& q : ys) best = std::min(best, linf2(p, q));
    return best;
  };

  // The closest pair of canonical arms inside B(2n, N/2).
  int bi = -1, bj = -1;
  std::int64_t best = INT64_MAX;
  std::vector<std::vector<P2>> pts(w->arms.size());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = sub_pts(w->arms[i]);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].empty() || pts[j].empty()) continue;
      std::int64_t d = min_dist(pts[i], pts[j]);
      if (d < best) best = d, bi = (int)i, bj = (int)j;
    }
  if (bi < 0 || best >= 2 * (std::int64_t)ell) return std::nullopt;

  // Edge in B(2n, N/2) within ell of both arms minimizing the distance sum.
  std::optional<Edge> pick;
  std::int64_t pick_score = INT64_MAX;
  Annulus sub{a.center, 2 * a.inner, a.outer / 2};
  for (const Edge& e : annulus_edges(sub)) {
    std::vector<P2> ep{embed2(edge_from(e), Lattice::primal),
                       embed2(edge_to(e), Lattice::primal)};
    std::int64_t di = min_dist(ep, pts[bi]), dj = min_dist(ep, pts[bj]);
    if (di > 2 * (std::int64_t)ell || dj > 2 * (std::int64_t)ell) continue;
    if (di + dj < pick_score) pick_score = di + dj, pick = e;
  }
  if (!pick) return std::nullopt;

  BottleneckWitness out;
  out.at = *pick;
  out.ell = ell;
  out.pair_colors = {w->colors[bi], w->colors[bj]};
  int r_edge = std::min(linf(edge_from(*pick), a.center), linf(edge_to(*pick), a.center));
  out.d = r_edge - a.inner;  // l-infinity distance to the inner ring
  out.half_dist = (int)(out.d / 2);
  if (out.half_dist <= ell) {
    out.vacuous = true;
    out.four_arms_verified = true;
    return out;
  }
  ColorSequence four{w->colors[bi], w->colors[bj], w->colors[bi], w->colors[bj]};
  Annulus around{pick->base, ell, out.half_dist};
  out.four_arms_verified = detect_arms(cfg, around, four);
  return out;
}

bool detect_six_arm(const Configuration& cfg, const Edge& e, int r1, int r2) {
  if (r1 >= r2) throw std::invalid_argument("detect_six_arm: r1 < r2 required");
  ColorSequence six{Color::O, Color::Cs, Color::O, Color::Cs, Color::O, Color::Cs};
  return detect_arms(cfg, Annulus{e.base, r1, r2}, six);
}

// ---------------------------------------------------------------------------
// Exhaustive disjoint-arm search.  Used both as the public reference oracle
// and as the confirmation pass of the fast detectors: the cyclic-word
// feasibility criterion is necessary but can overcount when same-lattice arms
// would be forced through a shared vertex, so every feasibility-positive is
// confirmed by this search.

namespace {

struct OracleCtx {
  const Configuration& cfg;
  const Annulus& a;
  const EdgeSet* mask;
  EdgeIndexer grid;
  std::vector<Site> sites;
  std::uint64_t steps = 0;
  std::uint64_t cap;

  // Per-arm outer landing targets (empty vector = the full outer ring).
  std::vector<std::vector<char>> targets;

  // Reachability of the outer ring per color, ignoring disjointness: an
  // independent BFS prune (does not use the union-find path).
  std::array<std::vector<char>, 4> reach;

  OracleCtx(const Configuration& cfg_, const Annulus& a_, const EdgeSet* mask_,
            std::uint64_t cap_)
      : cfg(cfg_), a(a_), mask(mask_), grid(a_.center, a_.outer), sites(build_sites(a_)),
        cap(cap_) {}

  bool edge_ok(Vertex u, Vertex w, Color c) const {
    Vertex lo = std::min(u, w);
    Edge e{lo, u.y == w.y ? Orientation::horizontal : Orientation::vertical,
           Lattice::primal};
    if (!in_annulus(a, e)) return false;
    if (mask && !mask->contains(e)) return false;
    Edge probe = is_dual(c) ? shift_target(e) : e;
    if (!cfg.contains(probe)) return false;
    return cfg.open(probe) == is_open_class(c);
  }

  bool at_target(std::size_t i, Vertex v) const {
    if (linf(v, a.center) != a.outer) return false;
    if (targets.empty() || targets[i].empty()) return true;
    int iv = grid.vertex_index(v);
    return iv >= 0 && targets[i][iv];
  }

  void build_reach(Color c) {
    auto& r = reach[color_class(c)];
    if (!r.empty()) return;
    r.assign(grid.vertex_count(), 0);
    std::deque<int> queue;
    for (Vertex v : ring_vertices(a.center, a.outer)) {
      int iv = grid.vertex_index(v);
      r[iv] = 1;
      queue.push_back(iv);
    }
    while (!queue.empty()) {
      int iv = queue.front();
      queue.pop_front();
      Vertex v = grid.vertex(iv);
      for (Vertex d : kSteps) {
        Vertex w = v + d;
        int iw = grid.vertex_index(w);
        if (iw < 0 || r[iw]) continue;
        if (!edge_ok(v, w, c)) continue;
        r[iw] = 1;
        queue.push_back(iw);
      }
    }
  }
};

// Enumerate every simple color-c path from `v` to arm i's outer target
// avoiding used vertices of the path's lattice; invoke `sink` for each
// (vertices in order).  Returns true if the continuation succeeded.
bool dfs_paths(OracleCtx& ctx, Color c, std::size_t i, Vertex v, std::vector<char>& used,
               std::vector<Vertex>& path, const std::function<bool()>& sink) {
  if (++ctx.steps > ctx.cap)
    throw std::runtime_error("arm search: instance too large");
  int iv = ctx.grid.vertex_index(v);
  used[iv] = 1;
  path.push_back(v);
  bool done = false;
  if (ctx.at_target(i, v)) {
    done = sink();
  } else if (linf(v, ctx.a.center) < ctx.a.outer) {
    for (Vertex d : kSteps) {
      Vertex w = v + d;
      int iw = ctx.grid.vertex_index(w);
      if (iw < 0 || used[iw]) continue;
      if (!ctx.edge_ok(v, w, c)) continue;
      if (!ctx.reach[color_class(c)][iw]) continue;
      if (dfs_paths(ctx, c, i, w, used, path, sink)) {
        done = true;
        break;
      }
    }
  }
  path.pop_back();
  used[iv] = 0;
  return done;
}

bool oracle_assign(OracleCtx& ctx, const ColorSequence& sigma,
                   const std::vector<std::vector<char>>& ok, std::size_t i,
                   std::size_t start, std::size_t prev, std::vector<char>& used_primal,
                   std::vector<char>& used_dual, std::vector<LatticePath>& arms) {
  const std::size_t k = sigma.size(), m = ctx.sites.size();
  if (i == k) return true;
  std::size_t lo = (i == 0) ? start : prev + 1;
  std::size_t hi = (i == 0) ? start + 1 : start + m;
  for (std::size_t pos = lo; pos < hi; ++pos) {
    if (!ok[i][pos % m]) continue;
    const Site& s = ctx.sites[pos % m];
    Color c = sigma[i];
    int iv = ctx.grid.vertex_index(s.v);
    auto& used = s.dual ? used_dual : used_primal;
    if (used[iv]) continue;
    ctx.build_reach(c);
    if (!ctx.reach[color_class(c)][iv]) continue;
    std::vector<Vertex> path;
    bool found = dfs_paths(ctx, c, i, s.v, used, path, [&]() -> bool {
      // `path` currently holds a complete arm.  Its vertices are already
      // marked in `used` by the enclosing dfs frames, and they stay marked
      // for the whole recursive assignment of the remaining arms; touching
      // the flags here would let the active dfs revisit its own path.
      arms.push_back(LatticePath{is_dual(c) ? Lattice::dual : Lattice::primal, path});
      bool done =
          oracle_assign(ctx, sigma, ok, i + 1, start, pos, used_primal, used_dual, arms);
      if (!done) arms.pop_back();
      return done;
    });
    if (found) return true;
  }
  return false;
}

// Search over start sites, cyclic positions, and path shapes; `ok` is the
// per-(arm, site) feasibility matrix (already reflecting landing intervals
// when present).
std::optional<ArmWitness> oracle_search(const Configuration& cfg, const Annulus& a,
                                        const ColorSequence& sigma,
                                        const std::vector<std::vector<char>>& ok,
                                        const DetectOptions& opt,
                                        const LandingSequence* outer, std::uint64_t cap) {
  OracleCtx ctx(cfg, a, opt.mask, cap);
  if (outer) {
    ctx.targets.resize(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      ctx.targets[i].assign(ctx.grid.vertex_count(), 0);
      for (Vertex v : interval_vertices(a.center, (*outer)[i])) {
        int iv = ctx.grid.vertex_index(v);
        if (iv >= 0) ctx.targets[i][iv] = 1;
      }
    }
  }
  {
    // Cheap sound pre-pass: the greedy sweep settles most positives without
    // touching the exhaustive enumeration.  Its result is re-validated, so a
    // defect there degrades speed, never correctness.
    std::vector<std::optional<std::vector<Vertex>>> outer_targets(sigma.size());
    if (outer)
      for (std::size_t i = 0; i < sigma.size(); ++i)
        outer_targets[i] = interval_vertices(a.center, (*outer)[i]);
    auto w = greedy_witness(cfg, a, sigma, ctx.sites, ok, ctx.grid, outer_targets, opt);
    if (w && validate_witness(cfg, a, sigma, *w, opt)) return w;
  }
  std::vector<char> used_primal(ctx.grid.vertex_count(), 0);
  std::vector<char> used_dual(ctx.grid.vertex_count(), 0);
  std::vector<LatticePath> arms;
  for (std::size_t start = 0; start < ctx.sites.size(); ++start) {
    bool found = oracle_assign(ctx, sigma, ok, 0, start, 0, used_primal, used_dual, arms);
    if (found) {
      ArmWitness w;
      w.colors = sigma;
      w.arms = std::move(arms);
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ArmWitness> detect_arms_oracle(const Configuration& cfg, const Annulus& a,
                                             const ColorSequence& sigma,
                                             std::uint64_t step_cap) {
  check_radii(a, sigma);
  std::vector<Site> sites = build_sites(a);
  AnnulusAnalysis an(cfg, a, classes_of(sigma), {}, nullptr);
  auto ok = feasibility(sites, an, a, sigma, nullptr, false);
  return oracle_search(cfg, a, sigma, ok, {}, nullptr, step_cap);
}

bool validate_witness(const Configuration& cfg, const Annulus& a, const ColorSequence& sigma,
                      const ArmWitness& w, const DetectOptions& opt) {
  if (w.arms.size() != sigma.size() || w.colors != sigma) return false;
  std::vector<Site> sites = build_sites(a);
  auto site_pos = [&](Vertex v, bool dual) -> int {
    for (std::size_t p = 0; p < sites.size(); ++p)
      if (sites[p].v == v && sites[p].dual == dual) return (int)p;
    return -1;
  };
  std::vector<std::vector<Vertex>> per_lat(2);
  std::vector<int> positions;
  for (std::size_t i = 0; i < w.arms.size(); ++i) {
    const LatticePath& arm = w.arms[i];
    Color c = sigma[i];
    if (arm.lat != lattice_of(c)) return false;
    if (!arm.valid() || arm.verts.size() < 2) return false;
    if (linf(arm.verts.front(), a.center) != a.inner) return false;
    if (linf(arm.verts.back(), a.center) != a.outer) return false;
    for (const Edge& e : arm.edges()) {
      Edge rep{e.base, e.o, Lattice::primal};
      if (!in_annulus(a, rep)) return false;
      if (opt.mask && !opt.mask->contains(rep)) return false;
      Edge probe = is_dual(c) ? shift_target(rep) : rep;
      if (!cfg.contains(probe) || cfg.open(probe) != is_open_class(c)) return false;
    }
    auto& seen = per_lat[arm.lat == Lattice::dual];
    for (Vertex v : arm.verts) {
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) return false;
      seen.push_back(v);
    }
    int p = site_pos(arm.verts.front(), arm.lat == Lattice::dual);
    if (p < 0) return false;
    positions.push_back(p);
  }
  // Counterclockwise cyclic order: at most one cyclic descent.
  int descents = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    int cur = positions[i], nxt = positions[(i + 1) % positions.size()];
    if (cur == nxt && positions.size() > 1) return false;
    if (cur >= nxt) ++descents;
  }
  return positions.size() <= 1 || descents <= 1;
}

}  // namespace perc
