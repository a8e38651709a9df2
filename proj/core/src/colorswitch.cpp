#include "perc/colorswitch.hpp"

#include <deque>
#include <map>

#include <json.hpp>

namespace perc {

namespace {

ColorSequence switched_sequence(const ColorSequence& sigma) {
  ColorSequence out = sigma;
  out.back() = star(bar(out.back()));
  return out;
}

}  // namespace

std::string SwitchReport::to_json() const {
  nlohmann::json j;
  j["sigma"] = format_sigma(sigma);
  j["sigma_out"] = format_sigma(sigma_out);
  j["region_size"] = region_size;
  j["success"] = success();
  j["failed_stage"] = failed_stage();
  nlohmann::json st = nlohmann::json::array();
  for (const auto& s : stages) st.push_back({{"ok", s.ok}, {"note", s.note}});
  j["stages"] = st;
  return j.dump();
}

SwitchReport switch_last_color(const Configuration& cfg, const Annulus& a,
                               const ColorSequence& sigma, int ell,
                               const SwitchLandings* landings) {
  if (sigma.size() < 3)
    throw std::invalid_argument("switch_last_color: need k >= 3");
  if (!polychromatic(sigma))
    throw std::invalid_argument("switch_last_color: sigma must be polychromatic");
  if (is_open_class(sigma[0]) == is_open_class(sigma[1]))
    throw std::invalid_argument(
        "switch_last_color: sigma_1, sigma_2 must have opposite bar-classes");
  if (2 * a.inner >= a.outer / 2)
    throw std::invalid_argument("switch_last_color: sub-annulus B(2n, N/2) empty");

  SwitchReport rep;
  rep.sigma = sigma;
  rep.sigma_out = switched_sequence(sigma);

  // Stage 1: extract the k-1 conditioned arms.
  ColorSequence head(sigma.begin(), sigma.end() - 1);
  const LandingSequence* inner = landings ? &landings->first : nullptr;
  const LandingSequence* outer = landings ? &landings->second : nullptr;
  if (landings && (landings->first.size() != head.size() ||
                   landings->second.size() != head.size()))
    throw std::invalid_argument("switch_last_color: need k-1 landing intervals");
  auto w = extract_canonical_arms(cfg, a, head, inner, outer);
  if (!w) {
    rep.stages[0] = {false, "canonical extraction failed"};
    return rep;
  }
  if (!witness_separated(*w, a, ell)) {
    rep.stages[0] = {false, "conditioned arms not ell-separated"};
    return rep;
  }
  rep.stages[0] = {true, "extracted " + std::to_string(w->arms.size()) + " arms"};

  // Stage 2: complement region U, swept ccw from the last arm to the first.
  Region u;
  try {
    u = complement_region(cfg, a, w->arms);
  } catch (const std::exception& ex) {
    rep.stages[1] = {false, std::string("complement_region: ") + ex.what()};
    return rep;
  }
  rep.region_size = u.edges.size();
  if (u.edges.empty()) {
    rep.stages[1] = {false, "empty region"};
    return rep;
  }
  rep.stages[1] = {true, "|U| = " + std::to_string(u.edges.size()) +
                             (u.connected ? "" : " (disconnected)")};

  // Stage 3: flip the statuses in U.
  Configuration flipped = cfg.flip_region(u.edges);
  rep.stages[2] = {true, "flipped"};

  // Stage 4: shift U.
  Configuration shifted = apply_T(flipped, OrderedRegion(u, cfg.box()));
  rep.stages[3] = {true, "shifted"};

  // Stage 5: the switched sequence in the sub-annulus.
  Annulus sub{a.center, 2 * a.inner, a.outer / 2};
  bool hit = detect_arms(shifted, sub, rep.sigma_out);
  rep.stages[4] = {hit, hit ? "sigma'' detected" : "sigma'' not detected"};
  return rep;
}

std::vector<ColorSequence> interpolation_chain(const ColorSequence& sigma,
                                               const ColorSequence& sigma_to) {
  const std::size_t k = sigma.size();
  if (sigma_to.size() != k)
    throw std::invalid_argument("interpolation_chain: length mismatch");
  if (!polychromatic(sigma) || !polychromatic(sigma_to))
    throw std::invalid_argument("interpolation_chain: endpoints must be polychromatic");
  if (sigma == sigma_to) return {sigma};

  const std::array<Color, 4> all{Color::O, Color::C, Color::Os, Color::Cs};
  std::map<ColorSequence, ColorSequence> parent;  // node -> predecessor
  std::deque<ColorSequence> queue{sigma};
  parent[sigma] = sigma;
  while (!queue.empty()) {
    ColorSequence cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i)
      for (Color c : all) {
        if (c == cur[i]) continue;
        ColorSequence next = cur;
        next[i] = c;
        if (!polychromatic(next) || parent.count(next)) continue;
        parent[next] = cur;
        if (next == sigma_to) {
          std::vector<ColorSequence> chain{next};
          while (!(chain.back() == sigma)) chain.push_back(parent[chain.back()]);
          std::reverse(chain.begin(), chain.end());
          if (chain.size() > k + 1)
            throw std::logic_error("interpolation_chain: more than k steps");
          return chain;
        }
        queue.push_back(next);
      }
  }
  throw std::logic_error("interpolation_chain: no polychromatic chain");
}

}  // namespace perc
