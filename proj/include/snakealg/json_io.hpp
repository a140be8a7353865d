#pragma once

// JSON views of the library's value types. Snakes and monoid elements are
// emitted in their text syntax so they re-parse with parse_snake and
// parse_monoid.

#include "json.hpp"

#include "snakealg/factorizer.hpp"
#include "snakealg/grothendieck.hpp"
#include "snakealg/heightmap.hpp"
#include "snakealg/primesets.hpp"
#include "snakealg/snakes.hpp"
#include "snakealg/text.hpp"

namespace snakealg {

using json = nlohmann::ordered_json;

inline json to_json(const Interval& iv) { return json::array({iv.left, iv.right}); }

inline json to_json(const IntervalSet& set) {
  json out = json::array();
  for (const auto& iv : set) out.push_back(to_json(iv));
  return out;
}

inline json to_json(const Snake& s) { return format(s); }
inline json to_json(const MonoidElement& w) { return format(w); }

inline json to_json(const WindowParams& w) {
  return {{"eps_first", w.eps_first}, {"eps_last", w.eps_last}, {"p", w.p}, {"l", w.l}};
}

inline json to_json(const PrimeDescriptor& d) {
  json out{{"kind", to_string(d.kind)}, {"snake", to_json(d.payload)}, {"weight", to_json(d.weight)}};
  if (d.window) out["window"] = to_json(*d.window);
  return out;
}

inline json to_json(const std::vector<PrimeDescriptor>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(to_json(d));
  return out;
}

inline json to_json(const std::vector<MonoidElement>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

inline json to_json(const std::set<MonoidElement>& ws) {
  return to_json(std::vector<MonoidElement>(ws.begin(), ws.end()));
}

inline json to_json(const SnakeClassification& c) {
  json out{{"stable", c.stable}, {"connected", c.connected}, {"prime", c.prime}};
  out["eps"] = c.eps ? json(*c.eps) : json(nullptr);
  return out;
}

inline json to_json(const Profile& p) {
  return {{"a1", p.a1}, {"a2", p.a2}, {"a3", p.a3}, {"b", p.b}, {"rest", to_json(p.rest)}};
}

inline json to_json(const IrredClass& c) {
  return {{"omega", to_json(c.omega)}, {"factors", to_json(c.factors)}};
}

inline json to_json(const RingElement& r) {
  json out = json::array();
  for (const auto& [w, c] : r.terms) out.push_back({{"omega", to_json(w)}, {"coeff", c}});
  return out;
}

inline json to_json(const ExchangeTriple& t) {
  return {{"snake", to_json(t.snake)},
          {"left", json::array({to_json(t.left_first), to_json(t.left_second)})},
          {"term1", to_json(t.term1)},
          {"term2", to_json(t.term2)},
          {"term2_groups", to_json(t.term2_groups)},
          {"third_split", t.third_split},
          {"weight_conserved", exchange_conserves_weight(t)},
          {"groups_match", exchange_groups_match(t)}};
}

inline json to_json(const HeightProfile& h) {
  json i_xi = json::array(), j_xi = json::array();
  for (int s = 1; s <= h.N; ++s) {
    i_xi.push_back(h.i_xi(s));
    j_xi.push_back(h.j_xi(s));
  }
  return {{"snake", to_json(h.snake)}, {"eps", h.eps},   {"N", h.N},   {"p", h.p},
          {"xi", h.xi},                {"i_xi", i_xi},   {"j_xi", j_xi},
          {"interval_set_xi", to_json(interval_set_xi(h))},
          {"snake_of_xi", to_json(snake_of_xi(h))},
          {"pr_xi", to_json(pr_xi(h))},
          {"fr_xi", to_json(fr_xi(h))}};
}

inline json to_json(const std::map<MonoidElement, MonoidElement>& m) {
  json out = json::array();
  for (const auto& [a, b] : m) out.push_back(json::array({to_json(a), to_json(b)}));
  return out;
}

inline json to_json(const ClusterReport& c) {
  return {{"type", c.type},
          {"N", c.N},
          {"frozen_count", c.frozen.size()},
          {"variables", to_json(c.variables)},
          {"frozen", to_json(c.frozen)},
          {"correspondence", to_json(c.correspondence)}};
}

}  // namespace snakealg
