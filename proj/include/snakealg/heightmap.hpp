#pragma once

// Height function attached to a prime snake of length >= 3, the interval
// set and prime index sets it determines, and the comparison with the
// snake's own prime index sets.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "snakealg/core.hpp"
#include "snakealg/isomorph.hpp"
#include "snakealg/primesets.hpp"
#include "snakealg/snakes.hpp"

namespace snakealg {

struct HeightProfile {
  Snake snake;
  EpsilonSequence eps;
  int N = 0;
  std::vector<int> p;   // p[m-1] = p_m
  std::vector<int> xi;  // xi[s-1] = xi(s), 1 <= s <= N

  int p_at(int m) const { return p[static_cast<std::size_t>(m - 1)]; }
  int xi_at(int s) const { return xi[static_cast<std::size_t>(s - 1)]; }
  int i_xi(int s) const { return (xi_at(s) - s) / 2; }
  int j_xi(int s) const { return (xi_at(s) + s) / 2; }
  Interval upper(int s) const { return {i_xi(s), j_xi(s)}; }
  Interval lower(int s) const { return {i_xi(s) - 1, j_xi(s) - 1}; }
  int e(int m) const { return detail::eps_at(eps, m); }
  Rank rank() const { return Rank(N); }
};

namespace detail {

/// Distance-3 coordinates differ on both sides at position q (2 <= q <= r-2).
inline bool both_differ(const Snake& s, int q) {
  return s.left(q - 1) != s.left(q + 2) && s.right(q - 1) != s.right(q + 2);
}

}  // namespace detail

inline int n_of(const Snake& s) {
  detail::require_long_prime(s);
  const int r = s.size();
  int n = r;
  for (int q = 2; q <= r - 2; ++q) n += detail::both_differ(s, q) ? 1 : 0;
  return n;
}

inline std::vector<int> p_sequence(const Snake& s) {
  detail::require_long_prime(s);
  const int r = s.size();
  std::vector<int> p{1, 2};
  for (int m = 2; m <= r - 2; ++m) p.push_back(p.back() + (detail::both_differ(s, r - m) ? 2 : 1));
  p.push_back(p.back() + 1);
  if (p.back() != n_of(s)) {
    throw InvariantViolation("last p-value " + std::to_string(p.back()) + " differs from N = " +
                             std::to_string(n_of(s)));
  }
  return p;
}

/// First violated height-function property, if any.
inline std::optional<std::string> height_failure(const HeightProfile& h) {
  for (int s = 1; s <= h.N; ++s) {
    if ((h.xi_at(s) - s) % 2 != 0) return "odd xi(s) - s at s = " + std::to_string(s);
    if (s < h.N && std::abs(h.xi_at(s) - h.xi_at(s + 1)) != 1) {
      return "xi step is not a unit at s = " + std::to_string(s);
    }
  }
  const int r = h.snake.size();
  if (h.xi_at(h.p_at(r)) != h.p_at(r)) return "xi is not anchored at p_r";
  for (int m = 1; m < r; ++m) {
    int em = h.e(r - m);
    if (h.xi_at(h.p_at(m + 1 - em)) - h.xi_at(h.p_at(m + em)) != h.p_at(m + 1) - h.p_at(m)) {
      return "step equation fails at m = " + std::to_string(m);
    }
  }
  for (int m = 1; m <= r; ++m) {
    int a = h.p_at(m) - 1, b = h.p_at(m) + 1;
    if (a >= 1 && b <= h.N && h.xi_at(a) != h.xi_at(b)) {
      return "reflection equation fails at m = " + std::to_string(m);
    }
  }
  return std::nullopt;
}

inline HeightProfile height_profile(const Snake& s) {
  detail::require_long_prime(s);
  HeightProfile h{s, epsilon_sequence(s), n_of(s), p_sequence(s), {}};
  const int r = s.size();
  std::vector<std::optional<int>> xi(static_cast<std::size_t>(h.N));
  auto at = [&](int x) -> std::optional<int>& { return xi[static_cast<std::size_t>(x - 1)]; };
  at(h.p_at(r)) = h.p_at(r);
  for (int m = r - 1; m >= 1; --m) {
    int step = h.p_at(m + 1) - h.p_at(m);
    int next = *at(h.p_at(m + 1));
    at(h.p_at(m)) = h.e(r - m) == 0 ? next - step : next + step;
  }
  for (int m = r; m >= 1; --m) {
    int g = h.p_at(m) - 1;
    if (g >= 1 && !at(g)) at(g) = *at(h.p_at(m) + 1);
  }
  for (int x = 1; x <= h.N; ++x) {
    if (!at(x)) throw InvariantViolation("xi undetermined at " + std::to_string(x));
    h.xi.push_back(*at(x));
  }
  if (auto f = height_failure(h)) throw InvariantViolation("height function: " + *f);
  return h;
}

inline IntervalSet interval_set_xi(const HeightProfile& h) {
  IntervalSet out;
  for (int s = 1; s <= h.N; ++s) {
    out.insert(h.upper(s));
    out.insert(h.lower(s));
  }
  return detail::drop_trivial(std::move(out), h.rank());
}

/// Position m is the upper or lower interval at p_{r-m+1}, by the bit at m.
inline Snake snake_of_xi(const HeightProfile& h) {
  const int r = h.snake.size();
  std::vector<Interval> ivs;
  for (int m = 1; m <= r; ++m) {
    int sm = h.p_at(r - m + 1);
    ivs.push_back(h.e(m) == 0 ? h.upper(sm) : h.lower(sm));
  }
  return Snake(std::move(ivs), h.rank());
}

inline Snake snake_of_xi(const Snake& s) { return snake_of_xi(height_profile(s)); }

/// Which window of the snake an index pair (s, s') corresponds to.
struct PairIndex {
  int s, s2;   // 1 <= s < s2 <= N
  int m, l;    // p_{m-1} < s <= p_m <= p_l <= s2 < p_{l+1}
  WindowParams window;
};

inline PairIndex pair_index(const HeightProfile& h, int s, int s2) {
  const int r = h.snake.size();
  if (!(1 <= s && s < s2 && s2 <= h.N)) throw PreconditionError("need 1 <= s < s' <= N");
  int m = 1;
  while (h.p_at(m) < s) ++m;
  int l = r;
  while (h.p_at(l) > s2) --l;
  const int lower_gap = s != h.p_at(m) ? 1 : 0;
  const int upper_gap = s2 != h.p_at(l) ? 1 : 0;
  return {s, s2, m, l, WindowParams{upper_gap, lower_gap, r - l - 1, r - m + 1}};
}

/// Product over p_m..p_l of the snake-of-xi generators, with one extra
/// generator at each end that falls strictly inside a gap of the p-sequence.
inline MonoidElement omega_pair(const HeightProfile& h, int s, int s2) {
  const int r = h.snake.size();
  auto idx = pair_index(h, s, s2);
  MonoidElement w(h.rank());
  for (int k = idx.m; k <= idx.l; ++k) {
    int em = h.e(r - k + 1);
    w.multiply(em == 0 ? h.upper(h.p_at(k)) : h.lower(h.p_at(k)));
  }
  auto in_range = [r](int q) { return 1 <= q && q <= r; };
  if (idx.window.eps_last == 1) {
    int em = h.e(r - idx.m + 1);
    int a = idx.m - 1 - em, b = idx.m - 2 + em;
    if (in_range(a) && in_range(b)) {
      w.multiply(Interval{h.i_xi(h.p_at(a)) - 1, h.j_xi(h.p_at(b))});
    }
  }
  if (idx.window.eps_first == 1) {
    int el = h.e(r - idx.l + 1);
    int a = idx.l + 2 - el, b = idx.l + 1 + el;
    if (in_range(a) && in_range(b)) {
      w.multiply(Interval{h.i_xi(h.p_at(a)), h.j_xi(h.p_at(b)) - 1});
    }
  }
  return w;
}

inline std::set<MonoidElement> pr_xi(const HeightProfile& h) {
  std::set<MonoidElement> out;
  for (const auto& iv : interval_set_xi(h)) out.insert(MonoidElement::generator(iv, h.rank()));
  for (int s = 1; s <= h.N; ++s) {
    for (int s2 = s + 1; s2 <= h.N; ++s2) {
      auto w = omega_pair(h, s, s2);
      if (!w.is_identity()) out.insert(w);
    }
  }
  return out;
}

inline std::set<MonoidElement> fr_xi(const HeightProfile& h) {
  std::set<MonoidElement> out;
  for (int s = 1; s <= h.N; ++s) {
    auto w = product(MonoidElement::generator(h.upper(s), h.rank()),
                     MonoidElement::generator(h.lower(s), h.rank()));
    if (!w.is_identity()) out.insert(w);
  }
  return out;
}

struct PrBijection {
  Snake target;                                // the snake of xi
  std::map<MonoidElement, MonoidElement> map;  // pr_xi element -> pr weight of the target
  std::map<MonoidElement, MonoidElement> onto_snake;  // composed with eta, when it exists
  bool composed = false;
  std::optional<std::string> failure;  // witness when not a bijection
  bool ok() const { return !failure.has_value(); }
};

namespace detail {

inline std::optional<std::string> bijective_onto(const std::map<MonoidElement, MonoidElement>& m,
                                                 const std::vector<PrimeDescriptor>& pr) {
  std::set<MonoidElement> seen, want;
  for (const auto& [from, to] : m) {
    if (!seen.insert(to).second) return "two elements map to " + format(to);
  }
  for (const auto& d : pr) want.insert(d.weight);
  for (const auto& w : want) {
    if (!seen.contains(w)) return format(w) + " is not hit";
  }
  for (const auto& w : seen) {
    if (!want.contains(w)) return format(w) + " is outside the pr set";
  }
  return std::nullopt;
}

}  // namespace detail

/// pr_xi onto the pr weights of the snake of xi: generators map to
/// themselves and each pair element to the weight of its window. When the
/// snake is isomorphic to its snake of xi, the map is also carried onto
/// the snake's own pr weights, pair elements landing on the same window.
inline PrBijection pr_bijection(const HeightProfile& h) {
  PrBijection out{snake_of_xi(h), {}, {}, false, std::nullopt};
  const Snake& t = out.target;
  const Snake& s = h.snake;
  const auto gens = generator_set(t);
  const auto eps = epsilon_sequence(t);
  std::map<MonoidElement, WindowParams> windows;

  for (const auto& iv : interval_set_xi(h)) {
    if (!gens.contains(iv)) {
      out.failure = to_string(iv) + " is not a generator of the snake of xi";
      return out;
    }
    auto w = MonoidElement::generator(iv, h.rank());
    out.map.emplace(w, w);
  }
  for (int a = 1; a <= h.N; ++a) {
    for (int b = a + 1; b <= h.N; ++b) {
      auto w = omega_pair(h, a, b);
      if (w.is_identity()) continue;
      auto idx = pair_index(h, a, b);
      std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (!window_admissible(t, eps, idx.window)) {
        out.failure = "window " + to_string(idx.window) + " for " + tag + " is not admissible";
        return out;
      }
      if (materialize_window(t, idx.window).weight() != w) {
        out.failure = "pair " + tag + " differs from window " + to_string(idx.window);
        return out;
      }
      out.map.emplace(w, w);
      windows.emplace(w, idx.window);
    }
  }
  if (auto f = detail::bijective_onto(out.map, pr_set(t))) {
    out.failure = *f;
    return out;
  }

  if (!check_iso_conditions(t, s)) return out;
  SnakeIso iso(t, s);
  out.composed = true;
  for (const auto& [from, to] : out.map) {
    auto img = eta(iso, to);
    auto it = windows.find(from);
    if (it != windows.end() && materialize_window(s, it->second).weight() != img) {
      out.failure = format(from) + " does not map to window " + to_string(it->second);
      return out;
    }
    out.onto_snake.emplace(from, img);
  }
  if (auto f = detail::bijective_onto(out.onto_snake, pr_set(s))) out.failure = *f;
  return out;
}

struct ClusterReport {
  int N = 0;
  std::string type;
  std::vector<MonoidElement> variables;  // pr weights of the snake
  std::vector<MonoidElement> frozen;     // images of the frozen elements
  std::map<MonoidElement, MonoidElement> correspondence;
};

inline ClusterReport cluster_export(const Snake& s) {
  detail::require_long_prime(s);
  if (!is_boundary(s)) {
    throw PreconditionError("cluster export needs j_max - i_min = n+1 and j_min = i_max");
  }
  auto h = height_profile(s);
  auto bij = pr_bijection(h);
  if (!bij.ok()) throw InvariantViolation("pr correspondence: " + *bij.failure);
  if (!bij.composed) throw InvariantViolation("boundary snake is not isomorphic to its snake of xi");
  SnakeIso iso(bij.target, s);
  ClusterReport out;
  out.N = h.N;
  out.type = "A_" + std::to_string(h.N);
  out.correspondence = bij.onto_snake;
  for (const auto& [from, to] : bij.onto_snake) out.variables.push_back(to);
  std::sort(out.variables.begin(), out.variables.end());
  for (const auto& w : fr_xi(h)) out.frozen.push_back(eta(iso, w));
  std::sort(out.frozen.begin(), out.frozen.end());
  return out;
}

}  // namespace snakealg
