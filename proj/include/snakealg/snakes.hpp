#pragma once

// Classification of interval tuples (stable sink-source, connected, prime),
// prime factor decomposition, and the endpoint chain checks that every
// prime snake must satisfy.

#include <optional>
#include <string>
#include <vector>

#include "snakealg/core.hpp"
#include "snakealg/text.hpp"

namespace snakealg {

/// Alternating bits eps[0..r-1]; eps[p-1] is the bit at 1-based position p.
using EpsilonSequence = std::vector<int>;

struct SnakeClassification {
  bool stable = false;
  bool connected = false;
  bool prime = false;
  std::optional<EpsilonSequence> eps;
};

namespace detail {

inline int coord(const Interval& iv, bool right) { return right ? iv.right : iv.left; }

/// Bit at 1-based position p.
inline int eps_at(const EpsilonSequence& eps, int p) {
  return eps[static_cast<std::size_t>(p - 1)];
}

}  // namespace detail

/// The alternating sequence, or std::nullopt when none exists.
inline std::optional<EpsilonSequence> try_epsilon_sequence(const Snake& s) {
  const int r = s.size();
  EpsilonSequence eps(static_cast<std::size_t>(r), 0);
  if (r == 1) return eps;
  const auto& a = s.at(1);
  const auto& b = s.at(2);
  if (b.left < a.left && b.right < a.right) {
    eps[0] = 0;
  } else if (a.left < b.left && a.right < b.right) {
    eps[0] = 1;
  } else {
    return std::nullopt;
  }
  for (int p = 1; p < r; ++p) {
    int e = eps[static_cast<std::size_t>(p - 1)];
    eps[static_cast<std::size_t>(p)] = 1 - e;
    const auto& lo = s.at(p + 1 - e);
    const auto& hi = s.at(p + e);
    if (!(lo.left < hi.left && lo.right < hi.right)) return std::nullopt;
  }
  return eps;
}

inline EpsilonSequence epsilon_sequence(const Snake& s) {
  auto eps = try_epsilon_sequence(s);
  if (!eps) throw PreconditionError("no alternating sequence exists for " + format(s));
  return *eps;
}

inline SnakeClassification classify(const Snake& s) {
  SnakeClassification out;
  const int r = s.size();
  const Rank n = s.rank();
  for (const auto& iv : s.intervals()) {
    if (is_trivial(iv, n)) return out;
  }
  for (int p = 1; p <= r; ++p) {
    for (int q = p + 1; q <= r; ++q) {
      if (s.at(p) == s.at(q)) return out;
    }
  }
  auto eps = try_epsilon_sequence(s);
  if (!eps) return out;
  for (int q = 3; q <= r; ++q) {
    for (int p = 1; p <= q - 2; ++p) {
      if (!(s.left(p) <= s.left(q) && s.left(q) < s.right(q) && s.right(q) <= s.right(p))) {
        return out;
      }
    }
  }
  out.stable = true;
  out.eps = eps;

  out.connected = true;
  for (int p = 1; p < r && out.connected; ++p) {
    int e = detail::eps_at(*eps, p);
    const auto& lo = s.at(p + 1 - e);
    const auto& hi = s.at(p + e);
    out.connected = lo.left < hi.left && hi.left <= lo.right && lo.right < hi.right &&
                    hi.right - lo.left <= n.wrap();
  }
  if (!out.connected) return out;

  out.prime = true;
  for (int p = 1; p + 2 <= r; ++p) {
    if (s.left(p) == s.left(p + 2) || s.right(p) == s.right(p + 2)) out.prime = false;
  }
  return out;
}

inline bool is_stable_sink_source(const Snake& s) { return classify(s).stable; }
inline bool is_connected(const Snake& s) { return classify(s).connected; }
inline bool is_prime(const Snake& s) { return classify(s).prime; }

inline void require_prime(const Snake& s) {
  if (!is_prime(s)) throw PreconditionError("snake is not prime: " + format(s));
}

/// Whether s(0,p) is a prime factor of s, for 1 <= p < r.
inline bool is_prime_factor_at(const Snake& s, const EpsilonSequence& eps, int p) {
  const int r = s.size();
  if (p < 1 || p >= r) return false;
  if (!is_prime(subsnake(s, 1, p))) return false;
  Snake pair({s.at(p), s.at(p + 1)}, s.rank());
  if (!is_connected(pair)) return true;

  const int e = detail::eps_at(eps, p);
  auto bullet = [&](int a_lo, int a_hi, int b_lt, int b_gt) {
    if (!s.has(a_lo) || !s.has(a_hi) || !s.has(b_lt) || !s.has(b_gt)) return false;
    for (bool a_right : {false, true}) {
      bool b_right = !a_right;
      if (detail::coord(s.at(a_lo), a_right) == detail::coord(s.at(a_hi), a_right) &&
          detail::coord(s.at(b_lt), b_right) < detail::coord(s.at(b_gt), b_right)) {
        return true;
      }
    }
    return false;
  };
  return bullet(p - 1, p + 1, p + 1 - 2 * e, p - 1 + 2 * e) ||
         bullet(p, p + 2, p + 2 - 2 * e, p + 2 * e);
}

/// Greedy left-to-right split at the least qualifying cut. Each piece is
/// prime and the pieces concatenate back to `s`.
inline std::vector<Snake> prime_factor_decomposition(const Snake& s) {
  auto cls = classify(s);
  if (!cls.stable) throw PreconditionError("snake is not stable: " + format(s));
  std::vector<Snake> out;
  Snake cur = s;
  while (true) {
    if (is_prime(cur)) {
      out.push_back(cur);
      return out;
    }
    auto eps = epsilon_sequence(cur);
    int cut = 0;
    for (int p = 1; p < cur.size() && cut == 0; ++p) {
      if (is_prime_factor_at(cur, eps, p)) cut = p;
    }
    if (cut == 0) {
      throw InvariantViolation("no prime factor found for non-prime stable snake " + format(cur));
    }
    out.push_back(subsnake(cur, 1, cut));
    cur = subsnake(cur, cut + 1, cur.size());
  }
}

namespace detail {

struct ChainLink {
  int pos;
  bool strict_to_next;
};

/// Endpoint chains of a prime snake with first bit 0. The left chain is
/// increasing along positions 2,1,4,3,6,5,...; the right chain is
/// decreasing along positions 1,3,2,5,4,7,6,...
inline std::vector<ChainLink> left_chain(int r) {
  std::vector<ChainLink> out;
  for (int k = 0;; ++k) {
    int pos = (k % 2 == 0) ? k + 2 : k;
    if (pos > r + 2) break;
    out.push_back({pos, k % 2 == 0});
  }
  return out;
}

inline std::vector<ChainLink> right_chain(int r) {
  std::vector<ChainLink> out;
  for (int k = 0;; ++k) {
    int pos = k == 0 ? 1 : ((k % 2 == 1) ? k + 2 : k);
    if (pos > r + 2) break;
    out.push_back({pos, k <= 1 || k % 2 == 1});
  }
  return out;
}

/// Drops positions beyond r; a merged link is strict if any skipped link was.
inline std::vector<ChainLink> restrict_chain(const std::vector<ChainLink>& chain, int r) {
  std::vector<ChainLink> out;
  for (const auto& link : chain) {
    if (link.pos <= r) {
      out.push_back(link);
    } else if (!out.empty()) {
      out.back().strict_to_next = out.back().strict_to_next || link.strict_to_next;
    }
  }
  return out;
}

inline std::optional<std::string> chain_failure(const Snake& s) {
  const int r = s.size();
  auto walk = [&](const std::vector<ChainLink>& chain, bool right,
                  bool increasing) -> std::optional<std::string> {
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      int a = coord(s.at(chain[k].pos), right);
      int b = coord(s.at(chain[k + 1].pos), right);
      if (!increasing) std::swap(a, b);
      bool ok = chain[k].strict_to_next ? a < b : a <= b;
      if (!ok) {
        return std::string(right ? "right" : "left") + " chain breaks between positions " +
               std::to_string(chain[k].pos) + " and " + std::to_string(chain[k + 1].pos);
      }
    }
    return std::nullopt;
  };
  if (auto f = walk(restrict_chain(left_chain(r), r), false, true)) return f;
  return walk(restrict_chain(right_chain(r), r), true, false);
}

}  // namespace detail

/// Unique extremal positions forced on a prime snake (1-based).
struct ExtremalPositions {
  int left_min, left_max, right_max, right_min;
};

inline ExtremalPositions extremal_positions(const EpsilonSequence& eps) {
  const int r = static_cast<int>(eps.size());
  const int e1 = eps.front();
  const int er = eps.back();
  return {2 - e1, r - er, 1 + e1, r - 1 + er};
}

/// Full endpoint chain and extremal-position check for a prime snake.
/// Returns a description of the first failure, std::nullopt when all hold.
inline std::optional<std::string> enumeration_failure(const Snake& s) {
  require_prime(s);
  const int r = s.size();
  if (r == 1) return std::nullopt;
  auto eps = epsilon_sequence(s);
  if (auto f = detail::chain_failure(eps.front() == 0 ? s : reflect(s))) return f;

  auto ext = extremal_positions(eps);
  auto unique_extreme = [&](int at, bool right, bool is_max) -> bool {
    int v = detail::coord(s.at(at), right);
    for (int p = 1; p <= r; ++p) {
      if (p == at) continue;
      int w = detail::coord(s.at(p), right);
      if (is_max ? !(w < v) : !(v < w)) return false;
    }
    return true;
  };
  if (!unique_extreme(ext.left_min, false, false)) return "left minimum misplaced";
  if (!unique_extreme(ext.left_max, false, true)) return "left maximum misplaced";
  if (!unique_extreme(ext.right_max, true, true)) return "right maximum misplaced";
  if (!unique_extreme(ext.right_min, true, false)) return "right minimum misplaced";
  return std::nullopt;
}

inline bool check_enumeration(const Snake& s) { return !enumeration_failure(s).has_value(); }

struct Extremes {
  int i_min, i_max, j_min, j_max;
};

inline Extremes extremes(const Snake& s) {
  Extremes e{s.left(1), s.left(1), s.right(1), s.right(1)};
  for (const auto& iv : s.intervals()) {
    e.i_min = std::min(e.i_min, iv.left);
    e.i_max = std::max(e.i_max, iv.left);
    e.j_min = std::min(e.j_min, iv.right);
    e.j_max = std::max(e.j_max, iv.right);
  }
  return e;
}

/// j_max - i_min = n+1 and j_min = i_max.
inline bool is_boundary(const Snake& s) {
  auto e = extremes(s);
  return e.j_max - e.i_min == s.rank().wrap() && e.j_min == e.i_max;
}

}  // namespace snakealg
