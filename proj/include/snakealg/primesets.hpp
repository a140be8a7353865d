#pragma once

// Interval sets attached to a prime snake, window snakes, and the two
// families of prime descriptors (pr and fr) used by the factorizer.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "snakealg/core.hpp"
#include "snakealg/snakes.hpp"
#include "snakealg/text.hpp"

namespace snakealg {

using IntervalSet = std::set<Interval>;

namespace detail {

/// All [i_p, j_l] with j_l in the four-wide window around p, within the
/// rank bound, degenerate lengths included.
inline IntervalSet window_intervals(const Snake& s, const EpsilonSequence& eps) {
  IntervalSet out;
  const int r = s.size();
  for (int p = 1; p <= r; ++p) {
    int e = eps_at(eps, p);
    for (int q = p - 1 - e; q <= p + 2 - e; ++q) {
      if (!s.has(q)) continue;
      Interval iv{s.left(p), s.right(q)};
      if (fits(iv, s.rank())) out.insert(iv);
    }
  }
  return out;
}

inline IntervalSet drop_trivial(IntervalSet set, Rank n) {
  std::erase_if(set, [n](const Interval& iv) { return is_trivial(iv, n); });
  return set;
}

inline void require_long_prime(const Snake& s) {
  require_prime(s);
  if (s.size() < 3) {
    throw PreconditionError("interval sets need a snake of length >= 3, got " +
                            std::to_string(s.size()));
  }
}

}  // namespace detail

inline IntervalSet tilde_interval_set(const Snake& s) {
  detail::require_long_prime(s);
  return detail::window_intervals(s, epsilon_sequence(s));
}

inline IntervalSet interval_set(const Snake& s) {
  detail::require_long_prime(s);
  return detail::drop_trivial(detail::window_intervals(s, epsilon_sequence(s)), s.rank());
}

/// Generators of the submonoid attached to a prime snake of any length.
/// For length 1 and 2 this is the list of nontrivial [i_a, j_b].
inline IntervalSet generator_set(const Snake& s) {
  require_prime(s);
  return detail::drop_trivial(detail::window_intervals(s, epsilon_sequence(s)), s.rank());
}

inline bool submonoid_member(const MonoidElement& w, const Snake& s) {
  if (w.rank() != s.rank()) return false;
  auto gens = generator_set(s);
  return std::all_of(w.terms().begin(), w.terms().end(),
                     [&](const auto& t) { return gens.contains(t.first); });
}

/// Pairs (A, B) of interval_set(s) that form a connected 2-snake with
/// B.left < A.left <= B.right < A.right, whose corner intervals fall
/// outside tilde_interval_set(s). Empty when the closure property holds.
inline std::vector<std::pair<Interval, Interval>> closure_failures(const Snake& s) {
  auto set = interval_set(s);
  auto tilde = tilde_interval_set(s);
  const int wrap = s.rank().wrap();
  std::vector<std::pair<Interval, Interval>> out;
  for (const auto& a : set) {
    for (const auto& b : set) {
      if (!(b.left < a.left && a.left <= b.right && b.right < a.right)) continue;
      if (a.right - b.left > wrap) continue;
      if (!tilde.contains({a.left, b.right}) || !tilde.contains({b.left, a.right})) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

inline bool closure_check(const Snake& s) { return closure_failures(s).empty(); }

/// For boundary snakes: interval_set equals tilde minus the two extremal
/// intervals. Returns true vacuously for non-boundary snakes.
inline bool boundary_set_identity(const Snake& s) {
  if (!is_boundary(s)) return true;
  auto e = extremes(s);
  auto expect = tilde_interval_set(s);
  expect.erase({e.i_max, e.j_min});
  expect.erase({e.i_min, e.j_max});
  return expect == interval_set(s);
}

/// (eps_first, eps_last, p, l): optional synthetic first interval, core
/// positions p+2..l, optional synthetic last interval.
struct WindowParams {
  int eps_first = 0;
  int eps_last = 0;
  int p = 0;
  int l = 0;
  friend auto operator<=>(const WindowParams&, const WindowParams&) = default;
};

inline std::string to_string(const WindowParams& w) {
  return "(" + std::to_string(w.eps_first) + "," + std::to_string(w.eps_last) + "," +
         std::to_string(w.p) + "," + std::to_string(w.l) + ")";
}

inline bool window_first_exists(const Snake& s, const WindowParams& w) {
  return w.eps_first == 1 && w.p >= 1 && w.p <= s.size();
}
inline bool window_last_exists(const Snake& s, const WindowParams& w) {
  return w.eps_last == 1 && w.l <= s.size() - 2;
}

/// Admissibility conditions under which a window belongs to pr(s).
inline bool window_admissible(const Snake& s, const EpsilonSequence& eps, const WindowParams& w) {
  // A comparison that reaches outside 1..r does not hold.
  auto differs = [&](int a, int b, bool right) {
    if (!s.has(a) || !s.has(b)) return false;
    return right ? s.right(a) != s.right(b) : s.left(a) != s.left(b);
  };
  if (w.eps_first == 1) {
    int e = detail::eps_at(eps, w.p);
    if (!differs(w.p + e, w.p + 3, false) || !differs(w.p + 1 - e, w.p + 3, true)) return false;
  }
  if (w.eps_last == 1) {
    int e = detail::eps_at(eps, w.l);
    if (!differs(w.l - 1, w.l + 1 + e, false) || !differs(w.l - 1, w.l + 2 - e, true)) {
      return false;
    }
  }
  return true;
}

/// The window snake without admissibility or primality checks.
inline Snake materialize_window(const Snake& s, const WindowParams& w) {
  const int r = s.size();
  if (!(0 <= w.p + 1 && w.p + 1 < w.l && w.l <= r)) {
    throw PreconditionError("window " + to_string(w) + " outside 0 <= p+1 < l <= " +
                            std::to_string(r));
  }
  if ((w.eps_first != 0 && w.eps_first != 1) || (w.eps_last != 0 && w.eps_last != 1)) {
    throw PreconditionError("window bits must be 0 or 1");
  }
  if (w.eps_first == 1 && !window_first_exists(s, w)) {
    throw PreconditionError("window " + to_string(w) + ": first term does not exist");
  }
  if (w.eps_last == 1 && !window_last_exists(s, w)) {
    throw PreconditionError("window " + to_string(w) + ": last term does not exist");
  }
  auto eps = epsilon_sequence(s);
  std::vector<Interval> ivs;
  if (w.eps_first == 1) {
    int e = detail::eps_at(eps, w.p);
    ivs.push_back({s.left(w.p + e), s.right(w.p + 1 - e)});
  }
  for (int q = w.p + 2; q <= w.l; ++q) ivs.push_back(s.at(q));
  if (w.eps_last == 1) {
    int e = detail::eps_at(eps, w.l);
    ivs.push_back({s.left(w.l + 1 + e), s.right(w.l + 2 - e)});
  }
  return Snake(std::move(ivs), s.rank());
}

/// Admissible window snake; raises InvariantViolation if it is not prime.
inline Snake window_snake(const Snake& s, int eps_first, int eps_last, int p, int l) {
  require_prime(s);
  WindowParams w{eps_first, eps_last, p, l};
  Snake out = materialize_window(s, w);
  if (!window_admissible(s, epsilon_sequence(s), w)) {
    throw PreconditionError("window " + to_string(w) + " is not admissible for " + format(s));
  }
  if (!is_prime(out)) {
    throw InvariantViolation("admissible window " + to_string(w) + " of " + format(s) +
                             " is not prime: " + format(out));
  }
  return out;
}

enum class DescriptorKind { Interval, Window, Pair, Extremal };

inline const char* to_string(DescriptorKind k) {
  switch (k) {
    case DescriptorKind::Interval: return "interval";
    case DescriptorKind::Window: return "window";
    case DescriptorKind::Pair: return "pair";
    case DescriptorKind::Extremal: return "extremal";
  }
  return "?";
}

/// One element of pr(s) or fr(s). `payload` holds the interval tuple it
/// stands for (length 1 for intervals); `weight` is its monoid element.
struct PrimeDescriptor {
  DescriptorKind kind;
  Snake payload;
  std::optional<WindowParams> window;
  MonoidElement weight;
};

namespace detail {

inline PrimeDescriptor make_descriptor(DescriptorKind kind, std::vector<Interval> ivs, Rank n,
                                       std::optional<WindowParams> w = std::nullopt) {
  Snake payload(std::move(ivs), n);
  MonoidElement weight = payload.weight();
  return {kind, std::move(payload), w, std::move(weight)};
}

/// Sorts by weight and keeps the first descriptor of each weight; drops
/// identity weights.
inline std::vector<PrimeDescriptor> canonical(std::vector<PrimeDescriptor> ds) {
  std::erase_if(ds, [](const PrimeDescriptor& d) { return d.weight.is_identity(); });
  std::stable_sort(ds.begin(), ds.end(), [](const PrimeDescriptor& a, const PrimeDescriptor& b) {
    return a.weight < b.weight;
  });
  auto last = std::unique(ds.begin(), ds.end(), [](const PrimeDescriptor& a, const PrimeDescriptor& b) {
    return a.weight == b.weight;
  });
  ds.erase(last, ds.end());
  return ds;
}

}  // namespace detail

inline std::vector<WindowParams> admissible_windows(const Snake& s) {
  require_prime(s);
  auto eps = epsilon_sequence(s);
  const int r = s.size();
  std::vector<WindowParams> out;
  for (int p = -1; p + 2 <= r; ++p) {
    for (int l = p + 2; l <= r; ++l) {
      for (int ef : {0, 1}) {
        for (int el : {0, 1}) {
          WindowParams w{ef, el, p, l};
          if (ef == 1 && !window_first_exists(s, w)) continue;
          if (el == 1 && !window_last_exists(s, w)) continue;
          if (window_admissible(s, eps, w)) out.push_back(w);
        }
      }
    }
  }
  return out;
}

inline std::vector<PrimeDescriptor> pr_set(const Snake& s) {
  require_prime(s);
  const Rank n = s.rank();
  std::vector<PrimeDescriptor> out;
  if (s.size() <= 2) {
    for (const auto& iv : s.intervals()) {
      out.push_back(detail::make_descriptor(DescriptorKind::Interval, {iv}, n));
    }
    return detail::canonical(std::move(out));
  }
  for (const auto& iv : interval_set(s)) {
    out.push_back(detail::make_descriptor(DescriptorKind::Interval, {iv}, n));
  }
  for (const auto& w : admissible_windows(s)) {
    Snake ws = materialize_window(s, w);
    if (!is_prime(ws)) {
      throw InvariantViolation("admissible window " + to_string(w) + " of " + format(s) +
                               " is not prime: " + format(ws));
    }
    auto ivs = ws.intervals();
    out.push_back(detail::make_descriptor(DescriptorKind::Window, {ivs.begin(), ivs.end()}, n, w));
  }
  return detail::canonical(std::move(out));
}

inline std::vector<PrimeDescriptor> fr_set(const Snake& s) {
  require_prime(s);
  const Rank n = s.rank();
  const int r = s.size();
  std::vector<PrimeDescriptor> out;
  if (r == 1) return out;

  auto pair = [&](const Interval& a, const Interval& b) {
    std::vector<Interval> ivs;
    for (const auto& iv : {a, b}) {
      if (!is_trivial(iv, n)) ivs.push_back(iv);
    }
    if (ivs.empty()) return;
    auto kind = ivs.size() == 2 ? DescriptorKind::Pair : DescriptorKind::Interval;
    out.push_back(detail::make_descriptor(kind, std::move(ivs), n));
  };
  auto single = [&](const Interval& iv, DescriptorKind kind) {
    if (!fits(iv, n) || is_trivial(iv, n)) return;
    out.push_back(detail::make_descriptor(kind, {iv}, n));
  };

  if (r == 2) {
    pair(s.at(1), s.at(2));
    single({s.left(1), s.right(2)}, DescriptorKind::Interval);
    single({s.left(2), s.right(1)}, DescriptorKind::Interval);
    return detail::canonical(std::move(out));
  }

  auto eps = epsilon_sequence(s);
  auto e = [&](int p) { return detail::eps_at(eps, p); };
  auto iv = [&](int a, int b) { return Interval{s.left(a), s.right(b)}; };

  auto ext = extremes(s);
  single({ext.i_min, ext.j_max}, DescriptorKind::Extremal);
  single({ext.i_max, ext.j_min}, DescriptorKind::Extremal);

  pair(s.at(1), iv(2 + e(1), 3 - e(1)));
  for (int q = 2; q < r; ++q) pair(s.at(q), iv(q + 1 - 2 * e(q), q - 1 + 2 * e(q)));
  pair(s.at(r), iv(r - 2 + e(r), r - 1 - e(r)));
  for (int q = 2; q <= r - 2; ++q) {
    if (s.left(q - 1) != s.left(q + 2) && s.right(q - 1) != s.right(q + 2)) {
      pair(iv(q - e(q), q - 1 + e(q)), iv(q + 1 + e(q), q + 2 - e(q)));
    }
  }
  return detail::canonical(std::move(out));
}

/// pr(s) and fr(s) indexed by weight. When a weight occurs in both, the pr
/// descriptor is kept.
class PrimeCatalog {
 public:
  explicit PrimeCatalog(const Snake& s) : snake_(s), pr_(pr_set(s)), fr_(fr_set(s)) {
    for (const auto& d : pr_) by_weight_.emplace(d.weight, &d);
    for (const auto& d : fr_) by_weight_.emplace(d.weight, &d);
  }
  PrimeCatalog(const PrimeCatalog&) = delete;
  PrimeCatalog& operator=(const PrimeCatalog&) = delete;

  const Snake& snake() const { return snake_; }
  const std::vector<PrimeDescriptor>& pr() const { return pr_; }
  const std::vector<PrimeDescriptor>& fr() const { return fr_; }

  const PrimeDescriptor* find(const MonoidElement& w) const {
    auto it = by_weight_.find(w);
    return it == by_weight_.end() ? nullptr : it->second;
  }
  bool contains(const MonoidElement& w) const { return find(w) != nullptr; }

  /// One descriptor per distinct weight, in weight order.
  std::vector<const PrimeDescriptor*> all() const {
    std::vector<const PrimeDescriptor*> out;
    for (const auto& [w, d] : by_weight_) out.push_back(d);
    return out;
  }

 private:
  Snake snake_;
  std::vector<PrimeDescriptor> pr_;
  std::vector<PrimeDescriptor> fr_;
  std::map<MonoidElement, const PrimeDescriptor*> by_weight_;
};

}  // namespace snakealg
