#pragma once

// Exhaustive and random generation of snakes, and a brute-force search for
// every factorization of a monoid element over the prime descriptors.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "snakealg/core.hpp"
#include "snakealg/primesets.hpp"
#include "snakealg/snakes.hpp"

namespace snakealg {

inline constexpr int kSpanCap = 16;

struct CorpusFilters {
  bool stable = false;
  bool connected = false;
  bool prime = false;
  bool boundary = false;
};

struct CorpusSpec {
  int r_min = 1;
  int r_max = 3;
  int span = 6;  // bound on j_max - i_min
  int n_min = 1;
  int n_max = 6;
  bool translation_normalized = true;  // i_min = 0
  CorpusFilters filters{.prime = true};
};

namespace detail {

inline void check_spec(const CorpusSpec& spec) {
  if (spec.span < 0 || spec.span > kSpanCap) {
    throw PreconditionError("span " + std::to_string(spec.span) + " outside 0.." +
                            std::to_string(kSpanCap));
  }
  if (spec.r_min < 1 || spec.r_max < spec.r_min) throw PreconditionError("bad length range");
  if (spec.n_min < 1 || spec.n_max < spec.n_min) throw PreconditionError("bad rank range");
  if (!spec.translation_normalized) {
    throw PreconditionError("only translation-normalized enumeration is finite");
  }
}

/// Filter that is inherited by every prefix, so it can prune the search.
inline bool prefix_ok(const Snake& s, const CorpusFilters& f) {
  if (!(f.stable || f.connected || f.prime)) return true;
  auto c = classify(s);
  if (f.prime) return c.prime;
  if (f.connected) return c.connected;
  return c.stable;
}

inline bool final_ok(const Snake& s, const CorpusFilters& f) {
  if (!prefix_ok(s, f)) return false;
  if (f.boundary && !is_boundary(s)) return false;
  return true;
}

inline std::vector<Interval> candidate_intervals(int span, Rank n) {
  std::vector<Interval> out;
  for (int i = 0; i <= span; ++i) {
    for (int j = i + 1; j <= span && j - i < n.wrap(); ++j) out.push_back({i, j});
  }
  return out;
}

}  // namespace detail

/// Calls `fn` on every snake in the corpus, ordered by rank, then length,
/// then lexicographically. Returning false from `fn` stops the walk.
inline void for_each_snake(const CorpusSpec& spec, const std::function<bool(const Snake&)>& fn) {
  detail::check_spec(spec);
  bool stop = false;
  for (int nv = spec.n_min; nv <= spec.n_max && !stop; ++nv) {
    const Rank n(nv);
    const auto cands = detail::candidate_intervals(spec.span, n);
    for (int r = spec.r_min; r <= spec.r_max && !stop; ++r) {
      std::vector<Interval> cur;
      std::function<void()> dfs = [&]() {
        if (stop) return;
        if (static_cast<int>(cur.size()) == r) {
          int i_min = cur.front().left;
          for (const auto& iv : cur) i_min = std::min(i_min, iv.left);
          if (i_min != 0) return;
          Snake s(cur, n);
          if (detail::final_ok(s, spec.filters) && !fn(s)) stop = true;
          return;
        }
        for (const auto& iv : cands) {
          cur.push_back(iv);
          if (detail::prefix_ok(Snake(cur, n), spec.filters)) dfs();
          cur.pop_back();
          if (stop) return;
        }
      };
      dfs();
    }
  }
}

inline std::vector<Snake> enumerate_snakes(const CorpusSpec& spec) {
  std::vector<Snake> out;
  for_each_snake(spec, [&](const Snake& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

/// A random corpus member, deterministic in `seed`. Builds the tuple one
/// interval at a time among prefix-valid candidates and restarts on dead
/// ends or when the final filters reject.
inline Snake random_snake(std::uint64_t seed, const CorpusSpec& spec, int budget = 100000) {
  detail::check_spec(spec);
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int attempt = 0; attempt < budget; ++attempt) {
    const Rank n(pick(spec.n_min, spec.n_max));
    const int r = pick(spec.r_min, spec.r_max);
    const auto cands = detail::candidate_intervals(spec.span, n);
    std::vector<Interval> cur;
    bool dead = false;
    while (static_cast<int>(cur.size()) < r && !dead) {
      std::vector<Interval> ok;
      for (const auto& iv : cands) {
        cur.push_back(iv);
        if (detail::prefix_ok(Snake(cur, n), spec.filters)) ok.push_back(iv);
        cur.pop_back();
      }
      if (ok.empty()) {
        dead = true;
      } else {
        cur.push_back(ok[static_cast<std::size_t>(pick(0, static_cast<int>(ok.size()) - 1))]);
      }
    }
    if (dead) continue;
    Snake s(cur, n);
    int i_min = extremes(s).i_min;
    s = translate(s, -i_min);
    if (extremes(s).j_max > spec.span) continue;
    if (detail::final_ok(s, spec.filters)) return s;
  }
  throw PreconditionError("random_snake: rejection budget exhausted");
}

/// Every multiset of pr/fr weights whose product is `w`. Each multiset is
/// sorted; the list is in lexicographic order.
inline std::vector<std::vector<MonoidElement>> oracle_factorizations(const MonoidElement& w,
                                                                     const PrimeCatalog& catalog,
                                                                     int cap = 4) {
  if (w.height() > cap) {
    throw PreconditionError("oracle cap exceeded: height " + std::to_string(w.height()) + " > " +
                            std::to_string(cap));
  }
  std::vector<MonoidElement> pool;
  for (const auto* d : catalog.all()) {
    if (divides(d->weight, w)) pool.push_back(d->weight);
  }
  std::vector<std::vector<MonoidElement>> out;
  std::vector<MonoidElement> cur;
  std::function<void(const MonoidElement&, std::size_t)> rec = [&](const MonoidElement& left,
                                                                    std::size_t from) {
    if (left.is_identity()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < pool.size(); ++k) {
      auto q = quotient(left, pool[k]);
      if (!q) continue;
      cur.push_back(pool[k]);
      rec(*q, k);
      cur.pop_back();
    }
  };
  rec(w, 0);
  return out;
}

inline std::vector<std::vector<MonoidElement>> oracle_factorizations(const MonoidElement& w,
                                                                     const Snake& s, int cap = 4) {
  PrimeCatalog catalog(s);
  return oracle_factorizations(w, catalog, cap);
}

/// Every element of the submonoid generated by `gens` with height in
/// [1, max_height], as sorted multisets, in deterministic order.
inline void for_each_element(const IntervalSet& gens, Rank n, int max_height,
                             const std::function<void(const MonoidElement&)>& fn) {
  std::vector<Interval> pool(gens.begin(), gens.end());
  MonoidElement cur(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int height) {
    if (height > 0) fn(cur);
    if (height == max_height) return;
    for (std::size_t k = from; k < pool.size(); ++k) {
      MonoidElement saved = cur;
      cur.multiply(pool[k]);
      rec(k, height + 1);
      cur = saved;
    }
  };
  rec(0, 0);
}

}  // namespace snakealg
