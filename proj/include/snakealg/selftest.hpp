#pragma once

// The eight acceptance suites, shared by the acceptance test binary and
// the `selftest` command.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "snakealg/explorer.hpp"
#include "snakealg/factorizer.hpp"
#include "snakealg/grothendieck.hpp"
#include "snakealg/heightmap.hpp"
#include "snakealg/isomorph.hpp"
#include "snakealg/primesets.hpp"
#include "snakealg/snakes.hpp"

namespace snakealg {

struct SelftestScale {
  int span = 9;
  int r_max = 5;
  int factor_r_max = 4;
  int factor_height = 5;
  int oracle_r_max = 3;
  int oracle_height = 4;
  int reflect_height = 3;
  int iso_height = 4;
  int iso_pairs_min = 200;
  int omegas_per_pair = 20;
  int omegas_cap = 40;
  int per_group_pairs = 8;
  double enumeration_limit_s = 300;
  double factor_limit_s = 900;

  static SelftestScale desk() { return {}; }
  static SelftestScale quick() {
    SelftestScale s;
    s.span = 6;
    s.r_max = 4;
    s.factor_r_max = 3;
    s.factor_height = 3;
    s.oracle_height = 3;
    s.reflect_height = 2;
    s.iso_height = 3;
    s.iso_pairs_min = 20;
    s.omegas_per_pair = 10;
    s.omegas_cap = 15;
    s.per_group_pairs = 3;
    return s;
  }
};

struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = false;
  long checked = 0;
  long failures = 0;
  std::vector<std::string> witnesses;
  std::string note;
  double seconds = 0;
};

namespace detail {

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::function<std::string()>& witness) {
    ++r_.checked;
    if (ok) return;
    ++r_.failures;
    if (r_.witnesses.size() < 5) r_.witnesses.push_back(witness());
  }
  void fail(const std::string& witness) {
    check(false, [&] { return witness; });
  }

 private:
  SuiteResult& r_;
};

inline IntervalSet reflect_set(const IntervalSet& set) {
  IntervalSet out;
  for (const auto& iv : set) out.insert(reflect(iv));
  return out;
}

inline std::set<MonoidElement> weights(const std::vector<PrimeDescriptor>& ds, bool reflected) {
  std::set<MonoidElement> out;
  for (const auto& d : ds) out.insert(reflected ? reflect(d.weight) : d.weight);
  return out;
}

inline std::vector<MonoidElement> sorted(std::vector<MonoidElement> ws) {
  std::sort(ws.begin(), ws.end());
  return ws;
}

}  // namespace detail

class Selftest {
 public:
  explicit Selftest(SelftestScale scale = SelftestScale::desk()) : scale_(scale) {}

  const SelftestScale& scale() const { return scale_; }

  /// Prime, translation-normalized snakes with r <= r_max and span <= span.
  const std::vector<Snake>& corpus() {
    if (corpus_.empty()) {
      CorpusSpec spec;
      spec.r_max = scale_.r_max;
      spec.span = scale_.span;
      spec.n_max = scale_.span;
      corpus_ = enumerate_snakes(spec);
    }
    return corpus_;
  }

  SuiteResult run(int id) {
    using Clock = std::chrono::steady_clock;
    SuiteResult r;
    r.id = id;
    auto t0 = Clock::now();
    switch (id) {
      case 1: worked_example(r); break;
      case 2: enumeration(r); break;
      case 3: closure(r); break;
      case 4: factorization(r); break;
      case 5: reflection(r); break;
      case 6: transport(r); break;
      case 7: height(r); break;
      case 8: exchange(r); break;
      default: throw PreconditionError("no suite " + std::to_string(id));
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (id == 1 && r.seconds >= 1.0) r.note += " over the 1 s budget;";
    if (id == 2 && r.seconds >= scale_.enumeration_limit_s) r.note += " over time budget;";
    if (id == 4 && r.seconds >= scale_.factor_limit_s) r.note += " over time budget;";
    r.passed = r.failures == 0 && r.checked > 0 && r.note.find("over") == std::string::npos &&
               r.note.find("too few") == std::string::npos;
    return r;
  }

  std::vector<SuiteResult> run_all() {
    std::vector<SuiteResult> out;
    for (int id = 1; id <= 8; ++id) out.push_back(run(id));
    return out;
  }

  static const Snake& s_star() {
    static const Snake s = parse_snake("[(0,6),(-1,4),(2,5),(1,3),(3,4)] @ n=6");
    return s;
  }
  static const Snake& s_two() {
    static const Snake s = parse_snake("[(0,2),(-1,1)] @ n=3");
    return s;
  }

 private:
  void worked_example(SuiteResult& r) {
    r.name = "worked example";
    detail::Tally t(r);
    const Snake& s = s_star();
    auto h = height_profile(s);
    t.check(h.N == 6, [&] { return "N = " + std::to_string(h.N); });
    t.check(h.p == std::vector<int>{1, 2, 3, 5, 6}, [] { return std::string("p-sequence"); });
    t.check(h.xi == std::vector<int>{7, 6, 7, 6, 5, 6}, [] { return std::string("xi values"); });
    const IntervalSet expect{{3, 4}, {2, 3}, {2, 4},  {1, 3}, {2, 5}, {1, 4},
                             {1, 5}, {0, 4}, {0, 5}, {-1, 4}, {0, 6}, {-1, 5}};
    t.check(interval_set_xi(h) == expect, [] { return std::string("interval set of xi"); });
    t.check(interval_set(s) == expect, [] { return std::string("interval set of the snake"); });
    t.check(snake_of_xi(h) == s, [&] { return "snake of xi = " + format(snake_of_xi(h)); });
    t.check(omega_pair(h, 2, 3) == parse_monoid("w{1,3}*w{2,5}", Rank(6)),
            [&] { return "omega(2,3) = " + format(omega_pair(h, 2, 3)); });
  }

  void enumeration(SuiteResult& r) {
    r.name = "endpoint chains";
    detail::Tally t(r);
    for (const auto& s : corpus()) {
      auto f = enumeration_failure(s);
      t.check(!f, [&] { return format(s) + ": " + *f; });
    }
    r.note = std::to_string(corpus().size()) + " prime snakes;";
  }

  void closure(SuiteResult& r) {
    r.name = "closure and boundary identity";
    detail::Tally t(r);
    long boundary = 0;
    for (const auto& s : corpus()) {
      if (s.size() < 3) continue;
      t.check(closure_check(s), [&] { return "closure: " + format(s); });
      if (is_boundary(s)) {
        ++boundary;
        t.check(boundary_set_identity(s), [&] { return "boundary identity: " + format(s); });
      }
    }
    r.note = std::to_string(boundary) + " boundary snakes;";
  }

  void factorization(SuiteResult& r) {
    r.name = "factorization soundness";
    detail::Tally t(r);
    long elements = 0, oracle_runs = 0;
    for (const auto& s : corpus()) {
      if (s.size() > scale_.factor_r_max) continue;
      Factorizer fz;
      const auto& cat = fz.catalog(s);
      for (const auto* d : cat.all()) {
        std::vector<MonoidElement> f;
        try {
          f = fz.factor_weights(d->weight, s);
        } catch (const Error& e) {
          t.fail(format(s) + " fixed point " + format(d->weight) + ": " + e.what());
          continue;
        }
        t.check(f.size() == 1 && f[0] == d->weight,
                [&] { return format(s) + " not a fixed point: " + format(d->weight); });
      }
      const bool oracle = s.size() <= scale_.oracle_r_max;
      for_each_element(fz.generators(s), s.rank(), scale_.factor_height,
                       [&](const MonoidElement& w) {
                         ++elements;
                         std::vector<MonoidElement> f;
                         try {
                           f = fz.factor_weights(w, s);
                         } catch (const Error& e) {
                           t.fail(format(s) + " " + format(w) + ": " + e.what());
                           return;
                         }
                         MonoidElement prod(s.rank());
                         bool members = true;
                         for (const auto& x : f) {
                           prod = product(prod, x);
                           members = members && cat.contains(x);
                         }
                         t.check(prod == w, [&] { return "weight: " + format(s) + " " + format(w); });
                         t.check(members, [&] { return "catalog: " + format(s) + " " + format(w); });
                         if (oracle && w.height() <= scale_.oracle_height) {
                           ++oracle_runs;
                           auto cands = oracle_factorizations(w, cat, scale_.oracle_height);
                           t.check(std::find(cands.begin(), cands.end(), f) != cands.end(),
                                   [&] { return "oracle: " + format(s) + " " + format(w); });
                         }
                       });
    }
    r.note = std::to_string(elements) + " elements, " + std::to_string(oracle_runs) +
             " oracle comparisons;";
  }

  void reflection(SuiteResult& r) {
    r.name = "reflection equivariance";
    detail::Tally t(r);
    auto same_class = [](const Snake& s, const Snake& u) {
      auto a = classify(s), b = classify(u);
      if (a.stable != b.stable || a.connected != b.connected || a.prime != b.prime) return false;
      if (a.eps.has_value() != b.eps.has_value()) return false;
      if (!a.eps) return true;
      if (s.size() == 1) return *a.eps == *b.eps;
      for (std::size_t k = 0; k < a.eps->size(); ++k) {
        if ((*a.eps)[k] + (*b.eps)[k] != 1) return false;
      }
      return true;
    };
    CorpusSpec all;
    all.r_max = 3;
    all.span = std::min(scale_.span, 5);
    all.n_max = all.span;
    all.filters = {};
    for_each_snake(all, [&](const Snake& s) {
      t.check(same_class(s, reflect(s)), [&] { return "classify: " + format(s); });
      return true;
    });
    Factorizer fz;
    for (const auto& s : corpus()) {
      const Snake u = reflect(s);
      t.check(same_class(s, u), [&] { return "classify: " + format(s); });
      t.check(is_boundary(s) == is_boundary(u), [&] { return "boundary: " + format(s); });
      if (s.size() >= 3) {
        t.check(interval_set(u) == detail::reflect_set(interval_set(s)),
                [&] { return "interval set: " + format(s); });
      }
      t.check(detail::weights(pr_set(u), false) == detail::weights(pr_set(s), true),
              [&] { return "pr: " + format(s); });
      t.check(detail::weights(fr_set(u), false) == detail::weights(fr_set(s), true),
              [&] { return "fr: " + format(s); });
      for_each_element(fz.generators(s), s.rank(), scale_.reflect_height,
                       [&](const MonoidElement& w) {
                         std::vector<MonoidElement> mirrored;
                         for (const auto& x : fz.factor_weights(w, s)) mirrored.push_back(reflect(x));
                         t.check(fz.factor_weights(reflect(w), u) == detail::sorted(mirrored),
                                 [&] { return "factor: " + format(s) + " " + format(w); });
                       });
    }
  }

  void transport(SuiteResult& r) {
    r.name = "isomorphism transport";
    detail::Tally t(r);
    std::vector<std::pair<Snake, Snake>> pairs;
    long xi_pairs = 0, xi_skipped = 0;
    for (const auto& s : corpus()) {
      if (s.size() < 3) continue;
      Snake x = snake_of_xi(s);
      if (check_iso_conditions(s, x)) {
        pairs.emplace_back(s, x);
        ++xi_pairs;
      } else {
        ++xi_skipped;
        t.check(!is_boundary(s), [&] { return "boundary snake not isomorphic: " + format(s); });
      }
    }
    std::map<std::vector<int>, std::vector<Snake>> groups;
    for (const auto& s : corpus()) {
      if (s.size() < 2) continue;
      const int r = s.size();
      std::vector<int> sig{r, epsilon_sequence(s).front()};
      for (int m = 2; m <= r - 2; ++m) {
        sig.push_back(s.left(m - 1) == s.left(m + 2));
        sig.push_back(s.right(m - 1) == s.right(m + 2));
      }
      auto gens = generator_set(s);
      for (int m = 1; m <= r; ++m) {
        for (int l = 1; l <= r; ++l) sig.push_back(gens.contains({s.left(m), s.right(l)}));
      }
      groups[sig].push_back(s);
    }
    for (const auto& [sig, members] : groups) {
      const int k_max = std::min<int>(static_cast<int>(members.size()) - 1, scale_.per_group_pairs);
      for (int k = 1; k <= k_max; ++k) pairs.emplace_back(members[0], members[static_cast<std::size_t>(k)]);
    }

    Factorizer fz;
    long used = 0, omegas = 0;
    std::mt19937_64 rng(20240611);
    for (const auto& [s, u] : pairs) {
      if (!check_iso_conditions(s, u)) {
        t.fail("conditions fail for " + format(s) + " -> " + format(u));
        continue;
      }
      std::vector<MonoidElement> pool;
      for_each_element(fz.generators(s), s.rank(), scale_.iso_height,
                       [&](const MonoidElement& w) { pool.push_back(w); });
      if (static_cast<int>(pool.size()) < scale_.omegas_per_pair) continue;
      std::shuffle(pool.begin(), pool.end(), rng);
      if (static_cast<int>(pool.size()) > scale_.omegas_cap) {
        pool.erase(pool.begin() + scale_.omegas_cap, pool.end());
      }
      ++used;
      try {
        SnakeIso iso(s, u), back(u, s);
        for (const auto& [a, b] : iso.generator_map()) {
          t.check(back.image(b) == a, [&] { return "inverse: " + format(s) + " " + to_string(a); });
        }
        t.check(descriptor_map_check(iso), [&] { return "pr/fr image: " + format(s) + " -> " + format(u); });
        for (const auto& w : pool) {
          ++omegas;
          t.check(eta(iso, w).height() == w.height(), [&] { return "height: " + format(w); });
          t.check(transport_check(fz, iso, w),
                  [&] { return "transport: " + format(s) + " -> " + format(u) + " " + format(w); });
        }
      } catch (const Error& e) {
        t.fail(format(s) + " -> " + format(u) + ": " + e.what());
      }
    }
    r.note = std::to_string(used) + " pairs (" + std::to_string(xi_pairs) + " snake/xi-snake pairs, " +
             std::to_string(xi_skipped) + " non-boundary snakes not isomorphic to theirs), " +
             std::to_string(omegas) + " elements;";
    if (used < scale_.iso_pairs_min) r.note += " too few pairs;";
  }

  void height(SuiteResult& r) {
    r.name = "height function identities";
    detail::Tally t(r);
    std::map<std::pair<EpsilonSequence, std::vector<int>>, std::vector<int>> by_data;
    for (const auto& s : corpus()) {
      if (s.size() < 3) continue;
      try {
        auto h = height_profile(s);
        t.check(h.p.back() == h.N, [&] { return "p_r != N: " + format(s); });
        t.check(!height_failure(h), [&] { return "height: " + format(s); });
        auto [it, fresh] = by_data.emplace(std::make_pair(h.eps, h.p), h.xi);
        t.check(fresh || it->second == h.xi, [&] { return "xi not determined by data: " + format(s); });
        Snake x = snake_of_xi(h);
        t.check(is_prime(x), [&] { return "snake of xi not prime: " + format(s); });
        auto e = extremes(x);
        t.check(e.j_min == e.i_max && e.j_max - e.i_min == h.N + 1,
                [&] { return "extremes of snake of xi: " + format(s); });
        t.check(interval_set_xi(h) == interval_set(x), [&] { return "interval sets: " + format(s); });
        t.check(snake_of_xi(x) == x, [&] { return "idempotence: " + format(s); });
        auto bij = pr_bijection(h);
        t.check(bij.ok(), [&] { return "pr bijection: " + format(s) + ": " + *bij.failure; });
        t.check(bij.composed == is_boundary(s), [&] { return "composition: " + format(s); });
      } catch (const Error& e) {
        t.fail(format(s) + ": " + e.what());
      }
    }
  }

  void exchange(SuiteResult& r) {
    r.name = "exchange relations";
    detail::Tally t(r);
    Factorizer fz;
    {
      const Snake& s = s_two();
      const Rank n = s.rank();
      auto x = exchange_triple(fz, s);
      auto gen = [&](int i, int j) { return MonoidElement::generator({i, j}, n); };
      t.check(x.left_first.omega == gen(0, 2) && x.left_second.omega == gen(-1, 1),
              [] { return std::string("two-interval left side"); });
      t.check(x.term1.omega == product(gen(0, 2), gen(-1, 1)),
              [] { return std::string("two-interval first term"); });
      t.check(x.term2.omega == product(gen(0, 1), gen(-1, 2)),
              [] { return std::string("two-interval second term"); });
      t.check(x.term2.factors == detail::sorted({gen(0, 1), gen(-1, 2)}),
              [] { return std::string("two-interval second term split"); });
      auto p = multiply_classes(fz, x.left_first, x.left_second, s);
      t.check(p.rule == "exchange" && p.value == exchange_rhs(x),
              [] { return std::string("two-interval product"); });
    }
    for (const auto& s : corpus()) {
      if (s.size() < 2) continue;
      try {
        auto x = exchange_triple(fz, s);
        t.check(exchange_conserves_weight(x), [&] { return "conservation: " + format(s); });
        t.check(exchange_groups_match(x), [&] { return "second term split: " + format(s); });
        auto p = multiply_classes(fz, x.left_first, x.left_second, s);
        auto q = multiply_classes(fz, x.left_second, x.left_first, s);
        t.check(p.rule == "exchange" && p.value == exchange_rhs(x) && q.value == p.value,
                [&] { return "class product: " + format(s); });
      } catch (const Error& e) {
        t.fail(format(s) + ": " + e.what());
      }
    }
  }

  SelftestScale scale_;
  std::vector<Snake> corpus_;
};

}  // namespace snakealg
