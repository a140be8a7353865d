#pragma once

// Canonical factorization of a monoid element of I_n^+(s) into weights of
// pr(s) and fr(s) descriptors.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "snakealg/core.hpp"
#include "snakealg/primesets.hpp"
#include "snakealg/snakes.hpp"
#include "snakealg/text.hpp"

namespace snakealg {

/// The word of `w` ordered by decreasing endpoint sum, ties lexicographic.
inline std::vector<Interval> canonical_order(const MonoidElement& w) {
  auto word = w.word();
  std::stable_sort(word.begin(), word.end(), [](const Interval& a, const Interval& b) {
    return a.left + a.right > b.left + b.right;
  });
  return word;
}

/// True when every earlier/later pair of `word` is not connected or has
/// weakly decreasing endpoint sum.
inline bool is_canonically_ordered(const std::vector<Interval>& word, Rank n) {
  for (std::size_t a = 0; a < word.size(); ++a) {
    for (std::size_t b = a + 1; b < word.size(); ++b) {
      if (connected_pair(word[a], word[b], n) &&
          word[a].left + word[a].right < word[b].left + word[b].right) {
        return false;
      }
    }
  }
  return true;
}

/// w = g1^a1 g2^a2 g3^a3 g4^b * rest with rest in the submonoid of s(1,r).
struct Profile {
  int a1 = 0, a2 = 0, a3 = 0, b = 0;
  MonoidElement rest;
};

/// The four distinguished generators of a snake of length >= 3.
struct LeadGenerators {
  Interval g1, g2, g3, g4;
};

inline LeadGenerators lead_generators(const Snake& s, const EpsilonSequence& eps) {
  const int e = eps.front();
  return {{s.left(1), s.right(1)},
          {s.left(1 + e), s.right(2 - e)},
          {s.left(1 + 2 * e), s.right(3 - 2 * e)},
          {s.left(2 - e), s.right(1 + e)}};
}

struct Factorization {
  std::vector<PrimeDescriptor> factors;

  MonoidElement weight(Rank n) const {
    MonoidElement out(n);
    for (const auto& d : factors) out = product(out, d.weight);
    return out;
  }
  std::vector<MonoidElement> weights() const {
    std::vector<MonoidElement> out;
    for (const auto& d : factors) out.push_back(d.weight);
    return out;
  }
};

/// Factorization engine with per-snake caches of the prime sets. Not
/// thread-safe; use one instance per thread.
class Factorizer {
 public:
  Profile extract_profile(const MonoidElement& w, const Snake& s) {
    const auto& data = lookup(s);
    if (s.size() < 3) throw PreconditionError("profile needs length >= 3");
    if (!member(w, data)) throw PreconditionError(format(w) + " not in the submonoid of " + format(s));
    const auto& sub = lookup(subsnake(s, 2, s.size()));
    if (member(w, sub)) throw PreconditionError(format(w) + " already lies in the tail submonoid");
    return profile(w, data, sub);
  }

  Factorization factor(const MonoidElement& w, const Snake& s) {
    const auto& data = lookup(s);
    if (!member(w, data)) {
      throw PreconditionError(format(w) + " not in the submonoid of " + format(s));
    }
    Factorization out;
    for (const auto& fw : weights_of(w, s)) {
      const auto* d = data.catalog->find(fw);
      out.factors.push_back(*d);
    }
    return out;
  }

  /// Factor weights only, sorted.
  std::vector<MonoidElement> factor_weights(const MonoidElement& w, const Snake& s) {
    const auto& data = lookup(s);
    if (!member(w, data)) {
      throw PreconditionError(format(w) + " not in the submonoid of " + format(s));
    }
    return weights_of(w, s);
  }

  bool compatible_product(const Factorization& f1, const Factorization& f2, const Snake& s) {
    auto joined = f1.weights();
    auto w2 = f2.weights();
    joined.insert(joined.end(), w2.begin(), w2.end());
    MonoidElement w(s.rank());
    for (const auto& x : joined) w = product(w, x);
    std::sort(joined.begin(), joined.end());
    return factor_weights(w, s) == joined;
  }

  const PrimeCatalog& catalog(const Snake& s) { return *lookup(s).catalog; }
  const IntervalSet& generators(const Snake& s) { return lookup(s).gens; }

 private:
  struct SnakeData {
    Snake snake;
    EpsilonSequence eps;
    IntervalSet gens;
    std::unique_ptr<PrimeCatalog> catalog;
  };

  const SnakeData& lookup(const Snake& s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return *it->second;
    require_prime(s);
    auto data = std::make_unique<SnakeData>(
        SnakeData{s, epsilon_sequence(s), generator_set(s), std::make_unique<PrimeCatalog>(s)});
    return *cache_.emplace(s, std::move(data)).first->second;
  }

  static bool member(const MonoidElement& w, const SnakeData& d) {
    if (w.rank() != d.snake.rank()) return false;
    return std::all_of(w.terms().begin(), w.terms().end(),
                       [&](const auto& t) { return d.gens.contains(t.first); });
  }

  static Profile profile(const MonoidElement& w, const SnakeData& data, const SnakeData& sub) {
    auto g = lead_generators(data.snake, data.eps);
    Profile p{0, 0, 0, 0, MonoidElement(w.rank())};
    for (const auto& [iv, e] : w.terms()) {
      if (sub.gens.contains(iv)) {
        p.rest.multiply(iv, e);
      } else if (iv == g.g1) {
        p.a1 = e;
      } else if (iv == g.g2) {
        p.a2 = e;
      } else if (iv == g.g3) {
        p.a3 = e;
      } else if (iv == g.g4) {
        p.b = e;
      } else {
        throw InvariantViolation("generator " + to_string(iv) + " of " + format(w) +
                                 " is neither a lead generator nor in the tail of " +
                                 format(data.snake));
      }
    }
    return p;
  }

  std::vector<MonoidElement> weights_of(const MonoidElement& w, const Snake& s) {
    const auto& data = lookup(s);
    std::vector<MonoidElement> out;
    if (s.size() >= 2 && data.eps.front() == 1) {
      for (const auto& fw : weights_of(reflect(w), reflect(s))) out.push_back(reflect(fw));
    } else {
      out = ledger(w, data);
    }
    for (const auto& fw : out) {
      if (!data.catalog->contains(fw)) {
        throw InvariantViolation("factor " + format(fw) + " of " + format(w) +
                                 " is not a prime descriptor of " + format(s));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  static MonoidElement gen(const Interval& iv, Rank n, int e = 1) {
    return MonoidElement::generator(iv, n, e);
  }

  static MonoidElement divide(const MonoidElement& a, const MonoidElement& b) {
    auto q = quotient(a, b);
    if (!q) throw InvariantViolation(format(b) + " does not divide " + format(a));
    return *q;
  }

  /// The case ledger for a snake whose first bit is 0.
  std::vector<MonoidElement> ledger(MonoidElement w, const SnakeData& data) {
    const Snake& s = data.snake;
    const Rank n = s.rank();
    const int r = s.size();
    std::vector<MonoidElement> out;
    if (w.is_identity()) return out;

    if (r == 1) {
      for (int k = 0; k < w.height(); ++k) out.push_back(gen(s.at(1), n));
      return out;
    }

    if (r == 2) {
      Interval g11 = s.at(1), g22 = s.at(2);
      Interval g12{s.left(1), s.right(2)}, g21{s.left(2), s.right(1)};
      int e11 = w.exponent(g11), e22 = w.exponent(g22);
      int paired = std::min(e11, e22);
      for (int k = 0; k < paired; ++k) out.push_back(product(gen(g11, n), gen(g22, n)));
      for (int k = paired; k < e11; ++k) out.push_back(gen(g11, n));
      for (int k = paired; k < e22; ++k) out.push_back(gen(g22, n));
      for (const auto& iv : {g12, g21}) {
        if (is_trivial(iv, n)) continue;
        for (int k = 0; k < w.exponent(iv); ++k) out.push_back(gen(iv, n));
      }
      return out;
    }

    const Snake tail = subsnake(s, 2, r);
    const auto& sub = lookup(tail);
    const auto g = lead_generators(s, data.eps);
    const Interval g22 = s.at(2);
    const Interval g23{s.left(2), s.right(3)};

    while (!w.is_identity()) {
      if (member(w, sub)) {
        auto rest = weights_of(w, tail);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
      }
      Profile p = profile(w, data, sub);

      if (p.b >= 1) {
        out.push_back(gen(g.g4, n));
        w = divide(w, out.back());
        continue;
      }
      // Also fires when [i1,j3] coincides with a tail generator (i1 = i4).
      if (w.exponent(g.g3) >= 1) {
        if (w.exponent(g22) == 0) {
          out.push_back(gen(g.g3, n));
        } else {
          out.push_back(product(gen(g.g3, n), gen(g22, n)));
        }
        w = divide(w, out.back());
        continue;
      }
      if (w.exponent(g23) >= 1) {
        if (p.a1 >= 1) {
          out.push_back(product(gen(g.g1, n), gen(g23, n)));
        } else {
          out.push_back(gen(g23, n));
        }
        w = divide(w, out.back());
        continue;
      }
      const int c = p.rest.exponent(g22);
      if (p.a1 > c) {
        for (int k = 0; k < p.a1 - c; ++k) out.push_back(gen(g.g1, n));
        w = divide(w, gen(g.g1, n, p.a1 - c));
        continue;
      }
      if (p.a2 > 0) {
        Snake hat = materialize_window(s, {1, 0, 1, r});
        if (!is_prime(hat)) {
          throw InvariantViolation("extended tail " + format(hat) + " is not prime");
        }
        MonoidElement rest = divide(p.rest, gen(g22, n, c));
        MonoidElement hat_w = product(gen(g.g2, n, p.a2), rest);
        if (!member(hat_w, lookup(hat))) {
          throw InvariantViolation(format(hat_w) + " outside the submonoid of " + format(hat));
        }
        MonoidElement taken(n);
        for (const auto& fw : weights_of(hat_w, hat)) {
          if (fw.exponent(g.g2) > 0) {
            out.push_back(fw);
            taken = product(taken, fw);
          }
        }
        w = divide(w, taken);
        continue;
      }
      finish(w, p.a1, c, data, tail, out);
      return out;
    }
    return out;
  }

  struct Special {
    MonoidElement weight;
    int l, e;
  };

  /// a2 = 0 and 1 <= a1 <= c: factor over the tail, then attach [i1,j1] to
  /// the first a1 factors containing [i2,j2] in the parity order.
  void finish(const MonoidElement& w, int a1, int c, const SnakeData& data, const Snake& tail,
              std::vector<MonoidElement>& out) {
    const Snake& s = data.snake;
    const Rank n = s.rank();
    const int r = s.size();
    const Interval g11 = s.at(1);
    const Interval g22 = s.at(2);
    if (a1 < 1 || a1 > c) {
      throw InvariantViolation("ledger exhausted on " + format(w) + " over " + format(s));
    }
    MonoidElement tilde = divide(w, gen(g11, n, a1));
    std::vector<Special> special;
    for (const auto& fw : weights_of(tilde, tail)) {
      if (fw.exponent(g22) == 0) {
        out.push_back(fw);
        continue;
      }
      bool found = false;
      for (int l = 2; l <= r && !found; ++l) {
        for (int e = 0; e <= 1 && !found; ++e) {
          if (e == 1 && l > r - 2) continue;
          if (materialize_window(s, {0, e, 0, l}).weight() == fw) {
            special.push_back({fw, l, e});
            found = true;
          }
        }
      }
      if (!found) {
        throw InvariantViolation("factor " + format(fw) + " containing " + to_string(g22) +
                                 " is not a window of " + format(s));
      }
    }
    if (static_cast<int>(special.size()) != c) {
      throw InvariantViolation("expected " + std::to_string(c) + " factors containing " +
                               to_string(g22) + ", got " + std::to_string(special.size()));
    }
    std::stable_sort(special.begin(), special.end(), [](const Special& a, const Special& b) {
      bool a_even = (a.l + a.e) % 2 == 0, b_even = (b.l + b.e) % 2 == 0;
      if (a_even != b_even) return a_even;
      int ka = 2 * a.l + a.e, kb = 2 * b.l + b.e;
      return a_even ? ka < kb : ka > kb;
    });
    for (int k = 0; k < c; ++k) {
      const auto& sp = special[static_cast<std::size_t>(k)];
      out.push_back(k < a1 ? product(gen(g11, n), sp.weight) : sp.weight);
    }
  }

  std::map<Snake, std::unique_ptr<SnakeData>> cache_;
};

inline Profile extract_profile(const MonoidElement& w, const Snake& s) {
  return Factorizer().extract_profile(w, s);
}

inline Factorization factor(const MonoidElement& w, const Snake& s) {
  return Factorizer().factor(w, s);
}

inline bool compatible_product(const Factorization& f1, const Factorization& f2, const Snake& s) {
  return Factorizer().compatible_product(f1, f2, s);
}

}  // namespace snakealg
