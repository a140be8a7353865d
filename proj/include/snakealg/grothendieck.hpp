#pragma once

// Formal integer combinations of irreducible classes and the three-term
// exchange relation attached to a prime snake.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snakealg/core.hpp"
#include "snakealg/factorizer.hpp"
#include "snakealg/snakes.hpp"

namespace snakealg {

/// Class of the simple object indexed by `omega`, with its canonical
/// factor weights over the ambient snake.
struct IrredClass {
  MonoidElement omega;
  std::vector<MonoidElement> factors;

  friend bool operator==(const IrredClass& a, const IrredClass& b) { return a.omega == b.omega; }
};

struct RingElement {
  std::map<MonoidElement, long> terms;  // no zero coefficients

  void add(const MonoidElement& w, long coeff) {
    auto& c = terms[w];
    c += coeff;
    if (c == 0) terms.erase(w);
  }
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

inline IrredClass make_class(Factorizer& fz, const MonoidElement& w, const Snake& s) {
  return {w, fz.factor_weights(w, s)};
}

/// Sum over generators of e_{i mod (n+1)} - e_{j mod (n+1)}. Trivial
/// generators contribute zero, so this is well defined on the monoid and
/// is the conserved quantity of the exchange relation.
inline std::vector<int> endpoint_charge(const MonoidElement& w) {
  const int m = w.rank().wrap();
  std::vector<int> out(static_cast<std::size_t>(m), 0);
  auto mod = [m](int x) { return static_cast<std::size_t>(((x % m) + m) % m); };
  for (const auto& [iv, e] : w.terms()) {
    out[mod(iv.left)] += e;
    out[mod(iv.right)] -= e;
  }
  return out;
}

/// Raw endpoint multiset of the tuple before normalization.
inline std::pair<std::vector<int>, std::vector<int>> endpoint_multiset(
    const std::vector<Interval>& ivs) {
  std::vector<int> lefts, rights;
  for (const auto& iv : ivs) {
    lefts.push_back(iv.left);
    rights.push_back(iv.right);
  }
  std::sort(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());
  return {lefts, rights};
}

struct ExchangeTriple {
  Snake snake;
  IrredClass left_first;   // [i1,j1]
  IrredClass left_second;  // positions 2..r
  IrredClass term1;        // the whole snake
  IrredClass term2;        // [i2,j1][i1,j2] * positions 3..r
  std::vector<MonoidElement> term2_groups;  // predicted prime factors
  bool third_split = false;                 // i1 = i4 or j1 = j4 refinement used
  std::vector<Interval> left_raw, term2_raw;
};

inline ExchangeTriple exchange_triple(Factorizer& fz, const Snake& s) {
  require_prime(s);
  const int r = s.size();
  if (r < 2) throw PreconditionError("exchange relation needs length >= 2");
  const Rank n = s.rank();
  const int e1 = epsilon_sequence(s).front();
  const Interval g21{s.left(2), s.right(1)};
  const Interval g12{s.left(1), s.right(2)};

  auto tail_weight = [&](int from) {
    MonoidElement w(n);
    for (int q = from; q <= r; ++q) w.multiply(s.at(q));
    return w;
  };

  ExchangeTriple t{s,
                   make_class(fz, MonoidElement::generator(s.at(1), n), s),
                   make_class(fz, tail_weight(2), s),
                   make_class(fz, s.weight(), s),
                   {MonoidElement(n), {}},
                   {},
                   false,
                   {},
                   {}};

  MonoidElement w2 = product(MonoidElement::generator(g21, n), MonoidElement::generator(g12, n));
  w2 = product(w2, tail_weight(3));
  t.term2 = make_class(fz, w2, s);

  t.left_raw = {s.intervals().begin(), s.intervals().end()};
  t.term2_raw = {g21, g12};
  for (int q = 3; q <= r; ++q) t.term2_raw.push_back(s.at(q));

  const Interval lone = e1 == 0 ? g21 : g12;
  const Interval joined = e1 == 0 ? g12 : g21;
  std::vector<MonoidElement> groups;
  groups.push_back(MonoidElement::generator(lone, n));
  if (r >= 4 && (s.left(1) == s.left(4) || s.right(1) == s.right(4))) {
    t.third_split = true;
    groups.push_back(product(MonoidElement::generator(joined, n),
                             MonoidElement::generator(s.at(3), n)));
    groups.push_back(tail_weight(4));
  } else {
    groups.push_back(product(MonoidElement::generator(joined, n), tail_weight(3)));
  }
  for (auto& g : groups) {
    if (!g.is_identity()) t.term2_groups.push_back(g);
  }
  std::sort(t.term2_groups.begin(), t.term2_groups.end());
  return t;
}

inline ExchangeTriple exchange_triple(const Snake& s) {
  Factorizer fz;
  return exchange_triple(fz, s);
}

/// The relation as a ring element: left product = term1 + term2.
inline RingElement exchange_rhs(const ExchangeTriple& t) {
  RingElement out;
  out.add(t.term1.omega, 1);
  out.add(t.term2.omega, 1);
  return out;
}

/// Endpoint-charge conservation across the relation, plus equality of raw
/// endpoint multisets before normalization.
inline bool exchange_conserves_weight(const ExchangeTriple& t) {
  auto left = product(t.left_first.omega, t.left_second.omega);
  auto c = endpoint_charge(left);
  return c == endpoint_charge(t.term1.omega) && c == endpoint_charge(t.term2.omega) &&
         endpoint_multiset(t.left_raw) == endpoint_multiset(t.term2_raw);
}

/// The predicted grouping of term2 agrees with its canonical factorization.
inline bool exchange_groups_match(const ExchangeTriple& t) {
  return t.term2.factors == t.term2_groups;
}

struct ClassProduct {
  bool determined = false;
  RingElement value;
  std::string rule;  // "identity", "compatible", "exchange", "undetermined"
};

/// Product of two classes over `s`, when forced by compatibility or by an
/// exchange relation of a contiguous subsnake of `s`.
inline ClassProduct multiply_classes(Factorizer& fz, const IrredClass& c1, const IrredClass& c2,
                                     const Snake& s) {
  ClassProduct out;
  const Rank n = s.rank();
  if (c1.omega.is_identity() || c2.omega.is_identity()) {
    out.determined = true;
    out.rule = "identity";
    out.value.add(c1.omega.is_identity() ? c2.omega : c1.omega, 1);
    return out;
  }
  auto joint = product(c1.omega, c2.omega);
  auto merged = c1.factors;
  merged.insert(merged.end(), c2.factors.begin(), c2.factors.end());
  std::sort(merged.begin(), merged.end());
  if (fz.factor_weights(joint, s) == merged) {
    out.determined = true;
    out.rule = "compatible";
    out.value.add(joint, 1);
    return out;
  }
  const int r = s.size();
  for (int first = 1; first <= r; ++first) {
    for (int last = first + 1; last <= r; ++last) {
      Snake sub = subsnake(s, first, last);
      auto head = MonoidElement::generator(sub.at(1), n);
      MonoidElement rest(n);
      for (int q = 2; q <= sub.size(); ++q) rest.multiply(sub.at(q));
      bool hit = (c1.omega == head && c2.omega == rest) || (c2.omega == head && c1.omega == rest);
      if (!hit) continue;
      auto t = exchange_triple(fz, sub);
      out.determined = true;
      out.rule = "exchange";
      out.value = exchange_rhs(t);
      return out;
    }
  }
  out.rule = "undetermined";
  return out;
}

}  // namespace snakealg
