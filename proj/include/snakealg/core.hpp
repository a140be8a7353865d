#pragma once

// Intervals, the free commutative monoid on intervals, and interval tuples
// ("snakes"), together with the reflection and translation symmetries.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snakealg/errors.hpp"

namespace snakealg {

/// Integer interval [left, right]. Ordered lexicographically on (left, right).
struct Interval {
  int left = 0;
  int right = 0;

  constexpr int length() const { return right - left; }
  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

inline std::string to_string(const Interval& iv) {
  return "[" + std::to_string(iv.left) + "," + std::to_string(iv.right) + "]";
}

/// Rank of the underlying type-A diagram. Always >= 1.
class Rank {
 public:
  explicit Rank(int n) : n_(n) {
    if (n < 1) throw PreconditionError("rank must be >= 1, got " + std::to_string(n));
  }
  int value() const { return n_; }
  /// Length of the longest interval still carrying a generator, plus one.
  int wrap() const { return n_ + 1; }
  friend auto operator<=>(const Rank&, const Rank&) = default;

 private:
  int n_;
};

/// True when the interval fits the rank bound 0 <= length <= n+1.
inline bool fits(const Interval& iv, Rank n) {
  return iv.length() >= 0 && iv.length() <= n.wrap();
}

/// True when the generator attached to `iv` is the identity.
inline bool is_trivial(const Interval& iv, Rank n) {
  return iv.length() == 0 || iv.length() == n.wrap();
}

/// Element of the free commutative monoid generated by nontrivial intervals.
///
/// Stored as a sorted list of (interval, multiplicity) pairs with positive
/// multiplicities, so that equality is syntactic. Trivial intervals (length
/// 0 or n+1) are normalized away on insertion.
class MonoidElement {
 public:
  using Term = std::pair<Interval, int>;

  explicit MonoidElement(Rank n) : rank_(n) {}

  /// The generator attached to `iv`; identity when `iv` is trivial.
  static MonoidElement generator(const Interval& iv, Rank n, int exponent = 1) {
    MonoidElement out(n);
    out.multiply(iv, exponent);
    return out;
  }

  /// Product of the generators of every interval in `ivs`.
  static MonoidElement of_intervals(std::span<const Interval> ivs, Rank n) {
    MonoidElement out(n);
    for (const auto& iv : ivs) out.multiply(iv);
    return out;
  }

  Rank rank() const { return rank_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_identity() const { return terms_.empty(); }

  int exponent(const Interval& iv) const {
    auto it = find(iv);
    return it != terms_.end() && it->first == iv ? it->second : 0;
  }

  /// Total multiplicity of the normalized word.
  int height() const {
    int h = 0;
    for (const auto& t : terms_) h += t.second;
    return h;
  }

  /// The normalized word with multiplicity, in sorted order.
  std::vector<Interval> word() const {
    std::vector<Interval> out;
    for (const auto& [iv, e] : terms_) out.insert(out.end(), static_cast<std::size_t>(e), iv);
    return out;
  }

  /// Multiply in place by the generator of `iv` raised to `e` (e >= 0).
  MonoidElement& multiply(const Interval& iv, int e = 1) {
    if (!fits(iv, rank_)) {
      throw PreconditionError("interval " + to_string(iv) + " violates rank bound n=" +
                              std::to_string(rank_.value()));
    }
    if (e < 0) throw PreconditionError("negative exponent");
    if (e == 0 || is_trivial(iv, rank_)) return *this;
    auto it = find(iv);
    if (it != terms_.end() && it->first == iv) {
      it->second += e;
    } else {
      terms_.insert(it, Term{iv, e});
    }
    return *this;
  }

  friend bool operator==(const MonoidElement& a, const MonoidElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Total order: rank, then height, then the sorted term lists.
  friend std::strong_ordering operator<=>(const MonoidElement& a, const MonoidElement& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    if (auto c = a.height() <=> b.height(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
  }

 private:
  std::vector<Term>::iterator find(const Interval& iv) {
    return std::lower_bound(terms_.begin(), terms_.end(), iv,
                            [](const Term& t, const Interval& x) { return t.first < x; });
  }
  std::vector<Term>::const_iterator find(const Interval& iv) const {
    return std::lower_bound(terms_.begin(), terms_.end(), iv,
                            [](const Term& t, const Interval& x) { return t.first < x; });
  }

  Rank rank_;
  std::vector<Term> terms_;
};

inline MonoidElement normalize_generator(const Interval& iv, Rank n) {
  return MonoidElement::generator(iv, n);
}

inline void require_same_rank(const MonoidElement& a, const MonoidElement& b) {
  if (a.rank() != b.rank()) {
    throw PreconditionError("rank mismatch: n=" + std::to_string(a.rank().value()) +
                            " vs n=" + std::to_string(b.rank().value()));
  }
}

inline MonoidElement product(const MonoidElement& a, const MonoidElement& b) {
  require_same_rank(a, b);
  MonoidElement out = a;
  for (const auto& [iv, e] : b.terms()) out.multiply(iv, e);
  return out;
}

inline MonoidElement power(const MonoidElement& a, int k) {
  MonoidElement out(a.rank());
  for (const auto& [iv, e] : a.terms()) out.multiply(iv, e * k);
  return out;
}

/// True when every exponent of `divisor` is dominated by `a`.
inline bool divides(const MonoidElement& divisor, const MonoidElement& a) {
  require_same_rank(a, divisor);
  return std::all_of(divisor.terms().begin(), divisor.terms().end(),
                     [&](const auto& t) { return a.exponent(t.first) >= t.second; });
}

/// a * b^{-1} when it lies in the monoid, std::nullopt otherwise.
inline std::optional<MonoidElement> quotient(const MonoidElement& a, const MonoidElement& b) {
  require_same_rank(a, b);
  if (!divides(b, a)) return std::nullopt;
  MonoidElement out(a.rank());
  for (const auto& [iv, e] : a.terms()) out.multiply(iv, e - b.exponent(iv));
  return out;
}

inline int height_of(const MonoidElement& w) { return w.height(); }

/// Ordered tuple of intervals, all within the rank bound. Never empty.
class Snake {
 public:
  Snake(std::vector<Interval> intervals, Rank n) : intervals_(std::move(intervals)), rank_(n) {
    if (intervals_.empty()) throw PreconditionError("a snake needs at least one interval");
    for (const auto& iv : intervals_) {
      if (!fits(iv, rank_)) {
        throw PreconditionError("interval " + to_string(iv) + " violates rank bound n=" +
                                std::to_string(rank_.value()));
      }
    }
  }

  int size() const { return static_cast<int>(intervals_.size()); }
  Rank rank() const { return rank_; }
  std::span<const Interval> intervals() const { return intervals_; }

  /// 1-based access; throws outside [1, size()].
  const Interval& at(int p) const {
    if (p < 1 || p > size()) {
      throw PreconditionError("snake position " + std::to_string(p) + " out of range 1.." +
                              std::to_string(size()));
    }
    return intervals_[static_cast<std::size_t>(p - 1)];
  }
  bool has(int p) const { return p >= 1 && p <= size(); }
  int left(int p) const { return at(p).left; }
  int right(int p) const { return at(p).right; }

  MonoidElement weight() const { return MonoidElement::of_intervals(intervals_, rank_); }

  friend bool operator==(const Snake&, const Snake&) = default;
  friend std::strong_ordering operator<=>(const Snake& a, const Snake& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.intervals_.begin(), a.intervals_.end(),
                                                  b.intervals_.begin(), b.intervals_.end());
  }

 private:
  std::vector<Interval> intervals_;
  Rank rank_;
};

/// Positions first..last (1-based, inclusive).
inline Snake subsnake(const Snake& s, int first, int last) {
  if (first < 1 || first > last || last > s.size()) {
    throw PreconditionError("subsnake range " + std::to_string(first) + ".." +
                            std::to_string(last) + " invalid for length " +
                            std::to_string(s.size()));
  }
  auto ivs = s.intervals();
  return Snake({ivs.begin() + (first - 1), ivs.begin() + last}, s.rank());
}

/// Concatenation of interval tuples of equal rank.
inline Snake concat(const Snake& a, const Snake& b) {
  if (a.rank() != b.rank()) throw PreconditionError("rank mismatch in concatenation");
  std::vector<Interval> ivs(a.intervals().begin(), a.intervals().end());
  ivs.insert(ivs.end(), b.intervals().begin(), b.intervals().end());
  return Snake(std::move(ivs), a.rank());
}

constexpr Interval reflect(const Interval& iv) { return {-iv.right, -iv.left}; }
constexpr Interval translate(const Interval& iv, int t) { return {iv.left + t, iv.right + t}; }

inline Snake reflect(const Snake& s) {
  std::vector<Interval> ivs;
  ivs.reserve(static_cast<std::size_t>(s.size()));
  for (const auto& iv : s.intervals()) ivs.push_back(reflect(iv));
  return Snake(std::move(ivs), s.rank());
}

inline MonoidElement reflect(const MonoidElement& w) {
  MonoidElement out(w.rank());
  for (const auto& [iv, e] : w.terms()) out.multiply(reflect(iv), e);
  return out;
}

inline Snake translate(const Snake& s, int t) {
  std::vector<Interval> ivs;
  ivs.reserve(static_cast<std::size_t>(s.size()));
  for (const auto& iv : s.intervals()) ivs.push_back(translate(iv, t));
  return Snake(std::move(ivs), s.rank());
}

inline MonoidElement translate(const MonoidElement& w, int t) {
  MonoidElement out(w.rank());
  for (const auto& [iv, e] : w.terms()) out.multiply(translate(iv, t), e);
  return out;
}

/// Connected pair in the strict interleaving sense: one interval sits
/// strictly below the other at both ends, they overlap, and the hull has
/// length at most n+1. Symmetric in its arguments.
inline bool connected_pair(const Interval& a, const Interval& b, Rank n) {
  auto ordered = [n](const Interval& lo, const Interval& hi) {
    return lo.left < hi.left && hi.left <= lo.right && lo.right < hi.right &&
           hi.right - lo.left <= n.wrap();
  };
  return ordered(a, b) || ordered(b, a);
}

}  // namespace snakealg
