#pragma once

// Monoid isomorphisms between the submonoids of two prime snakes of the
// same length, given by matching endpoints index by index.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snakealg/factorizer.hpp"
#include "snakealg/primesets.hpp"
#include "snakealg/snakes.hpp"

namespace snakealg {

namespace detail {

inline void require_same_length(const Snake& s, const Snake& t) {
  require_prime(s);
  require_prime(t);
  if (s.size() != t.size()) {
    throw PreconditionError("snake lengths differ: " + std::to_string(s.size()) + " vs " +
                            std::to_string(t.size()));
  }
}

}  // namespace detail

/// First failing condition, or std::nullopt when the pair is isomorphic.
inline std::optional<std::string> iso_condition_failure(const Snake& s, const Snake& t) {
  detail::require_same_length(s, t);
  const int r = s.size();
  if (epsilon_sequence(s).front() != epsilon_sequence(t).front()) return "first bits differ";
  for (int m = 2; m <= r - 2; ++m) {
    if ((s.left(m - 1) == s.left(m + 2)) != (t.left(m - 1) == t.left(m + 2))) {
      return "left coincidence pattern differs at " + std::to_string(m);
    }
    if ((s.right(m - 1) == s.right(m + 2)) != (t.right(m - 1) == t.right(m + 2))) {
      return "right coincidence pattern differs at " + std::to_string(m);
    }
  }
  const auto gs = generator_set(s);
  const auto gt = generator_set(t);
  for (int m = 1; m <= r; ++m) {
    for (int l = 1; l <= r; ++l) {
      if (gs.contains({s.left(m), s.right(l)}) != gt.contains({t.left(m), t.right(l)})) {
        return "generator membership differs at (" + std::to_string(m) + "," + std::to_string(l) +
               ")";
      }
    }
  }
  return std::nullopt;
}

inline bool check_iso_conditions(const Snake& s, const Snake& t) {
  return !iso_condition_failure(s, t).has_value();
}

class SnakeIso {
 public:
  /// Builds the index-wise generator map and verifies it is a well-defined
  /// bijection between the generator sets.
  SnakeIso(const Snake& source, const Snake& target) : source_(source), target_(target) {
    if (auto f = iso_condition_failure(source, target)) {
      throw PreconditionError("isomorphism conditions fail: " + *f);
    }
    const int r = source.size();
    const auto gs = generator_set(source);
    const auto gt = generator_set(target);
    for (int m = 1; m <= r; ++m) {
      for (int l = 1; l <= r; ++l) {
        Interval a{source.left(m), source.right(l)};
        if (!gs.contains(a)) continue;
        Interval b{target.left(m), target.right(l)};
        auto [it, fresh] = map_.emplace(a, b);
        if (!fresh && it->second != b) {
          throw InvariantViolation("generator map not well defined at " + to_string(a) + ": " +
                                   to_string(it->second) + " vs " + to_string(b));
        }
      }
    }
    IntervalSet image;
    for (const auto& [a, b] : map_) {
      if (!image.insert(b).second) {
        throw InvariantViolation("generator map not injective at " + to_string(b));
      }
    }
    if (map_.size() != gs.size()) throw InvariantViolation("generator map not total");
    if (image != gt) throw InvariantViolation("generator map not surjective");
  }

  const Snake& source() const { return source_; }
  const Snake& target() const { return target_; }
  const std::map<Interval, Interval>& generator_map() const { return map_; }

  Interval image(const Interval& iv) const {
    auto it = map_.find(iv);
    if (it == map_.end()) throw PreconditionError(to_string(iv) + " is not a source generator");
    return it->second;
  }

 private:
  Snake source_, target_;
  std::map<Interval, Interval> map_;
};

/// Generator-wise image of a submonoid element of the source.
inline MonoidElement eta(const SnakeIso& iso, const MonoidElement& w) {
  if (!submonoid_member(w, iso.source())) {
    throw PreconditionError(format(w) + " is not in the source submonoid");
  }
  MonoidElement out(iso.target().rank());
  for (const auto& [iv, e] : w.terms()) out.multiply(iso.image(iv), e);
  return out;
}

/// The canonical factorization of eta(w) is the image of that of w.
inline bool transport_check(Factorizer& fz, const SnakeIso& iso, const MonoidElement& w) {
  std::vector<MonoidElement> mapped;
  for (const auto& f : fz.factor_weights(w, iso.source())) mapped.push_back(eta(iso, f));
  std::sort(mapped.begin(), mapped.end());
  return mapped == fz.factor_weights(eta(iso, w), iso.target());
}

inline bool transport_check(const SnakeIso& iso, const MonoidElement& w) {
  Factorizer fz;
  return transport_check(fz, iso, w);
}

/// eta carries pr weights onto pr weights and fr weights onto fr weights.
inline bool descriptor_map_check(const SnakeIso& iso) {
  auto weights = [](const std::vector<PrimeDescriptor>& ds) {
    std::set<MonoidElement> out;
    for (const auto& d : ds) out.insert(d.weight);
    return out;
  };
  auto image = [&](const std::vector<PrimeDescriptor>& ds) {
    std::set<MonoidElement> out;
    for (const auto& d : ds) out.insert(eta(iso, d.weight));
    return out;
  };
  return image(pr_set(iso.source())) == weights(pr_set(iso.target())) &&
         image(fr_set(iso.source())) == weights(fr_set(iso.target()));
}

}  // namespace snakealg
