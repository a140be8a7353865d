#pragma once

// Text forms:
//   snake   [(0,6),(-1,4),(2,5)] @ n=6
//   monoid  w{-1,1} * w{0,2}^2      (identity prints as "1")

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "snakealg/core.hpp"

namespace snakealg {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }
  int integer() {
    skip_ws();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) +
                     "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void check_rank_bound(const Interval& iv, int n, const Cursor& cur) {
  if (iv.length() < 0 || iv.length() > n + 1) {
    cur.fail("interval " + to_string(iv) + " violates rank bound n=" + std::to_string(n));
  }
}

}  // namespace detail

inline std::string format(const Snake& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& iv : s.intervals()) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(iv.left) + "," + std::to_string(iv.right) + ")";
  }
  out += "] @ n=" + std::to_string(s.rank().value());
  return out;
}

inline std::string format(const MonoidElement& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& [iv, e] : w.terms()) {
    if (!out.empty()) out += " * ";
    out += "w{" + std::to_string(iv.left) + "," + std::to_string(iv.right) + "}";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline Snake parse_snake(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<Interval> ivs;
  cur.expect('[');
  if (!cur.peek(']')) {
    do {
      cur.expect('(');
      int i = cur.integer();
      cur.expect(',');
      int j = cur.integer();
      cur.expect(')');
      ivs.push_back({i, j});
    } while (cur.accept(','));
  }
  cur.expect(']');
  cur.expect('@');
  cur.expect('n');
  cur.expect('=');
  int n = cur.integer();
  if (!cur.done()) cur.fail("trailing input");
  if (n < 1) cur.fail("rank must be >= 1");
  if (ivs.empty()) cur.fail("snake needs at least one interval");
  for (const auto& iv : ivs) detail::check_rank_bound(iv, n, cur);
  return Snake(std::move(ivs), Rank(n));
}

/// Parses a monoid element over rank `n`. Repeated factors accumulate.
inline MonoidElement parse_monoid(std::string_view text, Rank n) {
  detail::Cursor cur(text);
  MonoidElement out(n);
  if (cur.accept('1')) {
    if (!cur.done()) cur.fail("trailing input");
    return out;
  }
  do {
    cur.expect('w');
    cur.expect('{');
    int i = cur.integer();
    cur.expect(',');
    int j = cur.integer();
    cur.expect('}');
    int e = 1;
    if (cur.accept('^')) {
      e = cur.integer();
      if (e < 0) cur.fail("negative exponent");
    }
    Interval iv{i, j};
    detail::check_rank_bound(iv, n.value(), cur);
    out.multiply(iv, e);
  } while (cur.accept('*'));
  if (!cur.done()) cur.fail("trailing input");
  return out;
}

}  // namespace snakealg
