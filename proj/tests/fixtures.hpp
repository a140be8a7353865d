#pragma once

#include <string>

#include "snakealg/core.hpp"
#include "snakealg/text.hpp"

namespace fixtures {

using namespace snakealg;

inline Snake s_star() { return Snake({{0, 6}, {-1, 4}, {2, 5}, {1, 3}, {3, 4}}, Rank(6)); }
inline Snake s_two() { return Snake({{0, 2}, {-1, 1}}, Rank(3)); }

inline MonoidElement w(const std::string& text, int n) { return parse_monoid(text, Rank(n)); }
inline MonoidElement g(int i, int j, int n) { return MonoidElement::generator({i, j}, Rank(n)); }

}  // namespace fixtures
