#pragma once

// The twist maps on G x G: the eight swap/star bijections extended by the
// central shift (g,h) -> (g0 g, h).  Elements are compared modulo the
// evaluation map, under which the g0 shift commutes with everything, so the
// exponent is a plain integer alongside the swap/star part.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopq/words.hpp"

namespace loopq {

struct ThetaElem {
  int g0_exp = 0;
  bool swap = false;
  bool star_first = false;   // star applied to the first output coordinate
  bool star_second = false;  // star applied to the second output coordinate
  auto operator<=>(const ThetaElem&) const = default;

  // 0..7 in token order xy, xy*, x*y, x*y*, yx, yx*, y*x, y*x*.
  int part_index() const {
    return (swap ? 4 : 0) | (star_first ? 2 : 0) | (star_second ? 1 : 0);
  }
  ThetaElem part() const { return {0, swap, star_first, star_second}; }
};

inline constexpr int kThetaParts = 8;
ThetaElem theta_from_part_index(int idx, int g0_exp = 0);

// Tokens: ['g0'['^'int]] letter ['*'] letter ['*'], letters x,y in either
// order, e.g. "xy", "g0yx*".
ThetaElem theta_parse(std::string_view token);
std::string theta_format(const ThetaElem& t);

// Standard composition: (a o b)(g,h) = a(b(g,h)).
ThetaElem theta_compose(const ThetaElem& a, const ThetaElem& b);

// Apply at the word level: swap, star each coordinate per the flags (the star
// of a word per star_word), then add the g0 exponent to the first coordinate.
std::pair<GroupWord, GroupWord> theta_apply(const ThetaElem& t,
                                            std::pair<GroupWord, GroupWord> pair);

// Evaluation map: concatenate the two coordinates (g0 exponents add).
GroupWord delta_eval(const std::pair<GroupWord, GroupWord>& pair);

struct MultQuadruple {
  ThetaElem alpha, beta, gamma, delta;
  auto operator<=>(const MultQuadruple&) const = default;
};

// "b,g,d" with alpha = xy implied; parentheses optional.
MultQuadruple parse_quadruple(std::string_view triple);
std::string format_triple(const MultQuadruple& q);  // "(b,g,d)"

// Exactly the quadruples that produce loops: alpha = xy,
// beta in {xy, x*y, yx, yx*}, gamma in {xy, xy*, yx, y*x}, delta arbitrary.
bool in_loop_sets(const MultQuadruple& q);

// The reduced search grid: alpha = xy, beta in {xy, x*y, yx, yx*},
// gamma in {xy, yx}, delta with g0 exponent 1.
bool in_search_grid(const MultQuadruple& q);

}  // namespace loopq
