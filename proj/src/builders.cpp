#include "origami/builders.hpp"

namespace origami {

SquareComplex torus() { return SquareComplex::build({{"a1", {0}}}, {{"b1", {0}}}, {1}); }

SquareComplex genus2_block() {
  return SquareComplex::build({{"a2'", {0, 1, 2, 3, 4, 5, 6, 7}}},
                              {{"b2'", {0, 3, 6, 1, 4, 7, 2, 5}}},
                              {-1, 1, -1, 1, -1, 1, -1, 1});
}

Genus5 genus5_paper() {
  std::vector<int> flips;
  for (int s = 0; s < 20; ++s) flips.push_back(s % 2 ? 1 : -1);
  SquareComplex c = SquareComplex::build(
      {{"a1", {16, 17}},
       {"a2", {18, 9, 10, 11, 12, 13, 14, 15, 8, 19, 1, 2, 3, 4, 5, 6, 7, 0}}},
      {{"b1", {18, 19}},
       {"b2", {16, 11, 14, 9, 12, 15, 10, 13, 8, 17, 3, 6, 1, 4, 7, 2, 5, 0}}},
      flips);
  const Rational t(1, 3);
  Traversal gamma_prime{{16, Side::S, Side::N, t}, {0, Side::S, Side::E, t},
                        {18, Side::W, Side::E, t}, {9, Side::W, Side::N, t},
                        {12, Side::N, Side::W, t}, {11, Side::E, Side::S, t}};
  Polyline image =
      apply_twist(c, polyline_from_traversal(c, gamma_prime), {Family::Beta, 1}, 1).image;
  Traversal gamma = reduced_traversal(image);
  return {std::move(c), std::move(gamma_prime), std::move(gamma)};
}

TwistWord paper_word(const SquareComplex& genus5) {
  return parse_word(genus5, "a2^1 * a1^9 * b1^-9 * b2^-1");
}

}  // namespace origami
