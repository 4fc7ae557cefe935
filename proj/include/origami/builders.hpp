#pragma once

// Reference surfaces, curves and words.

#include "origami/curves.hpp"
#include "origami/surface.hpp"
#include "origami/twists.hpp"

namespace origami {

/// One square, a1 = [0], b1 = [0].
SquareComplex torus();

/// Genus 2, one alpha curve a2' and one beta curve b2' meeting 8 times, both
/// separating; the complement is two octagons and four squares.
SquareComplex genus2_block();

/// Two copies of the genus 2 block (squares 0-7 and 8-15) joined by two
/// tubes. a1 = [16, 17] and b1 = [18, 19] are the tube meridians; a2 and b2
/// are the connected sums of the two copies of a2' and b2'.
struct Genus5 {
  SquareComplex surface;
  /// Meets a1 and b1 once each, away from a2 and b2 except inside the
  /// tube squares 16 and 18.
  Traversal gamma_prime;
  /// The image of gamma_prime under the positive twist about b2, so that
  /// the paper word first sends it back to gamma_prime.
  Traversal gamma;
};
Genus5 genus5_paper();

/// a2^1 * a1^9 * b1^-9 * b2^-1 on the genus 5 surface.
TwistWord paper_word(const SquareComplex& genus5);

}  // namespace origami
