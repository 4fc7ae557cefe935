#pragma once

// Affine Dehn twists on the cylinders of a square-tiled surface.
//
// A positive twist about alpha_i is the shear (X, Y) -> (X + n_i Y, Y) of
// its chart [0,n_i]x[0,1]; a positive twist about beta_j is
// (X, Y) -> (X, Y - m_j X) on [0,1]x[0,m_j], so the inverse twist has
// matrix [[1,0],[m_j,1]]. Both are the identity on the chart boundary.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "origami/curves.hpp"

namespace origami {

struct TwistLetter {
  CylinderRef curve;
  long power;
  bool operator==(const TwistLetter&) const = default;
};

/// letters[0] is the leftmost factor; the rightmost factor acts first.
struct TwistWord {
  std::vector<TwistLetter> letters;
  bool empty() const { return letters.empty(); }
  bool operator==(const TwistWord&) const = default;
};

/// Syntax "a2^1 * a1^9 * b1^-9 * b2^-1" ("a1" alone means power 1). Names
/// refer to the surface's curves; powers must be nonzero.
TwistWord parse_word(const SquareComplex& c, std::string_view text);
std::string format_word(const SquareComplex& c, const TwistWord& w);

/// w1 * w2 (w2 acts first).
TwistWord concat(const TwistWord& w1, const TwistWord& w2);

/// Image of a curve under tau^k together with the straight-line sweep from
/// the identity to the shear. With r = k <core, p>, the sweep C satisfies
/// d C = image - p - r * B, where B is the chart boundary loop parallel to the
/// core (top edge for alpha, right edge for beta).
struct TwistImage {
  Polyline image;
  Rational swept;            // signed area of C, total surface area 1
  Integer boundary_weight;   // r
};
TwistImage apply_twist(const SquareComplex& c, const Polyline& p, CylinderRef curve, long power);

struct WordImage {
  Polyline image;
  Rational swept;
  std::vector<Integer> alpha_boundary;  // accumulated r per alpha cylinder
  std::vector<Integer> beta_boundary;
};
WordImage apply_word(const SquareComplex& c, const Polyline& p, const TwistWord& w);

/// Maximal run of same-family letters. Shear per cylinder is k_i * n_i for
/// alpha and -k_j * m_j for beta (untwisted cylinders count as 0).
struct AffineBlock {
  Family family;
  std::vector<TwistLetter> letters;
  std::vector<Integer> shears;
  bool uniform = false;
  Integer shear;  // common value when uniform
};
std::vector<AffineBlock> affine_blocks(const SquareComplex& c, const TwistWord& w);

enum class PAVerdict { PseudoAnosov, NotAffineCertifiable, ParabolicOrPeriodic };
std::string_view verdict_name(PAVerdict v);

/// (a + b sqrt(d)) / den with den > 0.
struct QuadraticNumber {
  Integer a;
  Integer b;
  Integer d;
  Integer den{1};
  std::string str() const;
};

using Matrix2 = std::array<std::array<Integer, 2>, 2>;

struct PAResult {
  PAVerdict verdict = PAVerdict::NotAffineCertifiable;
  std::vector<AffineBlock> blocks;
  Matrix2 matrix{};
  Integer trace;
  /// Characteristic polynomial x^2 - |trace| x + 1 of the dilatation.
  Integer poly_linear;
  QuadraticNumber dilatation;
  std::string dilatation_decimal;  // 20 fractional digits, truncated
  double dilatation_approx = 0;
  QuadraticNumber unstable_slope;  // dy/dx of the expanding direction
  QuadraticNumber stable_slope;
};
PAResult pa_certificate(const SquareComplex& c, const TwistWord& w);

}  // namespace origami
