#pragma once

// Shared fixtures and independent reference computations for the tests.

#include <random>
#include <string>
#include <vector>

#include "origami/builders.hpp"
#include "origami/flux.hpp"
#include "origami/homology.hpp"

namespace origami::testing {

/// Builds each reference surface and its frame once.
struct Fixture {
  SquareComplex surface;
  HomologyFrame frame;
  std::string name;
};
const Fixture& torus_fixture();
const Fixture& genus2_fixture();
const Fixture& genus5_fixture();
const Genus5& genus5_data();

/// Random word with 1..max_length letters and powers in [-max_power, max_power] \ {0}.
TwistWord random_word(const SquareComplex& c, std::mt19937& rng, int max_length, int max_power);

/// Vertices of the square tiling, counted by identifying square corners
/// across glued sides with a union-find (independent of the corner walk).
int vertex_count(const SquareComplex& c);

/// 2x2 product of the elementary shears, in machine integers.
struct Mat2 {
  long long a, b, c, d;
};
Mat2 shear_product(const std::vector<std::pair<bool, long long>>& blocks);  // (is_alpha, shear)

/// Larger root of x^2 - t x + 1 in long double.
long double larger_root(long long trace);

/// Same squares and sides, fresh exit parameters drawn from (0,1) \ {1/2}.
/// The resulting curve is homotopic to the original.
Traversal with_random_parameters(const Traversal& t, std::mt19937& rng);

/// Same exit parameters shifted by eps (a parallel push-off).
Traversal pushed_off(const Traversal& t, const Rational& eps);

/// Equal segment lists up to a cyclic shift of the starting segment.
bool same_cycle(const Polyline& a, const Polyline& b);

/// Chord curves to test with: spanning cycles, cores and, on genus 5, the
/// two paper curves.
std::vector<Traversal> test_curves(const Fixture& f);

}  // namespace origami::testing
