#pragma once

// Flux of area-preserving twist compositions on invariant homology classes.
//
// For [p] fixed by h, the flux is the area of any 2-chain C with
// dC = h(p) - p, well defined modulo the areas of closed 2-cycles. With the
// total area normalized to 1 the period lattice is Z, so values are reported
// raw and reduced into [0, 1).
//
// The primary computation follows the twist isotopies: each shear sweeps a
// chain whose boundary also contains a multiple of the chart boundary. Those
// multiples are slid onto the cores (strips of half the chart) and capped
// off by a chain of faces of alpha u beta, solved from its winding numbers.

#include <string>
#include <vector>

#include "origami/homology.hpp"
#include "origami/twists.hpp"

namespace origami {

struct FluxValue {
  Rational raw;      // normalized area of the chosen chain
  Rational reduced;  // raw mod 1, in [0, 1)
  bool operator==(const FluxValue&) const = default;
};
FluxValue make_flux(const Rational& raw);

/// Area, in squares, of the face chain D with dD = sum r_i alpha_i + sum
/// r_j beta_j (cores). The winding numbers are shifted so that their minimum
/// is 0. Throws NotNullhomologous when the combination does not bound.
Rational core_chain_area(const SquareComplex& c, const std::vector<Integer>& alpha_weights,
                         const std::vector<Integer>& beta_weights);

/// Throws CLASS_NOT_INVARIANT unless the class is fixed by the word.
FluxValue flux(const HomologyFrame& f, const Polyline& p, const TwistWord& w);
FluxValue flux(const HomologyFrame& f, const Cycle& z, const TwistWord& w);

/// Area of a chain bounding q - p, from the winding numbers of the cycle
/// q - p at the vertices of the square tiling; independent of the twists.
FluxValue winding_oracle(const SquareComplex& c, const Polyline& p, const Polyline& q);
/// Same for an arbitrary weighted cycle z (which must bound).
FluxValue winding_oracle(const SquareComplex& c, const Cycle& z);

struct FluxReport {
  TwistWord word;
  IntMatrix action;                   // h_* on the lattice basis
  IntMatrix kernel;                   // rows: saturated basis of K
  std::vector<FluxValue> values;      // flux on each kernel row
  bool torelli = false;
  bool nonzero = false;               // some value is nonzero mod 1
};
FluxReport flux_hom(const HomologyFrame& f, const TwistWord& w);

/// Flux of the class v (which must lie in K), using cached images of the
/// spanning cycles.
class FluxEvaluator {
 public:
  FluxEvaluator(const HomologyFrame& f, const TwistWord& w);
  FluxValue operator()(const ClassVector& v) const;
  const IntMatrix& action() const { return action_; }

 private:
  const HomologyFrame& frame_;
  IntMatrix action_;
  std::vector<WordImage> images_;
};

enum class Realizability { Obstructed, BoundaryCriterionApplies, Inconclusive };
std::string_view realizability_name(Realizability r);

struct RealizabilityReport {
  Realizability verdict = Realizability::Inconclusive;
  bool flux_nonzero = false;
  Integer det_minus_identity;  // det(h_* - id)
  std::string note;
};
RealizabilityReport realizability_report(const FluxReport& report);
RealizabilityReport realizability_report(const HomologyFrame& f, const TwistWord& w);

}  // namespace origami
