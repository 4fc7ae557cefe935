#pragma once

// Integral first homology of a square-tiled surface.
//
// The graph alpha u beta (one vertex per square, 2N edges) has N+1
// fundamental cycles; since the complementary regions are disks they
// generate H_1. A class is recorded by its vector of intersection numbers
// against these spanning cycles. Hermite reduction of the pairing matrix
// gives a Z-basis of the image lattice, which is a copy of H_1(S; Z).

#include <optional>
#include <vector>

#include "origami/curves.hpp"
#include "origami/lattice.hpp"
#include "origami/twists.hpp"

namespace origami {

using ClassVector = IntVector;

/// One visit of a spanning cycle to a square (combinatorial route).
struct Pass {
  int square;
  Side entry;
  Side exit;
};

struct FrameOptions {
  /// Denominator D of the routing perturbation 1/D. Defaults to 64*M*N
  /// (M spanning cycles, N squares). When given, it is used from the first
  /// attempt on.
  std::optional<long> perturbation_denominator;
  int max_retries = 8;
};

struct HomologyFrame {
  SquareComplex surface;
  std::vector<std::vector<Pass>> routes;
  std::vector<Polyline> cycles;
  IntMatrix pairing;        // (N+1) x (N+1), pairing[i][j] = <g_i, g_j>
  RowEchelon echelon;       // Hermite form of the rows of `pairing`
  IntMatrix basis;          // 2g x (N+1), pairing vectors of the basis classes
  IntMatrix basis_cycles;   // 2g x (N+1), basis classes as combinations of g_i
  IntMatrix gram;           // 2g x 2g intersection form on the basis
  std::vector<ClassVector> alpha_cores;
  std::vector<ClassVector> beta_cores;
  long perturbation_denominator = 0;
  bool perturbation_forced = false;
  int max_retries = 8;

  int rank() const { return static_cast<int>(basis.size()); }
  const ClassVector& core_class(CylinderRef ref) const {
    return ref.family == Family::Alpha ? alpha_cores[ref.index] : beta_cores[ref.index];
  }
};

/// Routes the spanning cycles in general position. Cycle k crosses every
/// side at parameter (k+1)/(M+2) + delta (in the canonical view of that
/// side), with delta = 0 on the first attempt and 1/(D 2^(r-1)) on retry r.
std::vector<Polyline> route_cycles(const SquareComplex& c,
                                   const std::vector<std::vector<Pass>>& routes,
                                   const Rational& delta, long denominator);

HomologyFrame build_frame(const SquareComplex& c, const FrameOptions& options = {});

/// A curve with an integer weight; integer 1-cycles are lists of these.
struct WeightedCurve {
  Polyline curve;
  Integer weight{1};
};
using Cycle = std::vector<WeightedCurve>;

/// Pairing vector <p, g_i>, retrying with perturbed spanning cycles when p is
/// not transverse to them.
IntVector pairing_vector(const HomologyFrame& f, const Polyline& p);

ClassVector class_of(const HomologyFrame& f, const Polyline& p);
ClassVector class_of(const HomologyFrame& f, const Cycle& z);

/// Algebraic intersection of two classes via the Gram matrix.
Integer intersection(const HomologyFrame& f, const ClassVector& a, const ClassVector& b);

/// Integer combination of spanning cycles representing a class.
Cycle representative(const HomologyFrame& f, const ClassVector& v);

/// Homologous, nonzero (up to orientation), disjoint, and not isotopic. The
/// isotopy flag is supplied by the caller (parallel copies are homologous).
bool is_bounding_pair(const HomologyFrame& f, const Polyline& p, const Polyline& q,
                      bool isotopic = false);

/// Matrix of h_* on the lattice basis (acting on column vectors). A positive
/// twist about c sends x to x + <c, x> c; letters compose right to left.
IntMatrix twist_action(const HomologyFrame& f, const TwistWord& w);

/// Saturated basis (rows) of K = ker(m - id).
IntMatrix invariant_sublattice(const IntMatrix& m);

}  // namespace origami
