#pragma once

// Closed curves on a square-tiled surface as exact-rational polylines.
//
// A polyline is a cyclic list of straight segments, each inside one closed
// square and written in that square's alpha frame. Consecutive segments
// either continue inside the same square from the same point, or the first
// ends on a side and the next starts at the glued point of the glued square.
// Endpoints never sit on corners. Curves given by traversals are chords
// (one segment per visit, side to side); twist images in general are not,
// since shears move vertices off the sides.

#include <string>
#include <string_view>
#include <vector>

#include "origami/arith.hpp"
#include "origami/surface.hpp"

namespace origami {

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point&) const = default;
};

struct Segment {
  int square;
  Point a;
  Point b;
  bool operator==(const Segment&) const = default;
};

struct Polyline {
  std::vector<Segment> segments;
  bool operator==(const Polyline&) const = default;
};

/// One visit of a curve to a square. `t` is the parameter of the exit point
/// along the exit side, in this square's frame (x for N/S sides, y for E/W).
/// The entry point is inherited from the previous step through the gluing.
struct TraversalStep {
  int square;
  Side entry;
  Side exit;
  Rational t{1, 2};
  bool operator==(const TraversalStep&) const = default;
};
using Traversal = std::vector<TraversalStep>;

Point side_point(Side s, const Rational& t);
/// Side containing a point of the square boundary; throws Degenerate at
/// corners and for interior points.
Side side_containing(const Point& p);
Rational side_parameter(Side s, const Point& p);

Polyline polyline_from_traversal(const SquareComplex& c, const Traversal& t);
/// Exact inverse of polyline_from_traversal; every segment must be a chord.
Traversal traversal_from_polyline(const Polyline& p);

/// A traversal homotopic to p: each visit to a square is replaced by the
/// chord between its entry and exit points, and visits that leave through
/// the side they came in by are pushed back across it. Throws Degenerate
/// when p is contractible inside a single square.
Traversal reduced_traversal(const Polyline& p);

/// Throws InconsistentTraversal unless p is closed and consecutive segments
/// are glued as described above.
void check_polyline(const SquareComplex& c, const Polyline& p);

/// True when the point lies on the boundary of the unit square.
bool on_boundary(const Point& p);

/// Reversed orientation.
Polyline reversed(const Polyline& p);

/// Merges consecutive collinear segments that lie in the same square.
Polyline simplified(const Polyline& p);

/// Core curve of a cylinder, at height 1/2 (alpha) or abscissa 1/2 (beta),
/// oriented like the chart.
Polyline core(const SquareComplex& c, CylinderRef ref);

/// Chart coordinates of a point of a square: alpha chart [0,w]x[0,1] with the
/// square at position p occupying [p,p+1]x[0,1]; beta chart [0,1]x[0,w]
/// with the square occupying [0,1]x[p,p+1], rotated by a half-turn when its
/// flip is -1.
Point to_chart(const SquareComplex& c, Family f, int square, const Point& p);

/// Inverse of to_chart for a point of the given square.
Point from_chart(const SquareComplex& c, Family f, int square, const Point& chart);

struct ChartSegment {
  int square;
  Point a;
  Point b;
};
/// The pieces of p inside the given cylinder, in chart coordinates.
std::vector<ChartSegment> to_chart(const SquareComplex& c, CylinderRef cyl, const Polyline& p);

/// Signed count of transverse crossings; each crossing contributes the sign
/// of det(tangent of p, tangent of q). Throws NotTransverse when p and q
/// touch without crossing transversally (shared side points, collinear
/// overlap, endpoint on the other curve).
int crossing_number(const Polyline& p, const Polyline& q);

/// Number of transverse crossing points (unsigned); same error contract.
int geometric_intersections(const Polyline& p, const Polyline& q);

/// Curve file: "curve:" followed by "(<square>, <entry>, <exit>[, t=<p>/<q>])".
Traversal parse_curve(std::string_view text);
std::string format_curve(const Traversal& t);

}  // namespace origami
