#pragma once

// Square-tiled surfaces induced by a filling pair of multicurves.
//
// One unit square per intersection point of alpha and beta. Every square
// carries its own "alpha frame": alpha crosses it west to east at height
// 1/2, beta crosses it vertically at x = 1/2, upward when the flip bit is
// +1 and downward when it is -1. East/west sides are glued by translation
// along the alpha cycles. North/south sides are glued along the beta cycles,
// by translation when the two flip bits agree and by a half-turn otherwise.
// All square frames are positively oriented, so the result is an oriented
// half-translation surface.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace origami {

enum class Family { Alpha = 0, Beta = 1 };
enum class Side { N = 0, E = 1, S = 2, W = 3 };
enum class Corner { NE = 0, NW = 1, SW = 2, SE = 3 };

inline int idx(Family f) { return static_cast<int>(f); }
inline int idx(Side s) { return static_cast<int>(s); }
inline int idx(Corner c) { return static_cast<int>(c); }

char side_letter(Side s);
std::optional<Side> side_from_letter(char c);
std::string_view family_name(Family f);

/// Where a side of a square is glued. `reversed` means the side parameter
/// t maps to 1 - t (half-turn gluing); otherwise t is preserved.
struct Gluing {
  int square;
  Side side;
  bool reversed;
  bool operator==(const Gluing&) const = default;
};

struct CornerRef {
  int square;
  Corner corner;
  bool operator==(const CornerRef&) const = default;
};

/// A complementary region of alpha u beta; it contains exactly one vertex of
/// the square tiling and is a 2n-gon with one corner per incident square corner.
struct Face {
  std::vector<CornerRef> corners;
  int half_size() const { return static_cast<int>(corners.size()) / 2; }
};

struct Strand {
  std::string name;
  std::vector<int> squares;
  bool operator==(const Strand&) const = default;
};

struct CylinderRef {
  Family family;
  int index;
  bool operator==(const CylinderRef&) const = default;
};

/// Annular chart around one curve component: [0,width]x[0,1] for alpha,
/// [0,1]x[0,width] for beta. The square at position p has chart offset p.
struct Cylinder {
  Family family;
  int index;
  std::string name;
  int width;
  std::vector<int> squares;
};

class SquareComplex {
 public:
  /// Builds and fully validates (bijection, flips, filling, connectivity).
  static SquareComplex build(std::vector<Strand> alpha, std::vector<Strand> beta,
                             std::vector<int> flips);

  /// Checks only the structural bijection; `validated()` is false. Used by
  /// exhaustive searches that reject most candidates.
  static SquareComplex assemble(std::vector<Strand> alpha, std::vector<Strand> beta,
                                std::vector<int> flips);

  int size() const { return n_; }
  bool validated() const { return validated_; }

  const std::vector<Strand>& strands(Family f) const { return strands_[idx(f)]; }
  const Strand& strand(CylinderRef ref) const { return strands_[idx(ref.family)][ref.index]; }
  int flip(int square) const { return flips_[square]; }
  const std::vector<int>& flips() const { return flips_; }

  int cylinder_of(Family f, int square) const { return cyl_[idx(f)][square]; }
  int position_of(Family f, int square) const { return pos_[idx(f)][square]; }
  int width(CylinderRef ref) const;
  int next(Family f, int square) const;
  int prev(Family f, int square) const;

  /// Side through which the beta strand leaves / enters a square.
  Side beta_exit(int square) const { return flips_[square] > 0 ? Side::N : Side::S; }
  Side beta_entry(int square) const { return flips_[square] > 0 ? Side::S : Side::N; }

  Gluing glue(int square, Side side) const;

  /// Faces from the corner walk; index of the face containing each corner.
  const std::vector<Face>& faces() const { return faces_; }
  int face_of(CornerRef c) const { return corner_face_[4 * c.square + idx(c.corner)]; }

  int euler_characteristic() const { return static_cast<int>(faces_.size()) - n_; }

  std::optional<CylinderRef> find(std::string_view name) const;
  std::string name_of(CylinderRef ref) const { return strand(ref).name; }

  bool operator==(const SquareComplex& other) const {
    return n_ == other.n_ && strands_ == other.strands_ && flips_ == other.flips_;
  }

 private:
  SquareComplex() = default;
  void index_strands();
  void walk_corners();
  void validate() const;

  int n_ = 0;
  bool validated_ = false;
  std::array<std::vector<Strand>, 2> strands_;
  std::vector<int> flips_;
  std::array<std::vector<int>, 2> cyl_;
  std::array<std::vector<int>, 2> pos_;
  std::vector<Face> faces_;
  std::vector<int> corner_face_;
};

SquareComplex parse_surface(std::string_view text);
std::string format_surface(const SquareComplex& c);

std::vector<Face> faces(const SquareComplex& c);
int genus(const SquareComplex& c);
std::vector<Cylinder> cylinders(const SquareComplex& c);
Cylinder cylinder(const SquareComplex& c, CylinderRef ref);

/// Number of squares where a cylinder of one family meets one of the other.
int intersection_count(const SquareComplex& c, int alpha_index, int beta_index);

/// Connected components of the surface cut open along the cores of the given
/// cylinders. Each square is split into quadrants (NE, NW, SW, SE); the
/// returned labels are indexed by 4 * square + corner.
struct CutComponents {
  int count = 0;
  std::vector<int> quadrant_label;
  /// Area of each component in squares (quadrant = 1/4), times 4.
  std::vector<int> quarter_areas;
};
CutComponents cut_along(const SquareComplex& c, const std::vector<CylinderRef>& cores);

/// True iff the core of the cylinder disconnects the surface.
bool is_separating(const SquareComplex& c, CylinderRef ref);

// Corner/side helpers shared by the geometry code.
Side ccw_side(Corner c);
Side cw_side(Corner c);
/// Corner at the low (t = 0) or high (t = 1) end of a side.
Corner corner_at(Side s, bool high_end);
bool is_high_end(Corner c, Side s);

}  // namespace origami
