#include "origami/twists.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "origami/error.hpp"

namespace origami {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long parse_power(std::string_view s) {
  std::string text(trim(s));
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = std::string(trim(std::string_view(text).substr(1, text.size() - 2)));
  }
  std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (i >= text.size() || text.size() > 12) throw Error(ErrorCode::BadWord, "bad power '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(ErrorCode::BadWord, "bad power '" + text + "'");
    }
  }
  return std::stol(text);
}

Integer ipow10(unsigned e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

Integer isqrt(const Integer& x) {
  Integer out;
  mpz_sqrt(out.get_mpz_t(), x.get_mpz_t());
  return out;
}

// Splits the chart segment P->Q at every integer value of the coordinate
// `along` (0 = x, 1 = y) strictly between its endpoints.
std::vector<Point> split_at_grid(const Point& p, const Point& q, int along) {
  const Rational& u0 = along == 0 ? p.x : p.y;
  const Rational& u1 = along == 0 ? q.x : q.y;
  std::vector<Point> pts{p};
  if (u0 != u1) {
    const bool up = u0 < u1;
    auto ceil_of = [](const Rational& r) { return Integer(-floor_of(-r)); };
    Integer first = up ? Integer(floor_of(u0) + 1) : Integer(ceil_of(u0) - 1);
    Integer last = up ? Integer(ceil_of(u1) - 1) : Integer(floor_of(u1) + 1);
    const Rational du = u1 - u0;
    const Point d{q.x - p.x, q.y - p.y};
    for (Integer j = first; up ? j <= last : j >= last; up ? ++j : --j) {
      Rational lambda = (Rational(j) - u0) / du;
      Point m{p.x + lambda * d.x, p.y + lambda * d.y};
      if (along == 0) m.x = Rational(j);
      else m.y = Rational(j);
      pts.push_back(std::move(m));
    }
  }
  pts.push_back(q);
  return pts;
}

Integer mod_floor(const Integer& a, long n) {
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace

TwistWord parse_word(const SquareComplex& c, std::string_view text) {
  TwistWord w;
  auto body = trim(text);
  if (body.empty() || body == "id" || body == "1") return w;
  std::size_t start = 0;
  while (true) {
    auto star = body.find('*', start);
    auto tok = trim(body.substr(start, star == std::string_view::npos ? std::string_view::npos
                                                                       : star - start));
    if (tok.empty()) throw Error(ErrorCode::BadWord, "empty factor in word '" + std::string(text) + "'");
    auto caret = tok.find('^');
    auto name = trim(tok.substr(0, caret));
    long power = caret == std::string_view::npos ? 1 : parse_power(tok.substr(caret + 1));
    if (power == 0) throw Error(ErrorCode::BadWord, "zero power in '" + std::string(tok) + "'");
    auto ref = c.find(name);
    if (!ref) throw Error(ErrorCode::UnknownCurve, "no curve named '" + std::string(name) + "'");
    w.letters.push_back({*ref, power});
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return w;
}

std::string format_word(const SquareComplex& c, const TwistWord& w) {
  if (w.empty()) return "id";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << " * ";
    out << c.name_of(w.letters[i].curve) << '^' << w.letters[i].power;
  }
  return out.str();
}

TwistWord concat(const TwistWord& w1, const TwistWord& w2) {
  TwistWord out = w1;
  out.letters.insert(out.letters.end(), w2.letters.begin(), w2.letters.end());
  return out;
}

TwistImage apply_twist(const SquareComplex& c, const Polyline& p, CylinderRef curve, long power) {
  const Family fam = curve.family;
  const auto& squares = c.strand(curve).squares;
  const long width = static_cast<long>(squares.size());
  const Integer shear = Integer(power) * width;
  // Chart coordinate along the core and across it.
  const int along = fam == Family::Alpha ? 0 : 1;

  std::vector<Segment> out;
  out.reserve(p.segments.size());
  Rational swept_squares = 0;
  Rational crossing = 0;  // net crossings of the chart, bottom->top or left->right
  for (const auto& seg : p.segments) {
    if (c.cylinder_of(fam, seg.square) != curve.index) {
      out.push_back(seg);
      continue;
    }
    Point a = to_chart(c, fam, seg.square, seg.a);
    Point b = to_chart(c, fam, seg.square, seg.b);
    if (fam == Family::Alpha) {
      swept_squares += shear * (b.y * b.y - a.y * a.y) / 2;
      crossing += b.y - a.y;
      a.x += shear * a.y;
      b.x += shear * b.y;
    } else {
      swept_squares += shear * (b.x * b.x - a.x * a.x) / 2;
      crossing += b.x - a.x;
      a.y -= shear * a.x;
      b.y -= shear * b.x;
    }
    auto pts = split_at_grid(a, b, along);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const Point& u = pts[i];
      const Point& v = pts[i + 1];
      const Rational& cu = along == 0 ? u.x : u.y;
      const Rational& cv = along == 0 ? v.x : v.y;
      if (cu == cv && cu.get_den() == 1) {
        throw Error(ErrorCode::Degenerate, "twist image runs along a square side");
      }
      Integer cell = floor_of(cu < cv ? cu : cv);
      const int pos = static_cast<int>(mod_floor(cell, width).get_si());
      const int sq = squares[pos];
      // Shift the chart point into the cell [pos, pos+1] and map back.
      Rational shift = Rational(cell - pos);
      Point cu_pt = u, cv_pt = v;
      if (along == 0) {
        cu_pt.x -= shift;
        cv_pt.x -= shift;
      } else {
        cu_pt.y -= shift;
        cv_pt.y -= shift;
      }
      out.push_back({sq, from_chart(c, fam, sq, cu_pt), from_chart(c, fam, sq, cv_pt)});
    }
  }
  if (crossing.get_den() != 1) throw Error(ErrorCode::InconsistentTraversal, "curve is not closed");
  Integer iota = crossing.get_num();
  TwistImage result;
  result.image = simplified(Polyline{std::move(out)});
  result.swept = swept_squares / c.size();
  // <alpha, p> counts upward crossings; <beta, p> counts leftward ones.
  result.boundary_weight = fam == Family::Alpha ? Integer(power * iota) : Integer(-power * iota);
  return result;
}

WordImage apply_word(const SquareComplex& c, const Polyline& p, const TwistWord& w) {
  WordImage out;
  out.image = p;
  out.swept = 0;
  out.alpha_boundary.assign(c.strands(Family::Alpha).size(), 0);
  out.beta_boundary.assign(c.strands(Family::Beta).size(), 0);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    TwistImage step = apply_twist(c, out.image, it->curve, it->power);
    out.image = std::move(step.image);
    out.swept += step.swept;
    auto& acc = it->curve.family == Family::Alpha ? out.alpha_boundary : out.beta_boundary;
    acc[it->curve.index] += step.boundary_weight;
  }
  return out;
}

std::vector<AffineBlock> affine_blocks(const SquareComplex& c, const TwistWord& w) {
  std::vector<AffineBlock> blocks;
  for (const auto& letter : w.letters) {
    if (blocks.empty() || blocks.back().family != letter.curve.family) {
      AffineBlock b;
      b.family = letter.curve.family;
      b.shears.assign(c.strands(b.family).size(), 0);
      blocks.push_back(std::move(b));
    }
    auto& b = blocks.back();
    b.letters.push_back(letter);
    Integer delta = Integer(letter.power) * c.width(letter.curve);
    b.shears[letter.curve.index] += b.family == Family::Alpha ? delta : Integer(-delta);
  }
  for (auto& b : blocks) {
    b.uniform = true;
    for (const auto& s : b.shears) b.uniform = b.uniform && s == b.shears.front();
    if (b.uniform) b.shear = b.shears.front();
  }
  return blocks;
}

std::string_view verdict_name(PAVerdict v) {
  switch (v) {
    case PAVerdict::PseudoAnosov: return "pseudoAnosov";
    case PAVerdict::NotAffineCertifiable: return "not-affine-certifiable";
    case PAVerdict::ParabolicOrPeriodic: return "parabolic-or-periodic";
  }
  return "?";
}

std::string QuadraticNumber::str() const {
  std::ostringstream out;
  out << "(" << a.get_str();
  if (b != 0) out << (b < 0 ? " - " : " + ") << Integer(abs(b)).get_str() << "*sqrt(" << d.get_str() << ")";
  out << ")/" << den.get_str();
  return out.str();
}

PAResult pa_certificate(const SquareComplex& c, const TwistWord& w) {
  PAResult r;
  r.blocks = affine_blocks(c, w);
  Matrix2 m{{{Integer(1), Integer(0)}, {Integer(0), Integer(1)}}};
  bool certifiable = true;
  for (const auto& b : r.blocks) {
    if (!b.uniform) {
      certifiable = false;
      continue;
    }
    Matrix2 blk = b.family == Family::Alpha
                      ? Matrix2{{{Integer(1), b.shear}, {Integer(0), Integer(1)}}}
                      : Matrix2{{{Integer(1), Integer(0)}, {b.shear, Integer(1)}}};
    Matrix2 prod;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) prod[i][j] = m[i][0] * blk[0][j] + m[i][1] * blk[1][j];
    }
    m = prod;
  }
  if (!certifiable) {
    r.verdict = PAVerdict::NotAffineCertifiable;
    return r;
  }
  r.matrix = m;
  r.trace = m[0][0] + m[1][1];
  Integer abs_tr = abs(r.trace);
  if (abs_tr <= 2) {
    r.verdict = PAVerdict::ParabolicOrPeriodic;
    return r;
  }
  r.verdict = PAVerdict::PseudoAnosov;
  r.poly_linear = -abs_tr;
  Integer disc = r.trace * r.trace - 4;
  r.dilatation = {abs_tr, 1, disc, 2};

  // floor(sqrt(disc) * 10^20); the truncation error of lambda is below 1e-20.
  constexpr unsigned digits = 20;
  Integer scale = ipow10(digits);
  Integer root = isqrt(disc * scale * scale);
  Integer scaled = abs_tr * scale + root;  // 2 * lambda * 10^20
  Integer int_part = scaled / (2 * scale);
  Integer frac = (scaled % (2 * scale)) / 2;
  std::string frac_str = frac.get_str();
  frac_str.insert(0, digits - frac_str.size(), '0');
  r.dilatation_decimal = int_part.get_str() + "." + frac_str;
  r.dilatation_approx = std::strtod(r.dilatation_decimal.c_str(), nullptr);

  // Eigenvector (b, mu - a): slope ((d - a) +- sgn(tr) sqrt(disc)) / (2b).
  const Integer& a = m[0][0];
  const Integer& b = m[0][1];
  const Integer& d = m[1][1];
  Integer s = r.trace > 0 ? 1 : -1;
  Integer den = 2 * b;
  Integer flip = den < 0 ? -1 : 1;
  r.unstable_slope = {flip * (d - a), flip * s, disc, flip * den};
  r.stable_slope = {flip * (d - a), -flip * s, disc, flip * den};
  return r;
}

}  // namespace origami
