#include "origami/curves.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "origami/error.hpp"

namespace origami {

namespace {

int orient(const Point& p, const Point& q, const Point& r) {
  Rational v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sign(v);
}

bool within_box(const Point& p, const Point& q, const Point& r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

enum class Contact { None, Proper, Touch };

struct Crossing {
  Contact contact;
  int sign;
};

Crossing intersect(const Segment& s, const Segment& t) {
  // Cheap rejection on bounding boxes.
  if (std::max(s.a.x, s.b.x) < std::min(t.a.x, t.b.x) ||
      std::max(t.a.x, t.b.x) < std::min(s.a.x, s.b.x) ||
      std::max(s.a.y, s.b.y) < std::min(t.a.y, t.b.y) ||
      std::max(t.a.y, t.b.y) < std::min(s.a.y, s.b.y)) {
    return {Contact::None, 0};
  }
  int o1 = orient(s.a, s.b, t.a);
  int o2 = orient(s.a, s.b, t.b);
  int o3 = orient(t.a, t.b, s.a);
  int o4 = orient(t.a, t.b, s.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    Rational det = (s.b.x - s.a.x) * (t.b.y - t.a.y) - (s.b.y - s.a.y) * (t.b.x - t.a.x);
    return {Contact::Proper, sign(det)};
  }
  if ((o1 == 0 && within_box(s.a, s.b, t.a)) || (o2 == 0 && within_box(s.a, s.b, t.b)) ||
      (o3 == 0 && within_box(t.a, t.b, s.a)) || (o4 == 0 && within_box(t.a, t.b, s.b))) {
    return {Contact::Touch, 0};
  }
  return {Contact::None, 0};
}

template <typename Visit>
void for_each_crossing(const Polyline& p, const Polyline& q, Visit visit) {
  int max_square = 0;
  for (const auto& s : q.segments) max_square = std::max(max_square, s.square);
  std::vector<std::vector<int>> by_square(max_square + 1);
  for (int j = 0; j < static_cast<int>(q.segments.size()); ++j) {
    by_square[q.segments[j].square].push_back(j);
  }
  for (const auto& s : p.segments) {
    if (s.square > max_square) continue;
    for (int j : by_square[s.square]) {
      Crossing x = intersect(s, q.segments[j]);
      if (x.contact == Contact::Touch) {
        throw Error(ErrorCode::NotTransverse,
                    "curves touch without crossing transversally in square " +
                        std::to_string(s.square));
      }
      if (x.contact == Contact::Proper) visit(x.sign);
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Point side_point(Side s, const Rational& t) {
  switch (s) {
    case Side::N: return {t, Rational(1)};
    case Side::S: return {t, Rational(0)};
    case Side::E: return {Rational(1), t};
    case Side::W: return {Rational(0), t};
  }
  return {};
}

Side side_containing(const Point& p) {
  bool west = p.x == 0, east = p.x == 1, south = p.y == 0, north = p.y == 1;
  if (p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1) {
    throw Error(ErrorCode::Degenerate, "point outside the unit square");
  }
  int hits = west + east + south + north;
  if (hits != 1) {
    throw Error(ErrorCode::Degenerate,
                hits == 0 ? "point is not on a square side" : "point is a square corner");
  }
  if (west) return Side::W;
  if (east) return Side::E;
  if (south) return Side::S;
  return Side::N;
}

Rational side_parameter(Side s, const Point& p) {
  return (s == Side::N || s == Side::S) ? p.x : p.y;
}

Polyline polyline_from_traversal(const SquareComplex& c, const Traversal& t) {
  if (t.empty()) throw Error(ErrorCode::InconsistentTraversal, "empty traversal");
  Polyline out;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& step = t[i];
    const auto& prev = t[(i + n - 1) % n];
    auto where = "step " + std::to_string(i) + ": ";
    if (step.square < 0 || step.square >= c.size()) {
      throw Error(ErrorCode::InconsistentTraversal, where + "square out of range");
    }
    if (step.entry == step.exit) {
      throw Error(ErrorCode::InconsistentTraversal, where + "entry side equals exit side");
    }
    if (step.t <= 0 || step.t >= 1) {
      throw Error(ErrorCode::InconsistentTraversal, where + "side parameter outside (0,1)");
    }
    Gluing g = c.glue(prev.square, prev.exit);
    if (g.square != step.square || g.side != step.entry) {
      throw Error(ErrorCode::InconsistentTraversal,
                  where + "square " + std::to_string(step.square) + " side " +
                      side_letter(step.entry) + " is not glued to square " +
                      std::to_string(prev.square) + " side " + side_letter(prev.exit));
    }
    Rational entry_t = g.reversed ? Rational(1 - prev.t) : prev.t;
    out.segments.push_back(
        {step.square, side_point(step.entry, entry_t), side_point(step.exit, step.t)});
  }
  return out;
}

Traversal traversal_from_polyline(const Polyline& p) {
  Traversal t;
  t.reserve(p.segments.size());
  for (const auto& s : p.segments) {
    Side exit = side_containing(s.b);
    t.push_back({s.square, side_containing(s.a), exit, side_parameter(exit, s.b)});
  }
  return t;
}

bool on_boundary(const Point& p) { return p.x == 0 || p.x == 1 || p.y == 0 || p.y == 1; }

namespace {

bool inside_unit_square(const Point& p) { return p.x >= 0 && p.x <= 1 && p.y >= 0 && p.y <= 1; }

// Whether `next` continues `s` across a gluing rather than inside s.square.
bool crosses_between(const Segment& s, const Segment& next) {
  return !(next.square == s.square && next.a == s.b);
}

}  // namespace

void check_polyline(const SquareComplex& c, const Polyline& p) {
  const std::size_t n = p.segments.size();
  if (n == 0) throw Error(ErrorCode::InconsistentTraversal, "empty polyline");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = p.segments[i];
    const auto& next = p.segments[(i + 1) % n];
    auto where = "segment " + std::to_string(i) + ": ";
    if (s.square < 0 || s.square >= c.size()) {
      throw Error(ErrorCode::InconsistentTraversal, where + "square out of range");
    }
    if (!inside_unit_square(s.a) || !inside_unit_square(s.b)) {
      throw Error(ErrorCode::InconsistentTraversal, where + "point outside the square");
    }
    if (s.a == s.b) throw Error(ErrorCode::InconsistentTraversal, where + "zero length");
    for (const Point* q : {&s.a, &s.b}) {
      if (on_boundary(*q)) side_containing(*q);  // rejects corners
    }
    if (on_boundary(s.a) && on_boundary(s.b) && side_containing(s.a) == side_containing(s.b)) {
      throw Error(ErrorCode::InconsistentTraversal, where + "segment runs along a side");
    }
    if (!crosses_between(s, next)) continue;
    if (!on_boundary(s.b)) {
      throw Error(ErrorCode::InconsistentTraversal, where + "not joined to the next segment");
    }
    Side to = side_containing(s.b);
    Gluing g = c.glue(s.square, to);
    if (next.square != g.square || !on_boundary(next.a) || side_containing(next.a) != g.side) {
      throw Error(ErrorCode::InconsistentTraversal, where + "not glued to the next segment");
    }
    Rational t = side_parameter(to, s.b);
    if (g.reversed) t = 1 - t;
    if (side_parameter(g.side, next.a) != t) {
      throw Error(ErrorCode::InconsistentTraversal, where + "exit point does not match entry point");
    }
  }
}

Traversal reduced_traversal(const Polyline& p) {
  // Visits: maximal runs of segments inside one square.
  struct Visit {
    int square;
    Point entry;
    Point exit;
  };
  const std::size_t n = p.segments.size();
  std::size_t first = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (crosses_between(p.segments[(i + n - 1) % n], p.segments[i])) {
      first = i;
      break;
    }
  }
  if (first == n) throw Error(ErrorCode::Degenerate, "curve stays inside one square");
  std::vector<Visit> visits;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = p.segments[(first + k) % n];
    if (k == 0 || crosses_between(p.segments[(first + k - 1) % n], s)) {
      visits.push_back({s.square, s.a, s.b});
    } else {
      visits.back().exit = s.b;
    }
  }
  // Push back visits that return through their entry side; the neighbours
  // on either side then lie in the same square and merge.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < visits.size() && visits.size() > 2; ++i) {
      if (side_containing(visits[i].entry) != side_containing(visits[i].exit)) continue;
      const std::size_t m = visits.size();
      const std::size_t prev = (i + m - 1) % m, next = (i + 1) % m;
      visits[prev].exit = visits[next].exit;
      std::size_t lo = std::min(i, next), hi = std::max(i, next);
      visits.erase(visits.begin() + static_cast<long>(hi));
      visits.erase(visits.begin() + static_cast<long>(lo));
      changed = true;
      break;
    }
  }
  for (const auto& v : visits) {
    if (side_containing(v.entry) == side_containing(v.exit)) {
      throw Error(ErrorCode::Degenerate, "curve is contractible");
    }
  }
  Traversal out;
  for (const auto& v : visits) {
    Side exit = side_containing(v.exit);
    out.push_back({v.square, side_containing(v.entry), exit, side_parameter(exit, v.exit)});
  }
  return out;
}

Polyline reversed(const Polyline& p) {
  Polyline out;
  out.segments.reserve(p.segments.size());
  for (auto it = p.segments.rbegin(); it != p.segments.rend(); ++it) {
    out.segments.push_back({it->square, it->b, it->a});
  }
  return out;
}

Polyline simplified(const Polyline& p) {
  auto mergeable = [](const Segment& s, const Segment& t) {
    if (s.square != t.square || !(s.b == t.a)) return false;
    Rational cross = (s.b.x - s.a.x) * (t.b.y - t.a.y) - (s.b.y - s.a.y) * (t.b.x - t.a.x);
    Rational dot = (s.b.x - s.a.x) * (t.b.x - t.a.x) + (s.b.y - s.a.y) * (t.b.y - t.a.y);
    return cross == 0 && dot > 0;
  };
  std::vector<Segment> out;
  out.reserve(p.segments.size());
  for (const auto& s : p.segments) {
    if (!out.empty() && mergeable(out.back(), s)) {
      out.back().b = s.b;
    } else {
      out.push_back(s);
    }
  }
  while (out.size() > 1 && mergeable(out.back(), out.front())) {
    out.front().a = out.back().a;
    out.pop_back();
  }
  return Polyline{std::move(out)};
}

Polyline core(const SquareComplex& c, CylinderRef ref) {
  Traversal t;
  for (int sq : c.strand(ref).squares) {
    if (ref.family == Family::Alpha) {
      t.push_back({sq, Side::W, Side::E, Rational(1, 2)});
    } else {
      t.push_back({sq, c.beta_entry(sq), c.beta_exit(sq), Rational(1, 2)});
    }
  }
  return polyline_from_traversal(c, t);
}

Point to_chart(const SquareComplex& c, Family f, int square, const Point& p) {
  Rational pos(c.position_of(f, square));
  if (f == Family::Alpha) return {pos + p.x, p.y};
  if (c.flip(square) > 0) return {p.x, pos + p.y};
  return {1 - p.x, pos + 1 - p.y};
}

Point from_chart(const SquareComplex& c, Family f, int square, const Point& chart) {
  Rational pos(c.position_of(f, square));
  if (f == Family::Alpha) return {chart.x - pos, chart.y};
  if (c.flip(square) > 0) return {chart.x, chart.y - pos};
  return {1 - chart.x, pos + 1 - chart.y};
}

std::vector<ChartSegment> to_chart(const SquareComplex& c, CylinderRef cyl, const Polyline& p) {
  std::vector<ChartSegment> out;
  for (const auto& s : p.segments) {
    if (c.cylinder_of(cyl.family, s.square) != cyl.index) continue;
    out.push_back({s.square, to_chart(c, cyl.family, s.square, s.a),
                   to_chart(c, cyl.family, s.square, s.b)});
  }
  return out;
}

int crossing_number(const Polyline& p, const Polyline& q) {
  int total = 0;
  for_each_crossing(p, q, [&](int s) { total += s; });
  return total;
}

int geometric_intersections(const Polyline& p, const Polyline& q) {
  int total = 0;
  for_each_crossing(p, q, [&](int) { ++total; });
  return total;
}

Traversal parse_curve(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool header = false;
  Traversal out;
  auto fail = [&](const std::string& msg) -> void {
    throw Error(ErrorCode::Syntax, "line " + std::to_string(line) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line;
    std::string_view l = raw;
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    if (!header) {
      if (l != "curve:") fail("expected 'curve:'");
      header = true;
      continue;
    }
    if (l.size() < 2 || l.front() != '(' || l.back() != ')') fail("expected '(square, entry, exit[, t=p/q])'");
    l = l.substr(1, l.size() - 2);
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      auto comma = l.find(',', start);
      parts.emplace_back(trim(l.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (parts.size() != 3 && parts.size() != 4) fail("expected 3 or 4 fields");
    TraversalStep step;
    const auto& id = parts[0];
    if (id.empty() || id.size() > 9 || !std::all_of(id.begin(), id.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      fail("bad square id '" + id + "'");
    }
    step.square = std::stoi(id);
    auto entry = parts[1].size() == 1 ? side_from_letter(parts[1][0]) : std::nullopt;
    auto exit = parts[2].size() == 1 ? side_from_letter(parts[2][0]) : std::nullopt;
    if (!entry || !exit) fail("sides must be one of N, E, S, W");
    step.entry = *entry;
    step.exit = *exit;
    if (parts.size() == 4) {
      std::string_view tp = parts[3];
      if (tp.substr(0, 2) != "t=") fail("expected 't=p/q'");
      try {
        step.t = parse_rational(trim(tp.substr(2)));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    out.push_back(step);
  }
  if (!header) throw Error(ErrorCode::Syntax, "missing 'curve:' header");
  if (out.empty()) throw Error(ErrorCode::Syntax, "curve has no steps");
  return out;
}

std::string format_curve(const Traversal& t) {
  std::ostringstream out;
  out << "curve:\n";
  for (const auto& s : t) {
    out << '(' << s.square << ", " << side_letter(s.entry) << ", " << side_letter(s.exit);
    if (s.t != Rational(1, 2)) out << ", t=" << to_fraction_string(s.t);
    out << ")\n";
  }
  return out.str();
}

}  // namespace origami
