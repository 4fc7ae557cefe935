#include "origami/surface.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "origami/error.hpp"

namespace origami {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(ErrorCode code, int line, const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ": " + msg);
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'';
  });
}

std::vector<std::string> bracket_items(std::string_view body, int line) {
  body = trim(body);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    fail(ErrorCode::Syntax, line, "expected a bracketed list");
  }
  body = trim(body.substr(1, body.size() - 2));
  std::vector<std::string> items;
  if (body.empty()) return items;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    auto item = trim(body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start));
    if (item.empty()) fail(ErrorCode::Syntax, line, "empty list item");
    items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

int parse_id(const std::string& tok, int line) {
  if (tok.empty() || tok.size() > 9 ||
      !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    fail(ErrorCode::Syntax, line, "bad square id '" + tok + "'");
  }
  return std::stoi(tok);
}

}  // namespace

char side_letter(Side s) {
  switch (s) {
    case Side::N: return 'N';
    case Side::E: return 'E';
    case Side::S: return 'S';
    case Side::W: return 'W';
  }
  return '?';
}

std::optional<Side> side_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'N': return Side::N;
    case 'E': return Side::E;
    case 'S': return Side::S;
    case 'W': return Side::W;
    default: return std::nullopt;
  }
}

std::string_view family_name(Family f) { return f == Family::Alpha ? "alpha" : "beta"; }

Side ccw_side(Corner c) {
  switch (c) {
    case Corner::NE: return Side::E;
    case Corner::NW: return Side::N;
    case Corner::SW: return Side::W;
    case Corner::SE: return Side::S;
  }
  return Side::N;
}

Side cw_side(Corner c) {
  switch (c) {
    case Corner::NE: return Side::N;
    case Corner::NW: return Side::W;
    case Corner::SW: return Side::S;
    case Corner::SE: return Side::E;
  }
  return Side::N;
}

Corner corner_at(Side s, bool high_end) {
  switch (s) {
    case Side::N: return high_end ? Corner::NE : Corner::NW;
    case Side::S: return high_end ? Corner::SE : Corner::SW;
    case Side::E: return high_end ? Corner::NE : Corner::SE;
    case Side::W: return high_end ? Corner::NW : Corner::SW;
  }
  return Corner::NE;
}

bool is_high_end(Corner c, Side s) { return corner_at(s, true) == c; }

SquareComplex SquareComplex::assemble(std::vector<Strand> alpha, std::vector<Strand> beta,
                                      std::vector<int> flips) {
  SquareComplex c;
  c.n_ = static_cast<int>(flips.size());
  if (c.n_ == 0) throw Error(ErrorCode::Syntax, "surface has no squares");
  for (int f : flips) {
    if (f != 1 && f != -1) throw Error(ErrorCode::BadFlip, "flip must be +1 or -1");
  }
  std::set<std::string> names;
  for (const auto* family : {&alpha, &beta}) {
    if (family->empty()) throw Error(ErrorCode::Syntax, "a family has no curves");
    std::vector<int> seen(c.n_, 0);
    for (const auto& s : *family) {
      if (!valid_name(s.name)) throw Error(ErrorCode::Syntax, "bad curve name '" + s.name + "'");
      if (!names.insert(s.name).second) {
        throw Error(ErrorCode::Syntax, "duplicate curve name '" + s.name + "'");
      }
      if (s.squares.empty()) throw Error(ErrorCode::Syntax, "curve '" + s.name + "' is empty");
      for (int sq : s.squares) {
        if (sq < 0 || sq >= c.n_) {
          throw Error(ErrorCode::Syntax, "square id " + std::to_string(sq) + " out of range");
        }
        if (seen[sq]++) {
          throw Error(ErrorCode::DuplicateSquare,
                      "square " + std::to_string(sq) + " repeated in curve family");
        }
      }
    }
    for (int sq = 0; sq < c.n_; ++sq) {
      if (!seen[sq]) {
        throw Error(ErrorCode::MissingSquare,
                    "square " + std::to_string(sq) + " absent from " +
                        std::string(family == &alpha ? "alpha" : "beta") + " curves");
      }
    }
  }
  c.strands_[0] = std::move(alpha);
  c.strands_[1] = std::move(beta);
  c.flips_ = std::move(flips);
  c.index_strands();
  c.walk_corners();
  return c;
}

SquareComplex SquareComplex::build(std::vector<Strand> alpha, std::vector<Strand> beta,
                                   std::vector<int> flips) {
  SquareComplex c = assemble(std::move(alpha), std::move(beta), std::move(flips));
  c.validate();
  c.validated_ = true;
  return c;
}

void SquareComplex::index_strands() {
  for (int f = 0; f < 2; ++f) {
    cyl_[f].assign(n_, -1);
    pos_[f].assign(n_, -1);
    for (int i = 0; i < static_cast<int>(strands_[f].size()); ++i) {
      const auto& sq = strands_[f][i].squares;
      for (int p = 0; p < static_cast<int>(sq.size()); ++p) {
        cyl_[f][sq[p]] = i;
        pos_[f][sq[p]] = p;
      }
    }
  }
}

int SquareComplex::width(CylinderRef ref) const {
  return static_cast<int>(strand(ref).squares.size());
}

int SquareComplex::next(Family f, int square) const {
  const auto& sq = strands_[idx(f)][cyl_[idx(f)][square]].squares;
  return sq[(pos_[idx(f)][square] + 1) % sq.size()];
}

int SquareComplex::prev(Family f, int square) const {
  const auto& sq = strands_[idx(f)][cyl_[idx(f)][square]].squares;
  return sq[(pos_[idx(f)][square] + sq.size() - 1) % sq.size()];
}

Gluing SquareComplex::glue(int square, Side side) const {
  switch (side) {
    case Side::E: return {next(Family::Alpha, square), Side::W, false};
    case Side::W: return {prev(Family::Alpha, square), Side::E, false};
    default: break;
  }
  if (side == beta_exit(square)) {
    int t = next(Family::Beta, square);
    return {t, beta_entry(t), flips_[square] != flips_[t]};
  }
  int t = prev(Family::Beta, square);
  return {t, beta_exit(t), flips_[square] != flips_[t]};
}

void SquareComplex::walk_corners() {
  corner_face_.assign(4 * n_, -1);
  faces_.clear();
  for (int start = 0; start < 4 * n_; ++start) {
    if (corner_face_[start] >= 0) continue;
    Face face;
    const int id = static_cast<int>(faces_.size());
    CornerRef cur{start / 4, static_cast<Corner>(start % 4)};
    while (true) {
      int key = 4 * cur.square + idx(cur.corner);
      if (corner_face_[key] >= 0) {
        if (key != start) throw Error(ErrorCode::NonFilling, "corner walk is not a permutation");
        break;
      }
      corner_face_[key] = id;
      face.corners.push_back(cur);
      Side s = ccw_side(cur.corner);
      Gluing g = glue(cur.square, s);
      CornerRef landed{g.square, corner_at(g.side, is_high_end(cur.corner, s) != g.reversed)};
      if (ccw_side(landed.corner) == g.side) {
        throw Error(ErrorCode::NonFilling, "square frames do not induce a global orientation");
      }
      cur = landed;
    }
    faces_.push_back(std::move(face));
  }
}

void SquareComplex::validate() const {
  for (const auto& f : faces_) {
    if (f.corners.size() % 2 != 0 || f.half_size() < 2) {
      throw Error(ErrorCode::NonFilling,
                  "complementary region with " + std::to_string(f.corners.size()) +
                      " corners (need a 2n-gon with n >= 2)");
    }
  }
  UnionFind uf(n_);
  for (int s = 0; s < n_; ++s) {
    uf.unite(s, next(Family::Alpha, s));
    uf.unite(s, next(Family::Beta, s));
  }
  for (int s = 1; s < n_; ++s) {
    if (uf.find(s) != uf.find(0)) throw Error(ErrorCode::Disconnected, "surface is disconnected");
  }
  int chi = euler_characteristic();
  if (chi > 0 || chi % 2 != 0) {
    throw Error(ErrorCode::NonFilling, "Euler characteristic " + std::to_string(chi));
  }
}

std::optional<CylinderRef> SquareComplex::find(std::string_view name) const {
  for (int f = 0; f < 2; ++f) {
    for (int i = 0; i < static_cast<int>(strands_[f].size()); ++i) {
      if (strands_[f][i].name == name) return CylinderRef{static_cast<Family>(f), i};
    }
  }
  return std::nullopt;
}

SquareComplex parse_surface(std::string_view text) {
  enum class Section { Start, Header, Alpha, Beta, Done };
  Section section = Section::Start;
  int n = -1;
  std::vector<Strand> alpha, beta;
  std::vector<int> flips;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  int flips_line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view l = raw;
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    auto colon = l.find(':');
    if (colon == std::string_view::npos) fail(ErrorCode::Syntax, line, "expected 'key: value'");
    auto key = trim(l.substr(0, colon));
    auto value = trim(l.substr(colon + 1));
    if (section == Section::Done) fail(ErrorCode::Syntax, line, "content after flips");
    if (key == "squares") {
      if (section != Section::Start) fail(ErrorCode::Syntax, line, "'squares' must come first");
      n = parse_id(std::string(value), line);
      if (n == 0) fail(ErrorCode::Syntax, line, "surface has no squares");
      section = Section::Header;
    } else if (key == "alpha") {
      if (section != Section::Header || !value.empty()) {
        fail(ErrorCode::Syntax, line, "misplaced 'alpha:' section");
      }
      section = Section::Alpha;
    } else if (key == "beta") {
      if (section != Section::Alpha || !value.empty()) {
        fail(ErrorCode::Syntax, line, "misplaced 'beta:' section");
      }
      section = Section::Beta;
    } else if (key == "flips") {
      if (section != Section::Beta) fail(ErrorCode::Syntax, line, "misplaced 'flips:' line");
      flips_line = line;
      for (const auto& tok : bracket_items(value, line)) {
        if (tok == "+" || tok == "+1") {
          flips.push_back(1);
        } else if (tok == "-" || tok == "-1") {
          flips.push_back(-1);
        } else {
          fail(ErrorCode::BadFlip, line, "bad flip '" + tok + "'");
        }
      }
      section = Section::Done;
    } else {
      if (section != Section::Alpha && section != Section::Beta) {
        fail(ErrorCode::Syntax, line, "unexpected '" + std::string(key) + "'");
      }
      if (!valid_name(key)) fail(ErrorCode::Syntax, line, "bad curve name '" + std::string(key) + "'");
      Strand s{std::string(key), {}};
      for (const auto& tok : bracket_items(value, line)) {
        int id = parse_id(tok, line);
        if (id >= n) fail(ErrorCode::Syntax, line, "square id " + tok + " out of range");
        s.squares.push_back(id);
      }
      if (s.squares.empty()) fail(ErrorCode::Syntax, line, "empty curve");
      (section == Section::Alpha ? alpha : beta).push_back(std::move(s));
    }
  }
  if (section != Section::Done) fail(ErrorCode::Syntax, line, "missing sections (need squares, alpha, beta, flips)");
  if (static_cast<int>(flips.size()) != n) {
    fail(ErrorCode::BadFlip, flips_line,
         "expected " + std::to_string(n) + " flips, got " + std::to_string(flips.size()));
  }
  return SquareComplex::build(std::move(alpha), std::move(beta), std::move(flips));
}

std::string format_surface(const SquareComplex& c) {
  std::ostringstream out;
  auto list = [&](const std::vector<int>& v) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ']';
  };
  out << "squares: " << c.size() << '\n';
  for (Family f : {Family::Alpha, Family::Beta}) {
    out << family_name(f) << ":\n";
    for (const auto& s : c.strands(f)) {
      out << s.name << ": ";
      list(s.squares);
      out << '\n';
    }
  }
  out << "flips: [";
  for (int i = 0; i < c.size(); ++i) out << (i ? ", " : "") << (c.flip(i) > 0 ? '+' : '-');
  out << "]\n";
  return out.str();
}

std::vector<Face> faces(const SquareComplex& c) { return c.faces(); }

int genus(const SquareComplex& c) {
  if (!c.validated()) {
    return genus(SquareComplex::build(c.strands(Family::Alpha), c.strands(Family::Beta), c.flips()));
  }
  return (2 - c.euler_characteristic()) / 2;
}

Cylinder cylinder(const SquareComplex& c, CylinderRef ref) {
  const auto& s = c.strand(ref);
  return Cylinder{ref.family, ref.index, s.name, static_cast<int>(s.squares.size()), s.squares};
}

std::vector<Cylinder> cylinders(const SquareComplex& c) {
  std::vector<Cylinder> out;
  for (Family f : {Family::Alpha, Family::Beta}) {
    for (int i = 0; i < static_cast<int>(c.strands(f).size()); ++i) {
      out.push_back(cylinder(c, {f, i}));
    }
  }
  return out;
}

int intersection_count(const SquareComplex& c, int alpha_index, int beta_index) {
  int count = 0;
  for (int s = 0; s < c.size(); ++s) {
    if (c.cylinder_of(Family::Alpha, s) == alpha_index &&
        c.cylinder_of(Family::Beta, s) == beta_index) {
      ++count;
    }
  }
  return count;
}

CutComponents cut_along(const SquareComplex& c, const std::vector<CylinderRef>& cores) {
  auto is_cut = [&](Family f, int square) {
    return std::find(cores.begin(), cores.end(), CylinderRef{f, c.cylinder_of(f, square)}) !=
           cores.end();
  };
  const int n = c.size();
  UnionFind uf(4 * n);
  auto q = [](int s, Corner k) { return 4 * s + idx(k); };
  for (int s = 0; s < n; ++s) {
    if (!is_cut(Family::Alpha, s)) {
      uf.unite(q(s, Corner::NE), q(s, Corner::SE));
      uf.unite(q(s, Corner::NW), q(s, Corner::SW));
    }
    if (!is_cut(Family::Beta, s)) {
      uf.unite(q(s, Corner::NE), q(s, Corner::NW));
      uf.unite(q(s, Corner::SE), q(s, Corner::SW));
    }
    for (Side side : {Side::N, Side::E, Side::S, Side::W}) {
      Gluing g = c.glue(s, side);
      for (bool high : {false, true}) {
        uf.unite(q(s, corner_at(side, high)), q(g.square, corner_at(g.side, high != g.reversed)));
      }
    }
  }
  CutComponents out;
  out.quadrant_label.assign(4 * n, -1);
  std::vector<int> label_of_root(4 * n, -1);
  for (int i = 0; i < 4 * n; ++i) {
    int r = uf.find(i);
    if (label_of_root[r] < 0) {
      label_of_root[r] = out.count++;
      out.quarter_areas.push_back(0);
    }
    out.quadrant_label[i] = label_of_root[r];
    ++out.quarter_areas[label_of_root[r]];
  }
  return out;
}

bool is_separating(const SquareComplex& c, CylinderRef ref) {
  return cut_along(c, {ref}).count > 1;
}

}  // namespace origami
