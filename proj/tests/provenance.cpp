#include "provenance.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "origami/error.hpp"

namespace origami::provenance {

namespace {

std::vector<int> flips_from_mask(int count, unsigned mask) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = (mask >> i) & 1u ? -1 : 1;
  return out;
}

std::optional<SquareComplex> try_build(std::vector<Strand> alpha, std::vector<Strand> beta,
                                       std::vector<int> flips) {
  try {
    return SquareComplex::build(std::move(alpha), std::move(beta), std::move(flips));
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Cyclic walk along `order` from the successor of `from` back to `from`.
std::vector<int> long_way(const std::vector<int>& order, int from) {
  auto it = std::find(order.begin(), order.end(), from);
  std::size_t i = static_cast<std::size_t>(it - order.begin());
  std::vector<int> out;
  for (std::size_t k = 1; k <= order.size(); ++k) out.push_back(order[(i + k) % order.size()]);
  return out;
}

std::vector<int> shifted(std::vector<int> v, int by) {
  for (auto& x : v) x += by;
  return v;
}

}  // namespace

bool genus2_block_ok(const SquareComplex& c) {
  if (c.size() != 8 || genus(c) != 2) return false;
  int octagons = 0, squares = 0;
  for (const auto& f : c.faces()) {
    octagons += f.half_size() == 4;
    squares += f.half_size() == 2;
  }
  return octagons == 2 && squares == 4 && is_separating(c, {Family::Alpha, 0}) &&
         is_separating(c, {Family::Beta, 0});
}

std::optional<SquareComplex> search_genus2_block() {
  std::vector<int> alpha(8);
  std::iota(alpha.begin(), alpha.end(), 0);
  std::vector<int> rest(7);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    std::vector<int> beta{0};
    beta.insert(beta.end(), rest.begin(), rest.end());
    for (unsigned mask = 0; mask < 256; ++mask) {
      auto c = try_build({{"a2'", alpha}}, {{"b2'", beta}}, flips_from_mask(8, mask));
      if (c && genus2_block_ok(*c)) return c;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

bool genus5_ok(const SquareComplex& c) {
  if (c.size() != 20 || genus(c) != 5 || c.faces().size() != 12) return false;
  const CylinderRef a1{Family::Alpha, 0}, a2{Family::Alpha, 1};
  const CylinderRef b1{Family::Beta, 0}, b2{Family::Beta, 1};
  if (!is_separating(c, a2) || !is_separating(c, b2)) return false;
  if (is_separating(c, a1) || is_separating(c, b1)) return false;
  auto cut = cut_along(c, {a1, b1});
  return cut.count == 2 && cut.quarter_areas[0] == cut.quarter_areas[1];
}

std::optional<SquareComplex> search_genus5(const SquareComplex& block) {
  const auto& alpha = block.strand({Family::Alpha, 0}).squares;
  const auto& beta = block.strand({Family::Beta, 0}).squares;
  for (int be = 0; be < 8; ++be) {
    for (int ae = 0; ae < 8; ++ae) {
      for (int variant = 0; variant < 4; ++variant) {
        // Second copy: squares shifted by 8, curves possibly reversed.
        const bool rev_a = variant & 1, rev_b = variant & 2;
        std::vector<int> alpha2 = shifted(alpha, 8), beta2 = shifted(beta, 8);
        std::vector<int> flips2 = block.flips();
        if (rev_a) std::reverse(alpha2.begin(), alpha2.end());
        if (rev_b) std::reverse(beta2.begin(), beta2.end());
        if (rev_a != rev_b) {
          for (auto& f : flips2) f = -f;
        }
        // The beta edge p -> q of the first copy and its copy in the second.
        const int p = beta[be], q = beta[(be + 1) % 8];
        const int p2 = (rev_b ? q : p) + 8;
        const int a = alpha[ae], b = alpha[(ae + 1) % 8];
        const int a2 = (rev_a ? b : a) + 8;
        std::vector<int> b2_order{16};
        auto part = long_way(beta2, p2);
        b2_order.insert(b2_order.end(), part.begin(), part.end());
        b2_order.push_back(17);
        part = long_way(beta, p);
        b2_order.insert(b2_order.end(), part.begin(), part.end());
        std::vector<int> a2_order{18};
        part = long_way(alpha2, a2);
        a2_order.insert(a2_order.end(), part.begin(), part.end());
        a2_order.push_back(19);
        part = long_way(alpha, a);
        a2_order.insert(a2_order.end(), part.begin(), part.end());
        for (unsigned mask = 0; mask < 16; ++mask) {
          std::vector<int> flips = block.flips();
          flips.insert(flips.end(), flips2.begin(), flips2.end());
          auto tube = flips_from_mask(4, mask);
          flips.insert(flips.end(), tube.begin(), tube.end());
          auto c = try_build({{"a1", {16, 17}}, {"a2", a2_order}},
                             {{"b1", {18, 19}}, {"b2", b2_order}}, flips);
          if (c && genus5_ok(*c)) return c;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

struct GammaSearch {
  const SquareComplex& c;
  Traversal path;
  std::vector<bool> used;
  int limit = 0;

  bool allowed(int square) const { return square < 16 || square == 18; }

  bool extend() {
    const TraversalStep cur = path.back();
    if (static_cast<int>(path.size()) > limit) return false;
    std::array<Side, 4> sides{Side::N, Side::E, Side::S, Side::W};
    for (Side exit : sides) {
      if (exit == cur.entry) continue;
      // Tube squares are crossed straight through.
      if ((cur.square == 16 || cur.square == 18) && exit != opposite(cur.entry)) continue;
      Gluing g = c.glue(cur.square, exit);
      path.back().exit = exit;
      if (g.square == 16) {
        if (g.side == path.front().entry && used[18] &&
            static_cast<int>(path.size()) == limit) {
          return true;
        }
        continue;
      }
      if (used[g.square] || !allowed(g.square)) continue;
      if (g.square == 18 && g.side != Side::W && g.side != Side::E) continue;
      used[g.square] = true;
      path.push_back({g.square, g.side, g.side, Rational(1, 3)});
      if (extend()) return true;
      path.pop_back();
      used[g.square] = false;
    }
    return false;
  }

  static Side opposite(Side s) {
    switch (s) {
      case Side::N: return Side::S;
      case Side::S: return Side::N;
      case Side::E: return Side::W;
      case Side::W: return Side::E;
    }
    return s;
  }
};

}  // namespace

std::optional<Traversal> search_gamma_prime(const SquareComplex& genus5) {
  for (int limit = 2; limit <= 20; ++limit) {
    for (Side start : {Side::S, Side::N}) {
      GammaSearch s{genus5, {}, std::vector<bool>(20, false), limit};
      s.used[16] = true;
      s.path.push_back({16, start, start, Rational(1, 3)});
      if (s.extend()) return s.path;
    }
  }
  return std::nullopt;
}

}  // namespace origami::provenance
