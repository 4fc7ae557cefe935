#include "support.hpp"

#include <cmath>
#include <numeric>

namespace origami::testing {

namespace {

Fixture make_fixture(SquareComplex c, std::string name) {
  HomologyFrame f = build_frame(c);
  return {std::move(c), std::move(f), std::move(name)};
}

}  // namespace

const Fixture& torus_fixture() {
  static const Fixture f = make_fixture(torus(), "torus");
  return f;
}

const Fixture& genus2_fixture() {
  static const Fixture f = make_fixture(genus2_block(), "genus2_block");
  return f;
}

const Genus5& genus5_data() {
  static const Genus5 g = genus5_paper();
  return g;
}

const Fixture& genus5_fixture() {
  static const Fixture f = make_fixture(genus5_data().surface, "genus5");
  return f;
}

TwistWord random_word(const SquareComplex& c, std::mt19937& rng, int max_length, int max_power) {
  std::vector<CylinderRef> refs;
  for (Family fam : {Family::Alpha, Family::Beta}) {
    for (int i = 0; i < static_cast<int>(c.strands(fam).size()); ++i) refs.push_back({fam, i});
  }
  std::uniform_int_distribution<int> len(1, max_length);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(refs.size()) - 1);
  std::uniform_int_distribution<int> pow(1, max_power);
  TwistWord w;
  for (int i = len(rng); i > 0; --i) {
    long k = pow(rng);
    if (rng() % 2) k = -k;
    w.letters.push_back({refs[pick(rng)], k});
  }
  return w;
}

int vertex_count(const SquareComplex& c) {
  const int n = c.size();
  std::vector<int> parent(4 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Corner indices: 0 = NE, 1 = NW, 2 = SW, 3 = SE. Ends of each side, in
  // increasing side parameter.
  auto ends = [](Side s) -> std::pair<int, int> {
    switch (s) {
      case Side::N: return {1, 0};
      case Side::S: return {2, 3};
      case Side::E: return {3, 0};
      case Side::W: return {2, 1};
    }
    return {0, 0};
  };
  for (int s = 0; s < n; ++s) {
    for (Side side : {Side::N, Side::E, Side::S, Side::W}) {
      Gluing g = c.glue(s, side);
      auto [lo, hi] = ends(side);
      auto [glo, ghi] = ends(g.side);
      if (g.reversed) std::swap(glo, ghi);
      parent[find(4 * s + lo)] = find(4 * g.square + glo);
      parent[find(4 * s + hi)] = find(4 * g.square + ghi);
    }
  }
  int roots = 0;
  for (int i = 0; i < 4 * n; ++i) roots += find(i) == i;
  return roots;
}

Mat2 shear_product(const std::vector<std::pair<bool, long long>>& blocks) {
  Mat2 m{1, 0, 0, 1};
  for (auto [alpha, s] : blocks) {
    Mat2 b = alpha ? Mat2{1, s, 0, 1} : Mat2{1, 0, s, 1};
    m = {m.a * b.a + m.b * b.c, m.a * b.b + m.b * b.d, m.c * b.a + m.d * b.c,
         m.c * b.b + m.d * b.d};
  }
  return m;
}

long double larger_root(long long trace) {
  long double t = static_cast<long double>(trace < 0 ? -trace : trace);
  return (t + std::sqrt(t * t - 4.0L)) / 2.0L;
}

Traversal with_random_parameters(const Traversal& t, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 96);
  Traversal out = t;
  for (auto& step : out) {
    int k = num(rng);
    if (2 * k == 97) ++k;
    step.t = make_rational(k, 97);
  }
  return out;
}

Traversal pushed_off(const Traversal& t, const Rational& eps) {
  Traversal out = t;
  for (auto& step : out) step.t += eps;
  return out;
}

bool same_cycle(const Polyline& a, const Polyline& b) {
  const std::size_t n = a.segments.size();
  if (n != b.segments.size()) return false;
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    if (!(b.segments[shift] == a.segments[0])) continue;
    bool all = true;
    for (std::size_t i = 1; i < n && all; ++i) all = a.segments[i] == b.segments[(i + shift) % n];
    if (all) return true;
  }
  return false;
}

std::vector<Traversal> test_curves(const Fixture& f) {
  std::vector<Traversal> out;
  for (const auto& g : f.frame.cycles) out.push_back(traversal_from_polyline(g));
  for (Family fam : {Family::Alpha, Family::Beta}) {
    for (int i = 0; i < static_cast<int>(f.surface.strands(fam).size()); ++i) {
      out.push_back(traversal_from_polyline(core(f.surface, {fam, i})));
    }
  }
  if (f.name == "genus5") {
    out.push_back(genus5_data().gamma);
    out.push_back(genus5_data().gamma_prime);
  }
  return out;
}

}  // namespace origami::testing
