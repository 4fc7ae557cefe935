#include "origami/homology.hpp"

#include <deque>
#include <map>

#include "origami/error.hpp"

namespace origami {

namespace {

// Directed edge of the graph alpha u beta: leaves `from` through one side and
// enters `to` through the glued side.
struct Edge {
  int from;
  Side from_side;
  int to;
  Side to_side;
};

std::vector<Edge> graph_edges(const SquareComplex& c) {
  std::vector<Edge> edges;
  const int n = c.size();
  for (int s = 0; s < n; ++s) edges.push_back({s, Side::E, c.next(Family::Alpha, s), Side::W});
  for (int s = 0; s < n; ++s) {
    int t = c.next(Family::Beta, s);
    edges.push_back({s, c.beta_exit(s), t, c.beta_entry(t)});
  }
  return edges;
}

Edge reverse(const Edge& e) { return {e.to, e.to_side, e.from, e.from_side}; }

std::vector<std::vector<Pass>> spanning_routes(const SquareComplex& c) {
  const int n = c.size();
  const auto edges = graph_edges(c);
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    incident[edges[e].from].push_back(e);
    if (edges[e].to != edges[e].from) incident[edges[e].to].push_back(e);
  }
  std::vector<int> parent_edge(n, -1), depth(n, -1);
  std::vector<bool> in_tree(edges.size(), false);
  std::deque<int> queue{0};
  depth[0] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : incident[v]) {
      int w = edges[e].from == v ? edges[e].to : edges[e].from;
      if (depth[w] >= 0) continue;
      depth[w] = depth[v] + 1;
      parent_edge[w] = e;
      in_tree[e] = true;
      queue.push_back(w);
    }
  }
  auto up = [&](int v) {  // traversal from v to its parent
    const Edge& e = edges[parent_edge[v]];
    return e.to == v ? reverse(e) : e;
  };

  std::vector<std::vector<Pass>> routes;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (in_tree[e]) continue;
    // Walk: the chord from u to v, then the tree path from v back to u.
    int u = edges[e].from, v = edges[e].to;
    std::vector<Edge> walk{edges[e]};
    std::vector<Edge> down;  // lca -> u, collected backwards
    int a = v, b = u;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        walk.push_back(up(a));
        a = walk.back().to;
      } else {
        down.push_back(reverse(up(b)));
        b = down.back().from;
      }
    }
    walk.insert(walk.end(), down.rbegin(), down.rend());
    std::vector<Pass> route;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Edge& in = walk[i];
      const Edge& out = walk[(i + 1) % walk.size()];
      route.push_back({in.to, in.to_side, out.from_side});
    }
    routes.push_back(std::move(route));
  }
  return routes;
}

Rational perturbation(const HomologyFrame& f, int attempt) {
  if (f.perturbation_forced) {
    return Rational(1) / (Integer(f.perturbation_denominator) << attempt);
  }
  if (attempt == 0) return 0;
  return Rational(1) / (Integer(f.perturbation_denominator) << (attempt - 1));
}

template <typename Compute>
auto with_retries(const HomologyFrame& f, Compute compute) {
  for (int attempt = 0;; ++attempt) {
    const bool last = attempt >= f.max_retries;
    try {
      if (attempt == 0) return compute(f.cycles);
      return compute(route_cycles(f.surface, f.routes, perturbation(f, attempt),
                                  f.perturbation_denominator));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotTransverse || last) throw;
    }
  }
}

}  // namespace

std::vector<Polyline> route_cycles(const SquareComplex& c,
                                   const std::vector<std::vector<Pass>>& routes,
                                   const Rational& delta, long denominator) {
  const int m = static_cast<int>(routes.size());
  std::vector<Polyline> out;
  out.reserve(m);
  for (int k = 0; k < m; ++k) {
    const Rational base = make_rational(k + 1, m + 2) + delta;
    std::map<int, int> visits;  // canonical side -> visits so far
    // Parameter of the crossing at (square, side) in that square's own frame.
    auto param = [&](int square, Side side, int visit) {
      Gluing g = c.glue(square, side);
      Rational t = base + Rational(visit) / denominator;
      bool canonical = 4 * square + idx(side) <= 4 * g.square + idx(g.side);
      return (canonical || !g.reversed) ? t : Rational(1 - t);
    };
    auto canonical_key = [&](int square, Side side) {
      Gluing g = c.glue(square, side);
      return std::min(4 * square + idx(side), 4 * g.square + idx(g.side));
    };
    std::vector<int> exit_visit;
    for (const auto& pass : routes[k]) exit_visit.push_back(visits[canonical_key(pass.square, pass.exit)]++);
    Polyline p;
    const std::size_t len = routes[k].size();
    for (std::size_t i = 0; i < len; ++i) {
      const Pass& pass = routes[k][i];
      const std::size_t prev = (i + len - 1) % len;
      Rational ta = param(pass.square, pass.entry, exit_visit[prev]);
      Rational tb = param(pass.square, pass.exit, exit_visit[i]);
      p.segments.push_back({pass.square, side_point(pass.entry, ta), side_point(pass.exit, tb)});
    }
    out.push_back(std::move(p));
  }
  return out;
}

HomologyFrame build_frame(const SquareComplex& c, const FrameOptions& options) {
  HomologyFrame f{c, {}, {}, {}, {}, {}, {}, {}, {}, {}, 0, false, 8};
  f.routes = spanning_routes(c);
  const int m = static_cast<int>(f.routes.size());
  f.perturbation_forced = options.perturbation_denominator.has_value();
  f.perturbation_denominator =
      options.perturbation_denominator.value_or(64L * m * c.size());
  if (f.perturbation_denominator <= 0) {
    throw Error(ErrorCode::Degenerate, "perturbation denominator must be positive");
  }
  f.max_retries = options.max_retries;
  f.cycles = route_cycles(c, f.routes, perturbation(f, 0), f.perturbation_denominator);

  f.pairing.assign(m, IntVector(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      int x = crossing_number(f.cycles[i], f.cycles[j]);
      f.pairing[i][j] = x;
      f.pairing[j][i] = -x;
    }
  }
  f.echelon = row_echelon(f.pairing, m);
  const int expected = 2 * genus(c);
  if (f.echelon.rank != expected) {
    throw Error(ErrorCode::RankMismatch, "pairing rank " + std::to_string(f.echelon.rank) +
                                             " differs from 2g = " + std::to_string(expected));
  }
  f.basis.assign(f.echelon.h.begin(), f.echelon.h.begin() + expected);
  f.basis_cycles.assign(f.echelon.u.begin(), f.echelon.u.begin() + expected);
  f.gram = multiply(f.basis, transpose(f.basis_cycles));
  Integer det = expected == 0 ? Integer(1) : determinant(f.gram);
  if (abs(det) != 1) {
    throw Error(ErrorCode::RankMismatch, "intersection form is not unimodular (det " +
                                             det.get_str() + ")");
  }
  for (int i = 0; i < static_cast<int>(c.strands(Family::Alpha).size()); ++i) {
    f.alpha_cores.push_back(class_of(f, core(c, {Family::Alpha, i})));
  }
  for (int j = 0; j < static_cast<int>(c.strands(Family::Beta).size()); ++j) {
    f.beta_cores.push_back(class_of(f, core(c, {Family::Beta, j})));
  }
  return f;
}

IntVector pairing_vector(const HomologyFrame& f, const Polyline& p) {
  return with_retries(f, [&](const std::vector<Polyline>& cycles) {
    IntVector v;
    v.reserve(cycles.size());
    for (const auto& g : cycles) v.emplace_back(crossing_number(p, g));
    return v;
  });
}

ClassVector class_of(const HomologyFrame& f, const Polyline& p) {
  auto coords = lattice_coordinates(f.echelon, pairing_vector(f, p));
  if (!coords) throw Error(ErrorCode::RankMismatch, "pairing vector outside the homology lattice");
  return *coords;
}

ClassVector class_of(const HomologyFrame& f, const Cycle& z) {
  ClassVector total(f.rank(), 0);
  for (const auto& wc : z) {
    ClassVector v = class_of(f, wc.curve);
    for (int i = 0; i < f.rank(); ++i) total[i] += wc.weight * v[i];
  }
  return total;
}

Integer intersection(const HomologyFrame& f, const ClassVector& a, const ClassVector& b) {
  IntVector gb = multiply(f.gram, b);
  Integer out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * gb[i];
  return out;
}

Cycle representative(const HomologyFrame& f, const ClassVector& v) {
  const std::size_t m = f.cycles.size();
  IntVector coeff(m, 0);
  for (int i = 0; i < f.rank(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t k = 0; k < m; ++k) coeff[k] += v[i] * f.basis_cycles[i][k];
  }
  Cycle z;
  for (std::size_t k = 0; k < m; ++k) {
    if (coeff[k] != 0) z.push_back({f.cycles[k], coeff[k]});
  }
  return z;
}

bool is_bounding_pair(const HomologyFrame& f, const Polyline& p, const Polyline& q,
                      bool isotopic) {
  if (isotopic) return false;
  ClassVector a = class_of(f, p);
  ClassVector b = class_of(f, q);
  if (is_zero(a)) return false;
  ClassVector neg = b;
  for (auto& x : neg) x = -x;
  if (a != b && a != neg) return false;
  try {
    return geometric_intersections(p, q) == 0;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotTransverse) return false;
    throw;
  }
}

IntMatrix twist_action(const HomologyFrame& f, const TwistWord& w) {
  const int r = f.rank();
  IntMatrix m = identity_matrix(r);
  for (const auto& letter : w.letters) {
    const ClassVector& c = f.core_class(letter.curve);
    // x -> x + k <c, x> c, with <c, x> = c^T G x.
    IntVector row(r, 0);
    for (int j = 0; j < r; ++j) {
      for (int i = 0; i < r; ++i) row[j] += c[i] * f.gram[i][j];
    }
    IntMatrix t = identity_matrix(r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) t[i][j] += Integer(letter.power) * c[i] * row[j];
    }
    m = multiply(m, t);
  }
  return m;
}

IntMatrix invariant_sublattice(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  return kernel_basis(subtract(m, identity_matrix(n)), n);
}

}  // namespace origami
