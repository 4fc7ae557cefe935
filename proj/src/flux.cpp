#include "origami/flux.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <optional>

#include "origami/error.hpp"

namespace origami {

namespace {

struct Difference {
  int a;
  int b;
  Integer d;
};

// Values w on nodes 0..n-1 with w[b] - w[a] = d for every (a, b, d), shifted
// to minimum 0; nullopt when the equations are inconsistent.
std::optional<std::vector<Integer>> solve_differences(int nodes,
                                                      const std::vector<Difference>& eqs) {
  std::vector<std::vector<std::pair<int, Integer>>> adj(nodes);
  for (const auto& e : eqs) {
    adj[e.a].push_back({e.b, e.d});
    adj[e.b].push_back({e.a, -e.d});
  }
  std::vector<std::optional<Integer>> w(nodes);
  for (int root = 0; root < nodes; ++root) {
    if (w[root]) continue;
    w[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [u, d] : adj[v]) {
        Integer expect = *w[v] + d;
        if (!w[u]) {
          w[u] = expect;
          stack.push_back(u);
        } else if (*w[u] != expect) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Integer> out(nodes);
  for (int i = 0; i < nodes; ++i) out[i] = *w[i];
  if (!out.empty()) {
    Integer lo = *std::min_element(out.begin(), out.end());
    for (auto& x : out) x -= lo;
  }
  return out;
}

int vertex(const SquareComplex& c, int square, Corner corner) {
  return c.face_of({square, corner});
}

void check_invariant(const IntMatrix& m, const ClassVector& v) {
  if (multiply(m, v) != v) {
    throw Error(ErrorCode::ClassNotInvariant, "the word does not fix the class of the curve");
  }
}

// Normalized area of sweep + strips + face chain for the accumulated data.
Rational chain_flux(const SquareComplex& c, const Rational& swept,
                    const std::vector<Integer>& alpha, const std::vector<Integer>& beta) {
  Rational squares = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    squares -= make_rational(alpha[i] * c.width({Family::Alpha, static_cast<int>(i)}), 2);
  }
  for (std::size_t j = 0; j < beta.size(); ++j) {
    squares += make_rational(beta[j] * c.width({Family::Beta, static_cast<int>(j)}), 2);
  }
  squares += core_chain_area(c, alpha, beta);
  return swept + squares / c.size();
}

struct Accumulated {
  Rational swept = 0;
  std::vector<Integer> alpha;
  std::vector<Integer> beta;

  explicit Accumulated(const SquareComplex& c)
      : alpha(c.strands(Family::Alpha).size(), 0), beta(c.strands(Family::Beta).size(), 0) {}

  void add(const WordImage& img, const Integer& weight) {
    swept += weight * img.swept;
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] += weight * img.alpha_boundary[i];
    for (std::size_t j = 0; j < beta.size(); ++j) beta[j] += weight * img.beta_boundary[j];
  }
};

}  // namespace

FluxValue make_flux(const Rational& raw) { return {raw, mod_one(raw)}; }

Rational core_chain_area(const SquareComplex& c, const std::vector<Integer>& alpha_weights,
                         const std::vector<Integer>& beta_weights) {
  std::vector<Difference> eqs;
  for (int s = 0; s < c.size(); ++s) {
    const Integer& ra = alpha_weights[c.cylinder_of(Family::Alpha, s)];
    const Integer& rb = beta_weights[c.cylinder_of(Family::Beta, s)];
    // The chain lies to the left of each weighted core.
    eqs.push_back({vertex(c, s, Corner::SW), vertex(c, s, Corner::NW), ra});
    eqs.push_back({vertex(c, s, Corner::SE), vertex(c, s, Corner::NE), ra});
    const bool up = c.flip(s) > 0;
    Corner w_top = up ? Corner::NE : Corner::NW, l_top = up ? Corner::NW : Corner::NE;
    Corner w_bot = up ? Corner::SE : Corner::SW, l_bot = up ? Corner::SW : Corner::SE;
    eqs.push_back({vertex(c, s, w_top), vertex(c, s, l_top), rb});
    eqs.push_back({vertex(c, s, w_bot), vertex(c, s, l_bot), rb});
  }
  const auto& fs = c.faces();
  auto w = solve_differences(static_cast<int>(fs.size()), eqs);
  if (!w) throw Error(ErrorCode::NotNullhomologous, "the core combination does not bound");
  Rational area = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    area += make_rational((*w)[i] * static_cast<long>(fs[i].corners.size()), 4);
  }
  return area;
}

FluxValue flux(const HomologyFrame& f, const Polyline& p, const TwistWord& w) {
  return flux(f, Cycle{{p, 1}}, w);
}

FluxValue flux(const HomologyFrame& f, const Cycle& z, const TwistWord& w) {
  check_invariant(twist_action(f, w), class_of(f, z));
  const SquareComplex& c = f.surface;
  Accumulated acc(c);
  for (const auto& wc : z) acc.add(apply_word(c, wc.curve, w), wc.weight);
  return make_flux(chain_flux(c, acc.swept, acc.alpha, acc.beta));
}

FluxValue winding_oracle(const SquareComplex& c, const Polyline& p, const Polyline& q) {
  return winding_oracle(c, Cycle{{q, 1}, {p, -1}});
}

FluxValue winding_oracle(const SquareComplex& c, const Cycle& z) {
  const int n = c.size();
  // Net signed side endpoints per square: + for arrivals, - for departures.
  std::vector<std::array<Integer, 4>> net(n);
  struct Event {
    Rational x;
    Integer sign;
  };
  std::vector<std::vector<Event>> bottom(n);
  std::vector<Rational> interior(n, 0);  // sum of (x_b - x_a)(1 - (y_a + y_b)/2)
  for (const auto& wc : z) {
    for (const auto& s : wc.curve.segments) {
      // Interior vertices are not side events.
      for (auto [pt, sign] : {std::pair{&s.a, -1}, std::pair{&s.b, 1}}) {
        if (!on_boundary(*pt)) continue;
        Side side = side_containing(*pt);
        net[s.square][idx(side)] += sign * wc.weight;
        if (side == Side::S) bottom[s.square].push_back({pt->x, sign * wc.weight});
      }
      interior[s.square] += wc.weight * (s.b.x - s.a.x) * (1 - (s.a.y + s.b.y) / 2);
    }
  }
  // Walking counterclockwise along the boundary, from inside the square, an
  // arriving strand is crossed from its right to its left.
  std::vector<Difference> eqs;
  for (int s = 0; s < n; ++s) {
    eqs.push_back({vertex(c, s, Corner::SW), vertex(c, s, Corner::SE), net[s][idx(Side::S)]});
    eqs.push_back({vertex(c, s, Corner::SE), vertex(c, s, Corner::NE), net[s][idx(Side::E)]});
    eqs.push_back({vertex(c, s, Corner::NE), vertex(c, s, Corner::NW), net[s][idx(Side::N)]});
    eqs.push_back({vertex(c, s, Corner::NW), vertex(c, s, Corner::SW), net[s][idx(Side::W)]});
  }
  auto w = solve_differences(static_cast<int>(c.faces().size()), eqs);
  if (!w) throw Error(ErrorCode::NotNullhomologous, "the cycle does not bound");
  Rational total = 0;
  for (int s = 0; s < n; ++s) {
    total += (*w)[vertex(c, s, Corner::SW)];
    for (const auto& e : bottom[s]) total += e.sign * (1 - e.x);
    total += interior[s];
  }
  return make_flux(total / n);
}

FluxEvaluator::FluxEvaluator(const HomologyFrame& f, const TwistWord& w)
    : frame_(f), action_(twist_action(f, w)) {
  // The spanning cycles are independent; their images are computed in parallel.
  std::vector<std::future<WordImage>> jobs;
  jobs.reserve(f.cycles.size());
  for (const auto& g : f.cycles) {
    jobs.push_back(std::async(std::launch::async,
                              [&f, &g, &w] { return apply_word(f.surface, g, w); }));
  }
  images_.reserve(jobs.size());
  for (auto& j : jobs) images_.push_back(j.get());
}

FluxValue FluxEvaluator::operator()(const ClassVector& v) const {
  check_invariant(action_, v);
  const SquareComplex& c = frame_.surface;
  Accumulated acc(c);
  for (std::size_t k = 0; k < frame_.cycles.size(); ++k) {
    Integer coeff = 0;
    for (int i = 0; i < frame_.rank(); ++i) coeff += v[i] * frame_.basis_cycles[i][k];
    if (coeff != 0) acc.add(images_[k], coeff);
  }
  return make_flux(chain_flux(c, acc.swept, acc.alpha, acc.beta));
}

FluxReport flux_hom(const HomologyFrame& f, const TwistWord& w) {
  FluxReport r;
  r.word = w;
  r.action = twist_action(f, w);
  r.kernel = invariant_sublattice(r.action);
  r.torelli = r.action == identity_matrix(f.rank());
  if (!r.kernel.empty()) {
    FluxEvaluator eval(f, w);
    for (const auto& v : r.kernel) {
      r.values.push_back(eval(v));
      r.nonzero = r.nonzero || r.values.back().reduced != 0;
    }
  }
  return r;
}

std::string_view realizability_name(Realizability r) {
  switch (r) {
    case Realizability::Obstructed: return "OBSTRUCTED";
    case Realizability::BoundaryCriterionApplies: return "BOUNDARY_CRITERION_APPLIES";
    case Realizability::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

RealizabilityReport realizability_report(const FluxReport& report) {
  RealizabilityReport out;
  out.flux_nonzero = report.nonzero;
  const int n = static_cast<int>(report.action.size());
  out.det_minus_identity = n == 0 ? Integer(1) : determinant(subtract(report.action, identity_matrix(n)));
  if (out.flux_nonzero) {
    out.verdict = Realizability::Obstructed;
    out.note = "nonzero flux: not the first return map of a Reeb flow";
  } else if (out.det_minus_identity != 0) {
    out.verdict = Realizability::BoundaryCriterionApplies;
    out.note = "det(h_* - id) = " + out.det_minus_identity.get_str() +
               " is nonzero: 1 is not an eigenvalue, so on a surface with boundary h would be "
               "realizable (informational; the closed case is not decided)";
  } else {
    out.verdict = Realizability::Inconclusive;
    out.note = "zero flux on K and 1 is an eigenvalue of h_*";
  }
  return out;
}

RealizabilityReport realizability_report(const HomologyFrame& f, const TwistWord& w) {
  return realizability_report(flux_hom(f, w));
}

}  // namespace origami
