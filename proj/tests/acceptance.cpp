// Acceptance checks: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "origami/error.hpp"
#include "support.hpp"

using namespace origami;
using namespace origami::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail << what;
    }
  }
};

using Check = std::function<void(Outcome&)>;

bool report(int number, const std::string& title, const Check& check) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    check(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << "exception: " << e.what();
  }
  std::cout << (o.ok ? "PASS" : "FAIL") << " C" << number << ": " << title;
  std::string d = o.detail.str();
  if (!d.empty()) std::cout << " (" << d << ")";
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  std::cout << " [" << std::fixed << std::setprecision(2) << took.count() << " s]" << std::endl;
  return o.ok;
}

Polyline curve(const SquareComplex& c, const Traversal& t) { return polyline_from_traversal(c, t); }

bool invariant(const IntMatrix& m, const ClassVector& v) { return multiply(m, v) == v; }

// Image cycle minus the original, for the oracle.
Cycle difference_cycle(const SquareComplex& c, const Cycle& z, const TwistWord& w) {
  Cycle d;
  for (const auto& wc : z) {
    d.push_back({apply_word(c, wc.curve, w).image, wc.weight});
    d.push_back({wc.curve, -wc.weight});
  }
  return d;
}

// Twist images grow geometrically with the shears; words whose images may
// exceed the budget are skipped (and counted) to keep the run short. Each
// piece inside the twisted cylinder wraps at most |k| times around it, so
// the bound is checked before the twist is applied.
constexpr std::size_t kSegmentBudget = 20000;

bool within_budget(const SquareComplex& c, const Polyline& p, const TwistWord& w,
                   std::size_t budget = kSegmentBudget) {
  Polyline cur = p;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    std::size_t inside = 0;
    for (const auto& s : cur.segments) {
      inside += c.cylinder_of(it->curve.family, s.square) == it->curve.index;
    }
    const std::size_t wraps = static_cast<std::size_t>(std::labs(it->power)) * c.width(it->curve);
    if (cur.segments.size() + inside * (wraps + 1) > budget) return false;
    cur = apply_twist(c, cur, it->curve, it->power).image;
  }
  return true;
}

bool within_budget(const SquareComplex& c, const Cycle& z, const TwistWord& w) {
  for (const auto& wc : z) {
    if (!within_budget(c, wc.curve, w)) return false;
  }
  return true;
}

// Words that act trivially on homology of the genus 5 surface: separating
// twists (power +-1; their cylinders are 18 squares wide) and bounding-pair
// maps a1^k * b1^-k with 1 <= |k| <= max_power. `pieces` factors give at
// most 2 * pieces letters.
TwistWord torelli_word(std::mt19937& rng, int pieces, int max_power) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> pow(1, max_power);
  TwistWord w;
  for (int i = 0; i < pieces; ++i) {
    long sign = rng() % 2 ? 1 : -1;
    switch (kind(rng)) {
      case 0: w.letters.push_back({{Family::Alpha, 1}, sign}); break;
      case 1: w.letters.push_back({{Family::Beta, 1}, sign}); break;
      default: {
        long k = sign * pow(rng);
        w.letters.push_back({{Family::Alpha, 0}, k});
        w.letters.push_back({{Family::Beta, 0}, -k});
      }
    }
  }
  return w;
}

}  // namespace

int main() {
  int failures = 0;
  auto run = [&](int n, const std::string& title, const Check& check) {
    if (!report(n, title, check)) ++failures;
  };

  run(1, "genus 5 surface: genus, squares, faces, intersection counts, widths", [](Outcome& o) {
    SquareComplex c = genus5_data().surface;
    o.require(c.validated(), "not validated");
    o.require(genus(c) == 5, "genus");
    o.require(c.size() == 20, "N");
    o.require(c.faces().size() == 12, "faces");
    o.require(intersection_count(c, 0, 0) == 0 && intersection_count(c, 0, 1) == 2 &&
                  intersection_count(c, 1, 0) == 2 && intersection_count(c, 1, 1) == 16,
              "intersection counts");
    o.require(c.width({Family::Alpha, 0}) == 2 && c.width({Family::Alpha, 1}) == 18, "alpha widths");
    o.require(c.width({Family::Beta, 0}) == 2 && c.width({Family::Beta, 1}) == 18, "beta widths");
  });

  run(2, "paper word certificate: shears 18, matrix [[325,18],[18,1]], trace 326, pseudoAnosov",
      [](Outcome& o) {
        SquareComplex c = genus5_data().surface;
        PAResult r = pa_certificate(c, paper_word(c));
        for (const auto& b : r.blocks) o.require(b.uniform && b.shear == 18, "block shear");
        o.require(r.blocks.size() == 2, "two blocks");
        o.require(r.matrix[0][0] == 325 && r.matrix[0][1] == 18 && r.matrix[1][0] == 18 &&
                      r.matrix[1][1] == 1,
                  "matrix");
        o.require(r.trace == 326, "trace");
        o.require(r.verdict == PAVerdict::PseudoAnosov, "verdict");
        long double lambda = (326.0L + std::sqrt(326.0L * 326.0L - 4.0L)) / 2.0L;
        o.require(std::fabs(static_cast<long double>(r.dilatation_approx) - lambda) < 1e-9L,
                  "dilatation approximation");
        o.detail << "lambda = " << r.dilatation_decimal;
      });

  run(3, "paper word acts as the identity on a rank 10 lattice", [](Outcome& o) {
    const Fixture& f = genus5_fixture();
    o.require(f.frame.rank() == 10, "rank");
    o.require(twist_action(f.frame, paper_word(f.surface)) == identity_matrix(10), "action");
  });

  run(4, "flux(paper word, gamma) = 1/2; a1^9 * b1^-9 on gamma' has raw flux 9/2", [](Outcome& o) {
    const Fixture& f = genus5_fixture();
    FluxValue v = flux(f.frame, curve(f.surface, genus5_data().gamma), paper_word(f.surface));
    o.require(v.reduced == make_rational(1, 2), "flux on gamma is " + to_fraction_string(v.reduced));
    FluxValue sub = flux(f.frame, curve(f.surface, genus5_data().gamma_prime),
                         parse_word(f.surface, "a1^9 * b1^-9"));
    o.require(sub.raw == make_rational(9, 2), "sub-word raw flux is " + to_fraction_string(sub.raw));
  });

  run(5, "genus 2 block: zero flux on K for a2'^1 * b2'^-1, matrix [[65,8],[8,1]], trace 66",
      [](Outcome& o) {
        const Fixture& f = genus2_fixture();
        TwistWord w = parse_word(f.surface, "a2'^1 * b2'^-1");
        FluxReport r = flux_hom(f.frame, w);
        o.require(r.kernel.size() == 4, "K has rank 4");
        for (const auto& v : r.values) o.require(v.reduced == 0, "nonzero flux on K");
        o.require(!r.nonzero, "flux homomorphism");
        PAResult pa = pa_certificate(f.surface, w);
        o.require(pa.matrix[0][0] == 65 && pa.matrix[0][1] == 8 && pa.matrix[1][0] == 8 &&
                      pa.matrix[1][1] == 1,
                  "matrix");
        o.require(pa.trace == 66, "trace");
      });

  run(6, "flux equals the winding-number oracle on invariant classes (random words)",
      [](Outcome& o) {
        std::mt19937 rng(20240601);
        int words = 0, comparisons = 0, nonzero = 0, skipped = 0;
        const Fixture* fixtures[] = {&torus_fixture(), &genus2_fixture(), &genus5_fixture()};
        for (int round = 0; round < 70; ++round) {
          for (const Fixture* f : fixtures) {
            // Half of the genus 5 words are products of Torelli factors, so
            // that nonzero flux values are exercised too.
            TwistWord w = f == fixtures[2] && round % 2 ? torelli_word(rng, 1 + rng() % 2, 3)
                                                        : random_word(f->surface, rng, 4, 3);
            ++words;
            IntMatrix m = twist_action(f->frame, w);
            std::vector<Cycle> tests;
            for (const Traversal& t : test_curves(*f)) tests.push_back({{curve(f->surface, t), 1}});
            std::shuffle(tests.begin(), tests.end(), rng);
            IntMatrix kernel = invariant_sublattice(m);
            if (!kernel.empty()) {
              tests.insert(tests.begin(), representative(f->frame, kernel[rng() % kernel.size()]));
            }
            int tested = 0;
            for (const Cycle& z : tests) {
              if (tested == 2) break;
              if (!invariant(m, class_of(f->frame, z))) continue;
              if (!within_budget(f->surface, z, w)) {
                ++skipped;
                continue;
              }
              ++tested;
              FluxValue a = flux(f->frame, z, w);
              FluxValue b = winding_oracle(f->surface, difference_cycle(f->surface, z, w));
              ++comparisons;
              nonzero += a.reduced != 0;
              if (a.reduced != b.reduced) {
                o.require(false, f->name + ", " + format_word(f->surface, w) + ": flux " +
                                     to_fraction_string(a.reduced) + " vs oracle " +
                                     to_fraction_string(b.reduced));
              }
            }
          }
        }
        o.require(words >= 200, "too few words");
        o.require(comparisons >= 200, "too few invariant classes");
        o.detail << words << " words, " << comparisons << " comparisons, " << nonzero
                 << " nonzero, " << skipped << " over the size budget";
      });

  run(7, "homologous curves have equal flux (random parameters, push-offs, representatives)",
      [](Outcome& o) {
        std::mt19937 rng(7);
        int pairs = 0, nonzero = 0;
        auto compare = [&](const Fixture& f, const Cycle& p, const Cycle& q, const TwistWord& w) {
          FluxValue a = flux(f.frame, p, w);
          FluxValue b = flux(f.frame, q, w);
          ++pairs;
          nonzero += a.reduced != 0;
          if (a.reduced != b.reduced) {
            o.require(false, f.name + ", " + format_word(f.surface, w) + ": " +
                                 to_fraction_string(a.reduced) + " vs " + to_fraction_string(b.reduced));
          }
        };
        const Fixture& g5 = genus5_fixture();
        const Fixture& g2 = genus2_fixture();
        for (int trial = 0; trial < 12; ++trial) {
          TwistWord w = trial == 0 ? paper_word(g5.surface) : torelli_word(rng, 1 + trial % 2, 3);
          for (const Traversal& t : {genus5_data().gamma, genus5_data().gamma_prime}) {
            Polyline p = curve(g5.surface, t);
            compare(g5, {{p, 1}}, {{curve(g5.surface, with_random_parameters(t, rng)), 1}}, w);
            compare(g5, {{p, 1}}, {{curve(g5.surface, pushed_off(t, make_rational(1, 997))), 1}}, w);
            compare(g5, {{p, 1}}, representative(g5.frame, class_of(g5.frame, p)), w);
          }
        }
        for (int trial = 0; trial < 6; ++trial) {
          TwistWord w = random_word(g2.surface, rng, 3, 2);
          for (const Traversal& t : test_curves(g2)) {
            if (t.size() < 2) continue;
            Polyline p = curve(g2.surface, t);
            compare(g2, {{p, 1}}, {{curve(g2.surface, with_random_parameters(t, rng)), 1}}, w);
            break;
          }
        }
        o.require(pairs >= 50, "too few pairs");
        o.require(nonzero > 0, "no nonzero flux exercised");
        o.detail << pairs << " pairs, " << nonzero << " nonzero";
      });

  run(8, "flux is a homomorphism on words fixing the class", [](Outcome& o) {
    std::mt19937 rng(8);
    const Fixture& f = genus5_fixture();
    const std::vector<Polyline> curves{curve(f.surface, genus5_data().gamma),
                                       curve(f.surface, genus5_data().gamma_prime)};
    int pairs = 0, nonzero = 0;
    for (int trial = 0; trial < 30; ++trial) {
      TwistWord w1 = torelli_word(rng, 1 + trial % 2, 3);
      TwistWord w2 = torelli_word(rng, 1 + (trial / 2) % 2, 3);
      for (const Polyline& p : curves) {
        FluxValue a = flux(f.frame, p, w1);
        FluxValue b = flux(f.frame, p, w2);
        FluxValue ab = flux(f.frame, p, concat(w1, w2));
        ++pairs;
        nonzero += ab.reduced != 0;
        if (ab.reduced != mod_one(a.reduced + b.reduced)) {
          o.require(false, format_word(f.surface, concat(w1, w2)) + ": " +
                               to_fraction_string(ab.reduced) + " vs " +
                               to_fraction_string(a.reduced) + " + " + to_fraction_string(b.reduced));
        }
      }
    }
    o.require(pairs >= 50, "too few pairs");
    o.require(nonzero > 0, "no nonzero flux exercised");
    o.detail << pairs << " pairs, " << nonzero << " nonzero";
  });

  run(9, "class of each twisted spanning cycle equals the homology action (random words)",
      [](Outcome& o) {
        std::mt19937 rng(9);
        int words = 0, checks = 0, skipped = 0;
        const Fixture* fixtures[] = {&torus_fixture(), &genus2_fixture(), &genus5_fixture()};
        for (int round = 0; round < 40; ++round) {
          for (const Fixture* f : fixtures) {
            TwistWord w = random_word(f->surface, rng, 4, 3);
            IntMatrix m = twist_action(f->frame, w);
            std::vector<WordImage> images;
            for (const Polyline& g : f->frame.cycles) {
              if (!within_budget(f->surface, g, w, kSegmentBudget / 4)) break;
              images.push_back(apply_word(f->surface, g, w));
            }
            if (images.size() != f->frame.cycles.size()) {
              ++skipped;
              continue;
            }
            ++words;
            for (std::size_t k = 0; k < images.size(); ++k) {
              ClassVector before = class_of(f->frame, f->frame.cycles[k]);
              ClassVector after = class_of(f->frame, images[k].image);
              ++checks;
              if (after != multiply(m, before)) {
                o.require(false, f->name + ", " + format_word(f->surface, w));
              }
            }
          }
        }
        o.require(words >= 100, "too few words");
        o.detail << words << " words, " << checks << " cycle images, " << skipped
                 << " words over the size budget";
      });

  run(10, "realizability: paper word OBSTRUCTED; torus Anosov word has det(h_* - id) != 0",
      [](Outcome& o) {
        const Fixture& g5 = genus5_fixture();
        RealizabilityReport paper = realizability_report(g5.frame, paper_word(g5.surface));
        o.require(paper.verdict == Realizability::Obstructed, "paper verdict");
        const Fixture& t = torus_fixture();
        RealizabilityReport anosov =
            realizability_report(t.frame, parse_word(t.surface, "a1^1 * b1^-1"));
        o.require(anosov.det_minus_identity != 0, "det");
        o.require(anosov.verdict == Realizability::BoundaryCriterionApplies, "torus verdict");
        o.detail << "det = " << anosov.det_minus_identity.get_str();
      });

  return failures == 0 ? 0 : 1;
}
