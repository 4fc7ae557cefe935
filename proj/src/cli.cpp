#include "origami/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "origami/builders.hpp"
#include "origami/error.hpp"
#include "origami/flux.hpp"

namespace origami::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
}

json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const IntMatrix& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(to_json(row));
  return a;
}

json to_json(const Matrix2& m) {
  return json::array({json::array({to_json(m[0][0]), to_json(m[0][1])}),
                      json::array({to_json(m[1][0]), to_json(m[1][1])})});
}

json to_json(const FluxValue& v) {
  return {{"raw", to_fraction_string(v.raw)}, {"reduced", to_fraction_string(v.reduced)}};
}

std::string format_vector(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "]";
}

std::string format_matrix(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? ", " : "") + format_vector(m[i]);
  return s + "]";
}

IntMatrix as_matrix(const Matrix2& m) { return {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}; }

std::string format_flux(const FluxValue& v) {
  return to_fraction_string(v.reduced) + " (raw " + to_fraction_string(v.raw) + ")";
}

struct Session {
  const RunConfig& config;
  std::ostream& out;

  bool json_mode() const { return config.mode == OutputMode::Json; }

  SquareComplex surface() const { return parse_surface(read_file(config.surface_path)); }

  HomologyFrame frame(const SquareComplex& c) const {
    FrameOptions opts;
    opts.perturbation_denominator = config.seed_perturbation;
    return build_frame(c, opts);
  }

  Polyline curve(const SquareComplex& c, const std::string& path) const {
    Polyline p = polyline_from_traversal(c, parse_curve(read_file(path)));
    check_polyline(c, p);
    return p;
  }

  void emit(const json& j) const { out << j.dump(2) << '\n'; }

  json cylinders_json(const SquareComplex& c) const {
    json a = json::array();
    for (const auto& cyl : cylinders(c)) {
      a.push_back({{"name", cyl.name},
                   {"family", std::string(family_name(cyl.family))},
                   {"width", cyl.width},
                   {"squares", cyl.squares}});
    }
    return a;
  }

  int validate() const {
    SquareComplex c = surface();
    if (json_mode()) {
      emit({{"valid", true},
            {"squares", c.size()},
            {"genus", genus(c)},
            {"faces", c.faces().size()}});
    } else {
      out << "valid: " << c.size() << " squares, genus " << genus(c) << ", "
          << c.faces().size() << " faces\n";
    }
    return 0;
  }

  int info() const {
    SquareComplex c = surface();
    std::vector<int> halves;
    for (const auto& f : c.faces()) halves.push_back(f.half_size());
    const auto& as = c.strands(Family::Alpha);
    const auto& bs = c.strands(Family::Beta);
    std::vector<std::vector<int>> counts(as.size(), std::vector<int>(bs.size()));
    for (std::size_t i = 0; i < as.size(); ++i) {
      for (std::size_t j = 0; j < bs.size(); ++j) {
        counts[i][j] = intersection_count(c, static_cast<int>(i), static_cast<int>(j));
      }
    }
    if (json_mode()) {
      emit({{"squares", c.size()},
            {"genus", genus(c)},
            {"euler_characteristic", c.euler_characteristic()},
            {"face_half_sizes", halves},
            {"cylinders", cylinders_json(c)},
            {"intersections", counts}});
      return 0;
    }
    out << "squares: " << c.size() << "\n"
        << "genus: " << genus(c) << "\n"
        << "euler characteristic: " << c.euler_characteristic() << "\n"
        << "faces: " << halves.size() << " (half sizes";
    for (int h : halves) out << ' ' << h;
    out << ")\n";
    for (const auto& cyl : cylinders(c)) {
      out << "cylinder " << cyl.name << " (" << family_name(cyl.family) << "): width "
          << cyl.width << "\n";
    }
    out << "intersections (alpha rows, beta columns):\n";
    for (std::size_t i = 0; i < as.size(); ++i) {
      out << "  " << as[i].name << ':';
      for (std::size_t j = 0; j < bs.size(); ++j) out << ' ' << bs[j].name << '=' << counts[i][j];
      out << '\n';
    }
    return 0;
  }

  int homology() const {
    SquareComplex c = surface();
    HomologyFrame f = frame(c);
    json cores = json::object();
    std::vector<std::pair<std::string, ClassVector>> named;
    for (Family fam : {Family::Alpha, Family::Beta}) {
      for (int i = 0; i < static_cast<int>(c.strands(fam).size()); ++i) {
        CylinderRef ref{fam, i};
        named.emplace_back(c.name_of(ref), f.core_class(ref));
      }
    }
    std::vector<std::pair<std::string, ClassVector>> curves;
    for (const auto& path : config.curve_paths) curves.emplace_back(path, class_of(f, curve(c, path)));
    if (json_mode()) {
      json j{{"rank", f.rank()},
             {"spanning_cycles", f.cycles.size()},
             {"basis_pairings", to_json(f.basis)},
             {"gram", to_json(f.gram)}};
      for (const auto& [name, v] : named) cores[name] = to_json(v);
      j["cores"] = cores;
      json cj = json::object();
      for (const auto& [name, v] : curves) cj[name] = to_json(v);
      j["curves"] = cj;
      emit(j);
      return 0;
    }
    out << "rank (2g): " << f.rank() << "\n"
        << "spanning cycles: " << f.cycles.size() << "\n"
        << "basis pairings:\n";
    for (const auto& row : f.basis) out << "  " << format_vector(row) << '\n';
    out << "intersection form:\n";
    for (const auto& row : f.gram) out << "  " << format_vector(row) << '\n';
    for (const auto& [name, v] : named) out << "class " << name << ": " << format_vector(v) << '\n';
    for (const auto& [name, v] : curves) out << "class " << name << ": " << format_vector(v) << '\n';
    return 0;
  }

  json pa_json(const SquareComplex& c, const PAResult& r) const {
    json blocks = json::array();
    for (const auto& b : r.blocks) {
      TwistWord w{b.letters};
      json jb{{"family", std::string(family_name(b.family))},
              {"letters", format_word(c, w)},
              {"shears", to_json(b.shears)},
              {"uniform", b.uniform}};
      if (b.uniform) jb["shear"] = to_json(b.shear);
      blocks.push_back(jb);
    }
    json j{{"verdict", std::string(verdict_name(r.verdict))}, {"blocks", blocks}};
    if (r.verdict != PAVerdict::NotAffineCertifiable) {
      j["matrix"] = to_json(r.matrix);
      j["trace"] = to_json(r.trace);
    }
    if (r.verdict == PAVerdict::PseudoAnosov) {
      j["dilatation"] = {{"polynomial", "x^2 - " + Integer(-r.poly_linear).get_str() + "*x + 1"},
                         {"exact", r.dilatation.str()},
                         {"decimal", r.dilatation_decimal},
                         {"approx", r.dilatation_approx}};
      j["unstable_slope"] = r.unstable_slope.str();
      j["stable_slope"] = r.stable_slope.str();
    }
    return j;
  }

  void print_pa(const SquareComplex& c, const PAResult& r) const {
    int k = 0;
    for (const auto& b : r.blocks) {
      out << "block " << ++k << " (" << family_name(b.family) << "): "
          << format_word(c, TwistWord{b.letters}) << "; shears " << format_vector(b.shears);
      if (b.uniform) out << "; uniform, shear " << b.shear.get_str();
      else out << "; not uniform";
      out << '\n';
    }
    if (r.verdict != PAVerdict::NotAffineCertifiable) {
      out << "matrix: " << format_matrix(as_matrix(r.matrix)) << "\n"
          << "trace: " << r.trace.get_str() << "\n";
    }
    out << "verdict: " << verdict_name(r.verdict) << "\n";
    if (r.verdict == PAVerdict::PseudoAnosov) {
      out << "dilatation: root of x^2 - " << Integer(-r.poly_linear).get_str() << "*x + 1 = "
          << r.dilatation.str() << " ~ " << r.dilatation_decimal << "\n"
          << "unstable slope: " << r.unstable_slope.str() << "\n"
          << "stable slope: " << r.stable_slope.str() << "\n";
    }
  }

  int pa_check() const {
    SquareComplex c = surface();
    TwistWord w = parse_word(c, config.word);
    PAResult r = pa_certificate(c, w);
    if (json_mode()) {
      json j{{"word", format_word(c, w)}};
      j.update(pa_json(c, r));
      emit(j);
    } else {
      out << "word: " << format_word(c, w) << "\n";
      print_pa(c, r);
    }
    return 0;
  }

  int flux_command() const {
    SquareComplex c = surface();
    HomologyFrame f = frame(c);
    TwistWord w = parse_word(c, config.word);
    json values = json::array();
    for (const auto& path : config.curve_paths) {
      FluxValue v = flux(f, curve(c, path), w);
      if (json_mode()) {
        values.push_back({{"curve", path}, {"flux", to_json(v)}});
      } else {
        out << "flux of " << format_word(c, w) << " on " << path << ": " << format_flux(v) << '\n';
      }
    }
    if (json_mode()) emit({{"word", format_word(c, w)}, {"values", values}});
    return 0;
  }

  int report() const {
    SquareComplex c = surface();
    HomologyFrame f = frame(c);
    TwistWord w = parse_word(c, config.word);
    PAResult pa = pa_certificate(c, w);
    FluxReport rep = flux_hom(f, w);
    RealizabilityReport real = realizability_report(rep);
    std::vector<std::pair<std::string, FluxValue>> curve_values;
    for (const auto& path : config.curve_paths) curve_values.emplace_back(path, flux(f, curve(c, path), w));
    if (json_mode()) {
      json values = json::array();
      for (std::size_t i = 0; i < rep.kernel.size(); ++i) {
        values.push_back({{"class", to_json(rep.kernel[i])}, {"flux", to_json(rep.values[i])}});
      }
      json cj = json::array();
      for (const auto& [path, v] : curve_values) cj.push_back({{"curve", path}, {"flux", to_json(v)}});
      emit({{"word", format_word(c, w)},
            {"pa", pa_json(c, pa)},
            {"action", to_json(rep.action)},
            {"torelli", rep.torelli},
            {"kernel_rank", rep.kernel.size()},
            {"flux_on_kernel", values},
            {"flux_nonzero", rep.nonzero},
            {"curves", cj},
            {"realizability",
             {{"verdict", std::string(realizability_name(real.verdict))},
              {"det_action_minus_identity", to_json(real.det_minus_identity)},
              {"note", real.note}}}});
      return 0;
    }
    out << "word: " << format_word(c, w) << "\n";
    print_pa(c, pa);
    out << "homology action: " << format_matrix(rep.action) << "\n"
        << "Torelli: " << (rep.torelli ? "yes" : "no") << "\n"
        << "invariant sublattice rank: " << rep.kernel.size() << "\n";
    for (std::size_t i = 0; i < rep.kernel.size(); ++i) {
      out << "  flux on " << format_vector(rep.kernel[i]) << ": " << format_flux(rep.values[i])
          << '\n';
    }
    out << "flux homomorphism: " << (rep.nonzero ? "nonzero" : "zero") << "\n";
    for (const auto& [path, v] : curve_values) out << "flux on " << path << ": " << format_flux(v) << '\n';
    out << "realizability: " << realizability_name(real.verdict) << "\n"
        << "  " << real.note << "\n";
    return 0;
  }

  int examples() const {
    namespace fs = std::filesystem;
    fs::path dir = config.surface_path;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create '" + dir.string() + "'");
    Genus5 g5 = genus5_paper();
    SquareComplex block = genus2_block();
    std::vector<std::pair<std::string, std::string>> files{
        {"torus.sq", format_surface(torus())},
        {"genus2_block.sq", format_surface(block)},
        {"genus5.sq", format_surface(g5.surface)},
        {"gamma.curve", format_curve(g5.gamma)},
        {"gamma_prime.curve", format_curve(g5.gamma_prime)},
        {"paper.word", format_word(g5.surface, paper_word(g5.surface)) + "\n"},
        {"torus.word", "a1^1 * b1^-1\n"},
        {"genus2_block.word", "a2'^1 * b2'^-1\n"},
    };
    json written = json::array();
    for (const auto& [name, text] : files) {
      write_file(dir / name, text);
      written.push_back((dir / name).string());
      if (!json_mode()) out << "wrote " << (dir / name).string() << '\n';
    }
    if (json_mode()) emit({{"written", written}});
    return 0;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square-tiled surfaces, affine Dehn twists and flux"};
  app.name("origami");
  app.require_subcommand(1);
  RunConfig config;
  bool json_flag = false;

  auto add_common = [&](CLI::App* sub, bool word, bool word_required, bool curves,
                        bool curves_required) {
    sub->add_option("surface", config.surface_path, "Surface file")->required();
    if (word) {
      auto* o = sub->add_option("-w,--word", config.word, "Twist word, e.g. \"a1^9 * b1^-9\"");
      if (word_required) o->required();
    }
    if (curves) {
      auto* o = sub->add_option("-c,--curve", config.curve_paths, "Curve file (repeatable)");
      if (curves_required) o->required();
    }
    sub->add_flag("--json", json_flag, "Emit JSON");
    sub->add_option("--seed-perturbation", config.seed_perturbation,
                    "Denominator of the routing perturbation of the spanning cycles")
        ->check(CLI::PositiveNumber);
  };
  add_common(app.add_subcommand("validate", "Validate a surface file"), false, false, false, false);
  add_common(app.add_subcommand("info", "Faces, cylinders and intersection counts"), false, false,
             false, false);
  add_common(app.add_subcommand("homology", "Homology basis, intersection form and classes"),
             false, false, true, false);
  add_common(app.add_subcommand("pa-check", "Affine pseudo-Anosov certificate"), true, true,
             false, false);
  add_common(app.add_subcommand("flux", "Flux of a word on curves"), true, true, true, true);
  add_common(app.add_subcommand("report", "Full flux and realizability report"), true, true, true,
             false);
  auto* ex = app.add_subcommand("examples", "Write the reference surfaces, curves and words");
  ex->add_option("directory", config.surface_path, "Output directory")->required();
  ex->add_flag("--json", json_flag, "Emit JSON");

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  config.mode = json_flag ? OutputMode::Json : OutputMode::Human;

  Session s{config, out};
  try {
    if (config.subcommand == "validate") return s.validate();
    if (config.subcommand == "info") return s.info();
    if (config.subcommand == "homology") return s.homology();
    if (config.subcommand == "pa-check") return s.pa_check();
    if (config.subcommand == "flux") return s.flux_command();
    if (config.subcommand == "report") return s.report();
    if (config.subcommand == "examples") return s.examples();
  } catch (const Error& e) {
    err << "error: " << qualified_name(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace origami::cli
