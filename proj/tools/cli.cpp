#include "cli.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "tropcon/construction_file.hpp"
#include "tropcon/errors.hpp"
#include "tropcon/plane_geometry.hpp"
#include "tropcon/svg.hpp"

namespace tropcon::cli {
namespace {

struct Options {
  std::string file;
  bool affine = false;
  std::uint64_t seed = 0;
  int trials = 1;
  int max_resamples = 32;
  bool bypass_admissibility = false;
  std::string points;
  int random = 0;
  std::string out_path;
  std::string bbox;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ConstructionFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_construction(text.str());
}

std::string format_point(const TropPoint& p, bool affine) {
  return affine ? to_affine_string(p) : to_string(p);
}

int cmd_run(const Options& opt, std::ostream& out) {
  const ConstructionFile file = load(opt.file);
  const TropicalBindings values = execute_tropical(file.program, file.inputs);
  for (std::size_t i : file.program.effective_outputs()) {
    const std::string& id = file.program.elements()[i].id;
    out << id << " = " << format_point(values.find(id)->second, opt.affine) << '\n';
  }
  return kOk;
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string s;
  for (const auto& id : ids) s += (s.empty() ? "" : ",") + id;
  return s;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const ConstructionFile file = load(opt.file);
  int code = kOk;
  for (std::size_t i : file.program.effective_outputs()) {
    const std::string& id = file.program.elements()[i].id;
    const Admissibility adm = check_admissibility(file.program, id);
    if (adm.admissible) {
      out << id << ": admissible\n";
    } else {
      out << id << ": NOT admissible, cycle " << join_ids(adm.cycle) << '\n';
      code = kVerification;
    }
  }
  return code;
}

int cmd_lift_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const ConstructionFile file = load(opt.file);
  if (opt.trials < 1) throw UsageError("--trials must be positive");
  out << "seed: " << opt.seed << '\n' << "trials: " << opt.trials << '\n';
  int code = kOk;
  for (int trial = 0; trial < opt.trials; ++trial) {
    LiftOptions lift;
    lift.seed = opt.seed + static_cast<std::uint64_t>(trial);
    lift.max_resamples = opt.max_resamples;
    lift.require_admissible = !opt.bypass_admissibility;
    out << "trial " << trial << " (seed " << lift.seed << "): ";
    try {
      const CommutationReport report = verify_commutation(file.program, file.inputs, lift);
      out << (report.ok() ? "commutes" : "MISMATCH at " + *report.first_mismatch)
          << ", resamples " << report.resamples
          << (report.symbolically_certified ? ", symbolically certified" : "") << '\n';
      for (const ElementComparison& c : report.elements) {
        out << "  " << c.id << ": tropical " << format_point(c.tropical, opt.affine) << ", lifted "
            << (c.lifted ? format_point(*c.lifted, opt.affine) : std::string("undefined"))
            << (c.match ? "" : "  MISMATCH") << '\n';
      }
      if (!report.ok()) code = std::max(code, static_cast<int>(kVerification));
    } catch (const AdmissibilityError& e) {
      out << "refused\n";
      err << "error: " << e.what() << '\n';
      return kVerification;
    } catch (const LiftError& e) {
      out << "lift failed\n";
      err << "error: " << e.what() << '\n';
      code = kLiftDegenerate;
    }
  }
  return code;
}

TropPoint parse_plane_point(const std::string& token) {
  const auto comma = token.find(',');
  if (comma == std::string::npos) throw UsageError("expected x,y but got '" + token + "'");
  try {
    return TropPoint{parse_rational(token.substr(0, comma)), parse_rational(token.substr(comma + 1)),
                     Rational(0)};
  } catch (const std::invalid_argument&) {
    throw UsageError("bad point '" + token + "'");
  }
}

int print_pappus(const std::array<TropPoint, 5>& pts, bool affine, std::ostream& out) {
  const PappusResult result = pappus_verify(pts);
  for (const char* id : {"1", "2", "3", "4", "5"}) {
    out << id << " = " << format_point(result.elements.find(id)->second, affine) << '\n';
  }
  for (const std::string& id : kPappusElements) {
    out << id << " = " << format_point(result.elements.find(id)->second, affine) << '\n';
  }
  if (!result.witness) {
    out << "witness: NONE (a'', b'', c'' are not concurrent)\n";
    return kVerification;
  }
  out << "witness: " << format_point(*result.witness, affine) << '\n';
  return kOk;
}

int cmd_pappus(const Options& opt, std::ostream& out) {
  if (opt.points.empty() == (opt.random == 0)) {
    throw UsageError("pappus needs exactly one of --points or --random");
  }
  if (!opt.points.empty()) {
    std::istringstream in(opt.points);
    std::vector<TropPoint> pts;
    for (std::string token; in >> token;) pts.push_back(parse_plane_point(token));
    if (pts.size() != 5) throw UsageError("--points needs five x,y pairs");
    return print_pappus({pts[0], pts[1], pts[2], pts[3], pts[4]}, opt.affine, out);
  }
  if (opt.random < 0) throw UsageError("--random must be positive");
  out << "seed: " << opt.seed << '\n';
  std::mt19937_64 rng(opt.seed);
  auto coord = [&] { return Rational(static_cast<long>(rng() % 201) - 100); };
  int code = kOk;
  for (int k = 0; k < opt.random; ++k) {
    std::array<TropPoint, 5> pts;
    for (auto& p : pts) {
      const Rational x = coord();
      const Rational y = coord();
      p = TropPoint{x, y, Rational(0)};
    }
    out << "configuration " << k << '\n';
    code = std::max(code, print_pappus(pts, opt.affine, out));
  }
  return code;
}

PlotBox parse_bbox(const std::string& text) {
  std::array<double, 4> v{};
  std::istringstream in(text);
  char sep = ',';
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0 && !(in >> sep && sep == ',')) throw UsageError("--bbox expects xmin,ymin,xmax,ymax");
    if (!(in >> v[i])) throw UsageError("--bbox expects xmin,ymin,xmax,ymax");
  }
  if (v[0] >= v[2] || v[1] >= v[3]) throw UsageError("--bbox must have xmin < xmax, ymin < ymax");
  return {v[0], v[1], v[2], v[3]};
}

int cmd_plot(const Options& opt, std::ostream& out) {
  const ConstructionFile file = load(opt.file);
  if (file.program.dimension() != 2) throw UsageError("plot supports plane constructions only");
  const TropicalBindings values = execute_tropical(file.program, file.inputs);
  PlotScene scene;
  for (const Element& e : file.program.elements()) {
    const TropPoint& v = values.find(e.id)->second;
    if (e.kind == ElementKind::Line) {
      scene.lines.emplace_back(e.id, TropLine(v));
    } else {
      scene.points.emplace_back(e.id, v);
    }
  }
  std::optional<PlotBox> box;
  if (!opt.bbox.empty()) box = parse_bbox(opt.bbox);
  const std::string svg = render_svg(scene, box);
  if (opt.out_path.empty() || opt.out_path == "-") {
    out << svg;
    return kOk;
  }
  std::ofstream file_out(opt.out_path, std::ios::binary);
  if (!file_out || !(file_out << svg)) throw UsageError("cannot write '" + opt.out_path + "'");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical constructions: stable joins and meets, lifts, Pappus"};
  app.require_subcommand(1);
  Options opt;

  auto* run_cmd = app.add_subcommand("run", "Execute a construction file tropically");
  run_cmd->add_option("file", opt.file, "Construction file")->required();
  run_cmd->add_flag("--affine", opt.affine, "Print affine coordinates");

  auto* check_cmd = app.add_subcommand("check", "Report tropical admissibility of outputs");
  check_cmd->add_option("file", opt.file, "Construction file")->required();

  auto* lift_cmd = app.add_subcommand("lift-verify", "Compare with a generic Puiseux lift");
  lift_cmd->add_option("file", opt.file, "Construction file")->required();
  lift_cmd->add_option("--seed", opt.seed, "Seed of the first trial");
  lift_cmd->add_option("--trials", opt.trials, "Number of trials (seeds seed, seed+1, ...)");
  lift_cmd->add_option("--max-resamples", opt.max_resamples, "Resample budget per trial");
  lift_cmd->add_flag("--bypass-admissibility", opt.bypass_admissibility,
                     "Lift non-tree constructions anyway");
  lift_cmd->add_flag("--affine", opt.affine, "Print affine coordinates");

  auto* pappus_cmd = app.add_subcommand("pappus", "Constructive Pappus configuration");
  pappus_cmd->add_option("--points", opt.points, "Five affine points \"x,y x,y x,y x,y x,y\"");
  pappus_cmd->add_option("--random", opt.random, "Number of random integer configurations");
  pappus_cmd->add_option("--seed", opt.seed, "Seed for --random");
  pappus_cmd->add_flag("--affine", opt.affine, "Print affine coordinates");

  auto* plot_cmd = app.add_subcommand("plot", "Draw points and lines as SVG");
  plot_cmd->add_option("file", opt.file, "Construction file")->required();
  plot_cmd->add_option("--out", opt.out_path, "Output path (default stdout)");
  plot_cmd->add_option("--bbox", opt.bbox, "xmin,ymin,xmax,ymax");

  std::vector<std::string> storage{"tropcon"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(opt, out);
    if (check_cmd->parsed()) return cmd_check(opt, out);
    if (lift_cmd->parsed()) return cmd_lift_verify(opt, out, err);
    if (pappus_cmd->parsed()) return cmd_pappus(opt, out);
    if (plot_cmd->parsed()) return cmd_plot(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << opt.file << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace tropcon::cli
