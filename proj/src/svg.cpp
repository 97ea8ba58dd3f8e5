#include "tropcon/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

namespace tropcon {
namespace {

constexpr double kCanvas = 600.0;

std::pair<double, double> to_double(const AffinePoint& p) {
  return {p(0).convert_to<double>(), p(1).convert_to<double>()};
}

std::pair<double, double> affine_of(const TropPoint& p) {
  const Vector<Rational> a = p.affine();
  return {a(0).convert_to<double>(), a(1).convert_to<double>()};
}

std::string fmt(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << (v == 0.0 ? 0.0 : v);
  return out.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\'': out += "&apos;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Portion [t0, t1] of  origin + t * dir, t >= 0, inside the box.
std::optional<std::pair<double, double>> clip_ray(std::pair<double, double> origin,
                                                  std::pair<double, double> dir, const PlotBox& box) {
  double t0 = 0.0;
  double t1 = std::numeric_limits<double>::infinity();
  const double o[2] = {origin.first, origin.second};
  const double d[2] = {dir.first, dir.second};
  const double lo[2] = {box.xmin, box.ymin};
  const double hi[2] = {box.xmax, box.ymax};
  for (int k = 0; k < 2; ++k) {
    if (d[k] == 0.0) {
      if (o[k] < lo[k] || o[k] > hi[k]) return std::nullopt;
      continue;
    }
    double a = (lo[k] - o[k]) / d[k];
    double b = (hi[k] - o[k]) / d[k];
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
  }
  if (t0 > t1) return std::nullopt;
  return std::make_pair(t0, t1);
}

}  // namespace

PlotBox auto_fit(const PlotScene& scene) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [name, line] : scene.lines) pts.push_back(to_double(line.vertex()));
  for (const auto& [name, p] : scene.points) pts.push_back(affine_of(p));
  if (pts.empty()) return {};
  PlotBox box{pts[0].first, pts[0].second, pts[0].first, pts[0].second};
  for (const auto& [x, y] : pts) {
    box.xmin = std::min(box.xmin, x);
    box.xmax = std::max(box.xmax, x);
    box.ymin = std::min(box.ymin, y);
    box.ymax = std::max(box.ymax, y);
  }
  double dx = box.xmax - box.xmin;
  double dy = box.ymax - box.ymin;
  const double extent = std::max({dx, dy, 1.0});
  if (dx == 0.0) dx = extent;
  if (dy == 0.0) dy = extent;
  const double cx = (box.xmin + box.xmax) / 2;
  const double cy = (box.ymin + box.ymax) / 2;
  return {cx - 0.7 * dx, cy - 0.7 * dy, cx + 0.7 * dx, cy + 0.7 * dy};
}

std::string render_svg(const PlotScene& scene, const std::optional<PlotBox>& requested) {
  const PlotBox box = requested ? *requested : auto_fit(scene);
  const double scale = kCanvas / std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  const double width = (box.xmax - box.xmin) * scale;
  const double height = (box.ymax - box.ymin) * scale;
  auto px = [&](double x) { return fmt((x - box.xmin) * scale); };
  auto py = [&](double y) { return fmt((box.ymax - y) * scale); };  // y axis points up

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height)
      << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" fill=\"white\"/>\n";
  for (const auto& [name, line] : scene.lines) {
    const auto v = to_double(line.vertex());
    out << "  <g class=\"line\" id=\"line-" << escape(name) << "\" stroke=\"#1f4e9c\" stroke-width=\"2\" fill=\"none\">\n";
    for (const AffinePoint& dir : TropLine::ray_directions()) {
      const auto d = to_double(dir);
      if (auto t = clip_ray(v, d, box)) {
        out << "    <line x1=\"" << px(v.first + t->first * d.first) << "\" y1=\""
            << py(v.second + t->first * d.second) << "\" x2=\""
            << px(v.first + t->second * d.first) << "\" y2=\""
            << py(v.second + t->second * d.second) << "\"/>\n";
      }
    }
    out << "  </g>\n";
    out << "  <text x=\"" << px(v.first) << "\" y=\"" << py(v.second)
        << "\" dx=\"4\" dy=\"-4\" font-size=\"12\" fill=\"#1f4e9c\">" << escape(name) << "</text>\n";
  }
  for (const auto& [name, p] : scene.points) {
    const auto a = affine_of(p);
    out << "  <circle class=\"point\" id=\"point-" << escape(name) << "\" cx=\"" << px(a.first)
        << "\" cy=\"" << py(a.second) << "\" r=\"4\" fill=\"#c0392b\"/>\n";
    out << "  <text x=\"" << px(a.first) << "\" y=\"" << py(a.second)
        << "\" dx=\"5\" dy=\"12\" font-size=\"12\" fill=\"#c0392b\">" << escape(name) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropcon
