#include "icurve/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace icurve::io {

namespace {

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

//! Maps data coordinates onto the plot area, y pointing up.
struct Frame
{
  double x0, x1, y0, y1;
  SvgStyle style;

  double px(double x) const
  {
    return style.margin + (x - x0) / (x1 - x0) * (style.width - 2 * style.margin);
  }
  double py(double y) const
  {
    return style.height - style.margin - (y - y0) / (y1 - y0) * (style.height - 2 * style.margin);
  }
  double sx(double dx) const { return dx / (x1 - x0) * (style.width - 2 * style.margin); }
  double sy(double dy) const { return dy / (y1 - y0) * (style.height - 2 * style.margin); }
};

void pad(double& lo, double& hi, double frac)
{
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double m = frac * (hi - lo);
  lo -= m;
  hi += m;
}

void open_svg(std::ostringstream& out, const SvgStyle& s)
{
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << s.width << "\" height=\"" << s.height
      << "\" viewBox=\"0 0 " << s.width << ' ' << s.height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void axes(std::ostringstream& out, const Frame& f)
{
  const SvgStyle& s = f.style;
  out << "<rect x=\"" << s.margin << "\" y=\"" << s.margin << "\" width=\"" << s.width - 2 * s.margin
      << "\" height=\"" << s.height - 2 * s.margin << "\" fill=\"none\" stroke=\"#444\"/>\n";
  auto label = [&](double x, double y, const std::string& text, const char* anchor) {
    out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"11\" text-anchor=\"" << anchor
        << "\">" << text << "</text>\n";
  };
  label(s.margin, s.height - s.margin + 16, num(f.x0), "start");
  label(s.width - s.margin, s.height - s.margin + 16, num(f.x1), "end");
  label(s.margin - 4, s.height - s.margin, num(f.y0), "end");
  label(s.margin - 4, s.margin + 10, num(f.y1), "end");
}

void polyline(std::ostringstream& out, const Frame& f, const std::vector<std::pair<double, double>>& pts,
              const char* color, const char* extra = "")
{
  out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"" << extra << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    out << (i ? " " : "") << num(f.px(pts[i].first)) << ',' << num(f.py(pts[i].second));
  out << "\"/>\n";
}

double chi2_density(double x, int k)
{
  if (x <= 0.0)
    return 0.0;
  const double a = 0.5 * k;
  return std::exp((a - 1.0) * std::log(x) - 0.5 * x - a * std::log(2.0) - std::lgamma(a));
}

}  // namespace

std::string trajectory_svg(const Trajectory& traj, double alpha, std::size_t ellipse_every,
                           BiasCorrection mode, const SvgStyle& style)
{
  if (traj.states.empty())
    throw std::invalid_argument("trajectory_svg: empty trajectory");
  if (traj.dim() != 2)
    throw std::invalid_argument("trajectory_svg: only planar trajectories can be drawn");

  const AsymptoticScale scale = traj.scale();
  std::vector<Ellipsoid> ellipses;
  if (ellipse_every > 0) {
    for (std::size_t i = 0; i < traj.states.size(); i += ellipse_every)
      ellipses.push_back(confidence_ellipse(traj.states[i], alpha, scale, traj.config.bandwidth.beta, mode));
  }

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  auto grow = [&](double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const TrackState& s : traj.states)
    grow(s.x[0], s.x[1]);
  for (const Ellipsoid& e : ellipses) {
    double r = 0.0;
    for (const EllipseAxis& a : e.axes)
      r = std::max(r, a.semi_length);
    grow(e.center[0] - r, e.center[1] - r);
    grow(e.center[0] + r, e.center[1] + r);
  }
  pad(x0, x1, 0.05);
  pad(y0, y1, 0.05);
  // equal aspect ratio
  const double span = std::max(x1 - x0, (y1 - y0) * (style.width - 2.0 * style.margin) /
                                            (style.height - 2.0 * style.margin));
  const double cx = 0.5 * (x0 + x1);
  const double cy = 0.5 * (y0 + y1);
  const double yspan = span * (style.height - 2.0 * style.margin) / (style.width - 2.0 * style.margin);
  const Frame f{cx - span / 2, cx + span / 2, cy - yspan / 2, cy + yspan / 2, style};

  std::ostringstream out;
  open_svg(out, style);
  axes(out, f);
  for (const Ellipsoid& e : ellipses) {
    const Vector& d = e.axes[0].direction;
    const double angle = -std::atan2(d[1], d[0]) * 180.0 / std::numbers::pi;
    out << "<ellipse cx=\"" << num(f.px(e.center[0])) << "\" cy=\"" << num(f.py(e.center[1])) << "\" rx=\""
        << num(f.sx(e.axes[0].semi_length)) << "\" ry=\"" << num(f.sy(e.axes[1].semi_length))
        << "\" transform=\"rotate(" << num(angle) << ' ' << num(f.px(e.center[0])) << ' '
        << num(f.py(e.center[1])) << ")\" fill=\"#4a90d9\" fill-opacity=\"0.15\" stroke=\"#4a90d9\"/>\n";
  }
  std::vector<std::pair<double, double>> pts;
  for (const TrackState& s : traj.states)
    pts.emplace_back(s.x[0], s.x[1]);
  polyline(out, f, pts, "#c0392b");
  out << "</svg>\n";
  return out.str();
}

std::string histogram_svg(const Histogram& hist, Overlay overlay, int dof, const SvgStyle& style)
{
  if (hist.counts.empty() || hist.total() == 0)
    throw std::invalid_argument("histogram_svg: empty histogram");
  const double width = hist.bin_width();
  const double total = static_cast<double>(hist.total());
  double ymax = 0.0;
  for (std::size_t c : hist.counts)
    ymax = std::max(ymax, static_cast<double>(c) / (total * width));

  std::vector<std::pair<double, double>> curve;
  if (overlay != Overlay::none) {
    const int steps = 200;
    for (int i = 0; i <= steps; ++i) {
      const double x = hist.lower + (hist.upper - hist.lower) * i / steps;
      const double y = overlay == Overlay::normal
                           ? std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi)
                           : chi2_density(x, dof);
      curve.emplace_back(x, y);
      if (std::isfinite(y))
        ymax = std::max(ymax, y);
    }
  }
  const Frame f{hist.lower, hist.upper, 0.0, 1.05 * ymax, style};

  std::ostringstream out;
  open_svg(out, style);
  axes(out, f);
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    const double density = static_cast<double>(hist.counts[i]) / (total * width);
    const double left = hist.lower + static_cast<double>(i) * width;
    out << "<rect x=\"" << num(f.px(left)) << "\" y=\"" << num(f.py(density)) << "\" width=\""
        << num(f.sx(width)) << "\" height=\"" << num(f.sy(density))
        << "\" fill=\"#9bb7d4\" stroke=\"#34618e\" stroke-width=\"0.5\"/>\n";
  }
  if (!curve.empty()) {
    for (auto& p : curve)
      p.second = std::isfinite(p.second) ? std::min(p.second, f.y1) : f.y1;
    polyline(out, f, curve, "#c0392b");
  }
  out << "</svg>\n";
  return out.str();
}

std::string power_curve_svg(const StudyResult& study, double alpha, const SvgStyle& style)
{
  const std::size_t n = study.target_distance.size();
  if (n == 0 || study.empirical_power.size() != n || study.theoretical_power.size() != n)
    throw std::invalid_argument("power_curve_svg: study has no power data");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return study.target_distance[a] < study.target_distance[b];
  });
  double x0 = study.target_distance[order.front()];
  double x1 = study.target_distance[order.back()];
  pad(x0, x1, 0.03);
  const Frame f{x0, x1, 0.0, 1.0, style};

  std::ostringstream out;
  open_svg(out, style);
  axes(out, f);
  out << "<line x1=\"" << num(f.px(x0)) << "\" y1=\"" << num(f.py(alpha)) << "\" x2=\"" << num(f.px(x1))
      << "\" y2=\"" << num(f.py(alpha)) << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  std::vector<std::pair<double, double>> theo, emp;
  for (std::size_t i : order) {
    theo.emplace_back(study.target_distance[i], study.theoretical_power[i]);
    emp.emplace_back(study.target_distance[i], study.empirical_power[i]);
  }
  polyline(out, f, theo, "#c0392b");
  polyline(out, f, emp, "#2c3e50", " stroke-dasharray=\"5 3\"");
  for (const auto& [x, y] : emp)
    out << "<circle cx=\"" << num(f.px(x)) << "\" cy=\"" << num(f.py(y)) << "\" r=\"3\" fill=\"#2c3e50\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string pvalue_map_svg(const std::vector<PValuePoint>& map, int steps, const Trajectory* overlay,
                           const SvgStyle& style)
{
  if (map.empty())
    throw std::invalid_argument("pvalue_map_svg: empty map");
  if (steps < 2 || map.size() != static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps))
    throw std::invalid_argument("pvalue_map_svg: map is not a steps x steps grid");
  if (map.front().point.size() != 2)
    throw std::invalid_argument("pvalue_map_svg: only planar maps can be drawn");

  const Vector& lo = map.front().point;
  const Vector& hi = map.back().point;
  const double dx = (hi[0] - lo[0]) / (steps - 1);
  const double dy = (hi[1] - lo[1]) / (steps - 1);
  const Frame f{lo[0] - dx / 2, hi[0] + dx / 2, lo[1] - dy / 2, hi[1] + dy / 2, style};

  std::ostringstream out;
  open_svg(out, style);
  for (const PValuePoint& p : map) {
    // white for large p-values, dark red near zero
    const double t = std::clamp(p.p_value, 0.0, 1.0);
    const int r = static_cast<int>(std::lround(140 + 115 * t));
    const int g = static_cast<int>(std::lround(255 * t));
    const int b = static_cast<int>(std::lround(255 * t));
    out << "<rect x=\"" << num(f.px(p.point[0] - dx / 2)) << "\" y=\"" << num(f.py(p.point[1] + dy / 2))
        << "\" width=\"" << num(f.sx(dx)) << "\" height=\"" << num(f.sy(dy)) << "\" fill=\"rgb(" << r << ','
        << g << ',' << b << ")\"/>\n";
  }
  axes(out, f);
  if (overlay && !overlay->states.empty() && overlay->dim() == 2) {
    std::vector<std::pair<double, double>> pts;
    for (const TrackState& s : overlay->states)
      pts.emplace_back(s.x[0], s.x[1]);
    polyline(out, f, pts, "#1f4e79");
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace icurve::io
