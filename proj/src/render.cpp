#include "pmclp/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pmclp {
namespace {

std::string f(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;
constexpr double kLegend = 40.0;
const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string render_svg(const Instance& inst, const Solution* sol) {
  const bool one_d = inst.dimension == Dimension::kOneD;
  if (sol != nullptr && !sol->placements.empty()) {
    if (static_cast<int>(sol->placements.size()) != inst.p)
      throw std::invalid_argument("solution has " + std::to_string(sol->placements.size()) +
                                  " placements but the instance has p = " +
                                  std::to_string(inst.p));
    if (one_d)
      for (const Placement& pl : sol->placements)
        if (pl.y != 0.0) throw std::invalid_argument("1D solution with nonzero y");
  }
  std::vector<Rect> szs;
  if (sol != nullptr)
    for (const Placement& pl : sol->placements) szs.push_back(sz_rect(inst.base, pl));

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
  double y0 = x0, y1 = -x0;
  auto grow = [&](const Rect& r) {
    x0 = std::min(x0, r.x);
    x1 = std::max(x1, r.right());
    y0 = std::min(y0, r.y);
    y1 = std::max(y1, r.top());
  };
  for (const DemandZone& d : inst.dzs) grow(d.rect);
  for (const Rect& r : szs) grow(r);
  if (x0 > x1) x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  const double span_x = std::max(x1 - x0, 1e-9);
  const double span_y = std::max(y1 - y0, 1e-9);
  const double scale = one_d ? (kCanvas - 2 * kMargin) / span_x
                             : (kCanvas - 2 * kMargin) / std::max(span_x, span_y);
  const double width = 2 * kMargin + span_x * scale;
  const double plot_h = one_d ? 120.0 : 2 * kMargin + span_y * scale;
  const double height = plot_h + kLegend;

  double vmax = 0.0;
  for (const DemandZone& d : inst.dzs) vmax = std::max(vmax, d.v);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f(width)
      << "\" height=\"" << f(height) << "\" viewBox=\"0 0 " << f(width) << " " << f(height)
      << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << f(width) << "\" height=\"" << f(height)
      << "\" fill=\"white\"/>\n";

  auto sx = [&](double x) { return kMargin + (x - x0) * scale; };
  // y grows upwards in the model and downwards in SVG.
  auto sy = [&](double y) { return plot_h - kMargin - (y - y0) * scale; };

  out << "<g class=\"dz\">\n";
  for (const DemandZone& d : inst.dzs) {
    const double opacity = vmax > 0.0 ? 0.15 + 0.6 * d.v / vmax : 0.5;
    if (one_d) {
      out << "<rect x=\"" << f(sx(d.rect.x)) << "\" y=\"30.000\" width=\""
          << f(d.rect.w * scale) << "\" height=\"20.000\"";
    } else {
      out << "<rect x=\"" << f(sx(d.rect.x)) << "\" y=\"" << f(sy(d.rect.top()))
          << "\" width=\"" << f(d.rect.w * scale) << "\" height=\"" << f(d.rect.l * scale)
          << "\"";
    }
    out << " fill=\"#555555\" fill-opacity=\"" << f(opacity) << "\"/>\n";
  }
  out << "</g>\n";
  if (one_d)
    out << "<line x1=\"" << f(kMargin) << "\" y1=\"60.000\" x2=\"" << f(width - kMargin)
        << "\" y2=\"60.000\" stroke=\"black\"/>\n";

  out << "<g class=\"sz\">\n";
  for (std::size_t j = 0; j < szs.size(); ++j) {
    const Rect& r = szs[j];
    const char* colour = kPalette[j % std::size(kPalette)];
    const double z = sol->placements[j].z;
    double tx, ty;
    if (one_d) {
      const double band = 70.0 + 10.0 * static_cast<double>(j % 3);
      out << "<rect x=\"" << f(sx(r.x)) << "\" y=\"" << f(band) << "\" width=\""
          << f(r.w * scale) << "\" height=\"8.000\"";
      tx = sx(r.x);
      ty = band - 1.0;
    } else {
      out << "<rect x=\"" << f(sx(r.x)) << "\" y=\"" << f(sy(r.top())) << "\" width=\""
          << f(r.w * scale) << "\" height=\"" << f(r.l * scale) << "\"";
      tx = sx(r.x) + 2.0;
      ty = sy(r.top()) + 12.0;
    }
    out << " fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << f(tx) << "\" y=\"" << f(ty)
        << "\" font-size=\"11\" font-family=\"sans-serif\" fill=\"" << colour << "\">z="
        << z << "</text>\n";
  }
  out << "</g>\n";

  out << "<text x=\"" << f(kMargin) << "\" y=\"" << f(plot_h + 24.0)
      << "\" font-size=\"14\" font-family=\"sans-serif\">" << inst.dzs.size()
      << " demand zones";
  if (sol != nullptr)
    out << ", " << szs.size() << " service zones, total reward " << f(sol->reward);
  out << "</text>\n</svg>\n";
  return out.str();
}

}  // namespace pmclp
