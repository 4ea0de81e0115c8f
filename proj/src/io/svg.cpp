#include "hoeckend/io/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "hoeckend/error.hpp"
#include "hoeckend/io/output.hpp"

namespace hoeckend::io {

namespace {

// Five-stop approximation of viridis.
std::string colour(double t) {
  static constexpr std::array<std::array<double, 3>, 5> stops{{{68, 1, 84},
                                                               {59, 82, 139},
                                                               {33, 145, 140},
                                                               {94, 201, 98},
                                                               {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * 4.0;
  const int i = std::min(static_cast<int>(t), 3);
  const double f = t - i;
  char buf[8];
  std::array<int, 3> c{};
  for (int k = 0; k < 3; ++k) {
    c[k] = static_cast<int>(std::lround(stops[i][k] + f * (stops[i + 1][k] - stops[i][k])));
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
  return buf;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string heatmap_svg(const Table& table, const HeatmapSpec& spec, const std::string& config_hash) {
  std::map<double, int> xs, ys;
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    xs.emplace(r[spec.x_column], 0);
    ys.emplace(r[spec.y_column], 0);
    if (table.ok[i] && std::isfinite(r[spec.value_column])) {
      vmin = std::min(vmin, r[spec.value_column]);
      vmax = std::max(vmax, r[spec.value_column]);
    }
  }
  if (xs.empty() || ys.empty()) fail(ErrorKind::InvalidArgument, "empty table");
  int k = 0;
  for (auto& [_, idx] : xs) idx = k++;
  k = 0;
  for (auto& [_, idx] : ys) idx = k++;
  if (!std::isfinite(vmin)) vmin = vmax = 0.0;
  const double vspan = vmax > vmin ? vmax - vmin : 1.0;

  constexpr double W = 480, H = 360, L = 70, T = 40, LEG = 30;
  const double cw = W / static_cast<double>(xs.size());
  const double ch = H / static_cast<double>(ys.size());
  const double total_w = L + W + 40 + LEG + 60;
  const double total_h = T + H + 60;

  std::ostringstream s;
  s << "<!-- " << header_line(config_hash).substr(2, header_line(config_hash).size() - 3)
    << " -->\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(total_w) << "\" height=\""
    << px(total_h) << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
    << "<text x=\"" << px(L) << "\" y=\"20\" font-size=\"14\">" << spec.title << "</text>\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    const double x = L + cw * xs[r[spec.x_column]];
    const double y = T + H - ch * (ys[r[spec.y_column]] + 1);
    const std::string fill =
        table.ok[i] ? colour((r[spec.value_column] - vmin) / vspan) : std::string("#cccccc");
    s << "<rect x=\"" << px(x) << "\" y=\"" << px(y) << "\" width=\"" << px(cw + 0.05)
      << "\" height=\"" << px(ch + 0.05) << "\" fill=\"" << fill << "\"/>\n";
  }
  s << "<rect x=\"" << px(L) << "\" y=\"" << px(T) << "\" width=\"" << px(W) << "\" height=\""
    << px(H) << "\" fill=\"none\" stroke=\"black\"/>\n";
  const auto& cols = table.columns;
  s << "<text x=\"" << px(L + W / 2) << "\" y=\"" << px(T + H + 40)
    << "\" text-anchor=\"middle\">" << cols[spec.x_column] << "</text>\n";
  s << "<text x=\"20\" y=\"" << px(T + H / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
    << px(T + H / 2) << ")\">" << cols[spec.y_column] << "</text>\n";
  s << "<text x=\"" << px(L) << "\" y=\"" << px(T + H + 16) << "\">" << num(xs.begin()->first)
    << "</text>\n"
    << "<text x=\"" << px(L + W) << "\" y=\"" << px(T + H + 16) << "\" text-anchor=\"end\">"
    << num(xs.rbegin()->first) << "</text>\n"
    << "<text x=\"" << px(L - 4) << "\" y=\"" << px(T + H) << "\" text-anchor=\"end\">"
    << num(ys.begin()->first) << "</text>\n"
    << "<text x=\"" << px(L - 4) << "\" y=\"" << px(T + 10) << "\" text-anchor=\"end\">"
    << num(ys.rbegin()->first) << "</text>\n";

  const double lx = L + W + 40;
  constexpr int kLegendSteps = 32;
  for (int i = 0; i < kLegendSteps; ++i) {
    const double t = (i + 0.5) / kLegendSteps;
    const double y = T + H - (i + 1) * H / kLegendSteps;
    s << "<rect x=\"" << px(lx) << "\" y=\"" << px(y) << "\" width=\"" << px(LEG)
      << "\" height=\"" << px(H / kLegendSteps + 0.05) << "\" fill=\"" << colour(t) << "\"/>\n";
  }
  s << "<text x=\"" << px(lx + LEG + 4) << "\" y=\"" << px(T + H) << "\">" << num(vmin)
    << "</text>\n"
    << "<text x=\"" << px(lx + LEG + 4) << "\" y=\"" << px(T + 10) << "\">" << num(vmax)
    << "</text>\n"
    << "<text x=\"" << px(lx) << "\" y=\"" << px(T - 6) << "\">" << cols[spec.value_column]
    << "</text>\n"
    << "</svg>\n";
  return s.str();
}

}  // namespace hoeckend::io
