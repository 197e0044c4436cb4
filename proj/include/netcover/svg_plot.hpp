#pragma once

// Minimal standalone SVG line charts: polylines with point markers, +/-1 sd
// error bars, axis ticks and a legend. Output is deterministic (no
// timestamps, locale-independent number formatting).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace netcover {

/// Locale-independent "%.<precision>g" formatting.
inline std::string format_double(double value, int precision = 6) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> yerr;  // may be empty: no error bars
};

namespace detail {

inline double nice_tick_step(double range, int target_ticks) {
  if (range <= 0) return 1.0;
  double raw = range / target_ticks;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double norm = raw / mag;
  double step = norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0;
  return step * mag;
}

}  // namespace detail

inline void write_svg_plot(std::ostream& out, const std::string& title,
                           const std::string& xlabel, const std::string& ylabel,
                           std::span<const PlotSeries> series) {
  constexpr double width = 720, height = 480;
  constexpr double left = 64, right = 704, top = 40, bottom = 432;
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool have_data = false;
  for (const auto& s : series) {
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      double lo = s.y[k], hi = s.y[k];
      if (k < s.yerr.size()) {
        lo -= s.yerr[k];
        hi += s.yerr[k];
      }
      if (!have_data) {
        xmin = xmax = s.x[k];
        ymin = lo;
        ymax = hi;
        have_data = true;
      } else {
        xmin = std::min(xmin, s.x[k]);
        xmax = std::max(xmax, s.x[k]);
        ymin = std::min(ymin, lo);
        ymax = std::max(ymax, hi);
      }
    }
  }
  if (xmax == xmin) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax == ymin) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  double xpad = (xmax - xmin) * 0.05, ypad = (ymax - ymin) * 0.05;
  xmin -= xpad;
  xmax += xpad;
  ymin -= ypad;
  ymax += ypad;

  auto sx = [&](double x) {
    return left + (x - xmin) / (xmax - xmin) * (right - left);
  };
  auto sy = [&](double y) {
    return bottom - (y - ymin) / (ymax - ymin) * (bottom - top);
  };
  auto fmt = [](double v) { return format_double(v, 6); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << (width / 2)
      << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << title << "</text>\n";

  // ticks and gridlines
  double xstep = detail::nice_tick_step(xmax - xmin, 5);
  double ystep = detail::nice_tick_step(ymax - ymin, 5);
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (double t = std::ceil(xmin / xstep) * xstep; t <= xmax + 1e-9;
       t += xstep) {
    double px = sx(t);
    out << "<line x1=\"" << fmt(px) << "\" y1=\"" << top << "\" x2=\""
        << fmt(px) << "\" y2=\"" << bottom
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt(px) << "\" y=\"" << (bottom + 16)
        << "\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
  }
  for (double t = std::ceil(ymin / ystep) * ystep; t <= ymax + 1e-9;
       t += ystep) {
    double py = sy(t);
    out << "<line x1=\"" << left << "\" y1=\"" << fmt(py) << "\" x2=\""
        << right << "\" y2=\"" << fmt(py)
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << (left - 6) << "\" y=\"" << fmt(py + 4)
        << "\" text-anchor=\"end\">" << fmt(t) << "</text>\n";
  }
  out << "</g>\n";

  // axes
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
      << "\" y2=\"" << bottom << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << bottom << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << ((left + right) / 2) << "\" y=\"" << (height - 10)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << xlabel << "</text>\n";
  out << "<text x=\"18\" y=\"" << ((top + bottom) / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 "
      << ((top + bottom) / 2) << ")\">" << ylabel << "</text>\n";

  // series
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = palette[si % (sizeof(palette) / sizeof(*palette))];
    if (!s.x.empty()) {
      out << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t k = 0; k < s.x.size(); ++k) {
        if (k) out << ' ';
        out << fmt(sx(s.x[k])) << ',' << fmt(sy(s.y[k]));
      }
      out << "\"/>\n";
    }
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      double px = sx(s.x[k]), py = sy(s.y[k]);
      if (k < s.yerr.size() && s.yerr[k] > 0) {
        double y1 = sy(s.y[k] - s.yerr[k]), y2 = sy(s.y[k] + s.yerr[k]);
        out << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(y1) << "\" x2=\""
            << fmt(px) << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << color
            << "\" stroke-width=\"1\"/>\n";
        for (double ye : {y1, y2})
          out << "<line x1=\"" << fmt(px - 3) << "\" y1=\"" << fmt(ye)
              << "\" x2=\"" << fmt(px + 3) << "\" y2=\"" << fmt(ye)
              << "\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
      }
      out << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
  }

  // legend
  if (!series.empty()) {
    double lx = right - 150, ly = top + 10;
    out << "<rect x=\"" << fmt(lx - 8) << "\" y=\"" << fmt(ly - 14)
        << "\" width=\"150\" height=\""
        << fmt(series.size() * 18.0 + 10) << "\" fill=\"white\" "
           "stroke=\"#999\" stroke-width=\"0.5\"/>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#111\">\n";
    for (std::size_t si = 0; si < series.size(); ++si) {
      const char* color = palette[si % (sizeof(palette) / sizeof(*palette))];
      double row = ly + si * 18.0;
      out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(row - 4)
          << "\" x2=\"" << fmt(lx + 22) << "\" y2=\"" << fmt(row - 4)
          << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
      out << "<text x=\"" << fmt(lx + 28) << "\" y=\"" << fmt(row) << "\">"
          << series[si].label << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
}

}  // namespace netcover
