#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fanowalls/walls.hpp"

namespace fanowalls::walls {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string render_walls(const std::vector<RenderedWall>& walls, const Window& window,
                         const RenderStyle& style) {
  if (!(window.beta_min < window.beta_max)) {
    throw DomainError("empty-window", "beta_min must be smaller than beta_max");
  }

  std::vector<RenderedWall> unique;
  for (const auto& w : walls) {
    const bool seen = std::any_of(unique.begin(), unique.end(),
                                  [&](const RenderedWall& u) { return u.wall == w.wall; });
    if (!seen) unique.push_back(w);
  }
  std::stable_sort(unique.begin(), unique.end(), [](const RenderedWall& x, const RenderedWall& y) {
    return display_before(x.wall, y.wall);
  });

  const double b0 = to_double(window.beta_min);
  const double b1 = to_double(window.beta_max);
  double a_max = 0;
  if (window.s_max) {
    a_max = std::sqrt(to_double(*window.s_max));
  } else {
    for (const auto& w : unique) {
      if (!w.wall.is_vertical()) a_max = std::max(a_max, std::sqrt(to_double(w.wall.radius_sq())));
    }
    a_max = a_max > 0 ? a_max * 1.1 : (b1 - b0) / 2;
  }

  const double margin_l = 50, margin_r = 20, margin_t = 30, margin_b = 40;
  const double legend_h = 16.0 * static_cast<double>(unique.size());
  const double plot_w = style.width - margin_l - margin_r;
  const double plot_h = style.height - margin_t - margin_b;
  const double total_h = style.height + legend_h;
  const double sx = plot_w / (b1 - b0);
  const double sy = plot_h / a_max;
  const auto px = [&](double beta) { return margin_l + (beta - b0) * sx; };
  const double base_y = margin_t + plot_h;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(style.width) << "\" height=\""
     << num(total_h) << "\" viewBox=\"0 0 " << num(style.width) << ' ' << num(total_h) << "\">\n";
  os << "<defs><clipPath id=\"plot\"><rect x=\"" << num(margin_l) << "\" y=\"" << num(margin_t)
     << "\" width=\"" << num(plot_w) << "\" height=\"" << num(plot_h)
     << "\"/></clipPath></defs>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!style.title.empty()) {
    os << "<text x=\"" << num(style.width / 2) << "\" y=\"18\" text-anchor=\"middle\" "
       << "font-family=\"sans-serif\" font-size=\"14\">" << xml_escape(style.title) << "</text>\n";
  }

  // Axes.
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << num(margin_l) << "\" y1=\"" << num(base_y) << "\" x2=\""
     << num(margin_l + plot_w) << "\" y2=\"" << num(base_y) << "\"/>\n";
  os << "<line x1=\"" << num(margin_l) << "\" y1=\"" << num(margin_t) << "\" x2=\""
     << num(margin_l) << "\" y2=\"" << num(base_y) << "\"/>\n";
  os << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<text x=\"" << num(margin_l) << "\" y=\"" << num(base_y + 16) << "\" text-anchor=\"middle\">"
     << xml_escape(fanowalls::to_string(window.beta_min)) << "</text>\n";
  os << "<text x=\"" << num(margin_l + plot_w) << "\" y=\"" << num(base_y + 16)
     << "\" text-anchor=\"middle\">" << xml_escape(fanowalls::to_string(window.beta_max)) << "</text>\n";
  os << "<text x=\"" << num(margin_l + plot_w / 2) << "\" y=\"" << num(base_y + 30)
     << "\" text-anchor=\"middle\">beta</text>\n";
  os << "<text x=\"" << num(margin_l - 8) << "\" y=\"" << num(margin_t + 4)
     << "\" text-anchor=\"end\">" << num(a_max) << "</text>\n";
  os << "<text x=\"" << num(margin_l - 8) << "\" y=\"" << num(margin_t + plot_h / 2)
     << "\" text-anchor=\"end\">alpha</text>\n";
  os << "</g>\n";

  os << "<g clip-path=\"url(#plot)\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const Wall& w = unique[i].wall;
    const char* color = kPalette[i % std::size(kPalette)];
    if (w.is_vertical()) {
      const double x = px(to_double(w.beta0()));
      os << "<line x1=\"" << num(x) << "\" y1=\"" << num(margin_t) << "\" x2=\"" << num(x)
         << "\" y2=\"" << num(base_y) << "\" stroke=\"" << color
         << "\" stroke-dasharray=\"6 4\"/>\n";
    } else {
      const double c = to_double(w.center());
      const double r = std::sqrt(to_double(w.radius_sq()));
      os << "<path d=\"M " << num(px(c - r)) << ' ' << num(base_y) << " A " << num(r * sx) << ' '
         << num(r * sy) << " 0 0 1 " << num(px(c + r)) << ' ' << num(base_y) << "\" stroke=\""
         << color << "\"/>\n";
    }
  }
  os << "</g>\n";

  if (!unique.empty()) {
    os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (std::size_t i = 0; i < unique.size(); ++i) {
      const double y = style.height + 16.0 * static_cast<double>(i) - 4;
      const char* color = kPalette[i % std::size(kPalette)];
      os << "<line x1=\"" << num(margin_l) << "\" y1=\"" << num(y - 4) << "\" x2=\""
         << num(margin_l + 20) << "\" y2=\"" << num(y - 4) << "\" stroke=\"" << color << '"'
         << (unique[i].wall.is_vertical() ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
      std::string text = unique[i].wall.to_string();
      if (!unique[i].label.empty()) text = unique[i].label + ": " + text;
      os << "<text x=\"" << num(margin_l + 26) << "\" y=\"" << num(y) << "\">" << xml_escape(text)
         << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fanowalls::walls
