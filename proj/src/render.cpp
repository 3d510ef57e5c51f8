#include "halin_book/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace halin_book {

namespace {

constexpr double kStep = 60.0;
constexpr double kMargin = 40.0;
constexpr double kLegendRow = 18.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string page_colour(std::size_t page) {
  constexpr std::size_t n = std::size(kPalette);
  if (page < n) return kPalette[page];
  // Golden-angle hues once the fixed palette runs out (HSV, s=0.7, v=0.75).
  const double h = static_cast<double>((page * 137) % 360) / 60.0;
  const double v = 0.75, c = v * 0.7;
  const double x = c * (1 - std::abs(std::fmod(h, 2.0) - 1));
  double rgb[3] = {0, 0, 0};
  const int sector = static_cast<int>(h) % 6;
  const int order[6][3] = {{0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 1, 0}, {2, 0, 1}, {0, 2, 1}};
  rgb[order[sector][0]] = c;
  rgb[order[sector][1]] = x;
  std::ostringstream os;
  os << '#' << std::hex << std::setfill('0');
  for (double channel : rgb)
    os << std::setw(2) << static_cast<int>(std::lround((channel + v - c) * 255));
  return os.str();
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_svg(const Graph& g, const BookEmbedding& emb, const Labels& labels) {
  const auto& seq = emb.spine.sequence();
  const auto n = seq.size();
  const double width = 2 * kMargin + kStep * static_cast<double>(n > 0 ? n - 1 : 0);
  const double arc_room = kStep * static_cast<double>(n) / 2.0;
  const double baseline = kMargin + arc_room;
  const double height =
      baseline + 2 * kMargin + kLegendRow * static_cast<double>(emb.page_count());
  auto x_of = [&](VertexId v) {
    return kMargin + kStep * static_cast<double>(emb.spine.position(v));
  };

  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "  <title>" << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
     << emb.page_count() << " pages</title>\n"
     << "  <line x1=\"" << kMargin << "\" y1=\"" << baseline << "\" x2=\"" << width - kMargin
     << "\" y2=\"" << baseline << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";

  for (std::size_t p = 0; p < emb.page_count(); ++p) {
    os << "  <g class=\"page\" data-page=\"" << p << "\" stroke=\"" << page_colour(p)
       << "\" fill=\"none\" stroke-width=\"2\">\n";
    for (const auto& e : emb.pages[p]) {
      auto x1 = x_of(e.first()), x2 = x_of(e.second());
      if (x1 > x2) std::swap(x1, x2);
      const double r = (x2 - x1) / 2.0;
      os << "    <path d=\"M " << x1 << ' ' << baseline << " A " << r << ' ' << r << " 0 0 1 "
         << x2 << ' ' << baseline << "\"><title>" << xml_escape(labels.name(e.first())) << '-'
         << xml_escape(labels.name(e.second())) << " (page " << p << ")</title></path>\n";
    }
    os << "  </g>\n";
  }

  for (auto v : seq) {
    os << "  <circle cx=\"" << x_of(v) << "\" cy=\"" << baseline
       << "\" r=\"5\" fill=\"#000\"/>\n"
       << "  <text x=\"" << x_of(v) << "\" y=\"" << baseline + 20
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
       << xml_escape(labels.name(v)) << "</text>\n";
  }

  const double legend_top = baseline + 2 * kMargin - kLegendRow;
  for (std::size_t p = 0; p < emb.page_count(); ++p) {
    const double y = legend_top + kLegendRow * static_cast<double>(p);
    os << "  <line x1=\"" << kMargin << "\" y1=\"" << y << "\" x2=\"" << kMargin + 24
       << "\" y2=\"" << y << "\" stroke=\"" << page_colour(p) << "\" stroke-width=\"3\"/>\n"
       << "  <text x=\"" << kMargin + 32 << "\" y=\"" << y + 4
       << "\" font-family=\"sans-serif\" font-size=\"12\">page " << p << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_dot(const Graph& g, const BookEmbedding& emb, const Labels& labels) {
  std::ostringstream os;
  os << "graph book {\n"
     << "  // " << g.vertex_count() << " vertices, " << emb.page_count() << " pages\n"
     << "  node [shape=circle];\n";
  const auto& seq = emb.spine.sequence();
  for (std::size_t i = 0; i < seq.size(); ++i)
    os << "  " << dot_quote(labels.name(seq[i])) << " [spine=" << i << "];\n";
  for (std::size_t p = 0; p < emb.page_count(); ++p)
    for (const auto& e : emb.pages[p])
      os << "  " << dot_quote(labels.name(e.first())) << " -- "
         << dot_quote(labels.name(e.second())) << " [page=" << p << ", color=\""
         << page_colour(p) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace halin_book
