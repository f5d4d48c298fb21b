#include "syz/svg.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "syz/errors.hpp"
#include "syz/intersect.hpp"
#include "syz/surgery.hpp"

namespace syz {

namespace {

constexpr int kSize = 512;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;

/// Exact fixed-point rendering with six decimal places (round half up).
std::string fixed6(const Rational& q) {
  const Int scaled = (q * Rational(1000000) + Rational(1, 2)).floor();
  const bool neg = scaled < 0;
  Int abs = neg ? Int(-scaled) : scaled;
  const Int whole = abs / 1000000;
  const Int frac = abs % 1000000;
  std::ostringstream out;
  if (neg) out << '-';
  out << whole << '.';
  std::string f = frac.str();
  out << std::string(6 - f.size(), '0') << f;
  return out.str();
}

std::string px(const Rational& x) { return fixed6(x * Rational(kSize)); }
std::string py(const Rational& y) { return fixed6((Rational(1) - y) * Rational(kSize)); }

long long to_ll(const Int& n) { return n.convert_to<long long>(); }

struct UnitSegment {
  Rational x0, y0, x1, y1;  // all inside [0, 1]
};

/// Cuts one straight segment of the quasi-periodic graph at every integer
/// base and fiber crossing and reduces each piece into the unit square.
void cut_segment(const Rational& xa, const Rational& ya, const Rational& xb,
                 const Rational& yb, std::vector<UnitSegment>& out) {
  std::vector<Rational> cuts = {xa, xb};
  for (long long n = to_ll(xa.floor()) + 1; Rational(n) < xb; ++n) {
    if (Rational(n) > xa) cuts.push_back(Rational(n));
  }
  if (ya != yb) {
    const Rational slope = (yb - ya) / (xb - xa);
    const Rational ylo = std::min(ya, yb);
    const Rational yhi = std::max(ya, yb);
    for (long long m = to_ll(ylo.floor()) + 1; Rational(m) < yhi; ++m) {
      if (Rational(m) > ylo) {
        const Rational x = xa + (Rational(m) - ya) / slope;
        if (x > xa && x < xb) cuts.push_back(x);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const Rational slope = (yb - ya) / (xb - xa);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational u0 = cuts[i], u1 = cuts[i + 1];
    const Rational v0 = ya + slope * (u0 - xa);
    const Rational v1 = ya + slope * (u1 - xa);
    const Rational fx(((u0 + u1) / Rational(2)).floor());
    const Rational fy(((v0 + v1) / Rational(2)).floor());
    out.push_back({u0 - fx, v0 - fy, u1 - fx, v1 - fy});
  }
}

void draw_section(std::ostringstream& svg, const PLMultiSection& s,
                  const char* color) {
  std::vector<UnitSegment> segs;
  for (size_t i = 0; i < s.breakpoints.size(); ++i) {
    const auto& [xa, ya] = s.breakpoints[i];
    Rational xb, yb;
    if (i + 1 < s.breakpoints.size()) {
      xb = s.breakpoints[i + 1].first;
      yb = s.breakpoints[i + 1].second;
    } else {
      xb = s.breakpoints[0].first + Rational(s.r);
      yb = s.breakpoints[0].second + Rational(s.d);
    }
    cut_segment(xa, ya, xb, yb, segs);
  }
  for (const auto& g : segs) {
    svg << "  <line x1=\"" << px(g.x0) << "\" y1=\"" << py(g.y0) << "\" x2=\""
        << px(g.x1) << "\" y2=\"" << py(g.y1) << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
  }
}

void draw_point(std::ostringstream& svg, const IntersectionPoint& p,
                const char* fill, const char* radius) {
  const std::string cx = px(p.base.value());
  const std::string cy = py(p.fiber.value());
  svg << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << radius
      << "\" fill=\"" << fill << "\"/>\n";
  svg << "  <text x=\"" << cx << "\" y=\"" << cy
      << "\" dx=\"6\" dy=\"-6\" font-family=\"monospace\" font-size=\"10\">("
      << p.base.str() << ", " << p.fiber.str() << ")</text>\n";
}

}  // namespace

std::string render_svg(const Document& doc,
                       const std::optional<std::string>& spec_name) {
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize
      << " " << kSize << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

  if (spec_name) {
    const SurgerySpec spec = doc.make_spec(*spec_name);
    const BraneCollection result = surger(spec);
    int color = 0;
    for (const auto& comp : result.components) {
      draw_section(svg, comp, kPalette[color % kPaletteSize]);
      ++color;
    }
    for (const auto& p : leftover_self_intersections(spec)) {
      draw_point(svg, p, "#444444", "3.5");
    }
    for (const auto& p : spec.k) {
      draw_point(svg, p, "#d62728", "5");
    }
  } else {
    int color = 0;
    std::vector<const LineBrane*> lines;
    for (const auto& [name, l] : doc.branes) {
      draw_section(svg, line_to_pl(l), kPalette[color % kPaletteSize]);
      ++color;
      lines.push_back(&l);
    }
    for (size_t i = 0; i < lines.size(); ++i) {
      for (size_t j = i + 1; j < lines.size(); ++j) {
        const long long det =
            static_cast<long long>(lines[i]->r) * lines[j]->d -
            static_cast<long long>(lines[j]->r) * lines[i]->d;
        if (det == 0) continue;
        for (const auto& p : intersect_lines(*lines[i], *lines[j])) {
          draw_point(svg, p, "#444444", "3.5");
        }
      }
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace syz
