#include "mks/svg.hpp"

#include <cstdio>
#include <vector>

namespace mks {

namespace {

constexpr double kWidth = 900.0;
constexpr double kMargin = 60.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
                          "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#ff9896"};

struct Mapper {
  double vmin, vmax, scale_y, height;

  double x(const Fraction& u) const { return kMargin + (u.to_double() + 1.0) * (kWidth - 2 * kMargin) / 2.0; }
  double y(const Fraction& v) const { return kMargin + (vmax - v.to_double()) * scale_y; }
};

std::string num(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", d);
  return buf;
}

void line(std::string& out, const Mapper& m, const Fraction& u1, const Fraction& v1,
          const Fraction& u2, const Fraction& v2, const std::string& attrs) {
  out += "<line x1=\"" + num(m.x(u1)) + "\" y1=\"" + num(m.y(v1)) + "\" x2=\"" + num(m.x(u2)) +
         "\" y2=\"" + num(m.y(v2)) + "\" " + attrs + "/>\n";
}

Fraction u_of(const Fraction& f) { return Fraction(f.den() - 1, f.den()); }

struct PathPoints {
  std::vector<std::pair<Fraction, Fraction>> pts;  // (u, v)
  bool constant = false;
};

PathPoints candidate_path_points(const CandidateSystem& c, const Edgepath& p) {
  PathPoints out;
  if (p.is_constant()) {
    out.constant = true;
    out.pts.emplace_back(*c.u0, p.start);
    return out;
  }
  for (const Fraction& v : p.vertices) out.pts.emplace_back(u_of(v), v);
  if (p.final_partial) {
    // Replace the last vertex by the cut point on the final edge.
    const Fraction& last = p.vertices.back();
    const Fraction& prev = p.vertices[p.vertices.size() - 2];
    Fraction ul = u_of(last), ur = u_of(prev);
    Fraction u = *c.u0;
    Fraction v = last + (u - ul) * (prev - last) / (ur - ul);
    out.pts.back() = {u, v};
  }
  if (p.vertical_run != 0) {
    Fraction v_end = p.vertices.back() + Fraction(p.vertical_run);
    out.pts.emplace_back(Fraction(0), v_end);
  }
  if (p.appended_infinity) out.pts.emplace_back(Fraction(-1), Fraction(0));
  return out;
}

}  // namespace

std::string render_diagram(const BoundReport& rep, long max_den_vertices) {
  // Collect every drawn point to size the v-range.
  std::vector<PathPoints> all_points;
  Fraction vmin(0), vmax(0);
  auto stretch = [&](const Fraction& v) {
    if (v < vmin) vmin = v;
    if (v > vmax) vmax = v;
  };
  for (const Fraction& k : rep.knot.tangles) stretch(k);
  for (const EvaluatedCandidate& ec : rep.simplified)
    for (const Edgepath& p : ec.system.paths)
      for (const auto& [u, v] : candidate_path_points(ec.system, p).pts) stretch(v);
  vmin -= Fraction(1, 2);
  vmax += Fraction(1, 2);

  Mapper m;
  m.vmin = vmin.to_double();
  m.vmax = vmax.to_double();
  m.scale_y = (kWidth - 2 * kMargin) / 2.0 / 2.0;  // half the u-scale per v unit
  double legend_h = 18.0 * (rep.simplified.size() + 1) + 16.0;
  m.height = 2 * kMargin + (m.vmax - m.vmin) * m.scale_y + legend_h;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) +
         "\" height=\"" + num(m.height) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
         num(m.height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<title>" + rep.knot.str() + "</title>\n";
  double plot_h = (m.vmax - m.vmin) * m.scale_y;
  svg += "<defs><clipPath id=\"strip\"><rect x=\"" + num(kMargin - 8.0) + "\" y=\"" +
         num(kMargin - 8.0) + "\" width=\"" + num(kWidth - 2 * kMargin + 16.0) + "\" height=\"" +
         num(plot_h + 16.0) + "\"/></clipPath></defs>\n";

  // Background diagram, clipped to the strip.
  svg += "<g id=\"diagram\" clip-path=\"url(#strip)\" stroke=\"#c8c8c8\" stroke-width=\"0.6\">\n";
  long zlo = vmin.ceil().get_si();
  long zhi = vmax.floor().get_si();
  const std::string thin = "";
  for (long z = zlo; z < zhi; ++z)  // vertical edges on u = 0
    line(svg, m, Fraction(0), Fraction(z), Fraction(0), Fraction(z + 1), thin);
  for (long z = zlo; z <= zhi; ++z) {  // inf-edges and horizontal edges of integers
    line(svg, m, Fraction(-1), Fraction(0), Fraction(0), Fraction(z), thin);
    line(svg, m, Fraction(0), Fraction(z), Fraction(1), Fraction(z), thin);
  }
  for (long q = 2; q <= max_den_vertices; ++q) {
    for (mpz_class p = vmin.num() * q / vmin.den() - 1; Fraction(p, q) <= vmax; ++p) {
      if (gcd(p, mpz_class(q)) != 1) continue;
      Fraction f(p, q);
      if (f < vmin) continue;
      auto [lo, hi] = farey_parents(f);
      line(svg, m, u_of(f), f, u_of(lo), lo, thin);
      line(svg, m, u_of(f), f, u_of(hi), hi, thin);
      line(svg, m, u_of(f), f, Fraction(1), f, thin);  // horizontal edge
    }
  }
  svg += "</g>\n";

  // Axis marks.
  svg += "<g id=\"axis\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#404040\">\n";
  for (long u = -1; u <= 1; ++u) {
    svg += "<text x=\"" + num(m.x(Fraction(u))) + "\" y=\"" + num(m.height - legend_h + 14.0) +
           "\" text-anchor=\"middle\">u=" + std::to_string(u) + "</text>\n";
  }
  svg += "</g>\n";

  // Candidate systems, one group per simplified slope.
  for (std::size_t i = 0; i < rep.simplified.size(); ++i) {
    const EvaluatedCandidate& ec = rep.simplified[i];
    const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
    std::string dash;
    switch (ec.system.kind) {
      case SurfaceType::I: dash = ""; break;
      case SurfaceType::II: dash = " stroke-dasharray=\"7,3\""; break;
      case SurfaceType::III: dash = " stroke-dasharray=\"2,3\""; break;
    }
    svg += "<g class=\"candidate\" data-slope=\"" + ec.inv.slope.str() + "\" data-type=\"" +
           surface_type_name(ec.system.kind) + "\" stroke=\"" + std::string(color) +
           "\" fill=\"none\" stroke-width=\"1.8\"" + dash + ">\n";
    for (const Edgepath& p : ec.system.paths) {
      PathPoints pts = candidate_path_points(ec.system, p);
      if (pts.constant) {
        svg += "<circle cx=\"" + num(m.x(pts.pts[0].first)) + "\" cy=\"" +
               num(m.y(pts.pts[0].second)) + "\" r=\"3.5\" fill=\"" + std::string(color) +
               "\" stroke=\"none\"/>\n";
        continue;
      }
      svg += "<polyline points=\"";
      for (std::size_t j = 0; j < pts.pts.size(); ++j) {
        if (j) svg += " ";
        svg += num(m.x(pts.pts[j].first)) + "," + num(m.y(pts.pts[j].second));
      }
      svg += "\"/>\n";
    }
    svg += "</g>\n";
  }

  // Legend keyed to slopes.
  svg += "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"13\">\n";
  double ly = m.height - legend_h + 34.0;
  svg += "<text x=\"" + num(kMargin) + "\" y=\"" + num(ly - 18.0) + "\" fill=\"#000\">" +
         rep.knot.str() + " simplified candidates</text>\n";
  for (std::size_t i = 0; i < rep.simplified.size(); ++i) {
    const EvaluatedCandidate& ec = rep.simplified[i];
    const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
    svg += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(ly - 4.0) + "\" x2=\"" +
           num(kMargin + 28.0) + "\" y2=\"" + num(ly - 4.0) + "\" stroke=\"" +
           std::string(color) + "\" stroke-width=\"3\"/>\n";
    svg += "<text x=\"" + num(kMargin + 36.0) + "\" y=\"" + num(ly) + "\" fill=\"#000\">R = " +
           ec.inv.slope.str() + "  (type " + surface_type_name(ec.system.kind) + ", -chi/#s = " +
           ec.inv.chi_over_s.str() + ")</text>\n";
    ly += 18.0;
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace mks
