#include "ks/svg_render.hpp"

#include <cmath>
#include <sstream>

namespace ks {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

struct Canvas {
  const StyleConfig& st;
  std::ostringstream out;

  explicit Canvas(const StyleConfig& s) : st(s) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << st.pixels
        << "\" height=\"" << st.pixels << "\" viewBox=\"0 0 " << st.pixels << " "
        << st.pixels << "\">\n";
    out << "<rect width=\"" << st.pixels << "\" height=\"" << st.pixels
        << "\" fill=\"#ffffff\"/>\n";
  }

  double sx(double x) const { return (x + st.view_half) / (2 * st.view_half) * st.pixels; }
  double sy(double y) const { return (st.view_half - y) / (2 * st.view_half) * st.pixels; }
  double sr(double r) const { return r / (2 * st.view_half) * st.pixels; }

  static std::string color(int idx) {
    // fixed palette walk in hue; emitted as hex for SVG 1.1
    double h = std::fmod(idx * 47.0, 360.0) / 60.0;
    double x = 1.0 - std::abs(std::fmod(h, 2.0) - 1.0);
    double rgb[3] = {0, 0, 0};
    int sector = static_cast<int>(h) % 6;
    const double c = 0.85;
    switch (sector) {
      case 0: rgb[0] = c; rgb[1] = c * x; break;
      case 1: rgb[0] = c * x; rgb[1] = c; break;
      case 2: rgb[1] = c; rgb[2] = c * x; break;
      case 3: rgb[1] = c * x; rgb[2] = c; break;
      case 4: rgb[0] = c * x; rgb[2] = c; break;
      default: rgb[0] = c; rgb[2] = c * x; break;
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>(rgb[0] * 255),
                  static_cast<int>(rgb[1] * 255), static_cast<int>(rgb[2] * 255));
    return buf;
  }

  void circle(const OrientedCircle& c, const std::string& stroke,
              const std::string& fill) {
    if (c.is_line(1e-9)) {
      // line {2 Re(b zbar) + d = 0}: direction i*b, point -d*b/(2|b|^2)
      cx b = c.b;
      cx p0 = -c.d * b / (2.0 * std::norm(b));
      cx dir = cx(0, 1) * b / std::abs(b);
      double L = 4.0 * st.view_half;
      cx p1 = p0 - L * dir, p2 = p0 + L * dir;
      out << "<line x1=\"" << sx(p1.real()) << "\" y1=\"" << sy(p1.imag())
          << "\" x2=\"" << sx(p2.real()) << "\" y2=\"" << sy(p2.imag())
          << "\" stroke=\"" << stroke << "\" stroke-width=\"" << st.stroke
          << "\"/>\n";
      return;
    }
    cx ctr = c.center();
    out << "<circle cx=\"" << sx(ctr.real()) << "\" cy=\"" << sy(ctr.imag())
        << "\" r=\"" << sr(c.radius()) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"" << st.stroke << "\" fill=\"" << fill << "\"/>\n";
  }

  void arc(const OrientedCircle& parent, double start, double length,
           const std::string& stroke, double width) {
    MoebiusMap chart = circle_chart(parent);
    int steps = std::max(8, static_cast<int>(length / 0.05));
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
        << width << "\" points=\"";
    for (int i = 0; i <= steps; ++i) {
      SpherePoint p = chart_point(chart, norm_angle(start + length * i / steps));
      if (p.is_infinity(1e-9)) continue;
      cx z = p.affine();
      out << sx(z.real()) << "," << sy(z.imag()) << " ";
    }
    out << "\"/>\n";
  }

  void dot(const SpherePoint& p, const std::string& fill) {
    if (p.is_infinity(1e-9)) return;
    cx z = p.affine();
    out << "<circle cx=\"" << sx(z.real()) << "\" cy=\"" << sy(z.imag())
        << "\" r=\"1.5\" fill=\"" << fill << "\"/>\n";
  }

  std::string finish() {
    out << "</svg>\n";
    return out.str();
  }
};

}  // namespace

std::string render_svg(const json& artifact, const StyleConfig& style) {
  if (!artifact.is_object() || !artifact.contains("kind"))
    fail(errc::unknown_artifact_kind, "artifact lacks a kind tag");
  std::string kind = artifact["kind"].get<std::string>();
  Canvas cv(style);
  if (kind == "disk-family") {
    DiskFamily f = family_from_json(artifact);
    for (size_t i = 0; i < f.size(); ++i)
      cv.circle(f.disks[i], "#333333", Canvas::color(static_cast<int>(i % 12)));
  } else if (kind == "limit-set") {
    LimitSetApprox lam = limit_set_from_json(artifact);
    for (const auto& p : lam.points) cv.dot(p, "#1f3a93");
  } else if (kind == "gap-system") {
    LabeledGapSystem gs = gaps_from_json(artifact);
    cv.circle(gs.circle, "#bbbbbb", "none");
    for (const auto& a : gs.arcs)
      cv.arc(gs.circle, a.start, a.length, Canvas::color(a.label), 3.0);
  } else if (kind == "cantor-approx") {
    CantorApprox ca = cantor_from_json(artifact);
    cv.circle(ca.circle, "#dddddd", "none");
    for (const auto& b : ca.bridges) {
      MoebiusMap chart = ca.chart;
      int steps = std::max(8, static_cast<int>(b.length / 0.05));
      cv.out << "<polyline fill=\"none\" stroke=\"" << Canvas::color(b.type)
             << "\" stroke-width=\"2.5\" points=\"";
      for (int i = 0; i <= steps; ++i) {
        SpherePoint p = chart_point(chart, norm_angle(b.start + b.length * i / steps));
        if (p.is_infinity(1e-9)) continue;
        cx z = p.affine();
        cv.out << cv.sx(z.real()) << "," << cv.sy(z.imag()) << " ";
      }
      cv.out << "\"/>\n";
    }
    for (auto [s, len] : ca.residual) {
      if (len >= kTwoPi) {
        cv.circle(ca.circle, "#111111", "none");
        continue;
      }
      MoebiusMap chart = ca.chart;
      int steps = std::max(4, static_cast<int>(len / 0.05));
      cv.out << "<polyline fill=\"none\" stroke=\"#111111\" stroke-width=\"4\" points=\"";
      for (int i = 0; i <= steps; ++i) {
        SpherePoint p = chart_point(chart, norm_angle(s + len * i / steps));
        if (p.is_infinity(1e-9)) continue;
        cx z = p.affine();
        cv.out << cv.sx(z.real()) << "," << cv.sy(z.imag()) << " ";
      }
      cv.out << "\"/>\n";
    }
  } else if (kind == "orbit") {
    for (const auto& c : artifact.at("circles"))
      cv.circle(circle_from_json(c), "#1f3a93", "none");
  } else {
    fail(errc::unknown_artifact_kind, "no renderer for kind '" + kind + "'");
  }
  return cv.finish();
}

}  // namespace ks
