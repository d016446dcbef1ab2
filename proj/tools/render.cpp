#include "render.hpp"

#include <cstdio>
#include <optional>
#include <sstream>

#include "probekit/errors.hpp"

namespace probekit::render {

namespace {

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct HalfPlane {
  Point a;  // a . x + b >= 0
  Scalar b;
  Scalar eval(const Point& x) const { return a[0] * x[0] + a[1] * x[1] + b; }
};

std::vector<HalfPlane> box_planes(const Window& w) {
  return {{{1, 0}, -w.lo[0]}, {{-1, 0}, w.hi[0]}, {{0, 1}, -w.lo[1]}, {{0, -1}, w.hi[1]}};
}

HalfPlane facet_plane(const Facet& f) { return {to_point(f.normal), f.offset}; }

// Sutherland-Hodgman against one half-plane.
std::vector<Point> clip_polygon(const std::vector<Point>& poly, const HalfPlane& h) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    Scalar fp = h.eval(p), fq = h.eval(q);
    if (fp.sign() >= 0) out.push_back(p);
    if ((fp.sign() > 0 && fq.sign() < 0) || (fp.sign() < 0 && fq.sign() > 0)) {
      Scalar t = fp / (fp - fq);
      out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
    }
  }
  return out;
}

// Portion of p + s u, s in [lo, hi], inside every half-plane.
std::optional<std::pair<Scalar, Scalar>> clip_line(const Point& p, const Point& u, std::optional<Scalar> lo, std::optional<Scalar> hi,
                                                   const std::vector<HalfPlane>& planes) {
  for (const auto& h : planes) {
    Scalar c = h.a[0] * u[0] + h.a[1] * u[1];
    Scalar v = h.eval(p);
    if (c.is_zero()) {
      if (v.sign() < 0) return std::nullopt;
      continue;
    }
    Scalar s = -v / c;
    if (c.sign() > 0) {
      if (!lo || s > *lo) lo = s;
    } else {
      if (!hi || s < *hi) hi = s;
    }
  }
  if (!lo || !hi || !(*lo < *hi)) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

struct Frame {
  Window box;
  double w, h, margin = 20;
  double sx(const Scalar& x) const { return margin + (x - box.lo[0]).to_double() / (box.hi[0] - box.lo[0]).to_double() * w; }
  double sy(const Scalar& y) const { return margin + (box.hi[1] - y).to_double() / (box.hi[1] - box.lo[1]).to_double() * h; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Polytope& P, const RenderSpec& spec) {
  if (P.dim() != 2) fail(ErrorKind::NotPlanar, "rendering needs a planar polytope, got dimension " + std::to_string(P.dim()));
  const Window& box = spec.box;
  if (box.lo.size() != 2 || box.hi.size() != 2 || !(box.lo[0] < box.hi[0]) || !(box.lo[1] < box.hi[1]))
    fail(ErrorKind::ValidationError, "render window must be a nondegenerate planar box");

  Frame fr{box, double(spec.width), 0};
  double aspect = (box.hi[1] - box.lo[1]).to_double() / (box.hi[0] - box.lo[0]).to_double();
  fr.h = fr.w * aspect;
  auto bp = box_planes(box);

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(fr.w + 2 * fr.margin) << "\" height=\"" << num(fr.h + 2 * fr.margin)
    << "\" viewBox=\"0 0 " << num(fr.w + 2 * fr.margin) << " " << num(fr.h + 2 * fr.margin) << "\">\n";
  o << "  <rect class=\"window\" x=\"" << num(fr.margin) << "\" y=\"" << num(fr.margin) << "\" width=\"" << num(fr.w) << "\" height=\"" << num(fr.h)
    << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";

  std::vector<Point> poly = {{box.lo[0], box.lo[1]}, {box.hi[0], box.lo[1]}, {box.hi[0], box.hi[1]}, {box.lo[0], box.hi[1]}};
  for (const auto& f : P.facets()) {
    poly = clip_polygon(poly, facet_plane(f));
    if (poly.empty()) break;
  }
  if (!poly.empty()) {
    o << "  <polygon class=\"polytope\" fill=\"#eef3fb\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) o << (i ? " " : "") << num(fr.sx(poly[i][0])) << "," << num(fr.sy(poly[i][1]));
    o << "\"/>\n";
  }

  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto& f = P.facet(i);
    const Scalar a = Scalar(f.normal[0]), b = Scalar(f.normal[1]);
    // a point on a x + b y + offset = 0 and the direction along it
    Point p = a.is_zero() ? Point{0, -f.offset / b} : Point{-f.offset / a, 0};
    Point u = {-b, a};
    std::vector<HalfPlane> planes = bp;
    for (std::size_t j = 0; j < P.size(); ++j)
      if (j != i) planes.push_back(facet_plane(P.facet(j)));
    auto seg = clip_line(p, u, std::nullopt, std::nullopt, planes);
    if (!seg) continue;
    Point s = {p[0] + seg->first * u[0], p[1] + seg->first * u[1]};
    Point e = {p[0] + seg->second * u[0], p[1] + seg->second * u[1]};
    o << "  <line class=\"facet\" data-facet=\"" << i << "\" x1=\"" << num(fr.sx(s[0])) << "\" y1=\"" << num(fr.sy(s[1])) << "\" x2=\"" << num(fr.sx(e[0]))
      << "\" y2=\"" << num(fr.sy(e[1])) << "\" stroke=\"#1b2a49\" stroke-width=\"2\"/>\n";
  }

  for (const auto& pr : spec.probes) {
    Point u = to_point(pr.direction);
    auto seg = clip_line(pr.entry_point, u, Scalar(0), pr.length, bp);
    if (!seg) continue;
    Point s = pr.at(seg->first), e = pr.at(seg->second);
    o << "  <line class=\"probe\" data-direction=\"" << escape(to_string(pr.direction)) << "\" x1=\"" << num(fr.sx(s[0])) << "\" y1=\"" << num(fr.sy(s[1]))
      << "\" x2=\"" << num(fr.sx(e[0])) << "\" y2=\"" << num(fr.sy(e[1])) << "\" stroke=\"#7f7f7f\" stroke-width=\"1\"/>\n";
  }

  for (std::size_t c = 0; c < spec.components.size(); ++c) {
    const char* colour = kPalette[c % std::size(kPalette)];
    for (const auto& x : spec.components[c]) {
      if (!box.contains(x)) continue;
      o << "  <circle class=\"orbit\" data-component=\"" << c << "\" cx=\"" << num(fr.sx(x[0])) << "\" cy=\"" << num(fr.sy(x[1])) << "\" r=\"4\" fill=\""
        << colour << "\"/>\n";
      if (spec.labels)
        o << "  <text x=\"" << num(fr.sx(x[0]) + 5) << "\" y=\"" << num(fr.sy(x[1]) - 5) << "\" font-size=\"10\">" << escape(to_string(x)) << "</text>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace probekit::render
