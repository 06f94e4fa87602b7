#include "sigtqft/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace sigtqft::svg {

namespace {

struct Range {
  double lo = 0, hi = 1;
  double span() const { return hi - lo; }
};

Range fit(const std::vector<Point>& a, const std::vector<Point>& b, bool use_y) {
  Range r{std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};
  auto feed = [&](const std::vector<Point>& pts) {
    for (const auto& p : pts) {
      const double v = use_y ? p.y : p.x;
      r.lo = std::min(r.lo, v);
      r.hi = std::max(r.hi, v);
    }
  };
  feed(a);
  feed(b);
  if (!std::isfinite(r.lo)) return {0, 1};
  if (r.hi - r.lo < 1e-12) {
    r.lo -= 0.5;
    r.hi += 0.5;
  }
  const double pad = 0.05 * (r.hi - r.lo);
  return {r.lo - pad, r.hi + pad};
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

}  // namespace

void write_scatter(std::ostream& os, const ScatterSpec& spec) {
  const int w = spec.width, h = spec.height;
  const int ml = 70, mr = 20, mt = 40, mb = 50;  // margins
  const Range rx = fit(spec.dots, spec.curve, false);
  const Range ry = fit(spec.dots, spec.curve, true);
  auto X = [&](double x) { return ml + (x - rx.lo) / rx.span() * (w - ml - mr); };
  auto Y = [&](double y) { return h - mb - (y - ry.lo) / ry.span() * (h - mt - mb); };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
     << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  if (!spec.title.empty())
    os << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" "
       << "font-family=\"sans-serif\" font-size=\"16\">" << spec.title
       << "</text>\n";

  // axes
  os << "<line x1=\"" << ml << "\" y1=\"" << (h - mb) << "\" x2=\"" << (w - mr)
     << "\" y2=\"" << (h - mb) << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
     << (h - mb) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = rx.lo + rx.span() * i / 5;
    const double yv = ry.lo + ry.span() * i / 5;
    os << "<text x=\"" << X(xv) << "\" y=\"" << (h - mb + 18)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt(xv) << "</text>\n";
    os << "<text x=\"" << (ml - 6) << "\" y=\"" << (Y(yv) + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt(yv) << "</text>\n";
    os << "<line x1=\"" << X(xv) << "\" y1=\"" << (h - mb) << "\" x2=\"" << X(xv)
       << "\" y2=\"" << (h - mb + 4) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << (ml - 4) << "\" y1=\"" << Y(yv) << "\" x2=\"" << ml
       << "\" y2=\"" << Y(yv) << "\" stroke=\"black\"/>\n";
  }

  if (!spec.curve.empty()) {
    os << "<polyline fill=\"none\" stroke=\"green\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : spec.curve) os << X(p.x) << "," << Y(p.y) << " ";
    os << "\"/>\n";
  }
  for (const auto& p : spec.dots)
    os << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y)
       << "\" r=\"2.2\" fill=\"red\"/>\n";
  os << "</svg>\n";
}

}  // namespace sigtqft::svg
