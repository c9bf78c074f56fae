#pragma once

// SVG figures of staircases and Newton polygons on the integer lattice:
// fixed 24-px cells, horizontal axis a, vertical axis b, shaded hereditary
// region, corner dots, and optionally the convex hull overlay.

#include "polygon.hpp"
#include "staircase.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>

namespace charone {

namespace svg_detail {

struct Frame {
    long min_a, max_a, min_b, max_b;
    static constexpr long cell = 24;
    static constexpr long margin = 36;

    double x(double a) const { return margin + (a - double(min_a)) * cell; }
    double y(double b) const { return margin + (double(max_b) - b) * cell; }
    long width() const { return 2 * margin + (max_a - min_a) * cell; }
    long height() const { return 2 * margin + (max_b - min_b) * cell; }
};

inline Frame frame_for(const std::vector<Corner>& pts) {
    Frame f{0, 4, 0, 4};
    if (!pts.empty()) {
        f.min_a = f.max_a = pts[0].a.convert_to<long>();
        f.min_b = f.max_b = pts[0].b.convert_to<long>();
        for (const auto& c : pts) {
            f.min_a = std::min(f.min_a, c.a.convert_to<long>());
            f.max_a = std::max(f.max_a, c.a.convert_to<long>());
            f.min_b = std::min(f.min_b, c.b.convert_to<long>());
            f.max_b = std::max(f.max_b, c.b.convert_to<long>());
        }
    }
    f.min_a -= 1; f.min_b -= 1; f.max_a += 2; f.max_b += 2;
    return f;
}

}  // namespace svg_detail

// staircase region, with the hull overlay drawn when given
inline std::string render_svg(const Staircase& s, const NewtonPolygon* hull = nullptr) {
    using svg_detail::Frame;
    const auto& cs = s.corners();
    Frame f = svg_detail::frame_for(cs);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width() << "\" height=\""
       << f.height() << "\">\n";
    // lattice
    for (long a = f.min_a; a <= f.max_a; ++a)
        for (long b = f.min_b; b <= f.max_b; ++b)
            os << "<circle cx=\"" << f.x(double(a)) << "\" cy=\"" << f.y(double(b))
               << "\" r=\"1.4\" fill=\"#c8c8c8\"/>\n";
    // shaded hereditary region, clipped to the frame
    if (!cs.empty()) {
        os << "<path d=\"";
        os << "M " << f.x(cs.front().a.convert_to<double>()) << " " << f.y(double(f.max_b));
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const double a = cs[i].a.convert_to<double>();
            const double b = cs[i].b.convert_to<double>();
            os << " L " << f.x(a) << " " << f.y(b);
            const double next_a =
                i + 1 < cs.size() ? cs[i + 1].a.convert_to<double>() : double(f.max_a);
            os << " L " << f.x(next_a) << " " << f.y(b);
        }
        os << " L " << f.x(double(f.max_a)) << " " << f.y(double(f.max_b));
        os << " Z\" fill=\"#9ecae1\" fill-opacity=\"0.45\" stroke=\"#3182bd\" stroke-width=\"1.5\"/>\n";
        for (const auto& c : cs)
            os << "<circle cx=\"" << f.x(c.a.convert_to<double>()) << "\" cy=\""
               << f.y(c.b.convert_to<double>()) << "\" r=\"3.4\" fill=\"#08519c\"/>\n";
    }
    if (hull && !hull->is_zero()) {
        const auto& es = hull->extremes();
        os << "<polyline points=\"";
        for (const auto& c : es)
            os << f.x(c.a.convert_to<double>()) << "," << f.y(c.b.convert_to<double>()) << " ";
        os << "\" fill=\"none\" stroke=\"#e6550d\" stroke-width=\"2\" stroke-dasharray=\"6 3\"/>\n";
        for (const auto& c : es)
            os << "<circle cx=\"" << f.x(c.a.convert_to<double>()) << "\" cy=\""
               << f.y(c.b.convert_to<double>()) << "\" r=\"3.4\" fill=\"#e6550d\"/>\n";
    }
    // axes
    os << "<line x1=\"" << f.x(double(f.min_a)) << "\" y1=\"" << f.y(0.0) << "\" x2=\""
       << f.x(double(f.max_a)) << "\" y2=\"" << f.y(0.0)
       << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << f.x(0.0) << "\" y1=\"" << f.y(double(f.min_b)) << "\" x2=\"" << f.x(0.0)
       << "\" y2=\"" << f.y(double(f.max_b)) << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << f.x(double(f.max_a)) - 12 << "\" y=\"" << f.y(0.0) + 16
       << "\" font-size=\"13\" font-family=\"sans-serif\">a</text>\n";
    os << "<text x=\"" << f.x(0.0) - 16 << "\" y=\"" << f.y(double(f.max_b)) + 12
       << "\" font-size=\"13\" font-family=\"sans-serif\">b</text>\n";
    os << "</svg>\n";
    return os.str();
}

inline std::string render_svg(const NewtonPolygon& p) {
    // draw the polygon as its own staircase-like region plus overlay
    Staircase s = Staircase::from_points(p.extremes());
    return render_svg(s, &p);
}

}  // namespace charone
