#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace illum {

// Figure input in plain doubles; rendering is presentation only, verdicts
// never depend on it.
struct SvgScene {
    std::vector<std::pair<double, double>> body;
    bool has_circle = false;
    double cx = 0, cy = 0, r = 0;  // circumcircle
    std::vector<std::vector<std::pair<double, double>>> translates;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v + 0.0);  // +0.0 normalizes -0
    return buf;
}

inline std::string points_attr(const std::vector<std::pair<double, double>>& pts) {
    std::string out;
    for (const auto& p : pts) {
        if (!out.empty()) out += ' ';
        out += fmt(p.first) + ',' + fmt(-p.second);  // y grows downward in SVG
    }
    return out;
}

}  // namespace detail

// Deterministic byte-for-byte for fixed input: body solid, circumcircle
// dotted, translates densely dotted.
inline std::string render_svg(const SvgScene& scene) {
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            lo_x = hi_x = x;
            lo_y = hi_y = y;
            first = false;
            return;
        }
        if (x < lo_x) lo_x = x;
        if (x > hi_x) hi_x = x;
        if (y < lo_y) lo_y = y;
        if (y > hi_y) hi_y = y;
    };
    for (const auto& p : scene.body) grow(p.first, -p.second);
    if (scene.has_circle) {
        grow(scene.cx - scene.r, -scene.cy - scene.r);
        grow(scene.cx + scene.r, -scene.cy + scene.r);
    }
    for (const auto& t : scene.translates)
        for (const auto& p : t) grow(p.first, -p.second);
    double mx = (hi_x - lo_x) * 0.05 + 0.1, my = (hi_y - lo_y) * 0.05 + 0.1;
    lo_x -= mx;
    hi_x += mx;
    lo_y -= my;
    hi_y += my;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + detail::fmt(lo_x) + " " +
           detail::fmt(lo_y) + " " + detail::fmt(hi_x - lo_x) + " " + detail::fmt(hi_y - lo_y) +
           "\">\n";
    double sw = (hi_x - lo_x + hi_y - lo_y) / 400.0;
    std::string swa = detail::fmt(sw);
    for (const auto& t : scene.translates)
        out += "  <polygon points=\"" + detail::points_attr(t) +
               "\" fill=\"none\" stroke=\"#666666\" stroke-width=\"" + swa +
               "\" stroke-dasharray=\"" + detail::fmt(sw) + " " + detail::fmt(sw) + "\"/>\n";
    if (scene.has_circle)
        out += "  <circle cx=\"" + detail::fmt(scene.cx) + "\" cy=\"" + detail::fmt(-scene.cy) +
               "\" r=\"" + detail::fmt(scene.r) +
               "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" + swa +
               "\" stroke-dasharray=\"" + detail::fmt(3 * sw) + " " + detail::fmt(3 * sw) +
               "\"/>\n";
    if (!scene.body.empty())
        out += "  <polygon points=\"" + detail::points_attr(scene.body) +
               "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" + detail::fmt(1.5 * sw) +
               "\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace illum
