#include "fanforge/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fanforge {

namespace {

struct Point
{
    double x, y;
};

constexpr double kSize = 480.0;
constexpr double kMargin = 40.0;

RatVector barycentric(const IntVector& y)
{
    Integer s = 0;
    for (const auto& c : y)
        s += c;
    RatVector b;
    for (const auto& c : y)
        b.emplace_back(c, s);
    for (auto& c : b)
        c.canonicalize();
    return b;
}

// e1 bottom left, e2 bottom right, e3 top
Point to_screen(const RatVector& b)
{
    double b2 = b[1].get_d(), b3 = b[2].get_d();
    double x = b2 + b3 / 2.0;
    double y = b3 * std::sqrt(3.0) / 2.0;
    return {kMargin + x * kSize, kMargin + (std::sqrt(3.0) / 2.0 - y) * kSize};
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::vector<Point> polygon(const Cone& c)
{
    std::vector<Point> pts;
    for (const auto& r : c.rays())
        pts.push_back(to_screen(barycentric(r)));
    if (pts.size() < 3)
        return pts;
    Point mid{0, 0};
    for (auto p : pts) {
        mid.x += p.x / pts.size();
        mid.y += p.y / pts.size();
    }
    std::sort(pts.begin(), pts.end(), [&](Point a, Point b) {
        return std::atan2(a.y - mid.y, a.x - mid.x) < std::atan2(b.y - mid.y, b.x - mid.x);
    });
    return pts;
}

std::string points_attr(const std::vector<Point>& pts)
{
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i)
        s += (i ? " " : "") + fmt(pts[i].x) + "," + fmt(pts[i].y);
    return s;
}

Point centroid(const std::vector<Point>& pts)
{
    Point c{0, 0};
    for (auto p : pts) {
        c.x += p.x / pts.size();
        c.y += p.y / pts.size();
    }
    return c;
}

}  // namespace

SecondaryFanPlot plot_secondary_fan(const WeightMatrix& q, const std::vector<Fan>& fans)
{
    if (q.r() != 3)
        throw UnsupportedRank("plot: the simplex section needs r = 3, got r = " + std::to_string(q.r()));

    struct Entry
    {
        RatVector key;
        std::size_t fan;
        Cone nef;
    };
    std::vector<Entry> full;
    SecondaryFanPlot out;
    std::vector<std::pair<std::size_t, Cone>> rays;
    for (std::size_t k = 0; k < fans.size(); ++k) {
        Cone nef = nef_cone(fans[k], q);
        if (nef.dim() == 3)
            full.push_back({barycentric(nef.relative_interior_point()), k, nef});
        else if (nef.dim() == 1) {
            out.degenerate.push_back(k + 1);
            rays.emplace_back(k, nef);
        }
    }
    std::sort(full.begin(), full.end(), [](const Entry& a, const Entry& b) {
        return std::lexicographical_compare(a.key.begin(), a.key.end(), b.key.begin(), b.key.end());
    });

    const double h = std::sqrt(3.0) / 2.0 * kSize;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kSize + 2 * kMargin)
       << "\" height=\"" << fmt(h + 2 * kMargin) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    std::vector<Point> simplex{to_screen({1, 0, 0}), to_screen({0, 1, 0}), to_screen({0, 0, 1})};
    os << "<polygon points=\"" << points_attr(simplex) << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";

    auto eff = polygon(effective_cone(q));
    os << "<polygon id=\"effective\" points=\"" << points_attr(eff)
       << "\" fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"2\"/>\n";
    auto mov = polygon(movable_cone(q));
    os << "<polygon id=\"movable\" points=\"" << points_attr(mov)
       << "\" fill=\"#e3ecf7\" stroke=\"#3060a0\" stroke-width=\"2\"/>\n";

    for (std::size_t i = 0; i < full.size(); ++i) {
        auto pts = polygon(full[i].nef);
        out.chambers.push_back({i + 1, full[i].fan + 1});
        os << "<polygon class=\"chamber\" id=\"chamber" << i + 1 << "\" points=\"" << points_attr(pts)
           << "\" fill=\"none\" stroke=\"#404040\"/>\n";
        Point c = centroid(pts);
        os << "<text x=\"" << fmt(c.x) << "\" y=\"" << fmt(c.y + 4)
           << "\" font-size=\"12\" text-anchor=\"middle\">" << i + 1 << "</text>\n";
    }
    for (const auto& [k, nef] : rays) {
        Point p = to_screen(barycentric(nef.rays().front()));
        os << "<circle class=\"nef-ray\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
           << "\" r=\"4\" fill=\"#c03030\"><title>fan " << k + 1 << "</title></circle>\n";
    }
    for (std::size_t j = 0; j < q.m(); ++j) {
        Point p = to_screen(barycentric(q.column(j)));
        os << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"3\" fill=\"black\"/>\n";
        os << "<text x=\"" << fmt(p.x + 6) << "\" y=\"" << fmt(p.y - 6) << "\" font-size=\"12\">q" << j + 1
           << "</text>\n";
    }
    os << "</svg>\n";
    out.svg = os.str();
    return out;
}

}  // namespace fanforge
