#include "puzzle/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace puzzle {

namespace {

const double kH = std::sqrt(3.0) / 2.0;
const double kMargin = 0.6;  // in units

struct Canvas {
    const BoundarySpec& b;
    const RenderStyle& st;

    double x(double a, double c) const { return st.unit * (kMargin + a + c / 2.0); }
    double y(double, double c) const { return st.unit * (kMargin + kH * (b.N - c)); }
    double width() const { return st.unit * (2 * kMargin + b.N); }
    double height() const { return st.unit * (2 * kMargin + kH * b.N); }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string point(const Canvas& cv, std::array<int, 2> p) {
    return num(cv.x(p[0], p[1])) + "," + num(cv.y(p[0], p[1]));
}


std::string outline(const Canvas& cv) {
    std::vector<std::array<int, 2>> pts;
    for (int s = 0; s < 6; ++s) {
        auto p = side_start(cv.b, s);
        if (pts.empty() || pts.back() != p) pts.push_back(p);
    }
    std::string d;
    for (size_t k = 0; k < pts.size(); ++k) d += (k ? " L" : "M") + point(cv, pts[k]);
    return "  <path class=\"outline\" d=\"" + d + " Z\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
}

// Label placed at the edge midpoint, nudged toward the given interior point.
std::string edge_text(const Canvas& cv, const EdgeInfo& e, const std::string& text, double cx, double cy) {
    double mx = (cv.x(e.a[0], e.a[1]) + cv.x(e.b[0], e.b[1])) / 2;
    double my = (cv.y(e.a[0], e.a[1]) + cv.y(e.b[0], e.b[1])) / 2;
    double tx = mx + 0.22 * (cx - mx), ty = my + 0.22 * (cy - my);
    return "  <text x=\"" + num(tx) + "\" y=\"" + num(ty) + "\" font-size=\"" + num(cv.st.unit * 0.24) +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\">" + text + "</text>\n";
}

std::string header(const Canvas& cv) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           num(cv.width()) + "\" height=\"" + num(cv.height()) + "\" viewBox=\"0 0 " + num(cv.width()) + " " +
           num(cv.height()) + "\" font-family=\"sans-serif\">\n";
}

}  // namespace

std::string piece_class(const Piece& p) {
    if (p.shape == Shape::Rhombus) return "eqvt";
    if (p.tag == WeightTag::SignMinusOne) return "k";
    bool zero = true, one = true;
    for (int s = 0; s < 3; ++s) {
        zero = zero && p.labels[static_cast<size_t>(s)] == Label::Zero;
        one = one && p.labels[static_cast<size_t>(s)] == Label::One;
    }
    return zero ? "zero" : (one ? "one" : "ten");
}

std::string render_svg(const BoundarySpec& b, const RenderStyle& style) {
    validate(b);
    Canvas cv{b, style};
    std::string out = header(cv);
    out += outline(cv);
    if (style.labels && b.N > 0) {
        Lattice lat = build_lattice(b);
        double cx = cv.x(b.N / 3.0, b.N / 3.0), cy = cv.y(b.N / 3.0, b.N / 3.0);
        for (int s = 0; s < 6; ++s)
            for (int e : lat.side_edges[static_cast<size_t>(s)]) {
                const EdgeInfo& ei = lat.edges[static_cast<size_t>(e)];
                out += edge_text(cv, ei, ei.kind == EdgeKind::Fixed ? label_text(ei.label) : "*", cx, cy);
            }
    }
    out += "</svg>\n";
    return out;
}

std::string render_svg(const BoundarySpec& b, const Filling& f, PieceSet set, const RenderStyle& style) {
    validate(b);
    Canvas cv{b, style};
    Lattice lat = build_lattice(b);
    auto cat = catalog(set);
    std::string out = header(cv);
    std::string texts;
    for (const auto& pl : f.placements) {
        const Piece& p = cat.at(static_cast<size_t>(pl.piece));
        std::vector<std::array<int, 2>> vs;
        std::vector<std::pair<int, Label>> edges;  // lattice edge and its label
        int c = lat.cell_index(pl.cell);
        if (p.shape == Shape::Rhombus) {
            const int r = pl.cell.r, i = pl.cell.i, n = b.N;
            vs = {{i - 1, n - r + 1}, {i, n - r}, {i, n - r - 1}, {i - 1, n - r}};
            int d = lat.down_index(r + 1, i);
            if (c >= 0 && d >= 0) {
                const auto& us = lat.cell_edges[static_cast<size_t>(c)];
                const auto& ds = lat.cell_edges[static_cast<size_t>(d)];
                edges = {{us[Rising], p.labels[NW]}, {us[Falling], p.labels[NE]}, {ds[Rising], p.labels[SE]},
                         {ds[Falling], p.labels[SW]}};
            }
        } else {
            auto v = cell_vertices(pl.cell, b.N);
            vs.assign(v.begin(), v.end());
            if (c >= 0)
                for (int s = 0; s < 3; ++s)
                    edges.emplace_back(lat.cell_edges[static_cast<size_t>(c)][static_cast<size_t>(s)], p.labels[static_cast<size_t>(s)]);
        }
        std::string pts;
        double cx = 0, cy = 0;
        for (const auto& v : vs) {
            pts += (pts.empty() ? "" : " ") + point(cv, v);
            cx += cv.x(v[0], v[1]) / static_cast<double>(vs.size());
            cy += cv.y(v[0], v[1]) / static_cast<double>(vs.size());
        }
        std::string cls = piece_class(p);
        auto colour = style.palette.count(cls) ? style.palette.at(cls) : std::string("#999999");
        out += "  <polygon class=\"" + cls + "\" data-cell=\"" + cell_text(pl.cell) + "\" points=\"" + pts +
               "\" fill=\"" + colour + "\" stroke=\"#000\" stroke-width=\"1\"/>\n";
        if (style.labels)
            for (const auto& [e, l] : edges) texts += edge_text(cv, lat.edges[static_cast<size_t>(e)], label_text(l), cx, cy);
    }
    out += outline(cv);
    out += texts;
    out += "</svg>\n";
    return out;
}

}  // namespace puzzle
