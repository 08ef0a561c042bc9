#include "puzzle/completion.hpp"

#include <algorithm>
#include <set>

namespace puzzle {

namespace {

void require_supported(PieceSet set) {
    if (set.k_nabla) throw UnsupportedPieceSet("completion is not defined with the nabla piece");
}

int rank(const CellId& c) { return c.r * 4096 + 2 * c.i + (c.shape == Shape::Down ? 1 : 0); }

Filling place_corner(const Filling& local, int n, int N, int dx, int dy) {
    Filling out;
    for (const auto& pl : local.placements) {
        auto v = cell_vertices(pl.cell, n);
        for (auto& p : v) p = {p[0] + dx, p[1] + dy};
        out.placements.push_back({cell_from_vertices(v, N), pl.piece});
    }
    return out;
}

std::vector<int> corner_cells(const Lattice& tri, const CompletionMap& cm) {
    std::vector<int> cells;
    for (const auto& ac : cm.corners)
        for (const auto& pl : ac.placed.placements) cells.push_back(tri.cell_index(pl.cell));
    return cells;
}

}  // namespace

CompletionMap complete_to_triangle(const BoundarySpec& b, PieceSet set) {
    require_supported(set);
    for (bool f : b.free)
        if (f) throw InfeasibleShape("completion needs every side labeled");
    const auto& L = b.labels;
    const BinaryString &al = L[SideSW], &be = L[SideNW], &ga = L[SideN], &de = L[SideNE], &ep = L[SideSE],
                       &ze = L[SideS];
    CompletionMap cm;
    cm.polygon = b;
    cm.set = set;
    cm.triangle = triangle_boundary(sorted(al) + be + ga, sorted(ga) + de + sorted(ep), ep + ze + al);
    const int N = b.N;
    struct Spec {
        Corner corner;
        int size;
        BinaryString nw, ne, s;
        int dx, dy;
    };
    const Spec specs[3] = {
        {Corner::BottomLeft, b.cut_bl, sorted(al), reversed(al), al, 0, 0},
        {Corner::Top, b.cut_top, ga, sorted(ga), reversed(ga), 0, N - b.cut_top},
        {Corner::BottomRight, b.cut_br, reversed(ep), sorted(ep), ep, N - b.cut_br, 0},
    };
    for (const auto& sp : specs) {
        if (sp.size == 0) continue;
        AttachedCorner ac;
        ac.corner = sp.corner;
        ac.local = triangle_boundary(sp.nw, sp.ne, sp.s);
        auto fills = enumerate(ac.local, set);
        if (fills.size() != 1)
            throw InfeasibleCorner("corner " + boundary_text(ac.local) + " has " + std::to_string(fills.size()) +
                                   " fillings");
        ac.local_filling = fills.front();
        ac.placed = place_corner(ac.local_filling, sp.size, N, sp.dx, sp.dy);
        cm.corners.push_back(std::move(ac));
    }
    return cm;
}

BoundarySpec identity_boundary(const BinaryString& lambda, IdentityOrientation o, bool free_third) {
    BoundarySpec b;
    if (o == IdentityOrientation::TopCorner) {
        b = triangle_boundary(lambda, sorted(lambda), reversed(lambda));
        if (free_third) b.free[SideS] = true;
    } else {
        b = triangle_boundary(sorted(lambda), reversed(lambda), lambda);
        if (free_third) b.free[SideNE] = true;
    }
    return b;
}

Filling identity_filling(const BinaryString& lambda, IdentityOrientation o, PieceSet set) {
    require_supported(set);
    auto fills = enumerate(identity_boundary(lambda, o, false), set);
    if (fills.size() != 1)
        throw InfeasibleCorner("identity boundary for " + display(lambda) + " has " + std::to_string(fills.size()) +
                               " fillings");
    return fills.front();
}

Filling glue(const Filling& polygon_filling, const CompletionMap& cm) {
    Filling out = polygon_filling;
    for (const auto& ac : cm.corners)
        out.placements.insert(out.placements.end(), ac.placed.placements.begin(), ac.placed.placements.end());
    std::sort(out.placements.begin(), out.placements.end(),
              [](const Placement& a, const Placement& b) { return rank(a.cell) < rank(b.cell); });
    return out;
}

Filling truncate(const Filling& triangle_filling, const CompletionMap& cm) {
    Lattice tri = build_lattice(cm.triangle);
    auto cat = catalog(cm.set);
    std::set<int> corner;
    for (int c : corner_cells(tri, cm)) corner.insert(c);
    std::vector<Placement> expected;
    for (const auto& ac : cm.corners)
        expected.insert(expected.end(), ac.placed.placements.begin(), ac.placed.placements.end());
    std::sort(expected.begin(), expected.end(),
              [](const Placement& a, const Placement& b) { return rank(a.cell) < rank(b.cell); });
    Filling out;
    std::vector<Placement> seen;
    for (const auto& pl : triangle_filling.placements) {
        int c = tri.cell_index(pl.cell);
        bool in_corner = corner.count(c) > 0;
        if (cat.at(static_cast<size_t>(pl.piece)).shape == Shape::Rhombus) {
            int d = tri.down_index(pl.cell.r + 1, pl.cell.i);
            if (in_corner || corner.count(d)) throw CornerMismatch("rhombus reaches into a corner at " + cell_text(pl.cell));
        }
        if (in_corner)
            seen.push_back(pl);
        else
            out.placements.push_back(pl);
    }
    if (seen != expected) throw CornerMismatch("corner pieces differ from the identity fillings");
    return out;
}

std::optional<PentagonFill> unique_pentagon_fill(int a0, int a1, int c0, int c1, PieceSet set) {
    BoundarySpec b = lemma_pentagon_boundary(a0, a1, c0, c1);
    auto fills = enumerate(b, set);
    if (fills.empty()) return std::nullopt;
    if (fills.size() > 1)
        throw InfeasibleCorner("lemma pentagon has " + std::to_string(fills.size()) + " fillings");
    auto sides = side_labels(b, fills.front(), set);
    return PentagonFill{fills.front(), sides[SideSE], sides[SideS], sides[SideSW]};
}

}  // namespace puzzle
