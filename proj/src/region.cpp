#include "puzzle/region.hpp"

#include <algorithm>
#include <map>

namespace puzzle {

namespace {

std::int64_t cell_key(const CellId& c) {
    return (c.shape == Shape::Up ? 0 : 1) * 1000000LL + c.r * 1000LL + c.i;
}

std::int64_t point_key(int x, int y) { return (static_cast<std::int64_t>(x) + 100000) * 1000003LL + (y + 100000); }

}  // namespace

const char* side_name(int side) {
    static const char* names[6] = {"SW", "NW", "N", "NE", "SE", "S"};
    return names[((side % 6) + 6) % 6];
}

int BoundarySpec::side_length(int side) const {
    switch (side) {
        case SideSW: return cut_bl;
        case SideNW: return N - cut_bl - cut_top;
        case SideN: return cut_top;
        case SideNE: return N - cut_top - cut_br;
        case SideSE: return cut_br;
        default: return N - cut_br - cut_bl;
    }
}

void validate(const BoundarySpec& b) {
    if (b.N < 0 || b.cut_bl < 0 || b.cut_top < 0 || b.cut_br < 0)
        throw InfeasibleShape("negative size or cut");
    if (b.cut_bl + b.cut_top > b.N || b.cut_top + b.cut_br > b.N || b.cut_br + b.cut_bl > b.N)
        throw InfeasibleShape("corner cuts overlap");
    for (int s = 0; s < 6; ++s) {
        if (b.free[static_cast<size_t>(s)]) continue;
        const auto& lab = b.labels[static_cast<size_t>(s)];
        require_binary(lab);
        if (static_cast<int>(lab.size()) != b.side_length(s))
            throw LengthMismatch(std::string("side ") + side_name(s) + " has length " +
                                 std::to_string(lab.size()) + " but the shape needs " +
                                 std::to_string(b.side_length(s)));
    }
}

BoundarySpec from_sides(const std::array<BinaryString, 6>& sides) {
    std::array<int, 6> L{};
    for (size_t s = 0; s < 6; ++s) {
        require_binary(sides[s]);
        L[s] = static_cast<int>(sides[s].size());
    }
    if (L[0] + L[1] != L[3] + L[4])
        throw InfeasibleShape("side lengths violate |SW|+|NW| = |NE|+|SE| (" + std::to_string(L[0] + L[1]) +
                              " vs " + std::to_string(L[3] + L[4]) + ")");
    if (L[1] + L[2] != L[4] + L[5])
        throw InfeasibleShape("side lengths violate |NW|+|N| = |SE|+|S| (" + std::to_string(L[1] + L[2]) +
                              " vs " + std::to_string(L[4] + L[5]) + ")");
    BoundarySpec b;
    b.cut_bl = L[0];
    b.cut_top = L[2];
    b.cut_br = L[4];
    b.N = L[0] + L[1] + L[2];
    b.labels = sides;
    validate(b);
    return b;
}

BoundarySpec triangle_boundary(const BinaryString& nw, const BinaryString& ne, const BinaryString& s) {
    if (nw.size() != ne.size() || ne.size() != s.size())
        throw LengthMismatch("triangle sides must have equal length");
    return from_sides({"", nw, "", ne, "", s});
}

BoundarySpec trapezoid_boundary(const BinaryString& sw, const BinaryString& nw, const BinaryString& ne,
                                const BinaryString& s) {
    return from_sides({sw, nw, "", ne, "", s});
}

BoundarySpec parallelogram_boundary(const BinaryString& sw, const BinaryString& nw, const BinaryString& ne,
                                    const BinaryString& se) {
    return from_sides({sw, nw, "", ne, se, ""});
}

BoundarySpec pentagon_boundary(const BinaryString& nw, const BinaryString& n, const BinaryString& ne,
                               const BinaryString& se, const BinaryString& s) {
    return from_sides({"", nw, n, ne, se, s});
}

BoundarySpec hexagon_boundary(const std::array<BinaryString, 6>& sides) { return from_sides(sides); }

BoundarySpec polygon_boundary(PolygonKind kind, const std::vector<BinaryString>& l) {
    auto need = [&](size_t n, const char* what) {
        if (l.size() != n)
            throw InfeasibleShape(std::string(what) + " needs " + std::to_string(n) + " labels, got " +
                                  std::to_string(l.size()));
    };
    switch (kind) {
        case PolygonKind::Triangle: need(3, "triangle"); return triangle_boundary(l[0], l[1], l[2]);
        case PolygonKind::Trapezoid: need(4, "trapezoid"); return trapezoid_boundary(l[0], l[1], l[2], l[3]);
        case PolygonKind::Parallelogram:
            need(4, "parallelogram");
            return parallelogram_boundary(l[0], l[1], l[2], l[3]);
        case PolygonKind::Rhombus:
            need(4, "rhombus");
            if (l[0].size() != l[1].size()) throw InfeasibleShape("rhombus sides must have equal length");
            return parallelogram_boundary(l[0], l[1], l[2], l[3]);
        case PolygonKind::Pentagon: need(5, "pentagon"); return pentagon_boundary(l[0], l[1], l[2], l[3], l[4]);
        default: need(6, "hexagon"); return hexagon_boundary({l[0], l[1], l[2], l[3], l[4], l[5]});
    }
}

BoundarySpec parse_boundary(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("boundary needs the form kind:side,side,...");
    std::string kind = text.substr(0, colon);
    static const std::map<std::string, PolygonKind> kinds{
        {"tri", PolygonKind::Triangle},   {"trap", PolygonKind::Trapezoid}, {"par", PolygonKind::Parallelogram},
        {"rhom", PolygonKind::Rhombus},   {"pent", PolygonKind::Pentagon},  {"hex", PolygonKind::Hexagon}};
    auto it = kinds.find(kind);
    if (it == kinds.end()) throw ParseError("unknown boundary kind '" + kind + "'");
    std::vector<BinaryString> sides;
    std::string rest = text.substr(colon + 1);
    size_t start = 0;
    while (true) {
        size_t comma = rest.find(',', start);
        std::string part = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (part == "-") part.clear();
        else if (part.empty() || !is_binary(part)) throw ParseError("side '" + part + "' is not a binary string or '-'");
        sides.push_back(part);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return polygon_boundary(it->second, sides);
}

BoundarySpec lemma_pentagon_boundary(int a0, int a1, int c0, int c1) {
    int s = std::min(a1, c1) + std::min(a0, c0);
    int se = std::max(0, c1 - a1) + std::max(0, c0 - a0);
    int sw = std::max(0, a1 - c1) + std::max(0, a0 - c0);
    BinaryString nw = repeat('0', c0) + repeat('1', c1);
    BinaryString ne = repeat('0', a0) + repeat('1', a1);
    BoundarySpec b = from_sides({repeat('0', sw), nw, "", ne, repeat('0', se), repeat('0', s)});
    b.free[SideSW] = b.free[SideSE] = b.free[SideS] = true;
    b.labels[SideSW] = b.labels[SideSE] = b.labels[SideS] = "";
    return b;
}

Feasibility content_feasible(const BoundarySpec& b) {
    auto c = [&](int s) { return content(b.labels[static_cast<size_t>(s)]); };
    auto fr = [&](int s) { return b.free[static_cast<size_t>(s)]; };
    struct Identity {
        int l1, l2, r1, r2;
    };
    // content identities forced by the discrete Green's theorem
    const Identity ids[3] = {
        {SideNW, SideN, SideSE, SideS},
        {SideSW, SideNW, SideNE, SideSE},
        {SideN, SideNE, SideS, SideSW},
    };
    for (const auto& id : ids) {
        if (fr(id.l1) || fr(id.l2) || fr(id.r1) || fr(id.r2)) continue;
        Content lhs = c(id.l1) + c(id.l2);
        Content rhs = c(id.r1) + c(id.r2);
        if (!(lhs == rhs)) {
            return {false, std::string("content(") + side_name(id.l1) + ")+content(" + side_name(id.l2) +
                               ") != content(" + side_name(id.r1) + ")+content(" + side_name(id.r2) + ")"};
        }
    }
    return {};
}

BoundarySpec rotate_boundary(const BoundarySpec& b, int sixths) {
    int k = ((sixths % 6) + 6) % 6;
    std::array<BinaryString, 6> sides;
    std::array<bool, 6> fr{};
    std::array<BinaryString, 6> placeholder;
    for (int s = 0; s < 6; ++s) {
        int from = (s + k) % 6;
        sides[static_cast<size_t>(s)] = b.labels[static_cast<size_t>(from)];
        fr[static_cast<size_t>(s)] = b.free[static_cast<size_t>(from)];
        placeholder[static_cast<size_t>(s)] = repeat('0', b.side_length(from));
    }
    BoundarySpec r = from_sides(placeholder);
    r.labels = sides;
    r.free = fr;
    validate(r);
    return r;
}

BoundarySpec dual_boundary(const BoundarySpec& b) {
    const int from[6] = {SideSE, SideNE, SideN, SideNW, SideSW, SideS};
    std::array<BinaryString, 6> placeholder;
    std::array<BinaryString, 6> sides;
    std::array<bool, 6> fr{};
    for (int s = 0; s < 6; ++s) {
        placeholder[static_cast<size_t>(s)] = repeat('0', b.side_length(from[s]));
        sides[static_cast<size_t>(s)] = dual(b.labels[static_cast<size_t>(from[s])]);
        fr[static_cast<size_t>(s)] = b.free[static_cast<size_t>(from[s])];
    }
    BoundarySpec r = from_sides(placeholder);
    r.labels = sides;
    r.free = fr;
    validate(r);
    return r;
}

std::string boundary_text(const BoundarySpec& b) {
    std::string s = "hex:";
    for (int k = 0; k < 6; ++k) {
        if (k) s += ",";
        s += b.free[static_cast<size_t>(k)] ? std::string("*") : display(b.labels[static_cast<size_t>(k)]);
    }
    return s;
}

std::string cell_text(const CellId& c) {
    return std::string(c.shape == Shape::Up ? "U(" : "D(") + std::to_string(c.r) + "," + std::to_string(c.i) + ")";
}

std::array<std::array<int, 2>, 3> cell_vertices(const CellId& c, int N) {
    int y = N - c.r;
    if (c.shape == Shape::Up) return {{{c.i - 1, y}, {c.i, y}, {c.i - 1, y + 1}}};
    return {{{c.i - 1, y + 1}, {c.i, y + 1}, {c.i, y}}};
}

std::array<int, 2> side_start(const BoundarySpec& b, int side) {
    const int N = b.N;
    switch (((side % 6) + 6) % 6) {
        case SideSW: return {b.cut_bl, 0};
        case SideNW: return {0, b.cut_bl};
        case SideN: return {0, N - b.cut_top};
        case SideNE: return {b.cut_top, N - b.cut_top};
        case SideSE: return {N - b.cut_br, b.cut_br};
        default: return {N - b.cut_br, 0};
    }
}

CellId cell_from_vertices(const std::array<std::array<int, 2>, 3>& v, int N) {
    int ymin = std::min({v[0][1], v[1][1], v[2][1]});
    int low = 0, xmin = 1 << 30, xlow = 0;
    for (const auto& p : v) {
        if (p[1] != ymin) continue;
        ++low;
        xmin = std::min(xmin, p[0]);
        xlow = p[0];
    }
    if (low == 2) return {Shape::Up, N - ymin, xmin + 1};
    return {Shape::Down, N - ymin, xlow};
}

bool in_region(const BoundarySpec& b, const CellId& c) {
    if (c.r < 1 || c.r > b.N || c.i < 1) return false;
    if (c.shape == Shape::Up ? c.i > c.r : c.i > c.r - 1) return false;
    int A = 0, B = 0;
    for (const auto& v : cell_vertices(c, b.N)) {
        A += v[0];
        B += v[1];
    }
    return A + B > 3 * b.cut_bl && B < 3 * (b.N - b.cut_top) && A < 3 * (b.N - b.cut_br);
}

int Lattice::cell_index(const CellId& c) const {
    auto it = index_.find(cell_key(c));
    return it == index_.end() ? -1 : it->second;
}

Lattice build_lattice(const BoundarySpec& b) {
    validate(b);
    Lattice L;
    L.N = b.N;
    L.rows.resize(static_cast<size_t>(b.N));
    std::unordered_map<std::int64_t, int> edge_of;
    auto edge_id = [&](std::array<int, 2> p, std::array<int, 2> q) {
        std::int64_t key = point_key(p[0] + q[0], p[1] + q[1]);
        auto it = edge_of.find(key);
        if (it != edge_of.end()) return it->second;
        int id = static_cast<int>(L.edges.size());
        EdgeInfo e;
        e.a = p;
        e.b = q;
        L.edges.push_back(e);
        edge_of.emplace(key, id);
        return id;
    };
    for (int r = 1; r <= b.N; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (Shape sh : {Shape::Up, Shape::Down}) {
                CellId c{sh, r, i};
                if (!in_region(b, c)) continue;
                int idx = static_cast<int>(L.cells.size());
                auto v = cell_vertices(c, b.N);
                std::array<int, 3> es{};
                if (sh == Shape::Up) {
                    es[Rising] = edge_id(v[0], v[2]);
                    es[Falling] = edge_id(v[1], v[2]);
                    es[Horizontal] = edge_id(v[0], v[1]);
                } else {
                    es[Rising] = edge_id(v[1], v[2]);
                    es[Falling] = edge_id(v[0], v[2]);
                    es[Horizontal] = edge_id(v[0], v[1]);
                }
                for (int e : es) {
                    auto& cs = L.edges[static_cast<size_t>(e)].cells;
                    (cs[0] < 0 ? cs[0] : cs[1]) = idx;
                }
                L.cells.push_back(c);
                L.cell_edges.push_back(es);
                L.rows[static_cast<size_t>(r - 1)].push_back(idx);
                L.index_.emplace(cell_key(c), idx);
            }
        }
    }
    // walk the boundary clockwise starting at the SW side
    const std::array<std::array<int, 2>, 6> step{{{-1, 1}, {0, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, 0}}};
    for (int s = 0; s < 6; ++s) {
        int len = b.side_length(s);
        auto p = side_start(b, s);
        for (int k = 0; k < len; ++k) {
            std::array<int, 2> q{p[0] + step[static_cast<size_t>(s)][0], p[1] + step[static_cast<size_t>(s)][1]};
            if (L.cells.empty()) {
                // zero-area region: the walk runs along a segment, each edge twice
                int id = edge_id(p, q);
                EdgeInfo& e = L.edges[static_cast<size_t>(id)];
                bool fixed = !b.free[static_cast<size_t>(s)];
                Label l = fixed && b.labels[static_cast<size_t>(s)][static_cast<size_t>(k)] == '1' ? Label::One : Label::Zero;
                if (e.side < 0) {
                    e.side = s;
                    e.position = k;
                    e.kind = fixed ? EdgeKind::Fixed : EdgeKind::Free;
                    e.label = l;
                } else if (fixed && e.kind == EdgeKind::Fixed) {
                    if (e.label != l) L.consistent = false;
                } else if (fixed) {
                    e.kind = EdgeKind::Fixed;
                    e.label = l;
                }
                L.side_edges[static_cast<size_t>(s)].push_back(id);
                p = q;
                continue;
            }
            auto it = edge_of.find(point_key(p[0] + q[0], p[1] + q[1]));
            if (it == edge_of.end() || L.edges[static_cast<size_t>(it->second)].cells[1] >= 0)
                throw InfeasibleShape("boundary walk left the region");
            EdgeInfo& e = L.edges[static_cast<size_t>(it->second)];
            e.side = s;
            e.position = k;
            if (b.free[static_cast<size_t>(s)]) {
                e.kind = EdgeKind::Free;
            } else {
                e.kind = EdgeKind::Fixed;
                e.label = b.labels[static_cast<size_t>(s)][static_cast<size_t>(k)] == '0' ? Label::Zero : Label::One;
            }
            L.side_edges[static_cast<size_t>(s)].push_back(it->second);
            p = q;
        }
    }
    for (const auto& e : L.edges) {
        bool boundary = e.cells[1] < 0;
        if (boundary != (e.side >= 0)) throw InfeasibleShape("region boundary does not match the side walk");
    }
    return L;
}

}  // namespace puzzle
