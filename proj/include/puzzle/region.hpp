#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "puzzle/pieces.hpp"
#include "puzzle/words.hpp"

namespace puzzle {

// Sides in clockwise order starting at SW.
enum Side : int { SideSW = 0, SideNW = 1, SideN = 2, SideNE = 3, SideSE = 4, SideS = 5 };
const char* side_name(int side);

class InfeasibleShape : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LengthMismatch : public InfeasibleShape {
public:
    using InfeasibleShape::InfeasibleShape;
};

// A size-N up-triangle minus three corner triangles.  Side labels are read
// clockwise: SW and NW upward, N left to right, NE and SE downward, S right to left.
struct BoundarySpec {
    int N = 0;
    int cut_bl = 0;
    int cut_top = 0;
    int cut_br = 0;
    std::array<BinaryString, 6> labels{};
    // a free side accepts any binary labels; its string is ignored
    std::array<bool, 6> free{};

    int side_length(int side) const;
    bool is_triangle() const { return cut_bl == 0 && cut_top == 0 && cut_br == 0; }
    int cell_count() const { return N * N - cut_bl * cut_bl - cut_top * cut_top - cut_br * cut_br; }
    friend bool operator==(const BoundarySpec&, const BoundarySpec&) = default;
};

enum class PolygonKind { Triangle, Trapezoid, Parallelogram, Rhombus, Pentagon, Hexagon };

// Builds the spec from six clockwise side labels (SW, NW, N, NE, SE, S).
BoundarySpec from_sides(const std::array<BinaryString, 6>& sides);

BoundarySpec triangle_boundary(const BinaryString& nw, const BinaryString& ne, const BinaryString& s);
BoundarySpec trapezoid_boundary(const BinaryString& sw, const BinaryString& nw, const BinaryString& ne,
                                const BinaryString& s);
BoundarySpec parallelogram_boundary(const BinaryString& sw, const BinaryString& nw, const BinaryString& ne,
                                    const BinaryString& se);
BoundarySpec pentagon_boundary(const BinaryString& nw, const BinaryString& n, const BinaryString& ne,
                               const BinaryString& se, const BinaryString& s);
BoundarySpec hexagon_boundary(const std::array<BinaryString, 6>& sides);
BoundarySpec polygon_boundary(PolygonKind kind, const std::vector<BinaryString>& labels);

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Compact forms: tri:nw,ne,s  trap:sw,nw,ne,s  par:sw,nw,ne,se  rhom:...  pent:nw,n,ne,se,s
// hex:sw,nw,n,ne,se,s. An empty side is written "-".
BoundarySpec parse_boundary(const std::string& text);

// Pentagon with NW = 0^c0 1^c1, NE = 0^a0 1^a1 and free SE, S, SW sides.
BoundarySpec lemma_pentagon_boundary(int a0, int a1, int c0, int c1);

void validate(const BoundarySpec& b);

struct Feasibility {
    bool ok = true;
    std::string violated;
};
Feasibility content_feasible(const BoundarySpec& b);

// Positive sixths rotate counterclockwise: side s of the result is side s+k of b.
BoundarySpec rotate_boundary(const BoundarySpec& b, int sixths);
BoundarySpec dual_boundary(const BoundarySpec& b);

std::string boundary_text(const BoundarySpec& b);

// Lattice coordinates: a point (x, y) is x*e1 + y*e2 with e1 = (1,0) and e2 at 60 degrees.
struct CellId {
    Shape shape = Shape::Up;  // Up or Down
    int r = 0;
    int i = 0;
    friend bool operator==(const CellId&, const CellId&) = default;
};
std::string cell_text(const CellId& c);
std::array<std::array<int, 2>, 3> cell_vertices(const CellId& c, int N);
// Inverse of cell_vertices for a unit triangle given by its corners in any order.
CellId cell_from_vertices(const std::array<std::array<int, 2>, 3>& v, int N);
// Lattice point where the clockwise walk enters the given side.
std::array<int, 2> side_start(const BoundarySpec& b, int side);

// Boundary value of an edge: fixed label, free binary, or interior.
enum class EdgeKind : unsigned char { Interior, Fixed, Free };

struct EdgeInfo {
    EdgeKind kind = EdgeKind::Interior;
    Label label = Label::Zero;  // meaningful when kind == Fixed
    std::array<int, 2> cells{-1, -1};
    std::array<int, 2> a{};  // endpoint coordinates
    std::array<int, 2> b{};
    int side = -1;      // boundary side, -1 if interior
    int position = -1;  // index within the side's reading order
};

struct Lattice {
    int N = 0;
    std::vector<CellId> cells;                 // scan order
    std::vector<std::array<int, 3>> cell_edges;  // rising, falling, horizontal
    std::vector<EdgeInfo> edges;
    std::vector<std::vector<int>> rows;        // row r (1-based, index r-1) -> cell indices
    std::array<std::vector<int>, 6> side_edges;  // edges of each side in reading order
    // false when a zero-area region is walked twice along an edge with two different labels
    bool consistent = true;

    int cell_index(const CellId& c) const;
    int up_index(int r, int i) const { return cell_index({Shape::Up, r, i}); }
    int down_index(int r, int i) const { return cell_index({Shape::Down, r, i}); }

    std::unordered_map<std::int64_t, int> index_;
};

bool in_region(const BoundarySpec& b, const CellId& c);
Lattice build_lattice(const BoundarySpec& b);

}  // namespace puzzle
