#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "puzzle/region.hpp"
#include "puzzle/tiler.hpp"

namespace puzzle {

class UnsupportedPieceSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InfeasibleCorner : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CornerMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Corner { BottomLeft, Top, BottomRight };

struct AttachedCorner {
    Corner corner = Corner::BottomLeft;
    BoundarySpec local;        // the corner as a triangle of its own
    Filling local_filling;     // its unique filling
    Filling placed;            // the same filling in the big triangle's cells
};

struct CompletionMap {
    BoundarySpec polygon;
    BoundarySpec triangle;
    PieceSet set;
    std::vector<AttachedCorner> corners;  // only corners with a positive cut
};

// NW = sort(α)βγ, NE = sort(γ)δsort(ε), S = εζα for hex(α, β, γ, δ, ε, ζ).
CompletionMap complete_to_triangle(const BoundarySpec& b, PieceSet set = {});

enum class IdentityOrientation { TopCorner, BottomCorner };

// Boundary with NW = λ, NE = sort(λ) (top corner) or NW = sort(λ), S = λ
// (bottom corner).  The third side is free when requested, otherwise it
// carries the predicted label λ∨.
BoundarySpec identity_boundary(const BinaryString& lambda, IdentityOrientation o, bool free_third);
Filling identity_filling(const BinaryString& lambda, IdentityOrientation o, PieceSet set = {});

Filling glue(const Filling& polygon_filling, const CompletionMap& cm);
Filling truncate(const Filling& triangle_filling, const CompletionMap& cm);

struct PentagonFill {
    Filling filling;
    BinaryString se, s, sw;
};
// The unique filling of the lemma pentagon, or nothing when it has none.
// Throws if more than one filling exists.
std::optional<PentagonFill> unique_pentagon_fill(int a0, int a1, int c0, int c1, PieceSet set = {});

}  // namespace puzzle
