#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "puzzle/pieces.hpp"
#include "puzzle/polynomial.hpp"
#include "puzzle/region.hpp"

namespace puzzle {

// One placed piece.  A rhombus is anchored at its UP cell and also covers
// DOWN(r+1, i) directly beneath.
struct Placement {
    CellId cell;
    int piece = 0;  // index into catalog(set)
    friend bool operator==(const Placement&, const Placement&) = default;
};

// Placements sorted by anchor cell in scan order.
struct Filling {
    std::vector<Placement> placements;
    friend bool operator==(const Filling&, const Filling&) = default;
};

enum class WeightKind { Count, Sign, Poly };

struct Weight {
    WeightKind kind = WeightKind::Count;
    std::int64_t value = 0;  // Count and Sign
    Polynomial poly;         // Poly

    std::string to_string() const;
    friend bool operator==(const Weight&, const Weight&) = default;
};

WeightKind weight_kind(PieceSet set);

struct EqIndexPair {
    int i = 0;
    int j = 0;
    friend bool operator==(const EqIndexPair&, const EqIndexPair&) = default;
};

// Rhombus anchored at UP(r, i) inside a completed triangle of size n.
EqIndexPair equivariant_indices(int r, int i, int n);

std::vector<Filling> enumerate(const BoundarySpec& b, PieceSet set, int threads = 1);
std::int64_t count(const BoundarySpec& b, PieceSet set);
Weight weight_sum(const BoundarySpec& b, PieceSet set);
// Sum of (-1)^{#K pieces}; equals count when no K pieces are allowed.
std::int64_t sign_sum(const BoundarySpec& b, PieceSet set);
// Sum of equivariant weights; K pieces contribute -1.
Polynomial poly_sum(const BoundarySpec& b, PieceSet set);

Weight filling_weight(const Filling& f, const BoundarySpec& b, PieceSet set);
Polynomial filling_polynomial(const Filling& f, const BoundarySpec& b, PieceSet set);

// Label of every lattice edge under the filling (indexed like Lattice::edges);
// empty for the edge inside a rhombus.
std::vector<std::optional<Label>> edge_labels(const Lattice& lat, const Filling& f, PieceSet set);
// Side strings read off the filling, including free sides.
std::array<BinaryString, 6> side_labels(const BoundarySpec& b, const Filling& f, PieceSet set);
// Full structural check: cover, glue and boundary.  Returns an empty string when valid.
std::string check_filling(const BoundarySpec& b, PieceSet set, const Filling& f);

bool uses_only_h(const Filling& f, PieceSet set);
int rhombus_count(const Filling& f, PieceSet set);

// Positive sixths rotate counterclockwise, matching rotate_boundary.  With the
// equivariant piece only half turns are allowed; odd turns need Δ and ∇ together
// or neither.  The result is a filling of rotate_boundary(b, sixths) with the
// returned piece set.
struct TransformedFilling {
    BoundarySpec boundary;
    PieceSet set;
    Filling filling;
};
TransformedFilling rotate_filling(const Filling& f, const BoundarySpec& b, PieceSet set, int sixths);
TransformedFilling dual_filling(const Filling& f, const BoundarySpec& b, PieceSet set);

// Compact text such as "U(1,1)=0;D(2,1)=7;..." for sorting and hashing.
std::string filling_key(const Filling& f);

}  // namespace puzzle
