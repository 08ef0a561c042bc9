#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace puzzle {

enum class Label : unsigned char { Zero = 0, One = 1, Ten = 2 };

enum class Shape : unsigned char { Up, Down, Rhombus };

enum class WeightTag : unsigned char { Unit, SignMinusOne, Equivariant };

// Triangle slots: 0 rising "/", 1 falling "\", 2 horizontal.
// Rhombus slots: 0 NW, 1 NE, 2 SE, 3 SW.
enum Slot : int { Rising = 0, Falling = 1, Horizontal = 2 };
enum RhombusSlot : int { NW = 0, NE = 1, SE = 2, SW = 3 };

struct Piece {
    Shape shape = Shape::Up;
    std::array<Label, 4> labels{};  // unused slots stay Zero
    WeightTag tag = WeightTag::Unit;

    int slot_count() const { return shape == Shape::Rhombus ? 4 : 3; }
    friend bool operator==(const Piece&, const Piece&) = default;
};

struct PieceSet {
    bool equivariant = false;
    bool k_delta = false;
    bool k_nabla = false;

    friend bool operator==(const PieceSet&, const PieceSet&) = default;
};

class Unrotatable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownPieceSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Piece up(Label r, Label f, Label h, WeightTag t = WeightTag::Unit);
Piece down(Label r, Label f, Label h, WeightTag t = WeightTag::Unit);
Piece equivariant_rhombus();
Piece delta_piece();
Piece nabla_piece();

std::vector<Piece> catalog(PieceSet set);

// Positive sixths rotate clockwise.
Piece rotate_piece(const Piece& p, int sixths);
Piece dual_piece(const Piece& p);

// "H", "H+eqvt", "H+delta", "H+nabla", and combinations such as "H+eqvt+delta"
PieceSet parse_piece_set(const std::string& text);
std::string piece_set_name(PieceSet set);

std::string label_text(Label l);
std::string shape_text(Shape s);
std::string tag_text(WeightTag t);
// compact form such as "up(1,0,10)" or "rhombus(0,1,0,1)"
std::string piece_text(const Piece& p);

bool is_h_piece(const Piece& p);

}  // namespace puzzle
