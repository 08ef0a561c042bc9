#include "puzzle/pieces.hpp"

#include <sstream>

namespace puzzle {

namespace {
constexpr Label L0 = Label::Zero;
constexpr Label L1 = Label::One;
constexpr Label LT = Label::Ten;

Label swap01(Label l) {
    if (l == L0) return L1;
    if (l == L1) return L0;
    return l;
}
}  // namespace

Piece up(Label r, Label f, Label h, WeightTag t) { return Piece{Shape::Up, {r, f, h, L0}, t}; }
Piece down(Label r, Label f, Label h, WeightTag t) { return Piece{Shape::Down, {r, f, h, L0}, t}; }
Piece equivariant_rhombus() { return Piece{Shape::Rhombus, {L0, L1, L0, L1}, WeightTag::Equivariant}; }
Piece delta_piece() { return up(LT, LT, LT, WeightTag::SignMinusOne); }
Piece nabla_piece() { return down(LT, LT, LT, WeightTag::SignMinusOne); }

std::vector<Piece> catalog(PieceSet set) {
    const std::array<std::array<Label, 3>, 5> triples{{
        {L0, L0, L0},
        {L1, L1, L1},
        {L1, L0, LT},
        {LT, L1, L0},
        {L0, LT, L1},
    }};
    std::vector<Piece> out;
    for (const auto& t : triples) out.push_back(up(t[0], t[1], t[2]));
    for (const auto& t : triples) out.push_back(down(t[0], t[1], t[2]));
    if (set.equivariant) out.push_back(equivariant_rhombus());
    if (set.k_delta) out.push_back(delta_piece());
    if (set.k_nabla) out.push_back(nabla_piece());
    return out;
}

Piece rotate_piece(const Piece& p, int sixths) {
    int k = ((sixths % 6) + 6) % 6;
    if (p.shape == Shape::Rhombus) {
        if (k != 0) throw Unrotatable("the equivariant rhombus cannot be rotated");
        return p;
    }
    Piece q = p;
    for (int step = 0; step < k; ++step) {
        Piece n = q;
        n.shape = (q.shape == Shape::Up) ? Shape::Down : Shape::Up;
        n.labels[Rising] = q.labels[Falling];
        n.labels[Falling] = q.labels[Horizontal];
        n.labels[Horizontal] = q.labels[Rising];
        q = n;
    }
    return q;
}

Piece dual_piece(const Piece& p) {
    Piece q = p;
    if (p.shape == Shape::Rhombus) {
        q.labels[NW] = swap01(p.labels[NE]);
        q.labels[NE] = swap01(p.labels[NW]);
        q.labels[SE] = swap01(p.labels[SW]);
        q.labels[SW] = swap01(p.labels[SE]);
    } else {
        q.labels[Rising] = swap01(p.labels[Falling]);
        q.labels[Falling] = swap01(p.labels[Rising]);
        q.labels[Horizontal] = swap01(p.labels[Horizontal]);
    }
    return q;
}

PieceSet parse_piece_set(const std::string& text) {
    std::stringstream ss(text);
    std::string part;
    PieceSet set;
    bool first = true;
    while (std::getline(ss, part, '+')) {
        if (first) {
            if (part != "H") throw UnknownPieceSet("piece set must start with H: " + text);
            first = false;
            continue;
        }
        if (part == "eqvt")
            set.equivariant = true;
        else if (part == "delta")
            set.k_delta = true;
        else if (part == "nabla")
            set.k_nabla = true;
        else
            throw UnknownPieceSet("unknown piece set component '" + part + "' in " + text);
    }
    if (first) throw UnknownPieceSet("empty piece set");
    return set;
}

std::string piece_set_name(PieceSet set) {
    std::string s = "H";
    if (set.equivariant) s += "+eqvt";
    if (set.k_delta) s += "+delta";
    if (set.k_nabla) s += "+nabla";
    return s;
}

std::string label_text(Label l) {
    switch (l) {
        case L0: return "0";
        case L1: return "1";
        default: return "10";
    }
}

std::string shape_text(Shape s) {
    switch (s) {
        case Shape::Up: return "up";
        case Shape::Down: return "down";
        default: return "rhombus";
    }
}

std::string tag_text(WeightTag t) {
    switch (t) {
        case WeightTag::Unit: return "unit";
        case WeightTag::SignMinusOne: return "sign";
        default: return "equivariant";
    }
}

std::string piece_text(const Piece& p) {
    std::string s = shape_text(p.shape) + "(";
    for (int i = 0; i < p.slot_count(); ++i) {
        if (i) s += ",";
        s += label_text(p.labels[static_cast<size_t>(i)]);
    }
    return s + ")";
}

bool is_h_piece(const Piece& p) { return p.shape != Shape::Rhombus && p.tag == WeightTag::Unit; }

}  // namespace puzzle
