#include <doctest.h>

#include <algorithm>

#include "puzzle/pieces.hpp"

using namespace puzzle;

namespace {
const Label Z = Label::Zero, O = Label::One, T = Label::Ten;

bool in_catalog(const std::vector<Piece>& cat, const Piece& p) { return std::find(cat.begin(), cat.end(), p) != cat.end(); }
}  // namespace

TEST_CASE("catalog sizes") {
    CHECK(catalog({}).size() == 10);
    CHECK(catalog({true, false, false}).size() == 11);
    CHECK(catalog({false, true, true}).size() == 12);
    CHECK(catalog({true, true, true}).size() == 13);
}

TEST_CASE("the base set is closed under rotation and duality") {
    auto base = catalog({});
    for (const auto& p : base) {
        CAPTURE(piece_text(p));
        CHECK(is_h_piece(p));
        for (int k = -7; k <= 7; ++k) CHECK(in_catalog(base, rotate_piece(p, k)));
        CHECK(in_catalog(base, dual_piece(p)));
        CHECK(rotate_piece(p, 6) == p);
        CHECK(rotate_piece(rotate_piece(p, 1), -1) == p);
        CHECK(dual_piece(dual_piece(p)) == p);
    }
    // rotation acts on the five up pieces as {fixed, fixed, 3-cycle} over 120 degrees
    int fixed = 0;
    for (const auto& p : base)
        if (rotate_piece(p, 2) == p) ++fixed;
    CHECK(fixed == 4);
}

TEST_CASE("rotation examples") {
    CHECK(rotate_piece(up(O, Z, T), 2) == up(T, O, Z));
    CHECK(rotate_piece(up(Z, Z, Z), 1) == down(Z, Z, Z));
    CHECK(rotate_piece(delta_piece(), 1) == nabla_piece());
    CHECK(rotate_piece(nabla_piece(), 1) == delta_piece());
    CHECK(rotate_piece(equivariant_rhombus(), 6) == equivariant_rhombus());
    CHECK_THROWS_AS(rotate_piece(equivariant_rhombus(), 1), Unrotatable);
    CHECK_THROWS_AS(rotate_piece(equivariant_rhombus(), 3), Unrotatable);
}

TEST_CASE("duality examples") {
    CHECK(dual_piece(up(Z, Z, Z)) == up(O, O, O));
    CHECK(dual_piece(up(O, Z, T)) == up(O, Z, T));
    CHECK(dual_piece(equivariant_rhombus()) == equivariant_rhombus());
    CHECK(dual_piece(delta_piece()) == delta_piece());
    CHECK(dual_piece(nabla_piece()) == nabla_piece());
}

TEST_CASE("K pieces carry weight -1") {
    CHECK(delta_piece().tag == WeightTag::SignMinusOne);
    CHECK(nabla_piece().tag == WeightTag::SignMinusOne);
    CHECK_FALSE(is_h_piece(delta_piece()));
    CHECK_FALSE(is_h_piece(equivariant_rhombus()));
}

TEST_CASE("piece set names round trip") {
    for (const char* s : {"H", "H+eqvt", "H+delta", "H+nabla", "H+delta+nabla", "H+eqvt+delta"}) {
        CAPTURE(s);
        CHECK(piece_set_name(parse_piece_set(s)) == s);
    }
    CHECK_THROWS_AS(parse_piece_set("X"), UnknownPieceSet);
}
