#pragma once

#include <map>
#include <string>

#include "puzzle/pieces.hpp"
#include "puzzle/region.hpp"
#include "puzzle/tiler.hpp"

namespace puzzle {

// Colour classes: "zero", "one", "ten", "eqvt", "k".
std::string piece_class(const Piece& p);

struct RenderStyle {
    double unit = 48.0;  // px per lattice edge
    bool labels = true;
    std::map<std::string, std::string> palette{
        {"zero", "#d9412b"}, {"one", "#2f5fb3"}, {"ten", "#ffffff"}, {"eqvt", "#f3d23b"}, {"k", "#3fa34d"}};
};

// Boundary outline only, with the side labels.
std::string render_svg(const BoundarySpec& b, const RenderStyle& style = {});
// One <polygon> per placement; the outline is a <path>.
std::string render_svg(const BoundarySpec& b, const Filling& f, PieceSet set, const RenderStyle& style = {});

}  // namespace puzzle
