#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "puzzle/tiler.hpp"

using namespace puzzle;

namespace {

const PieceSet H{}, HE{true, false, false}, HD{false, true, false}, HN{false, false, true};

std::string oracle_key(const Filling& f, PieceSet set) {
    auto cat = catalog(set);
    std::string key;
    for (const auto& pl : f.placements) {
        const Piece& p = cat[static_cast<size_t>(pl.piece)];
        if (p.shape == Shape::Rhombus) {
            key += "R(" + std::to_string(pl.cell.r) + "," + std::to_string(pl.cell.i) + ");";
            continue;
        }
        key += cell_text(pl.cell) + ":";
        for (int s = 0; s < 3; ++s) key += std::to_string(static_cast<int>(p.labels[static_cast<size_t>(s)]));
        key += ";";
    }
    return key;
}

oracle::Region region_of(const BoundarySpec& b) {
    auto g = oracle::region_from_sides(b.labels);
    g.free = b.free;
    return g;
}

// Compares every engine entry point with the brute-force oracle.
void compare(const BoundarySpec& b, PieceSet set) {
    CAPTURE(boundary_text(b));
    CAPTURE(piece_set_name(set));
    auto o = oracle::brute_force(region_of(b), set.equivariant, set.k_delta, set.k_nabla);
    auto fills = enumerate(b, set);
    CHECK(static_cast<std::int64_t>(fills.size()) == o.count);
    CHECK(count(b, set) == o.count);
    CHECK(sign_sum(b, set) == o.sign);
    if (set.equivariant) CHECK(poly_sum(b, set) == o.poly);
    std::set<std::string> keys;
    for (const auto& f : fills) {
        CHECK(check_filling(b, set, f) == "");
        keys.insert(oracle_key(f, set));
    }
    CHECK(keys.size() == fills.size());
    CHECK(keys == o.keys);
}

}  // namespace

TEST_CASE("fixed examples") {
    CHECK(count(triangle_boundary("1010", "0101", "0011"), H) == 1);
    CHECK(count(triangle_boundary("01", "01", "10"), H) == 1);
    for (const auto& s : strings_of_length(2)) CHECK(count(triangle_boundary("00", "11", s), H) == 0);
    CHECK(weight_sum(triangle_boundary("10", "10", "01"), HE).to_string() == "y2 - y1");
    CHECK(sign_sum(triangle_boundary("01", "01", "10"), HD) == 1);
    for (PieceSet s : {H, HE, HD, HN})
        for (const auto& x : strings_of_length(2)) CHECK(weight_sum(triangle_boundary("00", "11", x), s).to_string() == "0");
    CHECK(count(hexagon_boundary({"01", "01", "01", "01", "01", "01"}), H) == 2);
}

TEST_CASE("equivariant index formula") {
    CHECK(equivariant_indices(1, 1, 2).i == 1);
    CHECK(equivariant_indices(1, 1, 2).j == 2);
    for (int n = 2; n <= 9; ++n) {
        CHECK(equivariant_indices(n - 1, 1, n).i == 1);
        CHECK(equivariant_indices(n - 1, 1, n).j == 2);
    }
}

TEST_CASE("oracle agreement on all small triangles") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : strings_of_length(n))
            for (const auto& b : strings_of_length(n))
                for (const auto& c : strings_of_length(n))
                    for (PieceSet s : {H, HE, HD, HN}) compare(triangle_boundary(a, b, c), s);
}

TEST_CASE("oracle agreement on random polygons") {
    std::mt19937 rng(2024);
    auto rnd = [&](int len) {
        BinaryString s;
        for (int k = 0; k < len; ++k) s += static_cast<char>('0' + (rng() & 1));
        return s;
    };
    int nonzero = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int bl = static_cast<int>(rng() % 3), top = static_cast<int>(rng() % 3), br = static_cast<int>(rng() % 3);
        int n = std::max({bl + top, top + br, br + bl, 1}) + static_cast<int>(rng() % 3);
        if (n > 5) continue;
        // draw contents compatible with the identities half the time
        BoundarySpec b;
        do {
            b = from_sides({rnd(bl), rnd(n - bl - top), rnd(top), rnd(n - top - br), rnd(br), rnd(n - br - bl)});
        } while ((trial & 1) && !content_feasible(b).ok);
        if (b.cell_count() == 0) continue;
        for (PieceSet s : {H, HE, HD}) compare(b, s);
        nonzero += count(b, H) > 0;
    }
    CHECK(nonzero > 30);
}

TEST_CASE("free sides accept binary labels only") {
    auto b = triangle_boundary("01", "10", "00");
    b.free[SideS] = true;
    auto fills = enumerate(b, HD);
    auto o = oracle::brute_force(region_of(b), false, true, false);
    CHECK(static_cast<std::int64_t>(fills.size()) == o.count);
    for (const auto& f : fills) {
        auto s = side_labels(b, f, HD)[SideS];
        CHECK(is_binary(s));
        CHECK(s.size() == 2);
    }
}

TEST_CASE("weights of single fillings add up to the weight sum") {
    auto b = triangle_boundary("101001", "011100", "001011");
    for (PieceSet s : {HE, HD}) {
        auto fills = enumerate(b, s);
        Polynomial total;
        for (const auto& f : fills) total += filling_polynomial(f, b, s);
        if (s.equivariant) CHECK(total == poly_sum(b, s));
        else CHECK(total == Polynomial::constant(sign_sum(b, s)));
    }
}

TEST_CASE("enumeration order does not depend on the thread count") {
    for (const char* t : {"101001,011100,001011", "010101,010101,010101"}) {
        std::string s = t;
        auto a = s.substr(0, 6), b = s.substr(7, 6), c = s.substr(14, 6);
        auto bd = triangle_boundary(a, b, c);
        for (PieceSet set : {H, HE}) {
            auto one = enumerate(bd, set, 1);
            for (int th : {2, 4, 7}) CHECK(enumerate(bd, set, th) == one);
        }
    }
}

TEST_CASE("rotation and duality map fillings to fillings") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : strings_with_content({n / 2, n - n / 2}))
            for (const auto& b : strings_with_content({n / 2, n - n / 2}))
                for (const auto& c : strings_with_content({n / 2, n - n / 2})) {
                    auto bd = triangle_boundary(a, b, c);
                    for (PieceSet set : {H, HE, HD}) {
                        auto fills = enumerate(bd, set);
                        auto dual_b = dual_boundary(bd);
                        CHECK(count(dual_b, set) == static_cast<std::int64_t>(fills.size()));
                        for (const auto& f : fills) {
                            auto d = dual_filling(f, bd, set);
                            CHECK(check_filling(d.boundary, d.set, d.filling) == "");
                            CHECK(filling_polynomial(d.filling, d.boundary, d.set).constant_term() ==
                                  filling_polynomial(f, bd, set).constant_term());
                        }
                        // the rhombus only turns by 180 degrees, which a triangle does not allow
                        for (int k : {1, 2, 3, 4, 5}) {
                            if (set.equivariant) continue;
                            auto rb = rotate_boundary(bd, k);
                            PieceSet rs = (k % 2) ? PieceSet{false, set.k_nabla, set.k_delta} : set;
                            CHECK(count(rb, rs) == static_cast<std::int64_t>(fills.size()));
                            CHECK(sign_sum(rb, rs) == sign_sum(bd, set));
                            for (const auto& f : fills) {
                                auto r = rotate_filling(f, bd, set, k);
                                CHECK(check_filling(r.boundary, r.set, r.filling) == "");
                            }
                        }
                    }
                }
}

TEST_CASE("rotations of hexagons, including by 60 and 180 degrees") {
    auto h = hexagon_boundary({"01", "10", "01", "10", "01", "10"});
    for (PieceSet set : {H, HD, HN, HE}) {
        auto fills = enumerate(h, set);
        for (int k = 1; k < 6; ++k) {
            if (set.equivariant && k != 3) continue;
            auto rb = rotate_boundary(h, k);
            PieceSet rs = (k % 2) ? PieceSet{set.equivariant, set.k_nabla, set.k_delta} : set;
            if (!set.equivariant) CHECK(weight_sum(rb, rs) == weight_sum(h, set));
            CHECK(count(rb, rs) == static_cast<std::int64_t>(fills.size()));
            std::set<std::string> keys;
            for (const auto& f : fills) {
                auto r = rotate_filling(f, h, set, k);
                CHECK(r.boundary == rb);
                CHECK(check_filling(r.boundary, r.set, r.filling) == "");
                keys.insert(filling_key(r.filling));
            }
            CHECK(keys.size() == fills.size());
        }
    }
}

TEST_CASE("degenerate regions") {
    // zero width: the same segment read twice
    CHECK(count(parallelogram_boundary("", "01", "", "10"), H) == 1);
    CHECK(count(parallelogram_boundary("", "01", "", "01"), H) == 0);
    CHECK(count(triangle_boundary("", "", ""), H) == 1);
    CHECK(enumerate(parallelogram_boundary("", "01", "", "01"), H).empty());
}
