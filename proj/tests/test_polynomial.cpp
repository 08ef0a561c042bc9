#include <doctest.h>

#include "puzzle/polynomial.hpp"

using namespace puzzle;

TEST_CASE("printing") {
    CHECK(Polynomial().to_string() == "0");
    CHECK(Polynomial::constant(3).to_string() == "3");
    CHECK(Polynomial::constant(-1).to_string() == "-1");
    CHECK(Polynomial::difference(2, 1).to_string() == "y2 - y1");
    auto p = Polynomial::difference(2, 1) * Polynomial::difference(2, 1);
    CHECK(p.to_string() == "y2^2 - 2*y1*y2 + y1^2");
}

TEST_CASE("ring axioms on small polynomials") {
    std::vector<Polynomial> ps{Polynomial::constant(0), Polynomial::constant(2), Polynomial::variable(1),
                               Polynomial::difference(3, 1), Polynomial::difference(2, 1) * Polynomial::variable(3)};
    for (const auto& a : ps)
        for (const auto& b : ps) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - b) + b == a);
            for (const auto& c : ps) {
                CHECK((a + b) + c == a + (b + c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    CHECK((Polynomial::variable(1) - Polynomial::variable(1)).is_zero());
}

TEST_CASE("degree and constant term") {
    auto p = Polynomial::difference(5, 2) * Polynomial::difference(6, 4) + Polynomial::constant(7);
    CHECK(p.total_degree() == 2);
    CHECK(p.constant_term() == 7);
    CHECK(p.max_variable() == 6);
}

TEST_CASE("substitution by block reversal") {
    auto perm = reversal(4, 1, 2);  // y1 <-> y2
    CHECK(Polynomial::difference(2, 1).substitute(perm) == Polynomial::difference(1, 2));
    auto tail = reversal(7, 4, 7);
    CHECK(Polynomial::difference(4, 1).substitute(tail) == Polynomial::difference(7, 1));
    auto p = Polynomial::difference(6, 3) * Polynomial::difference(5, 4);
    CHECK(p.substitute(tail).substitute(tail) == p);
}

TEST_CASE("big coefficients stay exact") {
    Polynomial p = Polynomial::constant(1);
    for (int k = 0; k < 70; ++k) p *= Polynomial::constant(2);
    CHECK(p.constant_term() == BigInt(1) << 70);
}
