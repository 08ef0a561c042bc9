#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace puzzle {

using BigInt = boost::multiprecision::cpp_int;

// Exponent vector; entry k is the exponent of y_{k+1}.  Trailing zeros are trimmed.
using Monomial = std::vector<int>;

// Higher total degree first, then larger exponent on the highest-index variable.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial in y_1, y_2, ... with exact integer coefficients.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial constant(const BigInt& c);
    static Polynomial variable(int index);  // y_index, 1-based
    // y_j - y_i
    static Polynomial difference(int j, int i);

    bool is_zero() const { return terms_.empty(); }
    BigInt constant_term() const;
    BigInt coefficient(const Monomial& m) const;
    int total_degree() const;
    int max_variable() const;
    const std::map<Monomial, BigInt, MonomialOrder>& terms() const { return terms_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // y_k -> y_{perm[k-1]}; variables past the end of perm are left alone
    Polynomial substitute(const std::vector<int>& perm) const;

    // e.g. "y2 - y1", "y1*y2^2 + 3", "0"
    std::string to_string() const;

private:
    void add_term(Monomial m, const BigInt& c);
    std::map<Monomial, BigInt, MonomialOrder> terms_;
};

// Permutation reversing y_lo..y_hi (1-based, inclusive) inside y_1..y_n.
std::vector<int> reversal(int n, int lo, int hi);

}  // namespace puzzle
