#pragma once

#include <cstdint>
#include <stdexcept>

#include "puzzle/words.hpp"

namespace puzzle {

class ContentMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// c_{λ,μ}^ν by counting skew tableaux of shape ν/λ and content μ whose
// reverse reading word is a lattice word.
std::int64_t lr_coeff(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu);
// c_{λ!,μ!}^ν: λ and μ padded to the content of ν first.
std::int64_t lr_coeff_padded(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu);
// Number of Δ_{λ,μ,ν∨} puzzles with the base pieces.
std::int64_t lr_via_puzzles(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu);
// c_{sort(λ)sort(μ),ν}^{λμ} == c_{λ!,μ!}^ν
bool equalityofLR_check(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu);

// Variants returning 0 instead of throwing when contents do not line up.
std::int64_t lr_or_zero(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu);
std::int64_t lr_padded_or_zero(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu);

}  // namespace puzzle
