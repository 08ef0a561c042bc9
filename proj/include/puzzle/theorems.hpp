#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "puzzle/pieces.hpp"
#include "puzzle/polynomial.hpp"
#include "puzzle/region.hpp"
#include "puzzle/words.hpp"

namespace puzzle {

class HypothesisViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownTheorem : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct TheoremParams {
    std::vector<BinaryString> words;
    std::vector<int> ints;
};

struct VerificationReport {
    std::string id;
    TheoremParams params;
    std::vector<std::string> labels;  // what each value is
    std::vector<std::string> values;  // integers or polynomials as text
    bool pass = false;
    double elapsed_ms = 0.0;
    std::string note;
};

enum class TheoremKind { Commutativity, Formula, Other };

struct TheoremInfo {
    std::string id;
    TheoremKind kind;
    std::string params;       // parameter names, e.g. "alpha,beta,gamma,delta,nu"
    int default_bound;        // sweep bound used by the acceptance run
    std::string bound_meaning;
};

const std::vector<TheoremInfo>& theorem_catalog();
const TheoremInfo& theorem_info(const std::string& id);

VerificationReport verify_commutativity(const std::string& id, const TheoremParams& p);
VerificationReport verify_formula(const std::string& id, const TheoremParams& p);
VerificationReport verify_equivariant_parallelogram(const BinaryString& alpha, const BinaryString& gamma,
                                                    const BinaryString& beta, const BinaryString& delta);
VerificationReport verify_unique_pentagon(int a0, int a1, int c0, int c1);
// Dispatches on the catalog kind.
VerificationReport verify(const std::string& id, const TheoremParams& p);

// All parameter tuples of the family within the bound, in sweep order.
std::vector<TheoremParams> sweep_instances(const std::string& id, int bound);
std::vector<VerificationReport> sweep(const std::string& id, int bound, int threads = 1);

// Hexagon side-length sextuples (SW, NW, N, NE, SE, S) with perimeter <= bound.
std::vector<std::array<int, 6>> hexagon_shapes(int max_perimeter);

std::string params_text(const TheoremParams& p);

}  // namespace puzzle
