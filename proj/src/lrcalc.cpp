#include "puzzle/lrcalc.hpp"

#include <map>
#include <tuple>
#include <vector>

#include "puzzle/pieces.hpp"
#include "puzzle/region.hpp"
#include "puzzle/tiler.hpp"

namespace puzzle {

namespace {

struct SkewCounter {
    std::vector<int> outer, inner, weight;
    std::vector<std::vector<int>> grid;  // grid[row][col], 0 = empty
    std::vector<int> used;
    std::int64_t found = 0;

    int cell(int row, int col) const {
        if (row < 0 || col >= static_cast<int>(grid[static_cast<size_t>(row)].size())) return 0;
        return grid[static_cast<size_t>(row)][static_cast<size_t>(col)];
    }

    // Rows top to bottom, each row right to left: the reverse reading order.
    void fill(int row, int col) {
        if (row == static_cast<int>(outer.size())) {
            ++found;
            return;
        }
        if (col < inner[static_cast<size_t>(row)]) {
            int next = row + 1;
            fill(next, next < static_cast<int>(outer.size()) ? outer[static_cast<size_t>(next)] - 1 : 0);
            return;
        }
        int right = col + 1 < outer[static_cast<size_t>(row)] ? grid[static_cast<size_t>(row)][static_cast<size_t>(col + 1)]
                                                               : static_cast<int>(weight.size());
        int above = row > 0 && col < outer[static_cast<size_t>(row - 1)] ? cell(row - 1, col) : 0;
        for (int v = above + 1; v <= right; ++v) {
            auto vi = static_cast<size_t>(v - 1);
            if (used[vi] >= weight[vi]) continue;
            if (v > 1 && used[vi] + 1 > used[vi - 1]) continue;
            ++used[vi];
            grid[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
            fill(row, col - 1);
            grid[static_cast<size_t>(row)][static_cast<size_t>(col)] = 0;
            --used[vi];
        }
    }
};

std::vector<int> nonzero(const Partition& p) {
    std::vector<int> out;
    for (int x : p.parts)
        if (x > 0) out.push_back(x);
    return out;
}

}  // namespace

std::int64_t lr_coeff(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu) {
    require_binary(lambda);
    require_binary(mu);
    require_binary(nu);
    if (!(content(lambda) == content(mu)) || !(content(mu) == content(nu)))
        throw ContentMismatch("c_{" + display(lambda) + "," + display(mu) + "}^{" + display(nu) +
                              "} needs equal contents");
    if (inversions(lambda) + inversions(mu) != inversions(nu)) return 0;
    Partition pl = to_partition(lambda), pn = to_partition(nu);
    for (size_t r = 0; r < pn.parts.size(); ++r)
        if (pl.parts[r] > pn.parts[r]) return 0;

    thread_local std::map<std::tuple<BinaryString, BinaryString, BinaryString>, std::int64_t> memo;
    auto key = std::make_tuple(lambda, mu, nu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    SkewCounter sc;
    sc.outer = nonzero(pn);
    sc.inner = pl.parts;
    sc.inner.resize(sc.outer.size(), 0);
    sc.weight = nonzero(to_partition(mu));
    sc.used.assign(sc.weight.size(), 0);
    for (int len : sc.outer) sc.grid.emplace_back(static_cast<size_t>(len), 0);
    if (sc.outer.empty())
        sc.found = sc.weight.empty() ? 1 : 0;
    else
        sc.fill(0, sc.outer[0] - 1);
    memo.emplace(key, sc.found);
    return sc.found;
}

std::int64_t lr_coeff_padded(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu) {
    Content c = content(nu);
    return lr_coeff(pad(lambda, c), pad(mu, c), nu);
}

std::int64_t lr_via_puzzles(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu) {
    if (lambda.size() != mu.size() || mu.size() != nu.size()) return 0;
    return count(triangle_boundary(lambda, mu, reversed(nu)), PieceSet{});
}

bool equalityofLR_check(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu) {
    if (!(content(lambda) + content(mu) == content(nu)))
        throw ContentMismatch("content(ν) must equal content(λ)+content(μ)");
    return lr_coeff(sorted(lambda) + sorted(mu), nu, lambda + mu) == lr_coeff_padded(lambda, mu, nu);
}

std::int64_t lr_or_zero(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu) {
    if (!(content(lambda) == content(mu)) || !(content(mu) == content(nu))) return 0;
    return lr_coeff(lambda, mu, nu);
}

std::int64_t lr_padded_or_zero(const BinaryString& lambda, const BinaryString& mu, const BinaryString& nu) {
    Content c = content(nu), a = content(lambda), b = content(mu);
    if (a.zeros > c.zeros || a.ones > c.ones || b.zeros > c.zeros || b.ones > c.ones) return 0;
    return lr_coeff_padded(lambda, mu, nu);
}

}  // namespace puzzle
