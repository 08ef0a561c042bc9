#include "puzzle/words.hpp"

#include <algorithm>

namespace puzzle {

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

bool is_binary(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

void require_binary(const std::string& s) {
    if (!is_binary(s)) throw NotBinary("not a binary string: \"" + s + "\"");
}

Content content(const BinaryString& s) {
    Content c;
    for (char ch : s) (ch == '0' ? c.zeros : c.ones)++;
    return c;
}

BinaryString repeat(char c, int n) { return BinaryString(static_cast<size_t>(std::max(n, 0)), c); }

BinaryString sorted_string(Content c) { return repeat('0', c.zeros) + repeat('1', c.ones); }

BinaryString sorted(const BinaryString& s) { return sorted_string(content(s)); }

BinaryString reversed(const BinaryString& s) { return BinaryString(s.rbegin(), s.rend()); }

BinaryString dual(const BinaryString& s) {
    BinaryString r = reversed(s);
    for (char& c : r) c = (c == '0') ? '1' : '0';
    return r;
}

BinaryString pad(const BinaryString& s, Content target) {
    Content c = content(s);
    if (target.zeros < c.zeros || target.ones < c.ones)
        throw ContentTooSmall("pad target smaller than content of \"" + s + "\"");
    return repeat('0', target.zeros - c.zeros) + s + repeat('1', target.ones - c.ones);
}

// Path from the NE corner of the k x (n-k) rectangle: 0 steps left, 1 steps down.
// Row r of the diagram has as many boxes as 0s occurring after the r-th 1.
Partition to_partition(const BinaryString& s) {
    Content c = content(s);
    Partition p;
    p.rows = c.ones;
    p.cols = c.zeros;
    int zeros_after = c.zeros;
    for (char ch : s) {
        if (ch == '0')
            --zeros_after;
        else
            p.parts.push_back(zeros_after);
    }
    return p;
}

BinaryString from_partition(const Partition& p) {
    if (static_cast<int>(p.parts.size()) != p.rows)
        throw std::invalid_argument("partition row count does not match ambient rectangle");
    for (size_t r = 0; r < p.parts.size(); ++r) {
        if (p.parts[r] < 0 || p.parts[r] > p.cols || (r > 0 && p.parts[r] > p.parts[r - 1]))
            throw std::invalid_argument("partition does not fit its ambient rectangle");
    }
    BinaryString s;
    int zeros_left = p.cols;
    for (int r = 0; r < p.rows; ++r) {
        while (zeros_left > p.parts[static_cast<size_t>(r)]) {
            s += '0';
            --zeros_left;
        }
        s += '1';
    }
    s += repeat('0', zeros_left);
    return s;
}

int inversions(const BinaryString& s) {
    int ones = 0, inv = 0;
    for (char ch : s) {
        if (ch == '1')
            ++ones;
        else
            inv += ones;
    }
    return inv;
}

std::vector<BinaryString> strings_with_content(Content c) {
    std::vector<BinaryString> out;
    BinaryString s = sorted_string(c);
    do {
        out.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

std::vector<BinaryString> strings_of_length(int n) {
    std::vector<BinaryString> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        BinaryString s(static_cast<size_t>(n), '0');
        for (int i = 0; i < n; ++i)
            if (m >> (n - 1 - i) & 1) s[static_cast<size_t>(i)] = '1';
        out.push_back(s);
    }
    return out;
}

std::string display(const BinaryString& s) { return s.empty() ? "-" : s; }

}  // namespace puzzle
