#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace puzzle {

// Binary strings are plain std::string over {'0','1'}, first character first.
using BinaryString = std::string;

struct Content {
    int zeros = 0;
    int ones = 0;

    int size() const { return zeros + ones; }
    friend bool operator==(const Content&, const Content&) = default;
    Content operator+(const Content& o) const { return {zeros + o.zeros, ones + o.ones}; }
};

struct Partition {
    std::vector<int> parts;  // weakly decreasing, one entry per row (zeros kept)
    int rows = 0;
    int cols = 0;

    int size() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

class ContentTooSmall : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotBinary : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_binary(const std::string& s);
void require_binary(const std::string& s);

Content content(const BinaryString& s);
BinaryString sorted(const BinaryString& s);
BinaryString reversed(const BinaryString& s);
BinaryString dual(const BinaryString& s);
BinaryString pad(const BinaryString& s, Content target);
BinaryString repeat(char c, int n);
BinaryString sorted_string(Content c);

Partition to_partition(const BinaryString& s);
BinaryString from_partition(const Partition& p);

// number of pairs i<j with s[i]=1, s[j]=0
int inversions(const BinaryString& s);

// all strings with the given content, in lexicographic order
std::vector<BinaryString> strings_with_content(Content c);
// all binary strings of length n, in lexicographic order
std::vector<BinaryString> strings_of_length(int n);

// "-" for the empty string, otherwise the string itself
std::string display(const BinaryString& s);

}  // namespace puzzle
