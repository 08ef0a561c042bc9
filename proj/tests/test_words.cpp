#include <doctest.h>

#include "puzzle/words.hpp"

using namespace puzzle;

TEST_CASE("content counts zeros then ones") {
    CHECK(content("") == Content{0, 0});
    CHECK(content("0011") == Content{2, 2});
    CHECK(content("1010") == Content{2, 2});
    CHECK_THROWS_AS(require_binary("012"), NotBinary);
    CHECK_FALSE(is_binary("10a"));
}

TEST_CASE("sort, reverse and dual") {
    CHECK(sorted("1010") == "0011");
    CHECK(sorted("0011") == "0011");
    CHECK(sorted("111") == "111");
    CHECK(reversed("0011") == "1100");
    CHECK(reversed("10") == "01");
    CHECK(dual("001") == "011");
    CHECK(dual("10") == "10");
}

TEST_CASE("pad adds leading zeros and trailing ones") {
    CHECK(pad("10", {2, 2}) == "0101");
    CHECK(pad("", {1, 1}) == "01");
    CHECK(pad("1010", {2, 2}) == "1010");
    CHECK_THROWS_AS(pad("11", {2, 1}), ContentTooSmall);
}

TEST_CASE("partitions follow the lattice path") {
    CHECK(to_partition("0011").size() == 0);
    CHECK(to_partition("1100").parts == std::vector<int>{2, 2});
    CHECK(to_partition("1010").parts == std::vector<int>{2, 1});
    CHECK(inversions("0011") == 0);
    CHECK(inversions("1100") == 4);
    CHECK(inversions("1010") == 3);
}

TEST_CASE("word operations satisfy their algebra") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& s : strings_of_length(n)) {
            CAPTURE(s);
            CHECK(reversed(reversed(s)) == s);
            CHECK(dual(dual(s)) == s);
            CHECK(content(sorted(s)) == content(s));
            CHECK(sorted(sorted(s)) == sorted(s));
            CHECK(inversions(sorted(s)) == 0);
            CHECK(to_partition(s).size() == inversions(s));
            CHECK(from_partition(to_partition(s)) == s);
            Content c = content(s);
            CHECK(inversions(reversed(s)) == c.zeros * c.ones - inversions(s));
            CHECK(inversions(dual(s)) == inversions(s));
            CHECK(pad(s, c) == s);
            CHECK(pad(s, c + Content{1, 2}) == "0" + s + "11");
        }
}

TEST_CASE("enumeration of strings is complete and sorted") {
    auto all = strings_of_length(6);
    CHECK(all.size() == 64);
    CHECK(std::is_sorted(all.begin(), all.end()));
    std::size_t total = 0;
    for (int k = 0; k <= 6; ++k) {
        auto w = strings_with_content({6 - k, k});
        CHECK(std::is_sorted(w.begin(), w.end()));
        for (const auto& s : w) CHECK(content(s) == Content{6 - k, k});
        total += w.size();
    }
    CHECK(total == 64);
    CHECK(strings_with_content({0, 0}) == std::vector<BinaryString>{""});
}

TEST_CASE("display writes the empty string as a dash") {
    CHECK(display("") == "-");
    CHECK(display("01") == "01");
}
