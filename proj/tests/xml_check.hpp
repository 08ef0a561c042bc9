// Minimal XML well-formedness check for the generated SVG: balanced tags,
// quoted attributes, a single root element.
#pragma once

#include <cctype>
#include <string>
#include <vector>

namespace xmlcheck {

inline bool well_formed(const std::string& s) {
    std::vector<std::string> stack;
    std::size_t i = 0, roots = 0;
    while (i < s.size()) {
        if (s[i] != '<') {
            if (s[i] == '&') {
                auto semi = s.find(';', i);
                if (semi == std::string::npos || semi - i > 6) return false;
            }
            if (stack.empty() && !std::isspace(static_cast<unsigned char>(s[i]))) return false;
            ++i;
            continue;
        }
        auto close = s.find('>', i);
        if (close == std::string::npos) return false;
        std::string tag = s.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?') {
            if (tag.back() != '?') return false;
            continue;
        }
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
            continue;
        }
        bool self_closing = tag.back() == '/';
        if (self_closing) tag.pop_back();
        std::size_t name_end = tag.find_first_of(" \t\n");
        std::string name = tag.substr(0, name_end);
        if (name.empty()) return false;
        // attributes: name="value" pairs
        std::size_t p = name_end;
        while (p != std::string::npos && p < tag.size()) {
            p = tag.find_first_not_of(" \t\n", p);
            if (p == std::string::npos) break;
            auto eq = tag.find('=', p);
            if (eq == std::string::npos || eq + 1 >= tag.size() || tag[eq + 1] != '"') return false;
            auto endq = tag.find('"', eq + 2);
            if (endq == std::string::npos) return false;
            p = endq + 1;
        }
        if (stack.empty()) ++roots;
        if (!self_closing) stack.push_back(name);
    }
    return stack.empty() && roots == 1;
}

inline int count_substr(const std::string& s, const std::string& needle) {
    int n = 0;
    for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

inline int count_tag(const std::string& s, const std::string& name) { return count_substr(s, "<" + name + " "); }

}  // namespace xmlcheck
