#include "puzzle/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace puzzle {

namespace {
void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}
int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }
}  // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da > db;
    size_t n = std::max(a.size(), b.size());
    for (size_t k = n; k-- > 0;) {
        int ea = k < a.size() ? a[k] : 0;
        int eb = k < b.size() ? b[k] : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

Polynomial Polynomial::constant(const BigInt& c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::variable(int index) {
    Monomial m(static_cast<size_t>(index), 0);
    m[static_cast<size_t>(index - 1)] = 1;
    Polynomial p;
    p.add_term(m, 1);
    return p;
}

Polynomial Polynomial::difference(int j, int i) { return variable(j) - variable(i); }

void Polynomial::add_term(Monomial m, const BigInt& c) {
    if (c == 0) return;
    trim(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

BigInt Polynomial::constant_term() const { return coefficient({}); }

BigInt Polynomial::coefficient(const Monomial& m) const {
    Monomial t = m;
    trim(t);
    auto it = terms_.find(t);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int Polynomial::total_degree() const { return terms_.empty() ? -1 : degree(terms_.begin()->first); }

int Polynomial::max_variable() const {
    int v = 0;
    for (const auto& [m, c] : terms_) v = std::max(v, static_cast<int>(m.size()));
    return v;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (size_t k = 0; k < ma.size(); ++k) m[k] += ma[k];
            for (size_t k = 0; k < mb.size(); ++k) m[k] += mb[k];
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::substitute(const std::vector<int>& perm) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial out;
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            size_t target = k < perm.size() ? static_cast<size_t>(perm[k] - 1) : k;
            if (out.size() <= target) out.resize(target + 1, 0);
            out[target] += m[k];
        }
        r.add_term(std::move(out), c);
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        BigInt mag = neg ? BigInt(-c) : c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "y" + std::to_string(k + 1);
            if (m[k] > 1) mono += "^" + std::to_string(m[k]);
        }
        if (mono.empty())
            s += mag.str();
        else if (mag == 1)
            s += mono;
        else
            s += mag.str() + "*" + mono;
    }
    return s;
}

std::vector<int> reversal(int n, int lo, int hi) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (int k = lo; k <= hi; ++k) perm[static_cast<size_t>(k - 1)] = lo + hi - k;
    return perm;
}

}  // namespace puzzle
