#include "puzzle/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "puzzle/lrcalc.hpp"
#include "puzzle/tiler.hpp"

namespace puzzle {

namespace {

using Words = std::vector<BinaryString>;

const PieceSet kH{};
const PieceSet kHDelta{false, true, false};
const PieceSet kHEqvt{true, false, false};

std::int64_t cached_count(const BoundarySpec& b, PieceSet set, bool signed_sum) {
    static std::mutex mu;
    static std::unordered_map<std::string, std::int64_t> cache;
    std::string key = boundary_text(b) + "|" + piece_set_name(set) + (signed_sum ? "|s" : "|c");
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    std::int64_t v = signed_sum ? sign_sum(b, set) : count(b, set);
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() > 2000000) cache.clear();
    cache.emplace(std::move(key), v);
    return v;
}

std::int64_t cnt(const BoundarySpec& b) { return cached_count(b, kH, false); }
std::int64_t ksum(const BoundarySpec& b) { return cached_count(b, kHDelta, true); }

void need(const TheoremParams& p, size_t words, size_t ints = 0) {
    if (p.words.size() != words || p.ints.size() != ints)
        throw HypothesisViolated("expected " + std::to_string(words) + " strings and " + std::to_string(ints) +
                                 " integers");
    for (const auto& w : p.words) require_binary(w);
}

void hyp(bool ok, const std::string& what) {
    if (!ok) throw HypothesisViolated(what);
}

bool same(const BinaryString& a, const BinaryString& b) { return content(a) == content(b); }

VerificationReport report(const std::string& id, const TheoremParams& p, Words labels,
                          const std::vector<std::int64_t>& values) {
    VerificationReport r;
    r.id = id;
    r.params = p;
    r.labels = std::move(labels);
    for (auto v : values) r.values.push_back(std::to_string(v));
    r.pass = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
    return r;
}

BinaryString cat(std::initializer_list<BinaryString> parts) {
    BinaryString s;
    for (const auto& x : parts) s += x;
    return s;
}

BoundarySpec hex_checked(const Words& w) {
    BoundarySpec b;
    try {
        b = hexagon_boundary({w[0], w[1], w[2], w[3], w[4], w[5]});
    } catch (const InfeasibleShape& e) {
        throw HypothesisViolated(e.what());
    }
    auto f = content_feasible(b);
    hyp(f.ok, "hexagon contents: " + f.violated);
    return b;
}

std::string hex_label(const Words& w) {
    std::string s = "hex:";
    for (size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + display(w[k]);
    return s;
}

VerificationReport permuted_hex(const std::string& id, const TheoremParams& p, const Words& w,
                                const std::vector<std::array<int, 6>>& perms) {
    hex_checked(w);
    Words labels;
    std::vector<std::int64_t> values;
    for (const auto& perm : perms) {
        Words v(6);
        for (int k = 0; k < 6; ++k) v[static_cast<size_t>(k)] = w[static_cast<size_t>(perm[static_cast<size_t>(k)])];
        labels.push_back(hex_label(v));
        values.push_back(cnt(hex_checked(v)));
    }
    return report(id, p, labels, values);
}

std::vector<std::array<int, 6>> pair_swaps(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::array<int, 6>> out;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
        for (size_t k = 0; k < pairs.size(); ++k)
            if (mask & (1u << k)) std::swap(perm[static_cast<size_t>(pairs[k].first)], perm[static_cast<size_t>(pairs[k].second)]);
        out.push_back(perm);
    }
    return out;
}

// Split family: Δ_{αγ,ν,δβ} and its swaps; the K form reads Δ_{αγ,δβ,ν}.
VerificationReport split_like(const std::string& id, const TheoremParams& p, bool k_theory) {
    need(p, 5);
    const auto &al = p.words[0], &be = p.words[1], &ga = p.words[2], &de = p.words[3], &nu = p.words[4];
    hyp(same(al, be), "alpha and beta need equal content");
    hyp(same(ga, de), "gamma and delta need equal content");
    hyp(content(nu) == content(al) + content(ga), "nu needs the content of alpha plus gamma");
    const std::array<std::array<BinaryString, 4>, 4> cfg{{{al, ga, de, be}, {be, ga, de, al}, {al, de, ga, be}, {be, de, ga, al}}};
    Words labels;
    std::vector<std::int64_t> values;
    for (const auto& c : cfg) {
        BinaryString left = c[0] + c[1], right = c[2] + c[3];
        if (k_theory) {
            labels.push_back("tri:" + display(left) + "," + display(right) + "," + display(nu));
            values.push_back(ksum(triangle_boundary(left, right, nu)));
        } else {
            labels.push_back("tri:" + display(left) + "," + display(nu) + "," + display(right));
            values.push_back(cnt(triangle_boundary(left, nu, right)));
        }
    }
    return report(id, p, labels, values);
}

VerificationReport trapezoid_like(const std::string& id, const TheoremParams& p, bool k_theory) {
    need(p, 4);
    const auto &be = p.words[0], &ga = p.words[1], &nu = p.words[2], &de = p.words[3];
    hyp(ga.size() == de.size(), "gamma and delta need equal length");
    hyp(nu.size() == be.size() + ga.size(), "nu needs length |beta|+|gamma|");
    hyp(content(nu) == content(be) + content(ga) || content(nu) == content(be) + content(de),
        "nu needs the content of beta plus gamma");
    Words labels{"trap:" + display(be) + "," + display(ga) + "," + display(nu) + "," + display(de),
                 "trap:" + display(be) + "," + display(de) + "," + display(nu) + "," + display(ga)};
    auto b1 = trapezoid_boundary(be, ga, nu, de), b2 = trapezoid_boundary(be, de, nu, ga);
    if (k_theory) return report(id, p, labels, {ksum(b1), ksum(b2)});
    return report(id, p, labels, {cnt(b1), cnt(b2)});
}

VerificationReport parallelogram_like(const std::string& id, const TheoremParams& p, bool k_theory) {
    need(p, 4);
    const auto &al = p.words[0], &ga = p.words[1], &be = p.words[2], &de = p.words[3];
    hyp(al.size() == be.size(), "alpha and beta need equal length");
    hyp(ga.size() == de.size(), "gamma and delta need equal length");
    const std::array<std::array<BinaryString, 4>, 4> cfg{{{al, ga, be, de}, {be, ga, al, de}, {al, de, be, ga}, {be, de, al, ga}}};
    Words labels;
    std::vector<std::int64_t> values;
    for (const auto& c : cfg) {
        auto b = parallelogram_boundary(c[0], c[1], c[2], c[3]);
        labels.push_back("par:" + display(c[0]) + "," + display(c[1]) + "," + display(c[2]) + "," + display(c[3]));
        values.push_back(k_theory ? ksum(b) : cnt(b));
    }
    return report(id, p, labels, values);
}

VerificationReport rhombus(const TheoremParams& p) {
    need(p, 4);
    for (const auto& w : p.words) hyp(same(w, p.words[0]), "all four sides need equal content");
    std::array<int, 4> perm{0, 1, 2, 3};
    Words labels;
    std::vector<std::int64_t> values;
    do {
        const auto& w = p.words;
        auto b = parallelogram_boundary(w[static_cast<size_t>(perm[0])], w[static_cast<size_t>(perm[1])],
                                        w[static_cast<size_t>(perm[2])], w[static_cast<size_t>(perm[3])]);
        labels.push_back("par:" + display(w[static_cast<size_t>(perm[0])]) + "," + display(w[static_cast<size_t>(perm[1])]) +
                         "," + display(w[static_cast<size_t>(perm[2])]) + "," + display(w[static_cast<size_t>(perm[3])]));
        values.push_back(cnt(b));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return report("RHOMBUS", p, labels, values);
}

VerificationReport hex_180(const TheoremParams& p) {
    need(p, 6);
    const auto& w = p.words;
    const auto &al = w[0], &be = w[1], &ga = w[2], &de = w[3], &ep = w[4], &ze = w[5];
    auto b1 = hex_checked(w);
    Words rot{de, ep, ze, al, be, ga};
    auto b2 = hex_checked(rot);
    std::int64_t lr1 = lr_or_zero(cat({sorted(al), be, ga}), cat({sorted(ga), de, sorted(ep)}), reversed(cat({ep, ze, al})));
    std::int64_t lr2 = lr_or_zero(cat({sorted(de), ep, ze}), cat({sorted(ze), al, sorted(be)}), reversed(cat({be, ga, de})));
    return report("HEX_180", p, {hex_label(w), hex_label(rot), "LR of completion", "LR of rotated completion"},
                  {cnt(b1), cnt(b2), lr1, lr2});
}

VerificationReport hex_threeway(const TheoremParams& p) {
    need(p, 6);
    const auto& w = p.words;
    hyp(same(w[0], w[2]) && same(w[0], w[4]), "alpha, gamma, epsilon need equal content");
    hyp(same(w[1], w[3]) && same(w[1], w[5]), "beta, delta, zeta need equal content");
    std::vector<std::array<int, 6>> perms;
    std::array<int, 3> odd{0, 2, 4};
    do {
        std::array<int, 3> even{1, 3, 5};
        do {
            perms.push_back({odd[0], even[0], odd[1], even[1], odd[2], even[2]});
        } while (std::next_permutation(even.begin(), even.end()));
    } while (std::next_permutation(odd.begin(), odd.end()));
    return permuted_hex("HEX_THREEWAY", p, w, perms);
}

VerificationReport hex_allway(const TheoremParams& p) {
    need(p, 6);
    const auto& w = p.words;
    for (const auto& x : w) hyp(same(x, w[0]), "all six sides need equal content");
    std::vector<std::array<int, 6>> perms;
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return permuted_hex("HEX_ALLWAY", p, w, perms);
}

// ---- formulas -------------------------------------------------------------

VerificationReport split_formula(const TheoremParams& p) {
    need(p, 5);
    const auto &al = p.words[0], &be = p.words[1], &ga = p.words[2], &de = p.words[3], &nu = p.words[4];
    hyp(same(al, be) && same(ga, de), "pairs need equal content");
    hyp(content(nu) == content(al) + content(ga), "nu needs the content of alpha plus gamma");
    std::int64_t sum = 0;
    for (const auto& la : strings_with_content(content(al))) {
        std::int64_t x = lr_or_zero(al, la, reversed(be));
        if (!x) continue;
        for (const auto& mu : strings_with_content(content(ga))) {
            std::int64_t y = lr_or_zero(ga, mu, reversed(de));
            if (y) sum += x * y * lr_padded_or_zero(la, mu, nu);
        }
    }
    return report("SPLIT_FORMULA", p, {"tri:" + display(al + ga) + "," + display(nu) + "," + display(de + be), "formula"},
                  {cnt(triangle_boundary(al + ga, nu, de + be)), sum});
}

VerificationReport trapezoid_formula(const TheoremParams& p) {
    need(p, 4);
    const auto &be = p.words[0], &ga = p.words[1], &nu = p.words[2], &de = p.words[3];
    hyp(same(ga, de), "gamma and delta need equal content");
    hyp(content(nu) == content(be) + content(ga), "nu needs the content of beta plus gamma");
    std::int64_t sum = 0;
    for (const auto& mu : strings_with_content(content(ga))) {
        std::int64_t y = lr_or_zero(ga, mu, reversed(de));
        if (y) sum += y * lr_padded_or_zero(reversed(be), mu, nu);
    }
    return report("TRAPEZOID_FORMULA", p,
                  {"trap:" + display(be) + "," + display(ga) + "," + display(nu) + "," + display(de), "formula"},
                  {cnt(trapezoid_boundary(be, ga, nu, de)), sum});
}

VerificationReport trapezoid_d(const TheoremParams& p) {
    need(p, 3);
    const auto &la = p.words[0], &mu = p.words[1], &nu = p.words[2];
    hyp(content(nu) == content(la) + content(mu), "nu needs the content of lambda plus mu");
    auto b = trapezoid_boundary(reversed(la), sorted(mu), nu, reversed(mu));
    return report("TRAPEZOID_D", p, {"trap:" + display(reversed(la)) + "," + display(sorted(mu)) + "," + display(nu) + "," + display(reversed(mu)), "padded LR"},
                  {cnt(b), lr_coeff_padded(la, mu, nu)});
}

VerificationReport para_formula(const TheoremParams& p) {
    need(p, 4);
    const auto &al = p.words[0], &ga = p.words[1], &be = p.words[2], &de = p.words[3];
    hyp(same(al, be) && same(ga, de), "pairs need equal content");
    int a0 = content(al).zeros, a1 = content(al).ones, c0 = content(ga).zeros, c1 = content(ga).ones;
    std::int64_t sum = 0;
    std::string which;
    if (a0 >= c0 && a1 > c1) {
        which = "case 1";
        for (const auto& mu : strings_with_content(content(ga)))
            sum += lr_or_zero(al, be, mu + repeat('1', a1 - c1) + repeat('0', a0 - c0)) * lr_or_zero(ga, de, reversed(mu));
    } else if (c1 >= a1 && c0 > a0) {
        which = "case 2";
        for (const auto& la : strings_with_content(content(al)))
            sum += lr_or_zero(al, be, reversed(la)) * lr_or_zero(ga, de, repeat('1', c1 - a1) + repeat('0', c0 - a0) + la);
    } else if (a0 >= c0 && c1 >= a1) {
        which = "case 3";
        for (const auto& eta : strings_with_content({c0, a1}))
            sum += lr_or_zero(al, be, reversed(eta) + repeat('0', a0 - c0)) * lr_or_zero(ga, de, repeat('1', c1 - a1) + eta);
    } else {
        which = "case 4";
    }
    auto r = report("PARA_FORMULA", p, {"par:" + display(al) + "," + display(ga) + "," + display(be) + "," + display(de), "formula"},
                    {cnt(parallelogram_boundary(al, ga, be, de)), sum});
    r.note = which;
    return r;
}

VerificationReport hex_formula(const TheoremParams& p) {
    need(p, 6);
    const auto& w = p.words;
    auto b = hex_checked(w);
    const auto &al = w[0], &be = w[1], &ga = w[2], &de = w[3], &ep = w[4], &ze = w[5];
    int a0 = content(al).zeros, a1 = content(al).ones, b0 = content(be).zeros;
    int c0 = content(ga).zeros, c1 = content(ga).ones, e0 = content(ep).zeros, e1 = content(ep).ones;
    int z1 = content(ze).ones;
    BinaryString left = repeat('0', b0) + reversed(al) + repeat('1', z1);
    BinaryString top = repeat('1', c1) + de + repeat('0', e0);
    BinaryString rhs = reversed(ep + ze);
    std::int64_t sum = 0;
    for (const auto& mu : strings_with_content(content(be + ga))) {
        BinaryString s = repeat('0', a0) + mu + repeat('1', a1);
        if (static_cast<int>(s.size()) < c0 + e1) continue;
        if (s.compare(0, static_cast<size_t>(c0), repeat('0', c0)) != 0) continue;
        if (s.compare(s.size() - static_cast<size_t>(e1), static_cast<size_t>(e1), repeat('1', e1)) != 0) continue;
        BinaryString theta = s.substr(static_cast<size_t>(c0), s.size() - static_cast<size_t>(c0 + e1));
        std::int64_t y = lr_or_zero(be + ga, mu, rhs);
        if (y) sum += y * lr_or_zero(left, theta, top);
    }
    return report("HEX_FORMULA", p, {hex_label(w), "formula"}, {cnt(b), sum});
}

VerificationReport hex_threeway_formula(const TheoremParams& p) {
    need(p, 6);
    const auto& w = p.words;
    hyp(same(w[0], w[2]) && same(w[0], w[4]), "alpha, gamma, epsilon need equal content");
    hyp(same(w[1], w[3]) && same(w[1], w[5]), "beta, delta, zeta need equal content");
    auto b = hex_checked(w);
    const auto &al = w[0], &be = w[1], &ga = w[2], &de = w[3], &ep = w[4], &ze = w[5];
    auto A = strings_with_content(content(al)), B = strings_with_content(content(be));
    std::int64_t sum = 0;
    for (const auto& la : B)
        for (const auto& rho : B) {
            std::int64_t x = lr_or_zero(rho, la, reversed(de));
            if (!x) continue;
            for (const auto& mu : A) {
                std::int64_t y = lr_padded_or_zero(la, mu, be + ga);
                if (!y) continue;
                for (const auto& si : A) {
                    std::int64_t z = lr_or_zero(mu, si, reversed(al));
                    if (z) sum += x * y * z * lr_padded_or_zero(rho, si, ep + ze);
                }
            }
        }
    return report("HEX_THREEWAY_FORMULA", p, {hex_label(w), "formula"}, {cnt(b), sum});
}

VerificationReport hex_allway_formula(const TheoremParams& p) {
    need(p, 6);
    const auto& w = p.words;
    for (const auto& x : w) hyp(same(x, w[0]), "all six sides need equal content");
    auto b = hex_checked(w);
    const auto &al = w[0], &be = w[1], &ga = w[2], &de = w[3], &ep = w[4], &ze = w[5];
    auto S = strings_with_content(content(al));
    std::int64_t sum = 0;
    for (const auto& mu : S)
        for (const auto& xi : S) {
            std::int64_t f1 = lr_or_zero(be, xi, mu);
            if (!f1) continue;
            for (const auto& la : S) {
                std::int64_t f2 = lr_or_zero(reversed(la), reversed(xi), reversed(ga));
                if (!f2) continue;
                for (const auto& rho : S) {
                    std::int64_t f3 = lr_or_zero(rho, la, reversed(de));
                    if (!f3) continue;
                    for (const auto& tau : S) {
                        std::int64_t f4 = lr_or_zero(ep, tau, rho);
                        if (!f4) continue;
                        for (const auto& si : S) {
                            std::int64_t f5 = lr_or_zero(reversed(si), reversed(tau), reversed(ze));
                            if (f5) sum += f1 * f2 * f3 * f4 * f5 * lr_or_zero(mu, si, reversed(al));
                        }
                    }
                }
            }
        }
    return report("HEX_ALLWAY_FORMULA", p, {hex_label(w), "formula"}, {cnt(b), sum});
}

std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

VerificationReport hex_allway_count(const TheoremParams& p) {
    need(p, 6);
    const auto& w = p.words;
    for (const auto& x : w) hyp(same(x, w[0]), "all six sides need equal content");
    auto b = hex_checked(w);
    bool all_sorted = std::all_of(w.begin(), w.end(), [&](const BinaryString& x) { return x == sorted(w[0]); });
    Content c = content(w[0]);
    std::int64_t expect = all_sorted ? binomial(c.size(), c.ones) : 0;
    return report("HEX_ALLWAY_COUNT", p, {hex_label(w), "binomial rule"}, {cnt(b), expect});
}

VerificationReport equality_lr(const TheoremParams& p) {
    need(p, 3);
    const auto &la = p.words[0], &mu = p.words[1], &nu = p.words[2];
    hyp(content(nu) == content(la) + content(mu), "nu needs the content of lambda plus mu");
    Content c = content(nu);
    BinaryString lp = pad(la, c), mp = pad(mu, c);
    return report("EQUALITY_LR", p,
                  {"tri:" + display(sorted(la) + sorted(mu)) + "," + display(nu) + "," + display(reversed(la + mu)),
                   "tri:" + display(lp) + "," + display(mp) + "," + display(reversed(nu)), "LR of sorted concatenation",
                   "padded LR"},
                  {cnt(triangle_boundary(sorted(la) + sorted(mu), nu, reversed(la + mu))),
                   cnt(triangle_boundary(lp, mp, reversed(nu))), lr_coeff(sorted(la) + sorted(mu), nu, la + mu),
                   lr_coeff_padded(la, mu, nu)});
}

// ---- sweeps ---------------------------------------------------------------

using Gen = std::function<void(const TheoremParams&)>;

void product(const std::vector<std::vector<BinaryString>>& choices, const Gen& emit, std::vector<int> ints = {}) {
    Words cur(choices.size());
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == choices.size()) {
            emit({cur, ints});
            return;
        }
        for (const auto& s : choices[k]) {
            cur[k] = s;
            rec(k + 1);
        }
    };
    rec(0);
}

void split_family(int bound, const Gen& emit) {
    for (int n = 1; n <= bound; ++n)
        for (int a = 0; a <= n; ++a)
            for (int a1 = 0; a1 <= a; ++a1)
                for (int c1 = 0; c1 <= n - a; ++c1) {
                    int c = n - a;
                    auto A = strings_with_content({a - a1, a1}), C = strings_with_content({c - c1, c1});
                    product({A, A, C, C, strings_with_content({n - a1 - c1, a1 + c1})}, emit);
                }
}

void trapezoid_family(int bound, bool matched_only, const Gen& emit) {
    for (int n = 1; n <= bound; ++n)
        for (int a = 0; a <= n; ++a) {
            int c = n - a;
            for (const auto& be : strings_of_length(a))
                for (const auto& ga : strings_of_length(c))
                    for (const auto& de : strings_of_length(c)) {
                        if (matched_only && !same(ga, de)) continue;
                        for (const auto& nu : strings_with_content(content(be) + content(ga))) emit({{be, ga, nu, de}, {}});
                    }
        }
}

void parallelogram_family(int bound, bool matched_only, const Gen& emit) {
    for (int n = 1; n <= bound; ++n)
        for (int a = 0; a <= n; ++a) {
            int c = n - a;
            for (const auto& al : strings_of_length(a))
                for (const auto& be : strings_of_length(a)) {
                    if (matched_only && !same(al, be)) continue;
                    for (const auto& ga : strings_of_length(c))
                        for (const auto& de : strings_of_length(c)) {
                            if (matched_only && !same(ga, de)) continue;
                            emit({{al, ga, be, de}, {}});
                        }
                }
        }
}

// Every content-feasible labelling of every hexagon with perimeter <= bound
// whose side contents satisfy the predicate (ones per side, lengths).
void hexagon_family(int bound, const std::function<bool(const std::array<int, 6>&, const std::array<int, 6>&)>& pred,
                    const Gen& emit) {
    for (const auto& L : hexagon_shapes(bound)) {
        std::array<int, 6> k{};
        std::function<void(int)> rec = [&](int s) {
            if (s == 6) {
                if (k[1] + k[2] != k[4] + k[5] || k[0] + k[1] != k[3] + k[4] || k[2] + k[3] != k[5] + k[0]) return;
                if (!pred(L, k)) return;
                std::vector<std::vector<BinaryString>> choices;
                for (int t = 0; t < 6; ++t)
                    choices.push_back(strings_with_content({L[static_cast<size_t>(t)] - k[static_cast<size_t>(t)], k[static_cast<size_t>(t)]}));
                product(choices, emit);
                return;
            }
            for (int x = 0; x <= L[static_cast<size_t>(s)]; ++x) {
                k[static_cast<size_t>(s)] = x;
                rec(s + 1);
            }
        };
        rec(0);
    }
}

bool eq_sides(const std::array<int, 6>& L, const std::array<int, 6>& k, int i, int j) {
    return L[static_cast<size_t>(i)] == L[static_cast<size_t>(j)] && k[static_cast<size_t>(i)] == k[static_cast<size_t>(j)];
}

std::string sweep_key(const TheoremParams& p) {
    std::string s;
    for (const auto& w : p.words) s += w;
    s += '|';
    for (const auto& w : p.words) s += w + ",";
    for (int x : p.ints) s += std::to_string(x) + ",";
    return s;
}

}  // namespace

std::vector<std::array<int, 6>> hexagon_shapes(int max_perimeter) {
    std::vector<std::array<int, 6>> out;
    for (int n = 0; n <= max_perimeter; ++n)
        for (int bl = 0; bl <= n; ++bl)
            for (int top = 0; bl + top <= n; ++top)
                for (int br = 0; br + top <= n && br + bl <= n; ++br) {
                    std::array<int, 6> L{bl, n - bl - top, top, n - top - br, br, n - br - bl};
                    if (std::accumulate(L.begin(), L.end(), 0) <= max_perimeter) out.push_back(L);
                }
    return out;
}

const std::vector<TheoremInfo>& theorem_catalog() {
    static const std::vector<TheoremInfo> info{
        {"SPLIT", TheoremKind::Commutativity, "alpha,beta,gamma,delta,nu", 6, "completed size"},
        {"TRAPEZOID", TheoremKind::Commutativity, "beta,gamma,nu,delta", 6, "completed size"},
        {"PARALLELOGRAM", TheoremKind::Commutativity, "alpha,gamma,beta,delta", 6, "completed size"},
        {"RHOMBUS", TheoremKind::Commutativity, "alpha,gamma,beta,delta", 6, "completed size"},
        {"HEX_180", TheoremKind::Commutativity, "alpha,beta,gamma,delta,epsilon,zeta", 14, "perimeter"},
        {"HEX_OPPOSITE", TheoremKind::Commutativity, "alpha,beta,gamma,delta,epsilon,zeta", 14, "perimeter"},
        {"HEX_TWOWAY", TheoremKind::Commutativity, "alpha,beta,gamma,delta,epsilon,zeta", 14, "perimeter"},
        {"PENTAGON", TheoremKind::Commutativity, "beta,gamma,delta,epsilon,zeta", 14, "perimeter"},
        {"HEX_THREEWAY", TheoremKind::Commutativity, "alpha,beta,gamma,delta,epsilon,zeta", 14, "perimeter"},
        {"HEX_ALLWAY", TheoremKind::Commutativity, "alpha,beta,gamma,delta,epsilon,zeta", 14, "perimeter"},
        {"SPLIT_K", TheoremKind::Commutativity, "alpha,beta,gamma,delta,nu", 5, "completed size"},
        {"TRAPEZOID_K", TheoremKind::Commutativity, "beta,gamma,nu,delta", 5, "completed size"},
        {"PARALLELOGRAM_K", TheoremKind::Commutativity, "alpha,gamma,beta,delta", 5, "completed size"},
        {"SPLIT_FORMULA", TheoremKind::Formula, "alpha,beta,gamma,delta,nu", 6, "completed size"},
        {"TRAPEZOID_FORMULA", TheoremKind::Formula, "beta,gamma,nu,delta", 6, "completed size"},
        {"TRAPEZOID_D", TheoremKind::Formula, "lambda,mu,nu", 6, "completed size"},
        {"PARA_FORMULA", TheoremKind::Formula, "alpha,gamma,beta,delta", 6, "completed size"},
        {"HEX_FORMULA", TheoremKind::Formula, "alpha,beta,gamma,delta,epsilon,zeta", 14, "perimeter"},
        {"HEX_THREEWAY_FORMULA", TheoremKind::Formula, "alpha,beta,gamma,delta,epsilon,zeta", 14, "perimeter"},
        {"HEX_ALLWAY_FORMULA", TheoremKind::Formula, "alpha,beta,gamma,delta,epsilon,zeta", 14, "perimeter"},
        {"HEX_ALLWAY_COUNT", TheoremKind::Formula, "alpha,beta,gamma,delta,epsilon,zeta", 4, "side length"},
        {"EQUALITY_LR", TheoremKind::Formula, "lambda,mu,nu", 3, "length of lambda and mu"},
        {"EQVT_PARALLELOGRAM", TheoremKind::Other, "alpha,gamma,beta,delta", 3, "length of each side"},
        {"PENTAGON_LEMMA", TheoremKind::Other, "a0,a1,c0,c1", 3, "each parameter"},
    };
    return info;
}

const TheoremInfo& theorem_info(const std::string& id) {
    for (const auto& t : theorem_catalog())
        if (t.id == id) return t;
    throw UnknownTheorem("unknown theorem id " + id);
}

VerificationReport verify_commutativity(const std::string& id, const TheoremParams& p) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    if (id == "SPLIT") r = split_like(id, p, false);
    else if (id == "SPLIT_K") r = split_like(id, p, true);
    else if (id == "TRAPEZOID") r = trapezoid_like(id, p, false);
    else if (id == "TRAPEZOID_K") r = trapezoid_like(id, p, true);
    else if (id == "PARALLELOGRAM") r = parallelogram_like(id, p, false);
    else if (id == "PARALLELOGRAM_K") r = parallelogram_like(id, p, true);
    else if (id == "RHOMBUS") r = rhombus(p);
    else if (id == "HEX_180") r = hex_180(p);
    else if (id == "HEX_OPPOSITE") {
        need(p, 6);
        const auto& w = p.words;
        hyp(same(w[0], w[3]) && same(w[1], w[4]) && same(w[2], w[5]), "opposite sides need equal content");
        r = permuted_hex(id, p, w, pair_swaps({{0, 3}, {1, 4}, {2, 5}}));
    } else if (id == "HEX_TWOWAY") {
        need(p, 6);
        const auto& w = p.words;
        hyp(same(w[1], w[5]) && same(w[2], w[4]), "beta,zeta and gamma,epsilon need equal content");
        r = permuted_hex(id, p, w, pair_swaps({{1, 5}, {2, 4}}));
    } else if (id == "PENTAGON") {
        need(p, 5);
        const auto& w = p.words;
        hyp(same(w[0], w[4]) && same(w[1], w[3]), "beta,zeta and gamma,epsilon need equal content");
        r = permuted_hex(id, p, {"", w[0], w[1], w[2], w[3], w[4]}, pair_swaps({{1, 5}, {2, 4}}));
    } else if (id == "HEX_THREEWAY") r = hex_threeway(p);
    else if (id == "HEX_ALLWAY") r = hex_allway(p);
    else throw UnknownTheorem("unknown commutativity id " + id);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

VerificationReport verify_formula(const std::string& id, const TheoremParams& p) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    if (id == "SPLIT_FORMULA") r = split_formula(p);
    else if (id == "TRAPEZOID_FORMULA") r = trapezoid_formula(p);
    else if (id == "TRAPEZOID_D") r = trapezoid_d(p);
    else if (id == "PARA_FORMULA") r = para_formula(p);
    else if (id == "HEX_FORMULA") r = hex_formula(p);
    else if (id == "HEX_THREEWAY_FORMULA") r = hex_threeway_formula(p);
    else if (id == "HEX_ALLWAY_FORMULA") r = hex_allway_formula(p);
    else if (id == "HEX_ALLWAY_COUNT") r = hex_allway_count(p);
    else if (id == "EQUALITY_LR") r = equality_lr(p);
    else throw UnknownTheorem("unknown formula id " + id);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

VerificationReport verify_equivariant_parallelogram(const BinaryString& alpha, const BinaryString& gamma,
                                                    const BinaryString& beta, const BinaryString& delta) {
    auto t0 = std::chrono::steady_clock::now();
    TheoremParams p{{alpha, gamma, beta, delta}, {}};
    need(p, 4);
    hyp(same(alpha, beta), "alpha and beta need equal content");
    hyp(same(gamma, delta), "gamma and delta need equal content");
    const int a = static_cast<int>(alpha.size()), c = static_cast<int>(gamma.size()), n = a + c;
    const std::array<std::array<BinaryString, 4>, 4> cfg{{{alpha, gamma, beta, delta},
                                                          {beta, gamma, alpha, delta},
                                                          {alpha, delta, beta, gamma},
                                                          {beta, delta, alpha, gamma}}};
    auto phi_a = reversal(n, 1, a), phi_c = reversal(n, a + 1, n);
    std::vector<Polynomial> polys;
    std::vector<std::int64_t> counts, h_counts;
    for (const auto& q : cfg) {
        auto b = parallelogram_boundary(q[0], q[1], q[2], q[3]);
        polys.push_back(poly_sum(b, kHEqvt));
        counts.push_back(count(b, kHEqvt));
        h_counts.push_back(count(b, kH));
    }
    std::vector<Polynomial> acted{polys[0], polys[1].substitute(phi_a), polys[2].substitute(phi_c),
                                  polys[3].substitute(phi_a).substitute(phi_c)};
    VerificationReport r;
    r.id = "EQVT_PARALLELOGRAM";
    r.params = p;
    r.labels = {"weight", "Phi_a weight after swapping alpha,beta", "Phi_c weight after swapping gamma,delta",
                "Phi_c Phi_a weight after both swaps"};
    for (const auto& x : acted) r.values.push_back(x.to_string());
    bool ok = std::all_of(acted.begin(), acted.end(), [&](const Polynomial& x) { return x == acted[0]; });
    for (size_t k = 0; k < 4; ++k) {
        r.labels.push_back("equivariant count " + std::to_string(k + 1));
        r.values.push_back(std::to_string(counts[k]));
        ok = ok && counts[k] == counts[0];
        ok = ok && polys[k].constant_term() == h_counts[k];
    }
    r.labels.push_back("base count");
    r.values.push_back(std::to_string(h_counts[0]));
    r.pass = ok;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

VerificationReport verify_unique_pentagon(int a0, int a1, int c0, int c1) {
    auto t0 = std::chrono::steady_clock::now();
    TheoremParams p{{}, {a0, a1, c0, c1}};
    hyp(a0 >= 0 && a1 >= 0 && c0 >= 0 && c1 >= 0, "parameters must be non-negative");
    auto b = lemma_pentagon_boundary(a0, a1, c0, c1);
    auto fills = enumerate(b, kHDelta);
    bool good = a0 >= c0 || c1 >= a1;
    VerificationReport r;
    r.id = "PENTAGON_LEMMA";
    r.params = p;
    r.labels = {"fillings", "expected fillings"};
    r.values = {std::to_string(fills.size()), good ? "1" : "0"};
    if (good) {
        BinaryString se = repeat('1', std::max(0, c1 - a1)) + repeat('0', std::max(0, c0 - a0));
        BinaryString s = repeat('1', std::min(a1, c1)) + repeat('0', std::min(a0, c0));
        BinaryString sw = repeat('1', std::max(0, a1 - c1)) + repeat('0', std::max(0, a0 - c0));
        r.labels.insert(r.labels.end(), {"expected SE", "expected S", "expected SW"});
        r.values.insert(r.values.end(), {display(se), display(s), display(sw)});
        r.pass = fills.size() == 1;
        if (r.pass) {
            auto sides = side_labels(b, fills.front(), kHDelta);
            bool h_only = uses_only_h(fills.front(), kHDelta);
            r.labels.insert(r.labels.end(), {"SE", "S", "SW", "only base pieces"});
            r.values.insert(r.values.end(), {display(sides[SideSE]), display(sides[SideS]), display(sides[SideSW]),
                                             h_only ? "yes" : "no"});
            r.pass = h_only && sides[SideSE] == se && sides[SideS] == s && sides[SideSW] == sw;
        }
    } else {
        r.pass = fills.empty();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

VerificationReport verify(const std::string& id, const TheoremParams& p) {
    const auto& info = theorem_info(id);
    if (info.kind == TheoremKind::Commutativity) return verify_commutativity(id, p);
    if (info.kind == TheoremKind::Formula) return verify_formula(id, p);
    if (id == "EQVT_PARALLELOGRAM") {
        need(p, 4);
        return verify_equivariant_parallelogram(p.words[0], p.words[1], p.words[2], p.words[3]);
    }
    need(p, 0, 4);
    return verify_unique_pentagon(p.ints[0], p.ints[1], p.ints[2], p.ints[3]);
}

std::vector<TheoremParams> sweep_instances(const std::string& id, int bound) {
    theorem_info(id);
    std::vector<TheoremParams> out;
    Gen emit = [&](const TheoremParams& p) { out.push_back(p); };
    auto all = [](const std::array<int, 6>&, const std::array<int, 6>&) { return true; };
    if (id == "SPLIT" || id == "SPLIT_K" || id == "SPLIT_FORMULA") {
        split_family(bound, emit);
    } else if (id == "TRAPEZOID" || id == "TRAPEZOID_K") {
        trapezoid_family(bound, false, emit);
    } else if (id == "TRAPEZOID_FORMULA") {
        trapezoid_family(bound, true, emit);
    } else if (id == "TRAPEZOID_D") {
        for (int n = 1; n <= bound; ++n)
            for (int q = 0; q <= n; ++q)
                for (const auto& la : strings_of_length(n - q))
                    for (const auto& mu : strings_of_length(q))
                        for (const auto& nu : strings_with_content(content(la) + content(mu))) emit({{la, mu, nu}, {}});
    } else if (id == "PARALLELOGRAM" || id == "PARALLELOGRAM_K") {
        parallelogram_family(bound, false, emit);
    } else if (id == "PARA_FORMULA") {
        parallelogram_family(bound, true, emit);
    } else if (id == "RHOMBUS") {
        for (int a = 1; 2 * a <= bound; ++a)
            for (int a1 = 0; a1 <= a; ++a1) {
                auto S = strings_with_content({a - a1, a1});
                product({S, S, S, S}, emit);
            }
    } else if (id == "HEX_180" || id == "HEX_FORMULA") {
        hexagon_family(bound, all, emit);
    } else if (id == "HEX_OPPOSITE") {
        hexagon_family(bound, [](const auto& L, const auto& k) {
            return eq_sides(L, k, 0, 3) && eq_sides(L, k, 1, 4) && eq_sides(L, k, 2, 5);
        }, emit);
    } else if (id == "HEX_TWOWAY") {
        hexagon_family(bound, [](const auto& L, const auto& k) { return eq_sides(L, k, 1, 5) && eq_sides(L, k, 2, 4); }, emit);
    } else if (id == "PENTAGON") {
        hexagon_family(bound, [](const auto& L, const auto& k) {
            return L[0] == 0 && eq_sides(L, k, 1, 5) && eq_sides(L, k, 2, 4);
        }, [&](const TheoremParams& p) { emit({{p.words[1], p.words[2], p.words[3], p.words[4], p.words[5]}, {}}); });
    } else if (id == "HEX_THREEWAY" || id == "HEX_THREEWAY_FORMULA") {
        hexagon_family(bound, [](const auto& L, const auto& k) {
            return eq_sides(L, k, 0, 2) && eq_sides(L, k, 0, 4) && eq_sides(L, k, 1, 3) && eq_sides(L, k, 1, 5);
        }, emit);
    } else if (id == "HEX_ALLWAY" || id == "HEX_ALLWAY_FORMULA") {
        hexagon_family(bound, [](const auto& L, const auto& k) {
            for (int s = 1; s < 6; ++s)
                if (!eq_sides(L, k, 0, s)) return false;
            return true;
        }, emit);
    } else if (id == "HEX_ALLWAY_COUNT") {
        for (int a = 1; a <= bound; ++a)
            for (int a1 = 0; a1 <= a; ++a1) {
                auto S = strings_with_content({a - a1, a1});
                product({S, S, S, S, S, S}, emit);
            }
    } else if (id == "EQUALITY_LR") {
        for (int p = 0; p <= bound; ++p)
            for (int q = 0; q <= bound; ++q)
                for (const auto& la : strings_of_length(p))
                    for (const auto& mu : strings_of_length(q))
                        for (const auto& nu : strings_with_content(content(la) + content(mu))) emit({{la, mu, nu}, {}});
    } else if (id == "EQVT_PARALLELOGRAM") {
        for (int a = 0; a <= bound; ++a)
            for (int c = 0; c <= bound; ++c) {
                if (a + c == 0) continue;
                for (int a1 = 0; a1 <= a; ++a1)
                    for (int c1 = 0; c1 <= c; ++c1) {
                        auto A = strings_with_content({a - a1, a1}), C = strings_with_content({c - c1, c1});
                        product({A, C, A, C}, emit);
                    }
            }
    } else if (id == "PENTAGON_LEMMA") {
        for (int a0 = 0; a0 <= bound; ++a0)
            for (int a1 = 0; a1 <= bound; ++a1)
                for (int c0 = 0; c0 <= bound; ++c0)
                    for (int c1 = 0; c1 <= bound; ++c1) emit({{}, {a0, a1, c0, c1}});
    }
    std::vector<std::pair<std::string, size_t>> keys;
    keys.reserve(out.size());
    for (size_t k = 0; k < out.size(); ++k) keys.emplace_back(sweep_key(out[k]), k);
    std::sort(keys.begin(), keys.end());
    std::vector<TheoremParams> sorted_out;
    sorted_out.reserve(out.size());
    for (const auto& [key, k] : keys) sorted_out.push_back(std::move(out[k]));
    return sorted_out;
}

std::vector<VerificationReport> sweep(const std::string& id, int bound, int threads) {
    auto instances = sweep_instances(id, bound);
    std::vector<VerificationReport> out(instances.size());
    auto run = [&](size_t k) { out[k] = verify(id, instances[k]); };
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(instances.size())));
    if (workers == 1) {
        for (size_t k = 0; k < instances.size(); ++k) run(k);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t k = next++; k < instances.size(); k = next++) run(k);
        });
    for (auto& t : pool) t.join();
    return out;
}

std::string params_text(const TheoremParams& p) {
    std::string s;
    for (const auto& w : p.words) s += (s.empty() ? "" : " ") + display(w);
    for (int x : p.ints) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

}  // namespace puzzle
