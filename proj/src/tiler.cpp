#include "puzzle/tiler.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace puzzle {

namespace {

constexpr std::uint8_t kUnset = 255;
constexpr std::uint8_t kInner = 3;  // glue label inside a rhombus

enum class Role : std::uint8_t { Whole, Upper, Lower };

struct Tile {
    int piece = 0;
    std::array<std::uint8_t, 3> lab{};
    Role role = Role::Whole;
    bool k = false;
};

struct CountW {
    using T = std::int64_t;
    static T one() { return 1; }
    static bool zero(const T& v) { return v == 0; }
};

struct SignW {
    using T = std::int64_t;
    static T one() { return 1; }
    static bool zero(const T& v) { return v == 0; }
};

struct PolyW {
    using T = Polynomial;
    static T one() { return Polynomial::constant(1); }
    static bool zero(const T& v) { return v.is_zero(); }
};

class Search {
public:
    Search(const BoundarySpec& b, PieceSet set) : b_(b), set_(set), lat_(build_lattice(b)), cat_(catalog(set)) {
        for (size_t p = 0; p < cat_.size(); ++p) {
            const Piece& pc = cat_[p];
            auto lab = [&](Label l) { return static_cast<std::uint8_t>(l); };
            if (pc.shape == Shape::Rhombus) {
                Tile upper{static_cast<int>(p), {lab(pc.labels[NW]), lab(pc.labels[NE]), kInner}, Role::Upper, false};
                Tile lower{static_cast<int>(p), {lab(pc.labels[SE]), lab(pc.labels[SW]), kInner}, Role::Lower, false};
                tiles_[0].push_back(upper);
                tiles_[1].push_back(lower);
                continue;
            }
            Tile t{static_cast<int>(p),
                   {lab(pc.labels[Rising]), lab(pc.labels[Falling]), lab(pc.labels[Horizontal])},
                   Role::Whole,
                   pc.tag == WeightTag::SignMinusOne};
            tiles_[pc.shape == Shape::Up ? 0 : 1].push_back(t);
        }
        lab_.assign(lat_.edges.size(), kUnset);
        for (size_t e = 0; e < lat_.edges.size(); ++e)
            if (lat_.edges[e].kind == EdgeKind::Fixed) lab_[e] = static_cast<std::uint8_t>(lat_.edges[e].label);
        open_.resize(static_cast<size_t>(b.N));
        for (int r = 0; r < b.N; ++r)
            for (int c : lat_.rows[static_cast<size_t>(r)]) {
                if (lat_.cells[static_cast<size_t>(c)].shape != Shape::Up) continue;
                int e = lat_.cell_edges[static_cast<size_t>(c)][Horizontal];
                if (lat_.edges[static_cast<size_t>(e)].kind == EdgeKind::Interior) open_[static_cast<size_t>(r)].push_back(e);
            }
        chosen_.assign(lat_.cells.size(), -1);
        memo_count_.resize(static_cast<size_t>(b.N) + 1);
        memo_sign_.resize(static_cast<size_t>(b.N) + 1);
        memo_poly_.resize(static_cast<size_t>(b.N) + 1);
        order_.reserve(lat_.cells.size());
        for (const auto& row : lat_.rows) order_.insert(order_.end(), row.begin(), row.end());
        for (int r = 0; r < b.N; ++r)
            if (!lat_.rows[static_cast<size_t>(r)].empty()) row_end_[lat_.rows[static_cast<size_t>(r)].back()] = r + 1;
    }

    const Lattice& lattice() const { return lat_; }
    size_t cell_total() const { return order_.size(); }

    const std::vector<Tile>& tiles_for(int cell) const {
        return tiles_[lat_.cells[static_cast<size_t>(cell)].shape == Shape::Up ? 0 : 1];
    }

    bool place(int cell, int tile) {
        const Tile& t = tiles_for(cell)[static_cast<size_t>(tile)];
        const auto& es = lat_.cell_edges[static_cast<size_t>(cell)];
        size_t mark = trail_.size();
        for (int s = 0; s < 3; ++s) {
            auto e = static_cast<size_t>(es[static_cast<size_t>(s)]);
            std::uint8_t l = t.lab[static_cast<size_t>(s)];
            if (lat_.edges[e].kind == EdgeKind::Free) {
                if (l > 1) return unwind(mark);
                continue;
            }
            if (lab_[e] == kUnset) {
                lab_[e] = l;
                trail_.push_back(static_cast<int>(e));
            } else if (lab_[e] != l) {
                return unwind(mark);
            }
        }
        marks_.push_back(mark);
        chosen_[static_cast<size_t>(cell)] = tile;
        return true;
    }

    void unplace(int cell) {
        size_t mark = marks_.back();
        marks_.pop_back();
        unwind(mark);
        chosen_[static_cast<size_t>(cell)] = -1;
    }

    std::int64_t factor_sign(int cell, int tile) const {
        return tiles_for(cell)[static_cast<size_t>(tile)].k ? -1 : 1;
    }

    Polynomial factor_poly(int cell, int tile) const {
        const Tile& t = tiles_for(cell)[static_cast<size_t>(tile)];
        if (t.k) return Polynomial::constant(-1);
        if (t.role == Role::Upper) {
            const CellId& c = lat_.cells[static_cast<size_t>(cell)];
            auto ij = equivariant_indices(c.r, c.i, b_.N);
            return Polynomial::difference(ij.j, ij.i);
        }
        return Polynomial::constant(1);
    }

    template <class W>
    typename W::T solve(int row) {
        if (!lat_.consistent) return typename W::T{};
        if (row >= b_.N) return W::one();
        std::string key;
        if (row > 0)
            for (int e : open_[static_cast<size_t>(row - 1)]) key.push_back(static_cast<char>(lab_[static_cast<size_t>(e)]));
        auto& memo = memo_for<W>()[static_cast<size_t>(row)];
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        typename W::T total{};
        row_dfs<W>(row, 0, W::one(), total);
        memo.emplace(std::move(key), total);
        return total;
    }

    // Depth-first enumeration over order_[depth..], pruning dead rows.
    void enumerate_from(size_t depth, std::vector<Filling>& out) {
        if (depth == order_.size()) {
            out.push_back(current());
            return;
        }
        int cell = order_[depth];
        const auto& ts = tiles_for(cell);
        for (int t = 0; t < static_cast<int>(ts.size()); ++t) {
            if (!place(cell, t)) continue;
            if (alive_after(cell)) enumerate_from(depth + 1, out);
            unplace(cell);
        }
    }

    bool alive_after(int cell) {
        auto it = row_end_.find(cell);
        if (it == row_end_.end()) return true;
        return solve<CountW>(it->second) != 0;
    }

    int cell_at(size_t depth) const { return order_[depth]; }

    Filling current() const {
        Filling f;
        for (int c : order_) {
            const Tile& t = tiles_for(c)[static_cast<size_t>(chosen_[static_cast<size_t>(c)])];
            if (t.role == Role::Lower) continue;
            f.placements.push_back({lat_.cells[static_cast<size_t>(c)], t.piece});
        }
        return f;
    }

private:
    bool unwind(size_t mark) {
        while (trail_.size() > mark) {
            lab_[static_cast<size_t>(trail_.back())] = kUnset;
            trail_.pop_back();
        }
        return false;
    }

    template <class W>
    void row_dfs(int row, size_t pos, const typename W::T& acc, typename W::T& total) {
        const auto& cells = lat_.rows[static_cast<size_t>(row)];
        if (pos == cells.size()) {
            typename W::T sub = solve<W>(row + 1);
            if (!W::zero(sub)) total += acc * sub;
            return;
        }
        int cell = cells[pos];
        const auto& ts = tiles_for(cell);
        for (int t = 0; t < static_cast<int>(ts.size()); ++t) {
            if (!place(cell, t)) continue;
            row_dfs<W>(row, pos + 1, times<W>(acc, cell, t), total);
            unplace(cell);
        }
    }

    template <class W>
    typename W::T times(const typename W::T& acc, int cell, int tile) const {
        if constexpr (std::is_same_v<W, CountW>) {
            return acc;
        } else if constexpr (std::is_same_v<W, SignW>) {
            return acc * factor_sign(cell, tile);
        } else {
            const Tile& t = tiles_for(cell)[static_cast<size_t>(tile)];
            if (!t.k && t.role != Role::Upper) return acc;
            return acc * factor_poly(cell, tile);
        }
    }

    template <class W>
    auto& memo_for() {
        if constexpr (std::is_same_v<W, CountW>)
            return memo_count_;
        else if constexpr (std::is_same_v<W, SignW>)
            return memo_sign_;
        else
            return memo_poly_;
    }

    BoundarySpec b_;
    PieceSet set_;
    Lattice lat_;
    std::vector<Piece> cat_;
    std::array<std::vector<Tile>, 2> tiles_;
    std::vector<std::uint8_t> lab_;
    std::vector<int> trail_;
    std::vector<size_t> marks_;
    std::vector<int> chosen_;
    std::vector<std::vector<int>> open_;
    std::vector<int> order_;
    std::unordered_map<int, int> row_end_;
    std::vector<std::unordered_map<std::string, std::int64_t>> memo_count_;
    std::vector<std::unordered_map<std::string, std::int64_t>> memo_sign_;
    std::vector<std::unordered_map<std::string, Polynomial>> memo_poly_;
};

constexpr size_t kTaskTarget = 64;

int scan_rank(const CellId& c) { return c.r * 4096 + 2 * c.i + (c.shape == Shape::Down ? 1 : 0); }

void sort_placements(Filling& f) {
    std::sort(f.placements.begin(), f.placements.end(),
              [](const Placement& a, const Placement& b) { return scan_rank(a.cell) < scan_rank(b.cell); });
}

int piece_index(const std::vector<Piece>& cat, const Piece& p) {
    for (size_t k = 0; k < cat.size(); ++k)
        if (cat[k] == p) return static_cast<int>(k);
    throw Unrotatable("transformed piece " + piece_text(p) + " is not in the target piece set");
}

template <class F>
TransformedFilling transform(const Filling& f, const BoundarySpec& from, const BoundarySpec& to, PieceSet set_from,
                             PieceSet set_to, F point, bool rhombus_flips, const std::function<Piece(const Piece&)>& piece_map) {
    auto cat_from = catalog(set_from);
    auto cat_to = catalog(set_to);
    TransformedFilling out{to, set_to, {}};
    for (const auto& pl : f.placements) {
        const Piece& p = cat_from[static_cast<size_t>(pl.piece)];
        CellId anchor = pl.cell;
        if (p.shape == Shape::Rhombus && rhombus_flips) anchor = {Shape::Down, pl.cell.r + 1, pl.cell.i};
        auto v = cell_vertices(anchor, from.N);
        for (auto& q : v) q = point(q);
        CellId c = cell_from_vertices(v, to.N);
        out.filling.placements.push_back({c, piece_index(cat_to, piece_map(p))});
    }
    sort_placements(out.filling);
    return out;
}

}  // namespace

std::string Weight::to_string() const {
    if (kind == WeightKind::Poly) return poly.to_string();
    return std::to_string(value);
}

WeightKind weight_kind(PieceSet set) {
    if (set.equivariant) return WeightKind::Poly;
    if (set.k_delta || set.k_nabla) return WeightKind::Sign;
    return WeightKind::Count;
}

EqIndexPair equivariant_indices(int r, int i, int n) { return {i, i + n - r}; }

std::vector<Filling> enumerate(const BoundarySpec& b, PieceSet set, int threads) {
    Search root(b, set);
    std::vector<Filling> out;
    if (root.cell_total() == 0) {
        if (root.lattice().consistent) out.push_back({});
        return out;
    }
    // Fixed prefix tasks so the output order never depends on the thread count.
    std::vector<std::vector<int>> tasks{{}};
    size_t depth = 0;
    while (tasks.size() < kTaskTarget && depth < root.cell_total()) {
        std::vector<std::vector<int>> next;
        int cell = root.cell_at(depth);
        for (const auto& prefix : tasks) {
            for (size_t k = 0; k < prefix.size(); ++k) root.place(root.cell_at(k), prefix[k]);
            const int n = static_cast<int>(root.tiles_for(cell).size());
            for (int t = 0; t < n; ++t) {
                if (!root.place(cell, t)) continue;
                if (root.alive_after(cell)) {
                    auto p = prefix;
                    p.push_back(t);
                    next.push_back(std::move(p));
                }
                root.unplace(cell);
            }
            for (size_t k = prefix.size(); k-- > 0;) root.unplace(root.cell_at(k));
        }
        tasks = std::move(next);
        ++depth;
        if (tasks.empty()) return out;
    }
    std::vector<std::vector<Filling>> results(tasks.size());
    auto run = [&](Search& s, size_t task) {
        const auto& prefix = tasks[task];
        for (size_t k = 0; k < prefix.size(); ++k) s.place(s.cell_at(k), prefix[k]);
        s.enumerate_from(prefix.size(), results[task]);
        for (size_t k = prefix.size(); k-- > 0;) s.unplace(s.cell_at(k));
    };
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    if (workers == 1) {
        for (size_t t = 0; t < tasks.size(); ++t) run(root, t);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                Search local(b, set);
                for (size_t t = next++; t < tasks.size(); t = next++) run(local, t);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (auto& r : results)
        for (auto& f : r) out.push_back(std::move(f));
    return out;
}

std::int64_t count(const BoundarySpec& b, PieceSet set) {
    Search s(b, set);
    return s.solve<CountW>(0);
}

std::int64_t sign_sum(const BoundarySpec& b, PieceSet set) {
    Search s(b, set);
    return s.solve<SignW>(0);
}

Polynomial poly_sum(const BoundarySpec& b, PieceSet set) {
    Search s(b, set);
    return s.solve<PolyW>(0);
}

Weight weight_sum(const BoundarySpec& b, PieceSet set) {
    Weight w;
    w.kind = weight_kind(set);
    switch (w.kind) {
        case WeightKind::Count: w.value = count(b, set); break;
        case WeightKind::Sign: w.value = sign_sum(b, set); break;
        case WeightKind::Poly: w.poly = poly_sum(b, set); break;
    }
    return w;
}

Polynomial filling_polynomial(const Filling& f, const BoundarySpec& b, PieceSet set) {
    auto cat = catalog(set);
    Polynomial w = Polynomial::constant(1);
    for (const auto& pl : f.placements) {
        const Piece& p = cat[static_cast<size_t>(pl.piece)];
        if (p.tag == WeightTag::SignMinusOne) w = -w;
        if (p.shape == Shape::Rhombus) {
            auto ij = equivariant_indices(pl.cell.r, pl.cell.i, b.N);
            w *= Polynomial::difference(ij.j, ij.i);
        }
    }
    return w;
}

Weight filling_weight(const Filling& f, const BoundarySpec& b, PieceSet set) {
    Weight w;
    w.kind = weight_kind(set);
    Polynomial p = filling_polynomial(f, b, set);
    if (w.kind == WeightKind::Poly)
        w.poly = p;
    else
        w.value = w.kind == WeightKind::Count ? 1 : static_cast<std::int64_t>(p.constant_term());
    return w;
}

std::vector<std::optional<Label>> edge_labels(const Lattice& lat, const Filling& f, PieceSet set) {
    auto cat = catalog(set);
    std::vector<std::optional<Label>> out(lat.edges.size());
    for (const auto& pl : f.placements) {
        const Piece& p = cat.at(static_cast<size_t>(pl.piece));
        int c = lat.cell_index(pl.cell);
        if (c < 0) continue;
        const auto& es = lat.cell_edges[static_cast<size_t>(c)];
        if (p.shape != Shape::Rhombus) {
            for (int s = 0; s < 3; ++s) out[static_cast<size_t>(es[static_cast<size_t>(s)])] = p.labels[static_cast<size_t>(s)];
            continue;
        }
        out[static_cast<size_t>(es[Rising])] = p.labels[NW];
        out[static_cast<size_t>(es[Falling])] = p.labels[NE];
        int d = lat.down_index(pl.cell.r + 1, pl.cell.i);
        if (d < 0) continue;
        const auto& ds = lat.cell_edges[static_cast<size_t>(d)];
        out[static_cast<size_t>(ds[Rising])] = p.labels[SE];
        out[static_cast<size_t>(ds[Falling])] = p.labels[SW];
    }
    return out;
}

std::array<BinaryString, 6> side_labels(const BoundarySpec& b, const Filling& f, PieceSet set) {
    Lattice lat = build_lattice(b);
    auto labs = edge_labels(lat, f, set);
    std::array<BinaryString, 6> out;
    for (int s = 0; s < 6; ++s)
        for (int e : lat.side_edges[static_cast<size_t>(s)]) {
            auto l = labs[static_cast<size_t>(e)];
            if (!l && lat.edges[static_cast<size_t>(e)].kind == EdgeKind::Fixed) l = lat.edges[static_cast<size_t>(e)].label;
            out[static_cast<size_t>(s)] += !l ? '?' : (*l == Label::Zero ? '0' : (*l == Label::One ? '1' : 'T'));
        }
    return out;
}

std::string check_filling(const BoundarySpec& b, PieceSet set, const Filling& f) {
    Lattice lat = build_lattice(b);
    if (lat.cells.empty()) {
        if (!f.placements.empty()) return "placements in a region without cells";
        return lat.consistent ? "" : "boundary labels disagree along a zero-area region";
    }
    auto cat = catalog(set);
    std::vector<int> cover(lat.cells.size(), 0);
    std::vector<std::optional<Label>> lab(lat.edges.size());
    std::vector<int> inner(lat.edges.size(), 0);
    int prev_rank = -1;
    auto put = [&](int e, Label l) -> bool {
        auto& slot = lab[static_cast<size_t>(e)];
        if (inner[static_cast<size_t>(e)]) return false;
        if (slot && *slot != l) return false;
        slot = l;
        return true;
    };
    for (const auto& pl : f.placements) {
        if (pl.piece < 0 || pl.piece >= static_cast<int>(cat.size())) return "piece index out of range";
        if (scan_rank(pl.cell) <= prev_rank) return "placements not in scan order";
        prev_rank = scan_rank(pl.cell);
        const Piece& p = cat[static_cast<size_t>(pl.piece)];
        int c = lat.cell_index(pl.cell);
        if (c < 0) return "cell " + cell_text(pl.cell) + " is outside the region";
        if (p.shape == Shape::Rhombus) {
            if (pl.cell.shape != Shape::Up) return "rhombus anchored at a down cell";
            int d = lat.down_index(pl.cell.r + 1, pl.cell.i);
            if (d < 0) return "rhombus at " + cell_text(pl.cell) + " leaves the region";
            if (cover[static_cast<size_t>(c)]++ || cover[static_cast<size_t>(d)]++) return "cell covered twice";
            const auto& us = lat.cell_edges[static_cast<size_t>(c)];
            const auto& ds = lat.cell_edges[static_cast<size_t>(d)];
            if (lab[static_cast<size_t>(us[Horizontal])]) return "rhombus interior edge already labeled";
            inner[static_cast<size_t>(us[Horizontal])] = 1;
            if (!put(us[Rising], p.labels[NW]) || !put(us[Falling], p.labels[NE]) || !put(ds[Rising], p.labels[SE]) ||
                !put(ds[Falling], p.labels[SW]))
                return "label conflict at rhombus " + cell_text(pl.cell);
            continue;
        }
        if (p.shape != pl.cell.shape) return "piece shape does not match cell " + cell_text(pl.cell);
        if (cover[static_cast<size_t>(c)]++) return "cell covered twice";
        const auto& es = lat.cell_edges[static_cast<size_t>(c)];
        for (int s = 0; s < 3; ++s)
            if (!put(es[static_cast<size_t>(s)], p.labels[static_cast<size_t>(s)]))
                return "label conflict at " + cell_text(pl.cell);
    }
    for (size_t c = 0; c < cover.size(); ++c)
        if (cover[c] != 1) return "cell " + cell_text(lat.cells[c]) + " not covered";
    for (size_t e = 0; e < lat.edges.size(); ++e) {
        const EdgeInfo& ei = lat.edges[e];
        if (ei.kind == EdgeKind::Interior) continue;
        if (!lab[e] || *lab[e] == Label::Ten) return "boundary edge with label 10 or none";
        if (ei.kind == EdgeKind::Fixed && *lab[e] != ei.label) return std::string("boundary mismatch on side ") + side_name(ei.side);
    }
    return "";
}

bool uses_only_h(const Filling& f, PieceSet set) {
    auto cat = catalog(set);
    return std::all_of(f.placements.begin(), f.placements.end(),
                       [&](const Placement& p) { return is_h_piece(cat[static_cast<size_t>(p.piece)]); });
}

int rhombus_count(const Filling& f, PieceSet set) {
    auto cat = catalog(set);
    return static_cast<int>(std::count_if(f.placements.begin(), f.placements.end(), [&](const Placement& p) {
        return cat[static_cast<size_t>(p.piece)].shape == Shape::Rhombus;
    }));
}

TransformedFilling rotate_filling(const Filling& f, const BoundarySpec& b, PieceSet set, int sixths) {
    int k = ((sixths % 6) + 6) % 6;
    if (set.equivariant && k != 0 && k != 3)
        throw Unrotatable("equivariant fillings only admit half turns");
    PieceSet to = set;
    if (k % 2) std::swap(to.k_delta, to.k_nabla);
    BoundarySpec nb = rotate_boundary(b, k);
    auto rot = [k](std::array<int, 2> p) {
        for (int s = 0; s < k; ++s) p = {-p[1], p[0] + p[1]};
        return p;
    };
    auto from_start = rot(side_start(b, k));
    auto to_start = side_start(nb, 0);
    std::array<int, 2> off{to_start[0] - from_start[0], to_start[1] - from_start[1]};
    auto point = [&](std::array<int, 2> p) {
        p = rot(p);
        return std::array<int, 2>{p[0] + off[0], p[1] + off[1]};
    };
    auto piece_map = [k](const Piece& p) { return p.shape == Shape::Rhombus ? p : rotate_piece(p, -k); };
    return transform(f, b, nb, set, to, point, k == 3, piece_map);
}

TransformedFilling dual_filling(const Filling& f, const BoundarySpec& b, PieceSet set) {
    BoundarySpec nb = dual_boundary(b);
    const int N = b.N;
    auto point = [N](std::array<int, 2> p) { return std::array<int, 2>{N - p[0] - p[1], p[1]}; };
    return transform(f, b, nb, set, set, point, false, [](const Piece& p) { return dual_piece(p); });
}

std::string filling_key(const Filling& f) {
    std::string s;
    for (const auto& p : f.placements) s += cell_text(p.cell) + "=" + std::to_string(p.piece) + ";";
    return s;
}

}  // namespace puzzle
