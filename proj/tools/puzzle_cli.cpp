// Command-line front end: count, enumerate, weight, lr, verify, complete, render.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "puzzle/completion.hpp"
#include "puzzle/lrcalc.hpp"
#include "puzzle/render.hpp"
#include "puzzle/theorems.hpp"
#include "puzzle/tiler.hpp"

using nlohmann::ordered_json;
using namespace puzzle;

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct Shared {
    std::string pieces = "H";
    std::string boundary;
    bool json = false;
    int threads = 1;
};

void add_shared(CLI::App* app, Shared& s, bool need_boundary) {
    app->add_option("--pieces", s.pieces, "piece set: H, H+eqvt, H+delta, H+nabla")->capture_default_str();
    auto* b = app->add_option("--boundary", s.boundary, "compact boundary, e.g. tri:10,10,01 or hex:-,01,...");
    if (need_boundary) b->required();
    app->add_flag("--json", s.json, "machine-readable output");
    app->add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

std::string shape_name(Shape s) { return s == Shape::Up ? "up" : (s == Shape::Down ? "down" : "rhombus"); }

ordered_json poly_json(const Polynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"coefficient", c.str()}, {"exponents", m}});
    return terms;
}

ordered_json weight_json(const Weight& w) {
    ordered_json j;
    switch (w.kind) {
        case WeightKind::Count: j["kind"] = "count"; j["value"] = w.value; break;
        case WeightKind::Sign: j["kind"] = "sign"; j["value"] = w.value; break;
        case WeightKind::Poly:
            j["kind"] = "poly";
            j["text"] = w.poly.to_string();
            j["terms"] = poly_json(w.poly);
            break;
    }
    return j;
}

ordered_json filling_json(const Filling& f, const BoundarySpec& b, PieceSet set, size_t index) {
    auto cat = catalog(set);
    ordered_json pl = ordered_json::array();
    for (const auto& p : f.placements) {
        const Piece& pc = cat[static_cast<size_t>(p.piece)];
        ordered_json labels = ordered_json::array();
        for (int s = 0; s < pc.slot_count(); ++s) labels.push_back(label_text(pc.labels[static_cast<size_t>(s)]));
        pl.push_back({{"cell", cell_text(p.cell)}, {"piece", p.piece}, {"shape", shape_name(pc.shape)}, {"labels", labels}});
    }
    return {{"index", index}, {"weight", weight_json(filling_weight(f, b, set))}, {"placements", pl}};
}

ordered_json report_json(const VerificationReport& r) {
    ordered_json j{{"id", r.id}, {"params", r.params.words}, {"ints", r.params.ints}, {"pass", r.pass}};
    ordered_json vals = ordered_json::array();
    for (size_t k = 0; k < r.values.size(); ++k)
        vals.push_back({{"label", k < r.labels.size() ? r.labels[k] : ""}, {"value", r.values[k]}});
    j["values"] = vals;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string report_text(const VerificationReport& r) {
    std::string s = std::string(r.pass ? "PASS " : "FAIL ") + r.id + " [" + params_text(r.params) + "]";
    if (!r.note.empty()) s += " (" + r.note + ")";
    s += "\n";
    for (size_t k = 0; k < r.values.size(); ++k)
        s += "  " + (k < r.labels.size() ? r.labels[k] : std::string("value")) + " = " + r.values[k] + "\n";
    return s;
}

std::string tri_text(const BoundarySpec& t) {
    return "tri:" + display(t.labels[SideNW]) + "," + display(t.labels[SideNE]) + "," + display(t.labels[SideS]);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of Schubert puzzles"};
    app.require_subcommand(1);
    Shared sh;

    auto* c_count = app.add_subcommand("count", "number of fillings");
    add_shared(c_count, sh, true);

    auto* c_enum = app.add_subcommand("enumerate", "fillings as JSON lines in canonical order");
    add_shared(c_enum, sh, true);

    auto* c_weight = app.add_subcommand("weight", "weight sum of all fillings");
    add_shared(c_weight, sh, true);

    auto* c_lr = app.add_subcommand("lr", "Littlewood-Richardson number c_{lambda,mu}^nu");
    std::vector<std::string> lr_args;
    bool padded = false, via_puzzles = false;
    c_lr->add_option("strings", lr_args, "lambda mu nu (use - for empty)")->required()->expected(3);
    c_lr->add_flag("--padded", padded, "pad lambda and mu to the content of nu");
    c_lr->add_flag("--puzzles", via_puzzles, "count puzzles instead of tableaux");
    c_lr->add_flag("--json", sh.json, "machine-readable output");

    auto* c_verify = app.add_subcommand("verify", "check a theorem on one instance or a sweep");
    std::string theorem;
    std::vector<std::string> vargs;
    bool do_sweep = false, list = false;
    int max_size = -1;
    c_verify->add_option("id", theorem, "theorem id (--list shows all)");
    c_verify->add_option("params", vargs, "instance strings (or integers for PENTAGON_LEMMA)");
    c_verify->add_flag("--sweep", do_sweep, "exhaustive sweep up to the bound");
    c_verify->add_option("--max-size", max_size, "sweep bound (default per theorem)");
    c_verify->add_flag("--list", list, "list theorem ids");
    c_verify->add_flag("--json", sh.json, "machine-readable output");
    c_verify->add_option("--threads", sh.threads, "worker threads")->check(CLI::PositiveNumber);

    auto* c_complete = app.add_subcommand("complete", "completion of a polygon to a triangle");
    add_shared(c_complete, sh, true);

    auto* c_render = app.add_subcommand("render", "SVG of a boundary or one of its fillings");
    add_shared(c_render, sh, true);
    std::string out_path;
    long filling_index = -1;
    bool no_labels = false;
    c_render->add_option("-o,--output", out_path, "output SVG file")->required();
    c_render->add_option("--filling-index", filling_index, "index into the enumerate order");
    c_render->add_flag("--no-labels", no_labels, "omit edge labels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        auto sub = app.get_subcommands().front();
        if (sub == c_lr) {
            for (auto& s : lr_args)
                if (s == "-") s.clear();
            std::int64_t v = via_puzzles ? lr_via_puzzles(lr_args[0], lr_args[1], lr_args[2])
                             : padded    ? lr_coeff_padded(lr_args[0], lr_args[1], lr_args[2])
                                         : lr_coeff(lr_args[0], lr_args[1], lr_args[2]);
            if (sh.json) std::cout << ordered_json{{"lr", v}}.dump() << "\n";
            else std::cout << v << "\n";
            return 0;
        }
        if (sub == c_verify) {
            if (list) {
                for (const auto& t : theorem_catalog())
                    std::cout << t.id << "  (" << t.params << "; sweep bound " << t.default_bound << " = "
                              << t.bound_meaning << ")\n";
                return 0;
            }
            if (theorem.empty()) throw CLI::ValidationError("verify needs a theorem id");
            const auto& info = theorem_info(theorem);
            if (do_sweep) {
                int bound = max_size >= 0 ? max_size : info.default_bound;
                auto reports = sweep(theorem, bound, sh.threads);
                size_t failures = 0;
                for (const auto& r : reports) failures += !r.pass;
                if (sh.json) {
                    ordered_json j{{"id", theorem}, {"bound", bound}, {"instances", reports.size()}, {"failures", failures}};
                    ordered_json arr = ordered_json::array();
                    for (const auto& r : reports)
                        arr.push_back({{"params", r.params.words}, {"ints", r.params.ints}, {"pass", r.pass}});
                    j["reports"] = arr;
                    std::cout << j.dump() << "\n";
                } else {
                    for (const auto& r : reports)
                        if (!r.pass) std::cout << report_text(r);
                    std::cout << theorem << ": " << reports.size() << " instances, " << failures << " failures (bound "
                              << bound << ", " << info.bound_meaning << ")\n";
                }
                return failures ? kFailed : 0;
            }
            TheoremParams p;
            for (auto s : vargs) {
                if (theorem == "PENTAGON_LEMMA") {
                    p.ints.push_back(std::stoi(s));
                    continue;
                }
                if (s == "-") s.clear();
                p.words.push_back(s);
            }
            auto r = verify(theorem, p);
            if (sh.json) std::cout << report_json(r).dump() << "\n";
            else std::cout << report_text(r);
            return r.pass ? 0 : kFailed;
        }

        PieceSet set = parse_piece_set(sh.pieces);
        BoundarySpec b = parse_boundary(sh.boundary);

        if (sub == c_count) {
            std::int64_t v = count(b, set);
            if (sh.json) std::cout << ordered_json{{"count", v}}.dump() << "\n";
            else std::cout << v << "\n";
        } else if (sub == c_enum) {
            auto fills = enumerate(b, set, sh.threads);
            for (size_t k = 0; k < fills.size(); ++k) std::cout << filling_json(fills[k], b, set, k).dump() << "\n";
        } else if (sub == c_weight) {
            auto w = weight_sum(b, set);
            if (sh.json) std::cout << weight_json(w).dump() << "\n";
            else std::cout << w.to_string() << "\n";
        } else if (sub == c_complete) {
            auto cm = complete_to_triangle(b, set);
            std::int64_t np = count(b, set), nt = count(cm.triangle, set);
            if (sh.json) {
                ordered_json corners = ordered_json::array();
                for (const auto& c : cm.corners)
                    corners.push_back({{"corner", c.corner == Corner::BottomLeft ? "bottom-left"
                                                  : c.corner == Corner::Top ? "top" : "bottom-right"},
                                       {"size", c.local.N}});
                std::cout << ordered_json{{"triangle", tri_text(cm.triangle)}, {"corners", corners},
                                          {"polygon_count", np}, {"triangle_count", nt}}.dump()
                          << "\n";
            } else {
                std::cout << tri_text(cm.triangle) << "\n"
                          << "polygon fillings: " << np << "\ntriangle fillings: " << nt << "\n";
            }
            return np == nt ? 0 : kFailed;
        } else if (sub == c_render) {
            RenderStyle style;
            style.labels = !no_labels;
            std::string svg;
            if (filling_index < 0) {
                svg = render_svg(b, style);
            } else {
                auto fills = enumerate(b, set, sh.threads);
                if (static_cast<size_t>(filling_index) >= fills.size())
                    throw CLI::ValidationError("--filling-index " + std::to_string(filling_index) + " out of range (" +
                                               std::to_string(fills.size()) + " fillings)");
                svg = render_svg(b, fills[static_cast<size_t>(filling_index)], set, style);
            }
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw CLI::ValidationError("cannot write " + out_path);
            out << svg;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
