// chroma: discrete-manifold analysis, coloring and Fisk-variety toolkit.
// Subcommands: gen, analyze, color, fisk, refine, export.
// Exit codes: 0 ok, 2 parse/IO error, 3 domain error, 4 budget exhausted.

#include "chroma/builders.hpp"
#include "chroma/coloring.hpp"
#include "chroma/dot.hpp"
#include "chroma/expr.hpp"
#include "chroma/fisk.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/kernels.hpp"
#include "chroma/manifolds.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;

struct Options {
    long long budget = chroma::kRecursionBudget;
    long long color_budget = chroma::kColorBudget;
    unsigned seed = 0; // reserved for scripted corpora
    std::string format = "text";
    std::string out_path;
};

void write_output(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw chroma::ParseError("cannot write output file: " + opt.out_path);
    out << payload;
}

std::string verdict_str(const chroma::TriState& t) {
    switch (t.verdict) {
        case chroma::Verdict::Yes: return "yes";
        case chroma::Verdict::No: return "no";
        default: return "unknown";
    }
}

json coloring_doc(const chroma::Coloring& c, bool optimal, const std::vector<std::string>& trace) {
    json doc;
    doc["colors"] = c.colors;
    doc["k"] = c.k;
    doc["optimal"] = optimal;
    doc["trace"] = trace;
    return doc;
}

int run_gen(const Options& opt, const std::string& expr) {
    chroma::Graph g = chroma::eval_expr(expr);
    write_output(opt, chroma::to_canonical_json(g));
    return 0;
}

int run_analyze(const Options& opt, const std::string& expr) {
    chroma::Graph g = chroma::eval_expr(expr);
    chroma::FVector f = chroma::f_vector(g);
    chroma::TriState mf = chroma::is_manifold(g, opt.budget);
    chroma::TriState sph = chroma::is_sphere(g, opt.budget);

    json doc;
    doc["n"] = g.n();
    doc["edges"] = g.m();
    doc["f_vector"] = f.counts;
    doc["euler_characteristic"] = f.euler();
    doc["manifold"] = {{"verdict", verdict_str(mf)}, {"dim", mf.dim}, {"note", mf.note}};
    doc["sphere"] = {{"verdict", verdict_str(sph)}, {"dim", sph.dim}, {"note", sph.note}};
    try {
        chroma::BettiVector b = chroma::betti(g);
        doc["betti"] = b.b;
    } catch (const chroma::BudgetError& e) {
        doc["betti_note"] = e.what();
    }

    if (opt.format == "json") {
        write_output(opt, doc.dump() + "\n");
        return 0;
    }
    std::ostringstream out;
    out << "vertices:  " << g.n() << "\n";
    out << "edges:     " << g.m() << "\n";
    out << "f-vector:  (";
    for (std::size_t i = 0; i < f.counts.size(); ++i)
        out << (i ? "," : "") << f.counts[i];
    out << ")\n";
    out << "euler:     " << f.euler() << "\n";
    if (doc.contains("betti")) {
        out << "betti:     (";
        const auto& b = doc["betti"];
        for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i].get<long long>();
        out << ")\n";
    } else {
        out << "betti:     " << doc["betti_note"].get<std::string>() << "\n";
    }
    out << "manifold:  " << verdict_str(mf);
    if (mf.yes()) out << " (d=" << mf.dim << ")";
    if (!mf.note.empty()) out << "  [" << mf.note << "]";
    out << "\n";
    out << "sphere:    " << verdict_str(sph);
    if (sph.yes()) out << " (d=" << sph.dim << ")";
    if (!sph.note.empty()) out << "  [" << sph.note << "]";
    out << "\n";
    write_output(opt, out.str());
    return 0;
}

int run_color(const Options& opt, const std::string& expr, const std::string& mode) {
    chroma::Graph g = chroma::eval_expr(expr);
    if (mode == "exact") {
        chroma::ChromaticResult r = chroma::chromatic_number(g, opt.color_budget);
        std::vector<std::string> trace{r.certificate};
        if (opt.format == "json") {
            json doc = coloring_doc(r.coloring, r.optimal, trace);
            doc["lower"] = r.lower;
            doc["upper"] = r.upper;
            write_output(opt, doc.dump() + "\n");
        } else {
            std::ostringstream out;
            if (r.optimal)
                out << "chromatic number: " << r.upper << "\n";
            else
                out << "chromatic number in [" << r.lower << ", " << r.upper << "] (budget exhausted)\n";
            out << "certificate: " << r.certificate << "\n";
            out << "coloring:";
            for (int c : r.coloring.colors) out << " " << c;
            out << "\n";
            write_output(opt, out.str());
        }
        return r.optimal ? 0 : 4;
    }
    if (mode == "theorem1") {
        chroma::Theorem1Result r = chroma::theorem1_color(g, opt.color_budget);
        if (!r.ok) {
            std::cerr << "budget exhausted before a (2d+2)-coloring was found\n";
            return 4;
        }
        if (opt.format == "json") {
            json doc = coloring_doc(r.coloring, false, r.trace);
            doc["d"] = r.d;
            doc["stage"] = r.stage;
            doc["partition_method"] = r.partition.method;
            write_output(opt, doc.dump() + "\n");
        } else {
            std::ostringstream out;
            out << "colors used: " << r.coloring.k << " (bound " << 2 * r.d + 2 << ")\n";
            out << "stage: " << r.stage << "\n";
            for (const std::string& t : r.trace) out << "  - " << t << "\n";
            out << "coloring:";
            for (int c : r.coloring.colors) out << " " << c;
            out << "\n";
            write_output(opt, out.str());
        }
        return 0;
    }
    // bounds
    chroma::BoundsReport r = chroma::bounds_report(g, true, opt.color_budget);
    if (opt.format == "json") {
        json doc;
        doc["d"] = r.d;
        doc["lower"] = r.lower;
        doc["upper"] = r.upper;
        doc["conjecture"] = r.conjecture;
        if (r.exact) doc["exact"] = *r.exact;
        write_output(opt, doc.dump() + "\n");
    } else {
        std::ostringstream out;
        out << "d=" << r.d << "  lower=" << r.lower << "  upper=" << r.upper
            << "  conjecture=" << r.conjecture;
        if (r.exact) out << "  X=" << *r.exact;
        out << "\n";
        write_output(opt, out.str());
    }
    return 0;
}

int run_fisk(const Options& opt, const std::string& expr) {
    chroma::Graph g = chroma::eval_expr(expr);
    chroma::FiskVariety fv = chroma::fisk_variety(g, opt.budget);

    json doc;
    doc["d"] = fv.d;
    doc["odd_count"] = fv.odd.size();
    auto odd = json::array();
    for (const chroma::Simplex& s : fv.odd) odd.push_back(s.verts);
    doc["odd_simplices"] = std::move(odd);
    auto comps = json::array();
    for (const chroma::FiskComponent& c : fv.components) {
        json jc;
        jc["vertices"] = c.vertices;
        switch (c.shape) {
            case chroma::FiskComponent::Shape::Cycle:
                jc["shape"] = "cycle";
                jc["length"] = c.cycle_length;
                break;
            case chroma::FiskComponent::Shape::Point: jc["shape"] = "point"; break;
            default:
                jc["shape"] = "other";
                jc["f_vector"] = c.fvec.counts;
        }
        comps.push_back(std::move(jc));
    }
    doc["components"] = std::move(comps);
    doc["d_eulerian"] = fv.empty();
    if (fv.d >= 3) {
        chroma::FiskCriterionReport rep = chroma::fisk_criterion(g, opt.budget);
        json jc;
        jc["holds"] = rep.criterion_holds;
        jc["expected_dim"] = rep.expected_dim;
        jc["carrier_manifold"] = verdict_str(rep.carrier_check);
        jc["carrier_dim"] = rep.carrier_check.dim;
        int empty = 0, sphere = 0, other = 0;
        for (auto v : rep.per_vertex) {
            if (v == chroma::FiskCriterionReport::LocalVerdict::Empty) ++empty;
            else if (v == chroma::FiskCriterionReport::LocalVerdict::Sphere) ++sphere;
            else ++other;
        }
        jc["verdicts"] = {{"empty", empty}, {"sphere", sphere}, {"other", other}};
        doc["criterion"] = std::move(jc);
    }

    if (opt.format == "json") {
        write_output(opt, doc.dump() + "\n");
        return 0;
    }
    std::ostringstream out;
    out << "manifold dimension: " << fv.d << "\n";
    out << "odd (d-2)-simplices: " << fv.odd.size() << "\n";
    out << "d-eulerian: " << (fv.empty() ? "yes" : "no") << "\n";
    out << "components:\n";
    for (const auto& jc : doc["components"]) {
        out << "  - " << jc["shape"].get<std::string>();
        if (jc.contains("length")) out << " of length " << jc["length"].get<int>();
        out << " on " << jc["vertices"].size() << " vertices\n";
    }
    if (doc.contains("criterion")) {
        const auto& jc = doc["criterion"];
        out << "criterion holds: " << (jc["holds"].get<bool>() ? "yes" : "no")
            << "  (local verdicts: " << jc["verdicts"]["empty"].get<int>() << " empty, "
            << jc["verdicts"]["sphere"].get<int>() << " sphere, "
            << jc["verdicts"]["other"].get<int>() << " other)\n";
        out << "carrier manifold: " << jc["carrier_manifold"].get<std::string>() << " (dim "
            << jc["carrier_dim"].get<int>() << ", expected " << jc["expected_dim"].get<int>()
            << ")\n";
    }
    write_output(opt, out.str());
    return 0;
}

int run_refine(const Options& opt, const std::string& expr, int u, int v) {
    chroma::Graph g = chroma::eval_expr(expr);
    write_output(opt, chroma::to_canonical_json(chroma::edge_refine(g, u, v)));
    return 0;
}

int run_export(const Options& opt, const std::string& expr, const std::string& color_mode,
               bool with_fisk) {
    chroma::Graph g = chroma::eval_expr(expr);
    std::optional<chroma::Coloring> coloring;
    if (color_mode == "exact")
        coloring = chroma::chromatic_number(g, opt.color_budget).coloring;
    else if (color_mode == "theorem1") {
        chroma::Theorem1Result r = chroma::theorem1_color(g, opt.color_budget);
        if (!r.ok) return 4;
        coloring = std::move(r.coloring);
    }
    std::optional<chroma::FiskVariety> fv;
    if (with_fisk) fv = chroma::fisk_variety(g, opt.budget);
    write_output(opt, chroma::export_dot(g, coloring ? &*coloring : nullptr, fv ? &*fv : nullptr));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete manifold coloring & Fisk variety toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--budget", opt.budget, "recognizer recursion budget (nodes)");
    app.add_option("--color-budget", opt.color_budget, "coloring search budget (nodes)");
    app.add_option("--seed", opt.seed, "seed for scripted corpora");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string expr, mode = "exact", color_mode = "none";
    int ru = 0, rv = 0;
    bool with_fisk = false;

    auto* gen = app.add_subcommand("gen", "evaluate an expression, emit the canonical graph document");
    gen->add_option("expr", expr, "constructor expression")->required();
    gen->add_option("-o,--out", opt.out_path, "output file");

    auto* analyze = app.add_subcommand("analyze", "f-vector, Euler characteristic, Betti numbers, recognizer verdicts");
    analyze->add_option("expr", expr)->required();
    analyze->add_option("-o,--out", opt.out_path);

    auto* color = app.add_subcommand("color", "exact chromatic number, Theorem-1 pipeline, or bounds");
    color->add_option("expr", expr)->required();
    color->add_option("--mode", mode, "exact | theorem1 | bounds")
        ->check(CLI::IsMember({"exact", "theorem1", "bounds"}));
    color->add_option("-o,--out", opt.out_path);

    auto* fisk = app.add_subcommand("fisk", "Fisk variety report");
    fisk->add_option("expr", expr)->required();
    fisk->add_option("-o,--out", opt.out_path);

    auto* refine = app.add_subcommand("refine", "edge refinement at an explicit edge");
    refine->add_option("expr", expr)->required();
    refine->add_option("u", ru, "first endpoint")->required();
    refine->add_option("v", rv, "second endpoint")->required();
    refine->add_option("-o,--out", opt.out_path);

    auto* exp = app.add_subcommand("export", "DOT export with optional coloring / Fisk overlay");
    exp->add_option("expr", expr)->required();
    exp->add_option("--coloring", color_mode, "none | exact | theorem1")
        ->check(CLI::IsMember({"none", "exact", "theorem1"}));
    exp->add_flag("--fisk", with_fisk, "highlight the Fisk carrier");
    exp->add_option("-o,--out", opt.out_path);

    for (CLI::App* sub : {gen, analyze, color, fisk, refine, exp}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen(opt, expr);
        if (analyze->parsed()) return run_analyze(opt, expr);
        if (color->parsed()) return run_color(opt, expr, mode);
        if (fisk->parsed()) return run_fisk(opt, expr);
        if (refine->parsed()) return run_refine(opt, expr, ru, rv);
        if (exp->parsed()) return run_export(opt, expr, color_mode, with_fisk);
    } catch (const chroma::ParseError& e) {
        std::cerr << "parse/io error: " << e.what() << "\n";
        return 2;
    } catch (const chroma::BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 4;
    } catch (const chroma::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
