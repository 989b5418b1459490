#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zdg/catalog.hpp"
#include "zdg/claims.hpp"
#include "zdg/graph.hpp"
#include "zdg/properties.hpp"
#include "zdg/ring_spec.hpp"

namespace {

zdg::BuildOptions options_from_env() {
    zdg::BuildOptions opts;
    if (const char* env = std::getenv("ZDG_MAX_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 2) opts.max_order = v;
    }
    return opts;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw zdg::RingError("cannot write to " + path);
    out << content;
}

std::string flavor_name(zdg::GraphFlavor f) {
    return f == zdg::GraphFlavor::classic ? "classic" : "extended";
}

int cmd_ring_info(const std::string& spec_text, const zdg::BuildOptions& opts) {
    zdg::FiniteRing ring = zdg::build_ring(spec_text, opts);
    std::cout << "ring: " << ring.descriptor() << "\n";
    std::cout << "order: " << ring.order() << "\n";
    std::cout << "|Z(R)|: " << ring.z_size() << "\n";
    std::cout << "|Nil(R)|: " << ring.nil_size() << "\n";
    std::cout << "reduced: " << (ring.is_reduced() ? "yes" : "no") << "\n";
    std::cout << "local: " << (ring.is_local() ? "yes" : "no") << "\n";
    std::cout << "graphs differ: " << (zdg::graphs_differ(ring) ? "yes" : "no") << "\n";
    std::cout << "factors:";
    for (const zdg::FiniteRing& f : ring.decompose_local()) {
        const char* kind = "";
        switch (zdg::classify_factor(f)) {
        case zdg::FactorKind::field: kind = "field"; break;
        case zdg::FactorKind::b_type: kind = "B-type"; break;
        case zdg::FactorKind::other_local: kind = "local"; break;
        }
        std::cout << " " << kind << "(" << f.order() << ")";
    }
    std::cout << "\n";
    return 0;
}

int cmd_graph(const std::string& spec_text, zdg::GraphFlavor flavor, const std::string& format,
              const std::string& out_path, const zdg::BuildOptions& opts) {
    zdg::FiniteRing ring = zdg::build_ring(spec_text, opts);
    zdg::ZeroDivisorGraph g(ring, flavor);
    write_output(out_path, format == "dot" ? zdg::export_dot(g) : zdg::export_json(g));
    return 0;
}

int cmd_check(const std::string& spec_text, const std::string& property, zdg::GraphFlavor flavor,
              const zdg::BuildOptions& opts) {
    zdg::FiniteRing ring = zdg::build_ring(spec_text, opts);
    zdg::ZeroDivisorGraph g(ring, flavor);

    if (property == "complemented") {
        zdg::ComplementedVerdict v = zdg::is_complemented(g);
        if (v.complemented) {
            std::cout << "complemented: true\n";
            return 0;
        }
        std::cout << "complemented: false; witness: " << ring.elem_name(*v.failure_witness) << "\n";
        return 1;
    }
    if (property == "uniquely-complemented") {
        zdg::ComplementedVerdict v = zdg::is_uniquely_complemented(g);
        if (v.uniquely_complemented) {
            std::cout << "uniquely complemented: true\n";
            return 0;
        }
        std::cout << "uniquely complemented: false; ";
        if (v.failure_witness) {
            std::cout << "witness: " << ring.elem_name(*v.failure_witness) << " has no orthogonal\n";
        } else if (v.uniqueness_witness) {
            auto [a, u, w] = *v.uniqueness_witness;
            std::cout << "witness: " << ring.elem_name(a) << " is orthogonal to both "
                      << ring.elem_name(u) << " and " << ring.elem_name(w)
                      << " with different neighborhoods\n";
        }
        return 1;
    }
    if (property == "girth") {
        zdg::GirthResult r = zdg::girth(g);
        if (!r.girth) {
            std::cout << "girth: infinity\n";
        } else {
            std::cout << "girth: " << *r.girth << "; cycle:";
            for (zdg::ElemId v : r.cycle) std::cout << " " << ring.elem_name(v);
            std::cout << "\n";
        }
        return 0;
    }
    if (property == "ends") {
        bool any = false;
        std::cout << "ends:";
        for (zdg::ElemId v : g.vertices())
            if (g.is_end(v)) {
                std::cout << " " << ring.elem_name(v);
                any = true;
            }
        if (!any) std::cout << " none";
        std::cout << "\n";
        return 0;
    }
    // nil
    std::cout << "Nil(R):";
    for (zdg::ElemId v : ring.nilradical()) std::cout << " " << ring.elem_name(v);
    std::cout << "\n";
    for (zdg::ElemId v : ring.nilradical()) {
        if (v == 0) continue;
        zdg::PowerProfile prof = ring.power_profile(v);
        std::cout << "index(" << ring.elem_name(v) << ") = " << *prof.nil_index << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& claim, long max_order, long max_n, const std::string& format,
               const std::string& out_path, const zdg::BuildOptions& opts) {
    zdg::CatalogBounds bounds;
    bounds.max_order = max_order;
    bounds.zn_max = max_n;
    zdg::Catalog catalog = zdg::generate_catalog(bounds);

    std::vector<zdg::ClaimResult> results;
    if (claim == "all")
        results = zdg::verify_all(catalog, zdg::default_claims(), opts);
    else
        results = zdg::run_claims(catalog, {claim}, zdg::default_claims(), opts);

    zdg::ReportFormat rf = format == "json" ? zdg::ReportFormat::json : zdg::ReportFormat::markdown;
    write_output(out_path, zdg::render_report(results, rf, catalog.recipe()));

    for (const zdg::ClaimResult& r : results)
        if (r.status == zdg::ClaimStatus::counterexample) return 1;
    return 0;
}

int cmd_figures(const std::string& dir, const zdg::BuildOptions& opts) {
    namespace fs = std::filesystem;
    if (!dir.empty()) fs::create_directories(dir);
    const std::pair<const char*, const char*> figures[] = {
        {"zdg-z18.dot", "Z(18)"},
        {"zdg-z3-b4.dot", "Z(3) x Z(2)[x]/(x^2)"},
        {"zdg-z2-z2-z4.dot", "Z(2) x Z(2) x Z(4)"},
        {"zdg-z2xy-truncated.dot", "Z(2)[x,y]/(x^3, x*y, y^2)"},
    };
    for (const auto& [file, spec] : figures) {
        zdg::FiniteRing ring = zdg::build_ring(spec, opts);
        zdg::ZeroDivisorGraph g(ring, zdg::GraphFlavor::extended);
        fs::path path = dir.empty() ? fs::path(file) : fs::path(dir) / file;
        std::ofstream out(path);
        if (!out) throw zdg::RingError("cannot write " + path.string());
        out << zdg::export_dot(g);
        std::cout << path.string() << ": extended graph of " << spec << " (" << g.vertex_count()
                  << " vertices, " << g.edge_count() << " edges)\n";
    }
    std::cout << "note: Z(2)[x,y]/(x^3, x*y, y^2) is the finite truncation used for the bivariate "
                 "example; its vertex set is the truncation's own nonzero zero-divisors\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite commutative ring and zero-divisor graph workbench"};
    app.require_subcommand(1);

    std::string spec_text, property, format, out_path, claim, flavor_text = "extended", dir;
    long max_order = 256, max_n = 400;

    CLI::App* ring_info = app.add_subcommand("ring-info", "order, Z(R), Nil(R) and decomposition");
    ring_info->add_option("spec", spec_text, "ring spec, e.g. \"Z(12)\"")->required();

    CLI::App* graph = app.add_subcommand("graph", "emit a zero-divisor graph");
    graph->add_option("spec", spec_text)->required();
    graph->add_option("--flavor", flavor_text)->check(CLI::IsMember({"classic", "extended"}));
    graph->add_option("--format", format, "dot or json")
        ->default_val("dot")
        ->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("-o,--output", out_path, "output path (stdout when absent)");

    CLI::App* check = app.add_subcommand("check", "evaluate one graph property");
    check->add_option("spec", spec_text)->required();
    check->add_option("property", property)
        ->required()
        ->check(CLI::IsMember({"complemented", "uniquely-complemented", "girth", "ends", "nil"}));
    check->add_option("--flavor", flavor_text)->check(CLI::IsMember({"classic", "extended"}));

    CLI::App* verify = app.add_subcommand("verify", "run claims over a generated catalog");
    verify->add_option("claim", claim, "claim id or 'all'")->required();
    verify->add_option("--max-order", max_order, "catalog order bound")->check(CLI::Range(4L, 100000L));
    verify->add_option("--max-n", max_n, "bound for the plain Z(n) sweep");
    verify->add_option("--format", format, "json or md")
        ->default_val("md")
        ->check(CLI::IsMember({"json", "md"}));
    verify->add_option("-o,--output", out_path);

    CLI::App* figures = app.add_subcommand("figures", "regenerate the four reference graphs as DOT");
    figures->add_option("-o,--output-dir", dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    zdg::BuildOptions opts = options_from_env();
    zdg::GraphFlavor flavor =
        flavor_text == "classic" ? zdg::GraphFlavor::classic : zdg::GraphFlavor::extended;

    try {
        if (ring_info->parsed()) return cmd_ring_info(spec_text, opts);
        if (graph->parsed()) return cmd_graph(spec_text, flavor, format, out_path, opts);
        if (check->parsed()) return cmd_check(spec_text, property, flavor, opts);
        if (verify->parsed()) return cmd_verify(claim, max_order, max_n, format, out_path, opts);
        if (figures->parsed()) return cmd_figures(dir, opts);
    } catch (const zdg::RingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
