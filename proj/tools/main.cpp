#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tvg/improve.hpp"
#include "tvg/io.hpp"

namespace {

using namespace tvg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitAlarm = 2;  // property violation: NONE, or --open unsatisfied

const CostFunction& cost_by_name(const std::string& name) {
    if (name == "id")
        return CostFunction::identity();
    if (name == "square")
        return CostFunction::square();
    if (name == "sqrt")
        return CostFunction::sqrt();
    throw InvalidInput("unknown cost function: " + name);
}

std::string edge_list(const std::vector<Edge>& edges) {
    std::string s;
    for (const Edge& e : edges) {
        if (!s.empty())
            s += ' ';
        s += '(' + std::to_string(e[0]) + ',' + std::to_string(e[1]) + ')';
    }
    return s;
}

void emit(const std::string& doc, const std::string& out_path) {
    std::cout << doc;
    if (!out_path.empty())
        write_text_file(out_path, doc);
}

struct TreeArgs {
    std::string input;
    std::string f = "id";
    bool verify = false;
    std::string svg;
    std::string out;
};

int run_tree(const TreeArgs& a) {
    const PointSet ps = read_point_file(a.input);
    const CostFunction& f = cost_by_name(a.f);
    const Tree tree = max_sum_tree(ps, f);
    std::cout << "n: " << ps.size() << " dim: " << ps.dim << "\n";
    std::cout << "tree: " << edge_list(tree.edges) << "\n";
    std::cout << "cost[" << f.name() << "]: " << fmt17(cost(ps, tree.edges, f)) << "\n";

    int code = kExitOk;
    if (a.verify || !a.svg.empty()) {
        const TverbergCertificate cert = tree_witness_seb(ps, tree);
        if (a.verify) {
            std::cout << "classification: " << to_string(cert.classification) << "\n";
            emit(certificate_document(ps, tree.edges, "tree", "seb-center", cert,
                                      edge_dots(ps, tree.edges, cert.witness)),
                 a.out);
            if (cert.classification == Classification::None)
                code = kExitAlarm;
        }
        if (!a.svg.empty())
            write_text_file(a.svg, render_svg(ps, tree.edges, &cert));
    }
    return code;
}

struct MatchArgs {
    std::string input;
    bool verify = false;
    bool require_open = false;
    std::string improve_from;
    std::string svg;
    std::string out;
};

int run_match(const MatchArgs& a) {
    const PointSet ps = read_point_file(a.input);
    Matching m;
    if (!a.improve_from.empty()) {
        const Matching initial = read_matching_file(a.improve_from, ps.size());
        std::cout << "initial: " << edge_list(initial.edges) << " cost: "
                  << fmt17(cost(ps, initial.edges)) << "\n";
        const LocalSearchResult res = local_search(ps, initial, 1000);
        std::cout << "steps: " << res.steps << "\n";
        m = res.matching;
    } else {
        m = max_sum_matching(ps);
    }
    std::cout << "n: " << ps.size() << " dim: " << ps.dim << "\n";
    std::cout << "matching: " << edge_list(m.edges) << "\n";
    std::cout << "cost: " << fmt17(cost(ps, m.edges)) << "\n";

    int code = kExitOk;
    if (a.verify || a.require_open || !a.svg.empty()) {
        const TverbergCertificate cert = verify_tverberg(ps, m.edges);
        std::cout << "classification: " << to_string(cert.classification) << "\n";
        if (a.verify)
            emit(certificate_document(ps, m.edges, "matching", "minimize", cert), a.out);
        if (!a.svg.empty())
            write_text_file(a.svg, render_svg(ps, m.edges, &cert));
        if (cert.classification == Classification::None)
            code = kExitAlarm;
        if (a.require_open && cert.classification != Classification::Open)
            code = kExitAlarm;
    }
    return code;
}

struct HuntArgs {
    HuntConfig cfg;
    std::string out;
};

int run_hunt(const HuntArgs& a) {
    const HuntReport rep = hunt(a.cfg);
    std::cout << "min_ratio: " << fmt17(rep.min_ratio) << " trial: " << rep.argmin_trial
              << "\n";
    emit(report_document(rep), a.out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"max-sum trees and matchings of point sets, with common-ball "
                 "witness certificates"};
    app.set_version_flag("--version", tvg::kToolVersion);
    app.require_subcommand(1);

    TreeArgs ta;
    CLI::App* tree = app.add_subcommand("tree", "max-sum spanning tree + verification");
    tree->add_option("input", ta.input, "point file (JSON or CSV)")->required();
    tree->add_option("--f", ta.f, "edge-length transform: id|square|sqrt")
        ->check(CLI::IsMember({"id", "square", "sqrt"}));
    tree->add_flag("--verify", ta.verify, "emit a witness certificate document");
    tree->add_option("--svg", ta.svg, "write an SVG rendering (planar only)");
    tree->add_option("--out", ta.out, "also write the certificate JSON here");

    MatchArgs ma;
    CLI::App* match = app.add_subcommand("match", "max-sum perfect matching + verification");
    match->add_option("input", ma.input, "point file (JSON or CSV)")->required();
    match->add_flag("--verify", ma.verify, "emit a witness certificate document");
    match->add_flag("--open", ma.require_open, "exit 2 unless the certificate is OPEN");
    match->add_option("--improve-from", ma.improve_from,
                      "run the alternating-cycle local search from this matching file");
    match->add_option("--svg", ma.svg, "write an SVG rendering (planar only)");
    match->add_option("--out", ma.out, "also write the certificate JSON here");

    HuntArgs ha;
    CLI::App* hunt = app.add_subcommand("hunt", "random search for small depth ratios");
    hunt->add_option("--dim", ha.cfg.dim, "dimension");
    hunt->add_option("--n", ha.cfg.n, "points per trial (even)");
    hunt->add_option("--trials", ha.cfg.trials, "number of trials");
    hunt->add_option("--seed", ha.cfg.seed, "RNG seed");
    hunt->add_option("--descent-steps", ha.cfg.descent_steps,
                     "coordinate-descent sweeps per trial");
    hunt->add_option("--step-size", ha.cfg.step_size, "initial descent step");
    hunt->add_option("--out", ha.out, "write the report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (tree->parsed())
            return run_tree(ta);
        if (match->parsed())
            return run_match(ma);
        if (hunt->parsed())
            return run_hunt(ha);
    } catch (const tvg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
