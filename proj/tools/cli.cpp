#include "cli.hpp"

#include "sec/density.hpp"
#include "sec/discharging.hpp"
#include "sec/errors.hpp"
#include "sec/generate.hpp"
#include "sec/instance.hpp"
#include "sec/oracle.hpp"
#include "sec/solver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace sec::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Instance load(const std::string& path) {
    const auto text = read_file(path);
    try {
        return parse_instance(text);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), path + ": " + e.what());
    }
}

void print_report(std::ostream& out, const Graph& g, const SolveReport& r) {
    out << serialize_coloring(g, r.coloring);
    out << "# path " << path_name(r.path) << '\n';
    out << "# success " << (r.success ? "yes" : "no") << '\n';
    out << "# certified " << (r.certified ? "yes" : "no") << '\n';
    out << "# colors_used " << r.colors_used << '\n';
    out << "# color_budget " << r.color_budget << '\n';
    out << "# recursion_depth " << r.recursion_depth << '\n';
    out << "# extension_steps " << r.extension_steps << '\n';
    out << "# tightest_slack " << r.tightest_slack << '\n';
    out << "# claims";
    for (std::size_t i = 0; i < r.claim_counts.size(); ++i) {
        if (r.claim_counts[i] > 0) {
            out << ' ' << claim_name(static_cast<ClaimTag>(i)) << '=' << r.claim_counts[i];
        }
    }
    out << '\n';
    if (r.fallback) {
        out << "# fallback " << *r.fallback << '\n';
    }
    if (r.failed_edge) {
        const auto& e = g.edge(*r.failed_edge);
        out << "# failed_edge " << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    }
    for (const auto& ex : r.bound_excesses) {
        const auto& e = g.edge(ex.edge);
        out << "# bound_excess " << claim_name(ex.claim) << ' ' << g.label(e.u) << ' '
            << g.label(e.v) << " bound " << ex.bound << " actual " << ex.actual << '\n';
    }
}

int cmd_color(const std::string& in, const std::string& mode, std::optional<std::uint32_t> delta,
              const std::string& lists_path, std::ostream& out, std::ostream& err) {
    const auto inst = load(in);
    const auto& g = inst.graph;
    const auto max_deg = static_cast<std::uint32_t>(g.max_degree());
    std::uint32_t cap = 0;
    std::uint32_t bound = 0;
    if (mode == "mad3") {
        bound = 3 * max_deg + 1;
    } else {
        cap = delta.value_or(inst.delta_cap.value_or(std::max<std::uint32_t>(4, max_deg)));
        bound = 3 * cap;
        if (!inst.planar) {
            err << "warning: input is not declared planar ('p planar'); proceeding\n";
        }
    }
    ColorLists lists;
    if (!lists_path.empty()) {
        lists = parse_lists(read_file(lists_path), g);
    } else if (inst.lists) {
        lists = *inst.lists;
    } else {
        lists = ColorLists::uniform(g.edge_count(), bound);
    }
    const auto report = mode == "mad3" ? solve_mad3(g, lists) : solve_girth7(g, lists, cap);
    print_report(out, g, report);
    return report.certified ? kOk : kUncertified;
}

int cmd_verify(const std::string& in, const std::string& coloring_path, bool partial,
               std::ostream& out) {
    const auto inst = load(in);
    const auto& g = inst.graph;
    const auto file = parse_coloring(read_file(coloring_path), g);
    auto violations = verify_strong(g, file.coloring, !partial);
    if (inst.lists) {
        for (const auto& v : verify_lists(file.coloring, *inst.lists)) {
            if (v.first < g.edge_count()) {
                violations.push_back(v);
            }
        }
    }
    for (const auto& v : violations) {
        if (v.kind == Violation::Kind::UnknownEdge) {
            const auto& [a, b] = file.unknown[v.first - g.edge_count()];
            out << "violation: color assigned to " << a << ' ' << b
                << ", which is not an edge\n";
        } else {
            out << "violation: " << describe(g, v) << '\n';
        }
    }
    out << "# violations " << violations.size() << '\n';
    return violations.empty() ? kOk : kUncertified;
}

int cmd_exact(const std::string& in, std::size_t cap, std::ostream& out) {
    const auto inst = load(in);
    SearchBudget budget;
    budget.max_edges = cap;
    const auto r = strong_chromatic_index_exact(inst.graph, budget);
    out << "chi_s " << r.chi_s << '\n';
    out << "# clique_lower_bound " << r.lower_bound_clique << '\n';
    out << "# nodes " << r.nodes << '\n';
    out << serialize_coloring(inst.graph, r.witness);
    return kOk;
}

int cmd_mad(const std::string& in, std::ostream& out) {
    const auto inst = load(in);
    const auto w = mad(inst.graph);
    out << "mad " << to_string(w.density) << '\n';
    out << "witness";
    for (auto v : w.vertices) {
        out << ' ' << inst.graph.label(v);
    }
    out << '\n';
    return kOk;
}

int cmd_girth(const std::string& in, std::ostream& out) {
    const auto inst = load(in);
    const auto gi = girth(inst.graph);
    out << (gi == kInfiniteGirth ? std::string("inf") : std::to_string(gi)) << '\n';
    return kOk;
}

std::string element_text(const ChargeElement& e) {
    return (e.kind == ChargeElement::Kind::Vertex ? "vertex " : "face ") + std::to_string(e.index);
}

int cmd_audit(const std::string& in, const std::string& which,
              std::optional<std::uint32_t> delta, std::ostream& out) {
    const auto inst = load(in);
    const auto& g = inst.graph;
    const auto rules = which == "mad" ? RuleSet::Mad : RuleSet::Girth7;
    const auto r = audit(g, inst.embedding, rules, delta ? delta : inst.delta_cap);
    out << "# rules " << which << '\n';
    out << "# girth " << (r.girth == kInfiniteGirth ? std::string("inf") : std::to_string(r.girth))
        << '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "vertex " << v << " degree " << g.degree(v) << " initial "
            << to_string(r.ledger.vertex_initial[v]) << " final "
            << to_string(r.ledger.vertex_final[v]) << '\n';
    }
    for (std::size_t f = 0; f < r.ledger.face_initial.size(); ++f) {
        out << "face " << f << " degree " << inst.embedding->faces[f].degree() << " initial "
            << to_string(r.ledger.face_initial[f]) << " final " << to_string(r.ledger.face_final[f])
            << '\n';
    }
    for (const auto& t : r.ledger.transfers) {
        out << "transfer " << t.rule << ' ' << element_text(t.source) << " -> "
            << element_text(t.sink) << ' ' << to_string(t.amount) << '\n';
    }
    for (const auto& n : r.negatives) {
        out << "negative " << element_text(n.element) << " final " << to_string(n.final_charge)
            << " touching " << (n.touching_claim ? claim_name(*n.touching_claim) : "none")
            << '\n';
    }
    for (const auto& u : r.uncovered) {
        out << "uncovered vertex " << u.vertex << " profile " << u.profile << " touching "
            << (u.touching_claim ? claim_name(*u.touching_claim) : "none") << '\n';
    }
    out << "# total_initial " << to_string(r.ledger.total_initial()) << '\n';
    out << "# total_final " << to_string(r.ledger.total_final()) << '\n';
    out << "# conserved " << (r.conserved() ? "yes" : "no") << '\n';
    if (r.euler_total) {
        out << "# euler_total " << to_string(*r.euler_total) << '\n';
    }
    out << "# plans_detected " << r.plans_detected << '\n';
    for (const auto& n : r.notes) {
        out << "# note " << n << '\n';
    }
    return r.conserved() ? kOk : kTheoremViolation;
}

int cmd_gen(const std::string& family, std::uint64_t seed, std::uint32_t n, std::uint32_t delta,
            std::uint32_t cap, std::ostream& out) {
    const auto f = parse_family(family);
    if (!f) {
        throw InputError("unknown family '" + family +
                         "' (SPARSE_MAD3, PLANAR_GIRTH7, CYCLE, TREE, C5_BLOWUP)");
    }
    GenSpec spec;
    spec.family = *f;
    spec.seed = seed;
    spec.vertices = n;
    spec.max_degree = delta;
    spec.delta_cap = cap;
    out << "# " << family_name(*f) << " seed " << seed << '\n';
    out << serialize_instance(generate(spec));
    return kOk;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"List strong edge coloring toolkit", "strongcolor"};
    app.require_subcommand(1);

    std::string in;
    std::string second;
    std::string mode;
    std::string which;
    std::string lists_path;
    std::string family;
    std::optional<std::uint32_t> delta;
    std::size_t cap = 28;
    bool partial = false;
    std::uint64_t seed = 0;
    std::uint32_t gen_n = 20;
    std::uint32_t gen_delta = 4;
    std::uint32_t gen_cap = 4;

    auto* color = app.add_subcommand("color", "List strong edge coloring via a theorem pipeline");
    color->add_option("--mode", mode, "mad3 or girth7")
        ->required()
        ->check(CLI::IsMember({"mad3", "girth7"}));
    color->add_option("--delta", delta, "delta_cap for girth7 (default: declared, else max(4, D))");
    color->add_option("--lists", lists_path, "file of 'l U V : C...' lines");
    color->add_option("input", in, "instance file")->required();

    auto* verify = app.add_subcommand("verify", "Check a coloring file");
    verify->add_option("input", in, "instance file")->required();
    verify->add_option("coloring", second, "coloring file")->required();
    verify->add_flag("--partial", partial, "accept uncolored edges");

    auto* exact = app.add_subcommand("exact", "Exact strong chromatic index");
    exact->add_option("input", in, "instance file")->required();
    exact->add_option("--cap", cap, "maximum edge count");

    auto* madc = app.add_subcommand("mad", "Maximum average degree with a densest subgraph");
    madc->add_option("input", in, "instance file")->required();

    auto* girthc = app.add_subcommand("girth", "Shortest cycle length");
    girthc->add_option("input", in, "instance file")->required();

    auto* auditc = app.add_subcommand("audit", "Discharging ledger");
    auditc->add_option("--which", which, "mad or girth7")
        ->required()
        ->check(CLI::IsMember({"mad", "girth7"}));
    auditc->add_option("--delta", delta, "delta_cap for the girth7 detector");
    auditc->add_option("input", in, "instance file")->required();

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--family", family, "SPARSE_MAD3, PLANAR_GIRTH7, CYCLE, TREE, C5_BLOWUP")
        ->required();
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--delta", gen_delta, "max degree (C5_BLOWUP) or degree cap (TREE, SPARSE_MAD3)");
    gen->add_option("--cap", gen_cap, "delta_cap (PLANAR_GIRTH7)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (color->parsed()) {
            return cmd_color(in, mode, delta, lists_path, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(in, second, partial, out);
        }
        if (exact->parsed()) {
            return cmd_exact(in, cap, out);
        }
        if (madc->parsed()) {
            return cmd_mad(in, out);
        }
        if (girthc->parsed()) {
            return cmd_girth(in, out);
        }
        if (auditc->parsed()) {
            return cmd_audit(in, which, delta, out);
        }
        if (gen->parsed()) {
            return cmd_gen(family, seed, gen_n, gen_delta, gen_cap, out);
        }
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << '\n';
        return kTheoremViolation;
    } catch (const HypothesisError& e) {
        err << "hypothesis rejected (" << e.hypothesis() << "): " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace sec::cli
