#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linkroots/canonical.hpp"
#include "linkroots/construct.hpp"
#include "linkroots/errors.hpp"
#include "linkroots/incidence.hpp"
#include "linkroots/io.hpp"
#include "linkroots/metrics.hpp"
#include "linkroots/partition.hpp"
#include "linkroots/search.hpp"

namespace linkroots::cli {

namespace {

struct Config {
    std::size_t order = 0;
    std::string input;
    std::string second;  // equiv: the other graph; expand: the recipe
    std::string output;
    std::string dot;
    std::string provenance;
    std::string partitions;
    bool witnesses = false;
    bool path_mode = false;
    bool trees_only = false;
    bool forests_only = false;
    bool connected_only = false;
    double budget = 0.0;
    std::size_t max_links = ConstructOptions{}.max_links;
    std::size_t max_edges = SearchOptions{}.max_edges;
    unsigned threads = 0;
    bool canonical_graph_out = false;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) {
        throw Error("cannot write " + path);
    }
    return f;
}

void emit_graph(const Config& cfg, const Multigraph& g, std::ostream& out) {
    if (cfg.output.empty()) {
        write_multigraph(out, g);
    } else {
        write_multigraph_file(cfg.output, g);
    }
}

std::vector<std::string> link_labels(const LinkGraphResult& lg) {
    std::vector<std::string> labels;
    labels.reserve(lg.vertex_links.size());
    for (const Link& l : lg.vertex_links) {
        labels.push_back(format_sequence(l.seq));
    }
    return labels;
}

std::string format_set(const std::set<std::size_t>& values) {
    std::string s = "{";
    bool first = true;
    for (std::size_t v : values) {
        if (!first) {
            s += ",";
        }
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

int cmd_construct(const Config& cfg, GraphMode mode, std::ostream& out) {
    Multigraph g = read_multigraph_file(cfg.input);
    ConstructOptions opts;
    opts.max_links = cfg.max_links;
    LinkGraphResult lg;
    if (mode == GraphMode::link && !cfg.partitions.empty()) {
        PartitionedLinkGraph plg = partitioned_link_graph(g, cfg.order, opts);
        auto f = open_output(cfg.partitions);
        write_partition(f, plg.partitioned);
        lg = std::move(plg.result);
    } else if (mode == GraphMode::link) {
        lg = link_graph(g, cfg.order, opts);
    } else {
        lg = path_graph(g, cfg.order, opts);
    }
    if (!cfg.provenance.empty()) {
        auto f = open_output(cfg.provenance);
        write_provenance(f, lg);
    }
    if (!cfg.dot.empty()) {
        auto f = open_output(cfg.dot);
        write_dot(f, lg.graph, link_labels(lg));
    }
    emit_graph(cfg, lg.graph, out);
    return kOk;
}

int cmd_incidence(const Config& cfg, std::ostream& out) {
    Multigraph g = read_multigraph_file(cfg.input);
    IncidenceReport rep = incidence_report(g, cfg.order, cfg.witnesses);
    out << "# unit\tid\tincident" << (cfg.witnesses ? "\twitness" : "") << '\n';
    auto row = [&](const char* kind, std::size_t id, bool flag, const std::optional<Link>* w) {
        out << kind << '\t' << id << '\t' << (flag ? "yes" : "no");
        if (w != nullptr) {
            out << '\t' << (w->has_value() ? format_sequence((*w)->seq) : std::string("-"));
        }
        out << '\n';
    };
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        row("vertex", v, rep.vertex_incident[v], cfg.witnesses ? &rep.vertex_witness[v] : nullptr);
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        row("edge", e, rep.edge_incident[e], cfg.witnesses ? &rep.edge_witness[e] : nullptr);
    }
    if (!cfg.output.empty()) {
        write_multigraph_file(cfg.output, rep.subgraph.graph);
    }
    if (!cfg.dot.empty()) {
        std::vector<std::string> labels;
        for (VertexId v : rep.subgraph.vertex_origin) {
            labels.push_back(std::to_string(v));
        }
        auto f = open_output(cfg.dot);
        write_dot(f, rep.subgraph.graph, labels);
    }
    return kOk;
}

int cmd_minimal(const Config& cfg, std::ostream& out) {
    Multigraph g = read_multigraph_file(cfg.input);
    auto unit = first_non_incident_unit(g, cfg.order);
    if (!unit) {
        out << "minimal\n";
        return kOk;
    }
    out << "not minimal: " << format_unit(*unit) << " lies on no " << cfg.order << "-link\n";
    return kNegative;
}

int cmd_equiv(const Config& cfg, std::ostream& out) {
    Multigraph x = read_multigraph_file(cfg.input);
    Multigraph y = read_multigraph_file(cfg.second);
    if (is_l_equivalent(x, y, cfg.order)) {
        out << "equivalent\n";
        return kOk;
    }
    out << "not equivalent\n";
    return kNegative;
}

int cmd_expand(const Config& cfg, std::ostream& out, std::ostream& err) {
    Multigraph g = read_multigraph_file(cfg.input);
    std::ifstream rf(cfg.second);
    if (!rf) {
        throw ParseError("cannot open " + cfg.second, 0);
    }
    ExpansionRecipe recipe =
        read_recipe(rf, std::filesystem::path(cfg.second).parent_path());
    ExpansionResult res = expand_class(g, cfg.order, recipe);
    for (const std::string& note : res.notes) {
        err << "note: " << note << '\n';
    }
    if (!cfg.dot.empty()) {
        auto f = open_output(cfg.dot);
        write_dot(f, res.graph);
    }
    emit_graph(cfg, res.graph, out);
    return kOk;
}

int cmd_analyze(const Config& cfg, bool have_order, std::ostream& out) {
    Multigraph g = read_multigraph_file(cfg.input);
    GraphMetrics m = compute_metrics(g);
    out << "vertices\t" << g.vertex_count() << '\n'
        << "edges\t" << g.edge_count() << '\n'
        << "components\t" << m.components << '\n'
        << "cyclic_components\t" << m.cyclic_components << '\n'
        << "acyclic_components\t" << m.acyclic_components << '\n'
        << "max_degree\t" << g.max_degree() << '\n'
        << "diameter\t" << m.diameter << '\n'
        << "radius\t" << m.radius << '\n'
        << "girth\t" << m.girth << '\n'
        << "degree_set\t" << format_set(graph_degree_set(g).values) << '\n';

    auto census = [&](const PartitionedGraph& h, const std::string& prefix) {
        ComponentCensus c = count_cyclic_components(h);
        out << prefix << "vertices\t" << h.graph.vertex_count() << '\n'
            << prefix << "edges\t" << h.graph.edge_count() << '\n'
            << prefix << "components\t" << c.components.count() << '\n'
            << prefix << "cyclic\t" << c.cyclic_count << '\n'
            << prefix << "acyclic\t" << c.acyclic_count << '\n'
            << prefix << "part_degree_set\t" << format_set(part_degree_set(h).values) << '\n'
            << prefix << "max_incident_parts\t" << max_incident_edge_parts(h) << '\n'
            << prefix << "degree_parameter\t" << degree_parameter(h) << '\n';
    };
    if (!cfg.partitions.empty()) {
        std::ifstream pf(cfg.partitions);
        if (!pf) {
            throw ParseError("cannot open " + cfg.partitions, 0);
        }
        census(read_partition(pf, g), "partitioned_");
    }
    if (have_order) {
        ConstructOptions opts;
        opts.max_links = cfg.max_links;
        PartitionedLinkGraph plg = partitioned_link_graph(g, cfg.order, opts);
        out << "order\t" << cfg.order << '\n';
        census(plg.partitioned, "link_");
    }
    return kOk;
}

int cmd_roots(const Config& cfg, std::ostream& out, std::ostream& err) {
    Multigraph h = read_multigraph_file(cfg.input);
    SearchOptions opts;
    opts.trees_only = cfg.trees_only;
    opts.forests_only = cfg.forests_only;
    opts.connected_only = cfg.connected_only;
    if (cfg.budget > 0) {
        opts.time_budget_seconds = cfg.budget;
    }
    opts.max_edges = cfg.max_edges;
    opts.threads = cfg.threads;
    RootSet set;
    try {
        set = cfg.path_mode ? minimal_path_roots(h, cfg.order, opts)
                            : minimal_link_roots(h, cfg.order, opts);
    } catch (const SearchTimeout& e) {
        const SearchStats& s = e.stats();
        err << "error: " << e.what() << "\n"
            << "frontier " << s.frontier_done << "/" << s.frontier_total << ", generated "
            << s.generated << ", pruned " << s.pruned << ", elapsed " << s.elapsed_seconds << "s\n";
        return kBudget;
    }
    out << "# " << set.roots.size() << " minimal " << cfg.order
        << (cfg.path_mode ? "-path roots\n" : "-roots\n");
    out << "index\tcanonical\tn\tm\tkind\n";
    for (std::size_t i = 0; i < set.roots.size(); ++i) {
        const Root& r = set.roots[i];
        const char* kind = r.tree ? "tree" : (r.forest ? "forest" : "cyclic");
        out << i << '\t' << r.form.hex() << '\t' << r.graph.vertex_count() << '\t'
            << r.graph.edge_count() << '\t' << kind << '\n';
    }
    // Timing varies between runs; keep it off the result stream.
    err << "generated " << set.stats.generated << ", pruned " << set.stats.pruned
        << ", component roots " << set.stats.component_roots << ", elapsed "
        << set.stats.elapsed_seconds << "s\n";
    if (!cfg.output.empty()) {
        export_roots(set, cfg.output);
    }
    return kOk;
}

int cmd_canon(const Config& cfg, std::ostream& out) {
    Multigraph g = read_multigraph_file(cfg.input);
    if (cfg.canonical_graph_out) {
        emit_graph(cfg, canonical_graph(g), out);
    } else {
        out << canonical_form(g).hex() << '\n';
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Link graphs, path graphs and their minimal roots", "linkroots"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    auto add_order = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("-l,--order", cfg.order, "Link length l >= 0");
        opt->check(CLI::NonNegativeNumber);
        if (required) {
            opt->required();
        }
        return opt;
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "Multigraph file")->required();
    };
    auto add_max_links = [&](CLI::App* sub) {
        sub->add_option("--max-links", cfg.max_links, "Refuse to build more links than this")
            ->check(CLI::PositiveNumber);
    };

    auto* link = app.add_subcommand("link", "Build the l-link graph");
    add_order(link, true);
    add_input(link);
    link->add_option("-o,--output", cfg.output, "Write the graph here instead of stdout");
    link->add_option("--partitions", cfg.partitions, "Write the natural vertex/edge partition");
    link->add_option("--provenance", cfg.provenance, "Write the link behind each vertex and edge");
    link->add_option("--dot", cfg.dot, "Write a DOT rendering");
    add_max_links(link);

    auto* pathg = app.add_subcommand("pathgraph", "Build the l-path graph");
    add_order(pathg, true);
    add_input(pathg);
    pathg->add_option("-o,--output", cfg.output, "Write the graph here instead of stdout");
    pathg->add_option("--provenance", cfg.provenance, "Write the path behind each vertex and edge");
    pathg->add_option("--dot", cfg.dot, "Write a DOT rendering");
    add_max_links(pathg);

    auto* inc = app.add_subcommand("incidence", "Flag the units lying on an l-link");
    add_order(inc, true);
    add_input(inc);
    inc->add_flag("--witnesses", cfg.witnesses, "Print an l-link through each incident unit");
    inc->add_option("-o,--output", cfg.output, "Write the incidence subgraph G[l]");
    inc->add_option("--dot", cfg.dot, "Write G[l] as DOT, labelled by original vertex ids");

    auto* minimal = app.add_subcommand("minimal", "Decide whether every unit lies on an l-link");
    add_order(minimal, true);
    add_input(minimal);

    auto* equiv = app.add_subcommand("equiv", "Decide l-equivalence of two graphs");
    add_order(equiv, true);
    add_input(equiv);
    equiv->add_option("other", cfg.second, "Second multigraph file")->required();

    auto* expand = app.add_subcommand("expand", "Grow a minimal graph inside its l-equivalence class");
    add_order(expand, true);
    add_input(expand);
    expand->add_option("recipe", cfg.second, "Recipe file")->required();
    expand->add_option("-o,--output", cfg.output, "Write the graph here instead of stdout");
    expand->add_option("--dot", cfg.dot, "Write a DOT rendering");

    auto* analyze = app.add_subcommand("analyze", "Metrics, degree sets and cyclic-component census");
    auto* analyze_order = add_order(analyze, false);
    add_input(analyze);
    analyze->add_option("--partitions", cfg.partitions, "Census of the input under this partition");
    add_max_links(analyze);

    auto* roots = app.add_subcommand("roots", "Enumerate the minimal l-roots of a target graph");
    add_order(roots, true);
    add_input(roots);
    roots->add_flag("--path", cfg.path_mode, "Enumerate minimal l-path roots instead");
    roots->add_flag("--trees-only", cfg.trees_only, "Only tree roots");
    roots->add_flag("--forests-only", cfg.forests_only, "Only forest roots");
    roots->add_flag("--connected-only", cfg.connected_only, "Only connected roots");
    roots->add_option("--budget", cfg.budget, "Time budget in seconds")->check(CLI::PositiveNumber);
    roots->add_option("--max-edges", cfg.max_edges, "Refuse searches with l*n(H) above this")
        ->check(CLI::PositiveNumber);
    roots->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
    roots->add_option("-o,--output", cfg.output, "Export root files and roots.tsv into this directory");

    auto* canon = app.add_subcommand("canon", "Print the canonical form");
    add_input(canon);
    canon->add_flag("--graph", cfg.canonical_graph_out, "Print the canonically labelled graph instead");
    canon->add_option("-o,--output", cfg.output, "With --graph: write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (link->parsed()) {
            return cmd_construct(cfg, GraphMode::link, out);
        }
        if (pathg->parsed()) {
            return cmd_construct(cfg, GraphMode::path, out);
        }
        if (inc->parsed()) {
            return cmd_incidence(cfg, out);
        }
        if (minimal->parsed()) {
            return cmd_minimal(cfg, out);
        }
        if (equiv->parsed()) {
            return cmd_equiv(cfg, out);
        }
        if (expand->parsed()) {
            return cmd_expand(cfg, out, err);
        }
        if (analyze->parsed()) {
            return cmd_analyze(cfg, analyze_order->count() > 0, out);
        }
        if (roots->parsed()) {
            return cmd_roots(cfg, out, err);
        }
        if (canon->parsed()) {
            return cmd_canon(cfg, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace linkroots::cli
