#include "pagebook/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pagebook/embedder.hpp"
#include "pagebook/generator.hpp"
#include "pagebook/oracle.hpp"
#include "pagebook/svg.hpp"
#include "pagebook/verifier.hpp"

namespace pagebook {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

EmbeddedGraph load_graph(const std::string& path) {
    try {
        return parse_rotation_graph(read_file(path));
    } catch (const GraphError& e) {
        throw GraphError(path + ": " + e.what());
    }
}

BookEmbedding load_embedding(const std::string& path) {
    try {
        return parse_embedding(read_file(path));
    } catch (const GraphError& e) {
        throw GraphError(path + ": " + e.what());
    }
}

int report(const VerifierReport& rep, std::ostream& out) {
    if (rep.ok) {
        out << "ok\n";
        return 0;
    }
    for (const auto& v : rep.violations) out << v.describe() << '\n';
    out << rep.violations.size() << " violation(s)\n";
    return 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Three-page book embeddings of planar graphs with maximum degree 5"};
    app.require_subcommand(1);

    std::string graph_file, embedding_file, out_file, svg_file;
    bool verify = false, stats = false;
    int limit = kDefaultOracleLimit;
    GenSpec spec;

    auto* embed = app.add_subcommand("embed", "Embed a graph into at most three pages");
    embed->add_option("graph", graph_file, "Graph file")->required();
    embed->add_option("out", out_file, "Output embedding file (default: stdout)");
    embed->add_flag("--verify", verify, "Check the result with the independent verifier");
    embed->add_flag("--stats", stats, "Print page counts, timing and counters to stderr");

    auto* ver = app.add_subcommand("verify", "Check an embedding against a graph");
    ver->add_option("graph", graph_file, "Graph file")->required();
    ver->add_option("embedding", embedding_file, "Embedding file")->required();

    auto* orc = app.add_subcommand("oracle", "Exact page number of a small graph");
    orc->add_option("graph", graph_file, "Graph file")->required();
    orc->add_option("--limit", limit, "Largest accepted vertex count");

    auto* gn = app.add_subcommand("gen", "Generate an instance");
    gn->add_option("--family", spec.family, "random, grid, platonic, cycle, cycle-with-chords or canned");
    gn->add_option("--n", spec.n, "Vertex count");
    gn->add_option("--seed", spec.seed, "Random seed");
    gn->add_option("--name", spec.name, "Platonic solid or canned instance name");
    gn->add_option("-o,--out", out_file, "Output graph file (default: stdout)");

    auto* drw = app.add_subcommand("draw", "Render an embedding as an SVG arc diagram");
    drw->add_option("graph", graph_file, "Graph file")->required();
    drw->add_option("embedding", embedding_file, "Embedding file")->required();
    drw->add_option("svg", svg_file, "Output SVG file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*embed) {
            const EmbeddedGraph g = load_graph(graph_file);
            const auto t0 = std::chrono::steady_clock::now();
            EmbedResult res;
            try {
                res = embed_book_with_stats(g);
            } catch (const EmbedError& e) {
                err << "embedding failed: " << e.what() << '\n';
                return 1;
            }
            const auto t1 = std::chrono::steady_clock::now();
            write_output(out_file, write_embedding(res.book), out);
            if (stats) {
                auto counts = page_edge_counts(res.book);
                counts.resize(3, 0);
                err << "n: " << g.n() << " edges: " << g.edge_count() << '\n';
                err << "pages: " << counts[0] << ' ' << counts[1] << ' ' << counts[2] << '\n';
                err << "elapsed_ms: " << std::chrono::duration<double, std::milli>(t1 - t0).count() << '\n';
                err << res.stats.summary();
            }
            if (verify) {
                VerifierReport rep = check(g, res.book, 3);
                if (!rep.ok) return report(rep, err);
            }
            return 0;
        }
        if (*ver) {
            const EmbeddedGraph g = load_graph(graph_file);
            const BookEmbedding b = load_embedding(embedding_file);
            return report(check(g, b, 3), out);
        }
        if (*orc) {
            const EmbeddedGraph g = load_graph(graph_file);
            OracleResult r = min_pages(g, limit);
            out << "min_pages=" << r.min_pages << '\n' << write_embedding(r.witness);
            return 0;
        }
        if (*gn) {
            EmbeddedGraph g = spec.family == "canned" ? canned(spec.name) : gen(spec);
            write_output(out_file, write_rotation_graph(g), out);
            return 0;
        }
        if (*drw) {
            const EmbeddedGraph g = load_graph(graph_file);
            const BookEmbedding b = load_embedding(embedding_file);
            write_output(svg_file, render_svg(g, b), out);
            return 0;
        }
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const OracleError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const GenError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace pagebook
