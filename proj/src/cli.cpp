#include "betti/cli.hpp"

#include "betti/corpus.hpp"
#include "betti/errors.hpp"
#include "betti/graphs.hpp"
#include "betti/hochster.hpp"
#include "betti/io.hpp"
#include "betti/taylor.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

namespace betti {

namespace {

// --threads wins; otherwise BETTI_THREADS; otherwise 1.  Garbage in the
// environment variable degrades to 1 rather than failing the run.
int resolve_threads(int flag_value)
{
    if (flag_value >= 1) return flag_value;
    const char* env = std::getenv("BETTI_THREADS");
    if (env == nullptr) return 1;
    try {
        const int v = std::stoi(env);
        return v >= 1 ? v : 1;
    } catch (...) {
        return 1;
    }
}

struct BettiCmd {
    std::string input;
    long long characteristic = 0;
    std::string engine = "hochster";
    bool prune = true;
    std::string format = "diagram";
    int threads = 0; // 0 = unset, fall back to BETTI_THREADS
};

struct GraphCmd {
    std::string input;
    long long characteristic = 0;
    bool complement_first = false;
    bool print_edge_ideal = false;
    bool print_index = false;
    bool print_chordal = false;
    bool print_froberg = false;
    int threads = 0;
};

struct SelftestCmd {
    long long seed = 0;
    int count = 20;
    long long characteristic = 0;
    int threads = 0;
};

std::string index_text(const std::optional<long long>& index)
{
    return index.has_value() ? std::to_string(*index) : "infinity";
}

void print_table_report(std::ostream& out, const BettiTable& table, const InvariantSummary& summary,
                        const std::string& format)
{
    if (format == "json") {
        out << betti_json(table, summary);
        return;
    }
    out << "ideal: " << table.subject << "\n";
    out << "field characteristic: " << table.field.characteristic << "\n\n";
    out << render_betti_diagram(table) << "\n";
    out << "reg = " << summary.reg << "\n";
    out << "projdim = " << summary.projdim << "\n";
    out << "linear = " << (summary.linear ? "true" : "false") << "\n";
    out << "index = " << index_text(summary.index) << "\n";
    out << "pruned cells = " << table.pruned_cells() << "\n";
}

int report_disagreement(std::ostream& err, const std::string& subject, const TableDifference& diff,
                        const std::string& lhs_name, const std::string& rhs_name)
{
    err << "engine disagreement on " << subject << " at (i, j) = (" << diff.i << ", " << diff.j
        << "): " << lhs_name << " = " << diff.lhs << ", " << rhs_name << " = " << diff.rhs << "\n";
    return 3;
}

int cmd_betti(const BettiCmd& cmd, std::ostream& out, std::ostream& err)
{
    const MonomialIdeal ideal = load_ideal_file(cmd.input);
    const FieldSpec field = make_field(cmd.characteristic);
    HochsterOptions options;
    options.prune = cmd.prune;
    options.threads = resolve_threads(cmd.threads);

    std::optional<BettiTable> hochster, taylor;
    if (cmd.engine != "taylor") hochster = hochster_betti(ideal, field, options);
    if (cmd.engine != "hochster") taylor = taylor_betti(ideal, field);
    if (hochster && taylor) {
        if (const auto diff = first_difference(*hochster, *taylor)) {
            return report_disagreement(err, ideal.to_string(), *diff, "hochster", "taylor");
        }
    }
    const BettiTable& table = hochster ? *hochster : *taylor;
    print_table_report(out, table, invariants(table, ideal), cmd.format);
    return 0;
}

int cmd_graph(const GraphCmd& cmd, std::ostream& out, std::ostream& /*err*/)
{
    Graph graph = load_graph_file(cmd.input);
    if (cmd.complement_first) graph = complement(graph);

    bool printed = false;
    if (cmd.print_edge_ideal) {
        out << ideal_to_text(edge_ideal(graph));
        printed = true;
    }
    if (cmd.print_chordal) {
        out << "chordal = " << (is_chordal(graph) ? "true" : "false") << "\n";
        printed = true;
    }
    if (cmd.print_index) {
        const auto index = index_via_cycles(graph);
        out << "index = " << (index.has_value() ? std::to_string(*index) : "infinity") << "\n";
        printed = true;
    }
    if (cmd.print_froberg) {
        const FrobergReport report = froberg_check(graph, make_field(cmd.characteristic));
        out << "linear resolution of complement edge ideal = " << (report.linear ? "true" : "false") << "\n";
        out << "chordal = " << (report.chordal ? "true" : "false") << "\n";
        out << "agree = " << (report.agree ? "true" : "false") << "\n";
        printed = true;
    }
    if (!printed) out << graph_to_text(graph);
    return 0;
}

int cmd_polarize(const std::string& input, std::ostream& out)
{
    out << polarization_to_text(load_ideal_file(input));
    return 0;
}

int cmd_complex(const std::string& input, std::ostream& out)
{
    const MonomialIdeal ideal = load_ideal_file(input);
    if (!ideal.squarefree()) {
        throw DomainError("ideal is not square-free; run 'polarize' first");
    }
    out << complex_report(complex_from_squarefree_ideal(ideal));
    return 0;
}

int cmd_selftest(const SelftestCmd& cmd, std::ostream& out, std::ostream& err)
{
    const FieldSpec field = make_field(cmd.characteristic);
    const int threads = resolve_threads(cmd.threads);
    std::mt19937_64 rng(static_cast<std::uint64_t>(cmd.seed));
    int checked = 0;
    for (int k = 0; k < cmd.count; ++k) {
        const MonomialIdeal ideal = random_ideal(rng);
        if (ideal.is_zero() || ideal.is_unit()) continue;
        HochsterOptions pruned;
        pruned.threads = threads;
        HochsterOptions unpruned;
        unpruned.prune = false;
        unpruned.threads = threads;
        const BettiTable with_prune = hochster_betti(ideal, field, pruned);
        const BettiTable without_prune = hochster_betti(ideal, field, unpruned);
        const BettiTable taylor = taylor_betti(ideal, field);
        if (const auto diff = first_difference(with_prune, without_prune)) {
            return report_disagreement(err, ideal.to_string(), *diff, "pruned", "unpruned");
        }
        if (const auto diff = first_difference(with_prune, taylor)) {
            return report_disagreement(err, ideal.to_string(), *diff, "hochster", "taylor");
        }
        ++checked;
    }
    out << "self-test passed: " << checked << " ideals agree across pruned / unpruned / taylor"
        << " (seed " << cmd.seed << ", characteristic " << field.characteristic << ")\n";
    return 0;
}

void add_char_option(CLI::App* sub, long long& target)
{
    sub->add_option("--char", target, "Field characteristic: 0 (rationals) or a prime")
        ->default_val(0)
        ->check(CLI::NonNegativeNumber);
}

void add_threads_option(CLI::App* sub, int& target)
{
    sub->add_option("--threads", target, "Worker threads (default: BETTI_THREADS or 1)");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Graded Betti tables of monomial ideals via simplicial homology"};
    app.require_subcommand(1);

    BettiCmd betti_cmd;
    auto* betti_sub = app.add_subcommand("betti", "Betti diagram and invariants of an ideal file");
    betti_sub->add_option("--input", betti_cmd.input, "Ideal file")->required();
    add_char_option(betti_sub, betti_cmd.characteristic);
    betti_sub->add_option("--engine", betti_cmd.engine, "Engine: hochster, taylor, or both")
        ->default_val("hochster")
        ->check(CLI::IsMember({"hochster", "taylor", "both"}));
    betti_sub->add_flag("--prune,!--no-prune", betti_cmd.prune, "Zero-propagation pruning (default on)");
    betti_sub->add_option("--format", betti_cmd.format, "Output format: diagram or json")
        ->default_val("diagram")
        ->check(CLI::IsMember({"diagram", "json"}));
    add_threads_option(betti_sub, betti_cmd.threads);

    GraphCmd graph_cmd;
    auto* graph_sub = app.add_subcommand("graph", "Graph reports: edge ideal, chordality, index");
    graph_sub->add_option("--input", graph_cmd.input, "Graph file")->required();
    add_char_option(graph_sub, graph_cmd.characteristic);
    graph_sub->add_flag("--complement", graph_cmd.complement_first, "Work with the complement graph");
    graph_sub->add_flag("--edge-ideal", graph_cmd.print_edge_ideal, "Print the edge ideal");
    graph_sub->add_flag("--index", graph_cmd.print_index, "Print the index from induced cycle lengths");
    graph_sub->add_flag("--chordal", graph_cmd.print_chordal, "Print chordality");
    graph_sub->add_flag("--froberg", graph_cmd.print_froberg,
                        "Compare chordality with linearity of the complement edge ideal resolution");
    add_threads_option(graph_sub, graph_cmd.threads);

    std::string polarize_input;
    auto* polarize_sub = app.add_subcommand("polarize", "Print the square-free polarization of an ideal file");
    polarize_sub->add_option("--input", polarize_input, "Ideal file")->required();

    std::string complex_input;
    auto* complex_sub = app.add_subcommand("complex", "Facets and minimal non-faces of a square-free ideal");
    complex_sub->add_option("--input", complex_input, "Ideal file")->required();

    SelftestCmd selftest_cmd;
    auto* selftest_sub = app.add_subcommand("selftest", "Cross-check the engines on seeded random ideals");
    selftest_sub->add_option("--seed", selftest_cmd.seed, "Random seed")->default_val(0);
    selftest_sub->add_option("--count", selftest_cmd.count, "Number of random ideals")
        ->default_val(20)
        ->check(CLI::PositiveNumber);
    add_char_option(selftest_sub, selftest_cmd.characteristic);
    add_threads_option(selftest_sub, selftest_cmd.threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (betti_sub->parsed()) return cmd_betti(betti_cmd, out, err);
        if (graph_sub->parsed()) return cmd_graph(graph_cmd, out, err);
        if (polarize_sub->parsed()) return cmd_polarize(polarize_input, out);
        if (complex_sub->parsed()) return cmd_complex(complex_input, out);
        if (selftest_sub->parsed()) return cmd_selftest(selftest_cmd, out, err);
    } catch (const CapError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const ArithmeticError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand selected\n";
    return 1;
}

} // namespace betti
