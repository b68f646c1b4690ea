#include "ore/cli.hpp"

#include "ore/canonical.hpp"
#include "ore/errors.hpp"
#include "ore/extremal.hpp"
#include "ore/metrics.hpp"
#include "ore/oracle.hpp"
#include "ore/serialize.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

namespace ore::cli {

namespace {

enum class Format { graph6, edgelist, dot };

const std::map<std::string, Format> format_names{
    {"graph6", Format::graph6}, {"edgelist", Format::edgelist}, {"dot", Format::dot}};

const std::map<std::string, FormulaMode> mode_names{
    {"corrected", FormulaMode::corrected}, {"paper-literal", FormulaMode::paper_literal}};

void write_graph(std::ostream& out, const Graph& g, Format format)
{
    switch (format) {
    case Format::graph6:
        out << to_graph6(g) << '\n';
        break;
    case Format::edgelist:
        out << to_edge_list(g);
        break;
    case Format::dot:
        out << to_dot(g);
        break;
    }
}

auto yes_no(bool b) -> const char*
{
    return b ? "true" : "false";
}

void write_report_text(std::ostream& out, const OracleReport& r)
{
    out << "n=" << r.params.n() << " k=" << r.params.k() << " d=" << r.params.d() << " max_size=";
    if (r.max_size)
        out << *r.max_size;
    else
        out << "infeasible";
    out << " corrected=" << formula_f(r.params, FormulaMode::corrected)
        << " paper_literal=" << formula_f(r.params, FormulaMode::paper_literal)
        << " corrected_match=" << yes_no(r.corrected_match)
        << " paper_literal_match=" << yes_no(r.paper_literal_match) << " family_match=" << yes_no(r.family_match)
        << " extremal=" << r.extremal.size() << '\n';
}

auto mismatched(const OracleReport& r) -> bool
{
    return !r.corrected_match || !r.family_match;
}

auto strip(std::string line) -> std::string
{
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    return line;
}

void check_stream(std::istream& in, std::ostream& out, int k)
{
    out << "graph6\torder\tsize\tdiameter\tkappa\textremal\n";
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty())
            continue;
        const Graph g = from_graph6(line);
        out << line << '\t' << g.order() << '\t' << g.size() << '\t';
        if (g.order() == 0) {
            out << "-\t-\tfalse\n";
            continue;
        }
        const Diameter diam = diameter(g);
        if (diam.is_disconnected())
            out << "disconnected";
        else
            out << diam.value();
        out << '\t' << vertex_connectivity(g).kappa << '\t' << yes_no(is_extremal(g, k)) << '\n';
    }
}

} // namespace

auto run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) -> int
{
    CLI::App app{"Maximum size of k-connected graphs with given order and diameter"};
    app.name("ore");
    app.require_subcommand(1);

    int n = 0;
    int k = 0;
    int d = 0;
    FormulaMode mode = FormulaMode::corrected;
    Format format = Format::graph6;
    std::string input = "-";
    bool json = false;
    bool emit_extremal = false;
    int n_max = 0;
    int k_max = 0;
    int d_max = 0;
    OracleOptions options;

    auto add_nkd = [&](CLI::App* sub) {
        sub->add_option("--n", n, "order")->required();
        sub->add_option("--k", k, "connectivity level")->required();
        sub->add_option("--d", d, "diameter")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "graph6, edgelist or dot")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    };
    auto add_guards = [&](CLI::App* sub) {
        sub->add_option("--max-order", options.max_order, "largest n for exhaustive search")
            ->check(CLI::Range(1, canonical_max_order));
        sub->add_option("--budget", options.budget, "candidate graphs before aborting");
    };

    auto* formula = app.add_subcommand("formula", "closed-form maximum size");
    add_nkd(formula);
    formula->add_option("--mode", mode, "corrected or paper-literal")
        ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));

    auto* backbone = app.add_subcommand("backbone", "the sequential join K1 v Kk v ... v Kk v K1");
    backbone->add_option("--k", k, "connectivity level")->required();
    backbone->add_option("--d", d, "diameter")->required();
    add_format(backbone);

    auto* family = app.add_subcommand("family", "extremal graphs, one per isomorphism class");
    add_nkd(family);
    add_format(family);

    auto* check = app.add_subcommand("check", "invariants and extremality of graph6 lines");
    check->add_option("--k", k, "connectivity level")->required();
    check->add_option("--input", input, "graph6 file, or - for standard input");

    auto* oracle = app.add_subcommand("oracle", "exhaustive maximum size");
    add_nkd(oracle);
    oracle->add_flag("--json", json);
    oracle->add_flag("--emit-extremal", emit_extremal, "list maximizers as graph6");
    add_guards(oracle);

    auto* verify = app.add_subcommand("verify", "compare exhaustive search with the formula and family");
    add_nkd(verify);
    verify->add_flag("--json", json);
    add_guards(verify);

    auto* sweep_cmd = app.add_subcommand("sweep", "verify every instance within bounds");
    sweep_cmd->add_option("--n-max", n_max, "largest order")->required();
    sweep_cmd->add_option("--k-max", k_max, "largest connectivity level (default: n-max)");
    sweep_cmd->add_option("--d-max", d_max, "largest diameter (default: n-max - 1)");
    sweep_cmd->add_flag("--json", json);
    add_guards(sweep_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return usage;
    }

    try {
        if (formula->parsed()) {
            const Parameters p(n, k, d);
            out << formula_f(p, mode) << '\n';
            if (formula_exceeds_complete(p, mode))
                err << "warning: value exceeds C(n,2) = " << n * (n - 1) / 2 << " and is infeasible\n";
        } else if (backbone->parsed()) {
            write_graph(out, build_T(k, d).graph, format);
        } else if (family->parsed()) {
            const auto members = enumerate_family(Parameters(n, k, d));
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (i > 0 && format != Format::graph6)
                    out << '\n';
                write_graph(out, members[i], format);
            }
        } else if (check->parsed()) {
            if (k < 1)
                throw DomainError("k must be at least 1");
            if (input == "-") {
                check_stream(in, out, k);
            } else {
                std::ifstream file(input);
                if (!file) {
                    err << "cannot open " << input << '\n';
                    return usage;
                }
                check_stream(file, out, k);
            }
        } else if (oracle->parsed()) {
            const OracleReport r = max_size_bruteforce(Parameters(n, k, d), options);
            if (json) {
                out << to_json(r).dump() << '\n';
            } else {
                if (r.max_size)
                    out << *r.max_size << '\n';
                else
                    out << "infeasible\n";
                if (emit_extremal)
                    for (const auto& s : r.extremal)
                        out << s << '\n';
            }
        } else if (verify->parsed()) {
            const OracleReport r = verify_theorem(Parameters(n, k, d), options);
            if (json)
                out << to_json(r).dump() << '\n';
            else
                write_report_text(out, r);
            return mismatched(r) ? mismatch : ok;
        } else if (sweep_cmd->parsed()) {
            if (k_max == 0)
                k_max = n_max;
            if (d_max == 0)
                d_max = std::max(2, n_max - 1);
            if (n_max > std::min(options.max_order, canonical_max_order))
                throw CapacityError("--n-max above the oracle guard");
            bool any_mismatch = false;
            for (const auto& r : sweep(n_max, k_max, d_max, options)) {
                if (json)
                    out << to_json(r).dump() << '\n';
                else
                    write_report_text(out, r);
                any_mismatch = any_mismatch || mismatched(r);
            }
            return any_mismatch ? mismatch : ok;
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return capacity;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return invalid_parameters;
    }
    return ok;
}

} // namespace ore::cli
