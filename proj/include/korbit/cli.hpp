#pragma once

// Command-line surface.  Subcommands: orbits, classes, graph, verify,
// locus.  Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 internal invariant violation.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "korbit/class_engine.hpp"
#include "korbit/closed_orbits.hpp"
#include "korbit/config.hpp"
#include "korbit/degeneracy.hpp"
#include "korbit/errors.hpp"
#include "korbit/io.hpp"
#include "korbit/localization.hpp"
#include "korbit/weak_order.hpp"

namespace korbit {
namespace cli {

struct RunConfig {
    std::string family = "o-odd";
    int n = 1;
    std::string format;
    std::string involution;
    std::string component;
};

inline int cmd_orbits(const RunConfig& rc, std::ostream& out) {
    SymmetricPairConfig config(parse_family(rc.family), rc.n);
    ClassTable table = compute_classes(config).second;
    if (rc.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& param : table_order(table))
            rows.push_back({{"orbit", parameter_to_json(param)},
                            {"representative", representative_display(param, config)},
                            {"length", length(param.involution)}});
        out << nlohmann::json{{"schema", 1}, {"config", config_to_json(config)}, {"orbits", rows}}
                   .dump(2)
            << "\n";
    } else if (rc.format == "markdown") {
        out << "| orbit | representative |\n|---|---|\n";
        for (const auto& param : table_order(table))
            out << "| " << param.to_string() << " | " << representative_display(param, config)
                << " |\n";
    } else {
        for (const auto& param : table_order(table))
            out << param.to_string() << "  " << representative_display(param, config) << "\n";
    }
    return 0;
}

inline int cmd_classes(const RunConfig& rc, std::ostream& out) {
    SymmetricPairConfig config(parse_family(rc.family), rc.n);
    ClassTable table = compute_classes(config).second;
    if (rc.format == "json")
        out << class_table_to_json(table, config).dump(2) << "\n";
    else if (rc.format == "markdown")
        out << render_table_markdown(table, config);
    else if (rc.format == "latex")
        out << render_table_latex(table, config);
    else
        out << render_table_text(table, config);
    return 0;
}

inline int cmd_graph(const RunConfig& rc, std::ostream& out) {
    SymmetricPairConfig config(parse_family(rc.family), rc.n);
    WeakOrderGraph graph = generate_graph(config);
    if (rc.format == "json")
        out << graph_to_json(graph).dump(2) << "\n";
    else
        out << graph.to_dot();
    return 0;
}

inline int cmd_verify(const RunConfig& rc, std::ostream& out) {
    SymmetricPairConfig config(parse_family(rc.family), rc.n);
    TableReport summary;
    for (const auto& datum : closed_orbit_classes(config)) {
        VerificationReport v = verify_closed_orbit_class(datum.cls, config,
                                                         datum.parameter.component);
        summary.checks.push_back({"localization of closed orbit " + datum.parameter.to_string(),
                                  v.all_pass(),
                                  std::to_string(v.rows.size()) + " fixed points checked"});
    }
    auto [graph, table] = compute_classes(config);
    TableReport t = verify_table(table, graph, config);
    summary.checks.insert(summary.checks.end(), t.checks.begin(), t.checks.end());

    if (rc.format == "json") {
        out << table_report_to_json(summary).dump(2) << "\n";
    } else {
        for (const auto& c : summary.checks) {
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
            if (!c.pass && !c.detail.empty()) out << " (" << c.detail << ")";
            out << "\n";
        }
        out << (summary.all_pass() ? "all checks passed" : "FAILURES PRESENT") << "\n";
    }
    return summary.all_pass() ? 0 : 1;
}

inline int cmd_locus(const RunConfig& rc, std::ostream& out) {
    SymmetricPairConfig config(parse_family(rc.family), rc.n);
    int N = config.ambient();
    Permutation b = Permutation::parse(rc.involution, N);
    if (!b.is_involution())
        throw std::invalid_argument("locus: --involution must be an involution");
    int component = 0;
    if (config.has_split_orbits() && b.is_fixed_point_free_involution()) {
        if (rc.component == "+")
            component = +1;
        else if (rc.component == "-")
            component = -1;
        else
            throw std::invalid_argument("locus: split orbit needs --component + or -");
    } else if (!rc.component.empty()) {
        throw std::invalid_argument("locus: --component only applies to split SO_EVEN orbits");
    }
    OrbitParameter param(b, component);
    param.validate(config);

    ClassTable table = compute_classes(config).second;
    const Polynomial& cls = table.entries.at(param);
    ChernFormula chern = to_chern_formula(cls, config);
    auto bound = rank_table(b);

    if (rc.format == "json") {
        nlohmann::json conds = nlohmann::json::array();
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                conds.push_back({{"i", i}, {"j", j}, {"rank_bound", bound[i - 1][j - 1]}});
        out << nlohmann::json{{"schema", 1},
                              {"config", config_to_json(config)},
                              {"orbit", parameter_to_json(param)},
                              {"conditions", conds},
                              {"class", polynomial_to_json(cls)},
                              {"chern_formula", chern.to_text()}}
                   .dump(2)
            << "\n";
    } else {
        bool latex = rc.format == "latex";
        out << "degeneracy locus for orbit " << param.to_string() << ", family "
            << family_name(config.family) << ", n=" << config.rank << "\n";
        out << "rank conditions on the flag (F_i) and the form gamma:\n";
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                out << "  rank(gamma|F_" << i << " x F_" << j << ") <= " << bound[i - 1][j - 1]
                    << "\n";
        out << "class: " << (latex ? cls.to_latex() : cls.to_string()) << "\n";
        out << "chern formula: " << (latex ? chern.to_latex() : chern.to_text()) << "\n";
    }
    return 0;
}

inline int run(int argc, const char* const* argv) {
    CLI::App app{"equivariant classes of K-orbit closures on the flag variety"};
    app.require_subcommand(1);
    RunConfig rc;

    auto add_common = [&rc](CLI::App* sub, const std::vector<std::string>& formats) {
        sub->add_option("--family", rc.family, "symmetric pair family")
            ->required()
            ->check(CLI::IsMember({"o-odd", "o-even", "so-even", "sp"}));
        sub->add_option("--n", rc.n, "rank n (ambient 2n+1 for o-odd, 2n otherwise)")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", rc.format, "output format")->check(CLI::IsMember(formats));
    };

    CLI::App* orbits = app.add_subcommand("orbits", "list orbit parameters and representatives");
    CLI::App* classes = app.add_subcommand("classes", "compute the table of equivariant classes");
    CLI::App* graph = app.add_subcommand("graph", "emit the weak-order graph");
    CLI::App* verify = app.add_subcommand("verify", "run localization and vanishing suites");
    CLI::App* locus = app.add_subcommand("locus", "rank conditions and Chern formula for one orbit");
    add_common(orbits, {"text", "json", "markdown"});
    add_common(classes, {"text", "json", "markdown", "latex"});
    add_common(graph, {"dot", "json"});
    add_common(verify, {"text", "json"});
    add_common(locus, {"text", "json", "latex"});
    locus->add_option("--involution", rc.involution,
                      "orbit parameter, one-line (\"4321\") or cycles (\"(1,4)(2,3)\")")
        ->required();
    locus->add_option("--component", rc.component, "+ or - for split SO_EVEN orbits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (rc.format.empty()) rc.format = graph->parsed() ? "dot" : "text";

    try {
        if (orbits->parsed()) return cmd_orbits(rc, std::cout);
        if (classes->parsed()) return cmd_classes(rc, std::cout);
        if (graph->parsed()) return cmd_graph(rc, std::cout);
        if (verify->parsed()) return cmd_verify(rc, std::cout);
        if (locus->parsed()) return cmd_locus(rc, std::cout);
        return 2;
    } catch (const invariant_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace korbit
