#pragma once

// Drives weak-order generation and the divided-difference recursion
// together: seeds with the closed-orbit classes, pushes [Y'] = (1/d)
// partial_i([Y]) along every move, checks path independence at every
// multi-parent node, and resolves SO_EVEN split edges with the already
// computed source classes.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "korbit/closed_orbits.hpp"
#include "korbit/config.hpp"
#include "korbit/degeneracy.hpp"
#include "korbit/errors.hpp"
#include "korbit/localization.hpp"
#include "korbit/orbit_parameter.hpp"
#include "korbit/polynomial.hpp"
#include "korbit/weak_order.hpp"

namespace korbit {

struct ClassTable {
    SymmetricPairConfig config;
    std::map<OrbitParameter, Polynomial> entries;
    // Every (parent, root) pair that produced or re-derived the entry.
    std::map<OrbitParameter, std::vector<std::pair<OrbitParameter, int>>> provenance;

    explicit ClassTable(const SymmetricPairConfig& cfg) : config(cfg) {}
};

namespace detail {

inline std::vector<OrbitParameter> expected_node_set(const SymmetricPairConfig& config) {
    std::vector<OrbitParameter> nodes;
    int N = config.ambient();
    if (config.family == Family::SP) {
        for (const auto& b : enumerate_fpf_involutions(N)) nodes.emplace_back(b);
    } else if (config.family == Family::SO_EVEN) {
        for (const auto& b : enumerate_involutions(N)) {
            if (b.is_fixed_point_free_involution()) {
                nodes.emplace_back(b, +1);
                nodes.emplace_back(b, -1);
            } else {
                nodes.emplace_back(b);
            }
        }
    } else {
        for (const auto& b : enumerate_involutions(N)) nodes.emplace_back(b);
    }
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

}  // namespace detail

inline std::pair<WeakOrderGraph, ClassTable> compute_classes(const SymmetricPairConfig& config) {
    int N = config.ambient();
    ClassTable table(config);
    WeakOrderGraph graph(config);

    // Pending nodes bucketed by involution length; processed longest first
    // so every parent class exists before its children are derived.
    std::map<int, std::set<OrbitParameter>> pending;
    for (const auto& seed : closed_orbit_classes(config)) {
        seed.parameter.validate(config);
        table.entries.emplace(seed.parameter, seed.cls);
        table.provenance[seed.parameter] = {};
        pending[length(seed.parameter.involution)].insert(seed.parameter);
    }

    auto record = [&](const OrbitParameter& source, const OrbitParameter& target, int root,
                      int degree, const Polynomial& candidate) {
        graph.edges.push_back({source, target, root, degree});
        table.provenance[target].emplace_back(source, root);
        if (candidate.is_zero() ||
            candidate.total_degree() != table.entries.at(source).total_degree() - 1)
            throw invariant_error("compute_classes: degree did not drop by 1 along edge " +
                                  source.to_string() + " ->_" + std::to_string(root) + " " +
                                  target.to_string());
        auto it = table.entries.find(target);
        if (it != table.entries.end()) {
            if (it->second != candidate)
                throw invariant_error("compute_classes: path independence failed at " +
                                      target.to_string() + " via " + source.to_string() +
                                      " with root " + std::to_string(root));
            return;
        }
        table.entries.emplace(target, candidate);
        pending[length(target.involution)].insert(target);
    };

    while (!pending.empty()) {
        auto last = std::prev(pending.end());
        std::set<OrbitParameter> batch = std::move(last->second);
        pending.erase(last);
        for (const auto& param : batch) {
            const Polynomial source_class = table.entries.at(param);
            for (int i = 1; i < N; ++i) {
                InvolutionStep step = involution_step(param.involution, i, config);
                if (!step.moved) continue;
                bool source_split = param.component != 0;
                bool target_split = config.has_split_orbits() &&
                                    step.target.is_fixed_point_free_involution();
                if (!source_split && target_split)
                    throw invariant_error(
                        "compute_classes: unsplit source produced a split target at " +
                        param.to_string() + " with root " + std::to_string(i));
                if (source_split && !target_split) {
                    // Blue O-edge out of a split orbit: each component maps
                    // to the unsplit target along a black edge.
                    record(param, OrbitParameter(step.target), i, 1,
                           source_class.divided_difference(i));
                } else if (source_split && target_split) {
                    int sign = resolve_split_edge(param, i, config, source_class);
                    record(param, OrbitParameter(step.target, sign), i, 1,
                           source_class.divided_difference(i));
                } else {
                    Polynomial cand = source_class.divided_difference(i);
                    if (step.degree == 2) cand *= Rational(1, 2);
                    record(param, OrbitParameter(step.target), i, step.degree, cand);
                }
            }
        }
    }

    for (const auto& [param, cls] : table.entries) {
        if (!cls.has_integer_coefficients())
            throw invariant_error("compute_classes: non-integer coefficients at " +
                                  param.to_string());
        if (!cls.satisfies_y_discipline())
            throw invariant_error("compute_classes: y-discipline violation at " + param.to_string());
    }

    for (const auto& [param, cls] : table.entries) graph.nodes.push_back(param);
    std::sort(graph.nodes.begin(), graph.nodes.end());
    if (graph.nodes != detail::expected_node_set(config))
        throw invariant_error("compute_classes: generated node set does not match the orbit "
                              "parameter enumeration");
    std::sort(graph.edges.begin(), graph.edges.end(),
              [](const WeakOrderEdge& a, const WeakOrderEdge& b) {
                  if (a.source != b.source) return a.source < b.source;
                  if (a.root != b.root) return a.root < b.root;
                  return a.target < b.target;
              });
    return {graph, table};
}

inline WeakOrderGraph generate_graph(const SymmetricPairConfig& config) {
    return compute_classes(config).first;
}

// Display order matching the appendix layout: closed orbits first (longest
// involutions), dense orbit last.
inline std::vector<OrbitParameter> table_order(const ClassTable& table) {
    std::vector<OrbitParameter> order;
    for (const auto& [param, cls] : table.entries) order.push_back(param);
    std::sort(order.begin(), order.end(), [](const OrbitParameter& a, const OrbitParameter& b) {
        int la = length(a.involution), lb = length(b.involution);
        if (la != lb) return la > lb;
        return a < b;
    });
    return order;
}

// Representative column: the coordinate flag of the component
// representative for split parameters, the canonical representative flag
// otherwise.
inline std::string representative_display(const OrbitParameter& param,
                                          const SymmetricPairConfig& config) {
    if (param.component != 0)
        return coordinate_flag(component_representative(param.involution, param.component, config))
            .to_string();
    return representative_flag(param.involution, config).to_string();
}

struct TableCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct TableReport {
    std::vector<TableCheck> checks;

    int failures() const {
        int f = 0;
        for (const auto& c : checks)
            if (!c.pass) ++f;
        return f;
    }
    bool all_pass() const { return failures() == 0; }
};

// Aggregated soundness checks on a computed table: vanishing outside
// (O-level) closures, integrality, top class = 1, and for SO_EVEN the
// component-sum identity against the O_EVEN table.
inline TableReport verify_table(const ClassTable& table, const WeakOrderGraph& graph,
                                const SymmetricPairConfig& config) {
    TableReport report;
    int N = config.ambient();

    for (const auto& [param, cls] : table.entries) {
        VerificationReport v = verify_vanishing_outside_closure(cls, param.involution, config);
        report.checks.push_back({"vanishing outside closure of " + param.to_string(),
                                 v.all_pass(),
                                 std::to_string(v.failures()) + " of " +
                                     std::to_string(v.rows.size()) + " checks failed"});
    }

    bool integral = true;
    for (const auto& [param, cls] : table.entries)
        if (!cls.has_integer_coefficients()) integral = false;
    report.checks.push_back({"integer coefficients", integral, ""});

    Permutation top = Permutation::identity(N);
    if (config.family == Family::SP) {
        std::vector<int> w(N);
        for (int i = 0; i < N; i += 2) {
            w[i] = i + 2;
            w[i + 1] = i + 1;
        }
        top = Permutation(std::move(w));
    }
    auto top_it = table.entries.find(OrbitParameter(top));
    bool top_ok = top_it != table.entries.end() &&
                  top_it->second == Polynomial::constant(N, config.rank, Rational(1));
    report.checks.push_back({"dense-orbit class is 1", top_ok, top.to_cycles()});

    if (config.family == Family::SO_EVEN) {
        ClassTable oeven = compute_classes(SymmetricPairConfig(Family::O_EVEN, config.rank)).second;
        bool sums_ok = true;
        std::string detail;
        for (const auto& b : enumerate_fpf_involutions(N)) {
            Polynomial sum = table.entries.at(OrbitParameter(b, +1)) +
                             table.entries.at(OrbitParameter(b, -1));
            if (sum != oeven.entries.at(OrbitParameter(b))) {
                sums_ok = false;
                detail += b.to_cycles() + " ";
            }
        }
        report.checks.push_back({"component-sum identity vs O_EVEN", sums_ok, detail});
    }

    (void)graph;
    return report;
}

inline std::string render_table_text(const ClassTable& table, const SymmetricPairConfig& config) {
    std::string s;
    bool with_rep = config.family == Family::SO_EVEN;
    for (const auto& param : table_order(table)) {
        s += param.to_string();
        if (with_rep) s += "  " + representative_display(param, config);
        s += ": " + table.entries.at(param).to_string() + "\n";
    }
    return s;
}

inline std::string render_table_markdown(const ClassTable& table,
                                         const SymmetricPairConfig& config) {
    bool with_rep = config.family == Family::SO_EVEN;
    std::string s = with_rep ? "| orbit | representative | class |\n|---|---|---|\n"
                             : "| orbit | class |\n|---|---|\n";
    for (const auto& param : table_order(table)) {
        s += "| " + param.to_string() + " | ";
        if (with_rep) s += representative_display(param, config) + " | ";
        s += table.entries.at(param).to_string() + " |\n";
    }
    return s;
}

inline std::string render_table_latex(const ClassTable& table, const SymmetricPairConfig& config) {
    bool with_rep = config.family == Family::SO_EVEN;
    std::string s = "\\begin{tabular}{" + std::string(with_rep ? "lll" : "ll") + "}\n";
    s += with_rep ? "orbit & representative & class \\\\\n\\hline\n"
                  : "orbit & class \\\\\n\\hline\n";
    for (const auto& param : table_order(table)) {
        s += "$" + param.to_string() + "$ & ";
        if (with_rep) s += "$" + representative_display(param, config) + "$ & ";
        s += "$" + table.entries.at(param).to_latex() + "$ \\\\\n";
    }
    s += "\\end{tabular}\n";
    return s;
}

}  // namespace korbit
