#pragma once

// JSON serialization for the CLI surface.  Schema version 1 throughout;
// polynomials serialize as expanded canonical {coefficient, exponents}
// records with coefficients kept as exact strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "korbit/class_engine.hpp"
#include "korbit/config.hpp"
#include "korbit/localization.hpp"
#include "korbit/orbit_parameter.hpp"
#include "korbit/polynomial.hpp"
#include "korbit/weak_order.hpp"

namespace korbit {

inline nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"coefficient", c.to_string()}, {"exponents", e}});
    return {{"nx", p.nx()}, {"ny", p.ny()}, {"terms", terms}};
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
    Polynomial p(j.at("nx").get<int>(), j.at("ny").get<int>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exponents").get<std::vector<int>>(),
                   Rational::parse(t.at("coefficient").get<std::string>()));
    return p;
}

inline nlohmann::json parameter_to_json(const OrbitParameter& param) {
    nlohmann::json j = {{"involution", param.involution.to_one_line()},
                        {"cycles", param.involution.to_cycles()}};
    if (param.component != 0) j["component"] = param.component == 1 ? "+" : "-";
    return j;
}

inline nlohmann::json config_to_json(const SymmetricPairConfig& config) {
    return {{"family", family_name(config.family)},
            {"n", config.rank},
            {"ambient", config.ambient()}};
}

inline nlohmann::json class_table_to_json(const ClassTable& table,
                                          const SymmetricPairConfig& config) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& param : table_order(table)) {
        nlohmann::json row = {{"orbit", parameter_to_json(param)},
                              {"class", polynomial_to_json(table.entries.at(param))},
                              {"class_text", table.entries.at(param).to_string()}};
        if (config.family == Family::SO_EVEN)
            row["representative"] = representative_display(param, config);
        entries.push_back(row);
    }
    return {{"schema", 1}, {"config", config_to_json(config)}, {"classes", entries}};
}

inline nlohmann::json graph_to_json(const WeakOrderGraph& graph) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& node : graph.nodes) nodes.push_back(parameter_to_json(node));
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : graph.edges)
        edges.push_back({{"source", e.source.to_string()},
                         {"target", e.target.to_string()},
                         {"root", e.root},
                         {"degree", e.degree}});
    return {{"schema", 1},
            {"config", config_to_json(graph.config)},
            {"nodes", nodes},
            {"edges", edges}};
}

inline nlohmann::json verification_report_to_json(const VerificationReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"w", r.w.to_one_line()},
                        {"expected", r.expected.to_string()},
                        {"actual", r.actual.to_string()},
                        {"pass", r.pass}});
    return {{"schema", 1},
            {"description", report.description},
            {"all_pass", report.all_pass()},
            {"rows", rows}};
}

inline nlohmann::json table_report_to_json(const TableReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"schema", 1}, {"all_pass", report.all_pass()}, {"checks", checks}};
}

}  // namespace korbit
