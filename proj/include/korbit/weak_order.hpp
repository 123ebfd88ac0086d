#pragma once

// Weak-order moves on orbit parameters.  The O families use the three-rule
// cascade (stay / black conjugation / blue multiplication), Sp the two-rule
// one.  SO_EVEN component bookkeeping: a blue O-edge out of a split orbit
// becomes two black component edges into the unsplit target; a black O-edge
// between split orbits is disambiguated by restricting the pushed class at
// the two candidate component representatives.

#include <string>
#include <vector>

#include "korbit/config.hpp"
#include "korbit/degeneracy.hpp"
#include "korbit/errors.hpp"
#include "korbit/localization.hpp"
#include "korbit/orbit_parameter.hpp"
#include "korbit/permutation.hpp"
#include "korbit/polynomial.hpp"

namespace korbit {

// Result of one simple-root move at the involution (O- or Sp-) level.
struct InvolutionStep {
    bool moved = false;
    Permutation target;  // valid if moved
    int degree = 0;      // 1 = black, 2 = blue
};

// s_i action on the orbit of b.  Involutions only; the descent test
// l(s_i b) < l(b) reads b(i) > b(i+1) because b is its own inverse.
inline InvolutionStep involution_step(const Permutation& b, int i,
                                      const SymmetricPairConfig& config) {
    int N = config.ambient();
    if (b.size() != N) throw std::invalid_argument("involution_step: ambient mismatch");
    if (!b.is_involution()) throw std::invalid_argument("involution_step: b must be an involution");
    if (i < 1 || i >= N) throw std::invalid_argument("involution_step: root index out of range");

    if (b(i) < b(i + 1)) return {};  // ascent: s_i . Q_b = Q_b
    Permutation s = Permutation::transposition(N, i, i + 1);
    Permutation conj = s * b * s;
    if (conj != b) return {true, conj, 1};
    if (config.family == Family::SP) return {};  // Sp: no blue moves
    return {true, s * b, 2};
}

// The coordinate-flag fixed point representing a component of a split
// SO_EVEN orbit: "+" reads the unit-vector positions off the
// representative flag (all unit vectors for fixed point-free b); "-"
// additionally exchanges the values n and n+1.
inline Permutation component_representative(const Permutation& b, int sign,
                                            const SymmetricPairConfig& config) {
    if (config.family != Family::SO_EVEN)
        throw std::invalid_argument("component_representative: SO_EVEN only");
    if (!b.is_fixed_point_free_involution())
        throw std::invalid_argument("component_representative: b must be fixed point-free");
    int N = config.ambient(), n = config.rank;
    FlagBasis basis = representative_flag(b, config);
    std::vector<int> word(N, 0);
    for (int k = 0; k < N; ++k) {
        int idx = 0;
        for (int a = 1; a <= N; ++a)
            if (basis.vectors[k][a - 1] != 0) {
                if (idx != 0)
                    throw invariant_error("component_representative: flag is not a coordinate flag");
                idx = a;
            }
        word[k] = idx;
    }
    Permutation w{std::move(word)};
    if (sign == -1) w = Permutation::transposition(N, n, n + 1) * w;
    return w;
}

// Picks the target component for a black edge between split orbits: push
// the source class with partial_i, restrict at both candidate
// representatives; exactly one restriction must be nonzero.
inline int resolve_split_edge(const OrbitParameter& source, int i,
                              const SymmetricPairConfig& config,
                              const Polynomial& class_of_source) {
    source.validate(config);
    if (source.component == 0)
        throw std::invalid_argument("resolve_split_edge: source must be a split component");
    InvolutionStep step = involution_step(source.involution, i, config);
    if (!step.moved || step.degree != 1 || !step.target.is_fixed_point_free_involution())
        throw std::invalid_argument("resolve_split_edge: move is not a black edge between split orbits");

    Polynomial pushed = class_of_source.divided_difference(i);
    bool plus_nonzero =
        !restrict_at_fixed_point(pushed, component_representative(step.target, +1, config), config)
             .is_zero();
    bool minus_nonzero =
        !restrict_at_fixed_point(pushed, component_representative(step.target, -1, config), config)
             .is_zero();
    if (plus_nonzero == minus_nonzero)
        throw ambiguity_error("resolve_split_edge: restriction test is ambiguous at " +
                              source.to_string() + " with root " + std::to_string(i) + " (" +
                              (plus_nonzero ? "both nonzero" : "both zero") + ")");
    return plus_nonzero ? +1 : -1;
}

struct WeakOrderEdge {
    OrbitParameter source;
    OrbitParameter target;
    int root;    // simple root index i
    int degree;  // 1 = black, 2 = blue
};

struct WeakOrderGraph {
    SymmetricPairConfig config;
    std::vector<OrbitParameter> nodes;  // sorted
    std::vector<WeakOrderEdge> edges;   // sorted by (source, root)

    explicit WeakOrderGraph(const SymmetricPairConfig& cfg) : config(cfg) {}

    std::string to_dot() const {
        std::string s = "digraph weak_order {\n";
        s += "  rankdir=BT;\n";
        s += "  node [shape=plaintext];\n";
        for (const auto& node : nodes) s += "  \"" + node.to_string() + "\";\n";
        for (const auto& e : edges) {
            s += "  \"" + e.source.to_string() + "\" -> \"" + e.target.to_string() +
                 "\" [label=\"" + std::to_string(e.root) + "\", color=" +
                 (e.degree == 2 ? "blue" : "black") + "];\n";
        }
        s += "}\n";
        return s;
    }
};

}  // namespace korbit
