#pragma once

// Orbit parameter: an involution plus, for split SO(2n) orbits, a
// component sign.  component is +1/-1 exactly when the family is SO_EVEN
// and the involution is fixed point-free; otherwise 0.

#include <stdexcept>
#include <string>

#include "korbit/config.hpp"
#include "korbit/permutation.hpp"

namespace korbit {

struct OrbitParameter {
    Permutation involution;
    int component = 0;  // 0 = unsplit, +1 / -1 = SO_EVEN component

    OrbitParameter() = default;
    OrbitParameter(Permutation b, int comp = 0) : involution(std::move(b)), component(comp) {}

    void validate(const SymmetricPairConfig& config) const {
        if (involution.size() != config.ambient())
            throw std::invalid_argument("OrbitParameter: ambient mismatch");
        if (!involution.is_involution())
            throw std::invalid_argument("OrbitParameter: not an involution");
        if (config.family == Family::SP && !involution.is_fixed_point_free_involution())
            throw std::invalid_argument("OrbitParameter: Sp parameter must be fixed point-free");
        bool split = config.has_split_orbits() && involution.is_fixed_point_free_involution();
        if (split && component != 1 && component != -1)
            throw std::invalid_argument("OrbitParameter: split orbit needs a component sign");
        if (!split && component != 0)
            throw std::invalid_argument("OrbitParameter: component sign on an unsplit orbit");
    }

    std::string to_string() const {
        std::string prefix = component == 1 ? "+" : component == -1 ? "-" : "";
        return prefix + involution.to_cycles();
    }

    friend bool operator==(const OrbitParameter& a, const OrbitParameter& b) {
        return a.involution == b.involution && a.component == b.component;
    }
    friend bool operator!=(const OrbitParameter& a, const OrbitParameter& b) {
        return !(a == b);
    }
    // Lex on the one-line word, then + before -.
    friend bool operator<(const OrbitParameter& a, const OrbitParameter& b) {
        if (a.involution != b.involution) return a.involution < b.involution;
        return component_order(a.component) < component_order(b.component);
    }

private:
    static int component_order(int c) { return c == 0 ? 0 : c == 1 ? 1 : 2; }
};

}  // namespace korbit
