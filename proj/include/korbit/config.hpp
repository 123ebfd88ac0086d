#pragma once

// Symmetric pair selection: which family and which rank.  Everything
// downstream (ambient size, restriction map, root system of K) keys off
// this one struct.

#include <stdexcept>
#include <string>

namespace korbit {

enum class Family { O_ODD, O_EVEN, SO_EVEN, SP };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::O_ODD: return "o-odd";
        case Family::O_EVEN: return "o-even";
        case Family::SO_EVEN: return "so-even";
        case Family::SP: return "sp";
    }
    throw std::logic_error("family_name: unreachable");
}

inline Family parse_family(const std::string& s) {
    if (s == "o-odd") return Family::O_ODD;
    if (s == "o-even") return Family::O_EVEN;
    if (s == "so-even") return Family::SO_EVEN;
    if (s == "sp") return Family::SP;
    throw std::invalid_argument("unknown family '" + s + "' (expected o-odd, o-even, so-even, sp)");
}

struct SymmetricPairConfig {
    Family family;
    int rank;  // n >= 1

    SymmetricPairConfig(Family f, int n) : family(f), rank(n) {
        if (n < 1) throw std::invalid_argument("SymmetricPairConfig: rank must be >= 1");
    }

    // N = 2n+1 for the odd orthogonal family, 2n otherwise.
    int ambient() const { return family == Family::O_ODD ? 2 * rank + 1 : 2 * rank; }

    bool is_orthogonal() const { return family != Family::SP; }

    // Split orbits (fixed-point-free b giving two SO-components) only occur
    // in the SO_EVEN family.
    bool has_split_orbits() const { return family == Family::SO_EVEN; }

    friend bool operator==(const SymmetricPairConfig& a, const SymmetricPairConfig& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator!=(const SymmetricPairConfig& a, const SymmetricPairConfig& b) {
        return !(a == b);
    }
};

}  // namespace korbit
