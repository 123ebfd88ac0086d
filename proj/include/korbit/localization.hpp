#pragma once

// Localization machinery: the coordinate restriction maps rho, the root
// systems of K, normal weights at closed-orbit fixed points, closure
// membership of coordinate flags, and the two verification oracles.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "korbit/config.hpp"
#include "korbit/errors.hpp"
#include "korbit/permutation.hpp"
#include "korbit/polynomial.hpp"
#include "korbit/signed_permutation.hpp"
#include "korbit/weights.hpp"

namespace korbit {

// images[i-1] = rho(X_i).  O_ODD sends the center coordinate to 0 and pairs
// the rest as +-Y_i; the even-ambient families pair everything.
struct RestrictionMap {
    SymmetricPairConfig config;
    std::vector<LinearWeight> images;

    explicit RestrictionMap(const SymmetricPairConfig& cfg) : config(cfg) {
        int n = cfg.rank, N = cfg.ambient();
        images.assign(N, LinearWeight(n));
        for (int i = 1; i <= n; ++i) {
            images[i - 1] = LinearWeight::basis(n, i);
            images[N - i] = LinearWeight::basis(n, i, -1);
        }
        // O_ODD: images[n] (= rho(X_{n+1})) stays zero.
    }

    const LinearWeight& operator()(int i) const { return images[i - 1]; }
};

// Phi_K as a set of distinct weights.
struct RootSystemK {
    SymmetricPairConfig config;
    std::vector<LinearWeight> roots;

    explicit RootSystemK(const SymmetricPairConfig& cfg) : config(cfg) {
        int n = cfg.rank;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        LinearWeight w(n);
                        w.coeffs[i - 1] = si;
                        w.coeffs[j - 1] = sj;
                        roots.push_back(w);
                    }
        if (cfg.family == Family::O_ODD)
            for (int i = 1; i <= n; ++i)
                for (int s : {1, -1}) roots.push_back(LinearWeight::basis(n, i, s));
        if (cfg.family == Family::SP)
            for (int i = 1; i <= n; ++i)
                for (int s : {2, -2}) roots.push_back(LinearWeight::basis(n, i, s));
        std::sort(roots.begin(), roots.end());
    }

    std::size_t size() const { return roots.size(); }
};

// Expected |normal_weights| = dim G/B - #positive roots of K, independent
// of the fixed point.
inline int expected_normal_weight_count(const SymmetricPairConfig& config) {
    int N = config.ambient();
    int dim_gb = N * (N - 1) / 2;
    int pos_k = static_cast<int>(RootSystemK(config).size()) / 2;
    return dim_gb - pos_k;
}

// S-weights on the normal space at the fixed point w of the selected
// closed orbit.  Take the multiset rho(w Phi^+), then each element of
// Phi_K removes exactly one occurrence.
inline std::vector<LinearWeight> normal_weights(const Permutation& w,
                                                const SymmetricPairConfig& config,
                                                int component_parity = 0) {
    int N = config.ambient();
    if (w.size() != N) throw std::invalid_argument("normal_weights: ambient mismatch");
    auto fixed = weyl_K_fixed_points(config, component_parity);
    if (!std::binary_search(fixed.begin(), fixed.end(), w))
        throw std::invalid_argument("normal_weights: w is not a fixed point of the selected closed orbit");

    RestrictionMap rho(config);
    std::map<LinearWeight, int> multiset;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            multiset[rho(w(i)) - rho(w(j))] += 1;
    for (const auto& phi : RootSystemK(config).roots) {
        auto it = multiset.find(phi);
        if (it != multiset.end()) {
            if (--it->second == 0) multiset.erase(it);
        }
    }
    std::vector<LinearWeight> out;
    for (const auto& [wt, mult] : multiset) {
        if (wt.is_zero())
            throw invariant_error("normal_weights: zero weight at fixed point " + w.to_one_line());
        for (int k = 0; k < mult; ++k) out.push_back(wt);
    }
    if (static_cast<int>(out.size()) != expected_normal_weight_count(config))
        throw invariant_error("normal_weights: cardinality " + std::to_string(out.size()) +
                              " differs from expected " +
                              std::to_string(expected_normal_weight_count(config)) + " at " +
                              w.to_one_line());
    return out;
}

// Restriction i_w^*: substitute x_i -> rho(X_{w(i)}), y_i -> y_i.  The
// images are single signed Y variables (or zero), so each term maps to one
// y monomial; no general polynomial products are needed.
inline Polynomial restrict_at_fixed_point(const Polynomial& p, const Permutation& w,
                                          const SymmetricPairConfig& config) {
    int N = config.ambient(), n = config.rank;
    if (p.nx() != N || p.ny() != n)
        throw std::invalid_argument("restrict_at_fixed_point: ambient mismatch");
    if (w.size() != N)
        throw std::invalid_argument("restrict_at_fixed_point: permutation size mismatch");

    RestrictionMap rho(config);
    // Per x slot: target y index (0 if the image is zero) and sign.
    std::vector<int> target(N, 0), sign(N, 1);
    for (int i = 1; i <= N; ++i) {
        const LinearWeight& im = rho(w(i));
        for (int k = 0; k < n; ++k)
            if (im.coeffs[k] != 0) {
                target[i - 1] = k + 1;
                sign[i - 1] = im.coeffs[k];
            }
    }

    Polynomial r(N, n);
    std::vector<int> exps(N + n);
    for (const auto& [e, c] : p.terms()) {
        std::fill(exps.begin(), exps.end(), 0);
        bool dead = false;
        long long s = 1;
        for (int i = 0; i < N && !dead; ++i) {
            if (e[i] == 0) continue;
            if (target[i] == 0) {
                dead = true;
                break;
            }
            exps[N + target[i] - 1] += e[i];
            if (sign[i] < 0 && e[i] % 2 == 1) s = -s;
        }
        if (dead) continue;
        for (int j = 0; j < n; ++j) exps[N + j] += e[N + j];
        r.add_term(exps, s < 0 ? -c : c);
    }
    return r;
}

// Monomial pattern of the Gram matrix of the coordinate flag of w: both
// family forms have gamma(e_a, e_b) != 0 exactly when b = N+1-a, so the
// pattern involution is w^{-1} m w with m(c) = N+1-c.
inline Permutation gram_pattern_of_coordinate_flag(const Permutation& w,
                                                   const SymmetricPairConfig& config) {
    int N = config.ambient();
    if (w.size() != N)
        throw std::invalid_argument("gram_pattern_of_coordinate_flag: size mismatch");
    return w.inverse() * Permutation::longest(N) * w;
}

// Closure test on the coordinate flag of w:
// rank(gamma|F_i x F_j) = r_{b_w}(i,j) must be <= r_b(i,j) everywhere.
inline bool fixed_point_in_orbit_closure(const Permutation& w, const Permutation& b,
                                         const SymmetricPairConfig& config) {
    if (!b.is_involution())
        throw std::invalid_argument("fixed_point_in_orbit_closure: b must be an involution");
    if (config.family == Family::SP && !b.is_fixed_point_free_involution())
        throw std::invalid_argument("fixed_point_in_orbit_closure: Sp parameter must be fixed point-free");
    Permutation bw = gram_pattern_of_coordinate_flag(w, config);
    auto actual = rank_table(bw);
    auto bound = rank_table(b);
    int N = config.ambient();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (actual[i][j] > bound[i][j]) return false;
    return true;
}

struct RestrictionCheck {
    Permutation w;
    Polynomial expected;
    Polynomial actual;
    bool pass;
};

struct VerificationReport {
    std::string description;
    std::vector<RestrictionCheck> rows;

    int failures() const {
        int f = 0;
        for (const auto& r : rows)
            if (!r.pass) ++f;
        return f;
    }
    bool all_pass() const { return failures() == 0; }
};

// Checks a proposed closed-orbit class against every w in S_N: at fixed
// points of the orbit the restriction must equal the normal-weight
// product, elsewhere it must vanish.
inline VerificationReport verify_closed_orbit_class(const Polynomial& p,
                                                    const SymmetricPairConfig& config,
                                                    int component_parity = 0) {
    VerificationReport report;
    report.description = "closed-orbit localization, family " + family_name(config.family) +
                         ", n=" + std::to_string(config.rank);
    int N = config.ambient(), n = config.rank;
    auto fixed = weyl_K_fixed_points(config, component_parity);
    for (const auto& w : enumerate_symmetric_group(N)) {
        Polynomial expected(N, n);
        if (std::binary_search(fixed.begin(), fixed.end(), w))
            expected = product_of_weights(normal_weights(w, config, component_parity), N, n);
        Polynomial actual = restrict_at_fixed_point(p, w, config);
        report.rows.push_back({w, expected, actual, expected == actual});
    }
    return report;
}

// Necessary vanishing condition: the class of an orbit closure restricts
// to zero at every coordinate-flag fixed point outside the closure.  For
// SO_EVEN split parameters this is the O-level closure of the underlying
// involution (component-level membership is not decided by rank numbers).
inline VerificationReport verify_vanishing_outside_closure(const Polynomial& p,
                                                           const Permutation& b,
                                                           const SymmetricPairConfig& config) {
    VerificationReport report;
    report.description = "vanishing outside closure of " + b.to_cycles() + ", family " +
                         family_name(config.family) + ", n=" + std::to_string(config.rank);
    int N = config.ambient(), n = config.rank;
    Polynomial zero(N, n);
    for (const auto& w : enumerate_symmetric_group(N)) {
        if (fixed_point_in_orbit_closure(w, b, config)) continue;
        Polynomial actual = restrict_at_fixed_point(p, w, config);
        report.rows.push_back({w, zero, actual, actual.is_zero()});
    }
    return report;
}

}  // namespace korbit
