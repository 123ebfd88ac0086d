#pragma once

// Explicit polynomial representatives of the closed-orbit classes (Props
// 2.1, 2.4, 2.7) seeding the divided-difference recursion.

#include <vector>

#include "korbit/config.hpp"
#include "korbit/orbit_parameter.hpp"
#include "korbit/polynomial.hpp"
#include "korbit/signed_permutation.hpp"

namespace korbit {

struct ClosedOrbitDatum {
    OrbitParameter parameter;
    Polynomial cls;
    std::vector<Permutation> fixed_points;
};

namespace detail {

inline Polynomial x_plus_x(int N, int n, int i, int j) {
    return Polynomial::x(N, n, i) + Polynomial::x(N, n, j);
}

// prod_{1<=i<j<=n} (x_i+x_j)(x_i+x_{N+1-j}); the mirror index N+1-j reads
// 2n+2-j in the odd ambient and 2n+1-j in the even ones.  Empty product
// for n = 1.
inline Polynomial pair_product(int N, int n) {
    Polynomial p = Polynomial::constant(N, n, Rational(1));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            p *= x_plus_x(N, n, i, j) * x_plus_x(N, n, i, N + 1 - j);
    return p;
}

inline Polynomial x_monomial(int N, int n) {
    Polynomial p = Polynomial::constant(N, n, Rational(1));
    for (int i = 1; i <= n; ++i) p *= Polynomial::x(N, n, i);
    return p;
}

inline Polynomial y_monomial(int N, int n) {
    Polynomial p = Polynomial::constant(N, n, Rational(1));
    for (int i = 1; i <= n; ++i) p *= Polynomial::y(N, n, i);
    return p;
}

inline Rational pow2(int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(2);
    return r;
}

}  // namespace detail

// O_ODD: P(x,y) = (-2)^n prod_{i<=n}(x_i+x_{n+1})(x_{n+1}+x_{2n+2-i})
//                 prod_{i<j<=n}(x_i+x_j)(x_i+x_{2n+2-j}).
// SO_EVEN: P_{1,2} = 2^{n-1}(x_1...x_n +- y_1...y_n)
//                 prod_{i<j<=n}(x_i+x_j)(x_i+x_{2n+1-j}).
// O_EVEN: P_1 + P_2 = 2^n x_1...x_n prod(...).
// SP: prod_{i<j<=n}(x_i+x_j)(x_i+x_{2n+1-j}).
inline std::vector<ClosedOrbitDatum> closed_orbit_classes(const SymmetricPairConfig& config) {
    int n = config.rank, N = config.ambient();
    Permutation w0 = Permutation::longest(N);
    std::vector<ClosedOrbitDatum> out;

    switch (config.family) {
        case Family::O_ODD: {
            Polynomial p = Polynomial::constant(N, n, detail::pow2(n));
            if (n % 2 == 1) p = -p;
            for (int i = 1; i <= n; ++i)
                p *= detail::x_plus_x(N, n, i, n + 1) * detail::x_plus_x(N, n, n + 1, 2 * n + 2 - i);
            p *= detail::pair_product(N, n);
            out.push_back({OrbitParameter(w0), p, weyl_K_fixed_points(config)});
            break;
        }
        case Family::SO_EVEN: {
            Polynomial shared = detail::pair_product(N, n) *
                                Polynomial::constant(N, n, detail::pow2(n - 1));
            Polynomial xm = detail::x_monomial(N, n), ym = detail::y_monomial(N, n);
            out.push_back({OrbitParameter(w0, +1), shared * (xm + ym),
                           weyl_K_fixed_points(config, +1)});
            out.push_back({OrbitParameter(w0, -1), shared * (xm - ym),
                           weyl_K_fixed_points(config, -1)});
            break;
        }
        case Family::O_EVEN: {
            Polynomial p = detail::x_monomial(N, n) * detail::pair_product(N, n) *
                           Polynomial::constant(N, n, detail::pow2(n));
            out.push_back({OrbitParameter(w0), p, weyl_K_fixed_points(config)});
            break;
        }
        case Family::SP: {
            Polynomial p = detail::pair_product(N, n);
            out.push_back({OrbitParameter(w0), p, weyl_K_fixed_points(config)});
            break;
        }
    }
    return out;
}

}  // namespace korbit
