#pragma once

// Linear-algebra layer: representative flags for orbit parameters, Gram
// matrices of the family forms, exact rank verification of the r_b(i,j)
// conditions, and the Chern/Euler-class translation of computed classes.

#include <string>
#include <vector>

#include "korbit/config.hpp"
#include "korbit/errors.hpp"
#include "korbit/orbit_parameter.hpp"
#include "korbit/permutation.hpp"
#include "korbit/polynomial.hpp"
#include "korbit/rational.hpp"

namespace korbit {

struct FlagBasis {
    std::vector<std::vector<int>> vectors;  // row k = coordinates of v_{k+1}

    int size() const { return static_cast<int>(vectors.size()); }

    // "<e_1, e_2+e_4, ...>" display.
    std::string to_string() const {
        std::string s = "<";
        for (int k = 0; k < size(); ++k) {
            if (k) s += ", ";
            std::string v;
            for (int a = 0; a < size(); ++a) {
                int c = vectors[k][a];
                if (c == 0) continue;
                if (v.empty()) {
                    if (c < 0) v += "-";
                } else {
                    v += c < 0 ? "-" : "+";
                }
                if (c != 1 && c != -1) v += std::to_string(c < 0 ? -c : c);
                v += "e" + std::to_string(a + 1);
            }
            s += v.empty() ? "0" : v;
        }
        return s + ">";
    }
};

// The coordinate flag <e_{w(1)}, ..., e_{w(N)}> as a basis.
inline FlagBasis coordinate_flag(const Permutation& w) {
    int N = w.size();
    FlagBasis basis;
    basis.vectors.assign(N, std::vector<int>(N, 0));
    for (int k = 1; k <= N; ++k) basis.vectors[k - 1][w(k) - 1] = 1;
    return basis;
}

// gamma(e_a, e_b) for the family form: orthogonal families use the
// antidiagonal delta_{a,N+1-b}; Sp uses J_{n,n} with +1 above the center
// and -1 below.
inline int gram_form(int a, int b, const SymmetricPairConfig& config) {
    int N = config.ambient();
    if (b != N + 1 - a) return 0;
    if (config.is_orthogonal()) return 1;
    return a <= config.rank ? 1 : -1;
}

// Representative flag of Q_b.  Orthogonal: the k-th 2-cycle (i < b(i),
// ascending i) takes (e_k, e_{N+1-k}); for O_ODD the first fixed point
// takes e_{n+1}; remaining fixed points, ascending and paired
// consecutively, take (e_k + e_{N+1-k}, e_k - e_{N+1-k}) with fresh k.
// Symplectic: the j-th 2-cycle takes (e_j, e_{2n+1-j}).
inline FlagBasis representative_flag(const Permutation& b, const SymmetricPairConfig& config) {
    int N = config.ambient(), n = config.rank;
    if (b.size() != N) throw std::invalid_argument("representative_flag: ambient mismatch");
    if (!b.is_involution()) throw std::invalid_argument("representative_flag: b must be an involution");
    if (config.family == Family::SP && !b.is_fixed_point_free_involution())
        throw std::invalid_argument("representative_flag: Sp parameter must be fixed point-free");

    FlagBasis basis;
    basis.vectors.assign(N, std::vector<int>(N, 0));
    int k = 0;
    for (int i = 1; i <= N; ++i) {
        if (b(i) <= i) continue;
        ++k;
        basis.vectors[i - 1][k - 1] = 1;
        basis.vectors[b(i) - 1][N - k] = 1;
    }
    std::vector<int> fixed;
    for (int i = 1; i <= N; ++i)
        if (b(i) == i) fixed.push_back(i);
    if (config.family == Family::SP) return basis;

    std::size_t start = 0;
    if (config.family == Family::O_ODD) {
        // #fixed is odd; the first one takes the isotropic-center vector.
        basis.vectors[fixed[0] - 1][n] = 1;
        start = 1;
    }
    if ((fixed.size() - start) % 2 != 0)
        throw std::invalid_argument("representative_flag: fixed-point parity violation");
    for (std::size_t t = start; t + 1 < fixed.size(); t += 2) {
        ++k;
        basis.vectors[fixed[t] - 1][k - 1] = 1;
        basis.vectors[fixed[t] - 1][N - k] = 1;
        basis.vectors[fixed[t + 1] - 1][k - 1] = 1;
        basis.vectors[fixed[t + 1] - 1][N - k] = -1;
    }
    return basis;
}

inline std::vector<std::vector<int>> gram_matrix(const FlagBasis& basis,
                                                 const SymmetricPairConfig& config) {
    int N = config.ambient();
    if (basis.size() != N) throw std::invalid_argument("gram_matrix: size mismatch");
    std::vector<std::vector<int>> g(N, std::vector<int>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int s = 0;
            for (int a = 1; a <= N; ++a)
                for (int c = 1; c <= N; ++c)
                    if (basis.vectors[i][a - 1] != 0 && basis.vectors[j][c - 1] != 0)
                        s += basis.vectors[i][a - 1] * basis.vectors[j][c - 1] *
                             gram_form(a, c, config);
            g[i][j] = s;
        }
    return g;
}

// Exact rank of the upper-left rows x cols rectangle via rational Gaussian
// elimination.
inline int rectangle_rank(const std::vector<std::vector<int>>& m, int rows, int cols) {
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = Rational(m[i][j]);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int row = rank; row < rows; ++row)
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int row = rank + 1; row < rows; ++row) {
            if (a[row][col].is_zero()) continue;
            Rational f = a[row][col] / a[rank][col];
            for (int j = col; j < cols; ++j) a[row][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// True iff the Gram matrix is monomial with nonzero pattern exactly b.
inline bool gram_is_monomial_with_pattern(const std::vector<std::vector<int>>& g,
                                          const Permutation& b) {
    int N = b.size();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            bool should = (b(i) == j);
            if (should != (g[i - 1][j - 1] != 0)) return false;
        }
    return true;
}

// Orbit membership (exact equality, not the closure inequality): rank of
// every upper-left i x j rectangle equals r_b(i,j).
inline bool verify_orbit_membership(const FlagBasis& basis, const Permutation& b,
                                    const SymmetricPairConfig& config) {
    auto g = gram_matrix(basis, config);
    auto bound = rank_table(b);
    int N = config.ambient();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (rectangle_rank(g, i, j) != bound[i - 1][j - 1]) return false;
    return true;
}

// Formal degeneracy-locus formula: expr lives in N chern symbols
// c1(F_i/F_{i-1}) plus one Euler symbol e of degree n.
struct ChernFormula {
    Polynomial expr;  // nx = N chern slots, ny = 1 euler slot
    int rank;         // n, the degree carried by e

    std::string symbol(int i, bool latex) const {
        if (latex)
            return i == 1 ? "c_1(F_1)"
                          : "c_1(F_{" + std::to_string(i) + "}/F_{" + std::to_string(i - 1) + "})";
        return i == 1 ? "c1(F_1)"
                      : "c1(F_" + std::to_string(i) + "/F_" + std::to_string(i - 1) + ")";
    }

    std::string render(bool latex) const {
        if (expr.is_zero()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : expr.terms()) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) {
                    s += "-";
                    a = -a;
                }
            } else {
                s += a.sign() < 0 ? " - " : " + ";
                if (a.sign() < 0) a = -a;
            }
            std::string vars;
            int N = expr.nx();
            for (int i = 0; i < N; ++i) {
                if (e[i] == 0) continue;
                if (!vars.empty() && !latex) vars += "*";
                vars += symbol(i + 1, latex);
                if (e[i] > 1) vars += latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
            }
            if (e[N] > 0) {
                if (!vars.empty() && !latex) vars += "*";
                vars += "e";
                if (e[N] > 1) vars += latex ? "^{" + std::to_string(e[N]) + "}" : "^" + std::to_string(e[N]);
            }
            if (vars.empty())
                s += a.to_string();
            else if (a == Rational(1))
                s += vars;
            else
                s += a.to_string() + (latex ? "" : "*") + vars;
            first = false;
        }
        return s;
    }

    std::string to_text() const { return render(false); }
    std::string to_latex() const { return render(true); }

    // Degree with e counted as degree rank.
    int degree() const {
        int best = 0;
        for (const auto& [e, c] : expr.terms()) {
            int d = 0;
            for (int i = 0; i < expr.nx(); ++i) d += e[i];
            d += e[expr.nx()] * rank;
            if (d > best) best = d;
        }
        return best;
    }
};

// phi^*: x_i -> c1(F_i/F_{i-1}); the full monomial y_1...y_n -> e.  Any
// other y usage violates the discipline every computed class satisfies.
inline ChernFormula to_chern_formula(const Polynomial& p, const SymmetricPairConfig& config) {
    int N = config.ambient(), n = config.rank;
    if (p.nx() != N || p.ny() != n)
        throw std::invalid_argument("to_chern_formula: ambient mismatch");
    if (!p.satisfies_y_discipline())
        throw invariant_error("to_chern_formula: y variables appear outside the full monomial y_1...y_n");
    ChernFormula f{Polynomial(N, 1), n};
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> exps(N + 1, 0);
        for (int i = 0; i < N; ++i) exps[i] = e[i];
        exps[N] = e[N];  // y_1 exponent is 0 or 1 and matches all the others
        f.expr.add_term(exps, c);
    }
    return f;
}

}  // namespace korbit
