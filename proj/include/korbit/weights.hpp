#pragma once

// Integer linear forms in Y_1..Y_n: the characters showing up as images
// rho(X_i), roots of K, and normal weights at fixed points.

#include <string>
#include <vector>

#include "korbit/polynomial.hpp"

namespace korbit {

struct LinearWeight {
    std::vector<int> coeffs;  // coefficient of Y_1..Y_n

    LinearWeight() = default;
    explicit LinearWeight(int n) : coeffs(n, 0) {}

    static LinearWeight basis(int n, int i, int c = 1) {
        LinearWeight w(n);
        w.coeffs[i - 1] = c;
        return w;
    }

    int rank() const { return static_cast<int>(coeffs.size()); }

    bool is_zero() const {
        for (int c : coeffs)
            if (c != 0) return false;
        return true;
    }

    LinearWeight operator-() const {
        LinearWeight w = *this;
        for (int& c : w.coeffs) c = -c;
        return w;
    }
    friend LinearWeight operator+(const LinearWeight& a, const LinearWeight& b) {
        LinearWeight w = a;
        for (int i = 0; i < w.rank(); ++i) w.coeffs[i] += b.coeffs[i];
        return w;
    }
    friend LinearWeight operator-(const LinearWeight& a, const LinearWeight& b) {
        LinearWeight w = a;
        for (int i = 0; i < w.rank(); ++i) w.coeffs[i] -= b.coeffs[i];
        return w;
    }

    friend bool operator==(const LinearWeight& a, const LinearWeight& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const LinearWeight& a, const LinearWeight& b) {
        return !(a == b);
    }
    friend bool operator<(const LinearWeight& a, const LinearWeight& b) {
        return a.coeffs < b.coeffs;
    }

    Polynomial to_polynomial(int nx, int ny) const {
        Polynomial p(nx, ny);
        for (int i = 1; i <= rank(); ++i)
            if (coeffs[i - 1] != 0)
                p += Polynomial::y(nx, ny, i) * Rational(coeffs[i - 1]);
        return p;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = 1; i <= rank(); ++i) {
            int c = coeffs[i - 1];
            if (c == 0) continue;
            if (s.empty()) {
                if (c < 0) s += "-";
            } else {
                s += c < 0 ? " - " : " + ";
            }
            int a = c < 0 ? -c : c;
            if (a != 1) s += std::to_string(a);
            s += "Y" + std::to_string(i);
        }
        return s;
    }
};

inline Polynomial product_of_weights(const std::vector<LinearWeight>& ws, int nx, int ny) {
    Polynomial p = Polynomial::constant(nx, ny, Rational(1));
    for (const auto& w : ws) p *= w.to_polynomial(nx, ny);
    return p;
}

}  // namespace korbit
