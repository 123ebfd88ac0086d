#pragma once

// Exact sparse polynomials in x_1..x_N, y_1..y_n over Q.  Canonical form:
// graded lexicographic term order with x_1 > ... > x_N > y_1 > ... > y_n,
// no zero coefficients stored.  All operations are pure.

#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "korbit/errors.hpp"
#include "korbit/rational.hpp"

namespace korbit {

// Orders exponent vectors descending: higher total degree first, then
// lexicographically larger first.  Map iteration therefore starts at the
// leading term.
struct MonomialOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    }
};

class Polynomial {
public:
    using TermMap = std::map<std::vector<int>, Rational, MonomialOrder>;

    Polynomial() : nx_(0), ny_(0) {}
    Polynomial(int nx, int ny) : nx_(nx), ny_(ny) {
        if (nx < 0 || ny < 0) throw std::invalid_argument("Polynomial: negative ambient");
    }

    static Polynomial constant(int nx, int ny, const Rational& c) {
        Polynomial p(nx, ny);
        if (!c.is_zero()) p.terms_[std::vector<int>(nx + ny, 0)] = c;
        return p;
    }
    static Polynomial x(int nx, int ny, int i) {
        if (i < 1 || i > nx) throw std::invalid_argument("Polynomial::x: index out of range");
        Polynomial p(nx, ny);
        std::vector<int> e(nx + ny, 0);
        e[i - 1] = 1;
        p.terms_[std::move(e)] = Rational(1);
        return p;
    }
    static Polynomial y(int nx, int ny, int i) {
        if (i < 1 || i > ny) throw std::invalid_argument("Polynomial::y: index out of range");
        Polynomial p(nx, ny);
        std::vector<int> e(nx + ny, 0);
        e[nx + i - 1] = 1;
        p.terms_[std::move(e)] = Rational(1);
        return p;
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int total_degree() const {
        if (terms_.empty()) return 0;
        const auto& lead = terms_.begin()->first;
        return std::accumulate(lead.begin(), lead.end(), 0);
    }

    Rational coefficient(const std::vector<int>& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const std::vector<int>& exps, const Rational& c) {
        if (static_cast<int>(exps.size()) != nx_ + ny_)
            throw std::invalid_argument("Polynomial::add_term: exponent vector length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(exps, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_ambient(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_ambient(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r(nx_, ny_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ambient(b);
        Polynomial r(a.nx_, a.ny_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

    Polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
        Polynomial r = constant(nx_, ny_, Rational(1));
        for (int k = 0; k < e; ++k) r *= *this;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // s_i action: exchange the exponents of x_i and x_{i+1} in every term.
    Polynomial swap_x(int i) const {
        check_root_index(i);
        Polynomial r(nx_, ny_);
        for (const auto& [e, c] : terms_) {
            std::vector<int> f = e;
            std::swap(f[i - 1], f[i]);
            r.terms_[std::move(f)] = c;
        }
        return r;
    }

    bool is_symmetric_in(int i) const { return *this == swap_x(i); }

    // (p - s_i p) / (x_i - x_{i+1}), division performed term by term with
    // an explicit divisibility check at every step: a leading term without
    // an x_i factor means nonzero remainder, which is a math bug upstream.
    Polynomial divided_difference(int i) const {
        check_root_index(i);
        Polynomial q = *this - swap_x(i);
        Polynomial result(nx_, ny_);
        while (!q.is_zero()) {
            auto it = q.terms_.begin();
            const std::vector<int> m = it->first;
            const Rational c = it->second;
            if (m[i - 1] == 0)
                throw invariant_error("divided_difference: division by x_" + std::to_string(i) +
                                      " - x_" + std::to_string(i + 1) + " left a remainder");
            std::vector<int> qm = m;
            qm[i - 1] -= 1;
            result.add_term(qm, c);
            q.add_term(m, -c);
            qm[i] += 1;
            q.add_term(qm, c);
        }
        return result;
    }

    // Substitutes images[i-1] for x_i (images live in the same ambient);
    // y variables pass through.
    Polynomial substitute_x(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != nx_)
            throw std::invalid_argument("substitute_x: need one image per x variable");
        for (const auto& im : images) check_ambient(im);
        std::vector<std::vector<Polynomial>> powers(nx_);
        for (int i = 0; i < nx_; ++i)
            powers[i].push_back(constant(nx_, ny_, Rational(1)));
        Polynomial r(nx_, ny_);
        for (const auto& [e, c] : terms_) {
            Polynomial term = constant(nx_, ny_, c);
            for (int i = 0; i < nx_ && !term.is_zero(); ++i) {
                if (e[i] == 0) continue;
                auto& cache = powers[i];
                while (static_cast<int>(cache.size()) <= e[i])
                    cache.push_back(cache.back() * images[i]);
                term *= cache[e[i]];
            }
            if (term.is_zero()) continue;
            std::vector<int> ymask(nx_ + ny_, 0);
            for (int j = 0; j < ny_; ++j) ymask[nx_ + j] = e[nx_ + j];
            Polynomial ymono(nx_, ny_);
            ymono.terms_[std::move(ymask)] = Rational(1);
            r += term * ymono;
        }
        return r;
    }

    bool has_x() const {
        for (const auto& [e, c] : terms_)
            for (int i = 0; i < nx_; ++i)
                if (e[i] > 0) return true;
        return false;
    }
    bool has_y() const {
        for (const auto& [e, c] : terms_)
            for (int j = 0; j < ny_; ++j)
                if (e[nx_ + j] > 0) return true;
        return false;
    }

    // Every term's y part is either empty or exactly y_1...y_n to the first
    // power.  Classes computed by the engine keep this shape because the
    // divided differences never touch y.
    bool satisfies_y_discipline() const {
        for (const auto& [e, c] : terms_) {
            bool any = false, all = true;
            for (int j = 0; j < ny_; ++j) {
                if (e[nx_ + j] > 1) return false;
                if (e[nx_ + j] == 1) any = true;
                else all = false;
            }
            if (any && !all) return false;
        }
        return true;
    }

    bool has_integer_coefficients() const {
        for (const auto& [e, c] : terms_)
            if (!c.is_integer()) return false;
        return true;
    }

    std::string variable_name(int slot) const {
        return slot < nx_ ? "x" + std::to_string(slot + 1)
                          : "y" + std::to_string(slot - nx_ + 1);
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
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
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += variable_name(static_cast<int>(k));
                if (e[k] > 1) vars += "^" + std::to_string(e[k]);
            }
            if (vars.empty())
                s += a.to_string();
            else if (a == Rational(1))
                s += vars;
            else
                s += a.to_string() + "*" + vars;
            first = false;
        }
        return s;
    }

    std::string to_latex() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
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
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                int idx = static_cast<int>(k) < nx_ ? static_cast<int>(k) + 1
                                                    : static_cast<int>(k) - nx_ + 1;
                std::string base = static_cast<int>(k) < nx_ ? "x" : "y";
                vars += base + "_{" + std::to_string(idx) + "}";
                if (e[k] > 1) vars += "^{" + std::to_string(e[k]) + "}";
            }
            if (vars.empty())
                s += a.to_string();
            else if (a == Rational(1))
                s += vars;
            else
                s += a.to_string() + vars;
            first = false;
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

    static Polynomial parse(const std::string& text, int nx, int ny);

private:
    int nx_, ny_;
    TermMap terms_;

    void check_ambient(const Polynomial& o) const {
        if (nx_ != o.nx_ || ny_ != o.ny_)
            throw std::invalid_argument("Polynomial: ambient mismatch");
    }
    void check_root_index(int i) const {
        if (i < 1 || i >= nx_)
            throw std::invalid_argument("Polynomial: root index out of range");
    }

    friend class PolynomialParser;
};

// Recursive-descent parser for the CLI/test syntax: rational coefficients,
// x1..xN / y1..yn (optional underscore), + - * / ^, parentheses, and
// juxtaposition as multiplication ("2(x1+x2)(x2+x3)", "4x1x2").
class PolynomialParser {
public:
    PolynomialParser(const std::string& text, int nx, int ny)
        : s_(text), pos_(0), nx_(nx), ny_(ny) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_;
    int nx_, ny_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos_) + ": " + msg);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool is_var_start(char c) const { return c == 'x' || c == 'X' || c == 'y' || c == 'Y'; }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += parse_term();
            } else if (c == '-') {
                ++pos_;
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= parse_factor();
            } else if (c == '/') {
                ++pos_;
                Polynomial d = parse_factor();
                if (d.terms().size() != 1 || d.has_x() || d.has_y())
                    fail("division only by a nonzero constant");
                acc *= Rational(1) / d.terms().begin()->second;
            } else if (c == '(' || is_var_start(c)) {
                acc *= parse_factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (c == '+') {
            ++pos_;
            return parse_factor();
        }
        Polynomial base = parse_base();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected exponent after '^'");
            base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }

    Polynomial parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Polynomial::constant(nx_, ny_,
                                        Rational(std::stoll(s_.substr(start, pos_ - start))));
        }
        if (is_var_start(c)) {
            bool is_x = (c == 'x' || c == 'X');
            ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '_') ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected variable index");
            int idx = s_[pos_] - '0';
            ++pos_;
            // A second digit belongs to the index only when the ambient
            // actually has that many variables; otherwise it is left in
            // place and rejected downstream, never silently reinterpreted.
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                int two = idx * 10 + (s_[pos_] - '0');
                if (two <= (is_x ? nx_ : ny_)) {
                    idx = two;
                    ++pos_;
                }
            }
            return is_x ? Polynomial::x(nx_, ny_, idx) : Polynomial::y(nx_, ny_, idx);
        }
        fail("unexpected character");
    }
};

inline Polynomial Polynomial::parse(const std::string& text, int nx, int ny) {
    return PolynomialParser(text, nx, ny).parse();
}

}  // namespace korbit
