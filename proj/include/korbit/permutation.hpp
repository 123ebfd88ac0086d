#pragma once

// Permutations of {1..N} in one-line notation, plus the involution
// machinery the orbit parametrization rests on: inversion length, rank
// numbers r_b(i,j), and deterministic enumeration of (fixed-point-free)
// involutions.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace korbit {

class Permutation {
public:
    Permutation() = default;

    // One-line word: word[i-1] = image of i.  Must be a bijection of {1..N}.
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        std::vector<char> seen(word_.size(), 0);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
                throw std::invalid_argument("Permutation: word is not a bijection of {1..N}");
            seen[v - 1] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    // Longest element i -> N+1-i.
    static Permutation longest(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = n - i;
        return Permutation(std::move(w));
    }

    static Permutation transposition(int n, int a, int b) {
        Permutation p = identity(n);
        p.word_[a - 1] = b;
        p.word_[b - 1] = a;
        return p;
    }

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const {
        std::vector<int> w(word_.size());
        for (int i = 1; i <= size(); ++i) w[word_[i - 1] - 1] = i;
        return Permutation(std::move(w));
    }

    // Composition acting on values: (p*q)(i) = p(q(i)).
    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.size() != q.size())
            throw std::invalid_argument("Permutation: size mismatch in composition");
        std::vector<int> w(p.word_.size());
        for (int i = 1; i <= p.size(); ++i) w[i - 1] = p(q(i));
        return Permutation(std::move(w));
    }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if (word_[i - 1] != i) return false;
        return true;
    }

    bool is_involution() const {
        for (int i = 1; i <= size(); ++i)
            if (word_[word_[i - 1] - 1] != i) return false;
        return true;
    }

    bool is_fixed_point_free_involution() const {
        if (!is_involution()) return false;
        for (int i = 1; i <= size(); ++i)
            if (word_[i - 1] == i) return false;
        return true;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.word_ == b.word_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return !(a == b);
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.word_ < b.word_;
    }

    std::string to_one_line() const {
        std::string s;
        bool wide = size() > 9;
        for (int i = 0; i < size(); ++i) {
            if (wide && i) s += ',';
            s += std::to_string(word_[i]);
        }
        return s;
    }

    // Cycle notation with fixed points omitted; identity prints as "id".
    std::string to_cycles() const {
        std::string s;
        std::vector<char> done(word_.size(), 0);
        for (int i = 1; i <= size(); ++i) {
            if (done[i - 1] || word_[i - 1] == i) continue;
            s += '(';
            int j = i;
            bool first = true;
            while (!done[j - 1]) {
                if (!first) s += ',';
                s += std::to_string(j);
                done[j - 1] = 1;
                j = word_[j - 1];
                first = false;
            }
            s += ')';
        }
        return s.empty() ? "id" : s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Permutation& p) {
        return os << p.to_one_line();
    }

    // Accepts one-line ("2314", "2,3,1,4") or cycle ("(1,2)(3,4)") notation,
    // or "id".  n is the ambient size, required to pad cycle notation.
    static Permutation parse(const std::string& text, int n);

private:
    std::vector<int> word_;
};

inline Permutation Permutation::parse(const std::string& text, int n) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("Permutation: empty input");
    if (s == "id" || s == "1" /*cycle-free*/ || s == "e") return identity(n);
    if (s.front() == '(') {
        Permutation result = identity(n);
        std::size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] != '(')
                throw std::invalid_argument("Permutation: expected '(' in cycle notation");
            std::size_t close = s.find(')', pos);
            if (close == std::string::npos)
                throw std::invalid_argument("Permutation: unbalanced cycle notation");
            std::vector<int> cycle;
            std::stringstream ss(s.substr(pos + 1, close - pos - 1));
            std::string item;
            while (std::getline(ss, item, ','))
                cycle.push_back(std::stoi(item));
            if (cycle.size() < 2)
                throw std::invalid_argument("Permutation: cycle needs at least 2 entries");
            // One cycle (a1,...,ak): ai -> a(i+1).
            Permutation c = identity(n);
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                int from = cycle[i];
                int to = cycle[(i + 1) % cycle.size()];
                if (from < 1 || from > n)
                    throw std::invalid_argument("Permutation: cycle entry out of range");
                c.word_[from - 1] = to;
            }
            result = c * result;
            pos = close + 1;
        }
        return result;
    }
    std::vector<int> w;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) w.push_back(std::stoi(item));
    } else {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("Permutation: bad one-line character");
            w.push_back(c - '0');
        }
    }
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("Permutation: word length does not match ambient size");
    return Permutation(std::move(w));
}

// Inversion count #{(i,j) : i<j, p(i)>p(j)}.
inline int length(const Permutation& p) {
    int n = p.size(), inv = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) ++inv;
    return inv;
}

// r_b(i,j) = #{k <= i | b(k) <= j}.  Defined for any permutation; used on
// involutions as the orbit rank numbers.
inline int rank_number(const Permutation& b, int i, int j) {
    if (!b.is_involution())
        throw std::invalid_argument("rank_number: parameter must be an involution");
    if (i < 1 || i > b.size() || j < 1 || j > b.size())
        throw std::invalid_argument("rank_number: index out of range");
    int r = 0;
    for (int k = 1; k <= i; ++k)
        if (b(k) <= j) ++r;
    return r;
}

// Full N x N table, table[i-1][j-1] = r_b(i,j), without the involution check
// (callers that loop over all (i,j) validate once).
inline std::vector<std::vector<int>> rank_table(const Permutation& b) {
    int n = b.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            t[i - 1][j - 1] = (i > 1 ? t[i - 2][j - 1] : 0) + (b(i) <= j ? 1 : 0);
    return t;
}

// Inverse of rank_table: b(i) is the unique j where the count jumps.
inline Permutation permutation_from_rank_table(const std::vector<std::vector<int>>& t) {
    int n = static_cast<int>(t.size());
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int here = t[i - 1][j - 1];
            int up = i > 1 ? t[i - 2][j - 1] : 0;
            int left = j > 1 ? t[i - 1][j - 2] : 0;
            int diag = (i > 1 && j > 1) ? t[i - 2][j - 2] : 0;
            if (here - up - left + diag == 1) w[i - 1] = j;
        }
    return Permutation(std::move(w));
}

// All involutions of S_N in lexicographic one-line order.
inline std::vector<Permutation> enumerate_involutions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_involutions: N must be >= 1");
    std::vector<Permutation> out;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    // Build involutions directly: position-by-position pairing keeps the
    // count manageable for larger N, and a final sort fixes the order.
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& word, int i) {
        if (i > n) {
            out.emplace_back(word);
            return;
        }
        if (word[i - 1] != 0) {
            rec(word, i + 1);
            return;
        }
        word[i - 1] = i;
        rec(word, i + 1);
        word[i - 1] = 0;
        for (int j = i + 1; j <= n; ++j) {
            if (word[j - 1] != 0) continue;
            word[i - 1] = j;
            word[j - 1] = i;
            rec(word, i + 1);
            word[i - 1] = 0;
            word[j - 1] = 0;
        }
    };
    std::vector<int> word(n, 0);
    rec(word, 1);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Permutation> enumerate_fpf_involutions(int n) {
    if (n % 2 != 0)
        throw std::invalid_argument("enumerate_fpf_involutions: N must be even");
    std::vector<Permutation> all = enumerate_involutions(n);
    std::vector<Permutation> out;
    for (const auto& b : all)
        if (b.is_fixed_point_free_involution()) out.push_back(b);
    return out;
}

// All of S_N in lexicographic order.
inline std::vector<Permutation> enumerate_symmetric_group(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace korbit
