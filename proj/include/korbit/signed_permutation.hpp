#pragma once

// Signed permutations of {1..n} and their embedding into S_N.  The image
// satisfies sigma(N+1-i) = N+1-sigma(i); for the odd ambient the center
// column is pinned, sigma(n+1) = n+1.

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "korbit/config.hpp"
#include "korbit/permutation.hpp"

namespace korbit {

class SignedPermutation {
public:
    SignedPermutation() = default;

    // word[i-1] = pi(i), with |pi| a bijection of {1..n}.
    explicit SignedPermutation(std::vector<int> word) : word_(std::move(word)) {
        std::vector<char> seen(word_.size(), 0);
        for (int v : word_) {
            int a = std::abs(v);
            if (a < 1 || a > static_cast<int>(word_.size()) || seen[a - 1])
                throw std::invalid_argument("SignedPermutation: |word| is not a bijection of {1..n}");
            seen[a - 1] = 1;
        }
    }

    static SignedPermutation identity(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        return SignedPermutation(std::move(w));
    }

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }
    const std::vector<int>& word() const { return word_; }

    int sign_change_count() const {
        int c = 0;
        for (int v : word_)
            if (v < 0) ++c;
        return c;
    }

    Permutation absolute_value() const {
        std::vector<int> w(word_.size());
        for (std::size_t i = 0; i < word_.size(); ++i) w[i] = std::abs(word_[i]);
        return Permutation(std::move(w));
    }

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.word_ == b.word_;
    }
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        return a.word_ < b.word_;
    }

    // Negative entries rendered with a trailing '-': 1 -3 -2 prints "1 3- 2-".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(std::abs(word_[i]));
            if (word_[i] < 0) s += '-';
        }
        return s;
    }

    // Accepts whitespace- or comma-separated entries; each entry is a
    // positive integer with an optional trailing '-' or leading '-'.
    static SignedPermutation parse(const std::string& text) {
        std::vector<int> w;
        std::string cleaned = text;
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::stringstream ss(cleaned);
        std::string tok;
        while (ss >> tok) {
            bool neg = false;
            if (!tok.empty() && tok.back() == '-') {
                neg = true;
                tok.pop_back();
            }
            if (!tok.empty() && tok.front() == '-') {
                neg = true;
                tok.erase(tok.begin());
            }
            if (tok.empty()) throw std::invalid_argument("SignedPermutation: bare sign marker");
            int v = std::stoi(tok);
            w.push_back(neg ? -v : v);
        }
        if (w.empty()) throw std::invalid_argument("SignedPermutation: empty input");
        return SignedPermutation(std::move(w));
    }

private:
    std::vector<int> word_;
};

// The embedding of the hyperoctahedral group into S_N: sigma(i) = pi(i) if
// pi(i) > 0, else N+1-|pi(i)|, for i <= n, extended by sigma(N+1-i) = N+1-sigma(i).
inline Permutation embed_signed(const SignedPermutation& s, const SymmetricPairConfig& config) {
    int n = config.rank;
    if (s.size() != n) throw std::invalid_argument("embed_signed: rank mismatch");
    int N = config.ambient();
    std::vector<int> w(N);
    for (int i = 1; i <= n; ++i) {
        int v = s(i);
        int img = v > 0 ? v : N + 1 - (-v);
        w[i - 1] = img;
        w[N - i] = N + 1 - img;
    }
    if (config.family == Family::O_ODD) w[n] = n + 1;
    return Permutation(std::move(w));
}

// All 2^n n! signed permutations in a deterministic order: lex on |word|,
// then on the sign mask (all-plus first).
inline std::vector<SignedPermutation> enumerate_signed_permutations(int n) {
    std::vector<SignedPermutation> out;
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i + 1;
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> w(base);
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) w[i] = -w[i];
            out.emplace_back(std::move(w));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

// S-fixed points of the selected closed orbit, embedded into S_N.  The
// component selector picks even (+1) or odd (-1) sign-change parity and is
// honored only for SO_EVEN; 0 means "all" and is the only valid selector
// for the other families.
inline std::vector<Permutation> weyl_K_fixed_points(const SymmetricPairConfig& config,
                                                    int component_parity = 0) {
    std::vector<Permutation> out;
    for (const auto& s : enumerate_signed_permutations(config.rank)) {
        if (config.family == Family::SO_EVEN && component_parity != 0) {
            int parity = s.sign_change_count() % 2 == 0 ? +1 : -1;
            if (parity != component_parity) continue;
        }
        out.push_back(embed_signed(s, config));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace korbit
