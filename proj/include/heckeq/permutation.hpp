#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace heckeq {

/// Permutation of {1..n} in one-line notation. Products compose so that
/// (a * b)(i) = a(b(i)); with this convention T_a T_b = T_{a*b} whenever
/// lengths add, and right multiplication by the transposition s_i swaps the
/// entries at positions i and i+1.
class Permutation {
  public:
    explicit Permutation(int n) : img_(n) {
        if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
        std::iota(img_.begin(), img_.end(), 1);
    }

    explicit Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
        const int n = static_cast<int>(img_.size());
        if (n < 1) throw std::invalid_argument("Permutation: empty one-line notation");
        std::vector<bool> seen(n, false);
        for (int v : img_) {
            if (v < 1 || v > n || seen[v - 1])
                throw std::invalid_argument("Permutation: not a bijection of 1..n");
            seen[v - 1] = true;
        }
    }

    static Permutation transposition(int n, int i, int j) {
        Permutation p(n);
        if (i < 1 || j < 1 || i > n || j > n || i == j)
            throw std::invalid_argument("Permutation: bad transposition");
        std::swap(p.img_[i - 1], p.img_[j - 1]);
        return p;
    }

    static Permutation from_word(int n, const std::vector<int>& word) {
        Permutation p(n);
        for (int i : word) p = p.right_mult_gen(i);
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[i] != i + 1) return false;
        return true;
    }

    /// Coxeter length = inversion count.
    int length() const {
        int l = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (img_[i] > img_[j]) ++l;
        return l;
    }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < size(); ++i) inv[img_[i] - 1] = i + 1;
        return Permutation(std::move(inv));
    }

    Permutation operator*(const Permutation& b) const {
        if (size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
        std::vector<int> r(img_.size());
        for (int i = 0; i < size(); ++i) r[i] = img_[b.img_[i] - 1];
        return Permutation(std::move(r));
    }

    /// this * s_i: swaps the entries at positions i, i+1.
    Permutation right_mult_gen(int i) const {
        if (i < 1 || i >= size()) throw std::out_of_range("Permutation: generator out of range");
        Permutation r = *this;
        std::swap(r.img_[i - 1], r.img_[i]);
        return r;
    }

    /// l(w s_i) > l(w)?
    bool right_mult_increases(int i) const { return img_[i - 1] < img_[i]; }

    /// l(s_i w) < l(w): value i appears after value i+1.
    bool left_descent(int i) const {
        int pi = 0, pj = 0;
        for (int k = 0; k < size(); ++k) {
            if (img_[k] == i) pi = k;
            if (img_[k] == i + 1) pj = k;
        }
        return pi > pj;
    }

    /// Lexicographically smallest reduced word, built by repeatedly removing
    /// the smallest left descent.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        Permutation w = *this;
        while (!w.is_identity()) {
            int i = 1;
            while (!w.left_descent(i)) ++i;
            word.push_back(i);
            // s_i * w: swap the values i and i+1 in the one-line notation
            for (int k = 0; k < w.size(); ++k) {
                if (w.img_[k] == i)
                    w.img_[k] = i + 1;
                else if (w.img_[k] == i + 1)
                    w.img_[k] = i;
            }
        }
        return word;
    }

    /// View inside S_m for m >= n, fixing the added points.
    Permutation extended(int m) const {
        if (m < size()) throw std::invalid_argument("Permutation: cannot shrink via extended");
        std::vector<int> r(m);
        std::copy(img_.begin(), img_.end(), r.begin());
        std::iota(r.begin() + size(), r.end(), size() + 1);
        return Permutation(std::move(r));
    }

    /// Restriction to S_m for m <= n; requires all points above m to be fixed.
    Permutation restricted(int m) const {
        for (int i = m; i < size(); ++i)
            if (img_[i] != i + 1)
                throw std::invalid_argument("Permutation: support exceeds restriction");
        if (m < 1) throw std::invalid_argument("Permutation: restriction to empty set");
        return Permutation(std::vector<int>(img_.begin(), img_.begin() + m));
    }

    auto operator<=>(const Permutation& b) const = default;

  private:
    std::vector<int> img_;
};

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace heckeq
