#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qmaya/errors.hpp"

namespace qmaya {

/// Element of S_n in one-line notation; image(i) is 1-based on both sides.
class Permutation {
public:
    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        const int n = static_cast<int>(image_.size());
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int v : image_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
                throw ParseError("permutation: image is not a bijection of 1..n");
            }
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> image(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
        return Permutation(std::move(image));
    }

    int n() const { return static_cast<int>(image_.size()); }

    int operator()(int i) const { return image_[static_cast<std::size_t>(i) - 1]; }

    const std::vector<int>& image() const { return image_; }

    Permutation inverse() const {
        std::vector<int> inv(image_.size());
        for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
        return Permutation(std::move(inv));
    }

    /// Function composition: (p * q)(i) = p(q(i)). Right-multiplying by a
    /// transposition of a and b therefore swaps the entries at positions a, b.
    Permutation operator*(const Permutation& q) const {
        if (n() != q.n()) throw InternalError("permutation: size mismatch in product");
        std::vector<int> image(image_.size());
        for (int i = 1; i <= n(); ++i) image[static_cast<std::size_t>(i) - 1] = (*this)(q(i));
        return Permutation(std::move(image));
    }

    bool operator==(const Permutation& other) const = default;

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < image_.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(image_[i]);
        }
        out += ')';
        return out;
    }

private:
    std::vector<int> image_;
};

/// The transposition of positions a and b (as a group element).
inline Permutation transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) {
        throw InternalError("transposition: positions out of range");
    }
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
    std::swap(image[static_cast<std::size_t>(a) - 1], image[static_cast<std::size_t>(b) - 1]);
    return Permutation(std::move(image));
}

/// Coxeter length = inversion count.
inline int inversions(const Permutation& p) {
    int count = 0;
    for (int a = 1; a <= p.n(); ++a) {
        for (int b = a + 1; b <= p.n(); ++b) {
            if (p(a) > p(b)) ++count;
        }
    }
    return count;
}

/// Hecke (0-Hecke / Demazure) product with a simple generator: p s_i when that
/// is longer, otherwise p.
inline Permutation hecke_step(Permutation p, int i) {
    if (i < 1 || i >= p.n()) throw InternalError("hecke_step: generator index out of range");
    std::vector<int> image = p.image();
    if (image[static_cast<std::size_t>(i) - 1] < image[static_cast<std::size_t>(i)]) {
        std::swap(image[static_cast<std::size_t>(i) - 1], image[static_cast<std::size_t>(i)]);
    }
    return Permutation(std::move(image));
}

/// Left-fold of hecke_step, i.e. p . s_{w1} . s_{w2} . ...
inline Permutation hecke_fold(Permutation p, const std::vector<int>& word) {
    for (int i : word) p = hecke_step(std::move(p), i);
    return p;
}

/// A reduced word for p via an adjacent-transposition sorting network:
/// repeatedly clear the leftmost descent. Deterministic; length = inversions.
inline std::vector<int> reduced_word(Permutation p) {
    std::vector<int> word;
    std::vector<int> image = p.image();
    const int n = static_cast<int>(image.size());
    while (true) {
        int descent = 0;
        for (int i = 1; i < n; ++i) {
            if (image[static_cast<std::size_t>(i) - 1] > image[static_cast<std::size_t>(i)]) {
                descent = i;
                break;
            }
        }
        if (descent == 0) break;
        std::swap(image[static_cast<std::size_t>(descent) - 1],
                  image[static_cast<std::size_t>(descent)]);
        word.push_back(descent);
    }
    // p * s_{w1} * ... * s_{wm} = id, so p = s_{wm} * ... * s_{w1}.
    std::reverse(word.begin(), word.end());
    return word;
}

/// Bruhat order on S_n by the sorted-prefix criterion: u <= v iff for every a,
/// the ascending sort of u(1..a) is entrywise <= that of v(1..a).
inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw InternalError("bruhat_leq: size mismatch");
    std::vector<int> pu, pv;
    pu.reserve(static_cast<std::size_t>(u.n()));
    pv.reserve(static_cast<std::size_t>(v.n()));
    for (int a = 1; a <= u.n(); ++a) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u(a)), u(a));
        pv.insert(std::upper_bound(pv.begin(), pv.end(), v(a)), v(a));
        for (std::size_t i = 0; i < pu.size(); ++i) {
            if (pu[i] > pv[i]) return false;
        }
    }
    return true;
}

}  // namespace qmaya
