#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmaya/errors.hpp"
#include "qmaya/flag_shape.hpp"
#include "qmaya/permutation.hpp"

namespace qmaya {

/// Minimal-length representative of a coset in S_n / W_P: the full one-line
/// permutation is stored and must be strictly increasing within every block,
/// including the trailing complement block. The canonical display shows
/// blocks 1..k only; the complement is determined.
class CosetRep {
public:
    CosetRep(FlagShape shape, Permutation perm)
        : shape_(std::move(shape)), perm_(std::move(perm)) {
        if (perm_.n() != shape_.n()) {
            throw ParseError("coset: permutation size does not match the flag shape");
        }
        for (int j = 1; j <= shape_.block_count(); ++j) {
            for (int a = shape_.block_begin(j); a < shape_.block_end(j); ++a) {
                if (perm_(a) >= perm_(a + 1)) {
                    throw ParseError("coset: block " + std::to_string(j) +
                                     " is not strictly increasing");
                }
            }
        }
    }

    /// Minimal representative of perm * W_P: sorts each block ascending.
    static CosetRep minimize(const FlagShape& shape, const Permutation& perm) {
        std::vector<int> image = perm.image();
        for (int j = 1; j <= shape.block_count(); ++j) {
            std::sort(image.begin() + shape.block_begin(j) - 1, image.begin() + shape.block_end(j));
        }
        return CosetRep(shape, Permutation(std::move(image)));
    }

    static CosetRep identity(const FlagShape& shape) {
        return CosetRep(shape, Permutation::identity(shape.n()));
    }

    /// Parses block notation "b1|b2|...". Either all k blocks are given (the
    /// complement is derived) or all k+1 (the trailing block must equal the
    /// sorted complement). Both ',' and '<' separate values inside a block.
    static CosetRep parse(const FlagShape& shape, std::string_view text);

    const FlagShape& shape() const { return shape_; }
    const Permutation& perm() const { return perm_; }

    /// Values of block j, ascending.
    std::span<const int> block(int j) const {
        if (j < 1 || j > shape_.block_count()) {
            throw InternalError("coset: block index out of range");
        }
        return std::span<const int>(perm_.image())
            .subspan(static_cast<std::size_t>(shape_.block_begin(j)) - 1,
                     static_cast<std::size_t>(shape_.block_size(j)));
    }

    /// Canonical display: blocks 1..k, values ',' separated, blocks '|' separated.
    std::string to_string() const {
        std::string out;
        for (int j = 1; j <= shape_.k(); ++j) {
            if (j > 1) out += '|';
            auto vals = block(j);
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (i > 0) out += ',';
                out += std::to_string(vals[i]);
            }
        }
        return out;
    }

    int length() const { return inversions(perm_); }

    bool operator==(const CosetRep& other) const = default;

private:
    FlagShape shape_;
    Permutation perm_;
};

inline CosetRep CosetRep::parse(const FlagShape& shape, std::string_view text) {
    std::string cleaned = detail::strip_spaces(text);
    std::replace(cleaned.begin(), cleaned.end(), '<', ',');
    const auto block_texts = detail::split(cleaned, '|', "coset");
    const int given = static_cast<int>(block_texts.size());
    if (given != shape.k() && given != shape.k() + 1) {
        throw ParseError("coset: expected " + std::to_string(shape.k()) + " or " +
                         std::to_string(shape.k() + 1) + " blocks, got " + std::to_string(given));
    }

    std::vector<int> image;
    image.reserve(static_cast<std::size_t>(shape.n()));
    std::vector<char> seen(static_cast<std::size_t>(shape.n()) + 1, 0);
    for (int j = 1; j <= given; ++j) {
        const auto values = detail::split(block_texts[static_cast<std::size_t>(j) - 1], ',', "coset");
        if (static_cast<int>(values.size()) != shape.block_size(j)) {
            throw ParseError("coset: block " + std::to_string(j) + " must have " +
                             std::to_string(shape.block_size(j)) + " values");
        }
        int prev = 0;
        for (std::string_view tok : values) {
            const int v = detail::parse_int(tok, "coset");
            if (v < 1 || v > shape.n()) {
                throw ParseError("coset: value " + std::to_string(v) + " out of range");
            }
            if (seen[static_cast<std::size_t>(v)]) {
                throw ParseError("coset: duplicate value " + std::to_string(v));
            }
            if (v <= prev) {
                throw ParseError("coset: block " + std::to_string(j) +
                                 " is not strictly increasing");
            }
            seen[static_cast<std::size_t>(v)] = 1;
            image.push_back(v);
            prev = v;
        }
    }
    // Values not mentioned form the sorted complement block.
    if (given == shape.k()) {
        for (int v = 1; v <= shape.n(); ++v) {
            if (!seen[static_cast<std::size_t>(v)]) image.push_back(v);
        }
    } else if (static_cast<int>(image.size()) != shape.n()) {
        throw ParseError("coset: blocks do not cover 1..n");
    }
    return CosetRep(shape, Permutation(std::move(image)));
}

/// Coset-level reflection step: swaps the values at positions a and b of the
/// minimal representative and re-sorts every block. A no-op when a and b lie
/// in the same block.
inline CosetRep apply_transposition(const CosetRep& c, int a, int b) {
    const int n = c.shape().n();
    if (a < 1 || b < 1 || a > n || b > n || a >= b) {
        throw ParseError("apply_transposition: need positions 1 <= a < b <= n");
    }
    std::vector<int> image = c.perm().image();
    std::swap(image[static_cast<std::size_t>(a) - 1], image[static_cast<std::size_t>(b) - 1]);
    return CosetRep::minimize(c.shape(), Permutation(std::move(image)));
}

/// Palindromic word (i_{q-1}+1, ..., i_t-1, i_t-2, ..., i_{q-1}+1); its plain
/// product is the transposition of positions (i_{q-1}+1, i_t).
inline std::vector<int> reflection_word(const FlagShape& shape, int q, int t) {
    if (q < 1 || t > shape.block_count() || q >= t) {
        throw ParseError("reflection_word: need blocks 1 <= q < t <= k+1");
    }
    const int first = shape.dim(q - 1) + 1;
    const int last = shape.dim(t);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(2 * (last - first) - 1));
    for (int i = first; i <= last - 1; ++i) word.push_back(i);
    for (int i = last - 2; i >= first; --i) word.push_back(i);
    return word;
}

/// Hecke product of the minimal representative with the given word of simple
/// generators, re-minimized. The result is Bruhat-greater-or-equal the input.
inline CosetRep hecke_word_action(const CosetRep& c, const std::vector<int>& word) {
    return CosetRep::minimize(c.shape(), hecke_fold(c.perm(), word));
}

/// Number of cosets: n! / prod(block sizes)!. Throws on uint64 overflow.
inline std::uint64_t coset_count(const FlagShape& shape) {
    std::uint64_t count = 1;
    int placed = 0;
    for (int j = 1; j <= shape.block_count(); ++j) {
        // Multiply by C(placed + s, s) one factor at a time.
        for (int i = 1; i <= shape.block_size(j); ++i) {
            ++placed;
            std::uint64_t scaled;
            if (__builtin_mul_overflow(count, static_cast<std::uint64_t>(placed), &scaled)) {
                throw ParseError("coset_count: overflow for this shape");
            }
            count = scaled / static_cast<std::uint64_t>(i);
        }
    }
    return count;
}

namespace detail {

template <typename Fn>
void enumerate_blocks(const FlagShape& shape, int j, std::vector<int>& image,
                      std::vector<char>& used, Fn&& emit) {
    const int n = shape.n();
    if (j > shape.k()) {
        std::vector<int> full = image;
        for (int v = 1; v <= n; ++v) {
            if (!used[static_cast<std::size_t>(v)]) full.push_back(v);
        }
        emit(CosetRep(shape, Permutation(std::move(full))));
        return;
    }
    // Ascending combinations of the unused values, in lexicographic order.
    auto recurse = [&](auto&& self, int min_value, int remaining) -> void {
        if (remaining == 0) {
            enumerate_blocks(shape, j + 1, image, used, emit);
            return;
        }
        for (int v = min_value; v <= n - remaining + 1; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            image.push_back(v);
            self(self, v + 1, remaining - 1);
            image.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    recurse(recurse, 1, shape.block_size(j));
}

}  // namespace detail

/// Visits every element of W^{P_I} exactly once, ordered lexicographically by
/// the block-notation value sequence.
template <typename Fn>
void for_each_coset(const FlagShape& shape, Fn&& visit) {
    std::vector<int> image;
    image.reserve(static_cast<std::size_t>(shape.n()));
    std::vector<char> used(static_cast<std::size_t>(shape.n()) + 1, 0);
    detail::enumerate_blocks(shape, 1, image, used, visit);
}

inline std::vector<CosetRep> enumerate_cosets(const FlagShape& shape) {
    std::vector<CosetRep> out;
    for_each_coset(shape, [&](CosetRep c) { out.push_back(std::move(c)); });
    return out;
}

}  // namespace qmaya
