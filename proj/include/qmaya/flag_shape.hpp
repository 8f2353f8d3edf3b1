#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "qmaya/errors.hpp"

namespace qmaya {

/// Dimension vector of a type-A partial flag: strictly increasing block
/// boundaries 0 < i_1 < ... < i_k < n. Positions 1..n fall into k+1 blocks;
/// block j covers (i_{j-1}, i_j]. The quantum parameter q_j carries the
/// cohomological weight i_{j+1} - i_{j-1}.
class FlagShape {
public:
    FlagShape(int n, std::vector<int> dims) : n_(n), dims_(std::move(dims)) {
        if (n_ < 2) {
            throw ParseError("flag shape: ambient dimension must be at least 2");
        }
        if (dims_.empty()) {
            throw ParseError("flag shape: dimension list must be nonempty");
        }
        int prev = 0;
        for (int d : dims_) {
            if (d <= prev) {
                throw ParseError("flag shape: dimensions must be strictly increasing");
            }
            if (d < 1 || d > n_ - 1) {
                throw ParseError("flag shape: dimensions must lie in [1, n-1]");
            }
            prev = d;
        }
    }

    /// Parses "i1,i2,...,ik/n", e.g. "1,3,5,7,9/13". Whitespace is ignored.
    static FlagShape parse(std::string_view text);

    int n() const { return n_; }

    /// Number of proper dimensions (quantum parameters).
    int k() const { return static_cast<int>(dims_.size()); }

    int block_count() const { return k() + 1; }

    /// i_j with the conventions i_0 = 0 and i_{k+1} = n.
    int dim(int j) const {
        if (j < 0 || j > k() + 1) {
            throw InternalError("flag shape: dim index out of range");
        }
        if (j == 0) return 0;
        if (j == k() + 1) return n_;
        return dims_[static_cast<std::size_t>(j) - 1];
    }

    const std::vector<int>& dims() const { return dims_; }

    /// Unique j with i_{j-1} < a <= i_j, for a position a in [1, n].
    int block_of(int a) const {
        if (a < 1 || a > n_) {
            throw ParseError("flag shape: position out of range");
        }
        int j = 1;
        while (j <= k() && a > dim(j)) ++j;
        return j;
    }

    /// First position of block j, i.e. i_{j-1} + 1.
    int block_begin(int j) const { return dim(j - 1) + 1; }

    /// Last position of block j, i.e. i_j.
    int block_end(int j) const { return dim(j); }

    int block_size(int j) const { return dim(j) - dim(j - 1); }

    /// deg q_j = i_{j+1} - i_{j-1}, for 1 <= j <= k.
    int qweight(int j) const {
        if (j < 1 || j > k()) {
            throw InternalError("flag shape: qweight index out of range");
        }
        return dim(j + 1) - dim(j - 1);
    }

    /// "1,3,5,7,9/13"
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(dims_[i]);
        }
        out += '/';
        out += std::to_string(n_);
        return out;
    }

    bool operator==(const FlagShape& other) const = default;

private:
    int n_;
    std::vector<int> dims_;
};

namespace detail {

inline std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out += c;
    }
    return out;
}

inline int parse_int(std::string_view token, const char* what) {
    if (token.empty()) {
        throw ParseError(std::string(what) + ": empty number");
    }
    long value = 0;
    for (char c : token) {
        if (c < '0' || c > '9') {
            throw ParseError(std::string(what) + ": invalid number '" + std::string(token) + "'");
        }
        value = value * 10 + (c - '0');
        if (value > 1000000) {
            throw ParseError(std::string(what) + ": number out of range");
        }
    }
    return static_cast<int>(value);
}

/// Splits on a single separator character; empty fields are errors.
inline std::vector<std::string_view> split(std::string_view text, char sep, const char* what) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        std::string_view field =
            pos == std::string_view::npos ? text.substr(start) : text.substr(start, pos - start);
        if (field.empty()) {
            throw ParseError(std::string(what) + ": empty field");
        }
        parts.push_back(field);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace detail

inline FlagShape FlagShape::parse(std::string_view text) {
    std::string cleaned = detail::strip_spaces(text);
    std::replace(cleaned.begin(), cleaned.end(), '<', ',');
    const std::size_t slash = cleaned.find('/');
    if (slash == std::string::npos) {
        throw ParseError("flag shape: expected 'i1,...,ik/n'");
    }
    const int n = detail::parse_int(std::string_view(cleaned).substr(slash + 1), "flag shape");
    std::vector<int> dims;
    for (std::string_view tok :
         detail::split(std::string_view(cleaned).substr(0, slash), ',', "flag shape")) {
        dims.push_back(detail::parse_int(tok, "flag shape"));
    }
    return FlagShape(n, std::move(dims));
}

}  // namespace qmaya
