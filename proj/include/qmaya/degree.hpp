#pragma once

#include <string>
#include <vector>

#include "qmaya/errors.hpp"
#include "qmaya/flag_shape.hpp"
#include "qmaya/maya.hpp"

namespace qmaya {

/// Exponent vector of q^d = prod q_j^{d_j}: k non-negative integers under the
/// componentwise partial order.
class DegreeVector {
public:
    explicit DegreeVector(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_) {
            if (e < 0) throw InternalError("degree: negative component");
        }
    }

    static DegreeVector zero(int k) {
        return DegreeVector(std::vector<int>(static_cast<std::size_t>(k), 0));
    }

    int size() const { return static_cast<int>(entries_.size()); }

    /// Component d_j, 1-based to match the q_j indexing.
    int component(int j) const {
        if (j < 1 || j > size()) throw InternalError("degree: component index out of range");
        return entries_[static_cast<std::size_t>(j) - 1];
    }

    const std::vector<int>& entries() const { return entries_; }

    bool is_zero() const {
        for (int e : entries_) {
            if (e != 0) return false;
        }
        return true;
    }

    DegreeVector& operator+=(const DegreeVector& other) {
        if (size() != other.size()) throw InternalError("degree: size mismatch in sum");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
        return *this;
    }

    friend DegreeVector operator+(DegreeVector a, const DegreeVector& b) { return a += b; }

    /// "0,2,1,1,0"
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(entries_[i]);
        }
        return out;
    }

    /// Run-length exponent notation, "0^1 2^1 1^2 0^1".
    std::string exponent_form() const {
        std::string out;
        std::size_t i = 0;
        while (i < entries_.size()) {
            std::size_t j = i;
            while (j + 1 < entries_.size() && entries_[j + 1] == entries_[i]) ++j;
            if (!out.empty()) out += ' ';
            out += std::to_string(entries_[i]);
            out += '^';
            out += std::to_string(j - i + 1);
            i = j + 1;
        }
        return out;
    }

    bool operator==(const DegreeVector& other) const = default;

    /// Total order for storing degree sets deterministically.
    bool operator<(const DegreeVector& other) const { return entries_ < other.entries_; }

private:
    std::vector<int> entries_;
};

/// a <= b componentwise.
inline bool componentwise_leq(const DegreeVector& a, const DegreeVector& b) {
    if (a.size() != b.size()) throw InternalError("degree: size mismatch in comparison");
    for (int j = 1; j <= a.size(); ++j) {
        if (a.component(j) > b.component(j)) return false;
    }
    return true;
}

/// Degree of a qt-rim hook: 1 in components q..t-1, else 0.
inline DegreeVector step_degree(const FlagShape& shape, RimHookSpec spec) {
    if (spec.q < 1 || spec.t > shape.block_count() || spec.q >= spec.t) {
        throw ParseError("step_degree: need blocks 1 <= q < t <= k+1");
    }
    std::vector<int> entries(static_cast<std::size_t>(shape.k()), 0);
    for (int j = spec.q; j <= spec.t - 1; ++j) entries[static_cast<std::size_t>(j) - 1] = 1;
    return DegreeVector(std::move(entries));
}

/// Degree d(v, w) of the reflection step swapping positions a < b:
/// d_j = 1 iff a <= i_j < b. Zero when a and b share a block.
inline DegreeVector root_degree(const FlagShape& shape, int a, int b) {
    if (a < 1 || b < 1 || a > shape.n() || b > shape.n() || a >= b) {
        throw ParseError("root_degree: need positions 1 <= a < b <= n");
    }
    std::vector<int> entries(static_cast<std::size_t>(shape.k()), 0);
    for (int j = 1; j <= shape.k(); ++j) {
        if (a <= shape.dim(j) && shape.dim(j) < b) entries[static_cast<std::size_t>(j) - 1] = 1;
    }
    return DegreeVector(std::move(entries));
}

/// Cohomological grading: sum of d_j * (i_{j+1} - i_{j-1}).
inline long long graded_degree(const FlagShape& shape, const DegreeVector& d) {
    if (d.size() != shape.k()) throw InternalError("graded_degree: length mismatch");
    long long total = 0;
    for (int j = 1; j <= shape.k(); ++j) {
        total += static_cast<long long>(d.component(j)) * shape.qweight(j);
    }
    return total;
}

}  // namespace qmaya
