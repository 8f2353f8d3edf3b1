#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmaya/coset.hpp"
#include "qmaya/errors.hpp"
#include "qmaya/flag_shape.hpp"

namespace qmaya {

/// A generalized rim hook acts on rows q..t-1 of a Maya diagram and carries
/// quantum degree 0^{q-1} 1^{t-q} 0^{k+1-t}.
struct RimHookSpec {
    int q;
    int t;

    bool operator==(const RimHookSpec&) const = default;
};

/// (k+1) x n grid of marks; row j (counted from the bottom, j = 1) holds the
/// columns {w(1), ..., w(i_j)} of a minimal coset representative w. Rows are
/// nested upward and row k+1 is full.
class MayaDiagram {
public:
    /// Builds M^w from a coset representative.
    static MayaDiagram of(const CosetRep& c) {
        MayaDiagram m(c.shape());
        const auto& image = c.perm().image();
        for (int j = 1; j <= m.shape_.block_count(); ++j) {
            for (int i = 1; i <= m.shape_.dim(j); ++i) {
                m.cell(j, image[static_cast<std::size_t>(i) - 1]) = 1;
            }
        }
        return m;
    }

    /// Builds a diagram from explicit row column-sets, validating cardinality
    /// and nesting.
    static MayaDiagram from_rows(const FlagShape& shape,
                                 const std::vector<std::vector<int>>& rows) {
        if (static_cast<int>(rows.size()) != shape.block_count()) {
            throw ParseError("maya: expected k+1 rows");
        }
        MayaDiagram m(shape);
        for (int j = 1; j <= shape.block_count(); ++j) {
            for (int b : rows[static_cast<std::size_t>(j) - 1]) {
                if (b < 1 || b > shape.n()) throw ParseError("maya: column out of range");
                if (m.cell(j, b)) throw ParseError("maya: duplicate column in row");
                m.cell(j, b) = 1;
            }
        }
        m.validate();
        return m;
    }

    const FlagShape& shape() const { return shape_; }

    /// Mark presence at (row j, column b); row 0 reads as empty.
    bool has_mark(int j, int b) const {
        if (j == 0) return false;
        check_position(j, b);
        return grid_[index(j, b)] != 0;
    }

    /// S_j(M, b) = number of marks in row j among columns 1..b.
    int prefix_count(int j, int b) const {
        if (j < 1 || j > shape_.block_count() || b < 0 || b > shape_.n()) {
            throw InternalError("maya: prefix_count out of range");
        }
        int count = 0;
        for (int c = 1; c <= b; ++c) count += grid_[index(j, c)];
        return count;
    }

    /// Columns of row j, ascending.
    std::vector<int> row_columns(int j) const {
        std::vector<int> out;
        for (int b = 1; b <= shape_.n(); ++b) {
            if (has_mark(j, b)) out.push_back(b);
        }
        return out;
    }

    /// Inverse of MayaDiagram::of — block j is row j minus row j-1.
    CosetRep to_coset() const {
        validate();
        std::vector<int> image;
        image.reserve(static_cast<std::size_t>(shape_.n()));
        for (int j = 1; j <= shape_.block_count(); ++j) {
            for (int b = 1; b <= shape_.n(); ++b) {
                if (has_mark(j, b) && !has_mark(j - 1, b)) image.push_back(b);
            }
        }
        return CosetRep(shape_, Permutation(std::move(image)));
    }

    bool operator==(const MayaDiagram& other) const = default;

private:
    explicit MayaDiagram(FlagShape shape)
        : shape_(std::move(shape)),
          grid_(static_cast<std::size_t>(shape_.block_count()) *
                    static_cast<std::size_t>(shape_.n()),
                0) {}

    std::size_t index(int j, int b) const {
        return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(shape_.n()) +
               static_cast<std::size_t>(b - 1);
    }

    char& cell(int j, int b) {
        check_position(j, b);
        return grid_[index(j, b)];
    }

    void check_position(int j, int b) const {
        if (j < 1 || j > shape_.block_count() || b < 1 || b > shape_.n()) {
            throw InternalError("maya: cell position out of range");
        }
    }

    void validate() const {
        for (int j = 1; j <= shape_.block_count(); ++j) {
            if (prefix_count(j, shape_.n()) != shape_.dim(j)) {
                throw InternalError("maya: row " + std::to_string(j) + " has wrong cardinality");
            }
        }
        for (int j = 1; j <= shape_.k(); ++j) {
            for (int b = 1; b <= shape_.n(); ++b) {
                if (has_mark(j, b) && !has_mark(j + 1, b)) {
                    throw InternalError("maya: rows are not nested");
                }
            }
        }
    }

    friend MayaDiagram rim_hook(const MayaDiagram&, RimHookSpec);

    FlagShape shape_;
    std::vector<char> grid_;  // row-major, row 1 first
};

/// Diagram order: M^w <= M^v iff S_j(M^w, b) >= S_j(M^v, b) for all j, b.
/// Decides Bruhat order w <= v on the quotient.
inline bool diagram_leq(const MayaDiagram& mw, const MayaDiagram& mv) {
    if (mw.shape() != mv.shape()) throw InternalError("diagram_leq: shape mismatch");
    const FlagShape& shape = mw.shape();
    for (int j = 1; j <= shape.block_count(); ++j) {
        int sw = 0, sv = 0;
        for (int b = 1; b <= shape.n(); ++b) {
            sw += mw.has_mark(j, b);
            sv += mv.has_mark(j, b);
            if (sw < sv) return false;
        }
    }
    return true;
}

/// Bruhat order on the quotient via the diagram criterion.
inline bool bruhat_leq(const CosetRep& u, const CosetRep& v) {
    return diagram_leq(MayaDiagram::of(u), MayaDiagram::of(v));
}

/// Leftmost column with a mark in row r but not in row r-1; absent when row r
/// is contained in row r-1.
inline std::optional<int> phi(const MayaDiagram& m, int r) {
    if (r < 1 || r > m.shape().k()) throw InternalError("phi: row out of range");
    for (int b = 1; b <= m.shape().n(); ++b) {
        if (m.has_mark(r, b) && !m.has_mark(r - 1, b)) return b;
    }
    return std::nullopt;
}

/// Rightmost column with a mark in row r+1 but not in row r; absent when row
/// r+1 is contained in row r.
inline std::optional<int> psi(const MayaDiagram& m, int r) {
    if (r < 1 || r > m.shape().k()) throw InternalError("psi: row out of range");
    for (int b = m.shape().n(); b >= 1; --b) {
        if (m.has_mark(r + 1, b) && !m.has_mark(r, b)) return b;
    }
    return std::nullopt;
}

/// Generalized qt-rim hook. The up phase walks rows q..t-1 removing the mark
/// at the current phi; the down phase walks rows t-1..q adding a mark at the
/// psi of the current working diagram. Realizes the Hecke product with the
/// palindromic reflection word for (q, t).
inline MayaDiagram rim_hook(const MayaDiagram& m, RimHookSpec spec) {
    const FlagShape& shape = m.shape();
    if (spec.q < 1 || spec.t > shape.block_count() || spec.q >= spec.t) {
        throw ParseError("rim_hook: need blocks 1 <= q < t <= k+1");
    }
    MayaDiagram work = m;
    for (int j = spec.q; j <= spec.t - 1; ++j) {
        const auto col = phi(work, j);
        if (!col) throw InternalError("rim_hook: phi vanished during the up phase");
        work.cell(j, *col) = 0;
    }
    for (int j = spec.t - 1; j >= spec.q; --j) {
        const auto col = psi(work, j);
        if (!col) throw InternalError("rim_hook: psi vanished during the down phase");
        work.cell(j, *col) = 1;
    }
    work.validate();
    return work;
}

/// Rows of M^v holding a position whose prefix count exceeds the one in M^w
/// (Bruhat-order incompatible rows). Empty iff M^w <= M^v. Only rows 1..k can
/// appear; the full top row is always compatible.
inline std::vector<int> incompatible_rows(const MayaDiagram& mv, const MayaDiagram& mw) {
    if (mv.shape() != mw.shape()) throw InternalError("incompatible_rows: shape mismatch");
    const FlagShape& shape = mv.shape();
    std::vector<int> rows;
    for (int j = 1; j <= shape.k(); ++j) {
        int sv = 0, sw = 0;
        for (int b = 1; b <= shape.n(); ++b) {
            sv += mv.has_mark(j, b);
            sw += mw.has_mark(j, b);
            if (sv > sw) {
                rows.push_back(j);
                break;
            }
        }
    }
    return rows;
}

/// All (q, t) whose row range q..t-1 is a maximal consecutive run of
/// incompatible rows of greatest length, ascending in q.
inline std::vector<RimHookSpec> candidate_rim_hooks(const MayaDiagram& mv,
                                                    const MayaDiagram& mw) {
    const std::vector<int> rows = incompatible_rows(mv, mw);
    std::vector<RimHookSpec> runs;
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        while (j + 1 < rows.size() && rows[j + 1] == rows[j] + 1) ++j;
        runs.push_back(RimHookSpec{rows[i], rows[j] + 1});
        i = j + 1;
    }
    int best = 0;
    for (const RimHookSpec& run : runs) best = std::max(best, run.t - run.q);
    std::vector<RimHookSpec> out;
    for (const RimHookSpec& run : runs) {
        if (run.t - run.q == best) out.push_back(run);
    }
    return out;
}

/// The hook R_{(v,w)}: longest maximal run of incompatible rows, smallest q on
/// ties. Absent iff M^w <= M^v.
inline std::optional<RimHookSpec> select_rim_hook(const MayaDiagram& mv, const MayaDiagram& mw) {
    const std::vector<RimHookSpec> candidates = candidate_rim_hooks(mv, mw);
    if (candidates.empty()) return std::nullopt;
    return candidates.front();
}

/// Text rendering, top row first. 'X' marks the bottom-most mark of a column,
/// 'x' the marks above it, '.' an empty cell; cells are space separated and
/// every line ends with a newline. With color the non-bottom marks are blue.
inline std::string render(const MayaDiagram& m, bool color = false) {
    const FlagShape& shape = m.shape();
    std::vector<int> bottom(static_cast<std::size_t>(shape.n()) + 1, 0);
    for (int b = 1; b <= shape.n(); ++b) {
        for (int j = 1; j <= shape.block_count(); ++j) {
            if (m.has_mark(j, b)) {
                bottom[static_cast<std::size_t>(b)] = j;
                break;
            }
        }
    }
    std::string out;
    for (int j = shape.block_count(); j >= 1; --j) {
        for (int b = 1; b <= shape.n(); ++b) {
            if (b > 1) out += ' ';
            if (!m.has_mark(j, b)) {
                out += '.';
            } else if (bottom[static_cast<std::size_t>(b)] == j) {
                out += 'X';
            } else if (color) {
                out += "\033[34mx\033[0m";
            } else {
                out += 'x';
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace qmaya
