#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qmaya/chain.hpp"
#include "qmaya/coset.hpp"
#include "qmaya/degree.hpp"
#include "qmaya/errors.hpp"
#include "qmaya/maya.hpp"

namespace qmaya::oracle {

/// Enumerable-space guard for all oracle constructions.
inline constexpr std::uint64_t kMaxCosets = 50000;

/// One reflection move u -> apply_transposition(u, a, b) with its root degree.
struct LabeledEdge {
    CosetRep source;
    CosetRep target;
    DegreeVector degree;
};

/// The labeled adjacency multigraph of W^{P_I} plus the cover-closure Bruhat
/// relation, built once per shape. Ground truth for the chain semantics; no
/// Maya machinery is involved except where explicitly compared.
class Space {
public:
    explicit Space(const FlagShape& shape) : shape_(shape) {
        if (coset_count(shape) > kMaxCosets) {
            throw ParseError("oracle: shape exceeds the " + std::to_string(kMaxCosets) +
                             "-coset size guard");
        }
        for_each_coset(shape, [&](CosetRep c) {
            index_.emplace(c.perm().image(), static_cast<int>(cosets_.size()));
            cosets_.push_back(std::move(c));
        });
        const int count = static_cast<int>(cosets_.size());
        out_.resize(static_cast<std::size_t>(count));
        covers_.resize(static_cast<std::size_t>(count));
        for (int s = 0; s < count; ++s) {
            const CosetRep& u = cosets_[static_cast<std::size_t>(s)];
            const int len_u = u.length();
            for (int a = 1; a <= shape.n(); ++a) {
                for (int b = a + 1; b <= shape.n(); ++b) {
                    if (shape.block_of(a) == shape.block_of(b)) continue;
                    const CosetRep moved = apply_transposition(u, a, b);
                    const int t = index_of(moved);
                    DegreeVector degree = root_degree(shape, a, b);
                    auto edge = std::make_pair(t, std::move(degree));
                    auto& list = out_[static_cast<std::size_t>(s)];
                    if (std::find(list.begin(), list.end(), edge) == list.end()) {
                        if (moved.length() == len_u + 1) {
                            covers_[static_cast<std::size_t>(s)].push_back(t);
                        }
                        list.push_back(std::move(edge));
                    }
                }
            }
        }
        build_closure();
    }

    const FlagShape& shape() const { return shape_; }
    const std::vector<CosetRep>& cosets() const { return cosets_; }
    int size() const { return static_cast<int>(cosets_.size()); }

    int index_of(const CosetRep& c) const {
        const auto it = index_.find(c.perm().image());
        if (it == index_.end()) throw InternalError("oracle: coset not in this space");
        return it->second;
    }

    /// Transitive-reflexive closure of the length-plus-one cover moves.
    bool closure_leq(int u, int v) const {
        return closure_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    }

    /// Pareto-minimal chain degrees between v and w, capped componentwise.
    /// Label-correcting propagation from the down-set of v, accepted on the
    /// up-set of w.
    std::vector<DegreeVector> pareto_min_degrees(int v, int w, const DegreeVector& cap) const {
        const int count = size();
        std::vector<std::vector<DegreeVector>> labels(static_cast<std::size_t>(count));
        std::deque<std::pair<int, DegreeVector>> queue;

        auto insert = [&](int node, const DegreeVector& degree) -> bool {
            auto& antichain = labels[static_cast<std::size_t>(node)];
            for (const DegreeVector& present : antichain) {
                if (componentwise_leq(present, degree)) return false;
            }
            std::erase_if(antichain, [&](const DegreeVector& present) {
                return componentwise_leq(degree, present);
            });
            antichain.push_back(degree);
            return true;
        };

        const DegreeVector zero = DegreeVector::zero(shape_.k());
        for (int u = 0; u < count; ++u) {
            if (closure_leq(u, v)) {
                insert(u, zero);
                queue.emplace_back(u, zero);
            }
        }
        while (!queue.empty()) {
            auto [node, degree] = std::move(queue.front());
            queue.pop_front();
            const auto& antichain = labels[static_cast<std::size_t>(node)];
            if (std::find(antichain.begin(), antichain.end(), degree) == antichain.end()) {
                continue;  // superseded since it was queued
            }
            for (const auto& [next, edge_degree] : out_[static_cast<std::size_t>(node)]) {
                DegreeVector reached = degree + edge_degree;
                if (!componentwise_leq(reached, cap)) continue;
                if (insert(next, reached)) queue.emplace_back(next, std::move(reached));
            }
        }

        std::vector<DegreeVector> accepted;
        for (int u = 0; u < count; ++u) {
            if (!closure_leq(w, u)) continue;
            for (const DegreeVector& degree : labels[static_cast<std::size_t>(u)]) {
                bool dominated = false;
                for (const DegreeVector& other : accepted) {
                    if (componentwise_leq(other, degree)) {
                        dominated = true;
                        break;
                    }
                }
                if (dominated) continue;
                std::erase_if(accepted, [&](const DegreeVector& other) {
                    return componentwise_leq(degree, other);
                });
                accepted.push_back(degree);
            }
        }
        std::sort(accepted.begin(), accepted.end());
        return accepted;
    }

private:
    void build_closure() {
        const std::size_t count = cosets_.size();
        closure_.assign(count, std::vector<bool>(count, false));
        std::vector<int> stack;
        for (std::size_t s = 0; s < count; ++s) {
            auto& row = closure_[s];
            row[s] = true;
            stack.assign(1, static_cast<int>(s));
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (int t : covers_[static_cast<std::size_t>(u)]) {
                    if (!row[static_cast<std::size_t>(t)]) {
                        row[static_cast<std::size_t>(t)] = true;
                        stack.push_back(t);
                    }
                }
            }
        }
    }

    FlagShape shape_;
    std::vector<CosetRep> cosets_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<std::pair<int, DegreeVector>>> out_;  // deduplicated
    std::vector<std::vector<int>> covers_;
    std::vector<std::vector<bool>> closure_;
};

/// Full labeled multigraph, one edge per (coset, cross-block position pair).
inline std::vector<LabeledEdge> adjacency_graph(const FlagShape& shape) {
    if (coset_count(shape) > kMaxCosets) {
        throw ParseError("oracle: shape exceeds the size guard");
    }
    std::vector<LabeledEdge> edges;
    for_each_coset(shape, [&](const CosetRep& u) {
        for (int a = 1; a <= shape.n(); ++a) {
            for (int b = a + 1; b <= shape.n(); ++b) {
                if (shape.block_of(a) == shape.block_of(b)) continue;
                edges.push_back(
                    LabeledEdge{u, apply_transposition(u, a, b), root_degree(shape, a, b)});
            }
        }
    });
    return edges;
}

/// Convenience wrapper building the space for a single query.
inline std::vector<DegreeVector> pareto_min_degrees(const CosetRep& v, const CosetRep& w,
                                                    const DegreeVector& cap) {
    if (v.shape() != w.shape()) throw ParseError("pareto_min_degrees: shape mismatch");
    const Space space(v.shape());
    return space.pareto_min_degrees(space.index_of(v), space.index_of(w), cap);
}

/// Cover-closure Bruhat relation, indexed by the enumeration order of the
/// cosets. Used as an independent check of the diagram criterion.
inline std::vector<std::vector<bool>> bruhat_closure(const FlagShape& shape) {
    const Space space(shape);
    std::vector<std::vector<bool>> relation(static_cast<std::size_t>(space.size()),
                                            std::vector<bool>(static_cast<std::size_t>(space.size())));
    for (int u = 0; u < space.size(); ++u) {
        for (int v = 0; v < space.size(); ++v) {
            relation[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                space.closure_leq(u, v);
        }
    }
    return relation;
}

struct DegreeMismatch {
    CosetRep v;
    CosetRep w;
    DegreeVector greedy;
    std::vector<DegreeVector> pareto;
    DegreeVector lower_bound;
};

struct VerifyReport {
    explicit VerifyReport(FlagShape space_shape) : shape(std::move(space_shape)) {}

    FlagShape shape;
    std::uint64_t pairs_checked = 0;
    std::vector<DegreeMismatch> mismatches;
    std::uint64_t bruhat_mismatches = 0;
    std::uint64_t hecke_mismatches = 0;
    // Reported, never asserted: how often the minimal degree is symmetric.
    std::uint64_t symmetric_pairs = 0;

    bool ok() const { return mismatches.empty() && bruhat_mismatches == 0 && hecke_mismatches == 0; }
};

namespace detail {

/// Checks one ordered pair: greedy total vs projection lower bound vs Pareto
/// set, and the Hecke identity on every greedy step.
inline void check_pair(const Space& space, int vi, int wi, int cap_margin,
                       VerifyReport& report, DegreeVector& total_out) {
    const CosetRep& v = space.cosets()[static_cast<std::size_t>(vi)];
    const CosetRep& w = space.cosets()[static_cast<std::size_t>(wi)];
    const MinDegreeResult greedy = greedy_min_degree(v, w);
    const DegreeVector lower = lower_bound_vector(v, w);

    std::vector<int> cap_entries;
    for (int e : greedy.total.entries()) cap_entries.push_back(e + cap_margin);
    const std::vector<DegreeVector> pareto =
        space.pareto_min_degrees(vi, wi, DegreeVector(std::move(cap_entries)));

    const bool pareto_ok = pareto.size() == 1 && pareto.front() == greedy.total;
    if (!(lower == greedy.total) || !pareto_ok) {
        report.mismatches.push_back(DegreeMismatch{v, w, greedy.total, pareto, lower});
    }

    const CosetRep* prev = &greedy.trace.start;
    for (const ChainStep& step : greedy.trace.steps) {
        const auto word = reflection_word(space.shape(), step.hook.q, step.hook.t);
        if (!(hecke_word_action(*prev, word) == step.result)) ++report.hecke_mismatches;
        Permutation product = Permutation::identity(space.shape().n());
        for (int i : word) product = product * transposition(space.shape().n(), i, i + 1);
        if (!(product == transposition(space.shape().n(),
                                       space.shape().dim(step.hook.q - 1) + 1,
                                       space.shape().dim(step.hook.t)))) {
            ++report.hecke_mismatches;
        }
        prev = &step.result;
    }
    ++report.pairs_checked;
    total_out = greedy.total;
}

}  // namespace detail

/// Sweeps every ordered pair of the space: asserts greedy = lower bound =
/// unique Pareto degree, checks the diagram order against the cover closure,
/// and verifies the Hecke identity on each greedy step. Failures are
/// recorded, not thrown.
inline VerifyReport verify_space(const FlagShape& shape, int cap_margin = 1, int jobs = 1) {
    const Space space(shape);
    const int count = space.size();
    VerifyReport report(shape);

    // Diagram order vs cover closure, all ordered pairs.
    std::vector<MayaDiagram> diagrams;
    diagrams.reserve(static_cast<std::size_t>(count));
    for (const CosetRep& c : space.cosets()) diagrams.push_back(MayaDiagram::of(c));
    for (int u = 0; u < count; ++u) {
        for (int x = 0; x < count; ++x) {
            const bool by_diagram = diagram_leq(diagrams[static_cast<std::size_t>(u)],
                                                diagrams[static_cast<std::size_t>(x)]);
            if (by_diagram != space.closure_leq(u, x)) ++report.bruhat_mismatches;
        }
    }

    // Greedy/lower-bound/Pareto sweep over unordered pairs, both directions.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < count; ++i) {
        for (int j = i; j < count; ++j) pairs.emplace_back(i, j);
    }
    const int workers = std::max(1, jobs);
    std::vector<VerifyReport> partial(static_cast<std::size_t>(workers), VerifyReport(shape));
    std::vector<std::uint64_t> symmetric(static_cast<std::size_t>(workers), 0);
    auto run_range = [&](int worker, std::size_t begin, std::size_t end) {
        VerifyReport& local = partial[static_cast<std::size_t>(worker)];
        DegreeVector forward = DegreeVector::zero(shape.k());
        DegreeVector backward = DegreeVector::zero(shape.k());
        for (std::size_t p = begin; p < end; ++p) {
            const auto [i, j] = pairs[p];
            detail::check_pair(space, i, j, cap_margin, local, forward);
            if (i == j) {
                ++symmetric[static_cast<std::size_t>(worker)];
                continue;
            }
            detail::check_pair(space, j, i, cap_margin, local, backward);
            if (forward == backward) symmetric[static_cast<std::size_t>(worker)] += 2;
        }
    };
    if (workers == 1) {
        run_range(0, 0, pairs.size());
    } else {
        std::vector<std::thread> threads;
        const std::size_t chunk = (pairs.size() + static_cast<std::size_t>(workers) - 1) /
                                  static_cast<std::size_t>(workers);
        for (int worker = 0; worker < workers; ++worker) {
            const std::size_t begin = std::min(pairs.size(), chunk * static_cast<std::size_t>(worker));
            const std::size_t end = std::min(pairs.size(), begin + chunk);
            threads.emplace_back(run_range, worker, begin, end);
        }
        for (std::thread& t : threads) t.join();
    }
    for (int worker = 0; worker < workers; ++worker) {
        const VerifyReport& local = partial[static_cast<std::size_t>(worker)];
        report.pairs_checked += local.pairs_checked;
        report.hecke_mismatches += local.hecke_mismatches;
        report.symmetric_pairs += symmetric[static_cast<std::size_t>(worker)];
        report.mismatches.insert(report.mismatches.end(), local.mismatches.begin(),
                                 local.mismatches.end());
    }
    return report;
}

}  // namespace qmaya::oracle
