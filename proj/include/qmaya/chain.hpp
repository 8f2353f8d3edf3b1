#pragma once

#include <utility>
#include <vector>

#include "qmaya/coset.hpp"
#include "qmaya/degree.hpp"
#include "qmaya/errors.hpp"
#include "qmaya/maya.hpp"

namespace qmaya {

struct ChainStep {
    RimHookSpec hook;
    DegreeVector degree;
    CosetRep result;
};

/// Witness of a minimal-degree computation: the greedy rim-hook chain from v
/// to the first coset dominating w. Each step strictly raises the coset in
/// Bruhat order; only the final coset dominates w; total is the step sum.
struct ChainTrace {
    CosetRep start;
    std::vector<ChainStep> steps;
    DegreeVector total;
};

struct MinDegreeResult {
    DegreeVector total;
    ChainTrace trace;
};

/// Minimal quantum degree of sigma^v * sigma_w via the greedy rim-hook chain:
/// repeatedly apply the selected hook until the working diagram dominates M^w.
/// Returns the zero vector with an empty trace iff w <= v already.
inline MinDegreeResult greedy_min_degree(const CosetRep& v, const CosetRep& w) {
    if (v.shape() != w.shape()) throw ParseError("greedy_min_degree: shape mismatch");
    const FlagShape& shape = v.shape();
    const MayaDiagram target = MayaDiagram::of(w);

    ChainTrace trace{v, {}, DegreeVector::zero(shape.k())};
    MayaDiagram current = MayaDiagram::of(v);
    // Each step raises some component, and far fewer than n^2 raises can ever
    // be needed; hitting the cap means the iteration is broken.
    const int cap = shape.n() * shape.n();
    for (int iter = 0; ; ++iter) {
        const auto hook = select_rim_hook(current, target);
        if (!hook) break;
        if (iter >= cap) {
            throw InternalError("greedy_min_degree: exceeded the iteration safety cap");
        }
        MayaDiagram next = rim_hook(current, *hook);
        if (!(diagram_leq(current, next) && !diagram_leq(next, current))) {
            throw InternalError("greedy_min_degree: step made no Bruhat progress");
        }
        DegreeVector degree = step_degree(shape, *hook);
        trace.total += degree;
        trace.steps.push_back(ChainStep{*hook, std::move(degree), next.to_coset()});
        current = std::move(next);
    }
    return MinDegreeResult{trace.total, std::move(trace)};
}

/// Projection to the Grassmannian Gr(i_j, n): the single proper block is the
/// sorted union of blocks 1..j.
inline CosetRep project(const CosetRep& c, int j) {
    const FlagShape& shape = c.shape();
    if (j < 1 || j > shape.k()) throw ParseError("project: invalid block index");
    const FlagShape grass(shape.n(), {shape.dim(j)});
    std::vector<int> image(c.perm().image().begin(),
                           c.perm().image().begin() + shape.dim(j));
    std::sort(image.begin(), image.end());
    for (int v = 1; v <= shape.n(); ++v) {
        if (!std::binary_search(image.begin(), image.begin() + shape.dim(j), v)) {
            image.push_back(v);
        }
    }
    return CosetRep(grass, Permutation(std::move(image)));
}

/// deg_j(v, w): greedy rim-hook steps needed in Gr(i_j, n) to carry the
/// projection of v above the projection of w. Every Grassmannian step is the
/// (1,2) hook of degree one.
inline int projection_degree(const CosetRep& v, const CosetRep& w, int j) {
    if (v.shape() != w.shape()) throw ParseError("projection_degree: shape mismatch");
    const MinDegreeResult result = greedy_min_degree(project(v, j), project(w, j));
    return result.total.component(1);
}

/// (deg_1(v,w), ..., deg_k(v,w)); componentwise below every chain degree, and
/// equal to the greedy total.
inline DegreeVector lower_bound_vector(const CosetRep& v, const CosetRep& w) {
    if (v.shape() != w.shape()) throw ParseError("lower_bound_vector: shape mismatch");
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(v.shape().k()));
    for (int j = 1; j <= v.shape().k(); ++j) {
        entries.push_back(projection_degree(v, w, j));
    }
    return DegreeVector(std::move(entries));
}

}  // namespace qmaya
