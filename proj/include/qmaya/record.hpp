#pragma once

#include <string>

#include <json.hpp>

#include "qmaya/chain.hpp"
#include "qmaya/degree.hpp"

namespace qmaya {

/// Machine-readable result of a minimal-degree computation. The JSON schema
/// is stable: {flag:{n,dims[]}, v, w, min_degree[], exponent_form,
/// graded_degree, chain:[{q,t,degree[],coset}]}.
struct OutputRecord {
    FlagShape shape;
    std::string v;
    std::string w;
    MinDegreeResult result;

    static OutputRecord compute(const CosetRep& v, const CosetRep& w) {
        return OutputRecord{v.shape(), v.to_string(), w.to_string(), greedy_min_degree(v, w)};
    }

    nlohmann::json to_json() const {
        nlohmann::json chain = nlohmann::json::array();
        for (const ChainStep& step : result.trace.steps) {
            chain.push_back({{"q", step.hook.q},
                             {"t", step.hook.t},
                             {"degree", step.degree.entries()},
                             {"coset", step.result.to_string()}});
        }
        return {{"flag", {{"n", shape.n()}, {"dims", shape.dims()}}},
                {"v", v},
                {"w", w},
                {"min_degree", result.total.entries()},
                {"exponent_form", result.total.exponent_form()},
                {"graded_degree", graded_degree(shape, result.total)},
                {"chain", chain}};
    }

    std::string to_json_text() const { return to_json().dump(2) + "\n"; }
};

}  // namespace qmaya
