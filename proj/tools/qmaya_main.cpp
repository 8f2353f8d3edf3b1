// Command line front end: minimum quantum degrees of Schubert class products
// on partial flag varieties, rim hooks on Maya diagrams, Bruhat comparisons,
// coset enumeration, and oracle verification sweeps.
//
// Exit codes: 0 success, 1 usage or parse error, 2 internal invariant
// violation, 3 verification mismatch.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qmaya/qmaya.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitMismatch = 3;

bool color_enabled(bool flag) {
    if (!flag) return false;
    const char* no_color = std::getenv("NO_COLOR");
    return no_color == nullptr || no_color[0] == '\0';
}

struct MindegOptions {
    std::string flag;
    std::string v;
    std::string w;
    bool json = false;
    bool show_chain = false;
    bool color = false;
};

int run_mindeg(const MindegOptions& opt) {
    const qmaya::FlagShape shape = qmaya::FlagShape::parse(opt.flag);
    const qmaya::CosetRep v = qmaya::CosetRep::parse(shape, opt.v);
    const qmaya::CosetRep w = qmaya::CosetRep::parse(shape, opt.w);
    const qmaya::OutputRecord record = qmaya::OutputRecord::compute(v, w);
    if (opt.json) {
        std::cout << record.to_json_text();
        return kExitOk;
    }
    const qmaya::MinDegreeResult& result = record.result;
    std::cout << "min degree: " << result.total.to_string() << "\n";
    std::cout << "exponent form: " << result.total.exponent_form() << "\n";
    std::cout << "graded degree: " << qmaya::graded_degree(shape, result.total) << "\n";
    if (opt.show_chain) {
        const bool color = color_enabled(opt.color);
        std::cout << "chain (" << result.trace.steps.size() << " steps):\n";
        std::cout << "start: " << v.to_string() << "\n";
        std::cout << qmaya::render(qmaya::MayaDiagram::of(v), color);
        for (std::size_t i = 0; i < result.trace.steps.size(); ++i) {
            const qmaya::ChainStep& step = result.trace.steps[i];
            std::cout << "step " << i + 1 << ": hook (" << step.hook.q << "," << step.hook.t
                      << ") degree " << step.degree.to_string() << " = "
                      << step.degree.exponent_form() << " -> " << step.result.to_string() << "\n";
            std::cout << qmaya::render(qmaya::MayaDiagram::of(step.result), color);
        }
    }
    return kExitOk;
}

struct RimhookOptions {
    std::string flag;
    std::string v;
    int q = 0;
    int t = 0;
    bool color = false;
};

int run_rimhook(const RimhookOptions& opt) {
    const qmaya::FlagShape shape = qmaya::FlagShape::parse(opt.flag);
    const qmaya::CosetRep v = qmaya::CosetRep::parse(shape, opt.v);
    const qmaya::MayaDiagram before = qmaya::MayaDiagram::of(v);
    const qmaya::MayaDiagram after = qmaya::rim_hook(before, {opt.q, opt.t});
    const bool color = color_enabled(opt.color);
    std::cout << "v: " << v.to_string() << "\n";
    std::cout << qmaya::render(before, color);
    std::cout << "result: " << after.to_coset().to_string() << "\n";
    std::cout << qmaya::render(after, color);
    return kExitOk;
}

int run_bruhat(const std::string& flag, const std::string& v_text, const std::string& w_text) {
    const qmaya::FlagShape shape = qmaya::FlagShape::parse(flag);
    const qmaya::CosetRep v = qmaya::CosetRep::parse(shape, v_text);
    const qmaya::CosetRep w = qmaya::CosetRep::parse(shape, w_text);
    std::cout << (qmaya::bruhat_leq(w, v) ? "true" : "false") << "\n";
    return kExitOk;
}

int run_verify(const std::string& flag, int cap_margin, int jobs) {
    const qmaya::FlagShape shape = qmaya::FlagShape::parse(flag);
    const qmaya::oracle::VerifyReport report = qmaya::oracle::verify_space(shape, cap_margin, jobs);
    std::cout << "shape: " << shape.to_string() << "\n";
    std::cout << "pairs checked: " << report.pairs_checked << "\n";
    std::cout << "degree mismatches: " << report.mismatches.size() << "\n";
    for (const auto& bad : report.mismatches) {
        std::cout << "  v=" << bad.v.to_string() << " w=" << bad.w.to_string()
                  << " greedy=" << bad.greedy.to_string()
                  << " lower=" << bad.lower_bound.to_string() << " pareto={";
        for (std::size_t i = 0; i < bad.pareto.size(); ++i) {
            if (i > 0) std::cout << "; ";
            std::cout << bad.pareto[i].to_string();
        }
        std::cout << "}\n";
    }
    std::cout << "bruhat mismatches: " << report.bruhat_mismatches << "\n";
    std::cout << "hecke mismatches: " << report.hecke_mismatches << "\n";
    std::cout << "symmetric totals: " << report.symmetric_pairs << "/" << report.pairs_checked
              << "\n";
    std::cout << "result: " << (report.ok() ? "OK" : "MISMATCH") << "\n";
    return report.ok() ? kExitOk : kExitMismatch;
}

int run_enumerate(const std::string& flag, bool count_only) {
    const qmaya::FlagShape shape = qmaya::FlagShape::parse(flag);
    if (count_only) {
        std::cout << qmaya::coset_count(shape) << "\n";
        return kExitOk;
    }
    qmaya::for_each_coset(shape,
                          [](const qmaya::CosetRep& c) { std::cout << c.to_string() << "\n"; });
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum quantum degrees on partial flag varieties via Maya diagrams"};
    app.require_subcommand(1);

    MindegOptions mindeg;
    CLI::App* cmd_mindeg =
        app.add_subcommand("mindeg", "Minimal quantum degree of a Schubert class product");
    cmd_mindeg->add_option("--flag", mindeg.flag, "Flag shape i1,...,ik/n")->required();
    cmd_mindeg->add_option("--v", mindeg.v, "First coset (block notation)")->required();
    cmd_mindeg->add_option("--w", mindeg.w, "Second coset (block notation)")->required();
    cmd_mindeg->add_flag("--json", mindeg.json, "Emit a machine readable record");
    cmd_mindeg->add_flag("--show-chain", mindeg.show_chain, "Render the rim-hook chain");
    cmd_mindeg->add_flag("--color", mindeg.color, "ANSI colors (NO_COLOR overrides)");

    RimhookOptions rimhook;
    CLI::App* cmd_rimhook =
        app.add_subcommand("rimhook", "Apply one generalized qt-rim hook to a coset");
    cmd_rimhook->add_option("--flag", rimhook.flag, "Flag shape i1,...,ik/n")->required();
    cmd_rimhook->add_option("--v", rimhook.v, "Coset (block notation)")->required();
    cmd_rimhook->add_option("--q", rimhook.q, "First hook block")->required();
    cmd_rimhook->add_option("--t", rimhook.t, "Last hook block plus one")->required();
    cmd_rimhook->add_flag("--color", rimhook.color, "ANSI colors (NO_COLOR overrides)");

    std::string bruhat_flag, bruhat_v, bruhat_w;
    CLI::App* cmd_bruhat = app.add_subcommand("bruhat", "Decide whether w <= v in Bruhat order");
    cmd_bruhat->add_option("--flag", bruhat_flag, "Flag shape i1,...,ik/n")->required();
    cmd_bruhat->add_option("--v", bruhat_v, "Upper candidate")->required();
    cmd_bruhat->add_option("--w", bruhat_w, "Lower candidate")->required();

    std::string verify_flag;
    int cap_margin = 1;
    int jobs = 1;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "Sweep a small space against the exhaustive oracle");
    cmd_verify->add_option("--flag", verify_flag, "Flag shape i1,...,ik/n")->required();
    cmd_verify->add_option("--cap-margin", cap_margin, "Pareto search margin above the greedy total")
        ->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--jobs", jobs, "Worker threads for the pair sweep")
        ->check(CLI::PositiveNumber);

    std::string enum_flag;
    bool count_only = false;
    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "Stream the minimal coset representatives");
    cmd_enumerate->add_option("--flag", enum_flag, "Flag shape i1,...,ik/n")->required();
    cmd_enumerate->add_flag("--count-only", count_only, "Print only the number of cosets");

    try {
        app.parse(argc, argv);
        if (cmd_mindeg->parsed()) return run_mindeg(mindeg);
        if (cmd_rimhook->parsed()) return run_rimhook(rimhook);
        if (cmd_bruhat->parsed()) return run_bruhat(bruhat_flag, bruhat_v, bruhat_w);
        if (cmd_verify->parsed()) return run_verify(verify_flag, cap_margin, jobs);
        if (cmd_enumerate->parsed()) return run_enumerate(enum_flag, count_only);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const qmaya::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qmaya::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
