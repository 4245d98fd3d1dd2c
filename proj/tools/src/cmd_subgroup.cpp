#include <cmath>

#include "commands.hpp"
#include "glp/modmath.hpp"
#include "glp/theorems.hpp"

namespace glp::cli {

namespace {

json search_json(const MinSumSearch& s, u64 p) {
    const double l2 = std::log2(static_cast<double>(p));
    return {{"best_a", s.best_a},
            {"best_sum", s.best_sum},
            {"best_max", s.best_max},
            {"bound_ln", s.bound},
            {"bound_log2", 500.0 * l2 * std::log2(l2)},
            {"within_bound", s.within_bound}};
}

json fraction_json(const SmallQuotientFraction& f, u64 p) {
    return {{"count", f.count},
            {"size", f.size},
            {"fraction", rational_json(f.fraction())},
            {"threshold_ln", f.threshold},
            {"threshold_log2", 16.0 * std::log2(static_cast<double>(p))}};
}

json hypotheses_json(const SizeHypotheses& h) {
    return {{"majority_threshold", h.majority_threshold},
            {"search_threshold", h.search_threshold},
            {"majority", h.majority},
            {"search", h.search}};
}

}  // namespace

int cmd_subgroup(const SubgroupArgs& args, const OutputOptions& out) {
    RunReport report("subgroup");
    const u64 max_dlog = args.max_p_dlog ? args.max_p_dlog : kDefaultDlogLimit;
    const PrimeContext ctx = make_context(args.p, max_dlog);
    u64 m = args.order;
    if (args.index) {
        if ((ctx.p - 1) % args.index != 0)
            throw std::invalid_argument("subgroup: index must divide p-1");
        m = (ctx.p - 1) / args.index;
    }
    if (m == 0) m = ctx.p - 1;  // default: the full group
    const SubgroupCoset R = coset(subgroup(ctx, m), args.coset_rep % ctx.p);

    report.parameters() = {{"p", args.p},
                           {"order", m},
                           {"coset", args.coset_rep},
                           {"report", args.report},
                           {"with_discrepancy", args.with_discrepancy},
                           {"threads", thread_count()}};
    report.results() = {{"p", args.p},
                        {"order", R.order},
                        {"rep", R.rep},
                        {"generator", ctx.g},
                        {"elements", R.elements}};
    report.table().header = {"p", "order", "rep", "element"};
    for (u64 e : R.elements)
        report.table().rows.push_back(
            {std::to_string(args.p), std::to_string(R.order), std::to_string(R.rep),
             std::to_string(e)});

    std::string preview;
    for (std::size_t i = 0; i < R.elements.size() && i < 16; ++i) {
        if (i) preview += ", ";
        preview += std::to_string(R.elements[i]);
    }
    if (R.elements.size() > 16) preview += ", ...";
    report.line("coset of order " + std::to_string(R.order) + " mod " + std::to_string(args.p) +
                " with representative " + std::to_string(R.rep));
    report.line("elements: {" + preview + "}");

    if (args.report) {
        const u64 limit = args.max_p_exact ? args.max_p_exact : kDefaultExactLimit;
        const CosetReport rep = coset_report(R, args.with_discrepancy, limit);
        report.results()["fraction"] = fraction_json(rep.fraction, args.p);
        report.results()["search"] = search_json(rep.search, args.p);
        report.results()["hypotheses"] = hypotheses_json(rep.hypotheses);
        if (rep.has_ratio) report.results()["discrepancy_ratio"] = rep.ratio;
        report.line("small-quotient fraction: " + rep.fraction.fraction().str() + " (threshold " +
                    format_double(rep.fraction.threshold) + ")");
        report.line("minimum quotient sum: " + std::to_string(rep.search.best_sum) + " at a=" +
                    std::to_string(rep.search.best_a) + " (bound " +
                    format_double(rep.search.bound) + ")");
        if (rep.has_ratio)
            report.line("discrepancy ratio of the winner: " + format_double(rep.ratio));
    }
    return report.finish(out, kExitPass);
}

}  // namespace glp::cli
