#include <algorithm>
#include <cmath>

#include "commands.hpp"
#include "glp/contfrac.hpp"
#include "glp/modmath.hpp"

namespace glp::cli {

namespace {

std::string join_quotients(const std::vector<u64>& qs, char sep) {
    std::string s;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(qs[i]);
    }
    return s;
}

json expansion_json(const ContinuedFraction& cf) {
    json convergents = json::array();
    for (const auto& [num, den] : cf.convergents)
        convergents.push_back(std::to_string(num) + "/" + std::to_string(den));
    return {{"quotients", cf.quotients},
            {"convergents", convergents},
            {"length", cf.length()},
            {"sum", sum_quotients(cf)},
            {"max", max_quotient(cf)}};
}

}  // namespace

int cmd_cf(const CfArgs& args, const OutputOptions& out) {
    RunReport report("cf");
    if (!is_prime(args.p)) throw std::invalid_argument("cf: p must be prime");
    report.parameters() = {{"p", args.p}, {"threads", thread_count()}};
    report.table().header = {"a", "length", "sum", "max", "quotients"};

    if (args.all) {
        report.parameters()["a"] = "all";
        // per-index slots keep the output identical for every thread count
        std::vector<QuotientStats> stats(args.p - 1);
        parallel_for(args.p - 1, thread_count(),
                     [&](u64 i) { stats[i] = quotient_stats(i + 1, args.p); });
        json rows = json::array();
        u64 max_sum = 0, min_sum = UINT64_MAX;
        for (u64 a = 1; a < args.p; ++a) {
            const QuotientStats& qs = stats[a - 1];
            const ContinuedFraction cf = continued_fraction(a, args.p);
            rows.push_back({{"a", a}, {"length", qs.length}, {"sum", qs.sum}, {"max", qs.max}});
            report.table().rows.push_back({std::to_string(a), std::to_string(qs.length),
                                           std::to_string(qs.sum), std::to_string(qs.max),
                                           join_quotients(cf.quotients, ';')});
            max_sum = std::max(max_sum, qs.sum);
            min_sum = std::min(min_sum, qs.sum);
            report.line("a=" + std::to_string(a) + "  [0; " + join_quotients(cf.quotients, ',') +
                        "]  sum=" + std::to_string(qs.sum) + "  max=" + std::to_string(qs.max));
        }
        report.results() = {{"rows", rows},
                            {"count", args.p - 1},
                            {"sum_min", min_sum},
                            {"sum_max", max_sum},
                            {"length_bound_5_ln_p", 5.0 * std::log(static_cast<double>(args.p))}};
        report.line("expansions: " + std::to_string(args.p - 1) + "  sum range [" +
                    std::to_string(min_sum) + ", " + std::to_string(max_sum) + "]");
        return report.finish(out, kExitPass);
    }

    const ContinuedFraction cf = continued_fraction(args.a, args.p);
    report.parameters()["a"] = args.a;
    report.results() = expansion_json(cf);
    report.table().rows.push_back({std::to_string(args.a), std::to_string(cf.length()),
                                   std::to_string(sum_quotients(cf)),
                                   std::to_string(max_quotient(cf)),
                                   join_quotients(cf.quotients, ';')});
    report.line(std::to_string(args.a) + "/" + std::to_string(args.p) + " = [0; " +
                join_quotients(cf.quotients, ',') + "]");
    std::string convergents;
    for (const auto& [num, den] : cf.convergents) {
        if (!convergents.empty()) convergents += ", ";
        convergents += std::to_string(num) + "/" + std::to_string(den);
    }
    report.line("convergents: " + convergents);
    report.line("sum=" + std::to_string(sum_quotients(cf)) +
                "  max=" + std::to_string(max_quotient(cf)) +
                "  length=" + std::to_string(cf.length()));
    return report.finish(out, kExitPass);
}

}  // namespace glp::cli
