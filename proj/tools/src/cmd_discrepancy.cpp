#include "commands.hpp"
#include "glp/lattice.hpp"
#include "glp/modmath.hpp"

namespace glp::cli {

int cmd_discrepancy(const DiscrepancyArgs& args, const OutputOptions& out) {
    RunReport report("discrepancy");
    if (!is_prime(args.p)) throw std::invalid_argument("discrepancy: p must be prime");
    if (args.a == 0 || args.a >= args.p)
        throw std::invalid_argument("discrepancy: need 1 <= a <= p-1");
    const u64 limit = args.max_p_exact ? args.max_p_exact : kDefaultExactLimit;
    report.parameters() = {{"p", args.p},
                           {"a", args.a},
                           {"mode", args.bound_only ? "bound" : "exact"},
                           {"max_p_exact", limit},
                           {"threads", thread_count()}};

    const ContinuedFraction cf = continued_fraction(args.a, args.p);
    const u64 qsum = sum_quotients(cf);
    const double bound = discrepancy_bound(cf);
    report.table().header = {"p", "a", "d_fraction", "d_value", "quotient_sum", "cf_bound"};

    if (args.bound_only) {
        report.results() = {{"quotient_sum", qsum},
                            {"quotient_max", max_quotient(cf)},
                            {"cf_bound", bound}};
        report.table().rows.push_back({std::to_string(args.p), std::to_string(args.a), "", "",
                                       std::to_string(qsum), format_double(bound)});
        report.line("D_" + std::to_string(args.p) + "(" + std::to_string(args.a) +
                    ") <= " + format_double(bound) + "  (3 * (quotient sum " +
                    std::to_string(qsum) + " + 1))");
        return report.finish(out, kExitPass);
    }

    if (args.p > limit)
        throw std::invalid_argument("discrepancy: p exceeds the exact-scan limit " +
                                    std::to_string(limit) +
                                    "; rerun with --bound or raise --max-p-exact");

    const DiscrepancyReport rep = discrepancy_exact(make_point_set(args.p, args.a), limit);
    report.results() = {
        {"d", rational_json(rep.d_exact)},
        {"argmax",
         {{"gamma1", rep.argmax.gamma1.str()},
          {"gamma2", rep.argmax.gamma2.str()},
          {"mode", rep.argmax.mode == BoxMode::closed ? "closed" : "open"}}},
        {"quotient_sum", rep.quotient_sum},
        {"cf_bound", rep.cf_bound}};
    report.table().rows.push_back({std::to_string(args.p), std::to_string(args.a),
                                   rep.d_exact.str(), format_double(rep.d_exact.value()),
                                   std::to_string(rep.quotient_sum),
                                   format_double(rep.cf_bound)});
    report.line("D_" + std::to_string(args.p) + "(" + std::to_string(args.a) + ") = " +
                rep.d_exact.str() + " = " + format_double(rep.d_exact.value()));
    report.line("argmax box: gamma1=" + rep.argmax.gamma1.str() + " gamma2=" +
                rep.argmax.gamma2.str() +
                (rep.argmax.mode == BoxMode::closed ? " (closed)" : " (open)"));
    report.line("quotient-sum bound: " + format_double(rep.cf_bound) + "  (sum " +
                std::to_string(rep.quotient_sum) + ")");
    const int code = rep.d_exact.value() <= rep.cf_bound ? kExitPass : kExitAssertion;
    if (code != kExitPass) report.line("ASSERTION FAILED: exact value exceeds the bound");
    return report.finish(out, code);
}

}  // namespace glp::cli
