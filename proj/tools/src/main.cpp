#include <cstdio>
#include <exception>
#include <stdexcept>

#include <CLI11.hpp>

#include "commands.hpp"
#include "glp/version.hpp"
#include "support.hpp"

namespace glp::cli {
namespace {

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    auto* j = cmd->add_flag("--json", out.json, "emit one JSON run report");
    cmd->add_flag("--csv", out.csv, "emit flat CSV rows")->excludes(j);
}

int run(int argc, char** argv) {
    CLI::App app{"Continued fractions, lattice point discrepancy, and character sums modulo p"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    OutputOptions out;

    CfArgs cf;
    CLI::App* cmd_cf_app = app.add_subcommand("cf", "continued fraction expansion of a/p");
    cmd_cf_app->add_option("p", cf.p, "prime modulus")->required();
    CLI::Option* cf_a = cmd_cf_app->add_option("a", cf.a, "numerator in [1, p-1]");
    cmd_cf_app->add_flag("--all", cf.all, "expand every a in [1, p-1]")->excludes(cf_a);
    add_output_flags(cmd_cf_app, out);

    DiscrepancyArgs disc;
    CLI::App* cmd_disc_app =
        app.add_subcommand("discrepancy", "exact box-count discrepancy of the point set of a/p");
    cmd_disc_app->add_option("p", disc.p, "prime modulus")->required();
    cmd_disc_app->add_option("a", disc.a, "generator in [1, p-1]")->required();
    cmd_disc_app->add_flag("--bound", disc.bound_only,
                           "report only the quotient-sum bound (any p)");
    cmd_disc_app->add_option("--max-p-exact", disc.max_p_exact,
                             "override the exact-scan size limit");
    add_output_flags(cmd_disc_app, out);

    SubgroupArgs sub;
    CLI::App* cmd_sub_app =
        app.add_subcommand("subgroup", "multiplicative subgroup or coset modulo p");
    cmd_sub_app->add_option("p", sub.p, "prime modulus")->required();
    CLI::Option* sub_order = cmd_sub_app->add_option("--order", sub.order, "subgroup order m");
    cmd_sub_app->add_option("--index", sub.index, "subgroup index d = (p-1)/m")
        ->excludes(sub_order);
    cmd_sub_app->add_option("--coset", sub.coset_rep, "coset representative v (default 1)");
    cmd_sub_app->add_flag("--report", sub.report,
                          "add quotient statistics, search and hypothesis figures");
    cmd_sub_app->add_flag("--with-discrepancy", sub.with_discrepancy,
                          "also compute the exact discrepancy of the search winner");
    cmd_sub_app->add_option("--max-p-exact", sub.max_p_exact, "exact-scan size limit");
    cmd_sub_app->add_option("--max-p-dlog", sub.max_p_dlog, "discrete-log table size limit");
    add_output_flags(cmd_sub_app, out);

    VerifyArgs ver;
    CLI::App* cmd_ver_app = app.add_subcommand(
        "verify", "check an assertion family over every prime in a range");
    cmd_ver_app->add_option("range", ver.range, "prime P or range LO..HI")->required();
    cmd_ver_app
        ->add_option("--theorem", ver.theorem,
                     "one of: 1, 2, corollary, lemma1, burgess, proofstep")
        ->required();
    CLI::Option* ver_order =
        cmd_ver_app->add_option("--order", ver.order, "subgroup order m (skips p when m does not divide p-1)");
    cmd_ver_app->add_option("--index", ver.index, "subgroup index d (default 1 = full group)")
        ->excludes(ver_order);
    cmd_ver_app->add_option("--coset", ver.coset_rep, "coset representative (default 1)");
    cmd_ver_app->add_option("--c", ver.c, "family level for --theorem lemma1 (default 4)");
    cmd_ver_app->add_option("--t", ver.t, "threshold for --theorem proofstep (default 16 ln p)");
    cmd_ver_app->add_option("--max-p-exact", ver.max_p_exact, "exact-scan size limit");
    cmd_ver_app->add_option("--max-p-dlog", ver.max_p_dlog, "discrete-log table size limit");
    add_output_flags(cmd_ver_app, out);

    CharsumArgs cs;
    CLI::App* cmd_cs_app =
        app.add_subcommand("charsum", "interval and bilinear character sums with bounds");
    cmd_cs_app->add_option("p", cs.p, "prime modulus")->required();
    CLI::Option* cs_char = cmd_cs_app->add_option("--char", cs.index, "character index j");
    cmd_cs_app->add_flag("--sweep", cs.sweep, "all non-principal characters")->excludes(cs_char);
    CLI::Option* cs_int =
        cmd_cs_app->add_option("--interval", cs.interval, "sum chi(x) for x = 1..N");
    cmd_cs_app->add_option("--lemma1", cs.lemma1, "bilinear sum over the level-C family")
        ->excludes(cs_int);
    cmd_cs_app->add_option("--max-p-dlog", cs.max_p_dlog, "discrete-log table size limit");
    add_output_flags(cmd_cs_app, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;  // --help / --version exit 0
    }

    try {
        if (cmd_cf_app->parsed()) {
            if (!cf.all && cf_a->count() == 0)
                throw std::invalid_argument("cf: pass a numerator or --all");
            return cmd_cf(cf, out);
        }
        if (cmd_disc_app->parsed()) return cmd_discrepancy(disc, out);
        if (cmd_sub_app->parsed()) return cmd_subgroup(sub, out);
        if (cmd_ver_app->parsed()) return cmd_verify(ver, out);
        if (cmd_cs_app->parsed()) return cmd_charsum(cs, out);
        std::fprintf(stderr, "error: no subcommand\n");
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        // logic/overflow errors signal a violated mathematical invariant
        std::fprintf(stderr, "invariant violated: %s\n", e.what());
        return kExitAssertion;
    }
}

}  // namespace
}  // namespace glp::cli

int main(int argc, char** argv) { return glp::cli::run(argc, argv); }
