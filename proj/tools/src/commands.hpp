#pragma once

#include <string>

#include "support.hpp"

namespace glp::cli {

struct CfArgs {
    u64 p = 0;
    u64 a = 0;
    bool all = false;
};
int cmd_cf(const CfArgs& args, const OutputOptions& out);

struct DiscrepancyArgs {
    u64 p = 0;
    u64 a = 0;
    bool bound_only = false;
    u64 max_p_exact = 0;  // 0 = library default
};
int cmd_discrepancy(const DiscrepancyArgs& args, const OutputOptions& out);

struct SubgroupArgs {
    u64 p = 0;
    u64 order = 0;  // exactly one of order/index is nonzero
    u64 index = 0;
    u64 coset_rep = 1;
    bool report = false;
    bool with_discrepancy = false;
    u64 max_p_exact = 0;
    u64 max_p_dlog = 0;
};
int cmd_subgroup(const SubgroupArgs& args, const OutputOptions& out);

struct VerifyArgs {
    std::string range;
    std::string theorem;  // 1 | 2 | corollary | lemma1 | burgess | proofstep
    u64 order = 0;        // 0 = use index
    u64 index = 1;        // subgroup index; 1 = full group
    u64 coset_rep = 1;
    double c = 4.0;   // lemma1 family level
    double t = 0.0;   // proofstep threshold; 0 = 16 ln p
    u64 max_p_exact = 0;
    u64 max_p_dlog = 0;
};
int cmd_verify(const VerifyArgs& args, const OutputOptions& out);

struct CharsumArgs {
    u64 p = 0;
    i64 index = -1;  // --char j; -1 = not set
    bool sweep = false;
    u64 interval = 0;   // --interval N
    double lemma1 = 0;  // --lemma1 c
    u64 max_p_dlog = 0;
};
int cmd_charsum(const CharsumArgs& args, const OutputOptions& out);

}  // namespace glp::cli
