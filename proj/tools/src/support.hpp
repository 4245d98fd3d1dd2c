#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "glp/rational.hpp"

namespace glp::cli {

using json = nlohmann::json;

// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;       // all requested checks passed
inline constexpr int kExitAssertion = 1;  // a mathematical assertion failed
inline constexpr int kExitUsage = 2;      // bad input or unsupported size

// Output selection: default is a human-readable text report on stdout.
struct OutputOptions {
    bool json = false;
    bool csv = false;
};

// Flat table emitted in --csv mode; headers are fixed per command and
// documented in the README.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// One run = one report.  `parameters` echoes the effective inputs (including
// the thread count), `results` carries the command-specific payload, and the
// human `lines` are the default stdout rendering.
class RunReport {
  public:
    explicit RunReport(const std::string& command);

    json& parameters() { return parameters_; }
    json& results() { return results_; }
    CsvTable& table() { return table_; }

    void line(const std::string& text) { lines_.push_back(text); }

    // Prints per `out` and returns `exit_code` (wall time is measured from
    // construction to this call).
    int finish(const OutputOptions& out, int exit_code);

  private:
    std::string command_;
    json parameters_;
    json results_;
    CsvTable table_;
    std::vector<std::string> lines_;
    std::chrono::steady_clock::time_point start_;
};

// "num/den" plus a decimal rendering, as a JSON fragment.
json rational_json(const Rational& r);

// Worker count: GLP_THREADS when set (>= 1), else the hardware concurrency.
unsigned thread_count();

// Runs f(i) for i in [0, n) across `threads` workers.  Each call must write
// only to per-index state, so the result is identical for every thread count.
void parallel_for(u64 n, unsigned threads, const std::function<void(u64)>& f);

// Inclusive prime range "lo..hi" or a single prime "p"; throws
// std::invalid_argument on malformed input.  Primes come back ascending.
std::vector<u64> parse_prime_range(const std::string& text);

std::string format_double(double v);

}  // namespace glp::cli
