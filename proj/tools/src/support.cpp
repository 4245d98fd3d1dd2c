#include "support.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "glp/modmath.hpp"
#include "glp/version.hpp"

namespace glp::cli {

RunReport::RunReport(const std::string& command)
    : command_(command), start_(std::chrono::steady_clock::now()) {
    parameters_ = json::object();
    results_ = json::object();
}

int RunReport::finish(const OutputOptions& out, int exit_code) {
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    if (out.json) {
        const json doc = {{"command", command_},
                          {"version", kVersion},
                          {"parameters", parameters_},
                          {"results", results_},
                          {"wall_time_ms", wall_ms}};
        std::printf("%s\n", doc.dump(2).c_str());
    } else if (out.csv) {
        std::string line;
        for (std::size_t i = 0; i < table_.header.size(); ++i) {
            if (i) line += ',';
            line += table_.header[i];
        }
        std::printf("%s\n", line.c_str());
        for (const auto& row : table_.rows) {
            line.clear();
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) line += ',';
                line += row[i];
            }
            std::printf("%s\n", line.c_str());
        }
    } else {
        for (const auto& text : lines_) std::printf("%s\n", text.c_str());
        std::printf("wall time: %.1f ms\n", wall_ms);
    }
    return exit_code;
}

json rational_json(const Rational& r) {
    return {{"fraction", r.str()}, {"value", r.value()}};
}

unsigned thread_count() {
    if (const char* env = std::getenv("GLP_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1 && n <= 1024) return static_cast<unsigned>(n);
        throw std::invalid_argument("GLP_THREADS must be an integer in [1, 1024]");
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_for(u64 n, unsigned threads, const std::function<void(u64)>& f) {
    if (threads <= 1 || n <= 1) {
        for (u64 i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<u64> next{0};
    std::vector<std::thread> pool;
    const unsigned workers = static_cast<unsigned>(std::min<u64>(threads, n));
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (u64 i; (i = next.fetch_add(1)) < n;) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

std::vector<u64> parse_prime_range(const std::string& text) {
    u64 lo = 0, hi = 0;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoull(text);
        } else {
            lo = std::stoull(text.substr(0, dots));
            hi = std::stoull(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad prime range '" + text + "' (use P or LO..HI)");
    }
    if (lo > hi) throw std::invalid_argument("empty prime range '" + text + "'");
    std::vector<u64> primes;
    for (u64 p = lo; p <= hi; ++p) {
        if (is_prime(p)) primes.push_back(p);
    }
    if (primes.empty()) throw std::invalid_argument("no primes in range '" + text + "'");
    return primes;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace glp::cli
