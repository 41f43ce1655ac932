#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idom/enumeration.hpp"
#include "idom/graph.hpp"

namespace idom {

enum class Theorem { subcubic_bound, cubic_bound, ratio_bound };

struct BoundReport {
    std::string canonical_key;
    std::string graph6;
    int n = 0;
    int i_value = 0;
    int gamma_value = 0;
    int weight_total = 0;       // valid only when subcubic
    int theorem15_lhs = 0;      // 14 * i
    int theorem15_rhs = 0;      // w(G), or 5n for the cubic bound
    long long ratio_num = 0;    // i
    long long ratio_den = 0;    // gamma
    bool tight15 = false;
    bool in_scope = false;      // satisfies the theorem hypothesis
    bool violation = false;     // in scope and the inequality fails
    std::vector<std::string> flags;
};

struct VerifyOutcome {
    std::vector<BoundReport> reports;
    bool pass = true;  // no in-scope graph violates the inequality
};

BoundReport analyze_bound(const Graph& g, Theorem theorem);
VerifyOutcome verify_theorem(const std::vector<Graph>& graphs, Theorem theorem, int workers = 1);

enum class SearchObjective { max_ratio, tight_5_14 };

struct SearchSummary {
    SearchObjective objective;
    long long best_num = 0;   // max_ratio: i of the best graph; tight: witness count
    long long best_den = 1;   // max_ratio: gamma of the best graph; tight: 1
    std::vector<std::string> witnesses;  // graph6, deterministic scan order
    std::uint64_t graphs_scanned = 0;
};

SearchSummary search_extremal(const std::vector<Graph>& graphs, SearchObjective objective,
                              int workers = 1);
SearchSummary search_extremal(const EnumSpec& spec, SearchObjective objective, int workers = 1);

std::string report_to_jsonl(const BoundReport& r);

// CSV summary rows: n, count, max_i, max_ratio_num, max_ratio_den, tight_count.
std::string csv_summary(const std::vector<BoundReport>& reports);

// Full command-line interface. Exit codes: 0 success/PASS, 1 verification
// FAIL, 2 usage error, 3 runtime error.
int run_cli(const std::vector<std::string>& args);

}  // namespace idom
