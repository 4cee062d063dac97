#pragma once

// Reproduces the m = 0 multiplicity tables for p = 3 and p = 5 and times the
// digit-recursion engine against the brute-force oracle, one row (all n at
// fixed r) at a time.

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobkern/params.hpp"

namespace frobkern {

enum class Engine { fast, oracle };

std::string to_string(Engine e);
Engine engine_from_string(const std::string& s);

struct TableSpec {
    std::int64_t p = 3;
    std::int64_t r_min = 2;
    std::int64_t r_max = 5;
    std::vector<std::int64_t> n_values;
    std::int64_t m = 0;
    std::set<Engine> engines{Engine::fast, Engine::oracle};

    void validate() const;
    static TableSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

TableSpec table1_spec(); // p = 3, r = 2..5, n = 0,2,..,10
TableSpec table2_spec(); // p = 5, same grid

struct BenchOptions {
    bool force_oracle = false;
    /// Run the oracle kernel with OpenMP. Off by default so timings are
    /// single-threaded and comparable.
    bool parallel_oracle = false;
};

struct BenchReport {
    using Cell = std::pair<std::int64_t, std::int64_t>; // (r, n)

    TableSpec spec;
    std::map<Cell, CountValue> cells;
    std::map<Cell, CountValue> oracle_cells;
    std::map<std::pair<Engine, std::int64_t>, std::chrono::duration<double>> timings;
    std::vector<std::int64_t> oracle_refused_rows;
    std::vector<Cell> mismatches;
    std::string environment;

    bool failed() const { return !mismatches.empty(); }

    std::string to_markdown() const;
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

/// Computes every cell with each requested engine. With both engines, any
/// disagreement is listed in `mismatches`. Oracle rows over the force
/// threshold are skipped and listed unless the oracle is the only engine, in
/// which case OracleRefused propagates.
BenchReport run_table(const TableSpec& spec, const BenchOptions& opts = {});

} // namespace frobkern
