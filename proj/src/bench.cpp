#include "frobkern/bench.hpp"

#include <omp.h>
#include <sstream>
#include <thread>

#include "frobkern/counting.hpp"
#include "frobkern/oracle.hpp"

namespace frobkern {

namespace {

constexpr const char* kGranularityNote =
    "timings: one row = all listed n at fixed r and m (n-sweep, not an m-sweep)";

std::string describe_environment()
{
    std::ostringstream os;
    os << "hardware_threads=" << std::thread::hardware_concurrency()
       << " omp_max_threads=" << omp_get_max_threads();
#if defined(__VERSION__)
    os << " compiler=\"" << __VERSION__ << "\"";
#endif
    return os.str();
}

std::string format_seconds(std::chrono::duration<double> d)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(4);
    os << d.count();
    return os.str();
}

} // namespace

std::string to_string(Engine e) { return e == Engine::fast ? "fast" : "oracle"; }

Engine engine_from_string(const std::string& s)
{
    if (s == "fast") return Engine::fast;
    if (s == "oracle") return Engine::oracle;
    throw InvalidInput("unknown engine '" + s + "' (expected fast or oracle)");
}

void TableSpec::validate() const
{
    if (r_min > r_max) throw InvalidInput("table spec: empty r range");
    if (n_values.empty()) throw InvalidInput("table spec: n_values is empty");
    if (engines.empty()) throw InvalidInput("table spec: no engines selected");
    for (auto n : n_values) CountParams{p, r_min, m, n}.validate();
}

TableSpec TableSpec::from_json(const nlohmann::json& j)
{
    TableSpec spec;
    spec.p = j.at("p").get<std::int64_t>();
    spec.r_min = j.at("r_min").get<std::int64_t>();
    spec.r_max = j.at("r_max").get<std::int64_t>();
    spec.n_values = j.at("n_values").get<std::vector<std::int64_t>>();
    spec.m = j.value("m", std::int64_t{0});
    if (j.contains("engines")) {
        spec.engines.clear();
        for (const auto& e : j.at("engines")) spec.engines.insert(engine_from_string(e.get<std::string>()));
    }
    spec.validate();
    return spec;
}

nlohmann::json TableSpec::to_json() const
{
    nlohmann::json engines_json = nlohmann::json::array();
    for (auto e : engines) engines_json.push_back(to_string(e));
    return {{"p", p}, {"r_min", r_min}, {"r_max", r_max}, {"n_values", n_values}, {"m", m},
            {"engines", engines_json}};
}

TableSpec table1_spec()
{
    TableSpec spec;
    spec.p = 3;
    spec.n_values = {0, 2, 4, 6, 8, 10};
    return spec;
}

TableSpec table2_spec()
{
    TableSpec spec = table1_spec();
    spec.p = 5;
    return spec;
}

BenchReport run_table(const TableSpec& spec, const BenchOptions& opts)
{
    spec.validate();
    BenchReport report;
    report.spec = spec;
    report.environment = describe_environment();
    const bool fast = spec.engines.count(Engine::fast) > 0;
    const bool oracle = spec.engines.count(Engine::oracle) > 0;

    for (std::int64_t r = spec.r_min; r <= spec.r_max; ++r) {
        if (fast) {
            MemoCache cache;
            const auto start = std::chrono::steady_clock::now();
            for (auto n : spec.n_values) report.cells[{r, n}] = multiplicity({spec.p, r, spec.m, n}, &cache);
            report.timings[{Engine::fast, r}] = std::chrono::steady_clock::now() - start;
        }
        if (oracle) {
            const OracleOptions oopts{opts.force_oracle, opts.parallel_oracle};
            bool refused = false;
            if (!opts.force_oracle) {
                for (auto n : spec.n_values) {
                    if (classical_box_size({spec.p, r, spec.m, n}) > kOracleForceThreshold) refused = true;
                }
            }
            if (refused) {
                if (!fast) {
                    throw OracleRefused("oracle row r=" + std::to_string(r) +
                                        " exceeds the force threshold");
                }
                report.oracle_refused_rows.push_back(r);
                continue;
            }
            const auto start = std::chrono::steady_clock::now();
            for (auto n : spec.n_values) {
                report.oracle_cells[{r, n}] = brute_count({spec.p, r, spec.m, n}, oopts);
            }
            report.timings[{Engine::oracle, r}] = std::chrono::steady_clock::now() - start;
            if (!fast) {
                for (auto n : spec.n_values) report.cells[{r, n}] = report.oracle_cells[{r, n}];
            }
        }
    }
    if (fast && oracle) {
        for (const auto& [cell, value] : report.oracle_cells) {
            if (report.cells.at(cell) != value) report.mismatches.push_back(cell);
        }
    }
    return report;
}

std::string BenchReport::to_markdown() const
{
    std::ostringstream os;
    os << "p = " << spec.p << ", m = " << spec.m << (failed() ? "  **FAILED**" : "") << "\n\n";
    os << "| r\\n |";
    for (auto n : spec.n_values) os << ' ' << n << " |";
    for (auto e : spec.engines) os << ' ' << to_string(e) << " (s) |";
    os << "\n|---|";
    for (std::size_t i = 0; i < spec.n_values.size() + spec.engines.size(); ++i) os << "---|";
    os << '\n';
    for (std::int64_t r = spec.r_min; r <= spec.r_max; ++r) {
        os << "| " << r << " |";
        for (auto n : spec.n_values) {
            auto it = cells.find({r, n});
            os << ' ' << (it == cells.end() ? std::string("-") : it->second.str()) << " |";
        }
        for (auto e : spec.engines) {
            auto it = timings.find({e, r});
            os << ' ' << (it == timings.end() ? std::string("refused") : format_seconds(it->second)) << " |";
        }
        os << '\n';
    }
    os << '\n' << kGranularityNote << '\n' << "environment: " << environment << '\n';
    if (failed()) {
        os << "mismatches:";
        for (const auto& [r, n] : mismatches) os << " (r=" << r << ", n=" << n << ")";
        os << '\n';
    }
    return os.str();
}

std::string BenchReport::to_csv() const
{
    std::ostringstream os;
    os << "p,m,r,n,value,oracle_value\n";
    for (const auto& [cell, value] : cells) {
        auto it = oracle_cells.find(cell);
        os << spec.p << ',' << spec.m << ',' << cell.first << ',' << cell.second << ',' << value.str()
           << ',' << (it == oracle_cells.end() ? std::string() : it->second.str()) << '\n';
    }
    return os.str();
}

nlohmann::json BenchReport::to_json() const
{
    nlohmann::json j;
    j["spec"] = spec.to_json();
    j["status"] = failed() ? "FAILED" : "OK";
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [cell, value] : cells) {
        nlohmann::json row{{"r", cell.first}, {"n", cell.second}, {"value", value.str()}};
        if (auto it = oracle_cells.find(cell); it != oracle_cells.end()) row["oracle_value"] = it->second.str();
        rows.push_back(row);
    }
    j["cells"] = rows;
    nlohmann::json t = nlohmann::json::array();
    for (const auto& [key, d] : timings) {
        t.push_back({{"engine", to_string(key.first)}, {"r", key.second}, {"seconds", d.count()}});
    }
    j["timings"] = t;
    j["oracle_refused_rows"] = oracle_refused_rows;
    nlohmann::json mm = nlohmann::json::array();
    for (const auto& [r, n] : mismatches) mm.push_back({{"r", r}, {"n", n}});
    j["mismatches"] = mm;
    j["environment"] = environment;
    j["note"] = kGranularityNote;
    return j;
}

} // namespace frobkern
