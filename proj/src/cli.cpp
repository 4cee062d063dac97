#include "frobkern/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "frobkern/bench.hpp"
#include "frobkern/characters.hpp"
#include "frobkern/counting.hpp"
#include "frobkern/oracle.hpp"
#include "frobkern/reduced_ring.hpp"

namespace frobkern::cli {

OutputFormat format_from_string(const std::string& s)
{
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "markdown") return OutputFormat::markdown;
    if (s == "plain") return OutputFormat::plain;
    throw InvalidInput("unknown output format '" + s + "'");
}

std::string to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::markdown: return "markdown";
    case OutputFormat::plain: return "plain";
    }
    return "plain";
}

void CliConfig::merge_json(const nlohmann::json& j)
{
    if (!j.is_object()) throw InvalidInput("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "output_format") {
            output_format = format_from_string(value.get<std::string>());
        } else if (key == "oracle_force") {
            oracle_force = value.get<bool>();
        } else if (key == "memo_shared") {
            memo_shared = value.get<bool>();
        } else {
            throw InvalidInput("unknown config key '" + key + "'");
        }
    }
}

namespace {

using Row = std::vector<std::pair<std::string, std::string>>;

// Emits one record (named fields) in the chosen format. `scalar` is printed
// alone in plain mode.
void emit_record(std::ostream& out, OutputFormat fmt, const Row& row, const std::string& scalar)
{
    switch (fmt) {
    case OutputFormat::plain:
        out << scalar << '\n';
        break;
    case OutputFormat::json: {
        nlohmann::ordered_json j;
        for (const auto& [k, v] : row) {
            if (k == "value" || k == "oracle_value") {
                j[k] = v;
            } else {
                j[k] = std::stoll(v);
            }
        }
        out << j.dump() << '\n';
        break;
    }
    case OutputFormat::csv:
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].first;
        out << '\n';
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].second;
        out << '\n';
        break;
    case OutputFormat::markdown:
        out << '|';
        for (const auto& [k, v] : row) out << ' ' << k << " |";
        out << "\n|";
        for (std::size_t i = 0; i < row.size(); ++i) out << "---|";
        out << "\n|";
        for (const auto& [k, v] : row) out << ' ' << v << " |";
        out << '\n';
        break;
    }
}

void emit_character(std::ostream& out, OutputFormat fmt, const CharacterPoly& ch)
{
    switch (fmt) {
    case OutputFormat::json:
        out << ch.dump() << '\n';
        break;
    case OutputFormat::plain:
        for (const auto& [w, c] : ch.terms()) out << w << ' ' << c << '\n';
        break;
    case OutputFormat::csv:
        out << "weight,count\n";
        for (const auto& [w, c] : ch.terms()) out << w << ',' << c << '\n';
        break;
    case OutputFormat::markdown:
        out << "| weight (omega) | count |\n|---|---|\n";
        for (const auto& [w, c] : ch.terms()) out << "| " << w << " | " << c << " |\n";
        if (ch.truncation()) out << "\ntruncated at n = " << *ch.truncation() << '\n';
        break;
    }
}

void emit_graded(std::ostream& out, OutputFormat fmt, const GradedCharacter& g)
{
    switch (fmt) {
    case OutputFormat::json:
        out << g.to_json().dump() << '\n';
        break;
    case OutputFormat::plain:
        for (std::int64_t d = 0; d <= g.max_degree(); ++d) {
            for (const auto& [w, c] : g.at(d).terms()) out << d << ' ' << w << ' ' << c << '\n';
        }
        break;
    case OutputFormat::csv:
        out << "degree,weight,count\n";
        for (std::int64_t d = 0; d <= g.max_degree(); ++d) {
            for (const auto& [w, c] : g.at(d).terms()) out << d << ',' << w << ',' << c << '\n';
        }
        break;
    case OutputFormat::markdown:
        out << "| degree | weight (omega) | count |\n|---|---|---|\n";
        for (std::int64_t d = 0; d <= g.max_degree(); ++d) {
            for (const auto& [w, c] : g.at(d).terms()) out << "| " << d << " | " << w << " | " << c << " |\n";
        }
        break;
    }
}

void emit_series(std::ostream& out, OutputFormat fmt, std::int64_t p, std::int64_t r,
                 const std::vector<CountValue>& coeffs)
{
    switch (fmt) {
    case OutputFormat::json: {
        nlohmann::ordered_json j;
        j["p"] = p;
        j["r"] = r;
        j["dmax"] = static_cast<std::int64_t>(coeffs.size()) - 1;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : coeffs) arr.push_back(c.str());
        j["coeffs"] = arr;
        out << j.dump() << '\n';
        break;
    }
    case OutputFormat::plain:
        for (const auto& c : coeffs) out << c << '\n';
        break;
    case OutputFormat::csv:
        out << "degree,value\n";
        for (std::size_t d = 0; d < coeffs.size(); ++d) out << d << ',' << coeffs[d] << '\n';
        break;
    case OutputFormat::markdown:
        out << "| degree | value |\n|---|---|\n";
        for (std::size_t d = 0; d < coeffs.size(); ++d) out << "| " << d << " | " << coeffs[d] << " |\n";
        break;
    }
}

void emit_basis(std::ostream& out, OutputFormat fmt, const ReducedBasis& b)
{
    auto join = [](const Exponents& e, char sep) {
        std::ostringstream os;
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? std::string(1, sep) : "") << e[i];
        return os.str();
    };
    switch (fmt) {
    case OutputFormat::json:
        out << b.to_json().dump() << '\n';
        break;
    case OutputFormat::plain:
        for (const auto& e : b.elements) out << (e.empty() ? "()" : join(e, ' ')) << '\n';
        break;
    case OutputFormat::csv:
        for (std::int64_t i = 1; i < b.r; ++i) out << (i > 1 ? "," : "") << 'a' << i;
        out << '\n';
        for (const auto& e : b.elements) out << join(e, ',') << '\n';
        break;
    case OutputFormat::markdown:
        out << "| exponents |\n|---|\n";
        for (const auto& e : b.elements) out << "| (" << join(e, ',') << ") |\n";
        break;
    }
}

void emit_report(std::ostream& out, OutputFormat fmt, const BenchReport& report)
{
    switch (fmt) {
    case OutputFormat::json: out << report.to_json().dump(2) << '\n'; break;
    case OutputFormat::csv: out << report.to_csv(); break;
    case OutputFormat::plain:
    case OutputFormat::markdown: out << report.to_markdown(); break;
    }
}

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
    }
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cohomology multiplicities for Frobenius kernels of SL2", "frobkern"};
    app.require_subcommand(1);

    std::string output_flag;
    std::string config_path;
    bool force_flag = false;
    bool shared_flag = false;
    auto* output_opt = app.add_option("--output,-o", output_flag, "json, csv, markdown or plain")
                           ->check(CLI::IsMember({"json", "csv", "markdown", "plain"}));
    app.add_option("--config", config_path, "JSON config file (default: $FROBKERN_CONFIG)");
    auto* force_opt = app.add_flag("--force-oracle", force_flag, "run the oracle past its size limit");
    auto* shared_opt = app.add_flag("--shared-memo", shared_flag, "share the memo cache across queries");
    app.fallthrough();

    std::int64_t p = 0, r = 0, m = 0, n = 0, d = 0, n_max = 0, d_max = 0;
    bool p2_flag = false, oracle_flag = false;
    std::string table_name, spec_path, engines_csv = "fast,oracle";
    CliConfig config;
    std::function<void()> action;

    auto positional = [](CLI::App* sub, const char* name, std::int64_t& v, const char* help) {
        sub->add_option(name, v, help)->required()->check(CLI::NonNegativeNumber);
    };
    auto memo = [&]() -> MemoCache* { return config.memo_shared ? &MemoCache::shared() : nullptr; };
    auto fmt = [&] { return config.output_format; };

    auto* count = app.add_subcommand("count", "N_r(p,m,n)");
    positional(count, "p", p, "prime");
    positional(count, "r", r, "kernel index");
    positional(count, "m", m, "highest weight (units of omega)");
    positional(count, "n", n, "output weight (units of omega)");
    count->add_flag("--p2", p2_flag, "use the p = 2 equation (requires p = 2)");
    count->add_flag("--oracle", oracle_flag, "also run the brute-force oracle and compare");
    count->callback([&] {
        action = [&] {
            const CountParams params{p, r, m, n};
            if (p2_flag && p != 2) throw InvalidInput("--p2 requires p = 2");
            const auto value = multiplicity(params, memo());
            Row row{{"p", std::to_string(p)}, {"r", std::to_string(r)}, {"m", std::to_string(m)},
                    {"n", std::to_string(n)}, {"value", value.str()}};
            if (oracle_flag) {
                const auto check = brute_count(params, {config.oracle_force, true});
                if (check != value) {
                    err << "engine mismatch: fast=" << value << " oracle=" << check << '\n';
                    throw std::runtime_error("fast engine and oracle disagree");
                }
                row.emplace_back("oracle_value", check.str());
            }
            emit_record(out, fmt(), row, value.str());
        };
    });

    auto* quantum = app.add_subcommand("quantum", "N'_r(p,n)");
    positional(quantum, "p", p, "odd prime");
    positional(quantum, "r", r, "kernel index");
    positional(quantum, "n", n, "weight (units of alpha)");
    quantum->callback([&] {
        action = [&] {
            const auto value = n_quantum(p, r, n, memo());
            emit_record(out, fmt(),
                        {{"p", std::to_string(p)}, {"r", std::to_string(r)}, {"n", std::to_string(n)},
                         {"value", value.str()}},
                        value.str());
        };
    });

    auto* graded = app.add_subcommand("graded", "solutions of degree d");
    positional(graded, "p", p, "prime");
    positional(graded, "r", r, "kernel index");
    positional(graded, "m", m, "highest weight");
    positional(graded, "n", n, "output weight");
    positional(graded, "d", d, "cohomological degree");
    graded->callback([&] {
        action = [&] {
            const auto value = graded_count({p, r, m, n}, d);
            emit_record(out, fmt(),
                        {{"p", std::to_string(p)}, {"r", std::to_string(r)}, {"m", std::to_string(m)},
                         {"n", std::to_string(n)}, {"d", std::to_string(d)}, {"value", value.str()}},
                        value.str());
        };
    });

    auto character_cmd = [&](const char* name, const char* help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        positional(sub, "p", p, "prime");
        positional(sub, "r", r, "kernel index");
        positional(sub, "m", m, "highest weight");
        sub->add_option("--nmax", n_max, "largest n summed")->required()->check(CLI::NonNegativeNumber);
        sub->callback([&, fn] { action = [&, fn] { emit_character(out, fmt(), fn()); }; });
    };
    character_cmd("char-b", "truncated character of H^*(B_r, m omega)",
                  [&] { return char_Br(p, r, m, n_max, memo()); });
    character_cmd("char-g", "truncated character of H^*(G_r, H^0(m omega))",
                  [&] { return char_Gr(p, r, m, n_max, memo()); });

    auto quantum_char_cmd = [&](const char* name, const char* help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        positional(sub, "p", p, "odd prime");
        positional(sub, "r", r, "kernel index");
        sub->add_option("--nmax", n_max, "largest n (units of alpha)")->required()->check(CLI::NonNegativeNumber);
        sub->callback([&, fn] { action = [&, fn] { emit_character(out, fmt(), fn()); }; });
    };
    quantum_char_cmd("char-qb", "truncated character of the quantum B_r cohomology",
                     [&] { return char_quantum_Br(p, r, n_max, memo()); });
    quantum_char_cmd("char-qg", "truncated character of the quantum G_r cohomology",
                     [&] { return char_quantum_Gr(p, r, n_max, memo()); });

    auto* graded_char = app.add_subcommand("graded-char", "degree-wise character of H^*(B_r, m omega)");
    positional(graded_char, "p", p, "prime");
    positional(graded_char, "r", r, "kernel index");
    positional(graded_char, "m", m, "highest weight");
    graded_char->add_option("--dmax", d_max, "largest degree")->required()->check(CLI::NonNegativeNumber);
    graded_char->callback([&] { action = [&] { emit_graded(out, fmt(), graded_char_Br(p, r, m, d_max)); }; });

    auto* poincare = app.add_subcommand("poincare-u", "dim H^d(U_r, k)");
    positional(poincare, "p", p, "prime");
    positional(poincare, "r", r, "kernel index");
    poincare->add_option("--dmax", d_max, "largest degree")->required()->check(CLI::NonNegativeNumber);
    poincare->callback([&] { action = [&] { emit_series(out, fmt(), p, r, poincare_Ur(p, r, d_max)); }; });

    auto* basis_cmd = app.add_subcommand("basis", "free basis of the reduced B_r cohomology ring");
    positional(basis_cmd, "p", p, "prime");
    positional(basis_cmd, "r", r, "kernel index");
    basis_cmd->callback([&] { action = [&] { emit_basis(out, fmt(), basis(p, r)); }; });

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the reduced B_r cohomology ring");
    positional(hilbert, "p", p, "prime");
    positional(hilbert, "r", r, "kernel index");
    hilbert->add_option("--dmax", d_max, "largest degree")->required()->check(CLI::NonNegativeNumber);
    hilbert->callback([&] { action = [&] { emit_series(out, fmt(), p, r, hilbert_coeffs(p, r, d_max)); }; });

    auto* bench = app.add_subcommand("bench", "reproduce the m = 0 tables and time both engines");
    bench->add_option("table", table_name, "table1, table2 or custom")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "custom"}));
    bench->add_option("spec", spec_path, "JSON table spec (custom only)");
    bench->add_option("--engines", engines_csv, "comma-separated subset of fast,oracle");
    bench->callback([&] {
        action = [&] {
            TableSpec spec;
            if (table_name == "custom") {
                if (spec_path.empty()) throw InvalidInput("bench custom needs a spec file");
                spec = TableSpec::from_json(read_json_file(spec_path));
            } else {
                if (!spec_path.empty()) throw InvalidInput("spec file only applies to bench custom");
                spec = table_name == "table1" ? table1_spec() : table2_spec();
                spec.engines.clear();
                std::stringstream ss(engines_csv);
                for (std::string e; std::getline(ss, e, ',');) spec.engines.insert(engine_from_string(e));
                spec.validate();
            }
            const auto report = run_table(spec, {config.oracle_force, false});
            emit_report(out, fmt() == OutputFormat::plain ? OutputFormat::markdown : fmt(), report);
            if (report.failed()) throw std::runtime_error("engines disagree on some cells");
        };
    });

    std::vector<const char*> argv{"frobkern"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (config_path.empty()) {
            if (const char* env = std::getenv(kConfigEnvVar); env && *env) config_path = env;
        }
        if (!config_path.empty()) {
            config.config_file = config_path;
            config.merge_json(read_json_file(config_path));
        }
        if (output_opt->count() > 0) config.output_format = format_from_string(output_flag);
        if (force_opt->count() > 0) config.oracle_force = force_flag;
        if (shared_opt->count() > 0) config.memo_shared = shared_flag;

        action();
        return kOk;
    } catch (const OracleRefused& e) {
        err << "refused: " << e.what() << '\n';
        return kRefused;
    } catch (const TooLarge& e) {
        err << "refused: " << e.what() << '\n';
        return kRefused;
    } catch (const InvalidInput& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kUsageError;
    } catch (const nlohmann::json::exception& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInternalError;
    }
}

} // namespace frobkern::cli
