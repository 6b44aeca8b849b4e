#include "cli.hpp"

#include <gpramsey/certificate.hpp>
#include <gpramsey/error.hpp>
#include <gpramsey/oracle.hpp>
#include <gpramsey/search.hpp>
#include <gpramsey/spectral.hpp>
#include <gpramsey/table.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace gpramsey::cli {

namespace {

    using nlohmann::ordered_json;

    auto env_u64(const char * name, std::uint64_t fallback) -> std::uint64_t
    {
        const char * v = std::getenv(name);
        if (! v || ! *v)
            return fallback;
        char * end = nullptr;
        auto parsed = std::strtoull(v, &end, 10);
        return end && *end == '\0' ? parsed : fallback;
    }

    struct FamilyArgs {
        std::string kind = "semi";
        int param = 1;

        auto add(CLI::App & app) -> void
        {
            app.add_option("--family", kind, "semi or quasi")->check(CLI::IsMember({"semi", "quasi"}));
            app.add_option("--param", param, "scope m (semi) or diameter n (quasi)");
        }

        auto family() const -> Family { return Family::parse(kind, param); }
    };

    struct Options {
        std::string format;
        bool json_errors = false;

        // bound
        int m = 1, r = 2, n = 1;
        std::optional<int> k;
        double tol = default_eigen_tolerance;

        // table
        int r_max = 4, n_max = 6, workers = 1;

        // oracle / search
        FamilyArgs fam;
        int points = 0, kk = 3, a = 1, d = 1;
        std::uint64_t max_colorings = env_u64("GPRAMSEY_MAX_COLORINGS", OracleBudget{}.max_colorings);
        int max_points = OracleBudget{}.max_points;
        std::uint64_t max_nodes = env_u64("GPRAMSEY_MAX_NODES", SearchBudget{}.max_nodes);
        std::uint64_t max_moves = env_u64("GPRAMSEY_MAX_MOVES", 1'000'000);
        int max_length = SearchBudget{}.max_length;
        std::uint64_t seed = 0;
        int restarts = 1;
        std::string out_file;

        // check
        std::string witness_path;
    };

    auto emit(std::ostream & out, const ordered_json & j, const std::string & format) -> void
    {
        if (format == "text") {
            for (const auto & [key, value] : j.items())
                out << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
        else if (format == "csv") {
            bool first = true;
            for (const auto & [key, value] : j.items()) {
                out << (first ? "" : ",") << key;
                first = false;
            }
            out << '\n';
            first = true;
            for (const auto & [key, value] : j.items()) {
                out << (first ? "" : ",") << (value.is_string() ? value.get<std::string>() : value.dump());
                first = false;
            }
            out << '\n';
        }
        else
            out << j.dump(2) << '\n';
    }

    auto oracle_budget(const Options & o) -> OracleBudget
    {
        return OracleBudget{o.max_points, o.max_colorings};
    }

    auto cmd_bound_semi(const Options & o, std::ostream & out) -> int
    {
        auto bound = semi_bound(o.m);
        ordered_json j{{"family", "semi"}, {"m", o.m}, {"alpha", bound.base}};
        if (o.k) {
            j["k"] = *o.k;
            j["threshold"] = to_string(bound.threshold(*o.k));
        }
        if (o.format == "text") {
            out << std::fixed << std::setprecision(6) << "alpha = " << bound.base << '\n';
            if (o.k)
                out << "floor(alpha^" << *o.k << ") = " << to_string(bound.threshold(*o.k)) << '\n';
            return success;
        }
        emit(out, j, o.format);
        return success;
    }

    auto cmd_bound_quasi(const Options & o, std::ostream & out) -> int
    {
        auto bound = beta_quasi(o.r, o.n, o.tol);
        ordered_json j{{"family", "quasi"}, {"r", o.r}, {"n", o.n}, {"beta", bound.base},
            {"lambda_max", *bound.lambda_max}, {"residual", bound.residual}, {"useful", bound.useful()}};
        if (o.k) {
            j["k"] = *o.k;
            j["threshold"] = to_string(bound.threshold(*o.k));
        }
        if (o.format == "text") {
            out << std::fixed << std::setprecision(6) << "beta = " << bound.base << '\n'
                << "lambda_max = " << *bound.lambda_max << '\n'
                << std::scientific << std::setprecision(3) << "residual = " << bound.residual << '\n';
            if (o.k)
                out << "floor(beta^" << *o.k << ") = " << to_string(bound.threshold(*o.k)) << '\n';
            return success;
        }
        emit(out, j, o.format);
        return success;
    }

    auto cmd_table(const Options & o, std::ostream & out) -> int
    {
        auto cells = beta_table(o.r_max, o.n_max, o.workers);
        if (o.format == "json")
            out << table_to_json(cells).dump(2) << '\n';
        else if (o.format == "text")
            write_table_text(out, cells);
        else
            write_table_csv(out, cells);
        return success;
    }

    auto cmd_oracle(const std::string & mode, const Options & o, std::ostream & out) -> int
    {
        auto family = o.fam.family();
        if (mode == "count" || mode == "verify") {
            auto report = mode == "count"
                ? count_mono_colorings(o.r, o.points, o.kk, family, oracle_budget(o), o.workers)
                : verify_counting_inequality(o.r, o.points, o.kk, family, oracle_budget(o), o.workers);
            emit(out, to_json(report), o.format);
            return mode == "verify" && ! report.bound_satisfied ? check_failed : success;
        }
        if (mode == "partition") {
            auto report = primary_partition_check(o.r, o.points, o.kk, family, o.a, o.d, oracle_budget(o));
            ordered_json j{{"holds", report.holds}, {"with_monochromatic", report.with_monochromatic},
                {"primary_sum", report.primary_sum}};
            auto rows = ordered_json::array();
            for (const auto & pc : report.by_progression)
                rows.push_back(ordered_json{{"terms", std::vector<int>(pc.progression.terms().begin(),
                                                          pc.progression.terms().end())},
                    {"colorings", pc.colorings}});
            j["by_progression"] = rows;
            emit(out, j, o.format == "csv" ? "json" : o.format);
            return report.holds ? success : check_failed;
        }
        auto report = forced_count_check(o.r, o.points, o.kk, family, o.a, o.d, oracle_budget(o));
        ordered_json j{{"holds", report.holds}};
        auto rows = ordered_json::array();
        for (const auto & e : report.entries)
            rows.push_back(ordered_json{
                {"terms", std::vector<int>(e.progression.terms().begin(), e.progression.terms().end())},
                {"weight", e.weight}, {"colorings", e.colorings}, {"bound", to_string(e.bound)}});
        j["entries"] = rows;
        emit(out, j, o.format == "csv" ? "json" : o.format);
        return report.holds ? success : check_failed;
    }

    auto cmd_search_exact(const Options & o, std::ostream & out) -> int
    {
        SearchBudget budget;
        budget.max_nodes = o.max_nodes;
        budget.max_length = o.max_length;
        auto family = o.fam.family();
        auto cert = [&] {
            try {
                return exact_threshold(o.r, o.kk, family, budget, o.workers);
            }
            catch (const BudgetExceeded & e) {
                emit(out,
                    ordered_json{{"family", family.name()}, {"param", family.param()}, {"r", o.r}, {"k", o.kk},
                        {"longest_valid", e.best_lower_bound()}, {"value_at_least", e.best_lower_bound() + 1},
                        {"exhaustive", false}},
                    o.format);
                throw;
            }
        }();
        if (! check_witness(cert.witness, cert.k, cert.family))
            throw Error("internal error: certificate witness failed re-verification");
        if (! o.out_file.empty())
            write_witness(o.out_file, WitnessFile{cert.family, cert.k, cert.witness});
        emit(out, to_json(cert), o.format);
        return success;
    }

    auto cmd_search_witness(const Options & o, std::ostream & out) -> int
    {
        SearchBudget budget;
        budget.max_nodes = o.max_moves;
        budget.seed = o.seed;
        budget.restarts = o.restarts;
        auto family = o.fam.family();
        auto result = random_witness_search(o.r, o.points, o.kk, family, budget, o.workers);
        ordered_json j{{"family", family.name()}, {"param", family.param()}, {"r", o.r}, {"k", o.kk},
            {"n_points", o.points}, {"found", result.witness.has_value()}, {"moves", result.moves}};
        if (result.witness) {
            j["stream"] = result.stream;
            j["witness"] = result.witness->to_digits();
            j["verified"] = check_witness(*result.witness, o.kk, family);
            if (! o.out_file.empty())
                write_witness(o.out_file, WitnessFile{family, o.kk, *result.witness});
        }
        emit(out, j, o.format);
        return result.witness ? success : budget_exceeded;
    }

    auto cmd_check(const Options & o, std::ostream & out) -> int
    {
        auto w = read_witness(o.witness_path);
        auto mono = find_monochromatic(w.coloring, w.k, w.family);
        ordered_json j{{"file", o.witness_path}, {"family", w.family.name()}, {"param", w.family.param()},
            {"r", w.coloring.colors()}, {"k", w.k}, {"n_points", w.coloring.n_points()}, {"valid", ! mono}};
        if (mono) {
            j["monochromatic"] = std::vector<int>(mono->terms().begin(), mono->terms().end());
            j["low_difference"] = mono->low_difference();
        }
        emit(out, j, o.format);
        return mono ? check_failed : success;
    }

    auto report_error(std::ostream & err, bool json, const std::string & kind, const std::string & message) -> void
    {
        if (json)
            err << ordered_json{{"error", kind}, {"message", message}}.dump() << '\n';
        else
            err << "error: " << message << '\n';
    }

} // namespace

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Ramsey functions for semi- and quasi-progressions: bounds, oracles, exact search"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json", "text"}));
    app.add_flag("--json-errors", o.json_errors, "report errors as JSON on stderr");

    auto * bound = app.add_subcommand("bound", "analytic lower-bound bases");
    bound->require_subcommand(1);
    auto * bound_semi = bound->add_subcommand("semi", "alpha(m) and floor(alpha^k)");
    bound_semi->add_option("--m", o.m, "scope")->required();
    bound_semi->add_option("--k", o.k, "number of terms");
    auto * bound_quasi = bound->add_subcommand("quasi", "beta_{r,n} from the transfer matrix");
    bound_quasi->add_option("--r", o.r, "number of colors")->required();
    bound_quasi->add_option("--n", o.n, "diameter")->required();
    bound_quasi->add_option("--k", o.k, "number of terms");
    bound_quasi->add_option("--tol", o.tol, "eigen-residual tolerance");

    auto * table = app.add_subcommand("table", "beta_{r,n} table");
    table->add_option("--r-max", o.r_max, "largest number of colors");
    table->add_option("--n-max", o.n_max, "largest diameter");
    table->add_option("--workers", o.workers, "threads");

    auto add_instance = [&](CLI::App * cmd, bool with_pair) {
        cmd->add_option("--r", o.r, "number of colors");
        cmd->add_option("--points", o.points, "N, size of the ground set [1, N]")->required();
        cmd->add_option("--k", o.kk, "number of terms");
        o.fam.add(*cmd);
        cmd->add_option("--max-colorings", o.max_colorings, "enumeration budget");
        cmd->add_option("--max-points", o.max_points, "largest N the oracle accepts");
        if (with_pair) {
            cmd->add_option("--a", o.a, "first term");
            cmd->add_option("--d", o.d, "low-difference");
        }
        else
            cmd->add_option("--workers", o.workers, "threads");
    };
    auto * oracle = app.add_subcommand("oracle", "exhaustive enumeration over colorings");
    oracle->require_subcommand(1);
    auto * oracle_count = oracle->add_subcommand("count", "count colorings with a monochromatic progression");
    auto * oracle_verify = oracle->add_subcommand("verify", "compare the count with the counting bound");
    auto * oracle_partition = oracle->add_subcommand("partition", "partition by (a,d)-primary progression");
    auto * oracle_forced = oracle->add_subcommand("forced", "per-progression forced-cell bound");
    add_instance(oracle_count, false);
    add_instance(oracle_verify, false);
    add_instance(oracle_partition, true);
    add_instance(oracle_forced, true);

    auto * search = app.add_subcommand("search", "threshold search");
    search->require_subcommand(1);
    auto * search_exact = search->add_subcommand("exact", "exact Ramsey value with certificate");
    search_exact->add_option("--r", o.r, "number of colors");
    search_exact->add_option("--k", o.kk, "number of terms");
    o.fam.add(*search_exact);
    search_exact->add_option("--max-nodes", o.max_nodes, "node budget");
    search_exact->add_option("--max-length", o.max_length, "longest coloring to try");
    search_exact->add_option("--workers", o.workers, "threads");
    search_exact->add_option("--out", o.out_file, "write the witness file here");
    auto * search_witness = search->add_subcommand("witness", "randomized witness search with local repair");
    search_witness->add_option("--r", o.r, "number of colors");
    search_witness->add_option("--points", o.points, "N")->required();
    search_witness->add_option("--k", o.kk, "number of terms");
    o.fam.add(*search_witness);
    search_witness->add_option("--seed", o.seed, "RNG seed");
    search_witness->add_option("--max-moves", o.max_moves, "repair-move budget");
    search_witness->add_option("--restarts", o.restarts, "independent streams");
    search_witness->add_option("--workers", o.workers, "threads");
    search_witness->add_option("--out", o.out_file, "write the witness file here");

    auto * check = app.add_subcommand("check", "re-verify a witness file");
    check->add_option("witness", o.witness_path, "witness file")->required();

    std::vector<const char *> argv{"gpramsey"};
    for (const auto & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return success;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    }
    catch (const CLI::ParseError & e) {
        report_error(err, o.json_errors, "usage", e.what());
        return usage_error;
    }

    try {
        if (bound_semi->parsed())
            return cmd_bound_semi(o, out);
        if (bound_quasi->parsed())
            return cmd_bound_quasi(o, out);
        if (table->parsed())
            return cmd_table(o, out);
        for (auto * sub : {oracle_count, oracle_verify, oracle_partition, oracle_forced})
            if (sub->parsed())
                return cmd_oracle(sub->get_name(), o, out);
        if (search_exact->parsed())
            return cmd_search_exact(o, out);
        if (search_witness->parsed())
            return cmd_search_witness(o, out);
        if (check->parsed())
            return cmd_check(o, out);
    }
    catch (const BudgetExceeded & e) {
        report_error(err, o.json_errors, "budget", e.what()
                + (e.best_lower_bound() > 0 ? " (longest valid coloring: " + std::to_string(e.best_lower_bound()) + ")" : ""));
        return budget_exceeded;
    }
    catch (const InvalidInput & e) {
        report_error(err, o.json_errors, "invalid-input", e.what());
        return usage_error;
    }
    catch (const ParseError & e) {
        report_error(err, o.json_errors, "parse", e.what());
        return usage_error;
    }
    catch (const Error & e) {
        report_error(err, o.json_errors, "failure", e.what());
        return check_failed;
    }
    report_error(err, o.json_errors, "usage", "no command given");
    return usage_error;
}

} // namespace gpramsey::cli
