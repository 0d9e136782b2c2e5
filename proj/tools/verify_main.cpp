#include "cubics/driver.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace cubics;

namespace {

struct CliOptions {
    std::string format = "text";
    bool timings = false;
    std::vector<std::string> params;
    std::vector<std::string> checks;
    unsigned specialize_n = 0;
    unsigned max_conductor = 0;
};

RunOptions to_run_options(const CliOptions& cli) {
    RunOptions opts;
    opts.timings = cli.timings;
    for (const auto& kv : cli.params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param", "expected name=value");
        opts.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    for (const auto& k : cli.checks) opts.kind_filter.insert(k);
    if (cli.specialize_n) opts.dihedral_n = cli.specialize_n;
    if (cli.max_conductor) opts.max_conductor = cli.max_conductor;
    return opts;
}

int emit(const std::vector<VerificationReport>& reports, const CliOptions& cli) {
    if (cli.format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(r.to_json(cli.timings));
        std::cout << arr.dump(1) << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.to_text(cli.timings);
    }
    return aggregate_exit_code(reports);
}

void add_common(CLI::App* cmd, CliOptions& cli) {
    cmd->add_option("--format", cli.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--timings", cli.timings, "Include per-check timings");
    cmd->add_option("--param", cli.params,
                    "Case parameter value, e.g. --param e1=1 (repeatable)");
    cmd->add_option("--check", cli.checks, "Only run checks of this kind (repeatable)");
    cmd->add_option("--specialize", [&cli](const std::vector<std::string>& vals) {
        for (const auto& v : vals) {
            if (v.rfind("n=", 0) != 0) return false;
            cli.specialize_n = static_cast<unsigned>(std::stoul(v.substr(2)));
        }
        return true;
    }, "Torus specialization n=<int> for dihedral checks");
    cmd->add_option("--max-conductor", cli.max_conductor,
                    "Skip cases requiring a larger cyclotomic conductor");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the singular cubic threefold catalog"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "Print the built-in case ids");

    CliOptions run_cli;
    std::string case_id;
    auto* run_cmd = app.add_subcommand("run", "Run the checks of one built-in case");
    run_cmd->add_option("--case", case_id, "Case id")->required();
    add_common(run_cmd, run_cli);

    CliOptions all_cli;
    auto* all_cmd = app.add_subcommand("run-all", "Run every built-in case");
    add_common(all_cmd, all_cli);

    std::string load_path;
    auto* load_cmd = app.add_subcommand("load", "Validate a user case file");
    load_cmd->add_option("file", load_path, "Path to a case JSON document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list_cmd->parsed()) {
            for (const auto& id : builtin_ids()) std::cout << id << "\n";
            return 0;
        }
        if (run_cmd->parsed()) {
            CaseRecord rec = load_builtin(case_id);
            auto report = run_case(rec, to_run_options(run_cli));
            return emit({report}, run_cli);
        }
        if (all_cmd->parsed()) {
            auto reports = run_all(to_run_options(all_cli));
            return emit(reports, all_cli);
        }
        if (load_cmd->parsed()) {
            CaseRecord rec = load_case_file(load_path);
            std::cout << "OK: " << rec.id << " (" << rec.checks.size()
                      << " checks, conductor " << rec.max_conductor << ")\n";
            return 0;
        }
    } catch (const load_error& e) {
        std::cerr << "load error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
