#include "ckgeom_cli/cli.hpp"

#include "ckgeom_cli/scenario.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace ckgeom::cli {

namespace {

int report_error(const Error& e, std::ostream& out, std::ostream& err) {
    if (dynamic_cast<const FormatError*>(&e) != nullptr) {
        err << "error: " << e.what() << "\n";
        return kMalformed;
    }
    out << Json{{"reason", e.reason()}, {"message", e.what()}}.dump() << "\n";
    return kPrecondition;
}

void print_checks(const BuildReport& report, std::optional<int> order, std::ostream& out) {
    for (const auto& c : report.checks) {
        const int k = order.value_or(c.zero_to_order);
        const bool ok = run_check(report, c.name, k);
        out << (ok ? "PASS " : "FAIL ") << c.name << " zero_to_order=" << k << "\n";
    }
}

void print_list(std::ostream& out, const char* title, const std::vector<std::string>& ids) {
    out << title << " (" << ids.size() << "):";
    for (const auto& id : ids) {
        out << " " << id;
    }
    out << "\n";
}

int do_run(const std::string& path, const std::string& output_override, std::ostream& out) {
    const Scenario s = parse_scenario(read_json_file(path));
    const BuildReport report = run_scenario(s);
    const std::string text = dump(to_json(report));
    const std::string output = output_override.empty() ? s.output : output_override;
    if (output.empty()) {
        out << text;
    } else {
        write_text_file(output, text);
        print_checks(report, std::nullopt, out);
    }
    return verify(report) ? kOk : kVerificationFailed;
}

int do_census(const std::string& tag, int n, bool as_json, std::ostream& out) {
    const Census c = census(parse_tag(tag), n);
    if (as_json) {
        out << dump(Json{{"construction", tag_name(c.tag)},
                         {"n", c.dim},
                         {"free_functions", c.free_functions},
                         {"initial_slices", c.initial_slices},
                         {"ck_unknowns", c.ck_unknowns},
                         {"determined", c.determined}});
        return kOk;
    }
    out << "construction: " << tag_name(c.tag) << "\n";
    out << "n: " << c.dim << "\n";
    print_list(out, "free functions", c.free_functions);
    print_list(out, "initial slices", c.initial_slices);
    print_list(out, "ck unknowns", c.ck_unknowns);
    print_list(out, "determined", c.determined);
    return kOk;
}

int do_verify(const std::string& path, std::optional<int> order, std::ostream& out) {
    const BuildReport report = report_from_json(read_json_file(path));
    print_checks(report, order, out);
    return verify(report, order) ? kOk : kVerificationFailed;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local analytic connections and metrics with prescribed curvature data"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string output_path;
    auto* run = app.add_subcommand("run", "Build the structure described by a scenario file");
    run->add_option("scenario", scenario_path, "Scenario JSON")->required();
    run->add_option("-o,--output", output_path, "Report path (overrides the scenario)");

    std::string tag;
    int n = 0;
    bool as_json = false;
    auto* census_cmd = app.add_subcommand("census", "List the free data of a construction");
    census_cmd->add_option("tag", tag, "Construction tag")->required();
    census_cmd->add_option("n", n, "Dimension")->required();
    census_cmd->add_flag("--json", as_json, "Print JSON");

    std::string report_path;
    std::optional<int> order;
    auto* verify_cmd = app.add_subcommand("verify", "Re-run the checks stored in a report");
    verify_cmd->add_option("report", report_path, "Report JSON")->required();
    verify_cmd->add_option("--order", order, "Check every residual to this total degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kMalformed;
    }

    try {
        if (run->parsed()) {
            return do_run(scenario_path, output_path, out);
        }
        if (census_cmd->parsed()) {
            return do_census(tag, n, as_json, out);
        }
        return do_verify(report_path, order, out);
    } catch (const Error& e) {
        return report_error(e, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kMalformed;
    }
}

} // namespace ckgeom::cli
