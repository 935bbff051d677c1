#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include <cosprod/precision/errors.hpp>
#include <cosprod/precision/policy.hpp>
#include <cosprod/verify/compute.hpp>
#include <cosprod/verify/suite.hpp>

namespace
{

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Flags {
    long precision_bits = 256;
    std::string tolerance = "1e-30";
    unsigned long depth = 10000;
    std::optional<std::string> identity;
    std::string format = "json";
    std::string output;
    unsigned jobs = 0;
    std::vector<std::string> target;
};

cosprod::PrecisionPolicy make_policy(const Flags &flags)
{
    try {
        return cosprod::PrecisionPolicy(flags.precision_bits, flags.tolerance);
    } catch (const std::invalid_argument &error) {
        throw cosprod::UsageError(error.what());
    }
}

void emit(const Flags &flags, const std::string &text)
{
    if (flags.output.empty() || flags.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(flags.output, std::ios::binary);
    if (!out) {
        throw cosprod::UsageError("cannot open output file '" + flags.output + "'");
    }
    out << text;
}

int run_suite_command(const Flags &flags)
{
    cosprod::SuiteOptions options{make_policy(flags), flags.depth,
                                  flags.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : flags.jobs};
    const auto reports = cosprod::run_suite(flags.identity, options);
    emit(flags, flags.format == "csv" ? cosprod::reports_to_csv(reports)
                                      : cosprod::reports_to_json(reports, options, flags.tolerance));
    return cosprod::any_mismatch(reports) ? kMismatch : kOk;
}

int run_list_command(const Flags &flags)
{
    std::string text;
    for (const cosprod::IdentityCase &item : cosprod::identity_catalog()) {
        if (!flags.identity || cosprod::identity_matches(*flags.identity, item.id)) {
            text += item.id + "\t" + item.description + "\n";
        }
    }
    if (text.empty()) {
        throw cosprod::UsageError("no identity matches '" + flags.identity.value_or("") + "'");
    }
    emit(flags, text);
    return kOk;
}

int run_targets_command(const Flags &flags)
{
    std::string text;
    for (const cosprod::ComputeTarget &t : cosprod::compute_targets()) {
        text += t.name + (t.arguments.empty() ? "" : " " + t.arguments) + "\t" + t.description + "\n";
    }
    emit(flags, text);
    return kOk;
}

int run_compute_command(const Flags &flags)
{
    const cosprod::ComputeResult result = cosprod::compute(flags.target, make_policy(flags), flags.depth);
    std::string text = result.value + "\n";
    for (const auto &[key, value] : result.details) {
        text += "# " + key + ": " + value + "\n";
    }
    emit(flags, text);
    return kOk;
}

} // namespace

int main(int argc, char **argv)
{
    Flags flags;
    CLI::App app{"Verify and evaluate tan/tanh partial fractions, cosine products and related continued fractions"};
    app.set_version_flag("--version", "cosprod 1.0");

    const auto add_common = [&flags](CLI::App *cmd) {
        cmd->add_option("--precision-bits", flags.precision_bits, "working precision in bits")->capture_default_str();
        cmd->add_option("--tolerance", flags.tolerance, "target radius, as a decimal")->capture_default_str();
        cmd->add_option("--depth", flags.depth, "continued fraction depth cap")->capture_default_str();
        cmd->add_option("--output", flags.output, "write to this file instead of stdout");
    };
    add_common(&app);
    app.add_option("--identity", flags.identity, "glob or id prefix selecting identities");
    app.add_option("--format", flags.format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--jobs", flags.jobs, "worker threads, 0 for one per core")->capture_default_str();

    CLI::App *list = app.add_subcommand("list", "print identity ids and descriptions");
    list->add_option("--identity", flags.identity, "glob or id prefix");
    CLI::App *targets = app.add_subcommand("targets", "print compute targets");
    CLI::App *compute = app.add_subcommand("compute", "evaluate one constant, number, series or continued fraction");
    add_common(compute);
    compute->add_option("target", flags.target, "target name followed by its arguments")->required();
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &error) {
        const int code = app.exit(error);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (list->parsed()) {
            return run_list_command(flags);
        }
        if (targets->parsed()) {
            return run_targets_command(flags);
        }
        if (compute->parsed()) {
            return run_compute_command(flags);
        }
        return run_suite_command(flags);
    } catch (const cosprod::UsageError &error) {
        std::cerr << "error: " << error.what() << "\n";
        return kUsage;
    } catch (const std::exception &error) {
        std::cerr << "error: " << error.what() << "\n";
        return kMismatch;
    }
}
