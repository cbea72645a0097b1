// reflinv: invariant theory of finite pseudo-reflection groups and
// certification of eigenspace representations.
//
// Exit codes: 0 every check passed, 1 a verification check failed,
// 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "reflinv/error.hpp"
#include "reflinv/group_io.hpp"
#include "reflinv/matrix_group.hpp"
#include "reflinv/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string builtin_spec;
    std::string group_file;
    std::vector<std::string> weights;
    std::string out;
    std::string output = "json";
    unsigned max_degree = 0;
    unsigned precision = 128;
    std::uint64_t seed = reflinv::kDefaultSeed;
    bool timings = false;
};

void add_common(CLI::App *sub, Options &o, bool with_weights)
{
    auto *b = sub->add_option("--builtin", o.builtin_spec,
                              "built-in group: dihedral:n, symmetric:n, hyperoctahedral:n, cyclic:n, trivial:n");
    auto *g = sub->add_option("--group", o.group_file, "group definition file (JSON)");
    b->excludes(g);
    g->excludes(b);
    sub->add_option("--out", o.out, "write the report to FILE instead of stdout");
    sub->add_option("--output", o.output, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-degree", o.max_degree, "highest degree shown or verified")->check(CLI::Range(1u, 64u));
    sub->add_option("--precision", o.precision, "bits for numeric checks")->check(CLI::Range(53u, 4096u));
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->add_flag("--timings", o.timings, "include per-stage wall-clock timings (non-deterministic)");
    if (with_weights) {
        sub->add_option("--weight", o.weights, "weight lambda as comma-separated exact scalars, e.g. \"i*1,i*2\"")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    }
}

bool write_output(const std::string &path, const std::string &content)
{
    if (path.empty()) {
        std::cout << content;
        std::cout.flush();
        return static_cast<bool>(std::cout);
    }
    std::ofstream f(path, std::ios::binary);
    f << content;
    return static_cast<bool>(f);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Invariant theory of finite pseudo-reflection groups"};
    app.set_version_flag("--version", reflinv::tool_version());
    app.require_subcommand(1);

    Options opt;
    const std::map<std::string, reflinv::Command> commands = {
        {"info", reflinv::Command::Info},
        {"molien", reflinv::Command::Molien},
        {"invariants", reflinv::Command::Invariants},
        {"harmonics", reflinv::Command::Harmonics},
        {"eigenspace", reflinv::Command::Eigenspace},
        {"verify-all", reflinv::Command::VerifyAll},
    };
    const std::map<std::string, std::string> help = {
        {"info", "group order, pseudo-reflections and orthogonality"},
        {"molien", "Molien series, fixed space and fundamental degrees"},
        {"invariants", "fundamental invariants"},
        {"harmonics", "harmonic polynomials and the series identity"},
        {"eigenspace", "per-weight eigenspace certificates"},
        {"verify-all", "the full verification pipeline"},
    };
    for (const auto &[name, cmd] : commands) {
        const bool weights = cmd == reflinv::Command::Eigenspace || cmd == reflinv::Command::VerifyAll;
        add_common(app.add_subcommand(name, help.at(name)), opt, weights);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    reflinv::Command command = reflinv::Command::Info;
    for (const auto &[name, cmd] : commands) {
        if (app.got_subcommand(name)) {
            command = cmd;
        }
    }
    if (opt.builtin_spec.empty() == opt.group_file.empty()) {
        std::cerr << "error: exactly one of --builtin or --group is required\n";
        return kExitUsage;
    }

    reflinv::Report report;
    try {
        reflinv::ReportOptions ro;
        reflinv::ReflectionGroup group = opt.group_file.empty() ? reflinv::builtin(opt.builtin_spec)
                                                                 : reflinv::load_group_file(opt.group_file);
        ro.source = opt.group_file.empty() ? "builtin:" + opt.builtin_spec : "file:" + opt.group_file;
        ro.weights = opt.weights;
        if (opt.max_degree != 0) {
            ro.max_degree = opt.max_degree;
        }
        ro.precision = opt.precision;
        ro.seed = opt.seed;
        ro.timings = opt.timings;
        report = reflinv::run_report(command, group, ro);
    } catch (const reflinv::ParseError &e) {
        std::cerr << "error: " << (opt.group_file.empty() ? "" : opt.group_file + ": ") << e.what() << "\n";
        return kExitUsage;
    } catch (const reflinv::InvalidArgument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const reflinv::GroupNotFinite &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const reflinv::OrderOverflow &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const reflinv::Error &e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kExitFail;
    }

    if (!write_output(opt.out, opt.output == "json" ? report.json : report.text)) {
        std::cerr << "error: cannot write '" << opt.out << "'\n";
        return kExitUsage;
    }
    if (!report.passed) {
        std::cerr << "verification failed:";
        for (const auto &k : report.failing_keys) {
            std::cerr << " " << k;
        }
        std::cerr << "\n";
        return kExitFail;
    }
    return kExitPass;
}
