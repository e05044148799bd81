// permwalsh: Walsh spectra of f_alpha(x) = Tr(alpha * sigma^{-1}(x)^3) on GF(2^(2e)).

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <permwalsh/report.hpp>

namespace pw = permwalsh;

namespace {

constexpr const char* kEncoding =
    "Elements of GF(2^e) are lowercase hex of their bit vector in the polynomial basis "
    "(bit i = coefficient of x^i). Elements of GF(2^(2e)) print as \"a0+a1*t\" with t^2 = t + lambda + 1.";

void add_e(CLI::App* cmd, pw::RunConfig& cfg) {
    cmd->add_option("--e", cfg.e, "extension degree of the base field (even)")->required();
}

void add_alpha(CLI::App* cmd, pw::RunConfig& cfg) {
    cmd->add_option("--alpha", cfg.alpha, "nonzero element of GF(2^e), hex")->required();
}

void add_format(CLI::App* cmd, pw::RunConfig& cfg) {
    const std::map<std::string, pw::Format> formats{{"json", pw::Format::Json}, {"csv", pw::Format::Csv}};
    cmd->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_parallelism(CLI::App* cmd, pw::RunConfig& cfg) {
    cmd->add_option("-j,--parallelism", cfg.parallelism, "worker threads (0 = hardware concurrency)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walsh spectra of a permutation-composed cubic on GF(2^(2e))", "permwalsh"};
    app.footer(kEncoding);
    app.set_version_flag("--version", pw::kToolVersion);
    app.require_subcommand(1);

    pw::RunConfig cfg;
    pw::CommandResult (*run)(const pw::RunConfig&) = nullptr;

    auto* spectrum = app.add_subcommand("spectrum", "Walsh value distribution of f_alpha");
    add_e(spectrum, cfg);
    add_alpha(spectrum, cfg);
    add_format(spectrum, cfg);
    spectrum->callback([&] { run = pw::cmd_spectrum; });

    auto* sweep = app.add_subcommand("sweep", "spectrum of f_alpha for every nonzero alpha");
    add_e(sweep, cfg);
    add_format(sweep, cfg);
    add_parallelism(sweep, cfg);
    sweep->callback([&] { run = pw::cmd_sweep; });

    auto* verify = app.add_subcommand("verify", "run the exhaustive and sampled checks");
    add_e(verify, cfg);
    const std::map<std::string, pw::Suite> suites{{"all", pw::Suite::All},
                                                  {"theorems", pw::Suite::Theorems},
                                                  {"lemmas", pw::Suite::Lemmas},
                                                  {"shells", pw::Suite::Shells}};
    verify->add_option("--suite", cfg.suite, "which checks to run")
        ->transform(CLI::CheckedTransformer(suites, CLI::ignore_case));
    verify->add_option("--seed", cfg.seed, "seed for sampled checks");
    add_format(verify, cfg);
    add_parallelism(verify, cfg);
    verify->callback([&] { run = pw::cmd_verify; });

    auto* inverse = app.add_subcommand("inverse", "table of (x, sigma(x), sigma^-1(x))");
    add_e(inverse, cfg);
    add_format(inverse, cfg);
    inverse->callback([&] { run = pw::cmd_inverse; });

    auto* truth = app.add_subcommand("truth-table", "truth table of f_alpha as hex");
    truth->footer(
        "Entry k is f_alpha at the element with encoding k = a0 | a1 << e. "
        "Byte i holds entries 8i..8i+7, entry 8i in the low bit; bytes print in order.");
    add_e(truth, cfg);
    add_alpha(truth, cfg);
    truth->callback([&] { run = pw::cmd_truth_table; });

    auto* table = app.add_subcommand("table", "Walsh value multiplicities, predicted and computed");
    add_e(table, cfg);
    add_format(table, cfg);
    add_parallelism(table, cfg);
    table->callback([&] { run = pw::cmd_table; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        const pw::CommandResult result = run(cfg);
        std::cout << result.output;
        return result.exit_code;
    } catch (const pw::OddExtensionDegree& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const pw::BadAlpha& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const pw::CapacityExceeded& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
