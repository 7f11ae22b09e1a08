#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "risklab/errors.hpp"
#include "risklab/run_config.hpp"

namespace {

struct SubArgs {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string output;
    bool output_set = false;
    CLI::App* app = nullptr;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw risklab::ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& csv) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw risklab::ConfigError("cannot open output file: " + path);
    out << csv;
    out.flush();
    if (!out) throw risklab::ConfigError("failed writing output file: " + path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"risklab: pricing and hedging under intrinsic-risk measure changes"};
    app.require_subcommand(1);

    const std::pair<const char*, risklab::Subcommand> subs[] = {
        {"price", risklab::Subcommand::Price},
        {"smile", risklab::Subcommand::Smile},
        {"hedge", risklab::Subcommand::Hedge},
        {"convexity", risklab::Subcommand::Convexity},
        {"check-measure", risklab::Subcommand::CheckMeasure},
    };

    SubArgs args[5];
    for (int i = 0; i < 5; ++i) {
        CLI::App* sub = app.add_subcommand(subs[i].first);
        sub->add_option("--config", args[i].config_path, "JSON config file")
            ->required();
        sub->add_option("--seed", args[i].seed, "override the config seed")
            ->trigger_on_parse()
            ->each([&args, i](const std::string&) { args[i].seed_set = true; });
        sub->add_option("--output", args[i].output, "output CSV path (default stdout)")
            ->trigger_on_parse()
            ->each([&args, i](const std::string&) { args[i].output_set = true; });
        args[i].app = sub;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (int i = 0; i < 5; ++i) {
            if (!args[i].app->parsed()) continue;
            const std::string text = read_file(args[i].config_path);
            std::optional<std::uint64_t> seed_override;
            if (args[i].seed_set) seed_override = args[i].seed;
            const risklab::RunConfig cfg =
                risklab::parse_run_config(text, subs[i].second, seed_override);
            const std::string csv = risklab::run_subcommand(subs[i].second, cfg);
            std::string out_path;
            if (args[i].output_set)
                out_path = args[i].output;
            else if (cfg.output)
                out_path = *cfg.output;
            if (out_path.empty())
                std::cout << csv;
            else
                write_output(out_path, csv);
            return 0;
        }
        return 2;
    } catch (const risklab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const risklab::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const risklab::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
