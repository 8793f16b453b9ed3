// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "udnsim/cli.hpp"

#include "udnsim/config.hpp"
#include "udnsim/error.hpp"
#include "udnsim/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace udnsim {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw OutputError("cannot read config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SweepConfig load_config(const std::string& path)
{
    if (path.empty())
        return SweepConfig{};
    try {
        return parse_config(read_file(path));
    } catch (const ConfigError& e) {
        std::string where = path;
        if (e.line() > 0)
            where += ":" + std::to_string(e.line()) + ":" + std::to_string(e.column());
        throw std::runtime_error(where + ": " + std::string(config_error_kind_name(e.kind())) + ": " + e.detail());
    }
}

std::string check_densities(const std::string& text)
{
    try {
        const auto list = parse_density_list(text);
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i] < 0.0)
                return "densities must be non-negative";
            if (i > 0 && !(list[i] > list[i - 1]))
                return "densities must be strictly increasing";
        }
    } catch (const InvalidParameter& e) {
        return e.what();
    }
    return {};
}

std::string check_schemes(const std::string& text)
{
    try {
        parse_scheme_list(text, SchemeConfig::defaults(Scheme::NomaHd), SchemeConfig::defaults(Scheme::OmaHd));
    } catch (const InvalidParameter& e) {
        return e.what();
    }
    return {};
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monte Carlo sum-rate simulator for ultra-dense mmWave small-cell networks", "udnsim"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::string> densities;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> schemes;
    std::optional<std::size_t> workers;
    std::string out_path;
    std::string plot_path;
    bool quiet = false;

    auto* run = app.add_subcommand("run", "Run the density sweep");
    run->add_option("--config", config_path, "Configuration file")->check(CLI::ExistingFile);
    run->add_option("--densities", densities, "Comma-separated SBS densities per km^2")
        ->check(CLI::Validator(check_densities, "LIST"));
    run->add_option("--trials", trials, "Random topologies per density")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Base seed")->envname("UDNSIM_SEED");
    run->add_option("--schemes", schemes, "Comma-separated schemes (OMA_HD, NOMA_HD, NOMA_FD)")
        ->check(CLI::Validator(check_schemes, "LIST"));
    run->add_option("--out", out_path, "CSV output path (stdout if omitted)");
    run->add_option("--plot", plot_path, "SVG plot output path");
    run->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    run->add_flag("--quiet,-q", quiet, "No progress output");

    auto* validate = app.add_subcommand("validate", "Parse a configuration and print its normalised form");
    validate->add_option("--config,config", config_path, "Configuration file")->required()->check(CLI::ExistingFile);

    app.add_subcommand("defaults", "Print the default configuration");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("defaults")) {
            out << serialize_config(SweepConfig{});
            return kExitOk;
        }
        if (app.got_subcommand("validate")) {
            out << serialize_config(load_config(config_path));
            return kExitOk;
        }

        SweepConfig cfg = load_config(config_path);
        if (densities)
            cfg.densities = parse_density_list(*densities);
        if (trials)
            cfg.trials = *trials;
        if (seed)
            cfg.base_seed = *seed;
        if (workers)
            cfg.workers = *workers;
        if (schemes) {
            SchemeConfig noma = SchemeConfig::defaults(Scheme::NomaHd);
            SchemeConfig oma = SchemeConfig::defaults(Scheme::OmaHd);
            for (const auto& s : cfg.schemes)
                (s.is_noma() ? noma : oma) = s;
            cfg.schemes = parse_scheme_list(*schemes, noma, oma);
        }
        cfg.validate();

        ProgressFn progress;
        if (!quiet) {
            progress = [&err](std::size_t done, std::size_t total) {
                if (done == total || done % std::max<std::size_t>(total / 20, 1) == 0)
                    err << "\rtrials " << done << "/" << total << (done == total ? "\n" : "") << std::flush;
            };
        }
        const SweepResult result = run_sweep(cfg, progress);
        if (out_path.empty())
            out << format_csv(result);
        else
            write_csv(result, out_path);
        if (!plot_path.empty())
            render_plot(result, plot_path);
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace udnsim
