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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include "udnsim/access_schemes.hpp"
#include "udnsim/channel.hpp"
#include "udnsim/engine.hpp"
#include "udnsim/links.hpp"
#include "udnsim/report.hpp"
#include "udnsim/rng.hpp"
#include "udnsim/topology.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace udnsim;

namespace {

struct Verdict
{
    bool pass;
    std::string detail;
};

double rel_err(double got, double want)
{
    if (got == want)
        return 0.0;
    return std::abs(got - want) / std::max(std::abs(want), std::numeric_limits<double>::min());
}

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Shared by the ordering and saturation criteria.
struct SweepRun
{
    SweepResult result;
    double seconds = 0.0;
    std::size_t workers = 1;
};

const SweepRun& default_sweep()
{
    static const SweepRun run = [] {
        SweepRun r;
        SweepConfig cfg;
        cfg.trials = 500;
        r.workers = std::max(1u, std::thread::hardware_concurrency());
        cfg.workers = r.workers;
        const auto t0 = std::chrono::steady_clock::now();
        r.result = run_sweep(cfg);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "# default sweep, 500 trials, " << r.workers << " worker(s), "
                  << fmt("%.1f", r.seconds) << " s\n";
        std::istringstream csv(format_csv(r.result));
        for (std::string line; std::getline(csv, line);)
            std::cout << "#   " << line << '\n';
        return r;
    }();
    return run;
}

Verdict ordering()
{
    const auto& run = default_sweep();
    std::ostringstream why;
    bool ok = run.seconds <= 600.0;
    if (!ok)
        why << "runtime " << run.seconds << " s exceeds 600 s; ";
    for (double d : SweepConfig{}.densities) {
        const auto* oma = run.result.find(d, Scheme::OmaHd);
        const auto* hd = run.result.find(d, Scheme::NomaHd);
        const auto* fd = run.result.find(d, Scheme::NomaFd);
        if (!oma || !hd || !fd)
            return {false, "missing sweep row"};
        if (!(fd->stats.mean >= hd->stats.mean && hd->stats.mean >= oma->stats.mean)) {
            ok = false;
            why << "order broken at " << d << "; ";
        }
        if (d >= 50.0 && d <= 400.0 && !(fd->stats.ci95_low > oma->stats.ci95_high)) {
            ok = false;
            why << "CIs overlap at " << d << "; ";
        }
    }
    if (ok)
        why << "NOMA-FD >= NOMA-HD >= OMA-HD at all densities, CIs disjoint over 50-400, "
            << fmt("%.1f", run.seconds) << " s";
    return {ok, why.str()};
}

Verdict saturation()
{
    const auto& run = default_sweep();
    std::ostringstream why;
    bool ok = true;
    for (auto s : {Scheme::OmaHd, Scheme::NomaHd, Scheme::NomaFd}) {
        const double m10 = run.result.find(10, s)->stats.mean;
        const double m25 = run.result.find(25, s)->stats.mean;
        const double m700 = run.result.find(700, s)->stats.mean;
        const double m1000 = run.result.find(1000, s)->stats.mean;
        const double first = (m25 - m10) / m10;
        const double last = (m1000 - m700) / m700;
        ok = ok && last < first;
        if (why.tellp() > 0)
            why << "; ";
        why << scheme_name(s) << " last " << fmt("%+.3f", last) << " vs first " << fmt("%+.3f", first);
    }
    return {ok, why.str()};
}

Verdict pathloss()
{
    const double c = 299792458.0;
    const double fc = 28e9;
    double worst = 0.0;
    for (double d : {1.0, 10.0, 100.0, 500.0}) {
        for (bool los : {true, false}) {
            const double exponent = los ? 2.01 : 3.4;
            const double want = 20.0 * std::log10(4.0 * std::numbers::pi * fc / c) + 10.0 * exponent * std::log10(d);
            worst = std::max(worst, std::abs(pathloss_db(d, los, fc) - want));
        }
    }
    return {worst <= 1e-10, "max abs error " + fmt("%.3g", worst) + " dB"};
}

Verdict suic()
{
    Rng rng(404);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const std::array<double, 2> s{std::pow(10.0, rng.uniform(-16.0, -6.0)), std::pow(10.0, rng.uniform(-16.0, -6.0))};
        const double inter = std::pow(10.0, rng.uniform(-16.0, -8.0));
        const double si = std::pow(10.0, rng.uniform(-16.0, -10.0));
        const double noise = std::pow(10.0, rng.uniform(-15.0, -12.0));
        const double bw = rng.uniform(1e6, 1e9);
        const auto rates = noma_ul_rates(s, inter, si, noise, bw);
        const double want = bw * std::log1p((s[0] + s[1]) / (inter + si + noise)) / std::numbers::ln2;
        worst = std::max(worst, rel_err(rates[0] + rates[1], want));
    }
    return {worst <= 1e-9, "max relative error " + fmt("%.3g", worst) + " over 10000 instances"};
}

Verdict fd_degeneracy()
{
    SweepConfig cfg;
    cfg.radio.p_user_dbm = -std::numeric_limits<double>::infinity();
    cfg.radio.residual_si_dbm = -std::numeric_limits<double>::infinity();
    const auto hd = SchemeConfig::defaults(Scheme::NomaHd);
    const auto fd = SchemeConfig::defaults(Scheme::NomaFd);
    std::size_t cells = 0;
    for (std::uint64_t t = 0; t < 100; ++t) {
        Rng rng(substream_seed(77, 0, t));
        const double density = 50.0 + 10.0 * static_cast<double>(t);
        const Topology topo = generate_topology(density, cfg.geometry, cfg.drop, rng, 0);
        const TrialLinks links = sample_links(topo, cfg.radio, rng);
        const auto a = evaluate_cells(links, cfg, hd);
        const auto b = evaluate_cells(links, cfg, fd);
        if (a.size() != b.size())
            return {false, "cell count differs"};
        for (std::size_t c = 0; c < a.size(); ++c) {
            if (a[c].dl_rates.size() != b[c].dl_rates.size())
                return {false, "DL user count differs"};
            for (std::size_t u = 0; u < a[c].dl_rates.size(); ++u)
                if (std::bit_cast<std::uint64_t>(a[c].dl_rates[u]) != std::bit_cast<std::uint64_t>(b[c].dl_rates[u]))
                    return {false, "DL rate differs in topology " + std::to_string(t)};
            for (double r : b[c].ul_rates)
                if (r != 0.0)
                    return {false, "non-zero UL rate at zero UL power"};
            if (std::bit_cast<std::uint64_t>(a[c].sum) != std::bit_cast<std::uint64_t>(b[c].sum))
                return {false, "cell sum differs in topology " + std::to_string(t)};
        }
        cells += a.size();
    }
    return {true, "bit-identical over 100 topologies, " + std::to_string(cells) + " cells"};
}

Verdict beamspace()
{
    constexpr std::size_t n = 64;
    Rng rng(606);
    double worst_norm = 0.0;
    for (int i = 0; i < 1000; ++i) {
        ComplexVector h(n);
        for (auto& x : h)
            x = {rng.normal(), rng.normal()};
        const auto b = beamspace_transform(h);
        double nh = 0.0, nb = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            nh += std::norm(h[k]);
            nb += std::norm(b[k]);
        }
        worst_norm = std::max(worst_norm, rel_err(std::sqrt(nb), std::sqrt(nh)));
    }
    double worst_grid = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        const auto a = steering_vector(n, std::asin(beam_grid_sin(n, m)));
        const auto b = beamspace_transform(a);
        for (std::size_t k = 0; k < n; ++k) {
            const double want = k == m ? 1.0 : 0.0;
            worst_grid = std::max(worst_grid, std::abs(std::abs(b[k]) - want));
        }
    }
    return {worst_norm <= 1e-10 && worst_grid <= 1e-10,
            "norm error " + fmt("%.3g", worst_norm) + ", one-hot error " + fmt("%.3g", worst_grid)};
}

Verdict ppp()
{
    const SectorGeometry g;
    const double mean = 50.0 * g.area_km2();
    constexpr int draws = 10000;
    constexpr std::size_t tail = 15; // counts >= tail are pooled
    std::vector<double> observed(tail + 1, 0.0);
    double sum = 0.0;
    Rng rng(808);
    for (int i = 0; i < draws; ++i) {
        const auto k = sample_sbs_positions(50.0, g, rng).size();
        sum += static_cast<double>(k);
        observed[std::min(k, tail)] += 1.0;
    }
    const double sample_mean = sum / draws;
    const double se = std::sqrt(mean / draws);
    const double z = (sample_mean - mean) / se;

    std::vector<double> expected(tail + 1, 0.0);
    double pk = std::exp(-mean), cdf = 0.0;
    for (std::size_t k = 0; k < tail; ++k) {
        expected[k] = draws * pk;
        cdf += pk;
        pk *= mean / static_cast<double>(k + 1);
    }
    expected[tail] = draws * (1.0 - cdf);
    double chi2 = 0.0;
    for (std::size_t k = 0; k <= tail; ++k)
        chi2 += (observed[k] - expected[k]) * (observed[k] - expected[k]) / expected[k];
    const boost::math::chi_squared dist(static_cast<double>(tail));
    const double p_value = boost::math::cdf(boost::math::complement(dist, chi2));
    return {std::abs(z) <= 4.0 && p_value >= 0.01,
            "mean " + fmt("%.4f", sample_mean) + " (expected " + fmt("%.4f", mean) + ", z " + fmt("%+.2f", z) +
                "), chi-square p " + fmt("%.3f", p_value)};
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict determinism()
{
    const auto dir = std::filesystem::temp_directory_path() / "udnsim_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string common = std::string("\"") + UDNSIM_CLI_PATH +
                               "\" run --densities 10,100,400 --trials 20 --seed 31337 -q";
    const auto a = dir / "w1.csv";
    const auto b = dir / "w3.csv";
    const int ra = std::system((common + " --workers 1 --out \"" + a.string() + "\"").c_str());
    const int rb = std::system((common + " --workers 3 --out \"" + b.string() + "\"").c_str());
    if (ra != 0 || rb != 0)
        return {false, "CLI exited with an error"};
    const std::string ca = slurp(a), cb = slurp(b);
    std::filesystem::remove_all(dir);
    if (ca.empty())
        return {false, "empty CSV"};
    return {ca == cb, ca == cb ? "CSV byte-identical across 1 and 3 workers (" + std::to_string(ca.size()) + " bytes)"
                               : "CSV differs between worker counts"};
}

Verdict hand_oracle()
{
    // one cell, unit power, unit noise, unit bandwidth, gains 1 and 10
    SweepConfig cfg;
    cfg.radio.p_sbs_dbm = 30.0;
    cfg.radio.noise_power_dbm = 30.0;
    cfg.radio.bandwidth_hz = 1.0;
    LinkGains g = LinkGains::zeros(1, 2, 2);
    g.dl_beam = {0};
    g.own_dl = {1.0, 10.0};
    const auto cells = evaluate_cells(TrialLinks::from_gains(g), cfg, SchemeConfig::defaults(Scheme::NomaHd));
    if (cells.size() != 1 || cells[0].dl_rates.size() != 2)
        return {false, "unexpected cell layout"};
    const double rw = cells[0].dl_rates[0];
    const double rs = cells[0].dl_rates[1];
    // R_w = log2(1 + 0.7/1.3), R_s = log2(1 + 0.3*10)
    const double want_w = std::log2(1.0 + 0.7 / 1.3);
    const double err = std::max(rel_err(rw, want_w), rel_err(rs, 2.0));
    return {err <= 1e-9 && std::abs(want_w - 0.6215) < 5e-5,
            "R_w " + fmt("%.10f", rw) + ", R_s " + fmt("%.10f", rs) + ", relative error " + fmt("%.3g", err)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"sum-rate ordering", ordering},
        {"saturation", saturation},
        {"path loss", pathloss},
        {"SuIC sum capacity", suic},
        {"FD degeneracy", fd_degeneracy},
        {"beamspace unitarity", beamspace},
        {"PPP statistics", ppp},
        {"CLI determinism", determinism},
        {"single-cell hand oracle", hand_oracle},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += v.pass ? 0 : 1;
        std::cout << (v.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << v.detail
                  << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
