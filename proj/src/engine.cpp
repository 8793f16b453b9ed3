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

#include "udnsim/engine.hpp"

#include "udnsim/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace udnsim {

void SweepConfig::validate() const
{
    if (trials < 1)
        throw InvalidParameter("trials must be at least 1");
    if (densities.empty())
        throw InvalidParameter("density sweep is empty");
    for (std::size_t i = 0; i < densities.size(); ++i) {
        if (!(densities[i] >= 0.0) || !std::isfinite(densities[i]))
            throw InvalidParameter("densities must be finite and non-negative");
        if (i > 0 && !(densities[i] > densities[i - 1]))
            throw InvalidParameter("densities must be strictly increasing");
    }
    if (densities.size() > std::numeric_limits<std::uint32_t>::max() ||
        trials > std::numeric_limits<std::uint32_t>::max())
        throw InvalidParameter("sweep too large for 32-bit substream indices");
    if (schemes.empty())
        throw InvalidParameter("no access schemes selected");
    for (const auto& s : schemes)
        s.validate();
    if (workers < 1)
        throw InvalidParameter("workers must be at least 1");
    if (drop.n_dl > 2)
        throw InvalidParameter("at most two DL users per cell");
    radio.validate();
    geometry.validate();
    drop.validate();
}

std::vector<CellRates> evaluate_cells(const TrialLinks& links, const SweepConfig& cfg,
                                      const SchemeConfig& scheme)
{
    std::vector<CellRates> out;
    out.reserve(links.num_cells());
    for (std::size_t c = 0; c < links.num_cells(); ++c)
        out.push_back(cell_sum_rate(cell_context(links, cfg.radio, scheme, c, cfg.interference), scheme,
                                    cfg.radio));
    return out;
}

std::vector<double> evaluate_topology(const Topology& topology, const SweepConfig& cfg, Rng& rng)
{
    const TrialLinks links = sample_links(topology, cfg.radio, rng);
    std::vector<double> sums;
    sums.reserve(cfg.schemes.size());
    for (const auto& scheme : cfg.schemes) {
        double total = 0.0;
        for (const auto& cell : evaluate_cells(links, cfg, scheme))
            total += cell.sum;
        sums.push_back(total);
    }
    return sums;
}

std::vector<double> run_trial(const SweepConfig& cfg, std::size_t density_index,
                              std::size_t trial_index)
{
    const std::uint64_t seed = substream_seed(cfg.base_seed, static_cast<std::uint32_t>(density_index),
                                              static_cast<std::uint32_t>(trial_index));
    Rng rng(seed);
    const double density = cfg.densities.at(density_index);
    const Topology topo = generate_topology(density, cfg.geometry, cfg.drop, rng, seed);
    return evaluate_topology(topo, cfg, rng);
}

Summary aggregate(std::span<const double> samples)
{
    if (samples.empty())
        throw InvalidParameter("cannot aggregate an empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());

    double sum = 0.0;
    for (double x : sorted)
        sum += x;
    Summary s;
    s.mean = sum / n;
    if (sorted.size() > 1) {
        double ss = 0.0;
        for (double x : sorted)
            ss += (x - s.mean) * (x - s.mean);
        s.std_dev = std::sqrt(ss / (n - 1.0));
    }
    const double half_width = 1.96 * s.std_dev / std::sqrt(n);
    s.ci95_low = s.mean - half_width;
    s.ci95_high = s.mean + half_width;
    return s;
}

const SweepRow* SweepResult::find(double density, Scheme scheme) const
{
    for (const auto& row : rows)
        if (row.density_per_km2 == density && row.scheme == scheme)
            return &row;
    return nullptr;
}

SweepResult run_sweep(const SweepConfig& cfg, const ProgressFn& progress)
{
    cfg.validate();
    const std::size_t n_density = cfg.densities.size();
    const std::size_t total = n_density * cfg.trials;

    // samples[task][scheme], task = density_index * trials + trial_index
    std::vector<std::vector<double>> samples(total);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t task = next.fetch_add(1);
            if (task >= total)
                return;
            try {
                samples[task] = run_trial(cfg, task / cfg.trials, task % cfg.trials);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(total);
                return;
            }
            const std::size_t finished = done.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress(finished, total);
            }
        }
    };

    const std::size_t n_workers = std::min(cfg.workers, std::max<std::size_t>(total, 1));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    SweepResult result;
    std::vector<double> column(cfg.trials);
    for (std::size_t d = 0; d < n_density; ++d) {
        for (std::size_t s = 0; s < cfg.schemes.size(); ++s) {
            for (std::size_t t = 0; t < cfg.trials; ++t)
                column[t] = samples[d * cfg.trials + t][s];
            result.rows.push_back({cfg.densities[d], cfg.schemes[s].scheme, cfg.trials, aggregate(column)});
        }
    }
    return result;
}

} // namespace udnsim
