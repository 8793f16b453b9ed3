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

#include "udnsim/report.hpp"

#include "udnsim/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

namespace udnsim {

namespace {

constexpr std::array<Scheme, 3> kSchemeOrder{Scheme::OmaHd, Scheme::NomaHd, Scheme::NomaFd};

std::string fmt6(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt_coord(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw OutputError("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out)
        throw OutputError("failed writing '" + path.string() + "'");
}

std::size_t scheme_rank(Scheme s)
{
    return static_cast<std::size_t>(std::find(kSchemeOrder.begin(), kSchemeOrder.end(), s) - kSchemeOrder.begin());
}

const char* scheme_colour(Scheme s)
{
    switch (s) {
    case Scheme::OmaHd:
        return "#1f77b4";
    case Scheme::NomaHd:
        return "#ff7f0e";
    case Scheme::NomaFd:
        return "#2ca02c";
    }
    return "#000000";
}

} // namespace

std::string format_csv(const SweepResult& result)
{
    std::vector<const SweepRow*> rows;
    rows.reserve(result.rows.size());
    for (const auto& row : result.rows)
        rows.push_back(&row);
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow* a, const SweepRow* b) {
        if (a->density_per_km2 != b->density_per_km2)
            return a->density_per_km2 < b->density_per_km2;
        return scheme_rank(a->scheme) < scheme_rank(b->scheme);
    });

    std::string out = kCsvHeader;
    out += '\n';
    for (const SweepRow* row : rows) {
        out += fmt6(row->density_per_km2);
        out += ',';
        out += scheme_name(row->scheme);
        out += ',';
        out += std::to_string(row->trials);
        for (double v : {row->stats.mean, row->stats.std_dev, row->stats.ci95_low, row->stats.ci95_high}) {
            out += ',';
            out += fmt6(v);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const SweepResult& result, const std::filesystem::path& path)
{
    write_file(path, format_csv(result));
}

std::string scheme_label(Scheme scheme)
{
    std::string name(scheme_name(scheme));
    std::replace(name.begin(), name.end(), '_', '-');
    return name;
}

std::string render_svg(const SweepResult& result)
{
    if (result.rows.empty())
        throw InvalidParameter("nothing to plot: the sweep result is empty");

    constexpr double width = 800, height = 500;
    constexpr double left = 90, right = 170, top = 30, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_min = result.rows.front().density_per_km2, x_max = x_min;
    double y_max = 0.0;
    for (const auto& row : result.rows) {
        x_min = std::min(x_min, row.density_per_km2);
        x_max = std::max(x_max, row.density_per_km2);
        y_max = std::max({y_max, row.stats.mean, row.stats.ci95_high});
    }
    if (!(y_max > 0.0))
        y_max = 1.0;
    y_max *= 1.05;

    auto px = [&](double d) {
        if (x_max == x_min)
            return left + 0.5 * plot_w;
        return left + (d - x_min) / (x_max - x_min) * plot_w;
    };
    auto py = [&](double v) { return top + plot_h - std::clamp(v, 0.0, y_max) / y_max * plot_h; };

    std::vector<Scheme> schemes;
    for (const auto& row : result.rows)
        if (std::find(schemes.begin(), schemes.end(), row.scheme) == schemes.end())
            schemes.push_back(row.scheme);

    std::string svg;
    auto add = [&](const std::string& s) { svg += s; svg += '\n'; };
    add(R"(<?xml version="1.0" encoding="UTF-8"?>)");
    add("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_coord(width) + "\" height=\"" +
        fmt_coord(height) + "\" viewBox=\"0 0 " + fmt_coord(width) + " " + fmt_coord(height) + "\">");
    add(R"(<rect width="100%" height="100%" fill="white"/>)");

    // axes and ticks
    const std::string x0 = fmt_coord(left), x1 = fmt_coord(left + plot_w);
    const std::string y0 = fmt_coord(top + plot_h), y1 = fmt_coord(top);
    add("<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">");
    add("<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y0 + "\"/>");
    add("<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y1 + "\"/>");
    add("</g>");
    add("<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">");
    std::vector<double> x_ticks;
    for (const auto& row : result.rows)
        if (std::find(x_ticks.begin(), x_ticks.end(), row.density_per_km2) == x_ticks.end())
            x_ticks.push_back(row.density_per_km2);
    for (double d : x_ticks)
        add("<text x=\"" + fmt_coord(px(d)) + "\" y=\"" + fmt_coord(top + plot_h + 16) +
            "\" text-anchor=\"middle\">" + fmt6(d) + "</text>");
    for (int i = 0; i <= 5; ++i) {
        const double v = y_max / 1.05 * i / 5.0;
        add("<text x=\"" + fmt_coord(left - 6) + "\" y=\"" + fmt_coord(py(v) + 4) + "\" text-anchor=\"end\">" +
            fmt6(v) + "</text>");
    }
    add("</g>");
    add("<text class=\"axis-label\" x=\"" + fmt_coord(left + 0.5 * plot_w) + "\" y=\"" + fmt_coord(height - 15) +
        "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">Small-cell density (SBS per km&#178;)</text>");
    add("<text class=\"axis-label\" x=\"20\" y=\"" + fmt_coord(top + 0.5 * plot_h) +
        "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 20 " +
        fmt_coord(top + 0.5 * plot_h) + ")\">Average sum rate (bit/s)</text>");

    for (Scheme scheme : schemes) {
        std::vector<const SweepRow*> series;
        for (const auto& row : result.rows)
            if (row.scheme == scheme)
                series.push_back(&row);
        std::stable_sort(series.begin(), series.end(),
                         [](const SweepRow* a, const SweepRow* b) { return a->density_per_km2 < b->density_per_km2; });
        const std::string colour = scheme_colour(scheme);
        add("<g class=\"series\" data-scheme=\"" + std::string(scheme_name(scheme)) + "\">");
        if (x_ticks.size() > 1) {
            std::string points;
            for (const SweepRow* row : series) {
                if (!points.empty())
                    points += ' ';
                points += fmt_coord(px(row->density_per_km2)) + "," + fmt_coord(py(row->stats.mean));
            }
            add("<polyline fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"2\" points=\"" + points + "\"/>");
        }
        for (const SweepRow* row : series) {
            const std::string x = fmt_coord(px(row->density_per_km2));
            add("<line class=\"ci-whisker\" stroke=\"" + colour + "\" x1=\"" + x + "\" y1=\"" +
                fmt_coord(py(row->stats.ci95_low)) + "\" x2=\"" + x + "\" y2=\"" + fmt_coord(py(row->stats.ci95_high)) +
                "\"/>");
            add("<circle class=\"marker\" fill=\"" + colour + "\" cx=\"" + x + "\" cy=\"" +
                fmt_coord(py(row->stats.mean)) + "\" r=\"3.5\"/>");
        }
        add("</g>");
    }

    add("<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">");
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        const double y = top + 10 + 20.0 * static_cast<double>(i);
        const double x = left + plot_w + 15;
        add("<line stroke=\"" + std::string(scheme_colour(schemes[i])) + "\" stroke-width=\"2\" x1=\"" +
            fmt_coord(x) + "\" y1=\"" + fmt_coord(y) + "\" x2=\"" + fmt_coord(x + 25) + "\" y2=\"" + fmt_coord(y) +
            "\"/>");
        add("<text class=\"legend-entry\" x=\"" + fmt_coord(x + 32) + "\" y=\"" + fmt_coord(y + 4) + "\">" +
            scheme_label(schemes[i]) + "</text>");
    }
    add("</g>");
    add("</svg>");
    return svg;
}

void render_plot(const SweepResult& result, const std::filesystem::path& path)
{
    write_file(path, render_svg(result));
}

} // namespace udnsim
