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

#include "udnsim/error.hpp"
#include "udnsim/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace udnsim;

namespace {

SweepResult fake_result(std::vector<double> densities)
{
    SweepResult result;
    double base = 1e9;
    for (double d : densities) {
        for (auto s : {Scheme::OmaHd, Scheme::NomaHd, Scheme::NomaFd}) {
            const double mean = base * (1.0 + static_cast<int>(s)) * (1.0 + d / 100.0);
            result.rows.push_back({d, s, 10, Summary{mean, 0.1 * mean, 0.95 * mean, 1.05 * mean}});
        }
    }
    return result;
}

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("csv")
{
    CHECK(format_csv(SweepResult{}) == std::string(kCsvHeader) + "\n");

    const auto result = fake_result({10.0, 25.0});
    const std::string csv = format_csv(result);
    CHECK(count(csv, "\n") == 7);
    CHECK(csv.rfind(kCsvHeader, 0) == 0);
    CHECK(csv.find("\n10,OMA_HD,10,1.1e+09,1.1e+08,1.045e+09,1.155e+09\n") != std::string::npos);
    CHECK(csv.find("\n25,NOMA_FD,10,3.75e+09,") != std::string::npos);
    CHECK(format_csv(result) == csv);

    SUBCASE("row order does not depend on input order")
    {
        auto shuffled = result;
        std::reverse(shuffled.rows.begin(), shuffled.rows.end());
        CHECK(format_csv(shuffled) == csv);
    }

    SUBCASE("file output")
    {
        const auto dir = std::filesystem::temp_directory_path() / "udnsim_report_test";
        std::filesystem::create_directories(dir);
        write_csv(result, dir / "a.csv");
        CHECK(slurp(dir / "a.csv") == csv);
        try {
            write_csv(result, dir / "missing" / "b.csv");
            FAIL("expected OutputError");
        } catch (const OutputError& e) {
            CHECK(std::string(e.what()).find("b.csv") != std::string::npos);
        }
        std::filesystem::remove_all(dir);
    }
}

TEST_CASE("svg")
{
    CHECK(scheme_label(Scheme::NomaFd) == "NOMA-FD");
    CHECK(scheme_label(Scheme::OmaHd) == "OMA-HD");
    CHECK_THROWS_AS(render_svg(SweepResult{}), InvalidParameter);

    const auto result = fake_result({10.0, 50.0, 200.0});
    const std::string svg = render_svg(result);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg xmlns=") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<polyline") == 3);
    CHECK(count(svg, "class=\"legend-entry\"") == 3);
    CHECK(count(svg, "class=\"marker\"") == result.rows.size());
    CHECK(count(svg, "class=\"ci-whisker\"") == result.rows.size());
    CHECK(svg.find("NOMA-HD") != std::string::npos);
    CHECK(render_svg(result) == svg);

    SUBCASE("higher rates plot higher")
    {
        // markers come grouped by scheme, densities ascending within each group
        std::regex re("<circle class=\"marker\" fill=\"[^\"]*\" cx=\"([0-9.]+)\" cy=\"([0-9.]+)\"");
        std::vector<double> ys;
        for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
            ys.push_back(std::stod((*it)[2]));
        REQUIRE(ys.size() == 9);
        CHECK(ys[0] > ys[3]);
        CHECK(ys[3] > ys[6]);
        CHECK(ys[0] > ys[1]);
    }

    SUBCASE("single density draws markers only")
    {
        const std::string one = render_svg(fake_result({100.0}));
        CHECK(count(one, "<polyline") == 0);
        CHECK(count(one, "class=\"marker\"") == 3);
    }

    SUBCASE("unwritable path")
    {
        const auto bad = std::filesystem::temp_directory_path() / "udnsim_no_such_dir" / "p.svg";
        CHECK_THROWS_AS(render_plot(result, bad), OutputError);
    }
}
