// SPDX-License-Identifier: Apache-2.0
//
// isac-eo: stochastic ISAC channel simulation with environment-object reflections
// Copyright (C) 2026 The isac-eo Authors
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
// ------------------------------------------------------------------------

#ifndef ISAC_EO_SCATTERER_POWER_HPP
#define ISAC_EO_SCATTERER_POWER_HPP

// Per-scatterer share of the measured target-channel power, summed over receive angles:
//
//   PP_scatterer = sum_i P_scatterer,i / sum_i P_tar,i
//
// Input is a comma-separated table with header `angle_deg,<scatterer names...>,target_total`
// and one row per measured angle, linear power units. Blank lines and lines starting with '#'
// are ignored.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace isac_eo
{

struct ScattererPowerTable
{
    std::vector<std::string> scatterers;
    std::vector<double> angles_deg;
    std::vector<std::vector<double>> powers; // [angle][scatterer]
    std::vector<double> target_totals;       // [angle]

    std::size_t num_angles() const { return angles_deg.size(); }
};

struct ScattererShare
{
    std::string scatterer;
    double fraction = 0.0;
};

// Relative tolerance for target_total == sum of scatterer powers on ingest
inline constexpr double target_total_tolerance = 1e-6;

namespace detail
{
inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Splits one CSV line; each field comes with its 1-based starting column
inline std::vector<std::pair<std::string_view, std::size_t>> split_csv(std::string_view line)
{
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t start = 0;
    while (true)
    {
        const auto comma = line.find(',', start);
        const auto end = comma == std::string_view::npos ? line.size() : comma;
        out.emplace_back(trim(line.substr(start, end - start)), start + 1);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}
} // namespace detail

inline ScattererPowerTable parse_scatterer_power_table(std::istream &in, const std::string &source = "<input>")
{
    ScattererPowerTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n_fields = 0;

    while (std::getline(in, line))
    {
        ++line_no;
        const std::string_view content = detail::trim(line);
        if (content.empty() || content.front() == '#')
            continue;
        const auto fields = detail::split_csv(line);

        if (!have_header)
        {
            if (fields.size() < 3)
                throw ParseError(source, line_no, 0,
                                 "header must be 'angle_deg,<scatterer names...>,target_total' with at least one scatterer");
            if (fields.front().first != "angle_deg")
                throw ParseError(source, line_no, fields.front().second, "first header column must be 'angle_deg'");
            if (fields.back().first != "target_total")
                throw ParseError(source, line_no, fields.back().second, "last header column must be 'target_total'");
            for (std::size_t i = 1; i + 1 < fields.size(); ++i)
            {
                if (fields[i].first.empty())
                    throw ParseError(source, line_no, fields[i].second, "empty scatterer name");
                const std::string name(fields[i].first);
                if (std::find(table.scatterers.begin(), table.scatterers.end(), name) != table.scatterers.end())
                    throw ParseError(source, line_no, fields[i].second, "duplicate scatterer name '" + name + "'");
                table.scatterers.push_back(name);
            }
            n_fields = fields.size();
            have_header = true;
            continue;
        }

        if (fields.size() != n_fields)
            throw ParseError(source, line_no, 0,
                             "expected " + std::to_string(n_fields) + " fields, found " + std::to_string(fields.size()));

        std::vector<double> values(n_fields);
        for (std::size_t i = 0; i < n_fields; ++i)
        {
            const auto [text, column] = fields[i];
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
                throw ParseError(source, line_no, column, "invalid number '" + std::string(text) + "'");
            if (i > 0 && v < 0.0)
                throw ParseError(source, line_no, column, "negative power '" + std::string(text) + "'");
            values[i] = v;
        }

        double sum = 0.0;
        for (std::size_t i = 1; i + 1 < n_fields; ++i)
            sum += values[i];
        const double target = values.back();
        if (std::abs(target - sum) > target_total_tolerance * std::max(std::abs(target), std::abs(sum)))
            throw ParseError(source, line_no, fields.back().second,
                             "target_total does not equal the sum of the scatterer powers");

        table.angles_deg.push_back(values.front());
        table.powers.emplace_back(values.begin() + 1, values.end() - 1);
        table.target_totals.push_back(target);
    }

    if (!have_header)
        throw ParseError(source, 0, 0, "missing header row");
    if (table.angles_deg.empty())
        throw ParseError(source, 0, 0, "no data rows");
    return table;
}

inline ScattererPowerTable parse_scatterer_power_table(const std::string &text, const std::string &source)
{
    std::istringstream in(text);
    return parse_scatterer_power_table(in, source);
}

inline ScattererPowerTable load_scatterer_power_table(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, 0, "cannot open file");
    return parse_scatterer_power_table(in, path);
}

inline std::vector<ScattererShare> power_proportion(const ScattererPowerTable &table)
{
    double target = 0.0;
    for (double p : table.target_totals)
        target += p;
    if (table.scatterers.empty() || !(target > 0.0))
        throw EmptyInput("power_proportion: target channel carries no power.");

    std::vector<ScattererShare> out;
    out.reserve(table.scatterers.size());
    for (std::size_t j = 0; j < table.scatterers.size(); ++j)
    {
        double p = 0.0;
        for (const auto &row : table.powers)
            p += row.at(j);
        out.push_back({table.scatterers[j], p / target});
    }
    return out;
}

} // namespace isac_eo

#endif
