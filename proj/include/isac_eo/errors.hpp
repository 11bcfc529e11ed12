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

#ifndef ISAC_EO_ERRORS_HPP
#define ISAC_EO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isac_eo
{

// Reflector placement that admits no single-bounce specular path
class InfeasibleGeometry : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation (e.g. incidence angle)
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// Tap sets that cannot be combined with the requested power split
class DegenerateInput : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Metric requested on an empty or all-zero input
class EmptyInput : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Malformed configuration or data file; carries 1-based line/column when known
class ParseError : public std::runtime_error
{
  public:
    ParseError(const std::string &source, std::size_t line, std::size_t column, const std::string &what)
        : std::runtime_error(format(source, line, column, what)), line_(line), column_(column)
    {
    }

    explicit ParseError(const std::string &what) : std::runtime_error(what) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    static std::string format(const std::string &source, std::size_t line, std::size_t column, const std::string &what)
    {
        std::string s = source;
        if (line != 0)
            s += ":" + std::to_string(line);
        if (column != 0)
            s += ":" + std::to_string(column);
        return s + ": " + what;
    }

    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

} // namespace isac_eo

#endif
