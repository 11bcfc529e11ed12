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

#ifndef ISAC_EO_RANDOM_HPP
#define ISAC_EO_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace isac_eo
{

// Seeded random stream. The engine is std::mt19937_64; the variate transforms are written out
// here because the std:: distributions are implementation-defined and would break
// bit-reproducibility across standard libraries.
class RandomStream
{
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // Independent stream for one Monte Carlo drop, a pure function of (master seed, drop index)
    static RandomStream for_drop(std::uint64_t master_seed, std::uint64_t drop_index)
    {
        return RandomStream(splitmix64(master_seed) ^ splitmix64(drop_index + 0x632be59bd9b4e019ULL));
    }

    // [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // (0, 1]
    double uniform_open_zero() { return 1.0 - uniform(); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // (-pi, pi]
    double phase() { return std::numbers::pi - 2.0 * std::numbers::pi * uniform(); }

    // Box-Muller, one variate per call
    double normal()
    {
        const double r = std::sqrt(-2.0 * std::log(uniform_open_zero()));
        return r * std::cos(2.0 * std::numbers::pi * uniform());
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // +1 or -1 with equal probability
    double sign() { return (engine_() >> 63) != 0 ? 1.0 : -1.0; }

  private:
    static std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace isac_eo

#endif
