// SPDX-License-Identifier: Apache-2.0
//
// mhdmt - diversity and outage analysis for MIMO multihop relay channels
// Copyright (C) 2026 mhdmt contributors
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

#include "mhdmt/dmt_core.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace mhdmt
{

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    assert(b > 0);
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0))
        --q;
    return q;
}

CoefficientVector coefficient_vector(const AntennaProfile &profile)
{
    const std::vector<int> ordered = profile.ordered();
    const int hops = profile.hops();
    const int n_min = ordered.front();

    // Prefix sums over the ordered profile: prefix[k] = sum_{l=0..k}.
    std::vector<std::int64_t> prefix(ordered.size());
    std::int64_t running = 0;
    for (std::size_t l = 0; l < ordered.size(); ++l)
    {
        running += ordered[l];
        prefix[l] = running;
    }

    CoefficientVector result;
    result.c.reserve(static_cast<std::size_t>(n_min));
    for (int i = 1; i <= n_min; ++i)
    {
        std::int64_t best = prefix[1] - i; // k = 1 term
        for (int k = 2; k <= hops; ++k)
        {
            const std::int64_t numerator = prefix[static_cast<std::size_t>(k)] - i;
            assert(numerator >= 0); // i <= n_min <= every partial sum
            const std::int64_t candidate = floor_div(numerator, k);
            if (candidate < best)
                best = candidate;
        }
        result.c.push_back(1 - i + best);
    }
    return result;
}

FlowThresholds flow_thresholds(const AntennaProfile &profile)
{
    const std::vector<int> ordered = profile.ordered();
    const int hops = profile.hops();

    FlowThresholds result;
    result.hops = hops;
    result.p.reserve(static_cast<std::size_t>(hops));
    result.p.push_back(ordered.front());
    std::int64_t prefix = ordered.front();
    for (int k = 1; k <= hops - 1; ++k)
    {
        prefix += ordered[static_cast<std::size_t>(k)];
        result.p.push_back(prefix - static_cast<std::int64_t>(k) * ordered[static_cast<std::size_t>(k) + 1]);
    }
    return result;
}

DiversityValue dmt_at_integer(const AntennaProfile &profile, int k)
{
    if (k < 0)
        throw std::invalid_argument("multiplexing gain k must be >= 0");
    const int n_min = profile.n_min();
    if (k > n_min)
        return DiversityValue::infinity();
    const CoefficientVector coeff = coefficient_vector(profile);
    std::int64_t d = 0;
    for (int i = k + 1; i <= n_min; ++i)
        d += coeff.c[static_cast<std::size_t>(i) - 1];
    return DiversityValue::of(d);
}

DmtCurve dmt_curve(const AntennaProfile &profile)
{
    const CoefficientVector coeff = coefficient_vector(profile);
    const int n_min = profile.n_min();

    DmtCurve curve;
    curve.breakpoints.resize(static_cast<std::size_t>(n_min) + 1);
    std::int64_t d = 0;
    curve.breakpoints[static_cast<std::size_t>(n_min)] = {n_min, 0};
    for (int k = n_min - 1; k >= 0; --k)
    {
        d += coeff.c[static_cast<std::size_t>(k)];
        curve.breakpoints[static_cast<std::size_t>(k)] = {k, d};
    }
    return curve;
}

double dmt_at_real(const DmtCurve &curve, double r)
{
    const int n_min = curve.n_min();
    if (!(r >= 0.0) || r > static_cast<double>(n_min))
        throw std::invalid_argument("multiplexing gain r outside [0, n_min]");

    int k = static_cast<int>(std::floor(r));
    if (k == n_min)
        return static_cast<double>(curve.d(n_min));
    const double frac = r - static_cast<double>(k);
    const double lo = static_cast<double>(curve.d(k));
    const double hi = static_cast<double>(curve.d(k + 1));
    return lo + frac * (hi - lo);
}

std::int64_t symmetric_dmt(int n, int hops, int k)
{
    if (n < 1 || hops < 1)
        throw std::invalid_argument("symmetric_dmt requires n >= 1 and hops >= 1");
    if (k < 0 || k > n)
        throw std::invalid_argument("symmetric_dmt requires 0 <= k <= n");

    const std::int64_t residual = n - k;
    const std::int64_t a = residual / hops;
    const std::int64_t b = residual % hops;
    // Both terms are integers: a(a-1) is even.
    return residual * (residual + 1) / 2 + (a * (a - 1) / 2) * hops + a * b;
}

std::int64_t rayleigh_dmt(int n_tx, int n_rx, int k)
{
    if (n_tx < 1 || n_rx < 1)
        throw std::invalid_argument("rayleigh_dmt requires positive antenna counts");
    if (k < 0 || k > std::min(n_tx, n_rx))
        throw std::invalid_argument("rayleigh_dmt requires 0 <= k <= min(n_tx, n_rx)");
    return static_cast<std::int64_t>(n_tx - k) * static_cast<std::int64_t>(n_rx - k);
}

} // namespace mhdmt
