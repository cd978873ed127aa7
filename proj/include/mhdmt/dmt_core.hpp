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

#ifndef MHDMT_DMT_CORE_HPP
#define MHDMT_DMT_CORE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mhdmt/antenna_profile.hpp"
#include "mhdmt/diversity_value.hpp"

namespace mhdmt
{

/// Slope coefficients c_1 >= c_2 >= ... >= c_{n_min} >= 1 of the
/// diversity-multiplexing tradeoff of a product of Rayleigh hops. c_{k+1} is
/// the (negated) slope of the tradeoff on [k, k+1].
struct CoefficientVector
{
    std::vector<std::int64_t> c;
};

/// Piecewise-linear diversity-multiplexing tradeoff, stored as the integer
/// breakpoints (k, d(k)), k = 0..n_min. d is non-increasing, convex, and
/// d(n_min) = 0.
struct DmtCurve
{
    std::vector<std::pair<int, std::int64_t>> breakpoints;

    int n_min() const { return static_cast<int>(breakpoints.size()) - 1; }
    std::int64_t d(int k) const { return breakpoints[static_cast<std::size_t>(k)].second; }

    bool operator==(const DmtCurve &) const = default;
};

/// Flow thresholds p_0 >= p_1 >= ... >= p_{N-1}, with p_N = -infinity by
/// definition. The minus infinity is structural: minus_infinity(k) is true for
/// k >= N and p holds only the finite values.
struct FlowThresholds
{
    std::vector<std::int64_t> p; // p_0 .. p_{N-1}
    int hops = 0;                // N

    bool minus_infinity(int k) const { return k >= hops; }
};

/// Floor division with mathematical semantics for negative operands.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Slope coefficients of the tradeoff:
/// c_i = 1 - i + min_{k=1..N} floor((sum_{l=0..k} ordered[l] - i) / k).
/// Exact integer arithmetic throughout.
CoefficientVector coefficient_vector(const AntennaProfile &profile);

/// Thresholds above which the tradeoff coincides with the one of the ordered
/// length-(k+1) prefix: p_0 = ordered[0],
/// p_k = sum_{l=0..k} ordered[l] - k * ordered[k+1] for 1 <= k <= N-1.
FlowThresholds flow_thresholds(const AntennaProfile &profile);

/// d(k) = sum_{i=k+1..n_min} c_i for 0 <= k <= n_min; 0 at k = n_min;
/// +infinity for k > n_min (a flow above the channel rank cannot be
/// supported). Negative k is a usage error.
DiversityValue dmt_at_integer(const AntennaProfile &profile, int k);

/// All breakpoints (k, d(k)), k = 0..n_min.
DmtCurve dmt_curve(const AntennaProfile &profile);

/// Linear interpolation of the curve at real multiplexing gain r.
/// r outside [0, n_min] is a usage error, not a saturation.
double dmt_at_real(const DmtCurve &curve, double r);

/// Closed form for the symmetric chain (n, n, ..., n) with `hops` hops:
/// d(k) = (n-k)(n+1-k)/2 + a((a-1)*hops + 2b)/2 with a = floor((n-k)/hops)
/// and b = (n-k) mod hops. Exact integer result.
std::int64_t symmetric_dmt(int n, int hops, int k);

/// Single Rayleigh hop: d(k) = (n_tx - k)(n_rx - k), 0 <= k <= min(n_tx, n_rx).
std::int64_t rayleigh_dmt(int n_tx, int n_rx, int k);

} // namespace mhdmt

#endif
