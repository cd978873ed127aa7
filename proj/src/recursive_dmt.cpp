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

#include "mhdmt/recursive_dmt.hpp"

#include <algorithm>
#include <stdexcept>

#include "mhdmt/dmt_core.hpp"

namespace mhdmt
{

namespace
{
// d(k) of a two-node (a, b) segment under the flow conventions: 0-antenna
// segments cost nothing at zero flow and are unsupportable otherwise.
DiversityValue segment_cost(int a, int b, int k)
{
    if (a == 0)
        return k == 0 ? DiversityValue::of(0) : DiversityValue::infinity();
    if (k > std::min(a, b))
        return DiversityValue::infinity();
    return DiversityValue::of(rayleigh_dmt(a, b, k));
}

std::vector<int> shifted(const std::vector<int> &nodes, int k)
{
    std::vector<int> out(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out[i] = nodes[i] - k;
    return out;
}
} // namespace

// Disconnection cost d(0) of a sorted profile with all entries >= 1.
// The chain is cut after the last relay: allowing j flows up to there costs
// d_left(j), and killing the remaining (j, n_N) hop costs j * n_N.
std::int64_t RecursiveDmt::disconnection_cost(std::vector<int> ordered)
{
    if (ordered.size() == 2)
        return static_cast<std::int64_t>(ordered[0]) * ordered[1];

    const auto hit = memo_.find(ordered);
    if (hit != memo_.end())
        return hit->second;

    const int last = ordered.back();
    std::vector<int> left(ordered.begin(), ordered.end() - 1); // still sorted
    const int left_min = left.front();

    std::int64_t best = disconnection_cost(left); // j = 0: kill the left segment
    for (int j = 1; j <= left_min; ++j)
    {
        const std::int64_t left_cost =
            (j == left_min) ? 0 : disconnection_cost(shifted(left, j));
        const std::int64_t total = left_cost + static_cast<std::int64_t>(j) * last;
        if (total < best)
            best = total;
    }

    memo_.emplace(std::move(ordered), best);
    return best;
}

DiversityValue RecursiveDmt::dmt(const AntennaProfile &profile, int k)
{
    if (k < 0)
        throw std::invalid_argument("multiplexing gain k must be >= 0");
    std::vector<int> ordered = profile.ordered();
    const int n_min = ordered.front();
    if (k > n_min)
        return DiversityValue::infinity();
    if (k == n_min)
        return DiversityValue::of(0); // shifting by k empties a node
    if (k > 0)
        ordered = shifted(ordered, k);
    return DiversityValue::of(disconnection_cost(std::move(ordered)));
}

DiversityValue RecursiveDmt::split(const AntennaProfile &profile, int split_index, int k)
{
    return decompose(profile, split_index, k).total();
}

FlowDecomposition RecursiveDmt::decompose(const AntennaProfile &profile, int split_index, int k)
{
    const int hops = profile.hops();
    if (split_index < 1 || split_index > hops - 1)
        throw std::invalid_argument("split index must be in [1, hops - 1]");
    if (k < 0)
        throw std::invalid_argument("multiplexing gain k must be >= 0");

    const std::vector<int> &nodes = profile.nodes();
    const AntennaProfile left(std::vector<int>(nodes.begin(), nodes.begin() + split_index + 1));
    const std::vector<int> tail(nodes.begin() + split_index + 1, nodes.end());

    FlowDecomposition best;
    best.k = k;
    best.split_index = split_index;
    best.optimal_j = -1;
    best.left_cost = DiversityValue::infinity();
    best.right_cost = DiversityValue::infinity();

    const int left_min = left.n_min();
    for (int j = k; j <= left_min; ++j)
    {
        const DiversityValue left_cost = dmt(left, j);

        DiversityValue right_cost;
        if (j == 0)
        {
            right_cost = (k == 0) ? DiversityValue::of(0) : DiversityValue::infinity();
        }
        else if (tail.size() == 1)
        {
            right_cost = segment_cost(j, tail.front(), k);
        }
        else
        {
            std::vector<int> right_nodes;
            right_nodes.reserve(tail.size() + 1);
            right_nodes.push_back(j);
            right_nodes.insert(right_nodes.end(), tail.begin(), tail.end());
            right_cost = dmt(AntennaProfile(std::move(right_nodes)), k);
        }

        const DiversityValue total = left_cost + right_cost;
        if (total < best.total() || best.optimal_j < 0)
        {
            best.optimal_j = j;
            best.left_cost = left_cost;
            best.right_cost = right_cost;
        }
    }
    return best;
}

bool RecursiveDmt::cross_check(const AntennaProfile &profile)
{
    const int n_min = profile.n_min();
    for (int k = 0; k <= n_min; ++k)
        if (dmt(profile, k) != dmt_at_integer(profile, k))
            return false;
    return true;
}

DiversityValue dmt_recursive(const AntennaProfile &profile, int k)
{
    thread_local RecursiveDmt instance;
    return instance.dmt(profile, k);
}

bool cross_check(const AntennaProfile &profile)
{
    thread_local RecursiveDmt instance;
    return instance.cross_check(profile);
}

} // namespace mhdmt
