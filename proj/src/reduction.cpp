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

#include "mhdmt/reduction.hpp"

#include <stdexcept>

namespace mhdmt
{

namespace
{
// Reducibility of the ordered profile to its length-(k+1) prefix. All
// reduction logic runs on the ordered profile; original orderings only
// matter for user-facing echoes.
bool reducible_ordered(const std::vector<int> &ordered, int k)
{
    const int hops = static_cast<int>(ordered.size()) - 1;
    if (k == hops)
        return true; // the channel itself
    std::int64_t prefix = 0;
    for (int l = 0; l <= k; ++l)
        prefix += ordered[static_cast<std::size_t>(l)];
    return static_cast<std::int64_t>(k) * (ordered[static_cast<std::size_t>(k) + 1] + 1) >= prefix;
}

int smallest_reducible_length(const std::vector<int> &ordered)
{
    const int hops = static_cast<int>(ordered.size()) - 1;
    for (int k = 1; k < hops; ++k)
        if (reducible_ordered(ordered, k))
            return k;
    return hops;
}
} // namespace

bool is_reducible_to_length(const AntennaProfile &profile, int k)
{
    if (k < 1 || k > profile.hops())
        throw std::invalid_argument("reduction length k must be in [1, hops]");
    return reducible_ordered(profile.ordered(), k);
}

AntennaProfile minimal_horizontal_form(const AntennaProfile &profile)
{
    const std::vector<int> ordered = profile.ordered();
    const int order = smallest_reducible_length(ordered);
    return AntennaProfile(std::vector<int>(ordered.begin(), ordered.begin() + order + 1));
}

int min_relay_antennas(const AntennaProfile &profile)
{
    const AntennaProfile minimal = minimal_horizontal_form(profile);
    std::int64_t sum = 0;
    for (int n : minimal.nodes())
        sum += n;
    const std::int64_t order = minimal.hops();
    // ceil(sum / order - 1) = ceil_div(sum, order) - 1, exactly in integers.
    return static_cast<int>((sum + order - 1) / order - 1);
}

MinimalFormReport minimal_form_report(const AntennaProfile &profile)
{
    AntennaProfile horizontal = minimal_horizontal_form(profile);
    const int order = horizontal.hops();
    const int n_bar = min_relay_antennas(profile);

    std::vector<int> vertical = horizontal.nodes();
    vertical.resize(profile.length(), n_bar);

    return MinimalFormReport{horizontal, order, n_bar, AntennaProfile(std::move(vertical))};
}

bool are_equivalent(const AntennaProfile &a, const AntennaProfile &b)
{
    return minimal_horizontal_form(a) == minimal_horizontal_form(b);
}

} // namespace mhdmt
