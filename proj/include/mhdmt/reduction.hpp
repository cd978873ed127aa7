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

#ifndef MHDMT_REDUCTION_HPP
#define MHDMT_REDUCTION_HPP

#include "mhdmt/antenna_profile.hpp"

namespace mhdmt
{

/// Minimal-form summary of a channel profile.
struct MinimalFormReport
{
    AntennaProfile minimal_horizontal; // ordered, length order_nstar + 1
    int order_nstar;                   // N*, bounded by the smallest node count
    int min_relay_antennas;            // n_bar, smallest per-relay count keeping the tradeoff
    AntennaProfile minimal_vertical;   // ordered prefix padded with n_bar to the input length
};

/// True iff the channel keeps its tradeoff when truncated to the ordered
/// prefix of length k+1: k * (ordered[k+1] + 1) >= sum_{l=0..k} ordered[l].
/// k = N is trivially true (the channel itself). k outside [1, N] is an error.
bool is_reducible_to_length(const AntennaProfile &profile, int k);

/// Shortest ordered prefix with the same tradeoff; the prefix ending at the
/// smallest k for which is_reducible_to_length holds.
AntennaProfile minimal_horizontal_form(const AntennaProfile &profile);

/// n_bar = ceil(S / N* - 1) where S sums the minimal horizontal form and N*
/// is its hop count. Relays with more antennas only harden the relayed noise.
int min_relay_antennas(const AntennaProfile &profile);

/// Assembles the horizontal form, order, n_bar and the vertical form.
MinimalFormReport minimal_form_report(const AntennaProfile &profile);

/// Two profiles are equivalent iff their minimal horizontal forms are equal.
bool are_equivalent(const AntennaProfile &a, const AntennaProfile &b);

} // namespace mhdmt

#endif
