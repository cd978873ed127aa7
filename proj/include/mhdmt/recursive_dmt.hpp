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

#ifndef MHDMT_RECURSIVE_DMT_HPP
#define MHDMT_RECURSIVE_DMT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "mhdmt/antenna_profile.hpp"
#include "mhdmt/diversity_value.hpp"

namespace mhdmt
{

/// Trace of one two-segment split: the flow j through the cut that attains
/// d(k) = min_j d_left(j) + d_right(k).
struct FlowDecomposition
{
    int k = 0;
    int split_index = 0; // cut after node split_index
    int optimal_j = 0;
    DiversityValue left_cost;
    DiversityValue right_cost;

    DiversityValue total() const { return left_cost + right_cost; }
};

/// Flow-cost recursion computing d(k) as the cheapest way to limit the
/// source-destination flow to k. Entirely independent of the closed-form
/// route in dmt_core, which makes the two mutual full-coverage oracles.
///
/// The recursion: limiting the flow to k costs the disconnection cost of the
/// channel with k antennas removed everywhere; disconnecting a chain means
/// allowing j flows up to the last relay and disconnecting the final
/// (j, n_N) hop, minimized over j.
///
/// Instances are not thread safe (each keeps a private memo table); use one
/// instance per thread, or the thread-local convenience wrappers below.
class RecursiveDmt
{
  public:
    /// d(k) via the recursion; +infinity when k exceeds the smallest node
    /// count. Negative k is a usage error.
    DiversityValue dmt(const AntennaProfile &profile, int k);

    /// Evaluates the split form at an arbitrary cut 1 <= split_index <= N-1:
    /// min over j in [k, min over left nodes] of
    /// d(left, j) + d((j, right...), k), with d((0, ...), 0) = 0 and
    /// d((0, ...), k>0) = +infinity.
    DiversityValue split(const AntennaProfile &profile, int split_index, int k);

    /// Same as split() but reports the minimizing flow and both costs.
    FlowDecomposition decompose(const AntennaProfile &profile, int split_index, int k);

    /// True iff the recursion and the closed form agree at every integer
    /// multiplexing gain 0..n_min.
    bool cross_check(const AntennaProfile &profile);

    std::size_t memo_size() const { return memo_.size(); }

  private:
    std::int64_t disconnection_cost(std::vector<int> ordered);

    std::map<std::vector<int>, std::int64_t> memo_;
};

/// Convenience wrappers over a thread-local RecursiveDmt instance.
DiversityValue dmt_recursive(const AntennaProfile &profile, int k);
bool cross_check(const AntennaProfile &profile);

} // namespace mhdmt

#endif
