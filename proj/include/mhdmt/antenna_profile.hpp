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

#ifndef MHDMT_ANTENNA_PROFILE_HPP
#define MHDMT_ANTENNA_PROFILE_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mhdmt
{

/// Antenna counts (n_0, ..., n_N) of an N-hop relay chain: n_0 at the source,
/// n_N at the destination, n_i at intermediate relay cluster i.
///
/// A profile is valid when it has at least two nodes (one hop) and every entry
/// is at least 1. Construction rejects anything else, so downstream code never
/// sees zero-antenna nodes.
class AntennaProfile
{
  public:
    /// Largest accepted antenna count per node. Keeps every partial sum and
    /// diversity value used by the exact arithmetic well inside 64-bit range.
    static constexpr int max_antennas = 1000000;

    explicit AntennaProfile(std::vector<int> nodes);
    AntennaProfile(std::initializer_list<int> nodes);

    const std::vector<int> &nodes() const { return nodes_; }
    int node(std::size_t i) const { return nodes_[i]; }
    std::size_t length() const { return nodes_.size(); }

    /// Number of hops N (= length - 1).
    int hops() const { return static_cast<int>(nodes_.size()) - 1; }

    /// Smallest antenna count over all nodes.
    int n_min() const;

    /// The nondecreasing permutation of the node counts.
    std::vector<int> ordered() const;

    bool operator==(const AntennaProfile &other) const { return nodes_ == other.nodes_; }
    bool operator!=(const AntennaProfile &other) const { return nodes_ != other.nodes_; }

    /// Renders as "(n_0,n_1,...,n_N)".
    std::string to_string() const;

  private:
    std::vector<int> nodes_;
};

} // namespace mhdmt

#endif
