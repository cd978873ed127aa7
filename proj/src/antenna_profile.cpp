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

#include "mhdmt/antenna_profile.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mhdmt
{

namespace
{
void validate(const std::vector<int> &nodes)
{
    if (nodes.size() < 2)
        throw std::invalid_argument("antenna profile needs at least two nodes (one hop)");
    for (int n : nodes)
    {
        if (n < 1)
            throw std::invalid_argument("antenna profile entries must be >= 1");
        if (n > AntennaProfile::max_antennas)
            throw std::invalid_argument("antenna profile entries must be <= 1000000");
    }
}
} // namespace

AntennaProfile::AntennaProfile(std::vector<int> nodes) : nodes_(std::move(nodes)) { validate(nodes_); }

AntennaProfile::AntennaProfile(std::initializer_list<int> nodes) : nodes_(nodes) { validate(nodes_); }

int AntennaProfile::n_min() const { return *std::min_element(nodes_.begin(), nodes_.end()); }

std::vector<int> AntennaProfile::ordered() const
{
    std::vector<int> sorted = nodes_;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

std::string AntennaProfile::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < nodes_.size(); ++i)
    {
        if (i)
            os << ',';
        os << nodes_[i];
    }
    os << ')';
    return os.str();
}

} // namespace mhdmt
