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

#ifndef MHDMT_TESTS_ENUMERATE_PROFILES_HPP
#define MHDMT_TESTS_ENUMERATE_PROFILES_HPP

#include <vector>

namespace test_support
{

/// Calls fn(nodes) for every node vector with lengths 2..max_hops+1 and
/// entries in [1, max_entry], in odometer order.
template <typename Fn> void for_each_profile(int max_entry, int max_hops, Fn &&fn)
{
    for (int length = 2; length <= max_hops + 1; ++length)
    {
        std::vector<int> nodes(static_cast<std::size_t>(length), 1);
        while (true)
        {
            fn(nodes);
            int pos = length - 1;
            while (pos >= 0 && nodes[static_cast<std::size_t>(pos)] == max_entry)
                nodes[static_cast<std::size_t>(pos--)] = 1;
            if (pos < 0)
                break;
            ++nodes[static_cast<std::size_t>(pos)];
        }
    }
}

} // namespace test_support

#endif
