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

#ifndef MHDMT_DIVERSITY_VALUE_HPP
#define MHDMT_DIVERSITY_VALUE_HPP

#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>

namespace mhdmt
{

/// Diversity gain extended with +infinity, the cost of an unsupportable flow.
///
/// The infinity is a real sentinel, not a large integer: addition and min
/// follow min-plus rules (inf + x = inf; min picks the finite branch unless
/// both are infinite), which is exactly what the flow recursion needs.
class DiversityValue
{
  public:
    constexpr DiversityValue() = default;

    static constexpr DiversityValue infinity()
    {
        DiversityValue v;
        v.infinite_ = true;
        return v;
    }

    static constexpr DiversityValue of(std::int64_t value)
    {
        DiversityValue v;
        v.value_ = value;
        return v;
    }

    constexpr bool is_infinite() const { return infinite_; }

    std::int64_t value() const
    {
        assert(!infinite_ && "value() on infinite diversity");
        return value_;
    }

    friend constexpr DiversityValue operator+(DiversityValue a, DiversityValue b)
    {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return of(a.value_ + b.value_);
    }

    friend constexpr bool operator==(DiversityValue a, DiversityValue b)
    {
        if (a.infinite_ != b.infinite_)
            return false;
        return a.infinite_ || a.value_ == b.value_;
    }

    friend constexpr bool operator!=(DiversityValue a, DiversityValue b) { return !(a == b); }

    friend constexpr bool operator<(DiversityValue a, DiversityValue b)
    {
        if (a.infinite_)
            return false;
        if (b.infinite_)
            return true;
        return a.value_ < b.value_;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

constexpr DiversityValue min(DiversityValue a, DiversityValue b) { return b < a ? b : a; }

inline std::ostream &operator<<(std::ostream &os, DiversityValue v) { return os << v.to_string(); }

} // namespace mhdmt

#endif
