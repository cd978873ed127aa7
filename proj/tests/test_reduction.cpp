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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "mhdmt/dmt_core.hpp"
#include "mhdmt/reduction.hpp"
#include "support/enumerate_profiles.hpp"

using namespace mhdmt;
using test_support::for_each_profile;

TEST_CASE("reducibility condition examples")
{
    CHECK(is_reducible_to_length(AntennaProfile{3, 2, 2}, 1));
    CHECK_FALSE(is_reducible_to_length(AntennaProfile{2, 2, 2}, 1));
    CHECK(is_reducible_to_length(AntennaProfile{1, 4, 1}, 1));
    CHECK(is_reducible_to_length(AntennaProfile{2, 2, 2}, 2)); // the channel itself
    CHECK_THROWS_AS(is_reducible_to_length(AntennaProfile{2, 2, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_reducible_to_length(AntennaProfile{2, 2, 2}, 3), std::invalid_argument);
}

TEST_CASE("minimal horizontal forms")
{
    CHECK(minimal_horizontal_form(AntennaProfile{3, 2, 2}) == AntennaProfile{2, 2});
    CHECK(minimal_horizontal_form(AntennaProfile{4, 2, 2, 2}) == AntennaProfile{2, 2, 2});
    CHECK(minimal_horizontal_form(AntennaProfile{2, 2, 2, 2}) == AntennaProfile{2, 2, 2});
    CHECK(minimal_horizontal_form(AntennaProfile{8, 2, 2, 2}) == AntennaProfile{2, 2, 2});

    // Source with one antenna: always collapses to (1, smallest other count).
    CHECK(minimal_horizontal_form(AntennaProfile{1, 4, 1}) == AntennaProfile{1, 1});
    CHECK(minimal_horizontal_form(AntennaProfile{1, 3, 5, 2}) == AntennaProfile{1, 2});
    CHECK(minimal_horizontal_form(AntennaProfile{1, 7, 7, 7, 7}) == AntennaProfile{1, 7});
}

TEST_CASE("minimum relay antennas")
{
    CHECK(min_relay_antennas(AntennaProfile{3, 1, 4, 2}) == 2);
    CHECK(min_relay_antennas(AntennaProfile{1, 4, 1}) == 1);
    CHECK(min_relay_antennas(AntennaProfile{2, 2, 2}) == 2);
    // ceil(S/N* - 1) for a single-hop minimal form: relays would need more
    // antennas than the endpoints to stay transparent.
    CHECK(min_relay_antennas(AntennaProfile{2, 2}) == 3);
    CHECK(dmt_curve(AntennaProfile{2, 2, 3}) == dmt_curve(AntennaProfile{2, 2}));
    CHECK(dmt_curve(AntennaProfile{2, 2, 2}) != dmt_curve(AntennaProfile{2, 2}));
}

TEST_CASE("minimal form reports")
{
    const MinimalFormReport r141 = minimal_form_report(AntennaProfile{1, 4, 1});
    CHECK(r141.minimal_horizontal == AntennaProfile{1, 1});
    CHECK(r141.order_nstar == 1);
    CHECK(r141.min_relay_antennas == 1);
    CHECK(r141.minimal_vertical == AntennaProfile{1, 1, 1});

    const MinimalFormReport r3142 = minimal_form_report(AntennaProfile{3, 1, 4, 2});
    CHECK(r3142.minimal_horizontal == AntennaProfile{1, 2});
    CHECK(r3142.order_nstar == 1);
    CHECK(r3142.min_relay_antennas == 2);
    CHECK(r3142.minimal_vertical == AntennaProfile{1, 2, 2, 2});

    const MinimalFormReport r22 = minimal_form_report(AntennaProfile{2, 2});
    CHECK(r22.minimal_horizontal == AntennaProfile{2, 2});
    CHECK(r22.order_nstar == 1);
    CHECK(r22.minimal_vertical == AntennaProfile{2, 2});
}

TEST_CASE("equivalence examples")
{
    CHECK(are_equivalent(AntennaProfile{3, 1, 4, 2}, AntennaProfile{1, 2, 3, 4}));
    CHECK_FALSE(are_equivalent(AntennaProfile{2, 2}, AntennaProfile{2, 2, 2}));
    CHECK(are_equivalent(AntennaProfile{1, 4, 1}, AntennaProfile{1, 1, 1}));
    CHECK(are_equivalent(AntennaProfile{2, 2}, AntennaProfile{2, 2}));
}

TEST_CASE("minimal forms are idempotent and order-bounded")
{
    for_each_profile(5, 4, [](const std::vector<int> &nodes) {
        const AntennaProfile profile(nodes);
        const MinimalFormReport report = minimal_form_report(profile);
        CHECK(minimal_horizontal_form(report.minimal_horizontal) == report.minimal_horizontal);
        CHECK(report.order_nstar <= profile.ordered().front());
        CHECK(report.minimal_horizontal.length() ==
              static_cast<std::size_t>(report.order_nstar) + 1);
        CHECK(report.minimal_vertical.length() == profile.length());
    });
}

TEST_CASE("every admissible truncation and the vertical form keep the tradeoff")
{
    for_each_profile(5, 4, [](const std::vector<int> &nodes) {
        const AntennaProfile profile(nodes);
        const DmtCurve curve = dmt_curve(profile);
        const std::vector<int> ordered = profile.ordered();

        for (int k = 1; k < profile.hops(); ++k)
        {
            if (!is_reducible_to_length(profile, k))
                continue;
            const AntennaProfile prefix(std::vector<int>(ordered.begin(), ordered.begin() + k + 1));
            CHECK(dmt_curve(prefix) == curve);
        }
        CHECK(dmt_curve(minimal_form_report(profile).minimal_vertical) == curve);
    });
}

TEST_CASE("equivalence classes are exactly the tradeoff classes")
{
    // Same minimal form <=> same curve, cross-validated with no shared code
    // path: group every enumerated profile by its minimal form and check the
    // grouping is a bijection onto the distinct curves.
    std::map<std::vector<int>, std::set<std::vector<std::int64_t>>> curves_by_form;
    std::map<std::vector<std::int64_t>, std::set<std::vector<int>>> forms_by_curve;

    for_each_profile(5, 4, [&](const std::vector<int> &nodes) {
        const AntennaProfile profile(nodes);
        const std::vector<int> form = minimal_horizontal_form(profile).nodes();
        std::vector<std::int64_t> curve;
        for (const auto &[k, d] : dmt_curve(profile).breakpoints)
            curve.push_back(d);
        curves_by_form[form].insert(curve);
        forms_by_curve[curve].insert(form);
    });

    for (const auto &[form, curves] : curves_by_form)
        CHECK(curves.size() == 1);
    for (const auto &[curve, forms] : forms_by_curve)
        CHECK(forms.size() == 1);

    // Spot-check the pairwise statement directly.
    const std::vector<AntennaProfile> sample = {
        AntennaProfile{2, 2},  AntennaProfile{2, 2, 2},    AntennaProfile{3, 2, 2},
        AntennaProfile{1, 4, 1}, AntennaProfile{3, 1, 4, 2}, AntennaProfile{1, 2, 3, 4},
        AntennaProfile{4, 2, 2, 2}};
    for (const AntennaProfile &a : sample)
        for (const AntennaProfile &b : sample)
            CHECK(are_equivalent(a, b) == (dmt_curve(a) == dmt_curve(b)));
}
