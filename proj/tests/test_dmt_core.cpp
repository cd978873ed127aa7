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

#include <algorithm>
#include <random>

#include "mhdmt/dmt_core.hpp"
#include "support/enumerate_profiles.hpp"

using namespace mhdmt;
using test_support::for_each_profile;

TEST_CASE("profile construction rejects invalid inputs")
{
    CHECK_THROWS_AS(AntennaProfile{std::vector<int>{2}}, std::invalid_argument);
    CHECK_THROWS_AS((AntennaProfile{2, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS((AntennaProfile{2, -1}), std::invalid_argument);
    CHECK_THROWS_AS((AntennaProfile{2, 2000000}), std::invalid_argument);

    const AntennaProfile p{3, 1, 4, 2};
    CHECK(p.hops() == 3);
    CHECK(p.n_min() == 1);
    CHECK(p.ordered() == std::vector<int>{1, 2, 3, 4});
    CHECK(p.to_string() == "(3,1,4,2)");
}

TEST_CASE("floor_div is the mathematical floor")
{
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(-6, 3) == -2);
    CHECK(floor_div(0, 5) == 0);
}

TEST_CASE("coefficient vector examples")
{
    CHECK(coefficient_vector(AntennaProfile{2, 2}).c == std::vector<std::int64_t>{3, 1});
    CHECK(coefficient_vector(AntennaProfile{2, 2, 2}).c == std::vector<std::int64_t>{2, 1});
    CHECK(coefficient_vector(AntennaProfile{3, 1, 4, 2}).c == std::vector<std::int64_t>{2});
}

TEST_CASE("single hop coefficients match the m+n+1-2i closed form")
{
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b)
        {
            const CoefficientVector coeff = coefficient_vector(AntennaProfile{a, b});
            const int n_min = std::min(a, b);
            REQUIRE(coeff.c.size() == static_cast<std::size_t>(n_min));
            for (int i = 1; i <= n_min; ++i)
                CHECK(coeff.c[static_cast<std::size_t>(i) - 1] == a + b + 1 - 2 * i);
        }
}

TEST_CASE("flow threshold examples")
{
    const FlowThresholds t1 = flow_thresholds(AntennaProfile{2, 2, 2});
    CHECK(t1.p == std::vector<std::int64_t>{2, 2});
    CHECK(t1.minus_infinity(2));
    CHECK_FALSE(t1.minus_infinity(1));

    const FlowThresholds t2 = flow_thresholds(AntennaProfile{1, 2, 3, 4});
    CHECK(t2.p == std::vector<std::int64_t>{1, 0, -2});
    CHECK(t2.minus_infinity(3));

    const FlowThresholds t3 = flow_thresholds(AntennaProfile{2, 2});
    CHECK(t3.p == std::vector<std::int64_t>{2});
    CHECK(t3.minus_infinity(1));
}

TEST_CASE("dmt at integer examples and conventions")
{
    CHECK(dmt_at_integer(AntennaProfile{2, 2}, 0) == DiversityValue::of(4));
    CHECK(dmt_at_integer(AntennaProfile{2, 2, 2}, 0) == DiversityValue::of(3));
    CHECK(dmt_at_integer(AntennaProfile{1, 2, 3, 4}, 1) == DiversityValue::of(0));
    CHECK(dmt_at_integer(AntennaProfile{2, 2}, 3).is_infinite());
    CHECK_THROWS_AS(dmt_at_integer(AntennaProfile{2, 2}, -1), std::invalid_argument);
}

TEST_CASE("dmt curve examples")
{
    using bp = std::vector<std::pair<int, std::int64_t>>;
    CHECK(dmt_curve(AntennaProfile{2, 2}).breakpoints == bp{{0, 4}, {1, 1}, {2, 0}});
    CHECK(dmt_curve(AntennaProfile{2, 2, 2}).breakpoints == bp{{0, 3}, {1, 1}, {2, 0}});
    CHECK(dmt_curve(AntennaProfile{1, 2, 3, 4}).breakpoints == bp{{0, 2}, {1, 0}});
}

TEST_CASE("real interpolation is exact at integers and linear between")
{
    const DmtCurve c22 = dmt_curve(AntennaProfile{2, 2});
    CHECK(dmt_at_real(c22, 0.5) == doctest::Approx(2.5));
    CHECK(dmt_at_real(c22, 1.0) == doctest::Approx(1.0));
    CHECK(dmt_at_real(dmt_curve(AntennaProfile{2, 2, 2}), 2.0) == doctest::Approx(0.0));

    CHECK_THROWS_AS(dmt_at_real(c22, -0.01), std::invalid_argument);
    CHECK_THROWS_AS(dmt_at_real(c22, 2.01), std::invalid_argument);
}

TEST_CASE("symmetric closed form examples")
{
    CHECK(symmetric_dmt(5, 5, 0) == 15);
    CHECK(symmetric_dmt(2, 1, 0) == 4);
    CHECK(symmetric_dmt(2, 3, 1) == 1);
    CHECK_THROWS_AS(symmetric_dmt(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_dmt(2, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_dmt(0, 1, 0), std::invalid_argument);
}

TEST_CASE("symmetric closed form agrees with the general formula")
{
    for (int n = 1; n <= 6; ++n)
        for (int hops = 1; hops <= 6; ++hops)
        {
            const AntennaProfile profile(std::vector<int>(static_cast<std::size_t>(hops) + 1, n));
            for (int k = 0; k <= n; ++k)
            {
                CHECK(symmetric_dmt(n, hops, k) == dmt_at_integer(profile, k).value());
                if (hops >= n)
                    CHECK(symmetric_dmt(n, hops, k) ==
                          static_cast<std::int64_t>(n - k) * (n + 1 - k) / 2);
            }
        }
}

TEST_CASE("rayleigh closed form")
{
    CHECK(rayleigh_dmt(2, 2, 0) == 4);
    CHECK(rayleigh_dmt(1, 4, 0) == 4);
    CHECK(rayleigh_dmt(3, 3, 3) == 0);
    CHECK_THROWS_AS(rayleigh_dmt(2, 2, 3), std::invalid_argument);

    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b)
            for (int k = 0; k <= std::min(a, b); ++k)
                CHECK(rayleigh_dmt(a, b, k) == dmt_at_integer(AntennaProfile{a, b}, k).value());
}

TEST_CASE("curve invariants over the enumeration")
{
    for_each_profile(5, 4, [](const std::vector<int> &nodes) {
        const AntennaProfile profile(nodes);
        const std::vector<int> ordered = profile.ordered();
        const int n_min = ordered.front();

        const CoefficientVector coeff = coefficient_vector(profile);
        REQUIRE(coeff.c.size() == static_cast<std::size_t>(n_min));
        CHECK(coeff.c.front() >= 1);
        CHECK(coeff.c.back() >= 1 - n_min + ordered[0]);
        for (std::size_t i = 1; i < coeff.c.size(); ++i)
            CHECK(coeff.c[i - 1] >= coeff.c[i]);

        const DmtCurve curve = dmt_curve(profile);
        CHECK(curve.d(n_min) == 0);
        for (int k = 1; k <= n_min; ++k)
            CHECK(curve.d(k - 1) >= curve.d(k));

        // Consecutively joined threshold intervals.
        const FlowThresholds thresholds = flow_thresholds(profile);
        for (std::size_t k = 1; k < thresholds.p.size(); ++k)
            CHECK(thresholds.p[k - 1] >= thresholds.p[k]);

        // Bounds on the maximum diversity.
        const std::int64_t product = static_cast<std::int64_t>(ordered[0]) * ordered[1];
        CHECK(2 * curve.d(0) > product);
        CHECK(curve.d(0) <= product);
    });
}

TEST_CASE("permutation invariance")
{
    std::mt19937 gen(7);
    for_each_profile(5, 3, [&gen](const std::vector<int> &nodes) {
        const DmtCurve reference = dmt_curve(AntennaProfile(nodes));
        std::vector<int> shuffled = nodes;
        std::shuffle(shuffled.begin(), shuffled.end(), gen);
        CHECK(dmt_curve(AntennaProfile(shuffled)) == reference);
    });
}

TEST_CASE("interval form of the coefficients")
{
    // Within the interval [p_k, p_{k-1}], the k-th floor term alone attains
    // the minimum defining c_i.
    for_each_profile(5, 4, [](const std::vector<int> &nodes) {
        const AntennaProfile profile(nodes);
        const std::vector<int> ordered = profile.ordered();
        const int hops = profile.hops();
        const int n_min = ordered.front();
        const CoefficientVector coeff = coefficient_vector(profile);
        const FlowThresholds thresholds = flow_thresholds(profile);

        std::vector<std::int64_t> prefix(ordered.size());
        std::int64_t sum = 0;
        for (std::size_t l = 0; l < ordered.size(); ++l)
            prefix[l] = (sum += ordered[l]);

        for (int k = 1; k <= hops; ++k)
        {
            const std::int64_t hi = thresholds.p[static_cast<std::size_t>(k) - 1];
            const bool lo_is_minus_inf = thresholds.minus_infinity(k);
            for (int i = 1; i <= n_min; ++i)
            {
                const bool in_interval =
                    i <= hi && (lo_is_minus_inf || i >= thresholds.p[static_cast<std::size_t>(k)]);
                if (!in_interval)
                    continue;
                const std::int64_t via_k = 1 - i + floor_div(prefix[static_cast<std::size_t>(k)] - i, k);
                CHECK(via_k == coeff.c[static_cast<std::size_t>(i) - 1]);
            }
        }
    });
}

TEST_CASE("tradeoff coincides with ordered prefixes above the flow thresholds")
{
    for_each_profile(5, 4, [](const std::vector<int> &nodes) {
        const AntennaProfile profile(nodes);
        const std::vector<int> ordered = profile.ordered();
        const int hops = profile.hops();
        const int n_min = ordered.front();
        const FlowThresholds thresholds = flow_thresholds(profile);

        for (int k = 1; k < hops; ++k)
        {
            const AntennaProfile prefix(
                std::vector<int>(ordered.begin(), ordered.begin() + k + 1));
            const std::int64_t from =
                std::max<std::int64_t>(thresholds.p[static_cast<std::size_t>(k)], 0);
            for (std::int64_t r = from; r <= n_min; ++r)
                CHECK(dmt_at_integer(profile, static_cast<int>(r)) ==
                      dmt_at_integer(prefix, static_cast<int>(r)));
        }
    });
}
