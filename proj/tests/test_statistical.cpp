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
//
// Statistical behavior at desk scale: fixed seeds, reduced trial counts,
// tolerances wide enough to be robust yet tight enough to catch a wrong
// diversity order or a broken scheme.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mhdmt/montecarlo.hpp"

using namespace mhdmt;

namespace
{

// SNR (dB) at which the outage curve crosses `target`, by log-linear
// interpolation between grid points.
double snr_at_target(const std::vector<OutageEstimate> &estimates, double target)
{
    for (std::size_t i = 1; i < estimates.size(); ++i)
    {
        if (estimates[i - 1].p_out >= target && estimates[i].p_out < target)
        {
            const double y0 = std::log10(estimates[i - 1].p_out);
            const double y1 = std::log10(estimates[i].p_out);
            const double t = (std::log10(target) - y0) / (y1 - y0);
            return estimates[i - 1].snr_db + t * (estimates[i].snr_db - estimates[i - 1].snr_db);
        }
    }
    FAIL("target outage not crossed inside the grid");
    return 0.0;
}

} // namespace

TEST_CASE("deterministic relay gains reduce the scalar chain to a bare product")
{
    // With average-power normalization the relay gain is a constant, so the
    // end-to-end channel is a scaled product of complex Gaussian scalars.
    SimulationConfig config{AntennaProfile{1, 1, 1}};
    config.scheme = Scheme::Af;
    config.normalization = Normalization::LongTerm;
    config.rate_value = 1.0;
    config.snr_grid_db = {15, 20, 25, 30, 35, 40};
    config.trials = 1000000;
    config.master_seed = 1201;
    const auto estimates = estimate_outage(config);
    const double slope = diversity_slope(estimates, 1, 5);
    CHECK(std::abs(slope - 1.0) <= 0.2);
}

TEST_CASE("a rank-one insert knocks the product channel down to the reduced class")
{
    Eigen::MatrixXcd rank1(2, 2);
    rank1 << 1.0, 1.0, 1.0, 1.0;

    SimulationConfig narrow{AntennaProfile{1, 2, 1}};
    narrow.scheme = Scheme::RayleighProduct;
    narrow.rate_value = 1.0;
    narrow.snr_grid_db = {15, 20, 25, 30, 35};
    narrow.trials = 400000;
    narrow.master_seed = 1301;
    narrow.inserts.push_back({1, rank1});
    const double slope_narrow = diversity_slope(estimate_outage(narrow), 0, 4);
    CHECK(std::abs(slope_narrow - 1.0) <= 0.25);

    // (2,2,2) with a rank-one middle stage behaves like a (2,1,2) chain:
    // maximum diversity 2 instead of 3.
    SimulationConfig wide{AntennaProfile{2, 2, 2}};
    wide.scheme = Scheme::RayleighProduct;
    wide.rate_value = 1.0;
    wide.snr_grid_db = {14, 16, 18, 20, 22};
    wide.trials = 1500000;
    wide.master_seed = 1302;
    wide.inserts.push_back({1, rank1});
    const double slope_wide = diversity_slope(estimate_outage(wide), 0, 4);
    CHECK(std::abs(slope_wide - 2.0) <= 0.5);
}

TEST_CASE("projection beats amplification for (1,2,1) at every SNR")
{
    SimulationConfig config{AntennaProfile{1, 2, 1}};
    config.rate_value = 1.0;
    config.snr_grid_db = {10, 15, 20, 25, 30, 35, 40};
    config.trials = 400000;
    config.master_seed = 1401;

    config.scheme = Scheme::Af;
    const auto af = estimate_outage(config);
    config.scheme = Scheme::Pf;
    const auto pf = estimate_outage(config);

    for (std::size_t i = 0; i < af.size(); ++i)
        CHECK(pf[i].p_out <= af[i].p_out);

    const double gain_db = snr_at_target(af, 1e-3) - snr_at_target(pf, 1e-3);
    CHECK(gain_db > 0.0);

    // Same fitted diversity for both schemes.
    const double slope_af = diversity_slope(af, 2, 6);
    const double slope_pf = diversity_slope(pf, 1, 5);
    CHECK(std::abs(slope_af - slope_pf) <= 0.25);
}

TEST_CASE("trimming an oversized relay avoids noise hardening")
{
    SimulationConfig fat{AntennaProfile{1, 4, 1}};
    fat.scheme = Scheme::Af;
    fat.rate_value = 1.0;
    fat.snr_grid_db = {10, 15, 20, 25, 30, 35, 40};
    fat.trials = 400000;
    fat.master_seed = 1501;
    const auto p141 = estimate_outage(fat);

    SimulationConfig slim{AntennaProfile{1, 1, 1}};
    slim.scheme = Scheme::Af;
    slim.rate_value = 1.0;
    slim.snr_grid_db = fat.snr_grid_db;
    slim.trials = fat.trials;
    slim.master_seed = fat.master_seed;
    const auto p111 = estimate_outage(slim);

    for (std::size_t i = 0; i < p141.size(); ++i)
        if (p141[i].p_out <= 1e-1 && p141[i].p_out >= 1e-3)
            CHECK(p111[i].p_out < p141[i].p_out);

    const double gain_db = snr_at_target(p141, 1e-3) - snr_at_target(p111, 1e-3);
    CHECK(gain_db >= 3.0);
}

TEST_CASE("no path loss and a single hop mean no gain")
{
    SimulationConfig config{AntennaProfile{2, 2}};
    config.scheme = Scheme::Af;
    config.rate_value = 2.0;
    config.snr_grid_db = {10.0};
    config.trials = 50000;
    config.master_seed = 1601;
    config.pathloss = PathLossModel{0.0};
    const PathLossGain gain = pathloss_power_gain(config, 1e-2, 0.0, 30.0);
    CHECK(gain.per_node_gain_db == doctest::Approx(0.0));
    CHECK(gain.total_gain_db == doctest::Approx(0.0));
}

TEST_CASE("pathloss bisection is reproducible and rejects bad configurations")
{
    SimulationConfig config{AntennaProfile{2, 2, 2}};
    config.scheme = Scheme::Af;
    config.rate_value = 2.0;
    config.snr_grid_db = {10.0};
    config.trials = 100000;
    config.master_seed = 1602;
    config.pathloss = PathLossModel{4.0};

    const PathLossGain first = pathloss_power_gain(config, 1e-2, -10.0, 40.0);
    const PathLossGain second = pathloss_power_gain(config, 1e-2, -10.0, 40.0);
    CHECK(first.per_node_gain_db == second.per_node_gain_db);
    CHECK(first.per_node_gain_db > 0.0);

    SimulationConfig no_model = config;
    no_model.pathloss.reset();
    CHECK_THROWS_AS(pathloss_power_gain(no_model, 1e-2, 0.0, 40.0), std::invalid_argument);

    SimulationConfig mux = config;
    mux.rate_mode = RateMode::Multiplexing;
    CHECK_THROWS_AS(pathloss_power_gain(mux, 1e-2, 0.0, 40.0), std::invalid_argument);

    CHECK_THROWS_AS(pathloss_power_gain(config, 0.0, 0.0, 40.0), std::invalid_argument);
    // Target far below what the probe range can reach.
    CHECK_THROWS_AS(pathloss_power_gain(config, 1e-9, 0.0, 5.0), std::runtime_error);
}

TEST_CASE("the relaying gain shrinks at stricter outage targets")
{
    // The direct 2x2 link has diversity 4 while the (2,2,2) chain has 3, so
    // the power gain of relaying decays as the target outage drops.
    SimulationConfig config{AntennaProfile{2, 2, 2}};
    config.scheme = Scheme::Af;
    config.rate_value = 2.0;
    config.snr_grid_db = {10.0};
    config.trials = 1000000;
    config.master_seed = 1604;
    config.pathloss = PathLossModel{4.0};

    const PathLossGain loose = pathloss_power_gain(config, 1e-3, -20.0, 40.0);
    const PathLossGain strict = pathloss_power_gain(config, 1e-4, -20.0, 40.0);
    CHECK(strict.per_node_gain_db < loose.per_node_gain_db);
    CHECK(strict.total_gain_db < loose.total_gain_db);
}

TEST_CASE("per-node power gain grows with the path-loss exponent")
{
    // Two-antenna nodes, 2..4 hops, exponents 3/3.5/4: relaying always wins
    // per node at 1e-3, and more strongly for higher exponents.
    const double target = 1e-3;
    for (int hops = 2; hops <= 4; ++hops)
    {
        double previous = -1e9;
        for (double alpha : {3.0, 3.5, 4.0})
        {
            SimulationConfig config{
                AntennaProfile(std::vector<int>(static_cast<std::size_t>(hops) + 1, 2))};
            config.scheme = Scheme::Af;
            config.rate_value = 2.0;
            config.snr_grid_db = {10.0};
            config.trials = 100000;
            config.master_seed = 1603;
            config.pathloss = PathLossModel{alpha};
            const PathLossGain gain = pathloss_power_gain(config, target, -25.0, 40.0);
            CHECK(gain.per_node_gain_db > 0.0);
            CHECK(gain.per_node_gain_db > previous);
            previous = gain.per_node_gain_db;
        }
    }
}
