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

#ifndef MHDMT_MONTECARLO_HPP
#define MHDMT_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "mhdmt/antenna_profile.hpp"
#include "mhdmt/philox.hpp"

namespace mhdmt
{

enum class Scheme
{
    RayleighProduct, // bare product of the hop matrices, white noise
    Af,              // per-antenna amplify-and-forward
    Pf,              // project-and-forward (signal-subspace projection at relays)
    Direct           // single Rayleigh hop, profile must have exactly two nodes
};

enum class RateMode
{
    FixedRate,   // rate_value is the target rate in bits per channel use
    Multiplexing // target rate is rate_value * log2(snr)
};

enum class Normalization
{
    ShortTerm, // relay gains track the realized per-row channel power
    LongTerm   // relay gains use the average channel power (deterministic)
};

/// Sampled hop matrices H_i of shape n_i x n_{i-1}, i = 1..N.
struct ChannelRealization
{
    std::vector<Eigen::MatrixXcd> hops;
};

/// End-to-end equivalent channel: y = G x + w with E[w w^H] = R and unit
/// noise at the destination, so R = I + (relayed-noise covariance) >= I.
/// noise_propagation[j] maps the noise entering relay j+1 to the destination.
struct EquivalentChannel
{
    Eigen::MatrixXcd G;
    Eigen::MatrixXcd R;
    std::vector<Eigen::MatrixXcd> noise_propagation;
};

/// Deterministic matrix inserted between hop `gap` and hop `gap+1` of a
/// product channel (1 <= gap <= N-1). Used to study rank bottlenecks.
struct DeterministicInsert
{
    int gap;
    Eigen::MatrixXcd matrix;
};

/// Relays equally spaced on the unit source-destination segment; each hop
/// then sees a distance of 1/N and a power gain of N^alpha relative to the
/// direct link.
struct PathLossModel
{
    double alpha = 0.0;
};

struct SimulationConfig
{
    explicit SimulationConfig(AntennaProfile profile_) : profile(std::move(profile_)) {}

    AntennaProfile profile;
    Scheme scheme = Scheme::Af;
    std::vector<double> snr_grid_db;
    RateMode rate_mode = RateMode::FixedRate;
    double rate_value = 1.0;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    double kappa = 1e6; // relay-gain clip; large enough to be inactive in practice
    Normalization normalization = Normalization::ShortTerm;
    int threads = 1;
    std::optional<PathLossModel> pathloss;
    std::vector<DeterministicInsert> inserts; // product scheme only
};

/// One outage estimate per SNR grid point.
struct OutageEstimate
{
    double snr_db = 0.0;
    double rate_bits = 0.0;
    double p_out = 0.0;
    std::uint64_t outage_count = 0;
    std::uint64_t trials = 0;
    double half_width_95 = 0.0; // 1.96 * sqrt(p (1-p) / trials)
    bool pre_asymptotic = false; // multiplexing threshold was <= 0 at this SNR
    bool zero_count = false;     // p_out = 0; the CI is one-sided (<= 3/trials at 95%)
};

struct PathLossGain
{
    double total_gain_db = 0.0;    // direct vs summed multihop transmit power
    double per_node_gain_db = 0.0; // direct vs per-node multihop transmit power
    double multihop_snr_db = 0.0;
    double direct_snr_db = 0.0;
};

/// Fills each H_i with i.i.d. CN(0,1) entries from the given stream,
/// hop by hop, column-major within a hop.
ChannelRealization sample_hops(const AntennaProfile &profile, PhiloxStream &rng);

/// Diagonal relay gains for one hop matrix: row j of H carries the signal
/// received by relay antenna j, so
/// d_j = sqrt(1 / ((snr/n_prev) * ||row_j||^2 + 1)) * sqrt(snr/n_cur),
/// clipped at kappa. LongTerm replaces ||row_j||^2 by its mean n_prev.
Eigen::VectorXd af_scaling_matrix(const Eigen::MatrixXcd &hop, double snr, int n_prev, int n_cur,
                                  double kappa, Normalization normalization = Normalization::ShortTerm);

/// Amplify-and-forward chain: G = H_N D_{N-1} H_{N-1} ... D_1 H_1 and
/// R = I + sum_j M_j M_j^H, M_j = H_N D_{N-1} ... H_{j+1} D_j.
EquivalentChannel af_equivalent_channel(const ChannelRealization &realization, double snr, double kappa,
                                        Normalization normalization = Normalization::ShortTerm);

/// Project-and-forward chain: each relay projects onto the column space of
/// its effective incoming matrix (rank r_i), normalizes component-wise and
/// forwards on r_i antennas, so hop i+1 only uses its first r_i columns.
EquivalentChannel pf_equivalent_channel(const ChannelRealization &realization, double snr, double kappa,
                                        Normalization normalization = Normalization::ShortTerm);

/// log2 det(I + (snr/n0) W W^H) with W = L^{-1} G and R = L L^H, evaluated
/// through Cholesky factorizations only (no raw determinants). Throws
/// std::runtime_error if R is not positive definite.
double mutual_information(const EquivalentChannel &channel, double snr, int n0);

/// Ascending eigen-exponents -log(lambda_i)/log(snr) of the nonzero
/// eigenvalues of product * product^H. Requires snr > 1.
std::vector<double> eigen_exponents(const Eigen::MatrixXcd &product, double snr);

/// Outage probability on the configured SNR grid. Each trial draws its own
/// counter-based stream from (master_seed, snr_index, trial_index); results
/// are identical for any thread count.
std::vector<OutageEstimate> estimate_outage(const SimulationConfig &config);

/// Least-squares slope of -log10(p_out) against log10(snr) over the inclusive
/// index window [lo, hi]. Points with p_out = 0 are skipped; fewer than two
/// usable points is an error.
double diversity_slope(const std::vector<OutageEstimate> &estimates, std::size_t lo, std::size_t hi);

/// Transmit-power gain of the multihop chain over the direct link at a target
/// outage, with the configured path-loss exponent. Bisects the transmit SNR
/// of both channels over [probe_lo_db, probe_hi_db] with a fixed seed
/// schedule; requires FixedRate mode. Throws if the target is not bracketed.
PathLossGain pathloss_power_gain(const SimulationConfig &config, double target_pout,
                                 double probe_lo_db = 0.0, double probe_hi_db = 60.0);

} // namespace mhdmt

#endif
