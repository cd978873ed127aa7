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

#include "mhdmt/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace mhdmt
{

namespace
{

constexpr double k_rank_cutoff = 1e-10; // relative singular-value cutoff for rank decisions

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

void validate(const SimulationConfig &config)
{
    if (config.trials < 1)
        throw std::invalid_argument("simulation needs at least one trial");
    if (config.snr_grid_db.empty())
        throw std::invalid_argument("SNR grid must not be empty");
    for (std::size_t i = 1; i < config.snr_grid_db.size(); ++i)
        if (!(config.snr_grid_db[i] > config.snr_grid_db[i - 1]))
            throw std::invalid_argument("SNR grid must be strictly increasing");
    if (!(config.kappa > 0.0))
        throw std::invalid_argument("kappa must be > 0");
    if (config.threads < 1)
        throw std::invalid_argument("thread count must be >= 1");
    if (config.scheme == Scheme::Direct && config.profile.length() != 2)
        throw std::invalid_argument("direct scheme needs a two-node profile");
    if (config.rate_mode == RateMode::FixedRate && !(config.rate_value > 0.0))
        throw std::invalid_argument("fixed rate must be > 0");
    if (config.rate_mode == RateMode::Multiplexing && config.rate_value < 0.0)
        throw std::invalid_argument("multiplexing gain must be >= 0");
    if (!config.inserts.empty() && config.scheme != Scheme::RayleighProduct)
        throw std::invalid_argument("deterministic inserts only apply to the product scheme");
    for (const DeterministicInsert &insert : config.inserts)
    {
        if (insert.gap < 1 || insert.gap > config.profile.hops() - 1)
            throw std::invalid_argument("insert gap outside [1, hops - 1]");
        const int dim = config.profile.node(static_cast<std::size_t>(insert.gap));
        if (insert.matrix.rows() != dim || insert.matrix.cols() != dim)
            throw std::invalid_argument("insert matrix must be square with the node's dimension");
    }
}

// Bare product channel H_N ... H_1, scaled so the received SNR per antenna
// equals snr under the (snr/n0) I transmit covariance.
EquivalentChannel product_channel(const ChannelRealization &realization,
                                  const std::vector<DeterministicInsert> &inserts)
{
    const int hops = static_cast<int>(realization.hops.size());
    Eigen::MatrixXcd G = realization.hops.front();
    double inner_dims = 1.0;
    for (int i = 1; i < hops; ++i)
    {
        for (const DeterministicInsert &insert : inserts)
            if (insert.gap == i)
                G = insert.matrix * G;
        G = realization.hops[static_cast<std::size_t>(i)] * G;
        inner_dims *= static_cast<double>(realization.hops[static_cast<std::size_t>(i)].cols());
    }
    G /= std::sqrt(inner_dims);

    EquivalentChannel channel;
    channel.G = std::move(G);
    channel.R = Eigen::MatrixXcd::Identity(channel.G.rows(), channel.G.rows());
    return channel;
}

} // namespace

ChannelRealization sample_hops(const AntennaProfile &profile, PhiloxStream &rng)
{
    ChannelRealization realization;
    realization.hops.reserve(static_cast<std::size_t>(profile.hops()));
    for (int i = 1; i <= profile.hops(); ++i)
    {
        const int rows = profile.node(static_cast<std::size_t>(i));
        const int cols = profile.node(static_cast<std::size_t>(i) - 1);
        Eigen::MatrixXcd hop(rows, cols);
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r)
                hop(r, c) = rng.next_cn();
        realization.hops.push_back(std::move(hop));
    }
    return realization;
}

Eigen::VectorXd af_scaling_matrix(const Eigen::MatrixXcd &hop, double snr, int n_prev, int n_cur,
                                  double kappa, Normalization normalization)
{
    if (!(snr > 0.0))
        throw std::invalid_argument("snr must be > 0");
    Eigen::VectorXd diag(hop.rows());
    const double target = std::sqrt(snr / n_cur);
    for (Eigen::Index j = 0; j < hop.rows(); ++j)
    {
        const double row_power =
            normalization == Normalization::LongTerm ? static_cast<double>(n_prev) : hop.row(j).squaredNorm();
        const double gain = std::sqrt(1.0 / ((snr / n_prev) * row_power + 1.0)) * target;
        diag(j) = std::min(gain, kappa);
    }
    return diag;
}

EquivalentChannel af_equivalent_channel(const ChannelRealization &realization, double snr, double kappa,
                                        Normalization normalization)
{
    const int hops = static_cast<int>(realization.hops.size());
    const Eigen::Index n_dest = realization.hops.back().rows();

    EquivalentChannel channel;
    channel.R = Eigen::MatrixXcd::Identity(n_dest, n_dest);

    if (hops == 1)
    {
        channel.G = realization.hops.front();
        return channel;
    }

    // Suffix propagation T_i = H_N D_{N-1} ... H_{i+1} D_i, built backwards;
    // T_i applied to the noise entering relay i, and G = T_1 H_1.
    channel.noise_propagation.resize(static_cast<std::size_t>(hops) - 1);
    Eigen::MatrixXcd suffix;
    for (int i = hops - 1; i >= 1; --i)
    {
        const Eigen::MatrixXcd &hop = realization.hops[static_cast<std::size_t>(i) - 1]; // H_i
        const int n_prev = static_cast<int>(hop.cols());
        const int n_cur = static_cast<int>(hop.rows());
        const Eigen::VectorXd diag = af_scaling_matrix(hop, snr, n_prev, n_cur, kappa, normalization);

        if (i == hops - 1)
            suffix = realization.hops.back() * diag.asDiagonal();
        else
            suffix = (suffix * realization.hops[static_cast<std::size_t>(i)]) * diag.asDiagonal();
        channel.noise_propagation[static_cast<std::size_t>(i) - 1] = suffix;
        channel.R.noalias() += suffix * suffix.adjoint();
    }
    channel.G = suffix * realization.hops.front();
    return channel;
}

EquivalentChannel pf_equivalent_channel(const ChannelRealization &realization, double snr, double kappa,
                                        Normalization normalization)
{
    const int hops = static_cast<int>(realization.hops.size());
    const Eigen::Index n_dest = realization.hops.back().rows();

    EquivalentChannel channel;
    channel.R = Eigen::MatrixXcd::Identity(n_dest, n_dest);

    if (hops == 1)
    {
        channel.G = realization.hops.front();
        return channel;
    }

    // Forward pass over the relays: project the incoming effective matrix on
    // its column space, normalize, and forward on rank-many antennas.
    std::vector<Eigen::MatrixXcd> projected;  // G_i = Q_i^H H_i,eff   (r_i x r_{i-1})
    std::vector<Eigen::MatrixXcd> projectors; // Q_i^H                 (r_i x n_i)
    std::vector<Eigen::VectorXd> gains;       // diagonal of D_i       (r_i)
    projected.reserve(static_cast<std::size_t>(hops) - 1);
    projectors.reserve(static_cast<std::size_t>(hops) - 1);
    gains.reserve(static_cast<std::size_t>(hops) - 1);

    int r_prev = static_cast<int>(realization.hops.front().cols()); // r_0 = n_0
    for (int i = 1; i <= hops - 1; ++i)
    {
        const Eigen::MatrixXcd effective =
            realization.hops[static_cast<std::size_t>(i) - 1].leftCols(r_prev);
        const int n_cur = static_cast<int>(effective.rows());

        Eigen::MatrixXcd basis_adjoint; // Q_i^H
        Eigen::MatrixXcd g_i;
        int rank;
        if (n_cur > r_prev)
        {
            Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(effective);
            qr.setThreshold(k_rank_cutoff);
            rank = static_cast<int>(qr.rank());
            Eigen::MatrixXcd thin_q =
                qr.householderQ() * Eigen::MatrixXcd::Identity(n_cur, rank);
            basis_adjoint = thin_q.adjoint();
            g_i = basis_adjoint * effective;
        }
        else
        {
            rank = n_cur; // full row span almost surely
            basis_adjoint = Eigen::MatrixXcd::Identity(n_cur, n_cur);
            g_i = effective;
        }

        gains.push_back(af_scaling_matrix(g_i, snr, r_prev, rank, kappa, normalization));
        projected.push_back(std::move(g_i));
        projectors.push_back(std::move(basis_adjoint));
        r_prev = rank;
    }

    const Eigen::MatrixXcd destination = realization.hops.back().leftCols(r_prev);

    // Same suffix accumulation as the AF chain, with D_i Q_i^H in place of D_i.
    channel.noise_propagation.resize(static_cast<std::size_t>(hops) - 1);
    Eigen::MatrixXcd suffix;
    for (int i = hops - 1; i >= 1; --i)
    {
        const Eigen::VectorXd &diag = gains[static_cast<std::size_t>(i) - 1];
        if (i == hops - 1)
            suffix = destination * diag.asDiagonal();
        else
            suffix = (suffix * projected[static_cast<std::size_t>(i)]) * diag.asDiagonal();
        const Eigen::MatrixXcd to_dest = suffix * projectors[static_cast<std::size_t>(i) - 1];
        channel.R.noalias() += to_dest * to_dest.adjoint();
        channel.noise_propagation[static_cast<std::size_t>(i) - 1] = to_dest;
    }
    channel.G = suffix * projected.front();
    return channel;
}

double mutual_information(const EquivalentChannel &channel, double snr, int n0)
{
    const Eigen::Index n_dest = channel.G.rows();
    Eigen::LLT<Eigen::MatrixXcd> noise_chol(channel.R);
    if (noise_chol.info() != Eigen::Success)
        throw std::runtime_error("noise covariance is not positive definite");

    const Eigen::MatrixXcd whitened = noise_chol.matrixL().solve(channel.G);

    // Gram matrix on the smaller side; same nonzero spectrum either way.
    Eigen::MatrixXcd gram;
    if (whitened.cols() < n_dest)
        gram = Eigen::MatrixXcd::Identity(whitened.cols(), whitened.cols()) +
               (snr / n0) * (whitened.adjoint() * whitened);
    else
        gram = Eigen::MatrixXcd::Identity(n_dest, n_dest) + (snr / n0) * (whitened * whitened.adjoint());

    Eigen::LLT<Eigen::MatrixXcd> gram_chol(gram);
    if (gram_chol.info() != Eigen::Success)
        throw std::runtime_error("Gram matrix Cholesky failed");

    double log2_det = 0.0;
    const auto &factor = gram_chol.matrixLLT();
    for (Eigen::Index i = 0; i < factor.rows(); ++i)
        log2_det += 2.0 * std::log2(std::real(factor(i, i)));
    return log2_det;
}

std::vector<double> eigen_exponents(const Eigen::MatrixXcd &product, double snr)
{
    if (!(snr > 1.0))
        throw std::invalid_argument("eigen-exponents need snr > 1");

    // Hermitian Gram on the smaller side.
    Eigen::MatrixXcd gram;
    if (product.rows() <= product.cols())
        gram = product * product.adjoint();
    else
        gram = product.adjoint() * product;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue computation failed");

    const Eigen::VectorXd eigenvalues = solver.eigenvalues(); // ascending
    const double cutoff = 1e-12 * std::max(eigenvalues(eigenvalues.size() - 1), 0.0);

    const double log_snr = std::log(snr);
    std::vector<double> exponents;
    exponents.reserve(static_cast<std::size_t>(eigenvalues.size()));
    // Descending eigenvalue maps to ascending exponent.
    for (Eigen::Index i = eigenvalues.size() - 1; i >= 0; --i)
    {
        if (eigenvalues(i) <= cutoff)
            continue;
        exponents.push_back(-std::log(eigenvalues(i)) / log_snr);
    }
    return exponents;
}

namespace
{

bool trial_in_outage(const SimulationConfig &config, double snr, double rate, std::uint32_t snr_index,
                     std::uint64_t trial_index, double hop_amplitude)
{
    PhiloxStream rng(config.master_seed, snr_index, trial_index);
    ChannelRealization realization = sample_hops(config.profile, rng);
    if (hop_amplitude != 1.0)
        for (Eigen::MatrixXcd &hop : realization.hops)
            hop *= hop_amplitude;

    EquivalentChannel channel;
    switch (config.scheme)
    {
    case Scheme::Direct:
        channel.G = std::move(realization.hops.front());
        channel.R = Eigen::MatrixXcd::Identity(channel.G.rows(), channel.G.rows());
        break;
    case Scheme::RayleighProduct:
        channel = product_channel(realization, config.inserts);
        break;
    case Scheme::Af:
        channel = af_equivalent_channel(realization, snr, config.kappa, config.normalization);
        break;
    case Scheme::Pf:
        channel = pf_equivalent_channel(realization, snr, config.kappa, config.normalization);
        break;
    }

    const int n0 = config.profile.node(0);
    return mutual_information(channel, snr, n0) < rate;
}

} // namespace

std::vector<OutageEstimate> estimate_outage(const SimulationConfig &config)
{
    validate(config);

    // Equal hop spacing on the unit segment: each hop is 1/N long and enjoys
    // a path gain of N^alpha over the unit-distance direct link.
    double hop_amplitude = 1.0;
    if (config.pathloss)
        hop_amplitude = std::sqrt(std::pow(static_cast<double>(config.profile.hops()), config.pathloss->alpha));

    std::vector<OutageEstimate> estimates;
    estimates.reserve(config.snr_grid_db.size());

    for (std::size_t snr_index = 0; snr_index < config.snr_grid_db.size(); ++snr_index)
    {
        const double snr_db = config.snr_grid_db[snr_index];
        const double snr = db_to_linear(snr_db);
        const double rate = config.rate_mode == RateMode::FixedRate
                                ? config.rate_value
                                : config.rate_value * std::log2(snr);

        const int worker_count =
            static_cast<int>(std::min<std::uint64_t>(config.trials, static_cast<std::uint64_t>(config.threads)));
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(worker_count), 0);

        auto run_range = [&](int worker, std::uint64_t begin, std::uint64_t end) {
            std::uint64_t local = 0;
            for (std::uint64_t trial = begin; trial < end; ++trial)
                if (trial_in_outage(config, snr, rate, static_cast<std::uint32_t>(snr_index), trial,
                                    hop_amplitude))
                    ++local;
            counts[static_cast<std::size_t>(worker)] = local;
        };

        if (worker_count == 1)
        {
            run_range(0, 0, config.trials);
        }
        else
        {
            const std::uint64_t chunk = (config.trials + worker_count - 1) / worker_count;
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(worker_count));
            for (int w = 0; w < worker_count; ++w)
            {
                const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
                const std::uint64_t end = std::min(config.trials, begin + chunk);
                pool.emplace_back(run_range, w, begin, end);
            }
            for (std::thread &t : pool)
                t.join();
        }

        std::uint64_t outage_count = 0;
        for (std::uint64_t c : counts)
            outage_count += c;

        OutageEstimate point;
        point.snr_db = snr_db;
        point.rate_bits = rate;
        point.outage_count = outage_count;
        point.trials = config.trials;
        point.p_out = static_cast<double>(outage_count) / static_cast<double>(config.trials);
        point.half_width_95 =
            1.96 * std::sqrt(point.p_out * (1.0 - point.p_out) / static_cast<double>(config.trials));
        point.pre_asymptotic = rate <= 0.0;
        point.zero_count = outage_count == 0;
        estimates.push_back(point);
    }
    return estimates;
}

double diversity_slope(const std::vector<OutageEstimate> &estimates, std::size_t lo, std::size_t hi)
{
    if (lo > hi || hi >= estimates.size())
        throw std::invalid_argument("slope window out of range");

    std::vector<double> xs, ys;
    for (std::size_t i = lo; i <= hi; ++i)
    {
        if (estimates[i].p_out <= 0.0)
            continue;
        xs.push_back(estimates[i].snr_db / 10.0); // log10 of linear SNR
        ys.push_back(-std::log10(estimates[i].p_out));
    }
    if (xs.size() < 2)
        throw std::invalid_argument("slope fit needs at least two points with nonzero outage");

    const double n = static_cast<double>(xs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;

    double cov = 0.0, var = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        cov += (xs[i] - mean_x) * (ys[i] - mean_y);
        var += (xs[i] - mean_x) * (xs[i] - mean_x);
    }
    return cov / var;
}

namespace
{

// Outage at a single transmit SNR with a fixed seed schedule: the per-trial
// outage indicator is monotone in SNR at fixed rate, so the bisection below
// sees a genuinely monotone function.
double outage_at(const SimulationConfig &config, double snr_db)
{
    SimulationConfig probe = config;
    probe.snr_grid_db = {snr_db};
    return estimate_outage(probe).front().p_out;
}

double bisect_snr_for_target(const SimulationConfig &config, double target, double lo_db, double hi_db)
{
    double p_lo = outage_at(config, lo_db);
    double p_hi = outage_at(config, hi_db);
    if (p_lo < target || p_hi > target)
        throw std::runtime_error("target outage not bracketed by the probe range");

    double lo = lo_db, hi = hi_db;
    while (hi - lo > 0.02)
    {
        const double mid = 0.5 * (lo + hi);
        if (outage_at(config, mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

PathLossGain pathloss_power_gain(const SimulationConfig &config, double target_pout, double probe_lo_db,
                                 double probe_hi_db)
{
    if (!config.pathloss)
        throw std::invalid_argument("pathloss model not configured");
    if (config.rate_mode != RateMode::FixedRate)
        throw std::invalid_argument("power-gain bisection requires fixed-rate mode");
    if (!(target_pout > 0.0 && target_pout < 1.0))
        throw std::invalid_argument("target outage must lie in (0, 1)");

    SimulationConfig multihop = config;

    SimulationConfig direct = config;
    direct.profile = AntennaProfile({config.profile.node(0), config.profile.node(config.profile.length() - 1)});
    direct.scheme = Scheme::Direct;
    direct.pathloss.reset(); // unit distance, unit gain

    PathLossGain gain;
    gain.multihop_snr_db = bisect_snr_for_target(multihop, target_pout, probe_lo_db, probe_hi_db);
    gain.direct_snr_db = bisect_snr_for_target(direct, target_pout, probe_lo_db, probe_hi_db);

    const double transmitting_nodes = static_cast<double>(config.profile.hops());
    gain.per_node_gain_db = gain.direct_snr_db - gain.multihop_snr_db;
    gain.total_gain_db = gain.per_node_gain_db - 10.0 * std::log10(transmitting_nodes);
    return gain;
}

} // namespace mhdmt
