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

#include "mhdmt.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "mhdmt/antenna_profile.hpp"
#include "mhdmt/dmt_core.hpp"
#include "mhdmt/montecarlo.hpp"
#include "mhdmt/recursive_dmt.hpp"
#include "mhdmt/reduction.hpp"

struct mhdmt_profile_s
{
    mhdmt::AntennaProfile profile;
};

namespace
{

thread_local std::string g_last_error;

void set_error(const char *message) { g_last_error = message; }

// Funnels C++ exceptions into status codes + the thread-local message.
template <typename Fn> mhdmt_status guarded(Fn &&fn)
{
    try
    {
        return fn();
    }
    catch (const std::invalid_argument &e)
    {
        set_error(e.what());
        return MHDMT_ERR_INVALID_ARGUMENT;
    }
    catch (const std::bad_alloc &)
    {
        set_error("out of memory");
        return MHDMT_ERR_NUMERIC;
    }
    catch (const std::exception &e)
    {
        set_error(e.what());
        return MHDMT_ERR_NUMERIC;
    }
}

template <typename T>
mhdmt_status fill_buffer(const std::vector<T> &values, T *out, size_t capacity, size_t *count)
{
    if (count == nullptr)
    {
        set_error("count pointer is null");
        return MHDMT_ERR_INVALID_ARGUMENT;
    }
    *count = values.size();
    if (out == nullptr || capacity < values.size())
    {
        set_error("output buffer too small");
        return MHDMT_ERR_BUFFER_TOO_SMALL;
    }
    std::memcpy(out, values.data(), values.size() * sizeof(T));
    return MHDMT_OK;
}

mhdmt_status require(bool ok, const char *message)
{
    if (!ok)
    {
        set_error(message);
        return MHDMT_ERR_INVALID_ARGUMENT;
    }
    return MHDMT_OK;
}

mhdmt::SimulationConfig to_internal(const mhdmt_sim_config &config)
{
    if (config.profile == nullptr || config.snr_grid_db == nullptr)
        throw std::invalid_argument("config arrays must not be null");
    mhdmt::SimulationConfig internal(
        mhdmt::AntennaProfile(std::vector<int>(config.profile, config.profile + config.profile_len)));
    switch (config.scheme)
    {
    case MHDMT_SCHEME_PRODUCT:
        internal.scheme = mhdmt::Scheme::RayleighProduct;
        break;
    case MHDMT_SCHEME_AF:
        internal.scheme = mhdmt::Scheme::Af;
        break;
    case MHDMT_SCHEME_PF:
        internal.scheme = mhdmt::Scheme::Pf;
        break;
    case MHDMT_SCHEME_DIRECT:
        internal.scheme = mhdmt::Scheme::Direct;
        break;
    default:
        throw std::invalid_argument("unknown scheme");
    }
    switch (config.rate_mode)
    {
    case MHDMT_RATE_FIXED:
        internal.rate_mode = mhdmt::RateMode::FixedRate;
        break;
    case MHDMT_RATE_MULTIPLEXING:
        internal.rate_mode = mhdmt::RateMode::Multiplexing;
        break;
    default:
        throw std::invalid_argument("unknown rate mode");
    }
    switch (config.normalization)
    {
    case MHDMT_NORM_SHORT_TERM:
        internal.normalization = mhdmt::Normalization::ShortTerm;
        break;
    case MHDMT_NORM_LONG_TERM:
        internal.normalization = mhdmt::Normalization::LongTerm;
        break;
    default:
        throw std::invalid_argument("unknown normalization");
    }
    internal.rate_value = config.rate_value;
    internal.snr_grid_db.assign(config.snr_grid_db, config.snr_grid_db + config.snr_count);
    internal.trials = config.trials;
    internal.master_seed = config.master_seed;
    internal.kappa = config.kappa;
    internal.threads = config.threads;
    if (config.pathloss_enabled)
        internal.pathloss = mhdmt::PathLossModel{config.pathloss_alpha};
    return internal;
}

void to_point(const mhdmt::OutageEstimate &estimate, mhdmt_outage_point &out)
{
    out.snr_db = estimate.snr_db;
    out.rate_bits = estimate.rate_bits;
    out.p_out = estimate.p_out;
    out.outage_count = estimate.outage_count;
    out.trials = estimate.trials;
    out.ci95_half_width = estimate.half_width_95;
    out.pre_asymptotic = estimate.pre_asymptotic ? 1 : 0;
    out.zero_count = estimate.zero_count ? 1 : 0;
}

} // namespace

extern "C" {

const char *mhdmt_version(void) { return "0.1.0"; }

const char *mhdmt_last_error(void) { return g_last_error.c_str(); }

mhdmt_status mhdmt_profile_create(const int32_t *nodes, size_t count, mhdmt_profile **out)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(nodes != nullptr && out != nullptr, "null pointer"); s != MHDMT_OK)
            return s;
        *out = new mhdmt_profile_s{mhdmt::AntennaProfile(std::vector<int>(nodes, nodes + count))};
        return MHDMT_OK;
    });
}

void mhdmt_profile_destroy(mhdmt_profile *profile) { delete profile; }

int32_t mhdmt_profile_hops(const mhdmt_profile *profile) { return profile->profile.hops(); }

int32_t mhdmt_profile_n_min(const mhdmt_profile *profile) { return profile->profile.n_min(); }

mhdmt_status mhdmt_profile_nodes(const mhdmt_profile *profile, int32_t *nodes, size_t capacity,
                                 size_t *count)
{
    return guarded([&] { return fill_buffer(profile->profile.nodes(), nodes, capacity, count); });
}

mhdmt_status mhdmt_profile_ordered(const mhdmt_profile *profile, int32_t *nodes, size_t capacity,
                                   size_t *count)
{
    return guarded([&] { return fill_buffer(profile->profile.ordered(), nodes, capacity, count); });
}

mhdmt_status mhdmt_coefficient_vector(const mhdmt_profile *profile, int64_t *c, size_t capacity,
                                      size_t *count)
{
    return guarded(
        [&] { return fill_buffer(mhdmt::coefficient_vector(profile->profile).c, c, capacity, count); });
}

mhdmt_status mhdmt_flow_thresholds(const mhdmt_profile *profile, int64_t *p, size_t capacity,
                                   size_t *count)
{
    return guarded(
        [&] { return fill_buffer(mhdmt::flow_thresholds(profile->profile).p, p, capacity, count); });
}

mhdmt_status mhdmt_dmt_breakpoints(const mhdmt_profile *profile, int64_t *d, size_t capacity,
                                   size_t *count)
{
    return guarded([&] {
        const mhdmt::DmtCurve curve = mhdmt::dmt_curve(profile->profile);
        std::vector<std::int64_t> values;
        values.reserve(curve.breakpoints.size());
        for (const auto &[k, dk] : curve.breakpoints)
            values.push_back(dk);
        return fill_buffer(values, d, capacity, count);
    });
}

mhdmt_status mhdmt_dmt_at_integer(const mhdmt_profile *profile, int32_t k, int64_t *d,
                                  int32_t *is_infinite)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(d != nullptr && is_infinite != nullptr, "null pointer");
            s != MHDMT_OK)
            return s;
        const mhdmt::DiversityValue value = mhdmt::dmt_at_integer(profile->profile, k);
        *is_infinite = value.is_infinite() ? 1 : 0;
        *d = value.is_infinite() ? 0 : value.value();
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_dmt_at_real(const mhdmt_profile *profile, double r, double *d)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(d != nullptr, "null pointer"); s != MHDMT_OK)
            return s;
        *d = mhdmt::dmt_at_real(mhdmt::dmt_curve(profile->profile), r);
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_symmetric_dmt(int32_t n, int32_t hops, int32_t k, int64_t *d)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(d != nullptr, "null pointer"); s != MHDMT_OK)
            return s;
        *d = mhdmt::symmetric_dmt(n, hops, k);
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_rayleigh_dmt(int32_t n_tx, int32_t n_rx, int32_t k, int64_t *d)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(d != nullptr, "null pointer"); s != MHDMT_OK)
            return s;
        *d = mhdmt::rayleigh_dmt(n_tx, n_rx, k);
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_is_reducible_to_length(const mhdmt_profile *profile, int32_t k, int32_t *reducible)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(reducible != nullptr, "null pointer"); s != MHDMT_OK)
            return s;
        *reducible = mhdmt::is_reducible_to_length(profile->profile, k) ? 1 : 0;
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_minimal_horizontal_form(const mhdmt_profile *profile, int32_t *nodes,
                                           size_t capacity, size_t *count)
{
    return guarded([&] {
        return fill_buffer(mhdmt::minimal_horizontal_form(profile->profile).nodes(), nodes, capacity,
                           count);
    });
}

mhdmt_status mhdmt_minimal_vertical_form(const mhdmt_profile *profile, int32_t *nodes, size_t capacity,
                                         size_t *count)
{
    return guarded([&] {
        return fill_buffer(mhdmt::minimal_form_report(profile->profile).minimal_vertical.nodes(), nodes,
                           capacity, count);
    });
}

mhdmt_status mhdmt_minimal_form_order(const mhdmt_profile *profile, int32_t *order)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(order != nullptr, "null pointer"); s != MHDMT_OK)
            return s;
        *order = mhdmt::minimal_form_report(profile->profile).order_nstar;
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_min_relay_antennas(const mhdmt_profile *profile, int32_t *n_bar)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(n_bar != nullptr, "null pointer"); s != MHDMT_OK)
            return s;
        *n_bar = mhdmt::min_relay_antennas(profile->profile);
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_profiles_equivalent(const mhdmt_profile *a, const mhdmt_profile *b,
                                       int32_t *equivalent)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(equivalent != nullptr, "null pointer"); s != MHDMT_OK)
            return s;
        *equivalent = mhdmt::are_equivalent(a->profile, b->profile) ? 1 : 0;
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_dmt_recursive(const mhdmt_profile *profile, int32_t k, int64_t *d,
                                 int32_t *is_infinite)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(d != nullptr && is_infinite != nullptr, "null pointer");
            s != MHDMT_OK)
            return s;
        const mhdmt::DiversityValue value = mhdmt::dmt_recursive(profile->profile, k);
        *is_infinite = value.is_infinite() ? 1 : 0;
        *d = value.is_infinite() ? 0 : value.value();
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_dmt_cross_check(const mhdmt_profile *profile, int32_t *match)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(match != nullptr, "null pointer"); s != MHDMT_OK)
            return s;
        *match = mhdmt::cross_check(profile->profile) ? 1 : 0;
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_estimate_outage(const mhdmt_sim_config *config, mhdmt_outage_point *out)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(config != nullptr && out != nullptr, "null pointer");
            s != MHDMT_OK)
            return s;
        const std::vector<mhdmt::OutageEstimate> estimates =
            mhdmt::estimate_outage(to_internal(*config));
        for (std::size_t i = 0; i < estimates.size(); ++i)
            to_point(estimates[i], out[i]);
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_diversity_slope(const mhdmt_outage_point *points, size_t count, size_t lo, size_t hi,
                                   double *slope)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(points != nullptr && slope != nullptr, "null pointer");
            s != MHDMT_OK)
            return s;
        std::vector<mhdmt::OutageEstimate> estimates(count);
        for (size_t i = 0; i < count; ++i)
        {
            estimates[i].snr_db = points[i].snr_db;
            estimates[i].p_out = points[i].p_out;
        }
        *slope = mhdmt::diversity_slope(estimates, lo, hi);
        return MHDMT_OK;
    });
}

mhdmt_status mhdmt_pathloss_power_gain(const mhdmt_sim_config *config, double target_pout,
                                       double probe_lo_db, double probe_hi_db, mhdmt_pathloss_gain *out)
{
    return guarded([&]() -> mhdmt_status {
        if (mhdmt_status s = require(config != nullptr && out != nullptr, "null pointer");
            s != MHDMT_OK)
            return s;
        mhdmt::SimulationConfig internal = to_internal(*config);
        if (!internal.pathloss)
            throw std::invalid_argument("pathloss model not configured");
        const mhdmt::PathLossGain gain =
            mhdmt::pathloss_power_gain(internal, target_pout, probe_lo_db, probe_hi_db);
        out->total_gain_db = gain.total_gain_db;
        out->per_node_gain_db = gain.per_node_gain_db;
        out->multihop_snr_db = gain.multihop_snr_db;
        out->direct_snr_db = gain.direct_snr_db;
        return MHDMT_OK;
    });
}

} // extern "C"
