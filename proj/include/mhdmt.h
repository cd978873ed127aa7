/* SPDX-License-Identifier: Apache-2.0
 *
 * mhdmt - diversity and outage analysis for MIMO multihop relay channels
 * Copyright (C) 2026 mhdmt contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C interface of the mhdmt shared library.
 *
 * All functions return MHDMT_OK on success. On failure they return a status
 * code and leave a human-readable message retrievable (per thread) through
 * mhdmt_last_error(). Array-filling functions follow a capacity/count
 * protocol: the caller passes a buffer and its capacity, the callee writes
 * *count elements.
 */

#ifndef MHDMT_H
#define MHDMT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mhdmt_status
{
    MHDMT_OK = 0,
    MHDMT_ERR_INVALID_ARGUMENT = 2, /* bad input (mirrors the CLI usage exit code) */
    MHDMT_ERR_NUMERIC = 3,          /* numerical failure inside a computation */
    MHDMT_ERR_BUFFER_TOO_SMALL = 4
} mhdmt_status;

/* Library semantic version, e.g. "0.1.0". */
const char *mhdmt_version(void);

/* Message describing the most recent failure on the calling thread. */
const char *mhdmt_last_error(void);

/* ------------------------------------------------------------------ */
/* Antenna profiles                                                    */
/* ------------------------------------------------------------------ */

typedef struct mhdmt_profile_s mhdmt_profile;

/* Creates a profile (n_0, ..., n_N). Requires count >= 2 and every entry
 * >= 1; rejects anything else with MHDMT_ERR_INVALID_ARGUMENT. */
mhdmt_status mhdmt_profile_create(const int32_t *nodes, size_t count, mhdmt_profile **out);
void mhdmt_profile_destroy(mhdmt_profile *profile);

int32_t mhdmt_profile_hops(const mhdmt_profile *profile);
int32_t mhdmt_profile_n_min(const mhdmt_profile *profile);
mhdmt_status mhdmt_profile_nodes(const mhdmt_profile *profile, int32_t *nodes, size_t capacity,
                                 size_t *count);
mhdmt_status mhdmt_profile_ordered(const mhdmt_profile *profile, int32_t *nodes, size_t capacity,
                                   size_t *count);

/* ------------------------------------------------------------------ */
/* Exact diversity-multiplexing tradeoff                               */
/* ------------------------------------------------------------------ */

/* Slope coefficients c_1..c_{n_min}. */
mhdmt_status mhdmt_coefficient_vector(const mhdmt_profile *profile, int64_t *c, size_t capacity,
                                      size_t *count);

/* Finite flow thresholds p_0..p_{N-1}; p_N is minus infinity by definition
 * and is not part of the array. */
mhdmt_status mhdmt_flow_thresholds(const mhdmt_profile *profile, int64_t *p, size_t capacity,
                                   size_t *count);

/* Diversity breakpoints d(0)..d(n_min). */
mhdmt_status mhdmt_dmt_breakpoints(const mhdmt_profile *profile, int64_t *d, size_t capacity,
                                   size_t *count);

/* d(k); *is_infinite is set to 1 when k exceeds n_min (unsupportable flow). */
mhdmt_status mhdmt_dmt_at_integer(const mhdmt_profile *profile, int32_t k, int64_t *d,
                                  int32_t *is_infinite);

/* Piecewise-linear interpolation at real multiplexing gain r in [0, n_min]. */
mhdmt_status mhdmt_dmt_at_real(const mhdmt_profile *profile, double r, double *d);

/* Closed form for the symmetric (n, ..., n) chain with `hops` hops. */
mhdmt_status mhdmt_symmetric_dmt(int32_t n, int32_t hops, int32_t k, int64_t *d);

/* d(k) = (n_tx - k)(n_rx - k) of a single Rayleigh hop. */
mhdmt_status mhdmt_rayleigh_dmt(int32_t n_tx, int32_t n_rx, int32_t k, int64_t *d);

/* ------------------------------------------------------------------ */
/* Profile reduction                                                   */
/* ------------------------------------------------------------------ */

mhdmt_status mhdmt_is_reducible_to_length(const mhdmt_profile *profile, int32_t k,
                                          int32_t *reducible);
mhdmt_status mhdmt_minimal_horizontal_form(const mhdmt_profile *profile, int32_t *nodes,
                                           size_t capacity, size_t *count);
mhdmt_status mhdmt_minimal_vertical_form(const mhdmt_profile *profile, int32_t *nodes,
                                         size_t capacity, size_t *count);
mhdmt_status mhdmt_minimal_form_order(const mhdmt_profile *profile, int32_t *order);
mhdmt_status mhdmt_min_relay_antennas(const mhdmt_profile *profile, int32_t *n_bar);
mhdmt_status mhdmt_profiles_equivalent(const mhdmt_profile *a, const mhdmt_profile *b,
                                       int32_t *equivalent);

/* ------------------------------------------------------------------ */
/* Recursive flow-cost characterization                                */
/* ------------------------------------------------------------------ */

mhdmt_status mhdmt_dmt_recursive(const mhdmt_profile *profile, int32_t k, int64_t *d,
                                 int32_t *is_infinite);

/* *match = 1 iff the recursion agrees with the closed form at every k. */
mhdmt_status mhdmt_dmt_cross_check(const mhdmt_profile *profile, int32_t *match);

/* ------------------------------------------------------------------ */
/* Monte Carlo outage simulation                                       */
/* ------------------------------------------------------------------ */

typedef enum mhdmt_scheme
{
    MHDMT_SCHEME_PRODUCT = 0,
    MHDMT_SCHEME_AF = 1,
    MHDMT_SCHEME_PF = 2,
    MHDMT_SCHEME_DIRECT = 3
} mhdmt_scheme;

typedef enum mhdmt_rate_mode
{
    MHDMT_RATE_FIXED = 0,       /* rate_value in bits per channel use */
    MHDMT_RATE_MULTIPLEXING = 1 /* target rate is rate_value * log2(snr) */
} mhdmt_rate_mode;

typedef enum mhdmt_normalization
{
    MHDMT_NORM_SHORT_TERM = 0,
    MHDMT_NORM_LONG_TERM = 1
} mhdmt_normalization;

typedef struct mhdmt_sim_config_s
{
    const int32_t *profile;
    size_t profile_len;
    int32_t scheme;        /* mhdmt_scheme */
    int32_t rate_mode;     /* mhdmt_rate_mode */
    double rate_value;
    const double *snr_grid_db; /* strictly increasing, non-empty */
    size_t snr_count;
    uint64_t trials;
    uint64_t master_seed;
    double kappa;          /* relay-gain clip, > 0 */
    int32_t normalization; /* mhdmt_normalization */
    int32_t threads;       /* >= 1; results do not depend on this */
    int32_t pathloss_enabled;
    double pathloss_alpha;
} mhdmt_sim_config;

typedef struct mhdmt_outage_point_s
{
    double snr_db;
    double rate_bits;
    double p_out;
    uint64_t outage_count;
    uint64_t trials;
    double ci95_half_width;
    int32_t pre_asymptotic; /* multiplexing threshold was <= 0 here */
    int32_t zero_count;     /* no outage events; CI is one-sided */
} mhdmt_outage_point;

/* Runs the simulation; writes snr_count points into `out`. Per-trial random
 * streams are derived from (master_seed, snr_index, trial_index), so two runs
 * with the same configuration are bit-identical for any thread count. */
mhdmt_status mhdmt_estimate_outage(const mhdmt_sim_config *config, mhdmt_outage_point *out);

/* Least-squares slope of -log10(p_out) vs log10(snr) over points[lo..hi]. */
mhdmt_status mhdmt_diversity_slope(const mhdmt_outage_point *points, size_t count, size_t lo,
                                   size_t hi, double *slope);

typedef struct mhdmt_pathloss_gain_s
{
    double total_gain_db;
    double per_node_gain_db;
    double multihop_snr_db;
    double direct_snr_db;
} mhdmt_pathloss_gain;

/* Transmit-power gain of the configured multihop chain over the direct
 * (n_0, n_N) link at target_pout, bisecting transmit SNR over the probe
 * range. Requires fixed-rate mode and pathloss_enabled. */
mhdmt_status mhdmt_pathloss_power_gain(const mhdmt_sim_config *config, double target_pout,
                                       double probe_lo_db, double probe_hi_db,
                                       mhdmt_pathloss_gain *out);

#ifdef __cplusplus
}
#endif

#endif /* MHDMT_H */
