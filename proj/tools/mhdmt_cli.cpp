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
// Command-line front end. Links only the C API of the shared library.
//
// Subcommands:
//   dmt       exact tradeoff of a profile (breakpoints, coefficients, thresholds)
//   reduce    minimal horizontal/vertical forms
//   equiv     equivalence of two profiles
//   simulate  Monte Carlo outage sweep (CSV/JSON records)
//   pathloss  multihop vs direct transmit-power gain at a target outage
//
// Every run is a pure function of (argv, config file, seed): reruns produce
// byte-identical output. Wall-clock timestamps only appear with --timestamps.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mhdmt.h"

using nlohmann::json;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_numeric = 3;

struct CliError
{
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string &message) { throw CliError{code, message}; }

// Maps a C-API status to the CLI exit code, attaching the library message.
void check(mhdmt_status status, const char *what)
{
    if (status == MHDMT_OK)
        return;
    const int code = status == MHDMT_ERR_INVALID_ARGUMENT ? exit_usage : exit_numeric;
    fail(code, std::string(what) + ": " + mhdmt_last_error());
}

std::vector<int32_t> parse_profile(const std::string &text)
{
    std::vector<int32_t> nodes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        try
        {
            std::size_t used = 0;
            const long value = std::stol(item, &used);
            if (used != item.size())
                fail(exit_usage, "malformed profile entry '" + item + "'");
            nodes.push_back(static_cast<int32_t>(value));
        }
        catch (const std::exception &)
        {
            fail(exit_usage, "malformed profile '" + text + "' (expected comma-separated integers)");
        }
    }
    if (nodes.empty())
        fail(exit_usage, "empty profile");
    return nodes;
}

// "start:step:stop" (inclusive) or a single value.
std::vector<double> parse_grid(const std::string &text)
{
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
    {
        try
        {
            parts.push_back(std::stod(item));
        }
        catch (const std::exception &)
        {
            fail(exit_usage, "malformed grid '" + text + "'");
        }
    }
    if (parts.size() == 1)
        return parts;
    if (parts.size() != 3)
        fail(exit_usage, "grid must be a single value or start:step:stop");
    const double start = parts[0], step = parts[1], stop = parts[2];
    if (!(step > 0.0) || stop < start)
        fail(exit_usage, "grid needs step > 0 and stop >= start");
    std::vector<double> grid;
    for (int i = 0;; ++i)
    {
        const double v = start + step * i;
        if (v > stop + 1e-9)
            break;
        grid.push_back(v);
    }
    return grid;
}

// "lo..hi" window in dB.
std::pair<double, double> parse_window(const std::string &text)
{
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        fail(exit_usage, "window must be lo_db..hi_db");
    try
    {
        return {std::stod(text.substr(0, pos)), std::stod(text.substr(pos + 2))};
    }
    catch (const std::exception &)
    {
        fail(exit_usage, "malformed window '" + text + "'");
    }
}

std::uint64_t parse_count(double value, const char *what)
{
    if (!(value >= 1.0) || value > 1e15)
        fail(exit_usage, std::string(what) + " out of range");
    return static_cast<std::uint64_t>(std::llround(value));
}

struct ProfileHandle
{
    mhdmt_profile *p = nullptr;
    explicit ProfileHandle(const std::vector<int32_t> &nodes)
    {
        check(mhdmt_profile_create(nodes.data(), nodes.size(), &p), "profile");
    }
    ~ProfileHandle() { mhdmt_profile_destroy(p); }
    ProfileHandle(const ProfileHandle &) = delete;
    ProfileHandle &operator=(const ProfileHandle &) = delete;
};

std::string format_profile(const std::vector<int32_t> &nodes)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < nodes.size(); ++i)
        os << (i ? "," : "") << nodes[i];
    os << ')';
    return os.str();
}

std::vector<int32_t> get_nodes(mhdmt_profile *p, bool ordered)
{
    std::vector<int32_t> nodes(64);
    size_t count = 0;
    const auto fn = ordered ? mhdmt_profile_ordered : mhdmt_profile_nodes;
    mhdmt_status s = fn(p, nodes.data(), nodes.size(), &count);
    if (s == MHDMT_ERR_BUFFER_TOO_SMALL)
    {
        nodes.resize(count);
        s = fn(p, nodes.data(), nodes.size(), &count);
    }
    check(s, "profile nodes");
    nodes.resize(count);
    return nodes;
}

// ------------------------------------------------------------------
// Run manifest and output plumbing
// ------------------------------------------------------------------

struct OutputOptions
{
    std::string format = "text"; // text | csv | json
    std::string out_path;        // empty = stdout
    bool timestamps = false;
};

std::string iso_now()
{
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

json make_manifest(const std::string &command, const json &config, const OutputOptions &options)
{
    json manifest;
    manifest["command"] = command;
    manifest["tool_version"] = mhdmt_version();
    manifest["config"] = config;
    if (options.timestamps)
        manifest["generated"] = iso_now();
    return manifest;
}

void write_text(const OutputOptions &options, const std::string &body)
{
    if (options.out_path.empty())
    {
        std::cout << body;
        return;
    }
    std::ofstream file(options.out_path, std::ios::binary);
    if (!file)
        fail(exit_usage, "cannot open output file " + options.out_path);
    file << body;
}

// CSV records go to the requested sink; the manifest accompanies them
// (stderr for stdout output, a .manifest.json sidecar for files).
void emit_records(const OutputOptions &options, const json &manifest, const std::string &csv_body,
                  const json &json_records)
{
    if (options.format == "json")
    {
        json document;
        document["manifest"] = manifest;
        document["records"] = json_records;
        write_text(options, document.dump(2) + "\n");
        return;
    }
    write_text(options, csv_body);
    if (options.out_path.empty())
    {
        std::cerr << "# manifest: " << manifest.dump() << "\n";
    }
    else
    {
        std::ofstream side(options.out_path + ".manifest.json", std::ios::binary);
        if (side)
            side << manifest.dump(2) << "\n";
    }
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ------------------------------------------------------------------
// dmt / reduce / equiv
// ------------------------------------------------------------------

struct DmtArgs
{
    std::string profile;
    std::string grid;
    bool check_recursive = false;
    OutputOptions out;
};

int run_dmt(const DmtArgs &args)
{
    const std::vector<int32_t> nodes = parse_profile(args.profile);
    ProfileHandle handle(nodes);

    const int32_t n_min = mhdmt_profile_n_min(handle.p);
    const std::vector<int32_t> ordered = get_nodes(handle.p, true);

    std::vector<int64_t> breakpoints(static_cast<std::size_t>(n_min) + 1);
    size_t count = 0;
    check(mhdmt_dmt_breakpoints(handle.p, breakpoints.data(), breakpoints.size(), &count), "dmt");

    std::vector<int64_t> coefficients(static_cast<std::size_t>(n_min));
    size_t c_count = 0;
    if (n_min > 0)
        check(mhdmt_coefficient_vector(handle.p, coefficients.data(), coefficients.size(), &c_count),
              "coefficients");

    const int32_t hops = mhdmt_profile_hops(handle.p);
    std::vector<int64_t> thresholds(static_cast<std::size_t>(hops));
    size_t p_count = 0;
    check(mhdmt_flow_thresholds(handle.p, thresholds.data(), thresholds.size(), &p_count), "thresholds");

    const std::int64_t max_diversity = breakpoints[0];
    const std::int64_t bound = static_cast<std::int64_t>(ordered[0]) * ordered[1];
    const bool bounds_ok = 2 * max_diversity > bound && max_diversity <= bound;

    std::vector<double> grid;
    if (!args.grid.empty())
        grid = parse_grid(args.grid);
    std::vector<double> interpolated;
    for (double r : grid)
    {
        double d = 0.0;
        check(mhdmt_dmt_at_real(handle.p, r, &d), "dmt interpolation");
        interpolated.push_back(d);
    }

    int32_t match = -1;
    if (args.check_recursive)
        check(mhdmt_dmt_cross_check(handle.p, &match), "recursive cross-check");

    json config;
    config["profile"] = nodes;
    config["grid"] = args.grid;
    config["check_recursive"] = args.check_recursive;
    const json manifest = make_manifest("dmt", config, args.out);

    if (args.out.format == "json")
    {
        json document;
        document["manifest"] = manifest;
        json report;
        report["profile"] = nodes;
        report["ordered"] = ordered;
        report["breakpoints"] = json::array();
        for (std::size_t k = 0; k < breakpoints.size(); ++k)
            report["breakpoints"].push_back({{"k", k}, {"d", breakpoints[k]}});
        report["coefficients"] = coefficients;
        report["flow_thresholds"] = thresholds;
        report["flow_threshold_last"] = "-inf";
        report["max_diversity"] = max_diversity;
        report["bounds_ok"] = bounds_ok;
        if (!grid.empty())
        {
            report["interpolated"] = json::array();
            for (std::size_t i = 0; i < grid.size(); ++i)
                report["interpolated"].push_back({{"r", grid[i]}, {"d", interpolated[i]}});
        }
        if (match >= 0)
            report["recursive_match"] = match == 1;
        document["report"] = report;
        write_text(args.out, document.dump(2) + "\n");
        return exit_ok;
    }

    std::ostringstream os;
    os << "profile:         " << format_profile(nodes) << "\n";
    os << "ordered:         " << format_profile(ordered) << "\n";
    os << "hops:            " << hops << "\n";
    os << "breakpoints:     ";
    for (std::size_t k = 0; k < breakpoints.size(); ++k)
        os << (k ? " " : "") << '(' << k << ',' << breakpoints[k] << ')';
    os << "\n";
    os << "coefficients:    [";
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        os << (i ? ", " : "") << coefficients[i];
    os << "]\n";
    os << "flow thresholds: [";
    for (std::size_t i = 0; i < thresholds.size(); ++i)
        os << (i ? ", " : "") << thresholds[i];
    os << (thresholds.empty() ? "-inf]" : ", -inf]") << "\n";
    os << "max diversity:   " << max_diversity << ", bounds (" << bound / 2.0 << ", " << bound << "] "
       << (bounds_ok ? "OK" : "VIOLATED") << "\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        os << "d(" << format_double(grid[i]) << ") = " << format_double(interpolated[i]) << "\n";
    if (match >= 0)
        os << "recursive cross-check: " << (match == 1 ? "MATCH" : "MISMATCH") << "\n";
    write_text(args.out, os.str());
    return match == 0 ? exit_numeric : exit_ok;
}

struct ReduceArgs
{
    std::string profile;
    OutputOptions out;
};

int run_reduce(const ReduceArgs &args)
{
    const std::vector<int32_t> nodes = parse_profile(args.profile);
    ProfileHandle handle(nodes);

    const std::vector<int32_t> ordered = get_nodes(handle.p, true);

    std::vector<int32_t> horizontal(nodes.size());
    size_t h_count = 0;
    check(mhdmt_minimal_horizontal_form(handle.p, horizontal.data(), horizontal.size(), &h_count),
          "reduce");
    horizontal.resize(h_count);

    std::vector<int32_t> vertical(nodes.size());
    size_t v_count = 0;
    check(mhdmt_minimal_vertical_form(handle.p, vertical.data(), vertical.size(), &v_count), "reduce");
    vertical.resize(v_count);

    int32_t order = 0, n_bar = 0;
    check(mhdmt_minimal_form_order(handle.p, &order), "reduce");
    check(mhdmt_min_relay_antennas(handle.p, &n_bar), "reduce");

    const bool already_minimal = horizontal == ordered && vertical == ordered;

    json config;
    config["profile"] = nodes;
    const json manifest = make_manifest("reduce", config, args.out);

    if (args.out.format == "json")
    {
        json document;
        document["manifest"] = manifest;
        document["report"] = {{"profile", nodes},
                              {"ordered", ordered},
                              {"minimal_horizontal", horizontal},
                              {"order", order},
                              {"min_relay_antennas", n_bar},
                              {"minimal_vertical", vertical},
                              {"already_minimal", already_minimal}};
        write_text(args.out, document.dump(2) + "\n");
        return exit_ok;
    }

    std::ostringstream os;
    os << "profile:             " << format_profile(nodes) << "\n";
    os << "ordered:             " << format_profile(ordered) << "\n";
    os << "minimal horizontal:  " << format_profile(horizontal) << "\n";
    os << "order:               " << order << "\n";
    os << "min relay antennas:  " << n_bar << "\n";
    os << "minimal vertical:    " << format_profile(vertical) << "\n";
    if (already_minimal)
        os << "already minimal\n";
    write_text(args.out, os.str());
    return exit_ok;
}

struct EquivArgs
{
    std::string profile_a;
    std::string profile_b;
    OutputOptions out;
};

int run_equiv(const EquivArgs &args)
{
    const std::vector<int32_t> nodes_a = parse_profile(args.profile_a);
    const std::vector<int32_t> nodes_b = parse_profile(args.profile_b);
    ProfileHandle a(nodes_a), b(nodes_b);

    int32_t equivalent = 0;
    check(mhdmt_profiles_equivalent(a.p, b.p, &equivalent), "equiv");

    std::vector<int32_t> minimal(nodes_a.size());
    size_t count = 0;
    check(mhdmt_minimal_horizontal_form(a.p, minimal.data(), minimal.size(), &count), "equiv");
    minimal.resize(count);

    if (args.out.format == "json")
    {
        json config;
        config["profile_a"] = nodes_a;
        config["profile_b"] = nodes_b;
        json document;
        document["manifest"] = make_manifest("equiv", config, args.out);
        document["report"] = {{"equivalent", equivalent == 1},
                              {"minimal_form_a", minimal}};
        write_text(args.out, document.dump(2) + "\n");
        return exit_ok;
    }

    std::ostringstream os;
    os << (equivalent ? "EQUIVALENT" : "NOT EQUIVALENT") << "\n";
    write_text(args.out, os.str());
    return exit_ok;
}

// ------------------------------------------------------------------
// simulate / pathloss
// ------------------------------------------------------------------

struct SimulateArgs
{
    std::string config_path;
    std::string profile;
    std::string scheme = "af";
    std::string snr;
    double rate = 0.0;
    double mux = -1.0;
    double trials = 0.0;
    double kappa = 0.0;
    std::uint64_t seed = 0;
    int threads = 0;
    bool longterm = false;
    double pathloss_alpha = 0.0;
    std::string fit_window;

    // which flags were actually given (for config-file overriding)
    bool has_profile = false, has_scheme = false, has_snr = false, has_rate = false, has_mux = false,
         has_trials = false, has_kappa = false, has_seed = false, has_threads = false,
         has_longterm = false, has_alpha = false;

    OutputOptions out;
};

int32_t scheme_from_name(const std::string &name)
{
    if (name == "af")
        return MHDMT_SCHEME_AF;
    if (name == "pf")
        return MHDMT_SCHEME_PF;
    if (name == "product")
        return MHDMT_SCHEME_PRODUCT;
    if (name == "direct")
        return MHDMT_SCHEME_DIRECT;
    fail(exit_usage, "unknown scheme '" + name + "' (af|pf|product|direct)");
}

const char *scheme_name(int32_t scheme)
{
    switch (scheme)
    {
    case MHDMT_SCHEME_AF:
        return "af";
    case MHDMT_SCHEME_PF:
        return "pf";
    case MHDMT_SCHEME_PRODUCT:
        return "product";
    default:
        return "direct";
    }
}

struct ResolvedSim
{
    std::vector<int32_t> profile;
    int32_t scheme = MHDMT_SCHEME_AF;
    int32_t rate_mode = MHDMT_RATE_FIXED;
    double rate_value = 1.0;
    std::vector<double> snr_grid;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::string seed_source = "default";
    double kappa = 1e6;
    int32_t normalization = MHDMT_NORM_SHORT_TERM;
    int32_t threads = 1;
    bool pathloss = false;
    double alpha = 0.0;
};

// Config file mirrors the simulation configuration; explicit flags override.
ResolvedSim resolve_simulation(const SimulateArgs &args)
{
    ResolvedSim sim;

    if (!args.config_path.empty())
    {
        std::ifstream file(args.config_path);
        if (!file)
            fail(exit_usage, "cannot read config file " + args.config_path);
        json config;
        try
        {
            file >> config;
        }
        catch (const std::exception &e)
        {
            fail(exit_usage, std::string("config file parse error: ") + e.what());
        }
        if (config.contains("profile"))
            sim.profile = config["profile"].get<std::vector<int32_t>>();
        if (config.contains("scheme"))
            sim.scheme = scheme_from_name(config["scheme"].get<std::string>());
        if (config.contains("rate_mode"))
            sim.rate_mode = config["rate_mode"].get<std::string>() == "multiplexing"
                                ? MHDMT_RATE_MULTIPLEXING
                                : MHDMT_RATE_FIXED;
        if (config.contains("rate_value"))
            sim.rate_value = config["rate_value"].get<double>();
        if (config.contains("snr_grid_db"))
            sim.snr_grid = config["snr_grid_db"].get<std::vector<double>>();
        if (config.contains("trials"))
            sim.trials = config["trials"].get<std::uint64_t>();
        if (config.contains("master_seed"))
        {
            sim.seed = config["master_seed"].get<std::uint64_t>();
            sim.seed_source = "config";
        }
        if (config.contains("kappa"))
            sim.kappa = config["kappa"].get<double>();
        if (config.contains("normalization"))
            sim.normalization = config["normalization"].get<std::string>() == "long_term"
                                    ? MHDMT_NORM_LONG_TERM
                                    : MHDMT_NORM_SHORT_TERM;
        if (config.contains("threads"))
            sim.threads = config["threads"].get<int32_t>();
        if (config.contains("pathloss_alpha"))
        {
            sim.pathloss = true;
            sim.alpha = config["pathloss_alpha"].get<double>();
        }
    }

    if (args.has_profile)
        sim.profile = parse_profile(args.profile);
    if (args.has_scheme || args.config_path.empty())
        sim.scheme = scheme_from_name(args.scheme);
    if (args.has_rate)
    {
        sim.rate_mode = MHDMT_RATE_FIXED;
        sim.rate_value = args.rate;
    }
    if (args.has_mux)
    {
        sim.rate_mode = MHDMT_RATE_MULTIPLEXING;
        sim.rate_value = args.mux;
    }
    if (args.has_snr)
        sim.snr_grid = parse_grid(args.snr);
    if (args.has_trials)
        sim.trials = parse_count(args.trials, "trials");
    if (args.has_kappa)
        sim.kappa = args.kappa;
    if (args.has_threads)
        sim.threads = args.threads;
    if (args.has_longterm)
        sim.normalization = MHDMT_NORM_LONG_TERM;
    if (args.has_alpha)
    {
        sim.pathloss = true;
        sim.alpha = args.pathloss_alpha;
    }

    if (args.has_seed)
    {
        sim.seed = args.seed;
        sim.seed_source = "flag";
    }
    else if (sim.seed_source != "config")
    {
        if (const char *env = std::getenv("MHDMT_SEED"))
        {
            sim.seed = std::strtoull(env, nullptr, 10);
            sim.seed_source = "env";
        }
    }

    if (sim.profile.empty())
        fail(exit_usage, "no profile given (use --profile or a config file)");
    if (sim.snr_grid.empty())
        fail(exit_usage, "no SNR grid given (use --snr or a config file)");
    return sim;
}

json sim_config_json(const ResolvedSim &sim)
{
    json config;
    config["profile"] = sim.profile;
    config["scheme"] = scheme_name(sim.scheme);
    config["rate_mode"] = sim.rate_mode == MHDMT_RATE_FIXED ? "fixed" : "multiplexing";
    config["rate_value"] = sim.rate_value;
    config["snr_grid_db"] = sim.snr_grid;
    config["trials"] = sim.trials;
    config["master_seed"] = sim.seed;
    config["seed_source"] = sim.seed_source;
    config["kappa"] = sim.kappa;
    config["normalization"] = sim.normalization == MHDMT_NORM_LONG_TERM ? "long_term" : "short_term";
    config["threads"] = sim.threads;
    if (sim.pathloss)
        config["pathloss_alpha"] = sim.alpha;
    return config;
}

mhdmt_sim_config to_capi(const ResolvedSim &sim)
{
    mhdmt_sim_config config{};
    config.profile = sim.profile.data();
    config.profile_len = sim.profile.size();
    config.scheme = sim.scheme;
    config.rate_mode = sim.rate_mode;
    config.rate_value = sim.rate_value;
    config.snr_grid_db = sim.snr_grid.data();
    config.snr_count = sim.snr_grid.size();
    config.trials = sim.trials;
    config.master_seed = sim.seed;
    config.kappa = sim.kappa;
    config.normalization = sim.normalization;
    config.threads = sim.threads;
    config.pathloss_enabled = sim.pathloss ? 1 : 0;
    config.pathloss_alpha = sim.alpha;
    return config;
}

int run_simulate(const SimulateArgs &args)
{
    const ResolvedSim sim = resolve_simulation(args);
    const mhdmt_sim_config config = to_capi(sim);

    std::vector<mhdmt_outage_point> points(sim.snr_grid.size());
    check(mhdmt_estimate_outage(&config, points.data()), "simulate");

    json manifest = make_manifest("simulate", sim_config_json(sim), args.out);

    if (!args.fit_window.empty())
    {
        const auto [lo_db, hi_db] = parse_window(args.fit_window);
        std::size_t lo = points.size(), hi = 0;
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            if (points[i].snr_db >= lo_db - 1e-9 && points[i].snr_db <= hi_db + 1e-9)
            {
                lo = std::min(lo, i);
                hi = std::max(hi, i);
            }
        }
        if (lo >= points.size())
            fail(exit_usage, "fit window contains no grid points");
        double slope = 0.0;
        check(mhdmt_diversity_slope(points.data(), points.size(), lo, hi, &slope), "slope fit");
        manifest["fitted_diversity"] = slope;
        manifest["fit_window_db"] = {lo_db, hi_db};
    }

    std::ostringstream csv;
    csv << "snr_db,rate_bits,p_out,outage_count,trials,ci95_half_width,pre_asymptotic\n";
    json records = json::array();
    for (const mhdmt_outage_point &pt : points)
    {
        csv << format_double(pt.snr_db) << ',' << format_double(pt.rate_bits) << ','
            << format_double(pt.p_out) << ',' << pt.outage_count << ',' << pt.trials << ','
            << format_double(pt.ci95_half_width) << ',' << pt.pre_asymptotic << "\n";
        json record;
        record["snr_db"] = pt.snr_db;
        record["rate_bits"] = pt.rate_bits;
        record["p_out"] = pt.p_out;
        record["outage_count"] = pt.outage_count;
        record["trials"] = pt.trials;
        record["ci95_half_width"] = pt.ci95_half_width;
        record["pre_asymptotic"] = pt.pre_asymptotic == 1;
        if (pt.zero_count)
            record["ci_note"] = "no outage events; one-sided 95% upper bound is 3/trials";
        records.push_back(record);
    }
    emit_records(args.out, manifest, csv.str(), records);
    return exit_ok;
}

struct PathlossArgs
{
    SimulateArgs sim; // reuses profile/rate/trials/seed/... flags
    double alpha = 3.5;
    double target = 1e-3;
    std::string probe = "0:60";
};

int run_pathloss(const PathlossArgs &args)
{
    SimulateArgs sim_args = args.sim;
    if (!sim_args.has_snr)
    {
        sim_args.snr = "10"; // placeholder grid; bisection probes its own points
        sim_args.has_snr = true;
    }
    ResolvedSim sim = resolve_simulation(sim_args);
    sim.pathloss = true;
    sim.alpha = args.alpha;

    const auto colon = args.probe.find(':');
    if (colon == std::string::npos)
        fail(exit_usage, "probe range must be lo:hi in dB");
    double probe_lo = 0.0, probe_hi = 0.0;
    try
    {
        probe_lo = std::stod(args.probe.substr(0, colon));
        probe_hi = std::stod(args.probe.substr(colon + 1));
    }
    catch (const std::exception &)
    {
        fail(exit_usage, "malformed probe range '" + args.probe + "'");
    }
    if (!(probe_hi > probe_lo))
        fail(exit_usage, "probe range must be lo:hi with hi > lo");

    const mhdmt_sim_config config = to_capi(sim);
    mhdmt_pathloss_gain gain{};
    check(mhdmt_pathloss_power_gain(&config, args.target, probe_lo, probe_hi, &gain), "pathloss");

    json config_json = sim_config_json(sim);
    config_json["target_pout"] = args.target;
    config_json["probe_db"] = {probe_lo, probe_hi};
    const json manifest = make_manifest("pathloss", config_json, args.sim.out);

    std::ostringstream csv;
    csv << "alpha,target_pout,multihop_snr_db,direct_snr_db,per_node_gain_db,total_gain_db\n";
    csv << format_double(args.alpha) << ',' << format_double(args.target) << ','
        << format_double(gain.multihop_snr_db) << ',' << format_double(gain.direct_snr_db) << ','
        << format_double(gain.per_node_gain_db) << ',' << format_double(gain.total_gain_db) << "\n";

    json record;
    record["alpha"] = args.alpha;
    record["target_pout"] = args.target;
    record["multihop_snr_db"] = gain.multihop_snr_db;
    record["direct_snr_db"] = gain.direct_snr_db;
    record["per_node_gain_db"] = gain.per_node_gain_db;
    record["total_gain_db"] = gain.total_gain_db;

    emit_records(args.sim.out, manifest, csv.str(), json::array({record}));
    return exit_ok;
}

void add_output_options(CLI::App *cmd, OutputOptions &out, const char *default_format)
{
    out.format = default_format;
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", out.out_path, "Write output to a file instead of stdout");
    cmd->add_flag("--timestamps", out.timestamps, "Include wall-clock timestamps in the manifest");
}

void add_simulate_options(CLI::App *cmd, SimulateArgs &args)
{
    cmd->add_option("--config", args.config_path, "JSON config file (flags override its values)");
    auto *profile = cmd->add_option("--profile", args.profile, "Antenna profile, e.g. 2,2,2");
    auto *scheme = cmd->add_option("--scheme", args.scheme, "af|pf|product|direct");
    auto *snr = cmd->add_option("--snr", args.snr, "SNR grid in dB: start:step:stop or single value");
    auto *rate = cmd->add_option("--rate", args.rate, "Fixed target rate in bits per channel use");
    auto *mux = cmd->add_option("--mux", args.mux, "Multiplexing gain r (rate = r log2 SNR)");
    auto *trials = cmd->add_option("--trials", args.trials, "Trials per SNR point (accepts 1e6)");
    auto *kappa = cmd->add_option("--kappa", args.kappa, "Relay gain clip");
    auto *seed = cmd->add_option("--seed", args.seed, "Master seed (else MHDMT_SEED env, else 0)");
    auto *threads = cmd->add_option("--threads", args.threads, "Worker threads (result-invariant)");
    auto *longterm = cmd->add_flag("--longterm", args.longterm, "Long-term (average-power) relay gains");

    cmd->callback([&args, profile, scheme, snr, rate, mux, trials, kappa, seed, threads, longterm] {
        args.has_profile = profile->count() > 0;
        args.has_scheme = scheme->count() > 0;
        args.has_snr = snr->count() > 0;
        args.has_rate = rate->count() > 0;
        args.has_mux = mux->count() > 0;
        args.has_trials = trials->count() > 0;
        args.has_kappa = kappa->count() > 0;
        args.has_seed = seed->count() > 0;
        args.has_threads = threads->count() > 0;
        args.has_longterm = longterm->count() > 0;
    });
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Diversity-multiplexing tradeoff and outage toolkit for MIMO multihop relay channels"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mhdmt_version()));

    DmtArgs dmt_args;
    auto *dmt_cmd = app.add_subcommand("dmt", "Exact tradeoff of a profile");
    dmt_cmd->add_option("profile", dmt_args.profile, "Antenna profile, e.g. 2,2,2")->required();
    dmt_cmd->add_option("--grid", dmt_args.grid, "Multiplexing-gain grid start:step:stop");
    dmt_cmd->add_flag("--check-recursive", dmt_args.check_recursive,
                      "Re-derive through the flow recursion and report MATCH/MISMATCH");
    add_output_options(dmt_cmd, dmt_args.out, "text");

    ReduceArgs reduce_args;
    auto *reduce_cmd = app.add_subcommand("reduce", "Minimal forms of a profile");
    reduce_cmd->add_option("profile", reduce_args.profile, "Antenna profile")->required();
    add_output_options(reduce_cmd, reduce_args.out, "text");

    EquivArgs equiv_args;
    auto *equiv_cmd = app.add_subcommand("equiv", "Equivalence of two profiles");
    equiv_cmd->add_option("profile_a", equiv_args.profile_a, "First profile")->required();
    equiv_cmd->add_option("profile_b", equiv_args.profile_b, "Second profile")->required();
    add_output_options(equiv_cmd, equiv_args.out, "text");

    SimulateArgs simulate_args;
    auto *simulate_cmd = app.add_subcommand("simulate", "Monte Carlo outage sweep");
    add_simulate_options(simulate_cmd, simulate_args);
    simulate_cmd->add_option("--fit-slope", simulate_args.fit_window,
                             "Fit the diversity slope over lo_db..hi_db");
    add_output_options(simulate_cmd, simulate_args.out, "csv");

    PathlossArgs pathloss_args;
    auto *pathloss_cmd = app.add_subcommand("pathloss", "Multihop vs direct power gain");
    add_simulate_options(pathloss_cmd, pathloss_args.sim);
    pathloss_cmd->add_option("--alpha", pathloss_args.alpha, "Path-loss exponent");
    pathloss_cmd->add_option("--target", pathloss_args.target, "Target outage probability");
    pathloss_cmd->add_option("--probe", pathloss_args.probe, "Bisection range lo:hi in dB");
    add_output_options(pathloss_cmd, pathloss_args.sim.out, "csv");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_usage;
    }

    try
    {
        if (dmt_cmd->parsed())
            return run_dmt(dmt_args);
        if (reduce_cmd->parsed())
            return run_reduce(reduce_args);
        if (equiv_cmd->parsed())
            return run_equiv(equiv_args);
        if (simulate_cmd->parsed())
            return run_simulate(simulate_args);
        if (pathloss_cmd->parsed())
            return run_pathloss(pathloss_args);
    }
    catch (const CliError &e)
    {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numeric;
    }
    return exit_usage;
}
