#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ashwa/analysis/nic.hpp"
#include "ashwa/analysis/security.hpp"
#include "ashwa/cli/config.hpp"
#include "ashwa/sim/latency.hpp"
#include "ashwa/sim/session.hpp"

namespace ashwa::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitViolation = 2 };

struct ExperimentSpec {
    std::string command;
    std::optional<std::string> config_path;
    /// CSV destination; "-" is standard output.
    std::string out_path = "-";
    std::optional<std::uint64_t> seed;
    unsigned parallel = 1;
};

/// Runs fn(i) for i in [0, count) on up to `threads` threads.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

// committee-size

struct CommitteeSizeOptions {
    std::vector<Rational> alphas;
    std::vector<Rational> epsilons;
    std::size_t max_n = 1000;

    /// alpha_A from 0.01 to 0.18 in steps of 0.01; epsilon in {2e-4, 2e-5, 2e-6}.
    static CommitteeSizeOptions defaults();
};

struct CommitteeSizeRow {
    Rational alpha;
    Rational epsilon;
    std::optional<analysis::SizingResult> result;
};

/// One row per (alpha, epsilon), sorted by alpha then decreasing epsilon.
std::vector<CommitteeSizeRow> committee_size_table(const CommitteeSizeOptions& options, unsigned parallel = 1);
void write_committee_size_csv(std::ostream& out, const std::vector<CommitteeSizeRow>& rows, std::size_t max_n);

// tps-sweep

struct TpsOptions {
    std::vector<std::size_t> sizes{21, 31, 41, 51, 61, 71, 81, 91};
    bool calibrated = true;
    sim::Calibration calibration = sim::reference_block_times();
    sim::LatencyModel model;
    std::uint64_t block_bytes = std::uint64_t{16} << 20;
    std::uint64_t tx_bytes = 200;
};

struct TpsRow {
    std::size_t committee_size = 0;
    double block_time = 0.0;
    double tps = 0.0;
};

std::vector<TpsRow> tps_sweep(const TpsOptions& options);
void write_tps_csv(std::ostream& out, const std::vector<TpsRow>& rows);

// delta

struct DeltaOptions {
    std::vector<std::size_t> sizes{4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
    /// Chance that another seat signs an invalid operation.
    std::vector<Rational> sign_probabilities;

    static DeltaOptions defaults();
};

struct DeltaRow {
    std::size_t committee_size = 0;
    std::size_t threshold = 0;
    Rational q;
    Rational p_invalid_s1;
    Rational p_invalid_s2;
    Rational delta;
};

std::vector<DeltaRow> delta_table(const DeltaOptions& options, unsigned parallel = 1);
void write_delta_csv(std::ostream& out, const std::vector<DeltaRow>& rows);

// nic-check

struct NicOptions {
    agents::GameParams game;
    std::size_t committee_size = 4;
    std::size_t n_byzantine = 0;
    std::size_t n_rational = 1;
    Rational alpha_a = 0;
    /// Overrides the delta_min derived from the committee game.
    std::optional<Rational> delta_min;
};

struct NicResult {
    analysis::NicReport report;
    Rational delta_min;
};

NicResult nic_evaluate(const NicOptions& options);
void write_nic_csv(std::ostream& out, const NicResult& result);

// config loading; each reads its sections and leaves finish() to the caller

CommitteeSizeOptions load_committee_size(IniDocument& doc);
TpsOptions load_tps(IniDocument& doc);
DeltaOptions load_delta(IniDocument& doc);
NicOptions load_nic(IniDocument& doc);
agents::GameParams load_game(IniDocument& doc);
sim::SessionConfig load_session(IniDocument& doc);

/// Dispatches spec.command. Diagnostics go to err.
int run_command(const ExperimentSpec& spec, std::ostream& err);

}  // namespace ashwa::cli
