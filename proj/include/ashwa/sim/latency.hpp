#pragma once

#include <cstdint>
#include <map>

namespace ashwa::sim {

/// Agreement time as a polynomial in the committee size.
struct LatencyModel {
    double base = 1.0;
    double per_message = 0.05;
    /// Seconds per n^2, for the all-to-all vote exchange.
    double quadratic = 0.04;

    void validate() const;
};

/// Measured agreement seconds per committee size.
using Calibration = std::map<std::size_t, double>;

/// Block times measured on a PBFT testbed for n = 21 ... 91.
const Calibration& reference_block_times();

double consensus_round_time(std::size_t n, const LatencyModel& model);

/// Linear interpolation between calibration points. Outside the table the
/// nearest point is scaled by (n / n_edge)^2.
double consensus_round_time(std::size_t n, const Calibration& calibration);

/// Transactions per second for full blocks.
double throughput(double block_time, std::uint64_t block_bytes, std::uint64_t tx_bytes);

}  // namespace ashwa::sim
