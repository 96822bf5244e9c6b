#include "ashwa/sim/latency.hpp"

#include <iterator>
#include <stdexcept>

namespace ashwa::sim {

void LatencyModel::validate() const
{
    if (base < 0 || per_message < 0 || quadratic < 0) throw std::invalid_argument("latency model terms must be non-negative");
}

const Calibration& reference_block_times()
{
    static const Calibration table{{21, 9.0},   {31, 23.0},  {41, 54.0},  {51, 114.0},
                                   {61, 174.0}, {71, 278.0}, {81, 420.0}, {91, 879.0}};
    return table;
}

double consensus_round_time(std::size_t n, const LatencyModel& model)
{
    if (n < 1) throw std::invalid_argument("consensus_round_time: committee size must be positive");
    model.validate();
    const auto x = static_cast<double>(n);
    return model.base + model.per_message * x + model.quadratic * x * x;
}

double consensus_round_time(std::size_t n, const Calibration& calibration)
{
    if (n < 1) throw std::invalid_argument("consensus_round_time: committee size must be positive");
    if (calibration.empty()) throw std::invalid_argument("consensus_round_time: empty calibration");
    for (const auto& [size, seconds] : calibration)
        if (size == 0 || !(seconds > 0)) throw std::invalid_argument("calibration entries must be positive");

    const auto x = static_cast<double>(n);
    auto upper = calibration.lower_bound(n);
    if (upper != calibration.end() && upper->first == n) return upper->second;
    auto scaled = [x](const auto& edge) {
        const double r = x / static_cast<double>(edge.first);
        return edge.second * r * r;
    };
    if (upper == calibration.begin()) return scaled(*upper);
    if (upper == calibration.end()) return scaled(*calibration.rbegin());
    const auto lower = std::prev(upper);
    const double x0 = static_cast<double>(lower->first), x1 = static_cast<double>(upper->first);
    return lower->second + (upper->second - lower->second) * (x - x0) / (x1 - x0);
}

double throughput(double block_time, std::uint64_t block_bytes, std::uint64_t tx_bytes)
{
    if (!(block_time > 0)) throw std::invalid_argument("throughput: block time must be positive");
    if (tx_bytes == 0) throw std::invalid_argument("throughput: transaction size must be positive");
    return static_cast<double>(block_bytes) / static_cast<double>(tx_bytes) / block_time;
}

}  // namespace ashwa::sim
