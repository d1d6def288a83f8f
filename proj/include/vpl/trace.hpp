#ifndef VPL_TRACE_HPP
#define VPL_TRACE_HPP

#include <vector>

#include "vpl/propagation.hpp"

namespace vpl {

enum class Direction { moving_in, moving_away };

std::string_view direction_name(Direction direction);

/// One measured or synthetic path-loss sample.
struct Sample {
    double time_s = 0.0;
    double distance_m = 0.0; // Tx-Rx separation
    double pl_db = 0.0;
};

/// Ordered samples from one scenario half, with the metadata the fitting
/// routines need. Samples below the 1 m reference may be present; the fits
/// exclude them and report the count.
struct Trace {
    std::vector<Sample> samples;
    Direction direction = Direction::moving_in;
    double relative_speed_mps = 0.0;
    Frequency frequency = Frequency::from_ghz(59.6);
};

/// Throws std::invalid_argument unless the trace is non-empty, times are
/// strictly increasing, distances are nonnegative and losses finite.
void validate(const Trace& trace);

} // namespace vpl

#endif // VPL_TRACE_HPP
