#include "vpl/trace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vpl {

std::string_view direction_name(Direction direction) {
    return direction == Direction::moving_in ? "moving_in" : "moving_away";
}

void validate(const Trace& trace) {
    if (trace.samples.empty()) {
        throw std::invalid_argument("trace has no samples");
    }
    if (!(trace.relative_speed_mps > 0.0) ||
        !std::isfinite(trace.relative_speed_mps)) {
        throw std::invalid_argument("relative_speed_mps must be positive");
    }
    double prev_time = -std::numeric_limits<double>::infinity();
    for (const Sample& s : trace.samples) {
        if (!(s.time_s > prev_time)) {
            throw std::invalid_argument(
                "sample times must be strictly increasing");
        }
        prev_time = s.time_s;
        if (!(s.distance_m >= 0.0) || !std::isfinite(s.distance_m)) {
            throw std::invalid_argument("sample distance must be >= 0 m");
        }
        if (!std::isfinite(s.pl_db)) {
            throw std::invalid_argument("sample path loss must be finite");
        }
    }
}

} // namespace vpl
