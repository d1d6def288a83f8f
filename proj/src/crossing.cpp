#include "vpl/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vpl {

namespace {

// Evaluation floor for below-reference samples: keeps the log finite if the
// sample grid lands exactly on the meeting point.
constexpr double kEvalFloorM = 1e-3;

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) +
                                    " must be positive and finite");
    }
}

} // namespace

void validate(const ScenarioConfig& config) {
    require_positive(config.initial_separation_m, "initial_separation_m");
    require_positive(config.relative_speed_mps, "relative_speed_mps");
    require_positive(config.sample_interval_s, "sample_interval_s");
    if (!(config.lateral_offset_m >= 0.0) ||
        !std::isfinite(config.lateral_offset_m)) {
        throw std::invalid_argument("lateral_offset_m must be >= 0");
    }
    if (!(config.sample_interval_s * config.relative_speed_mps <
          config.initial_separation_m)) {
        throw std::invalid_argument(
            "sample step exceeds the initial separation: nothing to sample");
    }
    vpl::validate(config.generator);
}

bool below_reference(const CrossingSample& sample) {
    return sample.distance_m < kReferenceDistanceM;
}

CrossingTrace simulate_crossing(const ScenarioConfig& config) {
    validate(config);
    const double step_m = config.relative_speed_mps * config.sample_interval_s;
    // Sample count covers [-separation, +separation]; the small slack keeps
    // an exactly-representable endpoint on the grid.
    const auto count = static_cast<std::size_t>(std::floor(
                           2.0 * config.initial_separation_m / step_m + 1e-9)) +
                       1;

    std::mt19937_64 rng(config.seed);
    const double lateral_sq =
        config.lateral_offset_m * config.lateral_offset_m;
    const double sigma = sigma_of(config.generator);

    CrossingTrace trace;
    trace.relative_speed_mps = config.relative_speed_mps;
    trace.frequency = config.frequency;
    trace.samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        CrossingSample sample;
        sample.time_s = static_cast<double>(i) * config.sample_interval_s;
        sample.signed_distance_m = -config.initial_separation_m +
                                   config.relative_speed_mps * sample.time_s;
        sample.distance_m = std::sqrt(
            sample.signed_distance_m * sample.signed_distance_m + lateral_sq);
        sample.pl_db = detail::median_path_loss_unchecked_db(
                           config.generator, config.frequency,
                           std::max(sample.distance_m, kEvalFloorM)) +
                       sample_shadowing_db(sigma, rng);
        trace.samples.push_back(sample);
    }
    return trace;
}

std::pair<Trace, Trace> split_at_rendezvous(const CrossingTrace& trace) {
    Trace moving_in;
    moving_in.direction = Direction::moving_in;
    moving_in.relative_speed_mps = trace.relative_speed_mps;
    moving_in.frequency = trace.frequency;
    Trace moving_away = moving_in;
    moving_away.direction = Direction::moving_away;

    for (const CrossingSample& s : trace.samples) {
        // A sample exactly at the meeting point belongs to moving-away.
        Trace& half =
            s.signed_distance_m < 0.0 ? moving_in : moving_away;
        half.samples.push_back(Sample{s.time_s, s.distance_m, s.pl_db});
    }
    if (moving_in.samples.empty() || moving_away.samples.empty()) {
        throw std::invalid_argument(
            "one-sided trace: pass must span both sides of the rendezvous");
    }
    return {std::move(moving_in), std::move(moving_away)};
}

double crossover_distance_m(const CrossingParams& moving_in,
                            const CrossingParams& moving_away) {
    if (moving_in.eta2 == moving_away.eta2) {
        throw std::invalid_argument(
            "parallel or identical curves never cross (equal eta2)");
    }
    return std::pow(10.0, (moving_away.eta1_db - moving_in.eta1_db) /
                              (moving_in.eta2 - moving_away.eta2));
}

double max_path_loss_gap_db(const CrossingParams& moving_in,
                            const CrossingParams& moving_away, double d_lo_m,
                            double d_hi_m) {
    if (!(d_lo_m >= kReferenceDistanceM) || !(d_lo_m < d_hi_m) ||
        !std::isfinite(d_hi_m)) {
        throw std::invalid_argument("gap interval must satisfy 1 <= lo < hi");
    }
    const double d_eta1 = moving_in.eta1_db - moving_away.eta1_db;
    const double d_eta2 = moving_in.eta2 - moving_away.eta2;
    const double gap_lo = d_eta1 + d_eta2 * std::log10(d_lo_m);
    const double gap_hi = d_eta1 + d_eta2 * std::log10(d_hi_m);
    return std::max(std::abs(gap_lo), std::abs(gap_hi));
}

CrossingParams average_params(const CrossingParams& at_50kmh,
                              const CrossingParams& at_70kmh) {
    return CrossingParams{(at_50kmh.eta1_db + at_70kmh.eta1_db) / 2.0,
                          (at_50kmh.eta2 + at_70kmh.eta2) / 2.0,
                          (at_50kmh.sigma_db + at_70kmh.sigma_db) / 2.0};
}

} // namespace vpl
