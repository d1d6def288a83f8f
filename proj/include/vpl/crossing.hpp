#ifndef VPL_CROSSING_HPP
#define VPL_CROSSING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "vpl/propagation.hpp"
#include "vpl/trace.hpp"

namespace vpl {

/// Geometry, sampling and generator of one synthetic crossing pass. The cars
/// start `initial_separation_m` apart, close at `relative_speed_mps`, meet,
/// and depart to the same separation on the far side.
struct ScenarioConfig {
    double initial_separation_m = 35.0;
    double relative_speed_mps = 13.89; // 50 km/h; 70 km/h is 19.44
    double lateral_offset_m = 0.0;
    double sample_interval_s = 0.005;
    Frequency frequency = Frequency::from_ghz(59.6);
    ModelParams generator = ModelParams{presets::kMovingIn50Kmh};
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on nonpositive fields or a sampling step
/// that does not resolve the pass.
void validate(const ScenarioConfig& config);

/// One sample of a crossing pass. Negative signed distance means the cars
/// are approaching; zero is the meeting point. `distance_m` is the true
/// Tx-Rx separation, sqrt(signed^2 + lateral_offset^2).
struct CrossingSample {
    double time_s = 0.0;
    double signed_distance_m = 0.0;
    double distance_m = 0.0;
    double pl_db = 0.0;
};

/// Whether the sample sits below the 1 m model reference; such samples are
/// kept in the trace but excluded from fitting.
bool below_reference(const CrossingSample& sample);

/// A full pass over the rendezvous, with the metadata needed to split it
/// into per-direction traces.
struct CrossingTrace {
    std::vector<CrossingSample> samples;
    double relative_speed_mps = 0.0;
    Frequency frequency = Frequency::from_ghz(59.6);
};

/// Samples signed distance s(t) = -separation + speed*t every
/// sample_interval_s until +separation, evaluates the generator at the
/// unsigned distance and adds seeded shadowing. Deterministic for a given
/// (config, seed).
CrossingTrace simulate_crossing(const ScenarioConfig& config);

/// Partitions a pass at the meeting point: samples at negative signed
/// distance become the moving-in trace, the rest (zero included) the
/// moving-away trace. Both sides must be populated.
std::pair<Trace, Trace> split_at_rendezvous(const CrossingTrace& trace);

/// Distance at which the two median curves intersect,
///   d = 10^((eta1_away - eta1_in) / (eta2_in - eta2_away));
/// the frequency anchor cancels. Equal eta2 (parallel curves) is an error.
double crossover_distance_m(const CrossingParams& moving_in,
                            const CrossingParams& moving_away);

/// Largest |PL_in - PL_away| over [d_lo, d_hi]. The gap is monotone in
/// log10(d), so the maximum sits at an interval endpoint and is evaluated
/// there exactly.
double max_path_loss_gap_db(const CrossingParams& moving_in,
                            const CrossingParams& moving_away, double d_lo_m,
                            double d_hi_m);

/// Speed-independent model for one direction: the arithmetic mean of eta1,
/// eta2 and sigma across the two per-speed parameter sets.
CrossingParams average_params(const CrossingParams& at_50kmh,
                              const CrossingParams& at_70kmh);

} // namespace vpl

#endif // VPL_CROSSING_HPP
