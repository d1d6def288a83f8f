#ifndef VPL_TESTS_SUPPORT_HPP
#define VPL_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "vpl/propagation.hpp"
#include "vpl/trace.hpp"

namespace vpltest {

/// Unique scratch directory under the system temp root, removed on scope
/// exit so test runs leave nothing behind.
class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        static const std::uint64_t run_id = std::random_device{}();
        static std::uint64_t counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("vpl-" + tag + "-" + std::to_string(run_id) + "-" +
                 std::to_string(++counter));
        std::filesystem::create_directories(path_);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }

    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const {
        return (path_ / name).string();
    }

  private:
    std::filesystem::path path_;
};

inline vpl::Trace make_trace(std::vector<double> distances,
                             std::vector<double> losses,
                             vpl::Frequency freq = vpl::Frequency::from_ghz(
                                 59.6),
                             vpl::Direction dir = vpl::Direction::moving_in) {
    vpl::Trace trace;
    trace.direction = dir;
    trace.relative_speed_mps = 13.89;
    trace.frequency = freq;
    trace.samples.reserve(distances.size());
    for (std::size_t i = 0; i < distances.size(); ++i) {
        trace.samples.push_back(vpl::Sample{0.005 * static_cast<double>(i),
                                            distances[i], losses[i]});
    }
    return trace;
}

/// Noiseless trace from a model over the given distances.
inline vpl::Trace noiseless_trace(const vpl::ModelParams& model,
                                  std::vector<double> distances,
                                  vpl::Frequency freq =
                                      vpl::Frequency::from_ghz(59.6)) {
    std::vector<double> losses(distances.size());
    for (std::size_t i = 0; i < distances.size(); ++i) {
        losses[i] = vpl::median_path_loss_db(model, freq, distances[i]);
    }
    return make_trace(std::move(distances), std::move(losses), freq);
}

/// Evenly spaced distance grid, endpoints included.
inline std::vector<double> distance_grid(double lo, double hi, std::size_t n) {
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(n - 1);
    }
    return d;
}

} // namespace vpltest

#endif // VPL_TESTS_SUPPORT_HPP
