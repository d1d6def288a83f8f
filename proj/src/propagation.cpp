#include "vpl/propagation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vpl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

void require_sigma(double sigma_db) {
    if (!(sigma_db >= 0.0) || !std::isfinite(sigma_db)) {
        throw std::invalid_argument("sigma_db must be finite and >= 0");
    }
}

} // namespace

Frequency Frequency::from_ghz(double value_ghz) {
    if (!positive_finite(value_ghz)) {
        throw std::invalid_argument("frequency must be positive and finite");
    }
    return Frequency(value_ghz);
}

Frequency Frequency::from_hz(double value_hz) {
    return from_ghz(value_hz / 1e9);
}

ModelFamily family_of(const ModelParams& model) {
    return static_cast<ModelFamily>(model.index());
}

std::string_view family_name(ModelFamily family) {
    switch (family) {
    case ModelFamily::fi: return "fi";
    case ModelFamily::ci: return "ci";
    case ModelFamily::abg: return "abg";
    case ModelFamily::three_gpp: return "3gpp";
    case ModelFamily::crossing: return "crossing";
    }
    throw std::invalid_argument("unknown model family");
}

double sigma_of(const ModelParams& model) {
    return std::visit([](const auto& p) { return p.sigma_db; }, model);
}

ModelParams with_sigma(ModelParams model, double sigma_db) {
    std::visit([sigma_db](auto& p) { p.sigma_db = sigma_db; }, model);
    return model;
}

void validate(const ModelParams& model) {
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            require_sigma(p.sigma_db);
            if constexpr (std::is_same_v<T, FiParams>) {
                require_finite(p.alpha_db, "alpha_db");
                require_finite(p.beta, "beta");
            } else if constexpr (std::is_same_v<T, CiParams>) {
                require_finite(p.beta, "beta");
            } else if constexpr (std::is_same_v<T, AbgParams>) {
                require_finite(p.alpha, "alpha");
                require_finite(p.beta_db, "beta_db");
                require_finite(p.gamma, "gamma");
            } else if constexpr (std::is_same_v<T, CrossingParams>) {
                require_finite(p.eta1_db, "eta1_db");
                require_finite(p.eta2, "eta2");
            }
        },
        model);
}

double fspl_db(Frequency f, double d0_m) {
    if (d0_m != kReferenceDistanceM) {
        throw std::invalid_argument(
            "fspl_db only accepts the 1 m reference distance");
    }
    return 20.0 * std::log10(4.0 * kPi * f.hz() / kSpeedOfLightMps);
}

namespace detail {

double median_path_loss_unchecked_db(const ModelParams& model, Frequency f,
                                     double distance_m) {
    const double log_d = std::log10(distance_m);
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, FiParams>) {
                return p.alpha_db + 10.0 * p.beta * log_d;
            } else if constexpr (std::is_same_v<T, CiParams>) {
                return fspl_db(f) + 10.0 * p.beta * log_d;
            } else if constexpr (std::is_same_v<T, AbgParams>) {
                return 10.0 * p.alpha * log_d + p.beta_db +
                       10.0 * p.gamma * std::log10(f.ghz());
            } else if constexpr (std::is_same_v<T, ThreeGppParams>) {
                return kThreeGppInterceptDb + kThreeGppDistSlopeDb * log_d +
                       kFreqSlopeDbPerDecade * std::log10(f.ghz());
            } else {
                static_assert(std::is_same_v<T, CrossingParams>);
                return p.eta1_db + kFreqSlopeDbPerDecade * std::log10(f.ghz()) +
                       p.eta2 * log_d;
            }
        },
        model);
}

} // namespace detail

double median_path_loss_db(const ModelParams& model, Frequency f,
                           double distance_m) {
    validate(model);
    if (!(distance_m >= kReferenceDistanceM)) {
        throw std::invalid_argument(
            "distance below the 1 m reference: log-distance models are "
            "undefined there");
    }
    return detail::median_path_loss_unchecked_db(model, f, distance_m);
}

double sample_shadowing_db(double sigma_db, std::mt19937_64& rng) {
    require_sigma(sigma_db);
    if (sigma_db == 0.0) {
        return 0.0;
    }
    // Box-Muller on two 53-bit uniforms; u1 in (0,1] so the log is finite.
    const double u1 = 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return sigma_db * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * kPi * u2);
}

double path_loss_db(const ModelParams& model, Frequency f, double distance_m,
                    std::mt19937_64& rng) {
    const double median = median_path_loss_db(model, f, distance_m);
    return median + sample_shadowing_db(sigma_of(model), rng);
}

} // namespace vpl
