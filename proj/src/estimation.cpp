#include "vpl/estimation.hpp"

#include <cmath>

namespace vpl {

namespace {

struct Design {
    std::vector<double> distance_m; // retained samples only (d >= 1 m)
    std::vector<double> pl_db;
    std::size_t excluded = 0;

    std::vector<double> log_d(double scale = 1.0) const {
        std::vector<double> x(distance_m.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = scale * std::log10(distance_m[i]);
        }
        return x;
    }
};

Design retained_samples(const Trace& trace) {
    validate(trace);
    Design design;
    design.distance_m.reserve(trace.samples.size());
    design.pl_db.reserve(trace.samples.size());
    for (const Sample& s : trace.samples) {
        if (s.distance_m < kReferenceDistanceM) {
            ++design.excluded;
            continue;
        }
        design.distance_m.push_back(s.distance_m);
        design.pl_db.push_back(s.pl_db);
    }
    return design;
}

void require_identifiable(const Design& design) {
    if (design.distance_m.size() < 2) {
        throw FitError("fit needs at least two samples at or above the 1 m "
                       "reference distance");
    }
    const double first = design.distance_m.front();
    bool distinct = false;
    for (double d : design.distance_m) {
        if (d != first) {
            distinct = true;
            break;
        }
    }
    if (!distinct) {
        throw FitError("degenerate design: all samples at the same distance");
    }
}

struct Line {
    double intercept = 0.0;
    double slope = 0.0;
};

// Closed-form simple linear regression with centered sums.
Line least_squares_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        sxx += dx * dx;
        sxy += dx * (y[i] - mean_y);
    }
    if (sxx == 0.0) {
        throw FitError("degenerate design: regressor has no spread");
    }
    Line line;
    line.slope = sxy / sxx;
    line.intercept = mean_y - line.slope * mean_x;
    return line;
}

// Regression through the origin; used by the CI fit where the intercept is
// pinned to free-space loss.
double through_origin_slope(std::span<const double> x,
                            std::span<const double> y) {
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    if (sxx == 0.0) {
        throw FitError("degenerate design: regressor identically zero");
    }
    return sxy / sxx;
}

FitResult finish(ModelParams params, const Trace& trace,
                 const Design& design) {
    FitResult result;
    result.excluded_below_reference = design.excluded;
    result.residuals_db.resize(design.pl_db.size());
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < design.pl_db.size(); ++i) {
        const double predicted =
            median_path_loss_db(params, trace.frequency, design.distance_m[i]);
        const double r = design.pl_db[i] - predicted;
        result.residuals_db[i] = r;
        sum_sq += r * r;
    }
    result.rmse_db =
        std::sqrt(sum_sq / static_cast<double>(design.pl_db.size()));
    result.params = with_sigma(params, estimate_sigma_db(result.residuals_db));
    return result;
}

} // namespace

double estimate_sigma_db(std::span<const double> values) {
    if (values.size() < 2) {
        throw std::invalid_argument(
            "estimate_sigma_db needs at least two values");
    }
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double sum_sq = 0.0;
    for (double v : values) {
        const double d = v - mean;
        sum_sq += d * d;
    }
    return std::sqrt(sum_sq / static_cast<double>(values.size() - 1));
}

FitResult fit_fi(const Trace& trace) {
    Design design = retained_samples(trace);
    require_identifiable(design);
    const Line line = least_squares_line(design.log_d(10.0), design.pl_db);
    return finish(FiParams{line.intercept, line.slope, 0.0}, trace, design);
}

FitResult fit_ci(const Trace& trace) {
    Design design = retained_samples(trace);
    require_identifiable(design);
    const double fspl = fspl_db(trace.frequency);
    std::vector<double> y(design.pl_db);
    for (double& v : y) {
        v -= fspl;
    }
    const double beta = through_origin_slope(design.log_d(10.0), y);
    return finish(CiParams{beta, 0.0}, trace, design);
}

FitResult fit_abg(const Trace& trace, double gamma_fixed) {
    if (!std::isfinite(gamma_fixed)) {
        throw std::invalid_argument("gamma_fixed must be finite");
    }
    Design design = retained_samples(trace);
    require_identifiable(design);
    const double freq_term =
        10.0 * gamma_fixed * std::log10(trace.frequency.ghz());
    std::vector<double> y(design.pl_db);
    for (double& v : y) {
        v -= freq_term;
    }
    const Line line = least_squares_line(design.log_d(10.0), y);
    return finish(AbgParams{line.slope, line.intercept, gamma_fixed, 0.0},
                  trace, design);
}

FitResult fit_three_gpp(const Trace& trace) {
    Design design = retained_samples(trace);
    require_identifiable(design);
    return finish(ThreeGppParams{0.0}, trace, design);
}

FitResult fit_crossing(const Trace& trace) {
    Design design = retained_samples(trace);
    require_identifiable(design);
    const double freq_term =
        kFreqSlopeDbPerDecade * std::log10(trace.frequency.ghz());
    std::vector<double> y(design.pl_db);
    for (double& v : y) {
        v -= freq_term;
    }
    const Line line = least_squares_line(design.log_d(), y);
    return finish(CrossingParams{line.intercept, line.slope, 0.0}, trace,
                  design);
}

std::vector<FitResult> fit_all(const Trace& trace, double gamma_fixed) {
    std::vector<FitResult> fits;
    fits.reserve(5);
    fits.push_back(fit_fi(trace));
    fits.push_back(fit_ci(trace));
    fits.push_back(fit_abg(trace, gamma_fixed));
    fits.push_back(fit_three_gpp(trace));
    fits.push_back(fit_crossing(trace));
    return fits;
}

} // namespace vpl
