#ifndef VPL_ESTIMATION_HPP
#define VPL_ESTIMATION_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "vpl/propagation.hpp"
#include "vpl/trace.hpp"

namespace vpl {

/// Raised when a fit is not identifiable from the given trace (too few
/// samples, or no spread in the regressor).
class FitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Outcome of fitting one model family to one trace. `params` carries the
/// estimated coefficients with sigma_db filled from the residuals;
/// `residuals_db` holds measured minus predicted, one entry per retained
/// sample, in trace order.
struct FitResult {
    ModelParams params;
    std::vector<double> residuals_db;
    double rmse_db = 0.0;
    std::size_t excluded_below_reference = 0; // samples dropped for d < 1 m
};

/// Sample standard deviation with the N-1 denominator,
///   sigma = sqrt(sum |x_i - mean|^2 / (N - 1)).
/// Requires at least two values.
double estimate_sigma_db(std::span<const double> values);

// Every fit below is ordinary least squares in the dB domain on the
// d >= 1 m samples of the trace, and estimates sigma from its residuals.
// Unless stated otherwise they need >= 2 retained samples at >= 2 distinct
// distances and throw FitError otherwise.

/// Free intercept and slope: minimizes sum (pl - alpha - 10*beta*log10(d))^2.
FitResult fit_fi(const Trace& trace);

/// Slope only, intercept pinned to FSPL(f, 1 m):
///   beta = sum (pl - FSPL) x / sum x^2  with  x = 10*log10(d).
FitResult fit_ci(const Trace& trace);

/// Standard-convention ABG with the frequency exponent pinned (single
/// frequency traces cannot identify it); the 10*gamma*log10(f) term is
/// subtracted and (alpha, beta) fitted.
FitResult fit_abg(const Trace& trace, double gamma_fixed = 2.0);

/// The 3GPP-R15 form has no free coefficients: residuals are taken against
/// the fixed curve and only sigma is estimated.
FitResult fit_three_gpp(const Trace& trace);

/// Crossing model: the 18.2*log10(f_GHz) anchor is subtracted and
/// (eta1, eta2) fitted. The regressor is log10(d), not 10*log10(d).
FitResult fit_crossing(const Trace& trace);

/// Fits all five families in declaration order: FI, CI, ABG (pinned gamma),
/// 3GPP, crossing.
std::vector<FitResult> fit_all(const Trace& trace, double gamma_fixed = 2.0);

} // namespace vpl

#endif // VPL_ESTIMATION_HPP
