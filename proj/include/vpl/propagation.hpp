#ifndef VPL_PROPAGATION_HPP
#define VPL_PROPAGATION_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <variant>

namespace vpl {

inline constexpr double kSpeedOfLightMps = 299792458.0;

/// Reference distance shared by all log-distance model forms.
inline constexpr double kReferenceDistanceM = 1.0;

/// Slope of the frequency term, in dB per decade of GHz, used by the
/// 3GPP-R15 sidelink LOS form and by the crossing model derived from it.
inline constexpr double kFreqSlopeDbPerDecade = 18.2;

/// Carrier frequency with explicit unit accessors. The urban LOS forms take
/// log10 of the frequency in GHz while FSPL takes it in Hz; keeping the unit
/// behind a type avoids the classic tens-of-dB mixup.
class Frequency {
  public:
    static Frequency from_ghz(double value_ghz);
    static Frequency from_hz(double value_hz);

    double ghz() const { return ghz_; }
    double hz() const { return ghz_ * 1e9; }

  private:
    explicit Frequency(double value_ghz) : ghz_(value_ghz) {}
    double ghz_;
};

/// Floating intercept: PL(d) = alpha + 10*beta*log10(d) + X_sigma
struct FiParams {
    double alpha_db = 0.0; // floating intercept
    double beta = 0.0;     // path-loss exponent
    double sigma_db = 0.0; // shadow-fading std
};

/// Close-in: PL(f,d) = FSPL(f, 1 m) + 10*beta*log10(d) + X_sigma
/// The intercept is pinned to free-space loss at the 1 m reference.
struct CiParams {
    double beta = 0.0;
    double sigma_db = 0.0;
};

/// Alpha-beta-gamma in the standard convention:
///   PL(f,d) = 10*alpha*log10(d/1 m) + beta + 10*gamma*log10(f/1 GHz) + X_sigma
/// i.e. alpha is the distance exponent and beta the intercept in dB.
struct AbgParams {
    double alpha = 0.0;   // distance exponent
    double beta_db = 0.0; // intercept
    double gamma = 0.0;   // frequency exponent
    double sigma_db = 0.0;
};

/// 3GPP release-15 sidelink urban LOS form. All coefficients are fixed:
///   PL(f,d) = 38.77 + 16.7*log10(d) + 18.2*log10(f_GHz) + X_sigma
/// Only the shadowing std is a parameter (3 dB in the standard).
struct ThreeGppParams {
    double sigma_db = 3.0;
};

/// Crossing-cars V2V LOS model: the 3GPP frequency anchor with a free
/// constant term and a free log-distance coefficient,
///   PL(f,d) = eta1 + 18.2*log10(f_GHz) + eta2*log10(d) + X_sigma
/// Note eta2 multiplies log10(d) directly, so eta2/10 is the usual PLE.
struct CrossingParams {
    double eta1_db = 0.0;
    double eta2 = 0.0;
    double sigma_db = 0.0;
};

// Fixed coefficients of the 3GPP-R15 sidelink urban LOS form.
inline constexpr double kThreeGppInterceptDb = 38.77;
inline constexpr double kThreeGppDistSlopeDb = 16.7;

/// Uniform handle over the five model families. Variant order doubles as the
/// canonical family declaration order used for deterministic tie-breaks.
using ModelParams =
    std::variant<FiParams, CiParams, AbgParams, ThreeGppParams, CrossingParams>;

enum class ModelFamily { fi, ci, abg, three_gpp, crossing };

inline constexpr ModelFamily kAllFamilies[] = {
    ModelFamily::fi, ModelFamily::ci, ModelFamily::abg, ModelFamily::three_gpp,
    ModelFamily::crossing};

ModelFamily family_of(const ModelParams& model);
std::string_view family_name(ModelFamily family);

/// Shadow-fading std of whichever variant is active.
double sigma_of(const ModelParams& model);

/// Returns a copy of `model` with the shadowing std replaced.
ModelParams with_sigma(ModelParams model, double sigma_db);

/// Throws std::invalid_argument if the active variant violates its
/// invariants (sigma_db >= 0 and all fields finite).
void validate(const ModelParams& model);

/// Free-space path loss at the reference distance,
///   FSPL(f, d0) = 20*log10(4*pi*f_Hz / c).
/// Only the 1 m reference is accepted; other anchors are rejected rather
/// than silently rescaled.
double fspl_db(Frequency f, double d0_m = kReferenceDistanceM);

/// Median (shadowing-free) path loss of the selected model at distance
/// `distance_m` >= 1 m. Distances below the reference are rejected since the
/// log-distance forms are not valid there.
double median_path_loss_db(const ModelParams& model, Frequency f,
                           double distance_m);

/// One zero-mean Gaussian shadow-fading draw with std `sigma_db`.
/// sigma_db = 0 returns exactly 0 without consuming randomness. Draws use an
/// explicit Box-Muller transform over the caller's engine so a given seed
/// yields the same sequence on every platform.
double sample_shadowing_db(double sigma_db, std::mt19937_64& rng);

/// median_path_loss_db plus one shadow-fading draw.
double path_loss_db(const ModelParams& model, Frequency f, double distance_m,
                    std::mt19937_64& rng);

namespace detail {
/// Median path loss without the d >= 1 m guard, defined for any d > 0.
/// Used by the crossing simulator to fill in below-reference samples; those
/// are flagged by consumers and never fitted.
double median_path_loss_unchecked_db(const ModelParams& model, Frequency f,
                                     double distance_m);
} // namespace detail

/// Parameter sets measured at 59.6 GHz for crossing-car V2V passes, per
/// direction of motion and relative speed, plus the literature UMa sets for
/// the standard model forms.
namespace presets {
inline constexpr CrossingParams kMovingIn50Kmh{40.42, 10.59, 6.34};
inline constexpr CrossingParams kMovingIn70Kmh{41.51, 9.92, 5.98};
inline constexpr CrossingParams kMovingAway50Kmh{42.31, 7.99, 5.99};
inline constexpr CrossingParams kMovingAway70Kmh{42.53, 8.26, 6.13};

inline constexpr CiParams kCiUma{2.0, 4.1};
inline constexpr AbgParams kAbgUma{2.1, 31.7, 2.0, 3.9};
inline constexpr ThreeGppParams kThreeGppUrbanLos{3.0};
} // namespace presets

} // namespace vpl

#endif // VPL_PROPAGATION_HPP
