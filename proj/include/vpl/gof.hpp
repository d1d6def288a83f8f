#ifndef VPL_GOF_HPP
#define VPL_GOF_HPP

#include <span>
#include <vector>

#include "vpl/estimation.hpp"
#include "vpl/trace.hpp"

namespace vpl {

/// Measured series (the reference) paired with a model's predicted series.
/// Non-owning; both spans must stay alive while a metric runs.
struct SeriesPair {
    std::span<const double> measured;
    std::span<const double> predicted;
};

/// Weights of the combined scores: alpha on the similarity term (GRG or
/// rescaled PCC), beta on the MAPE complement.
struct GofWeights {
    double alpha = 0.1;
    double beta = 0.9;
};

/// Root-mean-square error, sqrt(sum (predicted - measured)^2 / n).
double rmse(const SeriesPair& pair);

/// Mean absolute percentage error Per_e = (1/n) sum |x_i - x0| / x0.
/// Measured values must be nonzero.
double mape(const SeriesPair& pair);

/// MAPE complement |1 - Per_e|. The outer absolute value folds back
/// predictions whose mean error exceeds 200%; mape() exposes the raw value.
double rho_mape(const SeriesPair& pair);

/// Largest pointwise deviation rho_grg treats as zero. The relational
/// coefficients are scale-invariant, so without a floor sub-ulp noise from
/// upstream dB arithmetic would grade like genuine misfit.
inline constexpr double kIdenticalSeriesTolDb = 1e-9;

/// Deng's grey relational grade with distinguishing coefficient `xi` in
/// (0,1]. With pointwise deviations D(k) = |x0(k) - xi(k)|:
///   coeff(k) = (Dmin + xi*Dmax) / (D(k) + xi*Dmax),  GRG = mean coeff.
/// Series are compared in their native units, without pre-normalization.
/// Series identical up to kIdenticalSeriesTolDb give exactly 1; the result
/// is always in (0, 1].
double rho_grg(const SeriesPair& pair, double distinguishing_coeff = 0.5);

/// Pearson correlation rescaled from [-1, 1] to [0, 1] via (r + 1) / 2.
/// Both series need nonzero variance.
double rho_pcc(const SeriesPair& pair);

/// Combined scores |alpha*rho + beta*rho_mape|.
double grg_mape(const SeriesPair& pair, const GofWeights& weights = {});
double pcc_mape(const SeriesPair& pair, const GofWeights& weights = {});

/// All metrics of one fitted model family against the measured series.
struct ModelScore {
    ModelFamily family = ModelFamily::fi;
    double rmse_db = 0.0;
    double per_e = 0.0; // raw MAPE
    double grg_mape = 0.0;
    double pcc_mape = 0.0;
};

/// Per-family scores plus one ranking per metric. Rankings hold families
/// from best to worst; exact ties keep family declaration order.
struct GofReport {
    std::vector<ModelScore> scores; // in the order the fits were given
    std::vector<ModelFamily> rank_by_rmse;     // ascending RMSE
    std::vector<ModelFamily> rank_by_grg_mape; // descending GRG-MAPE
    std::vector<ModelFamily> rank_by_pcc_mape; // descending PCC-MAPE
};

/// Evaluates every fitted model's median curve at the trace's retained
/// (d >= 1 m) sample distances and scores it against the measured losses.
GofReport rank_models(std::span<const FitResult> fits, const Trace& trace,
                      const GofWeights& weights = {});

} // namespace vpl

#endif // VPL_GOF_HPP
