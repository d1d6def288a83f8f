#include "vpl/gof.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vpl {

namespace {

void require_pair(const SeriesPair& pair, std::size_t min_len) {
    if (pair.measured.size() != pair.predicted.size()) {
        throw std::invalid_argument("series length mismatch");
    }
    if (pair.measured.size() < min_len) {
        throw std::invalid_argument("series too short");
    }
}

} // namespace

double rmse(const SeriesPair& pair) {
    require_pair(pair, 1);
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < pair.measured.size(); ++k) {
        const double e = pair.predicted[k] - pair.measured[k];
        sum_sq += e * e;
    }
    return std::sqrt(sum_sq / static_cast<double>(pair.measured.size()));
}

double mape(const SeriesPair& pair) {
    require_pair(pair, 1);
    double sum = 0.0;
    for (std::size_t k = 0; k < pair.measured.size(); ++k) {
        if (pair.measured[k] == 0.0) {
            throw std::invalid_argument(
                "MAPE undefined: measured series contains zero");
        }
        sum += std::abs(pair.predicted[k] - pair.measured[k]) /
               pair.measured[k];
    }
    return sum / static_cast<double>(pair.measured.size());
}

double rho_mape(const SeriesPair& pair) { return std::abs(1.0 - mape(pair)); }

double rho_grg(const SeriesPair& pair, double distinguishing_coeff) {
    require_pair(pair, 1);
    if (!(distinguishing_coeff > 0.0) || !(distinguishing_coeff <= 1.0)) {
        throw std::invalid_argument(
            "distinguishing coefficient must be in (0, 1]");
    }
    const std::size_t n = pair.measured.size();
    std::vector<double> delta(n);
    for (std::size_t k = 0; k < n; ++k) {
        delta[k] = std::abs(pair.measured[k] - pair.predicted[k]);
    }
    const auto [lo, hi] = std::minmax_element(delta.begin(), delta.end());
    const double delta_min = *lo;
    const double delta_max = *hi;
    if (delta_max <= kIdenticalSeriesTolDb) {
        return 1.0;
    }
    double sum = 0.0;
    for (double d : delta) {
        sum += (delta_min + distinguishing_coeff * delta_max) /
               (d + distinguishing_coeff * delta_max);
    }
    return sum / static_cast<double>(n);
}

double rho_pcc(const SeriesPair& pair) {
    require_pair(pair, 2);
    const std::size_t n = pair.measured.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        mean_x += pair.measured[k];
        mean_y += pair.predicted[k];
    }
    mean_x *= inv_n;
    mean_y *= inv_n;
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double dx = pair.measured[k] - mean_x;
        const double dy = pair.predicted[k] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw std::invalid_argument(
            "Pearson correlation undefined for a zero-variance series");
    }
    const double r = sxy / std::sqrt(sxx * syy);
    return (r + 1.0) / 2.0;
}

double grg_mape(const SeriesPair& pair, const GofWeights& weights) {
    return std::abs(weights.alpha * rho_grg(pair) +
                    weights.beta * rho_mape(pair));
}

double pcc_mape(const SeriesPair& pair, const GofWeights& weights) {
    return std::abs(weights.alpha * rho_pcc(pair) +
                    weights.beta * rho_mape(pair));
}

namespace {

// Best-first order with exact ties falling back to family declaration order.
std::vector<ModelFamily> ranking(const std::vector<ModelScore>& scores,
                                 double ModelScore::* metric, bool ascending) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double va = scores[a].*metric;
        const double vb = scores[b].*metric;
        if (va != vb) {
            return ascending ? va < vb : va > vb;
        }
        return scores[a].family < scores[b].family;
    });
    std::vector<ModelFamily> families(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        families[i] = scores[order[i]].family;
    }
    return families;
}

} // namespace

GofReport rank_models(std::span<const FitResult> fits, const Trace& trace,
                      const GofWeights& weights) {
    if (fits.empty()) {
        throw std::invalid_argument("rank_models needs at least one fit");
    }
    if (!(weights.alpha >= 0.0) || !(weights.beta >= 0.0)) {
        throw std::invalid_argument("GoF weights must be nonnegative");
    }
    validate(trace);

    std::vector<double> measured;
    std::vector<double> distances;
    for (const Sample& s : trace.samples) {
        if (s.distance_m >= kReferenceDistanceM) {
            distances.push_back(s.distance_m);
            measured.push_back(s.pl_db);
        }
    }

    GofReport report;
    report.scores.reserve(fits.size());
    std::vector<double> predicted(distances.size());
    for (const FitResult& fit : fits) {
        for (std::size_t i = 0; i < distances.size(); ++i) {
            predicted[i] =
                median_path_loss_db(fit.params, trace.frequency, distances[i]);
        }
        const SeriesPair pair{measured, predicted};
        ModelScore score;
        score.family = family_of(fit.params);
        score.rmse_db = rmse(pair);
        score.per_e = mape(pair);
        score.grg_mape = grg_mape(pair, weights);
        score.pcc_mape = pcc_mape(pair, weights);
        report.scores.push_back(score);
    }
    report.rank_by_rmse = ranking(report.scores, &ModelScore::rmse_db, true);
    report.rank_by_grg_mape =
        ranking(report.scores, &ModelScore::grg_mape, false);
    report.rank_by_pcc_mape =
        ranking(report.scores, &ModelScore::pcc_mape, false);
    return report;
}

} // namespace vpl
