#include "report.hpp"

#include <cstdint>
#include <cstdio>
#include <vector>

#include "vpl/trace_io.hpp"
#include "vpl/version.hpp"

namespace vplcli {

namespace {

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 14695981039346656037ull;
    for (const char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string fixed(double value, int decimals = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string padded(std::string text, std::size_t width) {
    if (text.size() < width) {
        text.append(width - text.size(), ' ');
    }
    return text;
}

json family_names(const std::vector<vpl::ModelFamily>& families) {
    json names = json::array();
    for (const vpl::ModelFamily f : families) {
        names.push_back(std::string(vpl::family_name(f)));
    }
    return names;
}

} // namespace

std::string config_hash(const json& config) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(config.dump())));
    return buf;
}

json make_provenance(const json& config, const json& seed) {
    return json{{"config_hash", config_hash(config)},
                {"seed", seed},
                {"version", std::string(vpl::kVersion)}};
}

json params_json(const vpl::ModelParams& params) {
    json j;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, vpl::FiParams>) {
                j["alpha_db"] = p.alpha_db;
                j["beta"] = p.beta;
            } else if constexpr (std::is_same_v<T, vpl::CiParams>) {
                j["beta"] = p.beta;
            } else if constexpr (std::is_same_v<T, vpl::AbgParams>) {
                j["alpha"] = p.alpha;
                j["beta_db"] = p.beta_db;
                j["gamma"] = p.gamma;
            } else if constexpr (std::is_same_v<T, vpl::CrossingParams>) {
                j["eta1_db"] = p.eta1_db;
                j["eta2"] = p.eta2;
            }
            j["sigma_db"] = p.sigma_db;
        },
        params);
    return j;
}

json fit_json(const vpl::FitResult& fit) {
    return json{{"excluded_below_reference", fit.excluded_below_reference},
                {"n_samples", fit.residuals_db.size()},
                {"params", params_json(fit.params)},
                {"rmse_db", fit.rmse_db}};
}

json gof_json(const vpl::GofReport& report) {
    json scores = json::array();
    for (const vpl::ModelScore& s : report.scores) {
        scores.push_back(
            json{{"family", std::string(vpl::family_name(s.family))},
                 {"grg_mape", s.grg_mape},
                 {"pcc_mape", s.pcc_mape},
                 {"per_e", s.per_e},
                 {"rmse_db", s.rmse_db}});
    }
    return json{{"rank_by_grg_mape", family_names(report.rank_by_grg_mape)},
                {"rank_by_pcc_mape", family_names(report.rank_by_pcc_mape)},
                {"rank_by_rmse", family_names(report.rank_by_rmse)},
                {"scores", scores}};
}

vpl::CrossingParams crossing_from_report(const json& report,
                                         std::string_view direction,
                                         const std::string& source) {
    try {
        const json& p = report.at("fits")
                            .at(std::string(direction))
                            .at("crossing")
                            .at("params");
        return vpl::CrossingParams{p.at("eta1_db").get<double>(),
                                   p.at("eta2").get<double>(),
                                   p.at("sigma_db").get<double>()};
    } catch (const json::exception&) {
        throw vpl::ParseError(source + ": no crossing-model parameters for " +
                                  std::string(direction),
                              0);
    }
}

void write_json_file(const std::filesystem::path& path, const json& content) {
    vpl::write_file(path, content.dump(2) + "\n");
}

std::string param_summary(const vpl::ModelParams& params) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, vpl::FiParams>) {
                return "alpha_db=" + fixed(p.alpha_db) +
                       "  beta=" + fixed(p.beta);
            } else if constexpr (std::is_same_v<T, vpl::CiParams>) {
                return "beta=" + fixed(p.beta);
            } else if constexpr (std::is_same_v<T, vpl::AbgParams>) {
                return "alpha=" + fixed(p.alpha) +
                       "  beta_db=" + fixed(p.beta_db) +
                       "  gamma=" + fixed(p.gamma);
            } else if constexpr (std::is_same_v<T, vpl::ThreeGppParams>) {
                return "(fixed coefficients)";
            } else {
                return "eta1_db=" + fixed(p.eta1_db) +
                       "  eta2=" + fixed(p.eta2);
            }
        },
        params);
}

std::string fit_table(const vpl::Trace& trace,
                      std::span<const vpl::FitResult> fits) {
    std::string out = "direction: ";
    out += vpl::direction_name(trace.direction);
    if (!fits.empty()) {
        out += "  (" + std::to_string(fits.front().residuals_db.size()) +
               " samples fitted, " +
               std::to_string(fits.front().excluded_below_reference) +
               " below 1 m excluded)";
    }
    out += "\n";
    out += padded("model", 10) + padded("parameters", 46) +
           padded("sigma [dB]", 12) + "rmse [dB]\n";
    for (const vpl::FitResult& fit : fits) {
        out += padded(std::string(vpl::family_name(vpl::family_of(fit.params))),
                      10);
        out += padded(param_summary(fit.params), 46);
        out += padded(fixed(vpl::sigma_of(fit.params)), 12);
        out += fixed(fit.rmse_db) + "\n";
    }
    return out;
}

std::string gof_table(const vpl::GofReport& report) {
    std::string out = padded("model", 10) + padded("rmse [dB]", 12) +
                      padded("Per_e", 12) + padded("GRG-MAPE", 12) +
                      "PCC-MAPE\n";
    for (const vpl::ModelScore& s : report.scores) {
        out += padded(std::string(vpl::family_name(s.family)), 10);
        out += padded(fixed(s.rmse_db), 12);
        out += padded(fixed(s.per_e), 12);
        out += padded(fixed(s.grg_mape), 12);
        out += fixed(s.pcc_mape) + "\n";
    }
    const auto rank_line = [](const char* label,
                              const std::vector<vpl::ModelFamily>& families) {
        std::string line = label;
        for (std::size_t i = 0; i < families.size(); ++i) {
            if (i > 0) {
                line += ", ";
            }
            line += vpl::family_name(families[i]);
        }
        return line + "\n";
    };
    out += rank_line("rank by rmse    : ", report.rank_by_rmse);
    out += rank_line("rank by grg-mape: ", report.rank_by_grg_mape);
    out += rank_line("rank by pcc-mape: ", report.rank_by_pcc_mape);
    return out;
}

} // namespace vplcli
