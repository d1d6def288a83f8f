#ifndef VPLCLI_REPORT_HPP
#define VPLCLI_REPORT_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "vpl/estimation.hpp"
#include "vpl/gof.hpp"
#include "vpl/trace.hpp"

namespace vplcli {

using json = nlohmann::json;

/// FNV-1a 64-bit over the canonical (sorted-key) dump of the config object,
/// rendered as 16 hex digits.
std::string config_hash(const json& config);

/// Provenance block shared by all report files: config hash, seed echo
/// (null for deterministic commands) and the artifact version.
json make_provenance(const json& config, const json& seed);

/// Family-specific parameter object, keyed by the struct field names.
json params_json(const vpl::ModelParams& params);

/// One fitted family: parameters, residual summary and exclusion count.
json fit_json(const vpl::FitResult& fit);

/// GoF scores (in fit order) plus the three rankings, best first.
json gof_json(const vpl::GofReport& report);

/// Crossing-family parameters fitted for `direction`, read back out of a
/// report written by the fit or compare commands. Throws vpl::ParseError
/// when the report carries no such fit.
vpl::CrossingParams crossing_from_report(const json& report,
                                         std::string_view direction,
                                         const std::string& source);

/// Sorted keys, 2-space indent, trailing newline; all-or-nothing write.
void write_json_file(const std::filesystem::path& path, const json& content);

/// Parameter summary without sigma, e.g. "eta1_db=41.5100  eta2=9.9200".
std::string param_summary(const vpl::ModelParams& params);

// Human-readable per-direction tables; tests consume the JSON instead.
std::string fit_table(const vpl::Trace& trace,
                      std::span<const vpl::FitResult> fits);
std::string gof_table(const vpl::GofReport& report);

} // namespace vplcli

#endif // VPLCLI_REPORT_HPP
