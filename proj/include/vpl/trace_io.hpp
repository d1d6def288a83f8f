#ifndef VPL_TRACE_IO_HPP
#define VPL_TRACE_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vpl/crossing.hpp"

namespace vpl {

/// Input file rejected; carries the offending 1-based line number
/// (0 when the failure is not tied to a line).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t line);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Crossing-trace CSV column header. One row per sample, decimal point,
/// LF terminators, numbers in shortest round-trip form.
inline constexpr std::string_view kTraceCsvHeader =
    "time_s,signed_distance_m,distance_m,pl_db";

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// Exact inverse of format_double; the whole field must be consumed.
double parse_double(std::string_view field);

std::string to_csv(const CrossingTrace& trace);

/// Parses a crossing-trace CSV. Frequency and speed are not part of the
/// schema and must be supplied by the caller.
CrossingTrace parse_crossing_csv(std::string_view text, Frequency frequency,
                                 double relative_speed_mps);

std::string read_file(const std::filesystem::path& path);

/// Writes the whole content or nothing: a partially written file is removed
/// before the error propagates.
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace vpl

#endif // VPL_TRACE_IO_HPP
