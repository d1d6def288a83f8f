#include "vpl/trace_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace vpl {

ParseError::ParseError(const std::string& message, std::size_t line)
    : std::runtime_error(line == 0 ? message
                                   : message + " (line " +
                                         std::to_string(line) + ")"),
      line_(line) {}

std::string format_double(double value) {
    std::array<char, 32> buf;
    const auto result =
        std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), result.ptr);
}

double parse_double(std::string_view field) {
    double value = 0.0;
    const auto result =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc{} ||
        result.ptr != field.data() + field.size()) {
        throw ParseError("not a number: '" + std::string(field) + "'", 0);
    }
    return value;
}

std::string to_csv(const CrossingTrace& trace) {
    std::string out;
    out.reserve(64 * (trace.samples.size() + 1));
    out += kTraceCsvHeader;
    out += '\n';
    for (const CrossingSample& s : trace.samples) {
        out += format_double(s.time_s);
        out += ',';
        out += format_double(s.signed_distance_m);
        out += ',';
        out += format_double(s.distance_m);
        out += ',';
        out += format_double(s.pl_db);
        out += '\n';
    }
    return out;
}

namespace {

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

} // namespace

CrossingTrace parse_crossing_csv(std::string_view text, Frequency frequency,
                                 double relative_speed_mps) {
    CrossingTrace trace;
    trace.frequency = frequency;
    trace.relative_speed_mps = relative_speed_mps;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool header_seen = false;
    double prev_time = -std::numeric_limits<double>::infinity();
    double prev_signed = -std::numeric_limits<double>::infinity();

    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = strip_cr(
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                           : eol - pos));
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        if (!header_seen) {
            if (line != kTraceCsvHeader) {
                throw ParseError("expected header '" +
                                     std::string(kTraceCsvHeader) + "'",
                                 line_no);
            }
            header_seen = true;
            continue;
        }
        if (line.empty()) {
            continue;
        }

        std::array<std::string_view, 4> fields;
        std::size_t field_count = 0;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            if (field_count == fields.size()) {
                throw ParseError("expected 4 fields", line_no);
            }
            fields[field_count++] =
                line.substr(start, comma == std::string_view::npos
                                       ? std::string_view::npos
                                       : comma - start);
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (field_count != fields.size()) {
            throw ParseError("expected 4 fields", line_no);
        }

        CrossingSample sample;
        try {
            sample.time_s = parse_double(fields[0]);
            sample.signed_distance_m = parse_double(fields[1]);
            sample.distance_m = parse_double(fields[2]);
            sample.pl_db = parse_double(fields[3]);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
        if (!(sample.time_s > prev_time)) {
            throw ParseError("sample times must be strictly increasing",
                             line_no);
        }
        if (!(sample.signed_distance_m > prev_signed)) {
            throw ParseError(
                "signed distance must be strictly increasing with time",
                line_no);
        }
        if (!(sample.distance_m >= 0.0) || !std::isfinite(sample.distance_m)) {
            throw ParseError("distance_m must be >= 0", line_no);
        }
        if (!std::isfinite(sample.pl_db)) {
            throw ParseError("pl_db must be finite", line_no);
        }
        prev_time = sample.time_s;
        prev_signed = sample.signed_distance_m;
        trace.samples.push_back(sample);
    }

    if (!header_seen) {
        throw ParseError("empty file: missing header", 0);
    }
    if (trace.samples.empty()) {
        throw ParseError("no data rows", 0);
    }
    return trace;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'", 0);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof()) {
        throw ParseError("failed reading '" + path.string() + "'", 0);
    }
    return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write '" + path.string() + "'");
        }
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out.good()) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(path, ec);
            throw std::runtime_error("failed writing '" + path.string() +
                                     "'");
        }
    }
}

} // namespace vpl
