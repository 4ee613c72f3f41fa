#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace disklab::report {

/// Tabular experiment report: config echo (meta), named columns, rows of
/// preformatted cells, and summary key/value pairs. Emission is byte-stable
/// for identical content.
struct Report {
    std::vector<std::pair<std::string, std::string>> meta;    // config echo, in order
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> summary; // verdicts, ratios

    void add_meta(const std::string& k, const std::string& v) { meta.emplace_back(k, v); }
    void add_summary(const std::string& k, const std::string& v) {
        summary.emplace_back(k, v);
    }
};

/// Fixed-precision number formatting used everywhere reports are written.
std::string format_number(double v);

/// RFC-4180 CSV ('.' decimal separator, UTF-8, CRLF); the config echo and the
/// summary are emitted as leading/trailing '#'-prefixed comment lines.
void write_csv(const Report& rep, std::ostream& os);

/// One top-level JSON object: {"meta": {...}, "rows": [...], "summary": {...}}.
void write_json(const Report& rep, std::ostream& os);

/// Dispatch on format name "csv" or "json".
void write(const Report& rep, const std::string& format, std::ostream& os);

} // namespace disklab::report
