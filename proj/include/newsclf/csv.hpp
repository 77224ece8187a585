#pragma once

#include <string>
#include <vector>

namespace newsclf {

// One parsed CSV record plus the byte offset where it started (for error
// reporting further up the stack).
struct CsvRow {
    std::vector<std::string> fields;
    std::size_t byte_offset = 0;
};

// RFC-4180 parser: quoted fields may contain commas, doubled quotes and
// embedded newlines. Accepts LF and CRLF line endings. Throws CsvError with
// the byte offset of the offending quote on malformed input.
std::vector<CsvRow> parse_csv(const std::string& content);

std::vector<CsvRow> parse_csv_file(const std::string& path);

// Quotes a field iff it contains a comma, quote, CR or LF.
std::string csv_escape(const std::string& field);

std::string csv_join(const std::vector<std::string>& fields);

}  // namespace newsclf
