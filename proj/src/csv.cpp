#include "newsclf/csv.hpp"

#include <fstream>
#include <sstream>

#include "newsclf/errors.hpp"

namespace newsclf {

std::vector<CsvRow> parse_csv(const std::string& content) {
    std::vector<CsvRow> rows;
    std::size_t i = 0;
    const std::size_t n = content.size();

    while (i < n) {
        CsvRow row;
        row.byte_offset = i;
        std::string field;
        bool row_done = false;

        while (!row_done) {
            if (i < n && content[i] == '"') {
                const std::size_t quote_start = i;
                ++i;
                bool closed = false;
                while (i < n) {
                    char c = content[i];
                    if (c == '"') {
                        if (i + 1 < n && content[i + 1] == '"') {
                            field.push_back('"');
                            i += 2;
                        } else {
                            ++i;
                            closed = true;
                            break;
                        }
                    } else {
                        field.push_back(c);
                        ++i;
                    }
                }
                if (!closed) {
                    throw CsvError("malformed CSV: unbalanced quote starting at byte offset " +
                                   std::to_string(quote_start));
                }
                if (i < n && content[i] != ',' && content[i] != '\n' && content[i] != '\r') {
                    throw CsvError("malformed CSV: unexpected character after closing quote at byte offset " +
                                   std::to_string(i));
                }
            } else {
                while (i < n && content[i] != ',' && content[i] != '\n' && content[i] != '\r') {
                    field.push_back(content[i]);
                    ++i;
                }
            }

            if (i >= n) {
                row.fields.push_back(std::move(field));
                row_done = true;
            } else if (content[i] == ',') {
                row.fields.push_back(std::move(field));
                field.clear();
                ++i;
            } else {  // \r or \n
                row.fields.push_back(std::move(field));
                if (content[i] == '\r' && i + 1 < n && content[i + 1] == '\n') ++i;
                ++i;
                row_done = true;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CsvRow> parse_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_csv(ss.str());
}

std::string csv_escape(const std::string& field) {
    bool needs_quote = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string csv_join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(fields[i]);
    }
    return out;
}

}  // namespace newsclf
