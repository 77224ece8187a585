#include "newsclf/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "newsclf/csv.hpp"
#include "newsclf/errors.hpp"
#include "newsclf/rng.hpp"

namespace newsclf {

std::vector<std::size_t> FoldAssignment::train_indices(int held_out) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fold.size(); ++i)
        if (fold[i] != held_out) out.push_back(i);
    return out;
}

std::vector<std::size_t> FoldAssignment::test_indices(int held_out) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fold.size(); ++i)
        if (fold[i] == held_out) out.push_back(i);
    return out;
}

namespace {

std::string trim_ws(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string strip_bom(std::string s) {
    if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xEF &&
        static_cast<unsigned char>(s[1]) == 0xBB && static_cast<unsigned char>(s[2]) == 0xBF)
        return s.substr(3);
    return s;
}

bool row_is_blank(const CsvRow& row) {
    return row.fields.size() == 1 && row.fields[0].empty();
}

}  // namespace

std::vector<RawRecord> load_csv(const std::string& path) {
    auto rows = parse_csv_file(path);
    while (!rows.empty() && row_is_blank(rows.back())) rows.pop_back();
    if (rows.empty()) throw DataError("empty CSV file: " + path);

    std::unordered_map<std::string, std::size_t> col;
    const auto& header = rows.front().fields;
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::string name = trim_ws(i == 0 ? strip_bom(header[i]) : header[i]);
        col.emplace(name, i);
    }
    for (const char* required : {"id", "text", "label"}) {
        if (!col.count(required))
            throw DataError(std::string("CSV header missing required column '") + required +
                            "' in " + path);
    }

    auto get = [&](const CsvRow& row, const char* name, const std::string& fallback) {
        auto it = col.find(name);
        if (it == col.end() || it->second >= row.fields.size()) return fallback;
        return row.fields[it->second];
    };

    std::vector<RawRecord> records;
    std::unordered_set<std::uint64_t> seen_ids;
    records.reserve(rows.size() - 1);

    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (row_is_blank(rows[r])) continue;
        const std::string row_name = "data row " + std::to_string(r);

        RawRecord rec;
        std::string id_str = trim_ws(get(rows[r], "id", ""));
        try {
            std::size_t pos = 0;
            long long v = std::stoll(id_str, &pos);
            if (pos != id_str.size() || v < 0) throw std::invalid_argument(id_str);
            rec.id = static_cast<std::uint64_t>(v);
        } catch (const std::exception&) {
            throw DataError("invalid id '" + id_str + "' at " + row_name);
        }
        if (!seen_ids.insert(rec.id).second)
            throw DataError("duplicate id " + std::to_string(rec.id) + " at " + row_name);

        rec.title = get(rows[r], "title", "");
        rec.author = get(rows[r], "author", "");
        rec.text = get(rows[r], "text", "");

        std::string label_str = trim_ws(get(rows[r], "label", ""));
        if (label_str == "0") rec.label = 0;
        else if (label_str == "1") rec.label = 1;
        else throw DataError("label '" + label_str + "' outside {0,1} at " + row_name);

        records.push_back(std::move(rec));
    }
    return records;
}

void save_csv(const std::vector<RawRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << "id,title,author,text,label\n";
    for (const auto& r : records) {
        out << csv_join({std::to_string(r.id), r.title, r.author, r.text,
                         std::to_string(r.label)})
            << "\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

FoldAssignment assign_folds(const std::vector<RawRecord>& records, int k, std::uint64_t seed) {
    if (k < 2) throw ConfigError("fold count k must be >= 2, got " + std::to_string(k));

    std::vector<std::size_t> by_class[2];
    for (std::size_t i = 0; i < records.size(); ++i)
        by_class[records[i].label].push_back(i);
    for (int c = 0; c < 2; ++c) {
        if (by_class[c].size() < static_cast<std::size_t>(k))
            throw DataError("class " + std::to_string(c) + " has " +
                            std::to_string(by_class[c].size()) + " records, fewer than k=" +
                            std::to_string(k));
    }

    FoldAssignment fa;
    fa.k = k;
    fa.seed = seed;
    fa.fold.assign(records.size(), 0);

    // Shuffle within each class, then deal round-robin. The deal position
    // carries over between classes so total fold sizes also differ by <= 1.
    std::size_t deal = 0;
    for (int c = 0; c < 2; ++c) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(c)));
        rng.shuffle(by_class[c]);
        for (std::size_t idx : by_class[c]) {
            fa.fold[idx] = static_cast<int>(deal % static_cast<std::size_t>(k));
            ++deal;
        }
    }
    return fa;
}

}  // namespace newsclf
