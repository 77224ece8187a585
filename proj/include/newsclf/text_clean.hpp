#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "newsclf/ingest.hpp"

namespace newsclf {

// Cleaned, tokenized document. Every token matches [a-z]+.
struct CleanDoc {
    std::uint64_t id = 0;
    std::vector<std::string> tokens;
    int label = 0;
};

enum class DropReason { kNonEnglish, kEmpty };

struct StopList {
    std::unordered_set<std::string> words;
    std::string source_name;

    bool contains(const std::string& w) const { return words.count(w) != 0; }
};

// One word per line, lowercase, UTF-8; '#' starts a comment line.
StopList load_stoplist(const std::string& path);
StopList make_stoplist(std::initializer_list<const char*> words, std::string name = "inline");

// Cleaning steps, applied in this order by clean_pipeline.
std::string strip_digits(const std::string& text);

// Removes ASCII punctuation except '#' and '@' (kept so social tags can be
// anchored later), deletes en dash / curly quotes / ellipsis / bullet, and
// replaces em dash with a single space.
std::string strip_punct_and_special(const std::string& text);

// Deletes every run starting at '#' or '@' up to the next whitespace.
std::string strip_social_tags(const std::string& text);

// Runs of two or more spaces become one; leading/trailing spaces trimmed.
std::string collapse_spaces(const std::string& text);

std::string ascii_lowercase(const std::string& text);

// True iff the text has at least one alphabetic character and the fraction
// of alphabetic characters that are ASCII letters is >= threshold.
bool is_english(const std::string& text, double threshold = 0.99);

std::vector<std::string> whitespace_tokenize(const std::string& text);

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopList& stoplist);

struct CleanResult {
    std::optional<CleanDoc> doc;       // set on success
    std::optional<DropReason> dropped; // set when the record was dropped
};

CleanResult clean_pipeline(const RawRecord& record, const StopList& stoplist,
                           double english_threshold = 0.99);

struct DropReport {
    std::size_t non_english = 0;
    std::size_t empty = 0;
    std::size_t kept = 0;
};

// Cleans a whole corpus preserving input order.
std::vector<CleanDoc> clean_corpus(const std::vector<RawRecord>& records,
                                   const StopList& stoplist, double english_threshold,
                                   DropReport* report = nullptr);

}  // namespace newsclf
